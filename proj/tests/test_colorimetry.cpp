#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/rng.hpp"
#include "hadacodec/spectrum.hpp"

using namespace hadacodec;

// Expected values in this file were computed with an independent Python
// reference implementation of the same resampling and colorimetry math,
// operating directly on the published 1 nm observer tables and the 5 nm
// illuminant table, then frozen here.

TEST_CASE("resampled observer / illuminant anchors") {
  const CmfTable& t = CmfTable::instance();
  const double rel = 1e-12;
  CHECK(t.xbar()[0] == doctest::Approx(0.000329388).epsilon(rel));
  CHECK(t.ybar()[0] == doctest::Approx(9.839844e-06).epsilon(rel));
  CHECK(t.zbar()[0] == doctest::Approx(0.001543579).epsilon(rel));
  CHECK(t.d65()[0] == doctest::Approx(50.99894).epsilon(rel));

  CHECK(t.xbar()[10] == doctest::Approx(0.213365591304348).epsilon(rel));
  CHECK(t.ybar()[10] == doctest::Approx(0.0852172347826086).epsilon(rel));
  CHECK(t.zbar()[10] == doctest::Approx(1.36764350869565).epsilon(rel));
  CHECK(t.d65()[10] == doctest::Approx(115.322739130435).epsilon(rel));

  CHECK(t.xbar()[20] == doctest::Approx(0.743341791304347).epsilon(rel));
  CHECK(t.ybar()[20] == doctest::Approx(0.958881234782609).epsilon(rel));
  CHECK(t.zbar()[20] == doctest::Approx(0.00221148695652174).epsilon(rel));
  CHECK(t.d65()[20] == doctest::Approx(96.7485947826087).epsilon(rel));

  CHECK(t.xbar()[33] == doctest::Approx(0.0117944).epsilon(rel));
  CHECK(t.ybar()[33] == doctest::Approx(0.00425917282608696).epsilon(rel));
  CHECK(t.zbar()[33] == 0.0);
  CHECK(t.d65()[33] == doctest::Approx(71.5023982608696).epsilon(rel));

  CHECK(t.xbar()[46] == doctest::Approx(1.251141e-06).epsilon(rel));
  CHECK(t.ybar()[46] == doctest::Approx(4.5181e-07).epsilon(rel));
  CHECK(t.zbar()[46] == 0.0);
  CHECK(t.d65()[46] == doctest::Approx(60.3125).epsilon(rel));
}

TEST_CASE("white point of the weighted reflectance rows") {
  const CmfTable& t = CmfTable::instance();
  const ColorTriple w = t.white_xyz();
  CHECK(w[0] == doctest::Approx(95.0336706697708).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(108.840268471133).epsilon(1e-12));

  // Chromaticity sanity: close to the canonical daylight white (2e-3 slack
  // covers the coarse canonical grid).
  const double s = w[0] + w[1] + w[2];
  CHECK(std::abs(w[0] / s - 0.3127) < 2e-3);
  CHECK(std::abs(w[1] / s - 0.3290) < 2e-3);

  // Unit reflectance maps to the white point by construction.
  const ColorTriple u = xyz_of_reflectance(SpectralCurve::ones());
  CHECK(u[0] == doctest::Approx(w[0]).epsilon(1e-14));
  CHECK(u[1] == doctest::Approx(100.0).epsilon(1e-13));
  CHECK(u[2] == doctest::Approx(w[2]).epsilon(1e-14));
}

TEST_CASE("radiance-convention XYZ integration") {
  const ColorTriple f = spectrum_to_xyz(SpectralCurve::ones());
  CHECK(f[0] == doctest::Approx(106.852687015155).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(106.858452950433).epsilon(1e-12));
  CHECK(f[2] == doctest::Approx(106.836643798253).epsilon(1e-12));

  const ColorTriple g = spectrum_to_xyz(gaussian_curve(550.0, 30.0, 1.0));
  CHECK(g[0] == doctest::Approx(35.3704669186095).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(61.4890107679978).epsilon(1e-12));
  CHECK(g[2] == doctest::Approx(4.30631021729115).epsilon(1e-12));

  // Linearity of the integral.
  const ColorTriple g2 = spectrum_to_xyz(gaussian_curve(550.0, 30.0, 2.0));
  CHECK(g2[1] == doctest::Approx(2.0 * g[1]).epsilon(1e-13));
}

TEST_CASE("reflectance-convention XYZ") {
  const ColorTriple r = xyz_of_reflectance(gaussian_curve(600.0, 50.0, 1.0));
  CHECK(r[0] == doctest::Approx(64.1563531896398).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(61.258103160808).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(3.44423524889406).epsilon(1e-12));
}

TEST_CASE("Lab conversion") {
  const CmfTable& t = CmfTable::instance();
  const ColorTriple r = xyz_of_reflectance(gaussian_curve(600.0, 50.0, 1.0));
  const ColorTriple lab = xyz_to_lab(r, t.white_xyz());
  CHECK(lab[0] == doctest::Approx(82.517300745014).epsilon(1e-10));
  CHECK(lab[1] == doctest::Approx(13.9787807476437).epsilon(1e-10));
  CHECK(lab[2] == doctest::Approx(106.597141866498).epsilon(1e-10));

  // White maps to L=100, a=b=0.
  const ColorTriple labw = xyz_to_lab(t.white_xyz(), t.white_xyz());
  CHECK(labw[0] == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(std::abs(labw[1]) < 1e-10);
  CHECK(std::abs(labw[2]) < 1e-10);

  // Linear branch for near-black values.
  ColorTriple tiny;
  tiny.c = {0.0004, 0.0004, 0.0004};
  const ColorTriple labt = xyz_to_lab(tiny, srgb_reference_white());
  CHECK(labt[0] == doctest::Approx(0.361318518518519).epsilon(1e-12));
  CHECK(labt[1] == doctest::Approx(0.0811581521656529).epsilon(1e-10));
  CHECK(labt[2] == doctest::Approx(0.050823177171827).epsilon(1e-10));

  // Negative XYZ components (possible for out-of-gamut render output) stay
  // finite through the linear branch.
  ColorTriple neg;
  neg.c = {-0.01, 0.02, -0.005};
  const ColorTriple labn = xyz_to_lab(neg, srgb_reference_white());
  CHECK(std::isfinite(labn[0]));
  CHECK(std::isfinite(labn[1]));
  CHECK(std::isfinite(labn[2]));

  ColorTriple badwhite;
  badwhite.c = {1.0, 0.0, 1.0};
  CHECK_THROWS_AS(xyz_to_lab(r, badwhite), std::domain_error);
}

TEST_CASE("colour differences") {
  ColorTriple a, b;
  a.space = b.space = ColorSpace::Lab;
  a.c = {50.0, 20.0, -10.0};
  b.c = {52.5, 18.0, -14.0};
  CHECK(delta_e76(a, b) == doctest::Approx(5.1234753829798).epsilon(1e-12));
  CHECK(delta_e94(a, b) == doctest::Approx(4.17178535518796).epsilon(1e-12));
  // Asymmetric: the first argument's chroma sets the weights.
  CHECK(delta_e94(b, a) == doctest::Approx(4.15850734389281).epsilon(1e-12));

  CHECK(delta_e76(a, a) == 0.0);
  CHECK(delta_e94(a, a) == 0.0);

  // Pure chroma difference along one axis: dh^2 clamps to zero and the
  // result is |dC| / SC.
  ColorTriple c, d;
  c.c = {50.0, 10.0, 0.0};
  d.c = {50.0, 20.0, 0.0};
  CHECK(delta_e94(c, d) ==
        doctest::Approx(10.0 / (1.0 + 0.045 * 10.0)).epsilon(1e-12));

  // Weighting denominators are >= 1, so the 1994 distance never exceeds the
  // 1976 one.
  Rng rng = Rng::stream(7, "test.de94.property");
  for (int it = 0; it < 200; ++it) {
    ColorTriple p, q;
    p.c = {rng.uniform(0, 100), rng.uniform(-80, 80), rng.uniform(-80, 80)};
    q.c = {rng.uniform(0, 100), rng.uniform(-80, 80), rng.uniform(-80, 80)};
    CHECK(delta_e94(p, q) <= delta_e76(p, q) + 1e-12);
  }
}

TEST_CASE("sRGB matrices") {
  // The defining white point maps to unit RGB (published 7-digit matrices,
  // so ~1e-7 residual).
  const ColorTriple rgbw = xyz_to_linear_rgb(srgb_reference_white());
  CHECK(rgbw[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rgbw[1] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rgbw[2] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rgbw.space == ColorSpace::LinearRGB);

  // Forward/backward matrices invert each other to ~2e-7.
  Rng rng = Rng::stream(11, "test.srgb.roundtrip");
  for (int it = 0; it < 50; ++it) {
    ColorTriple rgb;
    rgb.space = ColorSpace::LinearRGB;
    rgb.c = {rng.uniform(), rng.uniform(), rng.uniform()};
    const ColorTriple back = xyz_to_linear_rgb(linear_rgb_to_xyz(rgb));
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(back[i] - rgb[i]) < 1e-5);
    }
  }

  // Green primary carries most luminance; row 2 of RGB->XYZ is the luma row.
  ColorTriple green;
  green.space = ColorSpace::LinearRGB;
  green.c = {0.0, 1.0, 0.0};
  CHECK(linear_rgb_to_xyz(green)[1] == doctest::Approx(0.7151522));
}

TEST_CASE("sRGB transfer functions") {
  CHECK(srgb_encode(0.0) == 0.0);
  CHECK(srgb_encode(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(srgb_encode(0.0031308) ==
        doctest::Approx(0.040449935999999999).epsilon(1e-15));
  CHECK(srgb_encode(0.5) == doctest::Approx(0.735356983052449).epsilon(1e-13));
  CHECK(srgb_decode(0.5) == doctest::Approx(0.214041140482233).epsilon(1e-13));
  CHECK(srgb_decode(0.0) == 0.0);

  for (double x : {0.001, 0.002, 0.01, 0.2, 0.5, 0.9, 1.0}) {
    CHECK(srgb_decode(srgb_encode(x)) == doctest::Approx(x).epsilon(1e-12));
  }
}
