#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hadacodec/spectrum.hpp"

using namespace hadacodec;

TEST_CASE("canonical grid anchors") {
  CHECK(kSampleCount == 47);
  CHECK(wavelength_at(0) == 368.0);
  CHECK(wavelength_at(46) == 830.0);
  // step = 462/46 nm
  CHECK(kLambdaStep == doctest::Approx(10.043478260869565).epsilon(1e-15));
  CHECK(wavelength_at(4) == doctest::Approx(408.173913043478).epsilon(1e-12));
  CHECK(wavelength_at(33) == doctest::Approx(699.434782608696).epsilon(1e-12));
  // i = 23 lands on an exactly representable wavelength (368 + 231 = 599).
  CHECK(wavelength_at(23) == 599.0);
}

TEST_CASE("flat / zero / ones / max / sum") {
  const SpectralCurve f = SpectralCurve::flat(0.25);
  for (int i = 0; i < kSampleCount; ++i) CHECK(f[i] == 0.25);
  CHECK(SpectralCurve::zero().sum() == 0.0);
  CHECK(SpectralCurve::ones().sum() == doctest::Approx(47.0));
  SpectralCurve g = SpectralCurve::flat(0.5);
  g[12] = 3.0;
  CHECK(g.max_value() == 3.0);
  CHECK(g.sum() == doctest::Approx(0.5 * 46 + 3.0));
}

TEST_CASE("curve validity") {
  SpectralCurve s = SpectralCurve::flat(0.5);
  CHECK(curve_is_valid(s));
  CHECK(curve_is_valid(s, /*reflectance=*/true));

  s[5] = -1e-12;
  CHECK_FALSE(curve_is_valid(s));
  s[5] = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(curve_is_valid(s));
  s[5] = std::numeric_limits<double>::infinity();
  CHECK_FALSE(curve_is_valid(s));

  s[5] = 1.5;  // legal radiance, illegal reflectance
  CHECK(curve_is_valid(s));
  CHECK_FALSE(curve_is_valid(s, /*reflectance=*/true));
}

TEST_CASE("scale is componentwise and rejects bad factors") {
  SpectralCurve s;
  for (int i = 0; i < kSampleCount; ++i) s[i] = 0.1 * i;
  const SpectralCurve t = scale(s, 2.5);
  for (int i = 0; i < kSampleCount; ++i) {
    CHECK(t[i] == doctest::Approx(2.5 * 0.1 * i).epsilon(1e-15));
  }
  CHECK(scale(s, 0.0).sum() == 0.0);
  CHECK_THROWS_AS(scale(s, -1.0), std::domain_error);
  CHECK_THROWS_AS(scale(s, std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
  CHECK_THROWS_AS(scale(s, std::numeric_limits<double>::infinity()),
                  std::domain_error);
}

TEST_CASE("add and hadamard are componentwise") {
  SpectralCurve a, b;
  for (int i = 0; i < kSampleCount; ++i) {
    a[i] = 1.0 + 0.01 * i;
    b[i] = 2.0 - 0.02 * i;
  }
  const SpectralCurve s = add(a, b);
  const SpectralCurve h = hadamard(a, b);
  for (int i = 0; i < kSampleCount; ++i) {
    CHECK(s[i] == a[i] + b[i]);  // exact: single fp addition
    CHECK(h[i] == a[i] * b[i]);  // exact: single fp multiply
  }
}

TEST_CASE("active band zeroing keeps exactly indices 4..33") {
  SpectralCurve s = SpectralCurve::ones();
  zero_outside_active_band(s);
  for (int i = 0; i < kSampleCount; ++i) {
    const bool inside = (i >= 4 && i <= 33);
    CHECK(s[i] == (inside ? 1.0 : 0.0));
  }
  CHECK(s.sum() == doctest::Approx(30.0));
}

TEST_CASE("resample interpolates linearly and clamps at the ends") {
  const std::vector<double> wl = {400.0, 500.0, 600.0};
  const std::vector<double> vals = {2.0, 1.0, 3.0};
  const SpectralCurve s = resample(wl, vals, /*zero_outside=*/false);

  // Clamping below/above the source grid.
  CHECK(s[0] == 2.0);   // 368 nm < 400 nm
  CHECK(s[3] == 2.0);   // 398.13 nm < 400 nm
  CHECK(s[46] == 3.0);  // 830 nm > 600 nm

  // Interior linear interpolation, checked against hand-computed values.
  CHECK(s[10] == doctest::Approx(1.3156521739130436).epsilon(1e-14));
  CHECK(s[23] == doctest::Approx(2.98).epsilon(1e-14));  // lambda = 599 nm

  // With band zeroing, out-of-band samples vanish even where the source
  // had energy.
  const SpectralCurve z = resample(wl, vals, /*zero_outside=*/true);
  CHECK(z[0] == 0.0);
  CHECK(z[3] == 0.0);
  CHECK(z[46] == 0.0);
  CHECK(z[10] == s[10]);
}

TEST_CASE("resample single-point source is a constant") {
  const SpectralCurve s =
      resample({550.0}, {0.75}, /*zero_outside=*/false);
  for (int i = 0; i < kSampleCount; ++i) CHECK(s[i] == 0.75);
}

TEST_CASE("resample rejects malformed sources") {
  CHECK_THROWS_AS(resample({}, {}, false), std::invalid_argument);
  CHECK_THROWS_AS(resample({400.0, 400.0}, {1.0, 2.0}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(resample({500.0, 400.0}, {1.0, 2.0}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(resample({400.0, 500.0}, {1.0}, false),
                  std::invalid_argument);
}

TEST_CASE("gaussian curve matches its closed form") {
  const double c = 550.0, sg = 30.0, amp = 0.8;
  const SpectralCurve g = gaussian_curve(c, sg, amp);
  for (int i = 0; i < kSampleCount; ++i) {
    const double lam = wavelength_at(i);
    const double expect =
        amp * std::exp(-(lam - c) * (lam - c) / (2.0 * sg * sg));
    CHECK(g[i] == doctest::Approx(expect).epsilon(1e-13));
  }
  CHECK(g.max_value() <= amp);
}
