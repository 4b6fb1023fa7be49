#pragma once

#include <array>

#include "hadacodec/spectrum.hpp"

namespace hadacodec {

enum class ColorSpace { XYZ, LinearRGB, Lab };

struct ColorTriple {
  ColorSpace space = ColorSpace::XYZ;
  std::array<double, 3> c{};

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const double& operator[](int i) const {
    return c[static_cast<std::size_t>(i)];
  }
};

// CIE 1931 2-degree colour matching functions and the D65 illuminant,
// resampled onto the canonical 47-sample grid, plus the D65-weighted rows
// w_X/w_Y/w_Z used for reflectance colorimetry. The weighting is normalized
// so a unit reflectance under D65 maps to Y = 100 exactly.
class CmfTable {
 public:
  static const CmfTable& instance();

  const SpectralCurve& xbar() const { return xbar_; }
  const SpectralCurve& ybar() const { return ybar_; }
  const SpectralCurve& zbar() const { return zbar_; }
  const SpectralCurve& d65() const { return d65_; }
  const SpectralCurve& wx() const { return wx_; }
  const SpectralCurve& wy() const { return wy_; }
  const SpectralCurve& wz() const { return wz_; }

  // XYZ of the perfect reflector under D65 per the bundled tables
  // (Y = 100 exactly).
  ColorTriple white_xyz() const;

 private:
  CmfTable();
  SpectralCurve xbar_, ybar_, zbar_, d65_, wx_, wy_, wz_;
};

// Radiance convention: XYZ = sum_i cmf_i * s_i * delta_lambda.
ColorTriple spectrum_to_xyz(const SpectralCurve& s);

// Reflectance convention: XYZ = sum_i w_i * r_i; unit reflectance gives
// Y = 100 exactly.
ColorTriple xyz_of_reflectance(const SpectralCurve& r);

// sRGB primaries, D65 white point (IEC 61966-2-1 matrices). Inputs scaled so
// Y = 1 maps to full white. Out-of-gamut values are not clamped.
ColorTriple xyz_to_linear_rgb(const ColorTriple& xyz);
ColorTriple linear_rgb_to_xyz(const ColorTriple& rgb);

// The white point the sRGB matrices are defined against (Y normalized to 1).
ColorTriple srgb_reference_white();

// CIE 1976 L*a*b* with explicit white point. Throws std::domain_error when
// any white component is not strictly positive.
ColorTriple xyz_to_lab(const ColorTriple& xyz, const ColorTriple& white);

// CIE 1976 colour difference (Euclidean distance in Lab).
double delta_e76(const ColorTriple& lab_a, const ColorTriple& lab_b);

// CIE 1994 colour difference, graphic-arts constants
// (kL = kC = kH = 1, K1 = 0.045, K2 = 0.015). The first argument is the
// reference colour (its chroma defines the weighting functions).
double delta_e94(const ColorTriple& lab_reference, const ColorTriple& lab_sample);

// Scalar sRGB transfer functions (linear <-> display-encoded in [0, 1]).
double srgb_encode(double linear);
double srgb_decode(double encoded);

}  // namespace hadacodec
