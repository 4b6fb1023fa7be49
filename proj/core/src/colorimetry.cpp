#include "hadacodec/colorimetry.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectral_tables.hpp"

namespace hadacodec {

namespace {

SpectralCurve resample_table(const double* values, int count,
                             double lambda_min, double step) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  std::vector<double> vals(values, values + count);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = lambda_min + step * i;
  return resample(grid, vals, /*zero_outside=*/false);
}

// IEC 61966-2-1 sRGB <-> XYZ (D65), Y normalized to 1.
constexpr double kXyzToRgb[9] = {
    3.2404542, -1.5371385, -0.4985314,  //
    -0.9692660, 1.8760108, 0.0415560,   //
    0.0556434, -0.2040259, 1.0572252,
};
constexpr double kRgbToXyz[9] = {
    0.4124564, 0.3575761, 0.1804375,  //
    0.2126729, 0.7151522, 0.0721750,  //
    0.0193339, 0.1191920, 0.9503041,
};

ColorTriple apply3x3(const double m[9], const ColorTriple& in,
                     ColorSpace out_space) {
  ColorTriple out;
  out.space = out_space;
  for (int r = 0; r < 3; ++r) {
    out[r] = m[3 * r + 0] * in[0] + m[3 * r + 1] * in[1] + m[3 * r + 2] * in[2];
  }
  return out;
}

}  // namespace

CmfTable::CmfTable() {
  using namespace tables;
  xbar_ = resample_table(kCieX, kCieSamples, kCieLambdaMin, kCieLambdaStep);
  ybar_ = resample_table(kCieY, kCieSamples, kCieLambdaMin, kCieLambdaStep);
  zbar_ = resample_table(kCieZ, kCieSamples, kCieLambdaMin, kCieLambdaStep);
  d65_ = resample_table(kD65, kD65Samples, kD65LambdaMin, kD65LambdaStep);
  // D65-weighted reflectance rows, normalized so unit reflectance has
  // Y = 100 exactly.
  double norm = 0.0;
  for (int i = 0; i < kSampleCount; ++i) norm += ybar_[i] * d65_[i];
  const double scale = 100.0 / norm;
  for (int i = 0; i < kSampleCount; ++i) {
    wx_[i] = scale * xbar_[i] * d65_[i];
    wy_[i] = scale * ybar_[i] * d65_[i];
    wz_[i] = scale * zbar_[i] * d65_[i];
  }
}

const CmfTable& CmfTable::instance() {
  static const CmfTable table;
  return table;
}

ColorTriple CmfTable::white_xyz() const {
  ColorTriple w;
  w.space = ColorSpace::XYZ;
  w.c = {wx_.sum(), wy_.sum(), wz_.sum()};
  return w;
}

ColorTriple spectrum_to_xyz(const SpectralCurve& s) {
  const CmfTable& t = CmfTable::instance();
  ColorTriple out;
  out.space = ColorSpace::XYZ;
  double x = 0, y = 0, z = 0;
  for (int i = 0; i < kSampleCount; ++i) {
    x += t.xbar()[i] * s[i];
    y += t.ybar()[i] * s[i];
    z += t.zbar()[i] * s[i];
  }
  out.c = {x * kLambdaStep, y * kLambdaStep, z * kLambdaStep};
  return out;
}

ColorTriple xyz_of_reflectance(const SpectralCurve& r) {
  const CmfTable& t = CmfTable::instance();
  ColorTriple out;
  out.space = ColorSpace::XYZ;
  double x = 0, y = 0, z = 0;
  for (int i = 0; i < kSampleCount; ++i) {
    x += t.wx()[i] * r[i];
    y += t.wy()[i] * r[i];
    z += t.wz()[i] * r[i];
  }
  out.c = {x, y, z};
  return out;
}

ColorTriple xyz_to_linear_rgb(const ColorTriple& xyz) {
  return apply3x3(kXyzToRgb, xyz, ColorSpace::LinearRGB);
}

ColorTriple linear_rgb_to_xyz(const ColorTriple& rgb) {
  return apply3x3(kRgbToXyz, rgb, ColorSpace::XYZ);
}

ColorTriple srgb_reference_white() {
  ColorTriple w;
  w.space = ColorSpace::XYZ;
  w.c = {0.95047, 1.0, 1.08883};
  return w;
}

ColorTriple xyz_to_lab(const ColorTriple& xyz, const ColorTriple& white) {
  for (int i = 0; i < 3; ++i) {
    if (!(white[i] > 0.0)) {
      throw std::domain_error("xyz_to_lab: white point must be positive");
    }
  }
  constexpr double delta = 6.0 / 29.0;
  constexpr double delta3 = delta * delta * delta;
  const auto f = [&](double t) {
    return t > delta3 ? std::cbrt(t) : t / (3.0 * delta * delta) + 4.0 / 29.0;
  };
  const double fx = f(xyz[0] / white[0]);
  const double fy = f(xyz[1] / white[1]);
  const double fz = f(xyz[2] / white[2]);
  ColorTriple lab;
  lab.space = ColorSpace::Lab;
  lab.c = {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
  return lab;
}

double delta_e76(const ColorTriple& a, const ColorTriple& b) {
  const double dl = a[0] - b[0];
  const double da = a[1] - b[1];
  const double db = a[2] - b[2];
  return std::sqrt(dl * dl + da * da + db * db);
}

double delta_e94(const ColorTriple& ref, const ColorTriple& sample) {
  // Graphic-arts constants: kL = kC = kH = 1, K1 = 0.045, K2 = 0.015.
  const double dl = ref[0] - sample[0];
  const double c1 = std::hypot(ref[1], ref[2]);
  const double c2 = std::hypot(sample[1], sample[2]);
  const double dc = c1 - c2;
  const double da = ref[1] - sample[1];
  const double db = ref[2] - sample[2];
  const double dh2 = std::max(0.0, da * da + db * db - dc * dc);
  const double sc = 1.0 + 0.045 * c1;
  const double sh = 1.0 + 0.015 * c1;
  return std::sqrt(dl * dl + (dc / sc) * (dc / sc) + dh2 / (sh * sh));
}

double srgb_encode(double linear) {
  if (linear <= 0.0031308) return 12.92 * linear;
  return 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
}

double srgb_decode(double encoded) {
  if (encoded <= 0.04045) return encoded / 12.92;
  return std::pow((encoded + 0.055) / 1.055, 2.4);
}

}  // namespace hadacodec
