#include "hadacodec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hadacodec {

SpectralCurve SpectralCurve::flat(double value) {
  SpectralCurve s;
  s.v.fill(value);
  return s;
}

double SpectralCurve::max_value() const {
  return *std::max_element(v.begin(), v.end());
}

double SpectralCurve::sum() const {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

bool curve_is_valid(const SpectralCurve& s, bool reflectance) {
  for (double x : s.v) {
    if (!std::isfinite(x) || x < 0.0) return false;
    if (reflectance && x > 1.0) return false;
  }
  return true;
}

SpectralCurve scale(const SpectralCurve& s, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw std::domain_error("scale: alpha must be finite and non-negative");
  }
  SpectralCurve out;
  for (int i = 0; i < kSampleCount; ++i) out[i] = alpha * s[i];
  return out;
}

SpectralCurve add(const SpectralCurve& a, const SpectralCurve& b) {
  SpectralCurve out;
  for (int i = 0; i < kSampleCount; ++i) out[i] = a[i] + b[i];
  return out;
}

SpectralCurve hadamard(const SpectralCurve& a, const SpectralCurve& b) {
  SpectralCurve out;
  for (int i = 0; i < kSampleCount; ++i) out[i] = a[i] * b[i];
  return out;
}

SpectralCurve resample(const std::vector<double>& source_wavelengths,
                       const std::vector<double>& source_values,
                       bool zero_outside) {
  const std::size_t m = source_wavelengths.size();
  if (m == 0) throw std::invalid_argument("resample: empty source grid");
  if (source_values.size() != m) {
    throw std::invalid_argument("resample: grid/value size mismatch");
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (!(source_wavelengths[i] > source_wavelengths[i - 1])) {
      throw std::invalid_argument(
          "resample: source grid must be strictly increasing");
    }
  }
  SpectralCurve out;
  for (int i = 0; i < kSampleCount; ++i) {
    const double lambda = wavelength_at(i);
    if (lambda <= source_wavelengths.front()) {
      out[i] = source_values.front();
    } else if (lambda >= source_wavelengths.back()) {
      out[i] = source_values.back();
    } else {
      const auto it = std::upper_bound(source_wavelengths.begin(),
                                       source_wavelengths.end(), lambda);
      const std::size_t hi = static_cast<std::size_t>(
          std::distance(source_wavelengths.begin(), it));
      const std::size_t lo = hi - 1;
      const double t = (lambda - source_wavelengths[lo]) /
                       (source_wavelengths[hi] - source_wavelengths[lo]);
      out[i] = source_values[lo] + t * (source_values[hi] - source_values[lo]);
    }
  }
  if (zero_outside) zero_outside_active_band(out);
  return out;
}

void zero_outside_active_band(SpectralCurve& s) {
  for (int i = 0; i < kSampleCount; ++i) {
    const double lambda = wavelength_at(i);
    if (lambda < kActiveBandMin || lambda > kActiveBandMax) s[i] = 0.0;
  }
}

SpectralCurve gaussian_curve(double center_nm, double sigma_nm,
                             double amplitude) {
  SpectralCurve out;
  for (int i = 0; i < kSampleCount; ++i) {
    const double d = (wavelength_at(i) - center_nm) / sigma_nm;
    out[i] = amplitude * std::exp(-0.5 * d * d);
  }
  return out;
}

}  // namespace hadacodec
