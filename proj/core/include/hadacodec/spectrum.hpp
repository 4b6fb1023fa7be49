#pragma once

#include <array>
#include <vector>

namespace hadacodec {

// Canonical wavelength grid: 47 equally spaced samples spanning [368, 830] nm
// inclusive of both endpoints. All spectra in the system live on this grid.
inline constexpr int kSampleCount = 47;
inline constexpr double kLambdaMin = 368.0;
inline constexpr double kLambdaMax = 830.0;
inline constexpr double kLambdaStep =
    (kLambdaMax - kLambdaMin) / (kSampleCount - 1);

// Dataset-sourced curves carry energy only inside this band; samples at grid
// wavelengths outside it are zeroed at ingestion.
inline constexpr double kActiveBandMin = 400.0;
inline constexpr double kActiveBandMax = 700.0;

constexpr double wavelength_at(int i) { return kLambdaMin + kLambdaStep * i; }

// A spectrum sampled on the canonical grid. Components are non-negative and
// finite; reflectances additionally lie in [0, 1].
struct SpectralCurve {
  std::array<double, kSampleCount> v{};

  double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const double& operator[](int i) const {
    return v[static_cast<std::size_t>(i)];
  }

  static SpectralCurve flat(double value);
  static SpectralCurve zero() { return SpectralCurve{}; }
  static SpectralCurve ones() { return flat(1.0); }

  double max_value() const;
  double sum() const;
};

// True iff every sample is finite and >= 0 (and <= 1 when `reflectance`).
bool curve_is_valid(const SpectralCurve& s, bool reflectance = false);

// Scalar scaling. alpha < 0 or non-finite raises std::domain_error.
SpectralCurve scale(const SpectralCurve& s, double alpha);

// Component-wise sum.
SpectralCurve add(const SpectralCurve& a, const SpectralCurve& b);

// Component-wise (Hadamard) product; models reflection of a radiance
// spectrum by a reflectance spectrum.
SpectralCurve hadamard(const SpectralCurve& a, const SpectralCurve& b);

// Linearly resamples a measured curve from an arbitrary source grid
// (strictly increasing wavelengths, nm) onto the canonical grid.
// Extrapolation clamps to the nearest endpoint value. When
// `zero_outside_active_band` is set, grid samples outside [400, 700] nm are
// zeroed (dataset ingestion convention). Throws std::invalid_argument on an
// empty or non-increasing source grid or a size mismatch.
SpectralCurve resample(const std::vector<double>& source_wavelengths,
                       const std::vector<double>& source_values,
                       bool zero_outside_active_band);

// Applies the dataset ingestion convention in place.
void zero_outside_active_band(SpectralCurve& s);

// Evaluates a Gaussian bump exp(-(lambda-center)^2 / (2 sigma^2)) * amplitude
// sampled on the canonical grid. Building block for synthetic data.
SpectralCurve gaussian_curve(double center_nm, double sigma_nm,
                             double amplitude);

}  // namespace hadacodec
