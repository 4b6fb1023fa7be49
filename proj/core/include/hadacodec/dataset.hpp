#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadacodec/spectrum.hpp"

namespace hadacodec {

enum class SpectrumKind { reflectance, illumination };
enum class Split { train, val, test };
enum class Origin {
  munsell,
  optimal,
  smooth_saturated,
  broadband_synth,
  narrowband_synth,
  daylight_synth,
  flipped,
};

struct LabeledSpectrum {
  std::string id;
  SpectrumKind kind = SpectrumKind::reflectance;
  SpectralCurve curve;
  Split split = Split::train;
  Origin origin = Origin::munsell;
};

const char* to_string(SpectrumKind k);
const char* to_string(Split s);
const char* to_string(Origin o);
Split split_from_string(const std::string& s);
Origin origin_from_string(const std::string& s);

struct SplitConfig {
  int angular_bins = 180;  // 180 for reflectances, 36 for illuminations
  double train_fraction = 0.70;
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Box- and equality-constrained least squares:
//   minimize ||A x - t||^2  subject to  c . x = y0,  lo <= x <= hi
// solved by accelerated projected gradient descent; the projection onto the
// box/hyperplane intersection is exact (bisection on the shift multiplier).
struct BoxedLsProblem {
  int rows = 0;
  int vars = 0;
  std::vector<double> a;  // rows x vars, row-major
  std::vector<double> t;  // rows
  std::vector<double> c;  // vars
  double y0 = 0.0;
  std::vector<double> lo, hi;  // vars
};

struct BoxedLsResult {
  std::vector<double> x;
  double kkt_residual = 0.0;  // inf-norm of x - proj(x - grad)
  double eq_residual = 0.0;   // |c . x - y0|
  int iterations = 0;
  bool converged = false;
};

BoxedLsResult solve_boxed_least_squares(const BoxedLsProblem& p,
                                        double tol = 1e-8,
                                        int max_iterations = 200000);

// ---------------------------------------------------------------------------
// Synthetic reflectances.

// Colour targets: 12 hue directions (sRGB primaries, secondaries and six
// intermediates) mixed toward the D65 white chromaticity by saturation s,
// each solved for the maximally target-matching reflectance at luminance
// Y0 under the box/equality constrained program above. Targets whose equality
// constraint is unsatisfiable are skipped with a warning to stderr.
std::vector<LabeledSpectrum> gen_optimal_reflectances(double s_min = 0.6,
                                                      double s_max = 0.98,
                                                      double y0 = 30.0);

// Smooth saturated reflectances: 24 hues x 6 saturations in [0.7, 0.98];
// same constrained program solved over non-negative weights of 8 Gaussian
// bases (centers uniform on [400, 700] nm, sigma 40 nm); results clipped to
// [0, 1] and re-validated.
std::vector<LabeledSpectrum> gen_smooth_saturated(double s_min = 0.7,
                                                  double s_max = 0.98,
                                                  double y0 = 30.0);

// Smooth low-order-Fourier stand-in for a measured reflectance library; lets
// the full pipeline run with zero downloads. 64 curves.
std::vector<LabeledSpectrum> gen_munsell_standin(std::uint64_t seed);

// Loads measured reflectances from a spectra CSV (arbitrary source grid in
// the header row), resamples to the canonical grid, zeroes outside
// [400, 700] nm, clamps to [0, 1]. An empty file yields an empty list and a
// warning to stderr.
std::vector<LabeledSpectrum> load_munsell(const std::string& path);

// ---------------------------------------------------------------------------
// Synthetic illuminations. All unit-peak normalized and zeroed outside
// [400, 700] nm.

// 82 blackbody curves with CCT log-spaced on [2000, 12000] K, a 13-CCT
// daylight-model series on [4000, 10000] K, and 367 narrowband Gaussians
// (single peaks with sigma in {5, 10, 20} nm plus peak pairs).
std::vector<LabeledSpectrum> gen_illuminants_synthetic();

// Loads measured lamp SPDs (drop-in for a measured lamp database; same CSV
// reader as load_munsell, unit-peak normalized).
std::vector<LabeledSpectrum> load_lamp_spds(const std::string& path);

// Blackbody SPD at temperature kelvin on the canonical grid, zeroed outside
// the active band, unit peak.
SpectralCurve blackbody_curve(double kelvin);

// CIE daylight-model SPD for a correlated colour temperature in
// [4000, 25000] K, same normalization.
SpectralCurve daylight_curve(double cct);

// Vertical flips (max - value) of broadband curves, re-zeroed outside the
// active band and unit-peak renormalized; all-zero results are dropped.
std::vector<LabeledSpectrum> flip_augment(
    const std::vector<LabeledSpectrum>& broadband);

// Greedy cosine-similarity deduplication in input order: a curve is kept iff
// its cosine similarity to every previously kept curve is < tau.
std::vector<LabeledSpectrum> cosine_dedup(
    const std::vector<LabeledSpectrum>& in, double tau = 0.95);

// ---------------------------------------------------------------------------
// Ring-sector split in the a*b* chromaticity plane: bins by hue angle around
// the dataset median, then by radial terciles within each sector, and
// assigns train/test per cell at the configured fraction (cells with fewer
// than 2 members go to train). Call separately per spectrum kind.
void ring_sector_split(std::vector<LabeledSpectrum>& items,
                       const SplitConfig& cfg);

// ---------------------------------------------------------------------------
// Full dataset assembly.

struct Dataset {
  std::vector<LabeledSpectrum> reflectance;
  std::vector<LabeledSpectrum> illumination;

  std::vector<const SpectralCurve*> pool(SpectrumKind kind, Split split) const;
};

struct DatasetBuildOptions {
  std::uint64_t seed = 0;
  std::optional<std::string> munsell_path;   // measured reflectances (CSV)
  std::optional<std::string> lamp_spd_path;  // measured lamp SPDs (CSV)
};

struct DatasetBuildStats {
  int reflectance_total = 0;
  int illumination_candidates = 0;
  int illumination_kept = 0;  // after dedup
  int reflectance_train = 0, reflectance_test = 0;
  int illumination_train = 0, illumination_test = 0;
};

// Generates (or loads), dedups, and splits both spectrum kinds.
Dataset build_dataset(const DatasetBuildOptions& opts,
                      DatasetBuildStats* stats = nullptr);

}  // namespace hadacodec
