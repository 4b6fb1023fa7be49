#pragma once

#include <cstdint>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/dataset.hpp"
#include "hadacodec/renderer.hpp"

namespace hadacodec {

// Multi-bounce fidelity: for seeded (L, R1..Rb) tuples drawn with replacement
// from the test splits, compares the ground-truth radiance chain
//   S(b) = R(b) o S(b-1),  S(0) = L
// against the latent chain
//   z(b) = E(R(b)) o z(b-1),  z(0) = E(L)
// via Delta E94 between radiance-convention Lab coordinates of decode(z(b))
// and S(b). Both sides share the ground-truth chain's luminance as the Lab
// white-point Y, so the metric captures chromatic and relative-lightness
// error rather than absolute energy.
struct BounceChainResult {
  int bounce = 0;
  double mean_de94 = 0;
  double median_de94 = 0;
  double p95_de94 = 0;
  int pairs = 0;
};

std::vector<BounceChainResult> multibounce_eval(const CodecWeights& w,
                                                const Dataset& ds,
                                                int bounces = 3,
                                                int pairs = 500,
                                                std::uint64_t seed = 0);

// Render-pass accounting: a spectral renderer shades n wavelength samples
// per shading event while the latent path shades k/3 RGB passes.
double pass_count_ratio(int n, int k);

struct PassCountReport {
  double config_ratio = 0;    // n / (k/3)
  double measured_ratio = 0;  // spectral / latent shading-eval counters
  std::uint64_t spectral_evals = 0;
  std::uint64_t latent_evals = 0;
};

// Renders the scene in spectral mode and as latent multipass with the given
// codec (identical job geometry) and reports configured vs. measured ratios.
PassCountReport pass_count_report(const Scene& scene, const RenderJob& job,
                                  const CodecWeights& codec);

// Image-space colour fidelity of a test render against a ground-truth render:
// mean and 95th-percentile per-pixel Delta E76 (Lab under D65, exposure
// shared from the ground truth) plus linear-sRGB MSE.
struct SceneColorReport {
  double mean_de76 = 0;
  double p95_de76 = 0;
  double mse = 0;
  double exposure = 0;
};

SceneColorReport scene_color_report(const ChannelImage& ground_truth,
                                    const ChannelImage& test);

}  // namespace hadacodec
