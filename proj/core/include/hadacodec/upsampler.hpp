#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/dataset.hpp"

namespace hadacodec {

// 3 -> hidden -> hidden -> k fully connected network with SiLU activations
// after the first two layers and an identity head. Maps linear sRGB to a
// latent code of the frozen codec, so legacy RGB assets can enter the latent
// rendering path.
struct UpsamplerWeights {
  int k = 6;
  int hidden = 128;
  std::vector<double> w1, b1;  // hidden x 3, hidden
  std::vector<double> w2, b2;  // hidden x hidden, hidden
  std::vector<double> w3, b3;  // k x hidden, k
  CodecTrainingMeta meta;
};

// Validates dimensions/finiteness; throws std::invalid_argument.
void validate(const UpsamplerWeights& w);

UpsamplerWeights init_upsampler_weights(int k, int hidden, std::uint64_t seed);

// Raw network output (may be negative; used by the training loss).
LatentCode upsample_raw(const UpsamplerWeights& w,
                        const std::array<double, 3>& linear_rgb);

// Inference path: network output with negative entries clamped to zero so the
// result is a valid latent code. When `clamped_entries` is given it is
// incremented by the number of clamped components (telemetry).
LatentCode upsample(const UpsamplerWeights& w,
                    const std::array<double, 3>& linear_rgb,
                    std::uint64_t* clamped_entries = nullptr);

// The linear-sRGB coordinate a spectrum presents to the network:
// reflectances under D65 normalized by Y_max, illuminations from the
// radiance XYZ of the unit-peak SPD normalized to unit luminance. Negative
// (out-of-gamut) components clamp to zero.
std::array<double, 3> rgb_of(const SpectralCurve& s, SpectrumKind kind);

struct UpsampleTrainConfig {
  double lr = 2e-3;
  double weight_decay = 1e-5;  // decoupled (AdamW)
  int batch_size = 64;
  double grad_clip_norm = 1.0;
  int epochs = 4500;
  // Reduce-on-plateau schedule on the epoch-mean training loss.
  double plateau_factor = 0.5;
  int plateau_patience = 200;
  double min_lr = 1e-6;
  double lambda_maxabs = 0.3;
  double lambda_color = 0.05;
  int hidden = 128;
  std::uint64_t seed = 0;
};

// One training example: rgb input and the frozen codec's code for the
// underlying reflectance.
struct UpsampleSample {
  std::array<double, 3> rgb{};
  LatentCode target;
};

struct UpsampleLossBreakdown {
  double latent_mse = 0;
  double latent_maxabs = 0;
  double color = 0;  // mean Delta E76 of decoded colours
  double total = 0;
};

// L = MSE(z, z_gt) + lambda_maxabs * E[max_i |z_i - z_gt_i|]
//     + lambda_color * E[DeltaE76(Lab(decode(z)), Lab(decode(z_gt)))]
// evaluated on raw (unclamped) network outputs; decoding inside the loss is
// the plain linear map.
UpsampleLossBreakdown upsample_loss(const UpsamplerWeights& w,
                                    const EffectiveWeights& codec,
                                    const std::vector<UpsampleSample>& batch,
                                    const UpsampleTrainConfig& cfg);

struct UpsamplerGradients {
  std::vector<double> w1, b1, w2, b2, w3, b3;
};

UpsamplerGradients upsample_gradients(const UpsamplerWeights& w,
                                      const EffectiveWeights& codec,
                                      const std::vector<UpsampleSample>& batch,
                                      const UpsampleTrainConfig& cfg);

struct UpsampleEpochLog {
  int epoch = 0;
  double latent_mse = 0, latent_maxabs = 0, color = 0, total = 0;
  double lr = 0;
};

struct UpsampleReport {
  std::vector<UpsampleEpochLog> epochs;
  double first_total = 0, final_total = 0;
  std::uint64_t train_samples = 0;
};

// AdamW with global-norm gradient clipping and the plateau schedule above;
// the codec stays frozen throughout. Deterministic for a fixed seed. Trains
// on the reflectance training split.
std::pair<UpsamplerWeights, UpsampleReport> train_upsampler(
    const Dataset& ds, const CodecWeights& codec,
    const UpsampleTrainConfig& cfg);

}  // namespace hadacodec
