#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/dataset.hpp"

namespace hadacodec {

struct LossWeights {
  double e2e = 0.5;
  double rec = 0.75;
  double code = 1.0;
  double col = 0.5;
  double alg = 0.0;
};

struct TrainConfig {
  double lr = 1e-3;
  int batch_size = 128;
  int max_epochs = 150;
  int patience = 15;  // early stopping on validation total loss
  double val_fraction = 0.10;
  // Log-uniform illumination scale augmentation range.
  double illum_scale_min = 0.5;
  double illum_scale_max = 2.0;
  // Batches per epoch; 0 derives it from pool sizes:
  // ceil(max(pool sizes) / batch_size) * 8 (random pairing has no natural
  // epoch length, so one epoch revisits each pool several times).
  int steps_per_epoch = 0;
  std::uint64_t seed = 0;
};

// A batch of (reflectance, illumination) pairs, paired by index.
struct Batch {
  std::vector<SpectralCurve> refl;
  std::vector<SpectralCurve> illum;

  int size() const { return static_cast<int>(refl.size()); }
};

// Loss terms (all MSE terms use per-component means):
//  e2e : MSE(D(E(R) o E(L)), R o L) * (2 - cos), cosine per sample
//  rec : MSE(D(E(R)), R) + MSE(D(E(L)), L)
//  code: MSE(E(R) o E(L), E(R o L))
//  col : MSE over XYZ triples of decoded vs. true product radiance
// Parameters enter through the softplus reparameterization.
double loss_e2e(const CodecWeights& w, const Batch& b);
double loss_rec(const CodecWeights& w, const Batch& b);
double loss_code(const CodecWeights& w, const Batch& b);
double loss_col(const CodecWeights& w, const Batch& b);
// Soft algebraic regularizer on decoder columns: pairwise orthogonality under
// the Hadamard product plus idempotence, each normalized by term count
// (norms are plain sums of squares).
double loss_alg(const CodecWeights& w);

struct LossBreakdown {
  double e2e = 0, rec = 0, code = 0, col = 0, alg = 0;
  double total = 0;
};

LossBreakdown compute_losses(const CodecWeights& w, const Batch& b,
                             const LossWeights& lw);
double total_loss(const CodecWeights& w, const Batch& b,
                  const LossWeights& lw);

// Analytic gradient of the weighted total loss with respect to the raw
// (pre-softplus) parameters.
struct Gradients {
  std::vector<double> raw_enc;  // k x n
  std::vector<double> raw_dec;  // n x k
};

Gradients gradients(const CodecWeights& w, const Batch& b,
                    const LossWeights& lw);

// Spec-fixed initialization: raw entries uniform on [-0.5, 0.5] scaled by
// 1/sqrt(n) (encoder) and 1/sqrt(k) (decoder), drawn from named streams of
// `seed`.
CodecWeights init_codec_weights(int k, std::uint64_t seed);

struct EpochLog {
  int epoch = 0;
  double e2e = 0, rec = 0, code = 0, col = 0, alg = 0;
  double train_total = 0;
  double val_total = 0;
};

struct TrainReport {
  std::vector<EpochLog> epochs;
  int best_epoch = -1;
  double best_val = 0.0;
  int steps_per_epoch = 0;
  int train_refl = 0, train_illum = 0, val_refl = 0, val_illum = 0;
};

// From-scratch Adam (beta1 0.9, beta2 0.999, eps 1e-8) over the raw
// parameters; early stopping returns the weights with the best validation
// loss. Bit-for-bit deterministic for a fixed seed (single-threaded,
// fixed-order reductions). Throws std::invalid_argument on an empty dataset
// and std::runtime_error if the loss becomes non-finite.
std::pair<CodecWeights, TrainReport> train_codec(const Dataset& ds, int k,
                                                 const TrainConfig& cfg,
                                                 const LossWeights& lw);

// ---------------------------------------------------------------------------
// Grid search over loss-weight combinations; each variant is trained and then
// scored by mean multi-bounce Delta E94 on the test split.
struct GridSearchEntry {
  int variant = 0;
  LossWeights lw;
  double de94_b1 = 0, de94_b2 = 0, de94_b3 = 0;
  double de94_mean = 0;
  int rank = 0;
};

struct GridSearchOptions {
  int k = 6;
  int eval_pairs = 500;
  int bounces = 3;
  std::uint64_t eval_seed = 0;
};

std::vector<GridSearchEntry> grid_search(const Dataset& ds,
                                         const std::vector<LossWeights>& grid,
                                         const TrainConfig& cfg,
                                         const GridSearchOptions& opts);

// The default weight grid used when none is given on the command line
// (cartesian product of the standard sweep lists).
std::vector<LossWeights> default_weight_grid();

}  // namespace hadacodec
