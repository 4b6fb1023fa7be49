#include "hadacodec/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/evaluation.hpp"
#include "hadacodec/rng.hpp"

namespace hadacodec {

namespace {

constexpr double kCosEps = 1e-12;

// Per-pair forward state shared by the losses and their gradients.
struct PairForward {
  std::vector<double> zr, zl, zp, zc;  // codes: E(R), E(L), E(R) o E(L), E(RoL)
  SpectralCurve s;                     // R o L
  SpectralCurve s_hat;                 // D(zp)
  SpectralCurve rec_r, rec_l;          // D(E(R)), D(E(L))
};

void matvec_enc(const EffectiveWeights& w, const SpectralCurve& s,
                std::vector<double>* out) {
  out->assign(static_cast<std::size_t>(w.k), 0.0);
  for (int r = 0; r < w.k; ++r) {
    const double* row = &w.enc[static_cast<std::size_t>(r) * w.n];
    double acc = 0.0;
    for (int i = 0; i < w.n; ++i) acc += row[i] * s[i];
    (*out)[static_cast<std::size_t>(r)] = acc;
  }
}

void matvec_dec(const EffectiveWeights& w, const std::vector<double>& z,
                SpectralCurve* out) {
  for (int i = 0; i < w.n; ++i) {
    const double* row = &w.dec[static_cast<std::size_t>(i) * w.k];
    double acc = 0.0;
    for (int r = 0; r < w.k; ++r) acc += row[r] * z[static_cast<std::size_t>(r)];
    (*out)[i] = acc;
  }
}

PairForward forward_pair(const EffectiveWeights& w, const SpectralCurve& r,
                         const SpectralCurve& l) {
  PairForward f;
  matvec_enc(w, r, &f.zr);
  matvec_enc(w, l, &f.zl);
  f.zp.resize(f.zr.size());
  for (std::size_t i = 0; i < f.zp.size(); ++i) f.zp[i] = f.zr[i] * f.zl[i];
  f.s = hadamard(r, l);
  matvec_enc(w, f.s, &f.zc);
  matvec_dec(w, f.zp, &f.s_hat);
  matvec_dec(w, f.zr, &f.rec_r);
  matvec_dec(w, f.zl, &f.rec_l);
  return f;
}

double mse_n(const SpectralCurve& a, const SpectralCurve& b) {
  double acc = 0.0;
  for (int i = 0; i < kSampleCount; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / kSampleCount;
}

double norm2(const SpectralCurve& a) {
  double acc = 0.0;
  for (int i = 0; i < kSampleCount; ++i) acc += a[i] * a[i];
  return std::sqrt(acc);
}

double dot_n(const SpectralCurve& a, const SpectralCurve& b) {
  double acc = 0.0;
  for (int i = 0; i < kSampleCount; ++i) acc += a[i] * b[i];
  return acc;
}

// cos with epsilon-guarded norms; exactly 0 when either vector is zero.
double cosine(const SpectralCurve& a, const SpectralCurve& b) {
  return dot_n(a, b) / ((norm2(a) + kCosEps) * (norm2(b) + kCosEps));
}

// XYZ residual accumulation for the colour loss: rows of T are the colour
// matching functions scaled by the grid step (radiance convention).
void cmf_rows(const SpectralCurve** rows) {
  const CmfTable& t = CmfTable::instance();
  rows[0] = &t.xbar();
  rows[1] = &t.ybar();
  rows[2] = &t.zbar();
}

void check_batch(const Batch& b) {
  if (b.refl.size() != b.illum.size()) {
    throw std::invalid_argument("batch: reflectance/illumination size mismatch");
  }
  if (b.refl.empty()) throw std::invalid_argument("batch: empty");
}

}  // namespace

double loss_e2e(const CodecWeights& w, const Batch& b) {
  check_batch(b);
  const EffectiveWeights e = effective_weights(w);
  double acc = 0.0;
  for (int j = 0; j < b.size(); ++j) {
    const PairForward f = forward_pair(e, b.refl[static_cast<std::size_t>(j)],
                                       b.illum[static_cast<std::size_t>(j)]);
    acc += mse_n(f.s_hat, f.s) * (2.0 - cosine(f.s_hat, f.s));
  }
  return acc / b.size();
}

double loss_rec(const CodecWeights& w, const Batch& b) {
  check_batch(b);
  const EffectiveWeights e = effective_weights(w);
  double acc = 0.0;
  for (int j = 0; j < b.size(); ++j) {
    const PairForward f = forward_pair(e, b.refl[static_cast<std::size_t>(j)],
                                       b.illum[static_cast<std::size_t>(j)]);
    acc += mse_n(f.rec_r, b.refl[static_cast<std::size_t>(j)]) +
           mse_n(f.rec_l, b.illum[static_cast<std::size_t>(j)]);
  }
  return acc / b.size();
}

double loss_code(const CodecWeights& w, const Batch& b) {
  check_batch(b);
  const EffectiveWeights e = effective_weights(w);
  double acc = 0.0;
  for (int j = 0; j < b.size(); ++j) {
    const PairForward f = forward_pair(e, b.refl[static_cast<std::size_t>(j)],
                                       b.illum[static_cast<std::size_t>(j)]);
    double s = 0.0;
    for (int i = 0; i < w.k; ++i) {
      const double d = f.zp[static_cast<std::size_t>(i)] -
                       f.zc[static_cast<std::size_t>(i)];
      s += d * d;
    }
    acc += s / w.k;
  }
  return acc / b.size();
}

double loss_col(const CodecWeights& w, const Batch& b) {
  check_batch(b);
  const EffectiveWeights e = effective_weights(w);
  const SpectralCurve* t[3];
  cmf_rows(t);
  double acc = 0.0;
  for (int j = 0; j < b.size(); ++j) {
    const PairForward f = forward_pair(e, b.refl[static_cast<std::size_t>(j)],
                                       b.illum[static_cast<std::size_t>(j)]);
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
      double d = 0.0;
      for (int i = 0; i < kSampleCount; ++i) {
        d += (*t[c])[i] * (f.s_hat[i] - f.s[i]);
      }
      d *= kLambdaStep;
      s += d * d;
    }
    acc += s / 3.0;
  }
  return acc / b.size();
}

double loss_alg(const CodecWeights& w) {
  const EffectiveWeights e = effective_weights(w);
  const int k = w.k, n = w.n;
  double off = 0.0, idem = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      double s = 0.0;
      for (int a = 0; a < n; ++a) {
        const double p = e.dec[static_cast<std::size_t>(a) * k + i] *
                         e.dec[static_cast<std::size_t>(a) * k + j];
        s += p * p;
      }
      off += s;
    }
  }
  for (int i = 0; i < k; ++i) {
    double s = 0.0;
    for (int a = 0; a < n; ++a) {
      const double bi = e.dec[static_cast<std::size_t>(a) * k + i];
      const double d = bi * bi - bi;
      s += d * d;
    }
    idem += s;
  }
  const double off_terms = k > 1 ? static_cast<double>(k) * (k - 1) : 1.0;
  return off / off_terms + idem / k;
}

LossBreakdown compute_losses(const CodecWeights& w, const Batch& b,
                             const LossWeights& lw) {
  LossBreakdown out;
  out.e2e = loss_e2e(w, b);
  out.rec = loss_rec(w, b);
  out.code = loss_code(w, b);
  out.col = loss_col(w, b);
  out.alg = loss_alg(w);
  out.total = lw.e2e * out.e2e + lw.rec * out.rec + lw.code * out.code +
              lw.col * out.col + lw.alg * out.alg;
  return out;
}

double total_loss(const CodecWeights& w, const Batch& b,
                  const LossWeights& lw) {
  return compute_losses(w, b, lw).total;
}

Gradients gradients(const CodecWeights& w, const Batch& b,
                    const LossWeights& lw) {
  check_batch(b);
  const EffectiveWeights e = effective_weights(w);
  const int k = w.k, n = w.n;
  const int m = b.size();
  const SpectralCurve* t[3];
  cmf_rows(t);

  // Gradients with respect to the effective (post-softplus) weights.
  std::vector<double> g_enc(static_cast<std::size_t>(k) * n, 0.0);
  std::vector<double> g_dec(static_cast<std::size_t>(k) * n, 0.0);

  std::vector<double> g_zr(static_cast<std::size_t>(k));
  std::vector<double> g_zl(static_cast<std::size_t>(k));
  std::vector<double> g_zp(static_cast<std::size_t>(k));
  SpectralCurve g_shat;

  for (int j = 0; j < m; ++j) {
    const SpectralCurve& r = b.refl[static_cast<std::size_t>(j)];
    const SpectralCurve& l = b.illum[static_cast<std::size_t>(j)];
    const PairForward f = forward_pair(e, r, l);
    std::fill(g_zr.begin(), g_zr.end(), 0.0);
    std::fill(g_zl.begin(), g_zl.end(), 0.0);
    std::fill(g_zp.begin(), g_zp.end(), 0.0);
    g_shat = SpectralCurve{};

    // --- e2e: mse * (2 - cos) -------------------------------------------
    if (lw.e2e != 0.0) {
      const double mse = mse_n(f.s_hat, f.s);
      const double a = norm2(f.s_hat);
      const double bb = norm2(f.s);
      const double dot = dot_n(f.s_hat, f.s);
      const double u = 1.0 / ((a + kCosEps) * (bb + kCosEps));
      const double cos = dot * u;
      const double w_pair = lw.e2e / m;
      for (int i = 0; i < n; ++i) {
        double g = (2.0 - cos) * (2.0 / n) * (f.s_hat[i] - f.s[i]);
        double dcos = f.s[i] * u;
        if (a > 0.0) {
          dcos -= dot * f.s_hat[i] /
                  (a * (a + kCosEps) * (a + kCosEps) * (bb + kCosEps));
        }
        g -= mse * dcos;
        g_shat[i] += w_pair * g;
      }
    }

    // --- col: (1/3) || T (s_hat - s) ||^2 --------------------------------
    if (lw.col != 0.0) {
      const double w_pair = lw.col / m;
      for (int c = 0; c < 3; ++c) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) d += (*t[c])[i] * (f.s_hat[i] - f.s[i]);
        d *= kLambdaStep;
        const double coef = w_pair * (2.0 / 3.0) * d * kLambdaStep;
        for (int i = 0; i < n; ++i) g_shat[i] += coef * (*t[c])[i];
      }
    }

    // Backprop s_hat = W_dec zp.
    for (int i = 0; i < n; ++i) {
      const double gs = g_shat[i];
      if (gs == 0.0) continue;
      double* drow = &g_dec[static_cast<std::size_t>(i) * k];
      const double* wrow = &e.dec[static_cast<std::size_t>(i) * k];
      for (int c = 0; c < k; ++c) {
        drow[c] += gs * f.zp[static_cast<std::size_t>(c)];
        g_zp[static_cast<std::size_t>(c)] += wrow[c] * gs;
      }
    }

    // --- code: (1/k) || zp - zc ||^2 -------------------------------------
    if (lw.code != 0.0) {
      const double w_pair = lw.code / m;
      for (int c = 0; c < k; ++c) {
        const double gc = w_pair * (2.0 / k) *
                          (f.zp[static_cast<std::size_t>(c)] -
                           f.zc[static_cast<std::size_t>(c)]);
        g_zp[static_cast<std::size_t>(c)] += gc;
        // minus branch through zc = W_enc (r o l)
        double* erow = &g_enc[static_cast<std::size_t>(c) * n];
        for (int i = 0; i < n; ++i) erow[i] -= gc * f.s[i];
      }
    }

    // zp = zr o zl
    for (int c = 0; c < k; ++c) {
      g_zr[static_cast<std::size_t>(c)] +=
          g_zp[static_cast<std::size_t>(c)] * f.zl[static_cast<std::size_t>(c)];
      g_zl[static_cast<std::size_t>(c)] +=
          g_zp[static_cast<std::size_t>(c)] * f.zr[static_cast<std::size_t>(c)];
    }

    // --- rec: reconstruction of both inputs ------------------------------
    if (lw.rec != 0.0) {
      const double w_pair = lw.rec / m;
      for (int i = 0; i < n; ++i) {
        const double gr = w_pair * (2.0 / n) * (f.rec_r[i] - r[i]);
        const double gl = w_pair * (2.0 / n) * (f.rec_l[i] - l[i]);
        double* drow = &g_dec[static_cast<std::size_t>(i) * k];
        const double* wrow = &e.dec[static_cast<std::size_t>(i) * k];
        for (int c = 0; c < k; ++c) {
          drow[c] += gr * f.zr[static_cast<std::size_t>(c)] +
                     gl * f.zl[static_cast<std::size_t>(c)];
          g_zr[static_cast<std::size_t>(c)] += wrow[c] * gr;
          g_zl[static_cast<std::size_t>(c)] += wrow[c] * gl;
        }
      }
    }

    // Encoder rows from accumulated code gradients.
    for (int c = 0; c < k; ++c) {
      const double gr = g_zr[static_cast<std::size_t>(c)];
      const double gl = g_zl[static_cast<std::size_t>(c)];
      if (gr == 0.0 && gl == 0.0) continue;
      double* erow = &g_enc[static_cast<std::size_t>(c) * n];
      for (int i = 0; i < n; ++i) erow[i] += gr * r[i] + gl * l[i];
    }
  }

  // --- alg: decoder-column regularizer (batch independent) ----------------
  if (lw.alg != 0.0) {
    const double off_terms = k > 1 ? static_cast<double>(k) * (k - 1) : 1.0;
    for (int a = 0; a < n; ++a) {
      const double* wrow = &e.dec[static_cast<std::size_t>(a) * k];
      double* drow = &g_dec[static_cast<std::size_t>(a) * k];
      for (int i = 0; i < k; ++i) {
        double g = 0.0;
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          // d/d b_i of (b_i b_j)^2, counted for ordered pairs (i,j) and (j,i).
          g += 4.0 * wrow[i] * wrow[j] * wrow[j] / off_terms;
        }
        const double bi = wrow[i];
        g += 2.0 * (bi * bi - bi) * (2.0 * bi - 1.0) / k;
        drow[i] += lw.alg * g;
      }
    }
  }

  // Chain through the softplus reparameterization.
  Gradients out;
  out.raw_enc.resize(g_enc.size());
  out.raw_dec.resize(g_dec.size());
  for (std::size_t i = 0; i < g_enc.size(); ++i) {
    out.raw_enc[i] = g_enc[i] * softplus_derivative(w.raw_enc[i], w.beta);
  }
  for (std::size_t i = 0; i < g_dec.size(); ++i) {
    out.raw_dec[i] = g_dec[i] * softplus_derivative(w.raw_dec[i], w.beta);
  }
  return out;
}

CodecWeights init_codec_weights(int k, std::uint64_t seed) {
  CodecWeights w;
  w.k = k;
  w.n = kSampleCount;
  w.beta = 10.0;
  w.raw_enc.resize(static_cast<std::size_t>(k) * kSampleCount);
  w.raw_dec.resize(static_cast<std::size_t>(k) * kSampleCount);
  Rng enc_rng = Rng::stream(seed, "codec.init.enc");
  Rng dec_rng = Rng::stream(seed, "codec.init.dec");
  const double enc_scale = 1.0 / std::sqrt(static_cast<double>(kSampleCount));
  const double dec_scale = 1.0 / std::sqrt(static_cast<double>(k));
  for (auto& x : w.raw_enc) x = enc_rng.uniform(-0.5, 0.5) * enc_scale;
  for (auto& x : w.raw_dec) x = dec_rng.uniform(-0.5, 0.5) * dec_scale;
  w.meta.seed = seed;
  return w;
}

namespace {

struct AdamState {
  std::vector<double> m, v;
  explicit AdamState(std::size_t size) : m(size, 0.0), v(size, 0.0) {}
};

void adam_step(std::vector<double>* params, const std::vector<double>& grad,
               AdamState* st, double lr, long step) {
  constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(step));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(step));
  for (std::size_t i = 0; i < params->size(); ++i) {
    st->m[i] = b1 * st->m[i] + (1.0 - b1) * grad[i];
    st->v[i] = b2 * st->v[i] + (1.0 - b2) * grad[i] * grad[i];
    const double mh = st->m[i] / c1;
    const double vh = st->v[i] / c2;
    (*params)[i] -= lr * mh / (std::sqrt(vh) + eps);
  }
}

std::vector<const SpectralCurve*> take_indices(
    const std::vector<const SpectralCurve*>& pool,
    const std::vector<std::size_t>& idx, std::size_t begin, std::size_t end) {
  std::vector<const SpectralCurve*> out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) out.push_back(pool[idx[i]]);
  return out;
}

}  // namespace

std::pair<CodecWeights, TrainReport> train_codec(const Dataset& ds, int k,
                                                 const TrainConfig& cfg,
                                                 const LossWeights& lw) {
  auto refl_all = ds.pool(SpectrumKind::reflectance, Split::train);
  auto illum_all = ds.pool(SpectrumKind::illumination, Split::train);
  if (refl_all.empty() || illum_all.empty()) {
    throw std::invalid_argument("train_codec: empty training pools");
  }

  // Hold out the validation subset (drawn once per run from the training
  // split with the run seed) from the batch-sampling pools.
  const auto hold_out = [&](std::vector<const SpectralCurve*>& pool,
                            const char* purpose) {
    Rng rng = Rng::stream(cfg.seed, purpose);
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i) {
      std::swap(idx[i - 1], idx[rng.index(static_cast<std::uint32_t>(i))]);
    }
    const std::size_t n_val =
        static_cast<std::size_t>(cfg.val_fraction * pool.size());
    std::vector<const SpectralCurve*> val = take_indices(pool, idx, 0, n_val);
    pool = take_indices(pool, idx, n_val, idx.size());
    return val;
  };
  std::vector<const SpectralCurve*> refl_train = refl_all;
  std::vector<const SpectralCurve*> illum_train = illum_all;
  const auto refl_val = hold_out(refl_train, "codec.valsplit.refl");
  const auto illum_val = hold_out(illum_train, "codec.valsplit.illum");
  const bool has_val = !refl_val.empty() && !illum_val.empty();

  // Fixed validation pairing, unaugmented.
  Batch val_batch;
  if (has_val) {
    Rng vr = Rng::stream(cfg.seed, "codec.valpairs");
    const int val_pairs = 256;
    for (int i = 0; i < val_pairs; ++i) {
      val_batch.refl.push_back(
          *refl_val[vr.index(static_cast<std::uint32_t>(refl_val.size()))]);
      val_batch.illum.push_back(
          *illum_val[vr.index(static_cast<std::uint32_t>(illum_val.size()))]);
    }
  }

  const std::size_t max_pool = std::max(refl_train.size(), illum_train.size());
  const int steps =
      cfg.steps_per_epoch > 0
          ? cfg.steps_per_epoch
          : static_cast<int>((max_pool + cfg.batch_size - 1) / cfg.batch_size) *
                8;

  CodecWeights w = init_codec_weights(k, cfg.seed);
  AdamState enc_state(w.raw_enc.size());
  AdamState dec_state(w.raw_dec.size());

  TrainReport report;
  report.steps_per_epoch = steps;
  report.train_refl = static_cast<int>(refl_train.size());
  report.train_illum = static_cast<int>(illum_train.size());
  report.val_refl = static_cast<int>(refl_val.size());
  report.val_illum = static_cast<int>(illum_val.size());

  CodecWeights best = w;
  double best_val = std::numeric_limits<double>::infinity();
  int best_epoch = -1;
  int stale_epochs = 0;
  long adam_t = 0;

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    char purpose[64];
    std::snprintf(purpose, sizeof purpose, "codec.pairs.e%d", epoch);
    Rng rng = Rng::stream(cfg.seed, purpose);

    LossBreakdown epoch_sum;
    for (int step = 0; step < steps; ++step) {
      Batch batch;
      batch.refl.reserve(static_cast<std::size_t>(cfg.batch_size));
      batch.illum.reserve(static_cast<std::size_t>(cfg.batch_size));
      for (int i = 0; i < cfg.batch_size; ++i) {
        const auto& r = *refl_train[rng.index(
            static_cast<std::uint32_t>(refl_train.size()))];
        const auto& l = *illum_train[rng.index(
            static_cast<std::uint32_t>(illum_train.size()))];
        const double s = rng.log_uniform(cfg.illum_scale_min,
                                         cfg.illum_scale_max);
        batch.refl.push_back(r);
        batch.illum.push_back(scale(l, s));
      }
      const LossBreakdown lb = compute_losses(w, batch, lw);
      if (!std::isfinite(lb.total)) {
        throw std::runtime_error("train_codec: non-finite loss at epoch " +
                                 std::to_string(epoch));
      }
      epoch_sum.e2e += lb.e2e;
      epoch_sum.rec += lb.rec;
      epoch_sum.code += lb.code;
      epoch_sum.col += lb.col;
      epoch_sum.alg += lb.alg;
      epoch_sum.total += lb.total;

      const Gradients g = gradients(w, batch, lw);
      ++adam_t;
      adam_step(&w.raw_enc, g.raw_enc, &enc_state, cfg.lr, adam_t);
      adam_step(&w.raw_dec, g.raw_dec, &dec_state, cfg.lr, adam_t);
    }

    EpochLog log;
    log.epoch = epoch;
    log.e2e = epoch_sum.e2e / steps;
    log.rec = epoch_sum.rec / steps;
    log.code = epoch_sum.code / steps;
    log.col = epoch_sum.col / steps;
    log.alg = epoch_sum.alg / steps;
    log.train_total = epoch_sum.total / steps;
    log.val_total =
        has_val ? total_loss(w, val_batch, lw) : log.train_total;
    report.epochs.push_back(log);

    if (log.val_total < best_val) {
      best_val = log.val_total;
      best = w;
      best_epoch = epoch;
      stale_epochs = 0;
    } else if (++stale_epochs >= cfg.patience) {
      break;
    }
  }

  if (best_epoch < 0) best = w;  // max_epochs == 0
  report.best_epoch = best_epoch;
  report.best_val = best_epoch >= 0 ? best_val : 0.0;

  best.meta.seed = cfg.seed;
  best.meta.lambda_weights = {lw.e2e, lw.rec, lw.code, lw.col, lw.alg};
  best.meta.epochs = static_cast<int>(report.epochs.size());
  return {best, report};
}

std::vector<GridSearchEntry> grid_search(const Dataset& ds,
                                         const std::vector<LossWeights>& grid,
                                         const TrainConfig& cfg,
                                         const GridSearchOptions& opts) {
  std::vector<GridSearchEntry> entries;
  entries.reserve(grid.size());
  for (std::size_t v = 0; v < grid.size(); ++v) {
    GridSearchEntry e;
    e.variant = static_cast<int>(v);
    e.lw = grid[v];
    auto [w, report] = train_codec(ds, opts.k, cfg, grid[v]);
    (void)report;
    const auto bounces =
        multibounce_eval(w, ds, opts.bounces, opts.eval_pairs, opts.eval_seed);
    double mean = 0.0;
    for (const auto& b : bounces) {
      if (b.bounce == 1) e.de94_b1 = b.mean_de94;
      if (b.bounce == 2) e.de94_b2 = b.mean_de94;
      if (b.bounce == 3) e.de94_b3 = b.mean_de94;
      mean += b.mean_de94;
    }
    e.de94_mean = bounces.empty() ? 0.0 : mean / bounces.size();
    entries.push_back(e);
  }
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return entries[a].de94_mean < entries[b].de94_mean;
  });
  std::vector<GridSearchEntry> sorted;
  sorted.reserve(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    GridSearchEntry e = entries[order[i]];
    e.rank = static_cast<int>(i) + 1;
    sorted.push_back(e);
  }
  return sorted;
}

std::vector<LossWeights> default_weight_grid() {
  std::vector<LossWeights> grid;
  for (double rec = 0.0; rec <= 3.0 + 1e-9; rec += 0.5) {
    for (double e2e = 0.0; e2e <= 2.0 + 1e-9; e2e += 0.5) {
      for (double code = 0.0; code <= 1.0 + 1e-9; code += 0.25) {
        for (double col = 0.0; col <= 1.0 + 1e-9; col += 0.25) {
          LossWeights lw;
          lw.e2e = e2e;
          lw.rec = rec;
          lw.code = code;
          lw.col = col;
          lw.alg = 0.0;
          grid.push_back(lw);
        }
      }
    }
  }
  return grid;
}

}  // namespace hadacodec
