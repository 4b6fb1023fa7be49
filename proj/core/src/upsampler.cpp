#include "hadacodec/upsampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/rng.hpp"

namespace hadacodec {

namespace {

double silu(double x) {
  const double s = 1.0 / (1.0 + std::exp(-x));
  return x * s;
}

double silu_derivative(double x) {
  const double s = 1.0 / (1.0 + std::exp(-x));
  return s * (1.0 + x * (1.0 - s));
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("upsampler: ") + what);
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Forward pass with retained pre-activations for backprop.
struct Activations {
  std::vector<double> h1_pre, h1, h2_pre, h2, z;
};

void forward(const UpsamplerWeights& w, const std::array<double, 3>& rgb,
             Activations* act) {
  const int h = w.hidden, k = w.k;
  act->h1_pre.assign(static_cast<std::size_t>(h), 0.0);
  act->h1.resize(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) {
    double acc = w.b1[static_cast<std::size_t>(i)];
    for (int j = 0; j < 3; ++j) {
      acc += w.w1[static_cast<std::size_t>(i) * 3 + j] *
             rgb[static_cast<std::size_t>(j)];
    }
    act->h1_pre[static_cast<std::size_t>(i)] = acc;
    act->h1[static_cast<std::size_t>(i)] = silu(acc);
  }
  act->h2_pre.assign(static_cast<std::size_t>(h), 0.0);
  act->h2.resize(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) {
    double acc = w.b2[static_cast<std::size_t>(i)];
    const double* row = &w.w2[static_cast<std::size_t>(i) * h];
    for (int j = 0; j < h; ++j) acc += row[j] * act->h1[static_cast<std::size_t>(j)];
    act->h2_pre[static_cast<std::size_t>(i)] = acc;
    act->h2[static_cast<std::size_t>(i)] = silu(acc);
  }
  act->z.assign(static_cast<std::size_t>(k), 0.0);
  for (int i = 0; i < k; ++i) {
    double acc = w.b3[static_cast<std::size_t>(i)];
    const double* row = &w.w3[static_cast<std::size_t>(i) * h];
    for (int j = 0; j < h; ++j) acc += row[j] * act->h2[static_cast<std::size_t>(j)];
    act->z[static_cast<std::size_t>(i)] = acc;
  }
}

// Plain linear decode (no sign check) used inside the training loss where raw
// outputs may be negative.
std::vector<double> decode_unchecked(const EffectiveWeights& codec,
                                     const std::vector<double>& z) {
  std::vector<double> s(static_cast<std::size_t>(codec.n), 0.0);
  for (int i = 0; i < codec.n; ++i) {
    const double* row = &codec.dec[static_cast<std::size_t>(i) * codec.k];
    double acc = 0.0;
    for (int j = 0; j < codec.k; ++j) acc += row[j] * z[static_cast<std::size_t>(j)];
    s[static_cast<std::size_t>(i)] = acc;
  }
  return s;
}

constexpr double kLabDelta = 6.0 / 29.0;
constexpr double kLabDelta3 = kLabDelta * kLabDelta * kLabDelta;

double lab_f(double t) {
  return t > kLabDelta3 ? std::cbrt(t)
                        : t / (3.0 * kLabDelta * kLabDelta) + 4.0 / 29.0;
}

double lab_f_derivative(double t) {
  return t > kLabDelta3 ? 1.0 / (3.0 * std::cbrt(t * t))
                        : 1.0 / (3.0 * kLabDelta * kLabDelta);
}

struct LabValue {
  double lab[3];
  double f_prime[3];  // d f / d (component / white)
};

LabValue lab_of_spectrum(const std::vector<double>& s,
                         const ColorTriple& white) {
  const CmfTable& t = CmfTable::instance();
  double xyz[3] = {0, 0, 0};
  for (int i = 0; i < kSampleCount; ++i) {
    xyz[0] += t.wx()[i] * s[static_cast<std::size_t>(i)];
    xyz[1] += t.wy()[i] * s[static_cast<std::size_t>(i)];
    xyz[2] += t.wz()[i] * s[static_cast<std::size_t>(i)];
  }
  LabValue out;
  double f[3];
  for (int c = 0; c < 3; ++c) {
    const double ratio = xyz[c] / white[c];
    f[c] = lab_f(ratio);
    out.f_prime[c] = lab_f_derivative(ratio) / white[c];
  }
  out.lab[0] = 116.0 * f[1] - 16.0;
  out.lab[1] = 500.0 * (f[0] - f[1]);
  out.lab[2] = 200.0 * (f[1] - f[2]);
  return out;
}

}  // namespace

void validate(const UpsamplerWeights& w) {
  require(w.k > 0, "k must be positive");
  require(w.hidden > 0, "hidden width must be positive");
  const auto h = static_cast<std::size_t>(w.hidden);
  const auto k = static_cast<std::size_t>(w.k);
  require(w.w1.size() == h * 3, "w1 must be hidden x 3");
  require(w.b1.size() == h, "b1 must have hidden entries");
  require(w.w2.size() == h * h, "w2 must be hidden x hidden");
  require(w.b2.size() == h, "b2 must have hidden entries");
  require(w.w3.size() == k * h, "w3 must be k x hidden");
  require(w.b3.size() == k, "b3 must have k entries");
  require(all_finite(w.w1) && all_finite(w.b1) && all_finite(w.w2) &&
              all_finite(w.b2) && all_finite(w.w3) && all_finite(w.b3),
          "weights must be finite");
}

UpsamplerWeights init_upsampler_weights(int k, int hidden,
                                        std::uint64_t seed) {
  require(k > 0 && hidden > 0, "k and hidden must be positive");
  UpsamplerWeights w;
  w.k = k;
  w.hidden = hidden;
  w.meta.seed = seed;
  Rng rng = Rng::stream(seed, "upsampler.init");
  const auto glorot = [&rng](std::vector<double>* dst, int fan_in,
                             int fan_out, std::size_t count) {
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    dst->resize(count);
    for (auto& x : *dst) x = rng.uniform(-limit, limit);
  };
  const auto h = static_cast<std::size_t>(hidden);
  glorot(&w.w1, 3, hidden, h * 3);
  w.b1.assign(h, 0.0);
  glorot(&w.w2, hidden, hidden, h * h);
  w.b2.assign(h, 0.0);
  glorot(&w.w3, hidden, k, static_cast<std::size_t>(k) * h);
  w.b3.assign(static_cast<std::size_t>(k), 0.0);
  return w;
}

LatentCode upsample_raw(const UpsamplerWeights& w,
                        const std::array<double, 3>& linear_rgb) {
  Activations act;
  forward(w, linear_rgb, &act);
  LatentCode out;
  out.z = std::move(act.z);
  return out;
}

LatentCode upsample(const UpsamplerWeights& w,
                    const std::array<double, 3>& linear_rgb,
                    std::uint64_t* clamped_entries) {
  LatentCode out = upsample_raw(w, linear_rgb);
  for (double& v : out.z) {
    if (v < 0.0) {
      v = 0.0;
      if (clamped_entries != nullptr) ++*clamped_entries;
    }
  }
  return out;
}

std::array<double, 3> rgb_of(const SpectralCurve& s, SpectrumKind kind) {
  ColorTriple xyz;
  if (kind == SpectrumKind::reflectance) {
    xyz = xyz_of_reflectance(s);
    for (int c = 0; c < 3; ++c) xyz[c] /= 100.0;
  } else {
    xyz = spectrum_to_xyz(s);
    if (xyz[1] <= 0.0) return {0.0, 0.0, 0.0};
    const double inv_y = 1.0 / xyz[1];
    for (int c = 0; c < 3; ++c) xyz[c] *= inv_y;
  }
  const ColorTriple rgb = xyz_to_linear_rgb(xyz);
  return {std::max(rgb[0], 0.0), std::max(rgb[1], 0.0),
          std::max(rgb[2], 0.0)};
}

UpsampleLossBreakdown upsample_loss(const UpsamplerWeights& w,
                                    const EffectiveWeights& codec,
                                    const std::vector<UpsampleSample>& batch,
                                    const UpsampleTrainConfig& cfg) {
  require(!batch.empty(), "loss needs a non-empty batch");
  require(codec.k == w.k, "codec and network disagree on k");
  const ColorTriple white = CmfTable::instance().white_xyz();
  const double inv_b = 1.0 / static_cast<double>(batch.size());

  UpsampleLossBreakdown out;
  Activations act;
  for (const auto& sample : batch) {
    require(sample.target.k() == w.k, "target code has wrong dimension");
    forward(w, sample.rgb, &act);
    double mse = 0.0, maxabs = 0.0;
    for (int i = 0; i < w.k; ++i) {
      const double d = act.z[static_cast<std::size_t>(i)] - sample.target[i];
      mse += d * d;
      maxabs = std::max(maxabs, std::abs(d));
    }
    out.latent_mse += mse / w.k * inv_b;
    out.latent_maxabs += maxabs * inv_b;

    const LabValue pred = lab_of_spectrum(decode_unchecked(codec, act.z), white);
    const LabValue ref =
        lab_of_spectrum(decode_unchecked(codec, sample.target.z), white);
    double de2 = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = pred.lab[c] - ref.lab[c];
      de2 += d * d;
    }
    out.color += std::sqrt(de2) * inv_b;
  }
  out.total = out.latent_mse + cfg.lambda_maxabs * out.latent_maxabs +
              cfg.lambda_color * out.color;
  return out;
}

UpsamplerGradients upsample_gradients(const UpsamplerWeights& w,
                                      const EffectiveWeights& codec,
                                      const std::vector<UpsampleSample>& batch,
                                      const UpsampleTrainConfig& cfg) {
  require(!batch.empty(), "gradients need a non-empty batch");
  require(codec.k == w.k, "codec and network disagree on k");
  const int h = w.hidden, k = w.k;
  const ColorTriple white = CmfTable::instance().white_xyz();
  const double inv_b = 1.0 / static_cast<double>(batch.size());

  UpsamplerGradients g;
  g.w1.assign(w.w1.size(), 0.0);
  g.b1.assign(w.b1.size(), 0.0);
  g.w2.assign(w.w2.size(), 0.0);
  g.b2.assign(w.b2.size(), 0.0);
  g.w3.assign(w.w3.size(), 0.0);
  g.b3.assign(w.b3.size(), 0.0);

  Activations act;
  std::vector<double> g_z(static_cast<std::size_t>(k));
  std::vector<double> g_h2(static_cast<std::size_t>(h)),
      g_h1(static_cast<std::size_t>(h));
  for (const auto& sample : batch) {
    require(sample.target.k() == w.k, "target code has wrong dimension");
    forward(w, sample.rgb, &act);

    // d latent_mse / dz and the max-abs subgradient (first argmax on ties).
    std::fill(g_z.begin(), g_z.end(), 0.0);
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < k; ++i) {
      const double d = act.z[static_cast<std::size_t>(i)] - sample.target[i];
      g_z[static_cast<std::size_t>(i)] = 2.0 * d / k * inv_b;
      if (std::abs(d) > best) {
        best = std::abs(d);
        arg = i;
      }
    }
    if (best > 0.0) {
      const double d =
          act.z[static_cast<std::size_t>(arg)] - sample.target[arg];
      g_z[static_cast<std::size_t>(arg)] +=
          cfg.lambda_maxabs * (d > 0.0 ? 1.0 : -1.0) * inv_b;
    }

    // Colour term: DeltaE76 between the decoded colours; the reference side
    // is constant.
    if (cfg.lambda_color != 0.0) {
      const std::vector<double> s_pred = decode_unchecked(codec, act.z);
      const LabValue pred = lab_of_spectrum(s_pred, white);
      const LabValue ref =
          lab_of_spectrum(decode_unchecked(codec, sample.target.z), white);
      double diff[3], de2 = 0.0;
      for (int c = 0; c < 3; ++c) {
        diff[c] = pred.lab[c] - ref.lab[c];
        de2 += diff[c] * diff[c];
      }
      const double de = std::sqrt(de2);
      if (de > 1e-12) {
        // dDE/dlab -> dlab/df -> df/dXYZ.
        const double g_lab[3] = {diff[0] / de, diff[1] / de, diff[2] / de};
        const double g_f[3] = {
            500.0 * g_lab[1],
            116.0 * g_lab[0] - 500.0 * g_lab[1] + 200.0 * g_lab[2],
            -200.0 * g_lab[2],
        };
        const double g_xyz[3] = {g_f[0] * pred.f_prime[0],
                                 g_f[1] * pred.f_prime[1],
                                 g_f[2] * pred.f_prime[2]};
        const CmfTable& t = CmfTable::instance();
        const double scale = cfg.lambda_color * inv_b;
        for (int j = 0; j < k; ++j) {
          double acc = 0.0;
          for (int i = 0; i < kSampleCount; ++i) {
            const double g_s = g_xyz[0] * t.wx()[i] + g_xyz[1] * t.wy()[i] +
                               g_xyz[2] * t.wz()[i];
            acc += g_s * codec.dec[static_cast<std::size_t>(i) * k + j];
          }
          g_z[static_cast<std::size_t>(j)] += scale * acc;
        }
      }
    }

    // Backprop through the three layers.
    for (int i = 0; i < k; ++i) {
      const double gz = g_z[static_cast<std::size_t>(i)];
      g.b3[static_cast<std::size_t>(i)] += gz;
      double* grow = &g.w3[static_cast<std::size_t>(i) * h];
      for (int j = 0; j < h; ++j) grow[j] += gz * act.h2[static_cast<std::size_t>(j)];
    }
    std::fill(g_h2.begin(), g_h2.end(), 0.0);
    for (int i = 0; i < k; ++i) {
      const double gz = g_z[static_cast<std::size_t>(i)];
      const double* row = &w.w3[static_cast<std::size_t>(i) * h];
      for (int j = 0; j < h; ++j) g_h2[static_cast<std::size_t>(j)] += gz * row[j];
    }
    for (int i = 0; i < h; ++i) {
      g_h2[static_cast<std::size_t>(i)] *=
          silu_derivative(act.h2_pre[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < h; ++i) {
      const double gi = g_h2[static_cast<std::size_t>(i)];
      g.b2[static_cast<std::size_t>(i)] += gi;
      double* grow = &g.w2[static_cast<std::size_t>(i) * h];
      for (int j = 0; j < h; ++j) grow[j] += gi * act.h1[static_cast<std::size_t>(j)];
    }
    std::fill(g_h1.begin(), g_h1.end(), 0.0);
    for (int i = 0; i < h; ++i) {
      const double gi = g_h2[static_cast<std::size_t>(i)];
      const double* row = &w.w2[static_cast<std::size_t>(i) * h];
      for (int j = 0; j < h; ++j) g_h1[static_cast<std::size_t>(j)] += gi * row[j];
    }
    for (int i = 0; i < h; ++i) {
      const double gi = g_h1[static_cast<std::size_t>(i)] *
                        silu_derivative(act.h1_pre[static_cast<std::size_t>(i)]);
      g.b1[static_cast<std::size_t>(i)] += gi;
      double* grow = &g.w1[static_cast<std::size_t>(i) * 3];
      for (int j = 0; j < 3; ++j) {
        grow[j] += gi * sample.rgb[static_cast<std::size_t>(j)];
      }
    }
  }
  return g;
}

namespace {

struct AdamWState {
  std::vector<double> m, v;
  explicit AdamWState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

void adamw_step(std::vector<double>* theta, const std::vector<double>& g,
                AdamWState* st, double lr, double weight_decay, int t) {
  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
  const double bc1 = 1.0 - std::pow(kBeta1, t);
  const double bc2 = 1.0 - std::pow(kBeta2, t);
  for (std::size_t i = 0; i < theta->size(); ++i) {
    st->m[i] = kBeta1 * st->m[i] + (1.0 - kBeta1) * g[i];
    st->v[i] = kBeta2 * st->v[i] + (1.0 - kBeta2) * g[i] * g[i];
    const double mhat = st->m[i] / bc1;
    const double vhat = st->v[i] / bc2;
    (*theta)[i] -=
        lr * (mhat / (std::sqrt(vhat) + kEps) + weight_decay * (*theta)[i]);
  }
}

double squared_norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

void scale_in_place(std::vector<double>* v, double s) {
  for (double& x : *v) x *= s;
}

}  // namespace

std::pair<UpsamplerWeights, UpsampleReport> train_upsampler(
    const Dataset& ds, const CodecWeights& codec,
    const UpsampleTrainConfig& cfg) {
  validate(codec);
  const EffectiveWeights eff = effective_weights(codec);

  std::vector<UpsampleSample> samples;
  for (const auto& item : ds.reflectance) {
    if (item.split != Split::train) continue;
    UpsampleSample s;
    s.rgb = rgb_of(item.curve, SpectrumKind::reflectance);
    s.target = encode(eff, item.curve);
    samples.push_back(std::move(s));
  }
  if (samples.empty()) {
    throw std::runtime_error(
        "train_upsampler: reflectance training split is empty");
  }

  UpsamplerWeights w = init_upsampler_weights(codec.k, cfg.hidden, cfg.seed);
  w.meta.seed = cfg.seed;

  AdamWState st_w1(w.w1.size()), st_b1(w.b1.size()), st_w2(w.w2.size()),
      st_b2(w.b2.size()), st_w3(w.w3.size()), st_b3(w.b3.size());

  UpsampleReport report;
  report.train_samples = samples.size();
  double lr = cfg.lr;
  double best_loss = std::numeric_limits<double>::infinity();
  int stale = 0;
  int adam_t = 0;

  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    Rng rng = Rng::stream(cfg.seed,
                          "upsampler.epoch." + std::to_string(epoch));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.index(static_cast<std::uint32_t>(i))]);
    }

    UpsampleEpochLog log;
    log.epoch = epoch;
    int batches = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(cfg.batch_size)) {
      const std::size_t stop =
          std::min(order.size(), start + static_cast<std::size_t>(cfg.batch_size));
      std::vector<UpsampleSample> batch;
      batch.reserve(stop - start);
      for (std::size_t i = start; i < stop; ++i) {
        batch.push_back(samples[order[i]]);
      }
      const UpsampleLossBreakdown lb = upsample_loss(w, eff, batch, cfg);
      if (!std::isfinite(lb.total)) {
        throw std::runtime_error(
            "train_upsampler: non-finite loss at epoch " +
            std::to_string(epoch));
      }
      log.latent_mse += lb.latent_mse;
      log.latent_maxabs += lb.latent_maxabs;
      log.color += lb.color;
      log.total += lb.total;
      ++batches;

      UpsamplerGradients g = upsample_gradients(w, eff, batch, cfg);
      const double norm =
          std::sqrt(squared_norm(g.w1) + squared_norm(g.b1) +
                    squared_norm(g.w2) + squared_norm(g.b2) +
                    squared_norm(g.w3) + squared_norm(g.b3));
      if (cfg.grad_clip_norm > 0.0 && norm > cfg.grad_clip_norm) {
        const double s = cfg.grad_clip_norm / norm;
        scale_in_place(&g.w1, s);
        scale_in_place(&g.b1, s);
        scale_in_place(&g.w2, s);
        scale_in_place(&g.b2, s);
        scale_in_place(&g.w3, s);
        scale_in_place(&g.b3, s);
      }
      ++adam_t;
      adamw_step(&w.w1, g.w1, &st_w1, lr, cfg.weight_decay, adam_t);
      adamw_step(&w.b1, g.b1, &st_b1, lr, cfg.weight_decay, adam_t);
      adamw_step(&w.w2, g.w2, &st_w2, lr, cfg.weight_decay, adam_t);
      adamw_step(&w.b2, g.b2, &st_b2, lr, cfg.weight_decay, adam_t);
      adamw_step(&w.w3, g.w3, &st_w3, lr, cfg.weight_decay, adam_t);
      adamw_step(&w.b3, g.b3, &st_b3, lr, cfg.weight_decay, adam_t);
    }
    log.latent_mse /= batches;
    log.latent_maxabs /= batches;
    log.color /= batches;
    log.total /= batches;
    log.lr = lr;
    report.epochs.push_back(log);

    // Reduce-on-plateau on the epoch-mean training loss.
    if (log.total < best_loss - 1e-12) {
      best_loss = log.total;
      stale = 0;
    } else if (++stale >= cfg.plateau_patience) {
      lr = std::max(lr * cfg.plateau_factor, cfg.min_lr);
      stale = 0;
    }
  }

  if (!report.epochs.empty()) {
    report.first_total = report.epochs.front().total;
    report.final_total = report.epochs.back().total;
  }
  w.meta.epochs = static_cast<int>(report.epochs.size());
  return {std::move(w), std::move(report)};
}

}  // namespace hadacodec
