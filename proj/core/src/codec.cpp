#include "hadacodec/codec.hpp"

#include <cmath>
#include <stdexcept>

namespace hadacodec {

double softplus(double raw, double beta) {
  const double t = beta * raw;
  if (t > 30.0) return raw;  // softplus(x) -> x; avoids exp overflow
  return std::log1p(std::exp(t)) / beta;
}

double softplus_derivative(double raw, double beta) {
  const double t = beta * raw;
  if (t > 30.0) return 1.0;
  const double e = std::exp(t);
  return e / (1.0 + e);
}

EffectiveWeights effective_weights(const CodecWeights& w) {
  EffectiveWeights e;
  e.k = w.k;
  e.n = w.n;
  e.enc.resize(w.raw_enc.size());
  e.dec.resize(w.raw_dec.size());
  for (std::size_t i = 0; i < w.raw_enc.size(); ++i) {
    e.enc[i] = softplus(w.raw_enc[i], w.beta);
  }
  for (std::size_t i = 0; i < w.raw_dec.size(); ++i) {
    e.dec[i] = softplus(w.raw_dec[i], w.beta);
  }
  return e;
}

LatentCode encode(const EffectiveWeights& w, const SpectralCurve& s) {
  LatentCode z;
  z.z.assign(static_cast<std::size_t>(w.k), 0.0);
  for (int r = 0; r < w.k; ++r) {
    const double* row = &w.enc[static_cast<std::size_t>(r) * w.n];
    double acc = 0.0;
    for (int i = 0; i < w.n; ++i) acc += row[i] * s[i];
    z[r] = acc;
  }
  return z;
}

LatentCode encode(const CodecWeights& w, const SpectralCurve& s) {
  return encode(effective_weights(w), s);
}

SpectralCurve decode(const EffectiveWeights& w, const LatentCode& z) {
  if (z.k() != w.k) {
    throw std::invalid_argument("decode: code dimension mismatch");
  }
  for (int i = 0; i < z.k(); ++i) {
    if (!(z[i] >= 0.0)) {
      throw std::domain_error(
          "decode: latent codes are non-negative; refusing to decode a "
          "negative entry");
    }
  }
  SpectralCurve s;
  for (int r = 0; r < w.n; ++r) {
    const double* row = &w.dec[static_cast<std::size_t>(r) * w.k];
    double acc = 0.0;
    for (int i = 0; i < w.k; ++i) acc += row[i] * z[i];
    s[r] = acc;
  }
  return s;
}

SpectralCurve decode(const CodecWeights& w, const LatentCode& z) {
  return decode(effective_weights(w), z);
}

LatentCode blockwise_hadamard(const LatentCode& a, const LatentCode& b) {
  if (a.k() != b.k()) {
    throw std::invalid_argument("blockwise_hadamard: dimension mismatch");
  }
  LatentCode out;
  out.z.resize(a.z.size());
  for (int i = 0; i < a.k(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::vector<std::array<double, 3>> split_blocks(const LatentCode& z) {
  if (z.k() % 3 != 0) {
    throw std::invalid_argument("split_blocks: k must be a multiple of 3");
  }
  std::vector<std::array<double, 3>> blocks(
      static_cast<std::size_t>(z.k() / 3));
  for (int i = 0; i < z.k(); ++i) {
    blocks[static_cast<std::size_t>(i / 3)][static_cast<std::size_t>(i % 3)] =
        z[i];
  }
  return blocks;
}

LatentCode join_blocks(const std::vector<std::array<double, 3>>& blocks) {
  LatentCode z;
  z.z.reserve(blocks.size() * 3);
  for (const auto& b : blocks) {
    z.z.push_back(b[0]);
    z.z.push_back(b[1]);
    z.z.push_back(b[2]);
  }
  return z;
}

void validate(const CodecWeights& w) {
  if (w.k <= 0 || w.k % 3 != 0) {
    throw std::invalid_argument("codec weights: k must be a positive multiple of 3");
  }
  if (w.n != kSampleCount) {
    throw std::invalid_argument("codec weights: n must match the canonical grid");
  }
  if (!(w.beta > 0.0)) {
    throw std::invalid_argument("codec weights: beta must be positive");
  }
  if (w.raw_enc.size() != static_cast<std::size_t>(w.k) * w.n ||
      w.raw_dec.size() != static_cast<std::size_t>(w.k) * w.n) {
    throw std::invalid_argument("codec weights: parameter array size mismatch");
  }
  for (double x : w.raw_enc) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("codec weights: non-finite encoder entry");
    }
  }
  for (double x : w.raw_dec) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("codec weights: non-finite decoder entry");
    }
  }
}

}  // namespace hadacodec
