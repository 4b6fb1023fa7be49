#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hadacodec/spectrum.hpp"

namespace hadacodec {

// Non-negative latent code of dimension k (k a multiple of 3 so codes pack
// into RGB render passes).
struct LatentCode {
  std::vector<double> z;

  int k() const { return static_cast<int>(z.size()); }
  double& operator[](int i) { return z[static_cast<std::size_t>(i)]; }
  const double& operator[](int i) const {
    return z[static_cast<std::size_t>(i)];
  }
};

struct CodecTrainingMeta {
  std::uint64_t seed = 0;
  // lambda weights in order: e2e, rec, code, col, alg.
  std::array<double, 5> lambda_weights{};
  int epochs = 0;
};

// Learned codec parameters. Effective weights are
// softplus_beta(raw) = (1/beta) * log(1 + exp(beta * raw)), elementwise, so
// both matrices are strictly positive by construction.
struct CodecWeights {
  int k = 6;
  int n = kSampleCount;
  double beta = 10.0;
  std::vector<double> raw_enc;  // k x n, row-major
  std::vector<double> raw_dec;  // n x k, row-major
  CodecTrainingMeta meta;

  int blocks() const { return k / 3; }
};

// softplus through the non-negativity reparameterization; switches to the
// identity once beta * raw > 30 so large weights neither overflow nor lose
// precision.
double softplus(double raw, double beta);
// d softplus / d raw = sigmoid(beta * raw), same overflow-safe branch.
double softplus_derivative(double raw, double beta);

// Precomputed elementwise softplus of both matrices (the hot-path form).
struct EffectiveWeights {
  int k = 0;
  int n = 0;
  std::vector<double> enc;  // k x n, row-major
  std::vector<double> dec;  // n x k, row-major
};

EffectiveWeights effective_weights(const CodecWeights& w);

// z = W_enc * s. Linear, hence exactly scaling- and addition-preserving.
LatentCode encode(const EffectiveWeights& w, const SpectralCurve& s);
LatentCode encode(const CodecWeights& w, const SpectralCurve& s);

// s = W_dec * z. Throws std::domain_error if any code entry is negative
// (codes are non-negative by contract; no silent clamping).
SpectralCurve decode(const EffectiveWeights& w, const LatentCode& z);
SpectralCurve decode(const CodecWeights& w, const LatentCode& z);

// Element-wise product of codes; blocks of 3 channels are the unit that maps
// onto RGB render passes. Throws std::invalid_argument on dimension mismatch.
LatentCode blockwise_hadamard(const LatentCode& a, const LatentCode& b);

// Split a code into its k/3 render blocks / reassemble. Throws
// std::invalid_argument when k is not a multiple of 3.
std::vector<std::array<double, 3>> split_blocks(const LatentCode& z);
LatentCode join_blocks(const std::vector<std::array<double, 3>>& blocks);

// Validates invariants (k > 0, k mod 3 == 0, n == kSampleCount, beta > 0,
// array sizes, finite entries). Throws std::invalid_argument on violation.
void validate(const CodecWeights& w);

}  // namespace hadacodec
