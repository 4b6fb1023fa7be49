#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hadacodec {

// 64-bit FNV-1a over a byte range. Used for file hashing in manifests and
// for deriving deterministic seed material from strings.
std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t basis = 0xcbf29ce484222325ull);

// One step of the splitmix64 generator; also usable as a mixing function.
std::uint64_t splitmix64_next(std::uint64_t& state);

// Deterministic pseudo-random stream (xoshiro256++), fully specified here so
// results are reproducible independent of the standard library. Every
// randomized stage of the pipeline derives its own named stream from a single
// user seed, so adding a consumer never perturbs the draws of another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Named sub-stream: hash(seed, purpose). Distinct purposes give
  // statistically independent streams.
  static Rng stream(std::uint64_t seed, std::string_view purpose);

  // Per-pixel render stream: hash(seed, x, y, sample, lane). `lane`
  // separates the geometric-sampling stream from auxiliary draws
  // (e.g. Russian roulette) so path geometry is identical across modes.
  static Rng pixel_stream(std::uint64_t seed, int x, int y, int sample,
                          std::uint32_t lane);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();
  // Uniform double in [a, b).
  double uniform(double a, double b);
  // Log-uniform double in [a, b), a > 0.
  double log_uniform(double a, double b);
  // Uniform integer in [0, n), n > 0.
  std::uint32_t index(std::uint32_t n);
  // Standard normal via Box-Muller (second value cached).
  double normal();

 private:
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace hadacodec
