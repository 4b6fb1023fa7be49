#include "hadacodec/rng.hpp"

#include <cmath>

namespace hadacodec {

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t basis) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = basis;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  // Expand the seed through splitmix64 (the recommended xoshiro seeding).
  std::uint64_t st = seed;
  for (auto& word : s_) word = splitmix64_next(st);
}

Rng Rng::stream(std::uint64_t seed, std::string_view purpose) {
  std::uint64_t h = fnv1a64(purpose.data(), purpose.size());
  std::uint64_t st = seed ^ h;
  // One extra mix so nearby seeds with related purposes decorrelate.
  return Rng(splitmix64_next(st));
}

Rng Rng::pixel_stream(std::uint64_t seed, int x, int y, int sample,
                      std::uint32_t lane) {
  std::uint64_t st = seed;
  std::uint64_t h = splitmix64_next(st);
  st = h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) |
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(y)) << 32));
  h = splitmix64_next(st);
  st = h ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sample)) |
            (static_cast<std::uint64_t>(lane) << 32));
  return Rng(splitmix64_next(st));
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double Rng::log_uniform(double a, double b) {
  return a * std::exp(uniform() * std::log(b / a));
}

std::uint32_t Rng::index(std::uint32_t n) {
  return static_cast<std::uint32_t>(next_u64() % n);
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * 3.14159265358979323846 * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

}  // namespace hadacodec
