#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/rng.hpp"
#include "hadacodec/spectrum.hpp"

using namespace hadacodec;

namespace {

CodecWeights random_weights(int k, std::uint64_t seed) {
  CodecWeights w;
  w.k = k;
  w.n = kSampleCount;
  w.raw_enc.resize(static_cast<std::size_t>(k) * kSampleCount);
  w.raw_dec.resize(static_cast<std::size_t>(kSampleCount) * k);
  Rng rng = Rng::stream(seed, "test.codec.weights");
  for (double& v : w.raw_enc) v = rng.uniform(-0.3, 0.3);
  for (double& v : w.raw_dec) v = rng.uniform(-0.3, 0.3);
  return w;
}

SpectralCurve random_curve(Rng& rng, double hi = 1.0) {
  SpectralCurve s;
  for (int i = 0; i < kSampleCount; ++i) s[i] = rng.uniform(0.0, hi);
  return s;
}

}  // namespace

TEST_CASE("softplus values and branches") {
  // Frozen values from an independent computation of log1p(exp(b*r))/b.
  CHECK(softplus(0.0, 10.0) ==
        doctest::Approx(0.069314718055994526).epsilon(1e-14));
  CHECK(softplus(-1.0, 10.0) ==
        doctest::Approx(4.5398899216864648e-06).epsilon(1e-12));
  CHECK(softplus(0.2, 10.0) ==
        doctest::Approx(0.21269280110429728).epsilon(1e-14));
  CHECK(softplus(3.0, 10.0) ==
        doctest::Approx(3.0000000000000093).epsilon(1e-15));

  // Identity branch: beta*raw > 30 returns raw bit-exactly, so very large
  // weights survive the reparameterization unchanged.
  CHECK(softplus(3.1, 10.0) == 3.1);
  CHECK(softplus(1000.0, 10.0) == 1000.0);
  CHECK(softplus_derivative(3.1, 10.0) == 1.0);

  CHECK(softplus_derivative(0.0, 10.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(softplus_derivative(0.2, 10.0) ==
        doctest::Approx(0.88079707797788231).epsilon(1e-14));

  // Output is strictly positive everywhere, including very negative raws.
  for (double r : {-50.0, -5.0, -1.0, 0.0, 1.0, 5.0, 50.0}) {
    CHECK(softplus(r, 10.0) > 0.0);
  }
}

TEST_CASE("softplus derivative matches finite differences") {
  const double h = 1e-6;
  for (double r : {-2.0, -0.5, -0.1, 0.0, 0.1, 0.5, 2.0, 2.99}) {
    const double fd = (softplus(r + h, 10.0) - softplus(r - h, 10.0)) / (2 * h);
    CHECK(softplus_derivative(r, 10.0) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("effective weights are strictly positive") {
  const CodecWeights w = random_weights(6, 3);
  const EffectiveWeights e = effective_weights(w);
  CHECK(e.k == 6);
  CHECK(e.n == kSampleCount);
  CHECK(e.enc.size() == 6u * 47u);
  CHECK(e.dec.size() == 47u * 6u);
  for (double v : e.enc) CHECK(v > 0.0);
  for (double v : e.dec) CHECK(v > 0.0);
}

TEST_CASE("encode/decode match an explicit matrix-vector product") {
  const CodecWeights w = random_weights(6, 17);
  const EffectiveWeights e = effective_weights(w);
  Rng rng = Rng::stream(17, "test.codec.curves");
  const SpectralCurve s = random_curve(rng);

  const LatentCode z = encode(e, s);
  REQUIRE(z.k() == 6);
  for (int j = 0; j < 6; ++j) {
    double acc = 0.0;
    for (int i = 0; i < kSampleCount; ++i) {
      acc += e.enc[static_cast<std::size_t>(j) * kSampleCount + i] * s[i];
    }
    CHECK(z[j] == doctest::Approx(acc).epsilon(1e-14));
    CHECK(z[j] >= 0.0);
  }

  const SpectralCurve d = decode(e, z);
  for (int i = 0; i < kSampleCount; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 6; ++j) {
      acc += e.dec[static_cast<std::size_t>(i) * 6 + j] * z[j];
    }
    CHECK(d[i] == doctest::Approx(acc).epsilon(1e-14));
    CHECK(d[i] >= 0.0);
  }

  // The CodecWeights overloads agree with the EffectiveWeights path.
  const LatentCode z2 = encode(w, s);
  for (int j = 0; j < 6; ++j) CHECK(z2[j] == z[j]);
}

TEST_CASE("encoding preserves scaling and addition to relative 1e-12") {
  const CodecWeights w = random_weights(6, 23);
  const EffectiveWeights e = effective_weights(w);
  Rng rng = Rng::stream(23, "test.codec.linearity");

  for (int it = 0; it < 200; ++it) {
    const SpectralCurve a = random_curve(rng, 2.0);
    const SpectralCurve b = random_curve(rng, 2.0);
    const double alpha = rng.uniform(0.0, 5.0);

    const LatentCode za = encode(e, a);
    const LatentCode zb = encode(e, b);
    const LatentCode zsum = encode(e, add(a, b));
    const LatentCode zscaled = encode(e, scale(a, alpha));

    for (int j = 0; j < 6; ++j) {
      const double sum_ref = za[j] + zb[j];
      CHECK(std::abs(zsum[j] - sum_ref) <=
            1e-12 * std::max(1.0, std::abs(sum_ref)));
      const double scale_ref = alpha * za[j];
      CHECK(std::abs(zscaled[j] - scale_ref) <=
            1e-12 * std::max(1.0, std::abs(scale_ref)));
    }
  }
}

TEST_CASE("decode rejects negative codes and wrong dimensions") {
  const CodecWeights w = random_weights(6, 29);
  const EffectiveWeights e = effective_weights(w);
  LatentCode z;
  z.z = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  CHECK_NOTHROW(decode(e, z));
  z[2] = -1e-9;
  CHECK_THROWS_AS(decode(e, z), std::domain_error);
  z.z = {0.1, 0.2, 0.3};
  CHECK_THROWS_AS(decode(e, z), std::invalid_argument);

  SpectralCurve junk;  // encode never takes a wrong-size input: fixed array
  CHECK_NOTHROW(encode(e, junk));
}

TEST_CASE("blockwise hadamard and block packing") {
  LatentCode a, b;
  a.z = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  b.z = {0.5, 0.5, 2.0, 0.0, 1.0, 3.0};
  const LatentCode h = blockwise_hadamard(a, b);
  REQUIRE(h.k() == 6);
  const double expect[6] = {0.5, 1.0, 6.0, 0.0, 5.0, 18.0};
  for (int j = 0; j < 6; ++j) CHECK(h[j] == expect[j]);

  LatentCode short_code;
  short_code.z = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(blockwise_hadamard(a, short_code), std::invalid_argument);

  const auto blocks = split_blocks(a);
  REQUIRE(blocks.size() == 2u);
  CHECK(blocks[0][0] == 1.0);
  CHECK(blocks[0][2] == 3.0);
  CHECK(blocks[1][0] == 4.0);
  CHECK(blocks[1][2] == 6.0);
  const LatentCode joined = join_blocks(blocks);
  REQUIRE(joined.k() == 6);
  for (int j = 0; j < 6; ++j) CHECK(joined[j] == a[j]);

  LatentCode bad;
  bad.z = {1.0, 2.0, 3.0, 4.0};
  CHECK_THROWS_AS(split_blocks(bad), std::invalid_argument);
}

TEST_CASE("weight validation") {
  CodecWeights good = random_weights(6, 31);
  CHECK_NOTHROW(validate(good));
  CHECK(good.blocks() == 2);

  CodecWeights k9 = random_weights(9, 31);
  CHECK_NOTHROW(validate(k9));
  CHECK(k9.blocks() == 3);

  CodecWeights w = good;
  w.k = 0;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  w = good;
  w.k = 5;  // not a multiple of 3
  w.raw_enc.resize(5u * 47u);
  w.raw_dec.resize(47u * 5u);
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  w = good;
  w.n = 46;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  w = good;
  w.beta = 0.0;
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  w = good;
  w.raw_enc.pop_back();
  CHECK_THROWS_AS(validate(w), std::invalid_argument);

  w = good;
  w.raw_dec[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(w), std::invalid_argument);
}
