// Microbenchmarks for the codec hot paths: encode/decode, the blockwise
// product, and the training losses.

#include <benchmark/benchmark.h>

#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/rng.hpp"
#include "hadacodec/spectrum.hpp"
#include "hadacodec/trainer.hpp"

using namespace hadacodec;

namespace {

CodecWeights make_weights(int k) {
  return init_codec_weights(k, /*seed=*/42);
}

SpectralCurve make_curve(std::uint64_t salt) {
  Rng rng = Rng::stream(salt, "bench.curve");
  SpectralCurve s;
  for (int i = 0; i < kSampleCount; ++i) s[i] = rng.uniform();
  return s;
}

Batch make_batch(std::size_t count) {
  Batch b;
  b.refl.reserve(count);
  b.illum.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    b.refl.push_back(make_curve(2 * i));
    b.illum.push_back(make_curve(2 * i + 1));
  }
  return b;
}

}  // namespace

static void BM_Encode(benchmark::State& state) {
  const CodecWeights w = make_weights(static_cast<int>(state.range(0)));
  const EffectiveWeights e = effective_weights(w);
  const SpectralCurve s = make_curve(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(e, s));
  }
}
BENCHMARK(BM_Encode)->Arg(6)->Arg(9);

static void BM_Decode(benchmark::State& state) {
  const CodecWeights w = make_weights(static_cast<int>(state.range(0)));
  const EffectiveWeights e = effective_weights(w);
  const LatentCode z = encode(e, make_curve(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(e, z));
  }
}
BENCHMARK(BM_Decode)->Arg(6)->Arg(9);

static void BM_BlockwiseHadamard(benchmark::State& state) {
  const CodecWeights w = make_weights(6);
  const EffectiveWeights e = effective_weights(w);
  const LatentCode a = encode(e, make_curve(7));
  const LatentCode b = encode(e, make_curve(8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blockwise_hadamard(a, b));
  }
}
BENCHMARK(BM_BlockwiseHadamard);

static void BM_EffectiveWeights(benchmark::State& state) {
  const CodecWeights w = make_weights(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(effective_weights(w));
  }
}
BENCHMARK(BM_EffectiveWeights);

static void BM_TotalLoss(benchmark::State& state) {
  const CodecWeights w = make_weights(6);
  const Batch batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const LossWeights lw;
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_loss(w, batch, lw));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TotalLoss)->Arg(32)->Arg(128);

static void BM_Gradients(benchmark::State& state) {
  const CodecWeights w = make_weights(6);
  const Batch batch = make_batch(static_cast<std::size_t>(state.range(0)));
  const LossWeights lw;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradients(w, batch, lw));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Gradients)->Arg(32)->Arg(128);
