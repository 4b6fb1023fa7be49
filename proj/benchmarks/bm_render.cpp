// Render-path benchmarks comparing the per-mode shading cost on a small
// enclosed test scene.

#include <benchmark/benchmark.h>

#include "hadacodec/renderer.hpp"
#include "hadacodec/spectrum.hpp"
#include "hadacodec/trainer.hpp"

using namespace hadacodec;

namespace {

Scene make_scene() {
  Scene sc;
  sc.materials.push_back(SpectralCurve::flat(0.7));
  sc.materials.push_back(gaussian_curve(620.0, 60.0, 0.6));
  sc.materials.push_back(gaussian_curve(540.0, 60.0, 0.6));
  sc.wall_material = {1, 2, 0, 0, 0, -1};

  SceneObject sphere;
  sphere.kind = SceneObject::Kind::sphere;
  sphere.center = {0.35, 0.4, -0.3};
  sphere.radius = 0.4;
  sphere.material = 0;
  sc.objects.push_back(sphere);

  SceneLight light;
  light.corner = {-0.25, 1.999, -0.25};
  light.edge_u = {0.5, 0.0, 0.0};
  light.edge_v = {0.0, 0.0, 0.5};
  light.spd = SpectralCurve::ones();
  light.scale = 12.0;
  sc.lights.push_back(light);
  return sc;
}

RenderJob make_job(RenderMode mode) {
  RenderJob job;
  job.mode = mode;
  job.width = 32;
  job.height = 32;
  job.spp = 4;
  job.max_depth = 3;
  return job;
}

}  // namespace

static void BM_RenderSpectral(benchmark::State& state) {
  const Scene sc = make_scene();
  const RenderJob job = make_job(RenderMode::spectral);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(sc, job));
  }
}
BENCHMARK(BM_RenderSpectral)->Unit(benchmark::kMillisecond);

static void BM_RenderLatent(benchmark::State& state) {
  const Scene sc = make_scene();
  const RenderJob job = make_job(RenderMode::latent);
  const CodecWeights codec = init_codec_weights(6, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(sc, job, &codec));
  }
}
BENCHMARK(BM_RenderLatent)->Unit(benchmark::kMillisecond);

static void BM_RenderRgb(benchmark::State& state) {
  const Scene sc = make_scene();
  const RenderJob job = make_job(RenderMode::rgb);
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(sc, job));
  }
}
BENCHMARK(BM_RenderRgb)->Unit(benchmark::kMillisecond);
