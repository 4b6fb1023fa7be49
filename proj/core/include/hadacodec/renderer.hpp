#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/spectrum.hpp"

namespace hadacodec {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

struct Camera {
  Vec3 position{0, 1, 3.25};
  Vec3 look_at{0, 1, 0};
  Vec3 up{0, 1, 0};
  double vfov_degrees = 40.0;
};

// Planar parallelogram area emitter; emits from the side its geometric
// normal (edge_u x edge_v, normalized) faces. `spd` is emitted radiance,
// multiplied by `scale`.
struct SceneLight {
  Vec3 corner, edge_u, edge_v;
  SpectralCurve spd;
  double scale = 1.0;
};

struct SceneObject {
  enum class Kind { sphere, block };
  Kind kind = Kind::sphere;
  Vec3 center;        // sphere
  double radius = 0;  // sphere
  Vec3 box_min, box_max;  // block
  int material = 0;
};

// Cornell-style test scene: an axis-aligned box shell with per-wall Lambertian
// materials, up to a handful of parametric objects, and area lights. All
// spectral assets are full curves; per-mode conversion happens at render time.
struct Scene {
  Camera camera;
  Vec3 box_min{-1, 0, -1}, box_max{1, 2, 1};
  // Wall material indices in order left, right, floor, ceiling, back, front;
  // -1 means the wall is absent (open side).
  std::array<int, 6> wall_material{-1, -1, -1, -1, -1, -1};
  std::vector<SpectralCurve> materials;  // reflectances in [0, 1]
  std::vector<SceneObject> objects;
  std::vector<SceneLight> lights;
};

enum class RenderMode { spectral, latent, rgb };

struct RenderJob {
  RenderMode mode = RenderMode::spectral;
  int width = 128;
  int height = 128;
  int spp = 64;
  // Maximum number of surface scattering events; -1 = unbounded with Russian
  // roulette starting at depth 5 (throughput-luminance survival probability
  // drawn from a dedicated stream so geometric sampling is unaffected).
  int max_depth = 3;
  std::uint64_t seed = 0;
  // When set, records one accumulated hash per pixel over the geometric hit
  // sequences of all its samples; identical across render modes by
  // construction (geometry never touches channel data).
  bool collect_path_hashes = false;
};

// Per-channel float image, row-major (y, x, channel).
struct ChannelImage {
  int width = 0, height = 0, channels = 0;
  std::vector<float> data;
  // Shading-evaluation counter in native shading units: one unit per
  // wavelength sample shaded in spectral mode, one per RGB-triple shaded in
  // pass-based modes (a k-channel latent render counts k/3 units per event).
  std::uint64_t shading_evals = 0;
  std::vector<std::uint64_t> path_hashes;  // width*height when collected

  float& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  float at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

// Unidirectional path tracer with next-event estimation (emitters contribute
// via light sampling plus direct camera-ray hits). Deterministic: the sample
// stream is a pure function of (seed, pixel, sample index), per-pixel
// accumulation is order-independent across worker threads, and per-sample
// arithmetic is float32 with a float64 per-pixel reduction.
//
// Channel counts by mode: spectral 47, latent k (requires `codec`), rgb 3.
// Worker thread count is capped by the HADACODEC_THREADS environment
// variable (0 or unset = hardware concurrency).
ChannelImage render(const Scene& scene, const RenderJob& job,
                    const CodecWeights* codec = nullptr);

// Renders k/3 successive 3-channel passes (latent blocks packed as RGB) and
// concatenates them; equivalent to the single k-channel latent render at any
// fixed depth.
ChannelImage render_latent_multipass(const Scene& scene, const RenderJob& job,
                                     const CodecWeights& codec);

// Per-pixel decode of a k-channel latent image to 47 spectral channels.
ChannelImage decode_image(const ChannelImage& latent, const CodecWeights& w);

// 47-channel images integrate against the colour matching functions
// (radiance convention) and convert to linear sRGB; 3-channel images pass
// through. Other channel counts throw std::invalid_argument (decode first).
ChannelImage image_to_linear_rgb(const ChannelImage& img);

// Exposure scalar mapping the given luminance percentile of the image to 1.0
// (shared between compared images by computing it on the reference).
double exposure_for(const ChannelImage& img, double percentile = 99.5);

// Display encoding at the given exposure: returns 8-bit sRGB, row-major RGB.
std::vector<unsigned char> tonemap_srgb8(const ChannelImage& linear_rgb,
                                         double exposure);

// Per-pixel MSE across linear-sRGB channels between two images of equal
// size (each converted via image_to_linear_rgb).
struct ErrorMap {
  int width = 0, height = 0;
  std::vector<float> mse;
  double mean_mse = 0;
};

ErrorMap error_map(const ChannelImage& a, const ChannelImage& b);

// Worker cap from HADACODEC_THREADS (0/unset = hardware concurrency).
int render_thread_count();

}  // namespace hadacodec
