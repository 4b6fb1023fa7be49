#include "hadacodec/renderer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/rng.hpp"

namespace hadacodec {

namespace {

constexpr double kRayEpsilon = 1e-4;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

// --- small vector helpers (geometry stays in double precision) -------------

Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
double length(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalize(const Vec3& a) {
  const double len = length(a);
  if (len <= 0.0) throw std::invalid_argument("renderer: zero-length vector");
  return a * (1.0 / len);
}

struct Ray {
  Vec3 o, d;  // d normalized
};

struct CameraFrame {
  Vec3 origin, right, up, forward;
  double tan_half = 0, aspect = 1;
};

CameraFrame camera_frame(const Camera& cam, int width, int height) {
  CameraFrame f;
  f.origin = cam.position;
  f.forward = normalize(cam.look_at - cam.position);
  f.right = normalize(cross(f.forward, cam.up));
  f.up = cross(f.right, f.forward);
  f.tan_half = std::tan(cam.vfov_degrees * 3.14159265358979323846 / 360.0);
  f.aspect = static_cast<double>(width) / height;
  return f;
}

Ray camera_ray(const CameraFrame& f, double px, double py, int width,
               int height) {
  const double u = (2.0 * px / width - 1.0) * f.tan_half * f.aspect;
  const double v = (1.0 - 2.0 * py / height) * f.tan_half;
  return {f.origin, normalize(f.forward + f.right * u + f.up * v)};
}

struct Hit {
  double t = kInfinity;
  Vec3 p, n;          // geometric normal, unit length
  int prim = -1;      // stable primitive id (shared across modes)
  int material = -1;  // >= 0 for surfaces
  int light = -1;     // >= 0 for emitters
};

// --- compiled scene ----------------------------------------------------------

struct LightGeom {
  Vec3 corner, eu, ev, n;  // n unit (eu x ev direction)
  double area = 0;
};

struct WallGeom {
  int axis = 0;       // 0=x, 1=y, 2=z
  double plane = 0;   // coordinate on that axis
  double lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;  // bounds on the other two axes
  Vec3 n;             // inward-facing
  int material = -1;  // -1 disables the wall
};

// Per-mode channel vectors for every material/emitter plus geometry caches.
struct CompiledScene {
  int channels = 0;
  std::uint64_t eval_unit = 0;             // shading units per surface event
  std::vector<float> luma;                 // per channel; luma(ones) == 1
  std::vector<std::vector<float>> albedo;  // per material
  std::vector<std::vector<float>> emission;  // per light
  std::array<WallGeom, 6> walls;
  const std::vector<SceneObject>* objects = nullptr;
  std::vector<LightGeom> lights;
  CameraFrame cam_frame;
};

std::vector<float> curve_to_floats(const SpectralCurve& c, double gain) {
  std::vector<float> out(static_cast<std::size_t>(kSampleCount));
  for (int i = 0; i < kSampleCount; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<float>(c[i] * gain);
  }
  return out;
}

std::vector<float> code_to_floats(const EffectiveWeights& eff,
                                  const SpectralCurve& c, double gain) {
  const LatentCode z = encode(eff, c);
  std::vector<float> out(static_cast<std::size_t>(z.k()));
  for (int i = 0; i < z.k(); ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<float>(z[i] * gain);
  }
  return out;
}

std::vector<float> reflectance_to_rgb(const SpectralCurve& r) {
  ColorTriple xyz = xyz_of_reflectance(r);
  for (int c = 0; c < 3; ++c) xyz[c] /= 100.0;
  const ColorTriple rgb = xyz_to_linear_rgb(xyz);
  std::vector<float> out(3);
  for (int c = 0; c < 3; ++c) {
    out[static_cast<std::size_t>(c)] =
        static_cast<float>(std::clamp(rgb[c], 0.0, 1.0));
  }
  return out;
}

std::vector<float> emission_to_rgb(const SpectralCurve& spd, double gain) {
  const ColorTriple rgb = xyz_to_linear_rgb(spectrum_to_xyz(spd));
  std::vector<float> out(3);
  for (int c = 0; c < 3; ++c) {
    out[static_cast<std::size_t>(c)] =
        static_cast<float>(std::max(rgb[c], 0.0) * gain);
  }
  return out;
}

void build_walls(const Scene& scene, CompiledScene* cs) {
  const Vec3& a = scene.box_min;
  const Vec3& b = scene.box_max;
  // left, right, floor, ceiling, back, front; normals face the interior.
  cs->walls[0] = {0, a.x, a.y, b.y, a.z, b.z, {1, 0, 0}, scene.wall_material[0]};
  cs->walls[1] = {0, b.x, a.y, b.y, a.z, b.z, {-1, 0, 0}, scene.wall_material[1]};
  cs->walls[2] = {1, a.y, a.x, b.x, a.z, b.z, {0, 1, 0}, scene.wall_material[2]};
  cs->walls[3] = {1, b.y, a.x, b.x, a.z, b.z, {0, -1, 0}, scene.wall_material[3]};
  cs->walls[4] = {2, a.z, a.x, b.x, a.y, b.y, {0, 0, 1}, scene.wall_material[4]};
  cs->walls[5] = {2, b.z, a.x, b.x, a.y, b.y, {0, 0, -1}, scene.wall_material[5]};
}

CompiledScene compile_scene(const Scene& scene, RenderMode mode,
                            const CodecWeights* codec) {
  CompiledScene cs;
  const int material_count = static_cast<int>(scene.materials.size());
  for (int w = 0; w < 6; ++w) {
    if (scene.wall_material[w] >= material_count) {
      throw std::invalid_argument("renderer: wall references missing material");
    }
  }
  for (const auto& obj : scene.objects) {
    if (obj.material < 0 || obj.material >= material_count) {
      throw std::invalid_argument(
          "renderer: object references missing material");
    }
  }

  EffectiveWeights eff;
  if (mode == RenderMode::latent) {
    if (codec == nullptr) {
      throw std::invalid_argument("renderer: latent mode requires a codec");
    }
    validate(*codec);
    eff = effective_weights(*codec);
  }

  switch (mode) {
    case RenderMode::spectral:
      cs.channels = kSampleCount;
      cs.eval_unit = kSampleCount;
      break;
    case RenderMode::latent:
      cs.channels = eff.k;
      cs.eval_unit = static_cast<std::uint64_t>(eff.k / 3);
      break;
    case RenderMode::rgb:
      cs.channels = 3;
      cs.eval_unit = 1;
      break;
  }

  for (const auto& m : scene.materials) {
    switch (mode) {
      case RenderMode::spectral:
        cs.albedo.push_back(curve_to_floats(m, 1.0));
        break;
      case RenderMode::latent:
        cs.albedo.push_back(code_to_floats(eff, m, 1.0));
        break;
      case RenderMode::rgb:
        cs.albedo.push_back(reflectance_to_rgb(m));
        break;
    }
  }
  for (const auto& l : scene.lights) {
    switch (mode) {
      case RenderMode::spectral:
        cs.emission.push_back(curve_to_floats(l.spd, l.scale));
        break;
      case RenderMode::latent:
        cs.emission.push_back(code_to_floats(eff, l.spd, l.scale));
        break;
      case RenderMode::rgb:
        cs.emission.push_back(emission_to_rgb(l.spd, l.scale));
        break;
    }
    LightGeom g;
    g.corner = l.corner;
    g.eu = l.edge_u;
    g.ev = l.edge_v;
    const Vec3 c = cross(l.edge_u, l.edge_v);
    g.area = length(c);
    if (g.area <= 0.0) {
      throw std::invalid_argument("renderer: degenerate light parallelogram");
    }
    g.n = c * (1.0 / g.area);
    cs.lights.push_back(g);
  }

  // Throughput luminance row, normalized so the all-ones vector has luma 1.
  cs.luma.assign(static_cast<std::size_t>(cs.channels), 0.0f);
  const CmfTable& t = CmfTable::instance();
  if (mode == RenderMode::spectral) {
    double total = 0.0;
    for (int i = 0; i < kSampleCount; ++i) total += t.ybar()[i];
    for (int i = 0; i < kSampleCount; ++i) {
      cs.luma[static_cast<std::size_t>(i)] =
          static_cast<float>(t.ybar()[i] / total);
    }
  } else if (mode == RenderMode::latent) {
    std::vector<double> col(static_cast<std::size_t>(eff.k), 0.0);
    double total = 0.0;
    for (int i = 0; i < kSampleCount; ++i) {
      for (int j = 0; j < eff.k; ++j) {
        col[static_cast<std::size_t>(j)] +=
            t.ybar()[i] * eff.dec[static_cast<std::size_t>(i) * eff.k + j];
      }
    }
    for (double v : col) total += v;
    if (total <= 0.0) total = 1.0;
    for (int j = 0; j < eff.k; ++j) {
      cs.luma[static_cast<std::size_t>(j)] =
          static_cast<float>(col[static_cast<std::size_t>(j)] / total);
    }
  } else {
    cs.luma = {0.2126f, 0.7152f, 0.0722f};
  }

  build_walls(scene, &cs);
  cs.objects = &scene.objects;
  return cs;
}

// Restrict a latent compile to one 3-channel render pass.
CompiledScene slice_pass(const CompiledScene& full, int pass) {
  CompiledScene cs = full;
  cs.channels = 3;
  cs.eval_unit = 1;
  cs.luma = {1.0f / 3.0f, 1.0f / 3.0f, 1.0f / 3.0f};
  const std::size_t off = static_cast<std::size_t>(pass) * 3;
  for (auto& a : cs.albedo) a = {a[off], a[off + 1], a[off + 2]};
  for (auto& e : cs.emission) e = {e[off], e[off + 1], e[off + 2]};
  return cs;
}

// --- intersection -----------------------------------------------------------

bool hit_wall(const WallGeom& w, const Ray& ray, double t_min, double t_max,
              Hit* hit) {
  if (w.material < 0) return false;
  const double o = w.axis == 0 ? ray.o.x : (w.axis == 1 ? ray.o.y : ray.o.z);
  const double d = w.axis == 0 ? ray.d.x : (w.axis == 1 ? ray.d.y : ray.d.z);
  if (std::abs(d) < 1e-12) return false;
  const double t = (w.plane - o) / d;
  if (t <= t_min || t >= t_max || t >= hit->t) return false;
  const Vec3 p = ray.o + ray.d * t;
  const double u = w.axis == 0 ? p.y : p.x;
  const double v = w.axis == 2 ? p.y : p.z;
  if (u < w.lo0 || u > w.hi0 || v < w.lo1 || v > w.hi1) return false;
  hit->t = t;
  hit->p = p;
  hit->n = w.n;
  hit->material = w.material;
  hit->light = -1;
  return true;
}

bool hit_sphere(const SceneObject& s, const Ray& ray, double t_min,
                double t_max, Hit* hit) {
  const Vec3 oc = ray.o - s.center;
  const double b = dot(oc, ray.d);
  const double c = dot(oc, oc) - s.radius * s.radius;
  const double disc = b * b - c;
  if (disc < 0.0) return false;
  const double sq = std::sqrt(disc);
  double t = -b - sq;
  if (t <= t_min) t = -b + sq;
  if (t <= t_min || t >= t_max || t >= hit->t) return false;
  hit->t = t;
  hit->p = ray.o + ray.d * t;
  hit->n = (hit->p - s.center) * (1.0 / s.radius);
  hit->material = s.material;
  hit->light = -1;
  return true;
}

bool hit_block(const SceneObject& blk, const Ray& ray, double t_min,
               double t_max, Hit* hit) {
  double t0 = t_min, t1 = std::min(t_max, hit->t);
  int axis_near = -1;
  const double o[3] = {ray.o.x, ray.o.y, ray.o.z};
  const double d[3] = {ray.d.x, ray.d.y, ray.d.z};
  const double lo[3] = {blk.box_min.x, blk.box_min.y, blk.box_min.z};
  const double hi[3] = {blk.box_max.x, blk.box_max.y, blk.box_max.z};
  for (int a = 0; a < 3; ++a) {
    if (d[a] == 0.0) {
      if (o[a] < lo[a] || o[a] > hi[a]) return false;
      continue;
    }
    const double inv = 1.0 / d[a];
    double ta = (lo[a] - o[a]) * inv;
    double tb = (hi[a] - o[a]) * inv;
    if (ta > tb) std::swap(ta, tb);
    if (ta > t0) {
      t0 = ta;
      axis_near = a;
    }
    t1 = std::min(t1, tb);
    if (t0 >= t1) return false;
  }
  if (axis_near < 0) return false;  // origin inside: treat as miss
  hit->t = t0;
  hit->p = ray.o + ray.d * t0;
  Vec3 n{0, 0, 0};
  const double sign = d[axis_near] > 0.0 ? -1.0 : 1.0;
  if (axis_near == 0) n.x = sign;
  if (axis_near == 1) n.y = sign;
  if (axis_near == 2) n.z = sign;
  hit->n = n;
  hit->material = blk.material;
  hit->light = -1;
  return true;
}

bool hit_light(const LightGeom& l, const Ray& ray, double t_min, double t_max,
               Hit* hit) {
  const double denom = dot(ray.d, l.n);
  if (std::abs(denom) < 1e-12) return false;
  const double t = dot(l.corner - ray.o, l.n) / denom;
  if (t <= t_min || t >= t_max || t >= hit->t) return false;
  const Vec3 q = ray.o + ray.d * t - l.corner;
  const double uu = dot(l.eu, l.eu), uv = dot(l.eu, l.ev),
               vv = dot(l.ev, l.ev);
  const double qu = dot(q, l.eu), qv = dot(q, l.ev);
  const double det = uu * vv - uv * uv;
  const double u = (vv * qu - uv * qv) / det;
  const double v = (uu * qv - uv * qu) / det;
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return false;
  hit->t = t;
  hit->p = ray.o + ray.d * t;
  hit->n = l.n;
  hit->material = -1;
  return true;
}

// Primitive ids: walls 0..5, then objects, then lights; stable across modes.
bool intersect(const CompiledScene& cs, const Ray& ray, double t_min,
               double t_max, Hit* hit) {
  hit->t = kInfinity;
  hit->prim = -1;
  for (int w = 0; w < 6; ++w) {
    if (hit_wall(cs.walls[static_cast<std::size_t>(w)], ray, t_min, t_max,
                 hit)) {
      hit->prim = w;
    }
  }
  for (std::size_t i = 0; i < cs.objects->size(); ++i) {
    const SceneObject& obj = (*cs.objects)[i];
    const bool got = obj.kind == SceneObject::Kind::sphere
                         ? hit_sphere(obj, ray, t_min, t_max, hit)
                         : hit_block(obj, ray, t_min, t_max, hit);
    if (got) hit->prim = 6 + static_cast<int>(i);
  }
  for (std::size_t i = 0; i < cs.lights.size(); ++i) {
    if (hit_light(cs.lights[i], ray, t_min, t_max, hit)) {
      hit->prim = 6 + static_cast<int>(cs.objects->size() + i);
      hit->light = static_cast<int>(i);
    }
  }
  return hit->prim >= 0;
}

bool occluded(const CompiledScene& cs, const Ray& ray, double t_max) {
  Hit hit;
  return intersect(cs, ray, kRayEpsilon, t_max, &hit);
}

// --- path kernel --------------------------------------------------------------

void hash_hit(std::uint64_t* h, const Hit& hit) {
  *h = fnv1a64(&hit.p.x, sizeof(double), *h);
  *h = fnv1a64(&hit.p.y, sizeof(double), *h);
  *h = fnv1a64(&hit.p.z, sizeof(double), *h);
  const std::uint32_t prim = static_cast<std::uint32_t>(hit.prim);
  *h = fnv1a64(&prim, sizeof(prim), *h);
}

float luma_of(const CompiledScene& cs, const std::vector<float>& thr) {
  float acc = 0.0f;
  for (int c = 0; c < cs.channels; ++c) {
    acc += cs.luma[static_cast<std::size_t>(c)] *
           thr[static_cast<std::size_t>(c)];
  }
  return acc;
}

// Traces every sample of one pixel; accumulates in double.
void render_pixel(const CompiledScene& cs, const RenderJob& job,
                  const CameraFrame& frame, int x, int y,
                  std::vector<double>* accum, std::uint64_t* evals,
                  std::uint64_t* hash_out) {
  const int C = cs.channels;
  std::vector<float> thr(static_cast<std::size_t>(C));
  std::vector<float> rad(static_cast<std::size_t>(C));
  std::fill(accum->begin(), accum->end(), 0.0);
  std::uint64_t pixel_hash = 0xcbf29ce484222325ull;

  for (int s = 0; s < job.spp; ++s) {
    Rng geo = Rng::pixel_stream(job.seed, x, y, s, 0);
    Rng rr = Rng::pixel_stream(job.seed, x, y, s, 1);
    const double jx = geo.uniform();
    const double jy = geo.uniform();
    Ray ray = camera_ray(frame, x + jx, y + jy, job.width, job.height);

    std::fill(thr.begin(), thr.end(), 1.0f);
    std::fill(rad.begin(), rad.end(), 0.0f);

    for (int depth = 0;; ++depth) {
      Hit hit;
      if (!intersect(cs, ray, kRayEpsilon, kInfinity, &hit)) break;
      if (job.collect_path_hashes) hash_hit(&pixel_hash, hit);

      if (hit.light >= 0) {
        // One-sided emitter, seen directly by the camera only; all indirect
        // transport goes through next-event estimation.
        if (depth == 0 && dot(ray.d, hit.n) < 0.0) {
          const auto& le = cs.emission[static_cast<std::size_t>(hit.light)];
          for (int c = 0; c < C; ++c) {
            rad[static_cast<std::size_t>(c)] +=
                thr[static_cast<std::size_t>(c)] *
                le[static_cast<std::size_t>(c)];
          }
        }
        break;
      }

      if (job.max_depth >= 0 && depth >= job.max_depth) break;

      *evals += cs.eval_unit;
      const Vec3 n_sh = dot(hit.n, ray.d) < 0.0 ? hit.n : hit.n * -1.0;
      const auto& albedo = cs.albedo[static_cast<std::size_t>(hit.material)];

      // Next-event estimation: one uniform area sample on one uniformly
      // chosen light.
      if (!cs.lights.empty()) {
        const std::uint32_t li =
            geo.index(static_cast<std::uint32_t>(cs.lights.size()));
        const double lu = geo.uniform();
        const double lv = geo.uniform();
        const LightGeom& lg = cs.lights[li];
        const Vec3 lp = lg.corner + lg.eu * lu + lg.ev * lv;
        const Vec3 d = lp - hit.p;
        const double dist2 = dot(d, d);
        const double dist = std::sqrt(dist2);
        if (dist > kRayEpsilon) {
          const Vec3 wi = d * (1.0 / dist);
          const double cos_s = dot(n_sh, wi);
          const double cos_l = -dot(lg.n, wi);
          if (cos_s > 0.0 && cos_l > 0.0 &&
              !occluded(cs, {hit.p, wi}, dist - kRayEpsilon)) {
            const double geom = cos_s * cos_l / dist2 * lg.area *
                                static_cast<double>(cs.lights.size()) /
                                3.14159265358979323846;
            const float w = static_cast<float>(geom);
            const auto& le = cs.emission[li];
            for (int c = 0; c < C; ++c) {
              rad[static_cast<std::size_t>(c)] +=
                  thr[static_cast<std::size_t>(c)] *
                  albedo[static_cast<std::size_t>(c)] *
                  le[static_cast<std::size_t>(c)] * w;
            }
          }
        }
      }

      if (job.max_depth >= 0 && depth + 1 >= job.max_depth) break;

      // Cosine-weighted continuation; the cos/pi factors cancel against the
      // Lambertian BSDF so throughput picks up the bare albedo.
      const double u1 = geo.uniform();
      const double u2 = geo.uniform();
      const double r = std::sqrt(u1);
      const double phi = 2.0 * 3.14159265358979323846 * u2;
      const Vec3 tangent = std::abs(n_sh.x) > 0.9
                               ? normalize(cross({0, 1, 0}, n_sh))
                               : normalize(cross({1, 0, 0}, n_sh));
      const Vec3 bitangent = cross(n_sh, tangent);
      const Vec3 dir = normalize(tangent * (r * std::cos(phi)) +
                                 bitangent * (r * std::sin(phi)) +
                                 n_sh * std::sqrt(std::max(0.0, 1.0 - u1)));
      for (int c = 0; c < C; ++c) {
        thr[static_cast<std::size_t>(c)] *=
            albedo[static_cast<std::size_t>(c)];
      }

      if (job.max_depth < 0 && depth >= 5) {
        const float q =
            std::clamp(luma_of(cs, thr), 0.05f, 1.0f);
        if (rr.uniform() >= static_cast<double>(q)) break;
        const float inv_q = 1.0f / q;
        for (int c = 0; c < C; ++c) {
          thr[static_cast<std::size_t>(c)] *= inv_q;
        }
      }

      ray = {hit.p, dir};
    }

    for (int c = 0; c < C; ++c) {
      (*accum)[static_cast<std::size_t>(c)] +=
          static_cast<double>(rad[static_cast<std::size_t>(c)]);
    }
  }
  if (hash_out != nullptr) *hash_out = pixel_hash;
}

ChannelImage render_compiled(const CompiledScene& cs, const RenderJob& job) {
  if (job.width <= 0 || job.height <= 0 || job.spp <= 0 ||
      job.max_depth < -1) {
    throw std::invalid_argument("renderer: invalid render job");
  }
  ChannelImage img;
  img.width = job.width;
  img.height = job.height;
  img.channels = cs.channels;
  img.data.assign(static_cast<std::size_t>(job.width) * job.height *
                      cs.channels,
                  0.0f);
  if (job.collect_path_hashes) {
    img.path_hashes.assign(static_cast<std::size_t>(job.width) * job.height,
                           0);
  }

  std::atomic<int> next_row{0};
  std::atomic<std::uint64_t> total_evals{0};
  const int thread_count = std::min(render_thread_count(), job.height);
  const CameraFrame cam = cs.cam_frame;

  const auto worker = [&]() {
    std::vector<double> accum(static_cast<std::size_t>(cs.channels));
    std::uint64_t evals = 0;
    for (;;) {
      const int y = next_row.fetch_add(1);
      if (y >= job.height) break;
      for (int x = 0; x < job.width; ++x) {
        std::uint64_t hash = 0;
        render_pixel(cs, job, cam, x, y, &accum, &evals,
                     job.collect_path_hashes ? &hash : nullptr);
        const double inv_spp = 1.0 / job.spp;
        for (int c = 0; c < cs.channels; ++c) {
          img.at(x, y, c) = static_cast<float>(
              accum[static_cast<std::size_t>(c)] * inv_spp);
        }
        if (job.collect_path_hashes) {
          img.path_hashes[static_cast<std::size_t>(y) * job.width + x] = hash;
        }
      }
    }
    total_evals.fetch_add(evals);
  };

  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  img.shading_evals = total_evals.load();
  return img;
}

}  // namespace

int render_thread_count() {
  const char* env = std::getenv("HADACODEC_THREADS");
  int n = 0;
  if (env != nullptr) n = std::atoi(env);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(n, 1);
}

ChannelImage render(const Scene& scene, const RenderJob& job,
                    const CodecWeights* codec) {
  CompiledScene cs = compile_scene(scene, job.mode, codec);
  cs.cam_frame = camera_frame(scene.camera, job.width, job.height);
  return render_compiled(cs, job);
}

ChannelImage render_latent_multipass(const Scene& scene, const RenderJob& job,
                                     const CodecWeights& codec) {
  RenderJob pass_job = job;
  pass_job.mode = RenderMode::latent;
  CompiledScene full = compile_scene(scene, RenderMode::latent, &codec);
  full.cam_frame = camera_frame(scene.camera, job.width, job.height);
  const int blocks = codec.blocks();

  ChannelImage out;
  out.width = job.width;
  out.height = job.height;
  out.channels = full.channels;
  out.data.assign(static_cast<std::size_t>(job.width) * job.height *
                      full.channels,
                  0.0f);
  for (int b = 0; b < blocks; ++b) {
    CompiledScene pass = slice_pass(full, b);
    const ChannelImage img = render_compiled(pass, pass_job);
    for (int y = 0; y < job.height; ++y) {
      for (int x = 0; x < job.width; ++x) {
        for (int c = 0; c < 3; ++c) {
          out.at(x, y, 3 * b + c) = img.at(x, y, c);
        }
      }
    }
    out.shading_evals += img.shading_evals;
    if (job.collect_path_hashes && b == 0) out.path_hashes = img.path_hashes;
  }
  return out;
}

ChannelImage decode_image(const ChannelImage& latent, const CodecWeights& w) {
  validate(w);
  if (latent.channels != w.k) {
    throw std::invalid_argument(
        "decode_image: channel count does not match codec dimension");
  }
  const EffectiveWeights eff = effective_weights(w);
  ChannelImage out;
  out.width = latent.width;
  out.height = latent.height;
  out.channels = kSampleCount;
  out.data.assign(static_cast<std::size_t>(latent.width) * latent.height *
                      kSampleCount,
                  0.0f);
  out.shading_evals = latent.shading_evals;
  out.path_hashes = latent.path_hashes;
  for (int y = 0; y < latent.height; ++y) {
    for (int x = 0; x < latent.width; ++x) {
      for (int i = 0; i < kSampleCount; ++i) {
        double acc = 0.0;
        const double* row = &eff.dec[static_cast<std::size_t>(i) * eff.k];
        for (int j = 0; j < w.k; ++j) {
          acc += row[j] * static_cast<double>(latent.at(x, y, j));
        }
        out.at(x, y, i) = static_cast<float>(acc);
      }
    }
  }
  return out;
}

ChannelImage image_to_linear_rgb(const ChannelImage& img) {
  if (img.channels == 3) return img;
  if (img.channels != kSampleCount) {
    throw std::invalid_argument(
        "image_to_linear_rgb: expected 3 or 47 channels (decode latent images "
        "first)");
  }
  ChannelImage out;
  out.width = img.width;
  out.height = img.height;
  out.channels = 3;
  out.data.assign(static_cast<std::size_t>(img.width) * img.height * 3, 0.0f);
  out.shading_evals = img.shading_evals;
  out.path_hashes = img.path_hashes;
  SpectralCurve s;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int i = 0; i < kSampleCount; ++i) {
        s[i] = static_cast<double>(img.at(x, y, i));
      }
      const ColorTriple rgb = xyz_to_linear_rgb(spectrum_to_xyz(s));
      for (int c = 0; c < 3; ++c) {
        out.at(x, y, c) = static_cast<float>(rgb[c]);
      }
    }
  }
  return out;
}

double exposure_for(const ChannelImage& img, double percentile) {
  if (img.channels != 3 && img.channels != kSampleCount) {
    throw std::invalid_argument(
        "exposure_for: expected 3 or 47 channels (decode latent images "
        "first)");
  }
  const CmfTable& t = CmfTable::instance();
  std::vector<double> lum;
  lum.reserve(static_cast<std::size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double v = 0.0;
      if (img.channels == 3) {
        v = 0.2126 * img.at(x, y, 0) + 0.7152 * img.at(x, y, 1) +
            0.0722 * img.at(x, y, 2);
      } else {
        for (int i = 0; i < kSampleCount; ++i) {
          v += t.ybar()[i] * static_cast<double>(img.at(x, y, i));
        }
        v *= kLambdaStep;
      }
      lum.push_back(v);
    }
  }
  std::sort(lum.begin(), lum.end());
  const double rank = percentile / 100.0 * static_cast<double>(lum.size());
  std::size_t idx = static_cast<std::size_t>(std::ceil(rank));
  idx = idx == 0 ? 0 : idx - 1;
  idx = std::min(idx, lum.size() - 1);
  const double ref = lum[idx];
  return ref > 1e-12 ? 1.0 / ref : 1.0;
}

std::vector<unsigned char> tonemap_srgb8(const ChannelImage& linear_rgb,
                                         double exposure) {
  if (linear_rgb.channels != 3) {
    throw std::invalid_argument("tonemap_srgb8: expected a 3-channel image");
  }
  std::vector<unsigned char> out(static_cast<std::size_t>(linear_rgb.width) *
                                 linear_rgb.height * 3);
  std::size_t idx = 0;
  for (int y = 0; y < linear_rgb.height; ++y) {
    for (int x = 0; x < linear_rgb.width; ++x) {
      for (int c = 0; c < 3; ++c) {
        const double v = std::clamp(
            static_cast<double>(linear_rgb.at(x, y, c)) * exposure, 0.0, 1.0);
        out[idx++] =
            static_cast<unsigned char>(srgb_encode(v) * 255.0 + 0.5);
      }
    }
  }
  return out;
}

ErrorMap error_map(const ChannelImage& a, const ChannelImage& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("error_map: image sizes differ");
  }
  const ChannelImage ra = image_to_linear_rgb(a);
  const ChannelImage rb = image_to_linear_rgb(b);
  ErrorMap em;
  em.width = a.width;
  em.height = a.height;
  em.mse.assign(static_cast<std::size_t>(a.width) * a.height, 0.0f);
  double total = 0.0;
  for (int y = 0; y < a.height; ++y) {
    for (int x = 0; x < a.width; ++x) {
      double acc = 0.0;
      for (int c = 0; c < 3; ++c) {
        const double d = static_cast<double>(ra.at(x, y, c)) -
                         static_cast<double>(rb.at(x, y, c));
        acc += d * d;
      }
      acc /= 3.0;
      em.mse[static_cast<std::size_t>(y) * a.width + x] =
          static_cast<float>(acc);
      total += acc;
    }
  }
  em.mean_mse = total / (static_cast<double>(a.width) * a.height);
  return em;
}

}  // namespace hadacodec
