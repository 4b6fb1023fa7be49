#include "hadacodec/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/rng.hpp"

namespace hadacodec {

namespace {

double percentile_nearest_rank(std::vector<double> v, double p) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const double rank = p / 100.0 * static_cast<double>(v.size());
  std::size_t idx = static_cast<std::size_t>(std::ceil(rank));
  idx = idx == 0 ? 0 : idx - 1;
  return v[std::min(idx, v.size() - 1)];
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

}  // namespace

std::vector<BounceChainResult> multibounce_eval(const CodecWeights& w,
                                                const Dataset& ds, int bounces,
                                                int pairs, std::uint64_t seed) {
  validate(w);
  if (bounces < 1 || pairs < 1) {
    throw std::invalid_argument("multibounce_eval: bounces and pairs must be positive");
  }
  const EffectiveWeights eff = effective_weights(w);
  const auto refl = ds.pool(SpectrumKind::reflectance, Split::test);
  const auto illum = ds.pool(SpectrumKind::illumination, Split::test);
  if (refl.empty() || illum.empty()) {
    throw std::runtime_error("multibounce_eval: empty test split");
  }

  Rng rng = Rng::stream(seed, "eval.multibounce");
  const ColorTriple white_d65 = CmfTable::instance().white_xyz();

  std::vector<std::vector<double>> de(static_cast<std::size_t>(bounces));
  for (int p = 0; p < pairs; ++p) {
    const SpectralCurve& light =
        *illum[rng.index(static_cast<std::uint32_t>(illum.size()))];
    SpectralCurve s_gt = light;
    LatentCode z = encode(eff, light);
    for (int b = 1; b <= bounces; ++b) {
      const SpectralCurve& r =
          *refl[rng.index(static_cast<std::uint32_t>(refl.size()))];
      s_gt = hadamard(r, s_gt);
      const LatentCode zr = encode(eff, r);
      for (int j = 0; j < w.k; ++j) z[j] *= zr[j];
      const SpectralCurve s_hat = decode(eff, z);

      // Shared white point: D65 chromaticity at the ground-truth chain's
      // luminance, so the metric is relative to the truth's energy level.
      const ColorTriple xyz_gt = spectrum_to_xyz(s_gt);
      const ColorTriple xyz_hat = spectrum_to_xyz(s_hat);
      const double y_white = std::max(xyz_gt[1], 1e-6);
      ColorTriple white = white_d65;
      const double scale = y_white / white_d65[1];
      for (int c = 0; c < 3; ++c) white[c] *= scale;
      const ColorTriple lab_gt = xyz_to_lab(xyz_gt, white);
      const ColorTriple lab_hat = xyz_to_lab(xyz_hat, white);
      de[static_cast<std::size_t>(b - 1)].push_back(
          delta_e94(lab_gt, lab_hat));
    }
  }

  std::vector<BounceChainResult> out;
  for (int b = 1; b <= bounces; ++b) {
    const auto& v = de[static_cast<std::size_t>(b - 1)];
    BounceChainResult r;
    r.bounce = b;
    r.mean_de94 = mean_of(v);
    r.median_de94 = percentile_nearest_rank(v, 50.0);
    r.p95_de94 = percentile_nearest_rank(v, 95.0);
    r.pairs = static_cast<int>(v.size());
    out.push_back(r);
  }
  return out;
}

double pass_count_ratio(int n, int k) {
  if (n <= 0 || k <= 0) {
    throw std::invalid_argument("pass_count_ratio: dimensions must be positive");
  }
  return 3.0 * static_cast<double>(n) / static_cast<double>(k);
}

PassCountReport pass_count_report(const Scene& scene, const RenderJob& job,
                                  const CodecWeights& codec) {
  PassCountReport report;
  report.config_ratio = pass_count_ratio(kSampleCount, codec.k);

  RenderJob spectral_job = job;
  spectral_job.mode = RenderMode::spectral;
  const ChannelImage spectral = render(scene, spectral_job);

  RenderJob latent_job = job;
  latent_job.mode = RenderMode::latent;
  const ChannelImage latent = render_latent_multipass(scene, latent_job, codec);

  report.spectral_evals = spectral.shading_evals;
  report.latent_evals = latent.shading_evals;
  report.measured_ratio =
      latent.shading_evals > 0
          ? static_cast<double>(spectral.shading_evals) /
                static_cast<double>(latent.shading_evals)
          : 0.0;
  return report;
}

SceneColorReport scene_color_report(const ChannelImage& ground_truth,
                                    const ChannelImage& test) {
  if (ground_truth.width != test.width ||
      ground_truth.height != test.height) {
    throw std::invalid_argument("scene_color_report: image sizes differ");
  }
  SceneColorReport report;
  report.exposure = exposure_for(ground_truth);
  const ChannelImage gt_rgb = image_to_linear_rgb(ground_truth);
  const ChannelImage test_rgb = image_to_linear_rgb(test);
  const ColorTriple white = srgb_reference_white();

  std::vector<double> des;
  des.reserve(static_cast<std::size_t>(gt_rgb.width) * gt_rgb.height);
  for (int y = 0; y < gt_rgb.height; ++y) {
    for (int x = 0; x < gt_rgb.width; ++x) {
      ColorTriple a, b;
      a.space = ColorSpace::LinearRGB;
      b.space = ColorSpace::LinearRGB;
      for (int c = 0; c < 3; ++c) {
        a[c] = static_cast<double>(gt_rgb.at(x, y, c)) * report.exposure;
        b[c] = static_cast<double>(test_rgb.at(x, y, c)) * report.exposure;
      }
      const ColorTriple lab_a = xyz_to_lab(linear_rgb_to_xyz(a), white);
      const ColorTriple lab_b = xyz_to_lab(linear_rgb_to_xyz(b), white);
      des.push_back(delta_e76(lab_a, lab_b));
    }
  }
  report.mean_de76 = mean_of(des);
  report.p95_de76 = percentile_nearest_rank(des, 95.0);
  report.mse = error_map(ground_truth, test).mean_mse;
  return report;
}

}  // namespace hadacodec
