// Command-line driver for the spectral codec pipeline: dataset synthesis,
// codec/upsampler training, encoding, rendering, and evaluation.

#include <array>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/evaluation.hpp"
#include "hadacodec/io.hpp"
#include "hadacodec/renderer.hpp"
#include "hadacodec/trainer.hpp"
#include "hadacodec/upsampler.hpp"

namespace hc = hadacodec;

namespace {

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

hc::Manifest make_manifest(const std::string& command,
                           const std::vector<std::uint64_t>& seeds,
                           const std::vector<std::string>& input_paths,
                           const std::vector<std::string>& output_paths) {
  hc::Manifest m;
  m.command = command;
  m.seeds = seeds;
  for (const auto& p : input_paths) {
    m.inputs.push_back({p, hex64(hc::hash_file(p))});
  }
  m.outputs = output_paths;
  return m;
}

hc::Dataset dataset_from_csv(const std::string& path) {
  hc::Dataset ds;
  for (auto& item : hc::read_dataset_csv(path)) {
    auto& dst = item.kind == hc::SpectrumKind::reflectance ? ds.reflectance
                                                           : ds.illumination;
    dst.push_back(std::move(item));
  }
  return ds;
}

hc::RenderMode mode_from_string(const std::string& s) {
  if (s == "spectral") return hc::RenderMode::spectral;
  if (s == "latent" || s == "latent-multipass") return hc::RenderMode::latent;
  if (s == "rgb") return hc::RenderMode::rgb;
  throw std::invalid_argument("unknown render mode '" + s + "'");
}

// Decodes latent images when a codec is at hand so they can be tonemapped or
// compared; passes spectral/RGB images through.
hc::ChannelImage displayable(const hc::ChannelImage& img,
                             const hc::CodecWeights* codec) {
  if (img.channels == 3 || img.channels == hc::kSampleCount) return img;
  if (codec == nullptr) {
    throw std::runtime_error(
        "image has " + std::to_string(img.channels) +
        " channels; pass --codec so it can be decoded first");
  }
  return hc::decode_image(img, *codec);
}

// ---------------------------------------------------------------------------

struct GenDatasetArgs {
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string munsell_path, lamps_path;
};

int run_gen_dataset(const GenDatasetArgs& a) {
  WallTimer timer;
  hc::DatasetBuildOptions opts;
  opts.seed = a.seed;
  if (!a.munsell_path.empty()) opts.munsell_path = a.munsell_path;
  if (!a.lamps_path.empty()) opts.lamp_spd_path = a.lamps_path;

  hc::DatasetBuildStats stats;
  const hc::Dataset ds = hc::build_dataset(opts, &stats);

  std::filesystem::create_directories(a.out_dir);
  const std::string csv_path =
      (std::filesystem::path(a.out_dir) / "dataset.csv").string();
  std::vector<hc::LabeledSpectrum> all = ds.reflectance;
  all.insert(all.end(), ds.illumination.begin(), ds.illumination.end());
  hc::write_dataset_csv(csv_path, all);

  std::vector<std::string> inputs;
  if (!a.munsell_path.empty()) inputs.push_back(a.munsell_path);
  if (!a.lamps_path.empty()) inputs.push_back(a.lamps_path);
  hc::Manifest m = make_manifest("gen-dataset", {a.seed}, inputs, {csv_path});
  m.extra["reflectance_total"] = std::to_string(stats.reflectance_total);
  m.extra["reflectance_train"] = std::to_string(stats.reflectance_train);
  m.extra["reflectance_test"] = std::to_string(stats.reflectance_test);
  m.extra["illumination_candidates"] =
      std::to_string(stats.illumination_candidates);
  m.extra["illumination_kept"] = std::to_string(stats.illumination_kept);
  m.extra["illumination_train"] = std::to_string(stats.illumination_train);
  m.extra["illumination_test"] = std::to_string(stats.illumination_test);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(
      (std::filesystem::path(a.out_dir) / "manifest.json").string(), m);

  std::cout << "dataset: " << stats.reflectance_total << " reflectances ("
            << stats.reflectance_train << " train / "
            << stats.reflectance_test << " test), "
            << stats.illumination_kept << " illuminations ("
            << stats.illumination_train << " train / "
            << stats.illumination_test << " test; "
            << stats.illumination_candidates << " before dedup)\n"
            << "wrote " << csv_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct TrainCodecArgs {
  std::string dataset_path, out_path, config_path, report_path;
  int k = 6;
  std::optional<std::uint64_t> seed;
};

int run_train_codec(const TrainCodecArgs& a) {
  WallTimer timer;
  hc::TrainConfig cfg;
  hc::LossWeights lw;
  if (!a.config_path.empty()) {
    hc::apply_train_config(hc::read_config_file(a.config_path), &cfg, &lw);
  }
  if (a.seed) cfg.seed = *a.seed;

  const hc::Dataset ds = dataset_from_csv(a.dataset_path);
  auto [weights, report] = hc::train_codec(ds, a.k, cfg, lw);
  hc::save_codec_weights(a.out_path, weights);
  if (!a.report_path.empty()) {
    hc::write_train_report_csv(a.report_path, report);
  }

  std::vector<std::string> inputs{a.dataset_path};
  if (!a.config_path.empty()) inputs.push_back(a.config_path);
  std::vector<std::string> outputs{a.out_path};
  if (!a.report_path.empty()) outputs.push_back(a.report_path);
  hc::Manifest m = make_manifest("train-codec", {cfg.seed}, inputs, outputs);
  m.extra["k"] = std::to_string(a.k);
  m.extra["epochs"] = std::to_string(report.epochs.size());
  m.extra["best_epoch"] = std::to_string(report.best_epoch);
  m.extra["best_val"] = std::to_string(report.best_val);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);

  std::cout << "trained k=" << a.k << " codec: " << report.epochs.size()
            << " epochs, best validation " << report.best_val << " at epoch "
            << report.best_epoch << "\nwrote " << a.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct GridSearchArgs {
  std::string dataset_path, out_path, config_path;
  int k = 6;
  int limit = 0;
  std::optional<std::uint64_t> seed;
};

int run_grid_search(const GridSearchArgs& a) {
  WallTimer timer;
  hc::TrainConfig cfg;
  hc::LossWeights base_lw;
  if (!a.config_path.empty()) {
    hc::apply_train_config(hc::read_config_file(a.config_path), &cfg,
                           &base_lw);
  }
  if (a.seed) cfg.seed = *a.seed;

  std::vector<hc::LossWeights> grid = hc::default_weight_grid();
  if (a.limit > 0 && a.limit < static_cast<int>(grid.size())) {
    grid.resize(static_cast<std::size_t>(a.limit));
  }

  const hc::Dataset ds = dataset_from_csv(a.dataset_path);
  hc::GridSearchOptions opts;
  opts.k = a.k;
  opts.eval_seed = cfg.seed;
  const auto entries = hc::grid_search(ds, grid, cfg, opts);
  hc::write_grid_search_csv(a.out_path, entries);

  std::vector<std::string> inputs{a.dataset_path};
  if (!a.config_path.empty()) inputs.push_back(a.config_path);
  hc::Manifest m = make_manifest("grid-search", {cfg.seed}, inputs,
                                 {a.out_path});
  m.extra["variants"] = std::to_string(entries.size());
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);

  for (const auto& e : entries) {
    if (e.rank <= 5) {
      std::cout << "rank " << e.rank << ": e2e=" << e.lw.e2e
                << " rec=" << e.lw.rec << " code=" << e.lw.code
                << " col=" << e.lw.col << " alg=" << e.lw.alg
                << "  mean dE94=" << e.de94_mean << "\n";
    }
  }
  std::cout << "wrote " << a.out_path << " (" << entries.size()
            << " variants)\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct TrainUpsamplerArgs {
  std::string dataset_path, codec_path, out_path, config_path, report_path;
  std::optional<std::uint64_t> seed;
};

int run_train_upsampler(const TrainUpsamplerArgs& a) {
  WallTimer timer;
  hc::UpsampleTrainConfig cfg;
  if (!a.config_path.empty()) {
    hc::apply_upsample_config(hc::read_config_file(a.config_path), &cfg);
  }
  if (a.seed) cfg.seed = *a.seed;

  const hc::Dataset ds = dataset_from_csv(a.dataset_path);
  const hc::CodecWeights codec = hc::load_codec_weights(a.codec_path);
  auto [weights, report] = hc::train_upsampler(ds, codec, cfg);
  hc::save_upsampler_weights(a.out_path, weights);
  if (!a.report_path.empty()) {
    hc::write_upsample_report_csv(a.report_path, report);
  }

  std::vector<std::string> inputs{a.dataset_path, a.codec_path};
  if (!a.config_path.empty()) inputs.push_back(a.config_path);
  std::vector<std::string> outputs{a.out_path};
  if (!a.report_path.empty()) outputs.push_back(a.report_path);
  hc::Manifest m =
      make_manifest("train-upsampler", {cfg.seed}, inputs, outputs);
  m.extra["train_samples"] = std::to_string(report.train_samples);
  m.extra["first_total"] = std::to_string(report.first_total);
  m.extra["final_total"] = std::to_string(report.final_total);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);

  std::cout << "trained upsampler on " << report.train_samples
            << " samples: loss " << report.first_total << " -> "
            << report.final_total << "\nwrote " << a.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct CodesArgs {
  std::string weights_path, in_path, out_path;
};

int run_encode(const CodesArgs& a) {
  WallTimer timer;
  const hc::CodecWeights w = hc::load_codec_weights(a.weights_path);
  const hc::EffectiveWeights eff = hc::effective_weights(w);
  const hc::SpectraCsv csv = hc::read_spectra_csv(a.in_path);

  std::vector<std::string> ids;
  std::vector<hc::LatentCode> codes;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const hc::SpectralCurve s =
        hc::resample(csv.wavelengths, csv.rows[r], /*zero_outside=*/true);
    codes.push_back(hc::encode(eff, s));
    ids.push_back(r < csv.ids.size() ? csv.ids[r] : "row" + std::to_string(r));
  }
  hc::write_codes_csv(a.out_path, ids, codes);

  hc::Manifest m = make_manifest("encode", {}, {a.weights_path, a.in_path},
                                 {a.out_path});
  m.extra["curves"] = std::to_string(codes.size());
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);
  std::cout << "encoded " << codes.size() << " curves\n";
  return 0;
}

int run_decode(const CodesArgs& a) {
  WallTimer timer;
  const hc::CodecWeights w = hc::load_codec_weights(a.weights_path);
  const hc::CodesCsv csv = hc::read_codes_csv(a.in_path);

  std::vector<hc::SpectralCurve> curves;
  for (const auto& z : csv.codes) {
    curves.push_back(hc::decode(w, z));
  }
  hc::write_spectra_csv(a.out_path, csv.ids, curves);

  hc::Manifest m = make_manifest("decode", {}, {a.weights_path, a.in_path},
                                 {a.out_path});
  m.extra["codes"] = std::to_string(curves.size());
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);
  std::cout << "decoded " << curves.size() << " codes\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct UpsampleArgs {
  std::string upsampler_path, in_path, out_path;
};

// Reads `id,r,g,b` (or `r,g,b`) rows of linear-sRGB coordinates.
void read_rgb_csv(const std::string& path, std::vector<std::string>* ids,
                  std::vector<std::array<double, 3>>* rgbs) {
  std::ifstream f(path);
  if (!f) throw hc::FormatError(path + ": cannot open for reading");
  std::string line;
  int lineno = 0;
  bool has_id = false;
  bool saw_header = false;
  while (std::getline(f, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) continue;
    std::vector<std::string> cells;
    std::string cur;
    for (char c : trimmed) {
      if (c == ',') {
        cells.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    cells.push_back(cur);
    if (!saw_header) {
      if (cells.size() == 4 && cells[0] == "id" && cells[1] == "r" &&
          cells[2] == "g" && cells[3] == "b") {
        has_id = true;
      } else if (cells.size() == 3 && cells[0] == "r" && cells[1] == "g" &&
                 cells[2] == "b") {
        has_id = false;
      } else {
        throw hc::FormatError(path + ":" + std::to_string(lineno) +
                              ": expected header id,r,g,b or r,g,b");
      }
      saw_header = true;
      continue;
    }
    const std::size_t expected = has_id ? 4 : 3;
    if (cells.size() != expected) {
      throw hc::FormatError(path + ":" + std::to_string(lineno) +
                            ": wrong cell count");
    }
    std::array<double, 3> rgb{};
    for (int c = 0; c < 3; ++c) {
      const std::string& cell = cells[(has_id ? 1 : 0) + c];
      std::size_t pos = 0;
      try {
        rgb[static_cast<std::size_t>(c)] = std::stod(cell, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != cell.size()) {
        throw hc::FormatError(path + ":" + std::to_string(lineno) +
                              ": bad number '" + cell + "'");
      }
    }
    ids->push_back(has_id ? cells[0]
                          : "row" + std::to_string(rgbs->size()));
    rgbs->push_back(rgb);
  }
  if (!saw_header) throw hc::FormatError(path + ": missing header");
}

int run_upsample(const UpsampleArgs& a) {
  WallTimer timer;
  const hc::UpsamplerWeights w = hc::load_upsampler_weights(a.upsampler_path);
  std::vector<std::string> ids;
  std::vector<std::array<double, 3>> rgbs;
  read_rgb_csv(a.in_path, &ids, &rgbs);

  std::uint64_t clamped = 0;
  std::vector<hc::LatentCode> codes;
  for (const auto& rgb : rgbs) {
    codes.push_back(hc::upsample(w, rgb, &clamped));
  }
  hc::write_codes_csv(a.out_path, ids, codes);
  if (clamped > 0) {
    std::cerr << "note: clamped " << clamped
              << " negative latent entries to zero\n";
  }

  hc::Manifest m = make_manifest("upsample", {},
                                 {a.upsampler_path, a.in_path}, {a.out_path});
  m.extra["rows"] = std::to_string(codes.size());
  m.extra["clamped_entries"] = std::to_string(clamped);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);
  std::cout << "upsampled " << codes.size() << " colours\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct RenderArgs {
  std::string scene_path, out_path, mode = "spectral";
  std::string codec_path, ppm_path;
  int width = 128, height = 128, spp = 64, max_depth = 3;
  std::uint64_t seed = 0;
  bool hashes = false;
};

int run_render(const RenderArgs& a) {
  WallTimer timer;
  const hc::Scene scene = hc::load_scene(a.scene_path);
  hc::RenderJob job;
  job.mode = mode_from_string(a.mode);
  job.width = a.width;
  job.height = a.height;
  job.spp = a.spp;
  job.max_depth = a.max_depth;
  job.seed = a.seed;
  job.collect_path_hashes = a.hashes;

  std::optional<hc::CodecWeights> codec;
  if (!a.codec_path.empty()) codec = hc::load_codec_weights(a.codec_path);
  if (job.mode == hc::RenderMode::latent && !codec) {
    throw std::runtime_error("latent render modes need --codec");
  }

  hc::ChannelImage img;
  if (a.mode == "latent-multipass") {
    img = hc::render_latent_multipass(scene, job, *codec);
  } else {
    img = hc::render(scene, job, codec ? &*codec : nullptr);
  }
  hc::write_raw_image(a.out_path, img);

  std::vector<std::string> outputs{a.out_path};
  if (!a.ppm_path.empty()) {
    const hc::ChannelImage shown =
        displayable(img, codec ? &*codec : nullptr);
    const hc::ChannelImage rgb = hc::image_to_linear_rgb(shown);
    hc::write_ppm(a.ppm_path, rgb.width, rgb.height,
                  hc::tonemap_srgb8(rgb, hc::exposure_for(shown)));
    outputs.push_back(a.ppm_path);
  }

  std::vector<std::string> inputs{a.scene_path};
  if (!a.codec_path.empty()) inputs.push_back(a.codec_path);
  hc::Manifest m = make_manifest("render", {a.seed}, inputs, outputs);
  m.extra["mode"] = a.mode;
  m.extra["width"] = std::to_string(a.width);
  m.extra["height"] = std::to_string(a.height);
  m.extra["spp"] = std::to_string(a.spp);
  m.extra["max_depth"] = std::to_string(a.max_depth);
  m.extra["shading_evals"] = std::to_string(img.shading_evals);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);

  std::cout << "rendered " << a.mode << " " << img.width << "x" << img.height
            << "x" << img.channels << ", " << img.shading_evals
            << " shading evals\nwrote " << a.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct ErrorMapArgs {
  std::string ref_path, test_path, out_path, codec_path;
};

int run_error_map(const ErrorMapArgs& a) {
  WallTimer timer;
  std::optional<hc::CodecWeights> codec;
  if (!a.codec_path.empty()) codec = hc::load_codec_weights(a.codec_path);
  const hc::CodecWeights* cw = codec ? &*codec : nullptr;
  const hc::ChannelImage ref = displayable(hc::read_raw_image(a.ref_path), cw);
  const hc::ChannelImage test =
      displayable(hc::read_raw_image(a.test_path), cw);
  const hc::ErrorMap em = hc::error_map(ref, test);

  hc::ChannelImage out;
  out.width = em.width;
  out.height = em.height;
  out.channels = 1;
  out.data = em.mse;
  hc::write_raw_image(a.out_path, out);

  std::vector<std::string> inputs{a.ref_path, a.test_path};
  if (!a.codec_path.empty()) inputs.push_back(a.codec_path);
  hc::Manifest m = make_manifest("error-map", {}, inputs, {a.out_path});
  m.extra["mean_mse"] = std::to_string(em.mean_mse);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(a.out_path + ".manifest.json", m);

  std::cout << "mean linear-sRGB MSE: " << em.mean_mse << "\nwrote "
            << a.out_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct EvalMultibounceArgs {
  std::string codec_path, dataset_path, out_path;
  int bounces = 3, pairs = 500;
  std::uint64_t seed = 0;
};

int run_eval_multibounce(const EvalMultibounceArgs& a) {
  WallTimer timer;
  const hc::CodecWeights w = hc::load_codec_weights(a.codec_path);
  const hc::Dataset ds = dataset_from_csv(a.dataset_path);
  const auto results =
      hc::multibounce_eval(w, ds, a.bounces, a.pairs, a.seed);

  for (const auto& r : results) {
    std::cout << "bounce " << r.bounce << ": mean dE94 " << r.mean_de94
              << ", median " << r.median_de94 << ", p95 " << r.p95_de94
              << " (" << r.pairs << " chains)\n";
  }

  if (!a.out_path.empty()) {
    std::ofstream f(a.out_path);
    if (!f) throw hc::FormatError(a.out_path + ": cannot open for writing");
    f << "bounce,mean_de94,median_de94,p95_de94,pairs\n";
    for (const auto& r : results) {
      f << r.bounce << ',' << r.mean_de94 << ',' << r.median_de94 << ','
        << r.p95_de94 << ',' << r.pairs << '\n';
    }
    hc::Manifest m = make_manifest("eval-multibounce", {a.seed},
                                   {a.codec_path, a.dataset_path},
                                   {a.out_path});
    m.extra["bounces"] = std::to_string(a.bounces);
    m.extra["pairs"] = std::to_string(a.pairs);
    m.wall_seconds = timer.seconds();
    hc::write_manifest(a.out_path + ".manifest.json", m);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ReportArgs {
  std::string scene_path, codec_path, out_dir;
  int width = 128, height = 128, spp = 64, max_depth = 3;
  std::uint64_t seed = 0;
};

int run_report(const ReportArgs& a) {
  WallTimer timer;
  const hc::Scene scene = hc::load_scene(a.scene_path);
  const hc::CodecWeights codec = hc::load_codec_weights(a.codec_path);
  std::filesystem::create_directories(a.out_dir);
  const auto in_dir = [&](const char* name) {
    return (std::filesystem::path(a.out_dir) / name).string();
  };

  hc::RenderJob job;
  job.width = a.width;
  job.height = a.height;
  job.spp = a.spp;
  job.max_depth = a.max_depth;
  job.seed = a.seed;

  job.mode = hc::RenderMode::spectral;
  const hc::ChannelImage gt = hc::render(scene, job);
  job.mode = hc::RenderMode::latent;
  const hc::ChannelImage latent =
      hc::render_latent_multipass(scene, job, codec);
  job.mode = hc::RenderMode::rgb;
  const hc::ChannelImage rgb = hc::render(scene, job);

  const hc::ChannelImage latent_decoded = hc::decode_image(latent, codec);
  const hc::SceneColorReport latent_vs_gt =
      hc::scene_color_report(gt, latent_decoded);
  const hc::SceneColorReport rgb_vs_gt = hc::scene_color_report(gt, rgb);
  const double measured_ratio =
      latent.shading_evals > 0
          ? static_cast<double>(gt.shading_evals) /
                static_cast<double>(latent.shading_evals)
          : 0.0;

  hc::write_raw_image(in_dir("gt_spectral.hcf"), gt);
  hc::write_raw_image(in_dir("latent.hcf"), latent);
  hc::write_raw_image(in_dir("rgb.hcf"), rgb);

  const double exposure = hc::exposure_for(gt);
  hc::write_ppm(in_dir("gt_spectral.ppm"), a.width, a.height,
                hc::tonemap_srgb8(hc::image_to_linear_rgb(gt), exposure));
  hc::write_ppm(in_dir("latent.ppm"), a.width, a.height,
                hc::tonemap_srgb8(hc::image_to_linear_rgb(latent_decoded),
                                  exposure));
  hc::write_ppm(in_dir("rgb.ppm"), a.width, a.height,
                hc::tonemap_srgb8(hc::image_to_linear_rgb(rgb), exposure));

  const std::string report_path = in_dir("report.txt");
  {
    std::ofstream f(report_path);
    if (!f) throw hc::FormatError(report_path + ": cannot open for writing");
    f << "scene: " << a.scene_path << "\n"
      << "render: " << a.width << "x" << a.height << ", " << a.spp
      << " spp, max depth " << a.max_depth << ", seed " << a.seed << "\n\n"
      << "latent (k=" << codec.k << ") vs spectral ground truth:\n"
      << "  mean dE76 " << latent_vs_gt.mean_de76 << ", p95 "
      << latent_vs_gt.p95_de76 << ", linear MSE " << latent_vs_gt.mse << "\n"
      << "rgb baseline vs spectral ground truth:\n"
      << "  mean dE76 " << rgb_vs_gt.mean_de76 << ", p95 "
      << rgb_vs_gt.p95_de76 << ", linear MSE " << rgb_vs_gt.mse << "\n\n"
      << "shading evals: spectral " << gt.shading_evals << ", latent "
      << latent.shading_evals << " (ratio " << measured_ratio
      << ", configured "
      << hc::pass_count_ratio(hc::kSampleCount, codec.k) << ")\n";
  }

  hc::Manifest m = make_manifest("report", {a.seed},
                                 {a.scene_path, a.codec_path},
                                 {report_path, in_dir("gt_spectral.hcf"),
                                  in_dir("latent.hcf"), in_dir("rgb.hcf")});
  m.extra["latent_mean_de76"] = std::to_string(latent_vs_gt.mean_de76);
  m.extra["rgb_mean_de76"] = std::to_string(rgb_vs_gt.mean_de76);
  m.extra["measured_ratio"] = std::to_string(measured_ratio);
  m.wall_seconds = timer.seconds();
  hc::write_manifest(in_dir("manifest.json"), m);

  std::cout << "latent mean dE76 " << latent_vs_gt.mean_de76
            << " vs rgb baseline " << rgb_vs_gt.mean_de76 << "\nwrote "
            << report_path << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

int run_dump_cmf(const std::string& out_path) {
  WallTimer timer;
  const hc::CmfTable& t = hc::CmfTable::instance();
  hc::write_spectra_csv(out_path,
                        {"xbar", "ybar", "zbar", "d65", "wx", "wy", "wz"},
                        {t.xbar(), t.ybar(), t.zbar(), t.d65(), t.wx(),
                         t.wy(), t.wz()});
  hc::Manifest m = make_manifest("dump-cmf", {}, {}, {out_path});
  m.wall_seconds = timer.seconds();
  hc::write_manifest(out_path + ".manifest.json", m);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral codec pipeline: datasets, training, rendering, "
               "evaluation"};
  app.require_subcommand(1);

  GenDatasetArgs gen;
  auto* cmd_gen = app.add_subcommand("gen-dataset",
                                     "Synthesize and split the dataset");
  cmd_gen->add_option("--out", gen.out_dir, "Output directory")->required();
  cmd_gen->add_option("--seed", gen.seed, "Dataset seed");
  cmd_gen->add_option("--munsell", gen.munsell_path,
                      "Measured reflectance CSV (replaces the stand-in)");
  cmd_gen->add_option("--lamps", gen.lamps_path, "Measured lamp SPD CSV");

  TrainCodecArgs tc;
  auto* cmd_tc = app.add_subcommand("train-codec", "Train codec weights");
  cmd_tc->add_option("--dataset", tc.dataset_path, "dataset.csv")->required();
  cmd_tc->add_option("--out", tc.out_path, "Output weights JSON")->required();
  cmd_tc->add_option("--k", tc.k, "Latent dimension (multiple of 3)");
  cmd_tc->add_option("--config", tc.config_path, "Training config file");
  cmd_tc->add_option("--seed", tc.seed, "Training seed (overrides config)");
  cmd_tc->add_option("--report", tc.report_path, "Per-epoch CSV log");

  GridSearchArgs gs;
  auto* cmd_gs = app.add_subcommand("grid-search",
                                    "Sweep loss weights, rank by dE94");
  cmd_gs->add_option("--dataset", gs.dataset_path, "dataset.csv")->required();
  cmd_gs->add_option("--out", gs.out_path, "Ranked results CSV")->required();
  cmd_gs->add_option("--k", gs.k, "Latent dimension");
  cmd_gs->add_option("--config", gs.config_path, "Training config file");
  cmd_gs->add_option("--limit", gs.limit,
                     "Evaluate only the first N grid points");
  cmd_gs->add_option("--seed", gs.seed, "Training seed (overrides config)");

  TrainUpsamplerArgs tu;
  auto* cmd_tu = app.add_subcommand("train-upsampler",
                                    "Train the RGB-to-latent network");
  cmd_tu->add_option("--dataset", tu.dataset_path, "dataset.csv")->required();
  cmd_tu->add_option("--codec", tu.codec_path, "Frozen codec weights")
      ->required();
  cmd_tu->add_option("--out", tu.out_path, "Output weights JSON")->required();
  cmd_tu->add_option("--config", tu.config_path, "Training config file");
  cmd_tu->add_option("--seed", tu.seed, "Training seed (overrides config)");
  cmd_tu->add_option("--report", tu.report_path, "Per-epoch CSV log");

  CodesArgs enc;
  auto* cmd_enc = app.add_subcommand("encode", "Spectra CSV -> codes CSV");
  cmd_enc->add_option("--codec", enc.weights_path, "Codec weights")
      ->required();
  cmd_enc->add_option("--in", enc.in_path, "Input spectra CSV")->required();
  cmd_enc->add_option("--out", enc.out_path, "Output codes CSV")->required();

  CodesArgs dec;
  auto* cmd_dec = app.add_subcommand("decode", "Codes CSV -> spectra CSV");
  cmd_dec->add_option("--codec", dec.weights_path, "Codec weights")
      ->required();
  cmd_dec->add_option("--in", dec.in_path, "Input codes CSV")->required();
  cmd_dec->add_option("--out", dec.out_path, "Output spectra CSV")
      ->required();

  UpsampleArgs up;
  auto* cmd_up = app.add_subcommand("upsample",
                                    "Linear-sRGB CSV -> codes CSV");
  cmd_up->add_option("--upsampler", up.upsampler_path, "Upsampler weights")
      ->required();
  cmd_up->add_option("--in", up.in_path, "Input CSV (id,r,g,b)")->required();
  cmd_up->add_option("--out", up.out_path, "Output codes CSV")->required();

  RenderArgs ren;
  auto* cmd_ren = app.add_subcommand("render", "Render a scene file");
  cmd_ren->add_option("--scene", ren.scene_path, "Scene file")->required();
  cmd_ren->add_option("--out", ren.out_path, "Output raw image")->required();
  cmd_ren
      ->add_option("--mode", ren.mode,
                   "spectral | latent | latent-multipass | rgb")
      ->check(CLI::IsMember(
          {"spectral", "latent", "latent-multipass", "rgb"}));
  cmd_ren->add_option("--codec", ren.codec_path,
                      "Codec weights (latent modes)");
  cmd_ren->add_option("--width", ren.width, "Image width");
  cmd_ren->add_option("--height", ren.height, "Image height");
  cmd_ren->add_option("--spp", ren.spp, "Samples per pixel");
  cmd_ren->add_option("--max-depth", ren.max_depth,
                      "Surface events per path; -1 = unbounded");
  cmd_ren->add_option("--seed", ren.seed, "Sampler seed");
  cmd_ren->add_option("--ppm", ren.ppm_path, "Also write a tonemapped PPM");
  cmd_ren->add_flag("--hashes", ren.hashes, "Collect per-pixel path hashes");

  ErrorMapArgs em;
  auto* cmd_em = app.add_subcommand("error-map",
                                    "Per-pixel MSE between two renders");
  cmd_em->add_option("--ref", em.ref_path, "Reference raw image")->required();
  cmd_em->add_option("--test", em.test_path, "Test raw image")->required();
  cmd_em->add_option("--out", em.out_path, "Output raw error map")
      ->required();
  cmd_em->add_option("--codec", em.codec_path,
                     "Codec weights (to decode latent inputs)");

  EvalMultibounceArgs ev;
  auto* cmd_ev = app.add_subcommand("eval-multibounce",
                                    "Multi-bounce dE94 fidelity");
  cmd_ev->add_option("--codec", ev.codec_path, "Codec weights")->required();
  cmd_ev->add_option("--dataset", ev.dataset_path, "dataset.csv")->required();
  cmd_ev->add_option("--bounces", ev.bounces, "Chain length");
  cmd_ev->add_option("--pairs", ev.pairs, "Sampled chains");
  cmd_ev->add_option("--seed", ev.seed, "Sampling seed");
  cmd_ev->add_option("--out", ev.out_path, "Optional results CSV");

  ReportArgs rep;
  auto* cmd_rep = app.add_subcommand(
      "report", "Spectral vs latent vs RGB comparison report");
  cmd_rep->add_option("--scene", rep.scene_path, "Scene file")->required();
  cmd_rep->add_option("--codec", rep.codec_path, "Codec weights")->required();
  cmd_rep->add_option("--out", rep.out_dir, "Output directory")->required();
  cmd_rep->add_option("--width", rep.width, "Image width");
  cmd_rep->add_option("--height", rep.height, "Image height");
  cmd_rep->add_option("--spp", rep.spp, "Samples per pixel");
  cmd_rep->add_option("--max-depth", rep.max_depth, "Surface events per path");
  cmd_rep->add_option("--seed", rep.seed, "Sampler seed");

  std::string cmf_out;
  auto* cmd_cmf = app.add_subcommand(
      "dump-cmf", "Write the bundled observer/illuminant tables");
  cmd_cmf->add_option("--out", cmf_out, "Output spectra CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (cmd_gen->parsed()) return run_gen_dataset(gen);
    if (cmd_tc->parsed()) return run_train_codec(tc);
    if (cmd_gs->parsed()) return run_grid_search(gs);
    if (cmd_tu->parsed()) return run_train_upsampler(tu);
    if (cmd_enc->parsed()) return run_encode(enc);
    if (cmd_dec->parsed()) return run_decode(dec);
    if (cmd_up->parsed()) return run_upsample(up);
    if (cmd_ren->parsed()) return run_render(ren);
    if (cmd_em->parsed()) return run_error_map(em);
    if (cmd_ev->parsed()) return run_eval_multibounce(ev);
    if (cmd_rep->parsed()) return run_report(rep);
    if (cmd_cmf->parsed()) return run_dump_cmf(cmf_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
