#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/io.hpp"
#include "hadacodec/rng.hpp"
#include "hadacodec/spectrum.hpp"
#include "hadacodec/trainer.hpp"
#include "hadacodec/upsampler.hpp"

using namespace hadacodec;
namespace fs = std::filesystem;

namespace {

// Unique scratch directory per test run, cleaned up on destruction.
struct TempDir {
  fs::path dir;
  TempDir() {
    const auto tick = static_cast<std::uint64_t>(
        std::chrono::steady_clock::now().time_since_epoch().count());
    dir = fs::temp_directory_path() /
          ("hadacodec_test_" + std::to_string(Rng(tick).next_u64()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string operator/(const char* name) const { return (dir / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("spectra CSV round trip with and without ids") {
  TempDir tmp;
  std::vector<SpectralCurve> curves = {gaussian_curve(550, 40, 0.8),
                                       SpectralCurve::flat(0.25)};

  SUBCASE("with ids") {
    const std::string path = tmp / "spectra.csv";
    write_spectra_csv(path, {"a", "b"}, curves);
    const SpectraCsv back = read_spectra_csv(path);
    REQUIRE(back.rows.size() == 2u);
    REQUIRE(back.wavelengths.size() == 47u);
    CHECK(back.ids == std::vector<std::string>{"a", "b"});
    CHECK(back.wavelengths[0] == doctest::Approx(368.0));
    for (int i = 0; i < kSampleCount; ++i) {
      // %.9g serialization: relative 1e-8 survives the round trip.
      CHECK(back.rows[0][static_cast<std::size_t>(i)] ==
            doctest::Approx(curves[0][i]).epsilon(1e-8));
    }
  }

  SUBCASE("without ids") {
    const std::string path = tmp / "spectra_noid.csv";
    write_spectra_csv(path, {}, curves);
    const SpectraCsv back = read_spectra_csv(path);
    CHECK(back.ids.empty());
    REQUIRE(back.rows.size() == 2u);
  }
}

TEST_CASE("spectra CSV rejects malformed files") {
  TempDir tmp;
  const std::string path = tmp / "bad.csv";

  write_text(path, "");
  CHECK_THROWS_AS(read_spectra_csv(path), FormatError);

  write_text(path, "400,500\n0.5\n");  // row shorter than header
  CHECK_THROWS_AS(read_spectra_csv(path), FormatError);

  write_text(path, "400,500\n0.5,abc\n");  // non-numeric value
  CHECK_THROWS_AS(read_spectra_csv(path), FormatError);

  CHECK_THROWS_AS(read_spectra_csv(tmp / "missing.csv"), FormatError);
}

TEST_CASE("dataset CSV round trip preserves labels") {
  TempDir tmp;
  std::vector<LabeledSpectrum> items(3);
  items[0].id = "r0";
  items[0].kind = SpectrumKind::reflectance;
  items[0].origin = Origin::optimal;
  items[0].split = Split::train;
  items[0].curve = gaussian_curve(500, 50, 0.5);
  items[1].id = "l0";
  items[1].kind = SpectrumKind::illumination;
  items[1].origin = Origin::narrowband_synth;
  items[1].split = Split::test;
  items[1].curve = gaussian_curve(600, 10, 1.0);
  items[2].id = "l1";
  items[2].kind = SpectrumKind::illumination;
  items[2].origin = Origin::flipped;
  items[2].split = Split::train;
  items[2].curve = SpectralCurve::flat(0.7);

  const std::string path = tmp / "dataset.csv";
  write_dataset_csv(path, items);
  const auto back = read_dataset_csv(path);
  REQUIRE(back.size() == 3u);
  CHECK(back[0].id == "r0");
  CHECK(back[0].kind == SpectrumKind::reflectance);
  CHECK(back[0].origin == Origin::optimal);
  CHECK(back[0].split == Split::train);
  CHECK(back[1].kind == SpectrumKind::illumination);
  CHECK(back[1].origin == Origin::narrowband_synth);
  CHECK(back[1].split == Split::test);
  CHECK(back[2].origin == Origin::flipped);
  for (int i = 0; i < kSampleCount; ++i) {
    CHECK(back[1].curve[i] == doctest::Approx(items[1].curve[i]).epsilon(1e-8));
  }
}

TEST_CASE("dataset CSV validates the wavelength header") {
  TempDir tmp;
  const std::string path = tmp / "ds.csv";
  write_text(path,
             "id,kind,origin,split,400,500\nr0,reflectance,optimal,train,"
             "0.1,0.2\n");
  CHECK_THROWS_AS(read_dataset_csv(path), FormatError);
}

TEST_CASE("codes CSV round trip and validation") {
  TempDir tmp;
  const std::string path = tmp / "codes.csv";
  LatentCode a, b;
  a.z = {0.1, 0.25, 1.0 / 3.0, 0.0, 5e-17, 2.0};
  b.z = {1, 2, 3, 4, 5, 6};
  write_codes_csv(path, {"x", "y"}, {a, b});
  const CodesCsv back = read_codes_csv(path);
  REQUIRE(back.codes.size() == 2u);
  CHECK(back.ids[0] == "x");
  REQUIRE(back.codes[0].k() == 6);
  for (int i = 0; i < 6; ++i) {
    // %.17g round-trips doubles bit-exactly.
    CHECK(back.codes[0][i] == a[i]);
    CHECK(back.codes[1][i] == b[i]);
  }

  write_text(path, "id,c0,c9\nx,1,2\n");  // wrong column labels
  CHECK_THROWS_AS(read_codes_csv(path), FormatError);
  write_text(path, "id,c0,c1\nx,1\n");  // short row
  CHECK_THROWS_AS(read_codes_csv(path), FormatError);
}

TEST_CASE("codec weight JSON round trip is bit exact") {
  TempDir tmp;
  const std::string path = tmp / "codec.json";
  CodecWeights w = init_codec_weights(6, 99);
  w.meta.seed = 99;
  w.meta.lambda_weights = {0.5, 0.75, 1.0, 0.5, 0.0};
  w.meta.epochs = 17;
  save_codec_weights(path, w);
  const CodecWeights back = load_codec_weights(path);
  CHECK(back.k == w.k);
  CHECK(back.n == w.n);
  CHECK(back.beta == w.beta);
  CHECK(back.raw_enc == w.raw_enc);  // bit-exact
  CHECK(back.raw_dec == w.raw_dec);
  CHECK(back.meta.seed == 99);
  CHECK(back.meta.epochs == 17);
  CHECK(back.meta.lambda_weights == w.meta.lambda_weights);
}

TEST_CASE("weight files reject wrong or corrupt formats") {
  TempDir tmp;
  const std::string path = tmp / "w.json";

  write_text(path, "{\"format\":\"something-else\",\"k\":6}");
  CHECK_THROWS_AS(load_codec_weights(path), FormatError);

  write_text(path, "not json at all {");
  CHECK_THROWS_AS(load_codec_weights(path), FormatError);

  // Valid JSON, invalid dimensions (raw arrays missing).
  write_text(path,
             "{\"format\":\"codec-weights\",\"k\":6,\"n\":47,\"beta\":10.0}");
  CHECK_THROWS_AS(load_codec_weights(path), FormatError);

  // Upsampler loader rejects codec files and vice versa.
  CodecWeights w = init_codec_weights(6, 1);
  save_codec_weights(path, w);
  CHECK_THROWS_AS(load_upsampler_weights(path), FormatError);
}

TEST_CASE("upsampler weight JSON round trip is bit exact") {
  TempDir tmp;
  const std::string path = tmp / "up.json";
  UpsamplerWeights w = init_upsampler_weights(6, 32, 5);
  w.meta.epochs = 123;
  save_upsampler_weights(path, w);
  const UpsamplerWeights back = load_upsampler_weights(path);
  CHECK(back.k == 6);
  CHECK(back.hidden == 32);
  CHECK(back.w1 == w.w1);
  CHECK(back.b1 == w.b1);
  CHECK(back.w2 == w.w2);
  CHECK(back.b2 == w.b2);
  CHECK(back.w3 == w.w3);
  CHECK(back.b3 == w.b3);
  CHECK(back.meta.epochs == 123);
}

TEST_CASE("raw channel image round trip") {
  TempDir tmp;
  const std::string path = tmp / "img.hcf";
  ChannelImage img;
  img.width = 3;
  img.height = 2;
  img.channels = 5;
  img.data.resize(3u * 2u * 5u);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    img.data[i] = static_cast<float>(i) * 0.125f - 1.0f;
  }
  write_raw_image(path, img);
  const ChannelImage back = read_raw_image(path);
  CHECK(back.width == 3);
  CHECK(back.height == 2);
  CHECK(back.channels == 5);
  CHECK(back.data == img.data);  // float32 bit-exact

  write_text(path, "JUNKJUNKJUNK");
  CHECK_THROWS_AS(read_raw_image(path), FormatError);
}

TEST_CASE("ppm round trip") {
  TempDir tmp;
  const std::string path = tmp / "img.ppm";
  std::vector<unsigned char> rgb(2u * 2u * 3u);
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    rgb[i] = static_cast<unsigned char>(17 * i);
  }
  write_ppm(path, 2, 2, rgb);
  const Ppm8 back = read_ppm(path);
  CHECK(back.width == 2);
  CHECK(back.height == 2);
  CHECK(back.rgb == rgb);
}

TEST_CASE("spectrum spec expressions") {
  // flat
  const SpectralCurve f = parse_spectrum_spec("flat:0.5", true);
  CHECK(f[10] == 0.5);
  CHECK(f[0] == 0.0);  // outside the active band

  // gauss with amplitude above 1 clamps for reflectances only
  const SpectralCurve g = parse_spectrum_spec("gauss:550,40,1.5", true);
  CHECK(g.max_value() <= 1.0);
  const SpectralCurve ge = parse_spectrum_spec("gauss:550,40,1.5", false);
  CHECK(ge.max_value() == doctest::Approx(1.0));  // emitters unit-peak

  // sums
  const SpectralCurve sum =
      parse_spectrum_spec("flat:0.2+gauss:600,30,0.3", true);
  CHECK(sum[23] > 0.2);  // 599 nm: flat + gaussian bump

  // d65 emitter is unit peak
  const SpectralCurve d = parse_spectrum_spec("d65", false);
  CHECK(d.max_value() == doctest::Approx(1.0));

  // blackbody emitter
  const SpectralCurve bb = parse_spectrum_spec("blackbody:3000", false);
  CHECK(bb.max_value() == doctest::Approx(1.0));
  CHECK(bb[0] == 0.0);

  CHECK_THROWS_AS(parse_spectrum_spec("nonsense:1", true), FormatError);
  CHECK_THROWS_AS(parse_spectrum_spec("gauss:550", true), FormatError);
}

TEST_CASE("spectrum spec csv reference resolves against base dir") {
  TempDir tmp;
  write_spectra_csv(tmp / "curves.csv", {"one"}, {SpectralCurve::flat(0.5)});
  const SpectralCurve c =
      parse_spectrum_spec("csv:curves.csv#one", true, tmp.dir.string());
  CHECK(c[10] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK_THROWS_AS(
      parse_spectrum_spec("csv:curves.csv#nope", true, tmp.dir.string()),
      FormatError);
}

TEST_CASE("scene parsing") {
  TempDir tmp;
  const std::string path = tmp / "scene.scn";
  write_text(path, R"(# a small enclosure
camera 0 1 3 0 1 0 0 1 0 40
box -1 0 -1 1 2 1
material flat:0.7
material gauss:620,50,0.6
wall left 1
wall right 1
wall floor 0
wall ceiling 0
wall back 0
sphere 0.3 0.4 -0.2 0.4 0
block -0.6 0 -0.5 -0.2 0.8 -0.1 1
light -0.25 1.99 -0.25 0.5 0 0 0 0 0.5 10 d65
)");
  const Scene sc = load_scene(path);
  CHECK(sc.camera.position.z == doctest::Approx(3.0));
  CHECK(sc.camera.vfov_degrees == doctest::Approx(40.0));
  CHECK(sc.box_min.x == doctest::Approx(-1.0));
  CHECK(sc.materials.size() == 2u);
  CHECK(sc.wall_material[0] == 1);
  CHECK(sc.wall_material[5] == -1);  // front never set: open
  REQUIRE(sc.objects.size() == 2u);
  CHECK(sc.objects[0].kind == SceneObject::Kind::sphere);
  CHECK(sc.objects[0].radius == doctest::Approx(0.4));
  CHECK(sc.objects[1].kind == SceneObject::Kind::block);
  REQUIRE(sc.lights.size() == 1u);
  CHECK(sc.lights[0].scale == doctest::Approx(10.0));
  CHECK(sc.lights[0].spd.max_value() == doctest::Approx(1.0));
}

TEST_CASE("scene parsing rejects malformed directives") {
  TempDir tmp;
  const std::string path = tmp / "scene.scn";

  write_text(path, "sphere 0 0 0 -1 0\nmaterial flat:0.5\n");
  CHECK_THROWS_AS(load_scene(path), FormatError);  // negative radius

  write_text(path, "wall nowhere 0\nmaterial flat:0.5\n");
  CHECK_THROWS_AS(load_scene(path), FormatError);  // bad wall name

  write_text(path, "sphere 0.5 0.5 0 0.2 3\nmaterial flat:0.5\n");
  CHECK_THROWS_AS(load_scene(path), FormatError);  // material out of range

  write_text(path, "camera 1 2 3\n");
  CHECK_THROWS_AS(load_scene(path), FormatError);  // wrong arity
}

TEST_CASE("config files") {
  TempDir tmp;
  const std::string path = tmp / "train.cfg";
  write_text(path, R"(# comment
lr = 0.002
batch_size 64
max_epochs = 20
lambda_rec = 1.5
)");
  const auto kv = read_config_file(path);
  CHECK(kv.at("lr") == "0.002");
  CHECK(kv.at("batch_size") == "64");

  TrainConfig cfg;
  LossWeights lw;
  apply_train_config(kv, &cfg, &lw);
  CHECK(cfg.lr == doctest::Approx(0.002));
  CHECK(cfg.batch_size == 64);
  CHECK(cfg.max_epochs == 20);
  CHECK(lw.rec == doctest::Approx(1.5));
  CHECK(lw.code == doctest::Approx(1.0));  // untouched default

  std::map<std::string, std::string> bad = {{"no_such_key", "1"}};
  CHECK_THROWS_AS(apply_train_config(bad, &cfg, &lw), FormatError);

  UpsampleTrainConfig ucfg;
  std::map<std::string, std::string> ukv = {{"lr", "0.004"},
                                            {"epochs", "100"},
                                            {"lambda_color", "0.1"}};
  apply_upsample_config(ukv, &ucfg);
  CHECK(ucfg.lr == doctest::Approx(0.004));
  CHECK(ucfg.epochs == 100);
  CHECK(ucfg.lambda_color == doctest::Approx(0.1));
}

TEST_CASE("manifest writing and file hashing") {
  TempDir tmp;
  const std::string data_path = tmp / "input.bin";
  write_text(data_path, "hello");
  // FNV-1a64 of "hello" is a published reference value.
  CHECK(hash_file(data_path) == 0xa430d84680aabd0bull);

  Manifest m;
  m.command = "test-cmd";
  m.seeds = {7};
  m.inputs.push_back({data_path, "a430d84680aabd0b"});
  m.outputs.push_back("out.bin");
  m.extra["note"] = "x";
  m.wall_seconds = 0.25;
  const std::string mpath = tmp / "manifest.json";
  write_manifest(mpath, m);

  std::ifstream f(mpath);
  std::string text((std::istreambuf_iterator<char>(f)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("\"test-cmd\"") != std::string::npos);
  CHECK(text.find("a430d84680aabd0b") != std::string::npos);
  CHECK(text.find(kToolVersion) != std::string::npos);
}

TEST_CASE("report CSVs") {
  TempDir tmp;
  TrainReport r;
  EpochLog e;
  e.epoch = 0;
  e.e2e = 1.5;
  e.train_total = 2.0;
  e.val_total = 2.5;
  r.epochs.push_back(e);
  const std::string path = tmp / "report.csv";
  write_train_report_csv(path, r);
  std::ifstream f(path);
  std::string header, row;
  std::getline(f, header);
  std::getline(f, row);
  CHECK(header ==
        "epoch,e2e,rec,code,col,alg,train_total,val_total");
  CHECK(row.substr(0, 2) == "0,");
}
