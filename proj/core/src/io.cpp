#include "hadacodec/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/rng.hpp"

static_assert(std::endian::native == std::endian::little,
              "raw image I/O assumes a little-endian host");

namespace hadacodec {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

[[noreturn]] void fail(const std::string& path, int line,
                       const std::string& what) {
  throw FormatError(path + ":" + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::string& path, bool binary = false) {
  std::ifstream f(path, binary ? std::ios::in | std::ios::binary
                               : std::ios::in);
  if (!f) fail(path, "cannot open for reading");
  return f;
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::out | std::ios::binary
                               : std::ios::out);
  if (!f) fail(path, "cannot open for writing");
  return f;
}

void finish_out(std::ofstream& f, const std::string& path) {
  f.flush();
  if (!f.good()) fail(path, "write failed");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& s, const std::string& path, int line) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    fail(path, line, "expected a number, got '" + s + "'");
  }
  if (pos != s.size()) fail(path, line, "trailing junk in number '" + s + "'");
  return v;
}

long long parse_int(const std::string& s, const std::string& path, int line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail(path, line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) fail(path, line, "trailing junk in number '" + s + "'");
  return v;
}

void print_g9(std::ofstream& f, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  f << buf;
}

void print_g17(std::ofstream& f, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  f << buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Spectra CSV.

SpectraCsv read_spectra_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  int lineno = 0;
  SpectraCsv csv;
  bool has_id = false;

  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (csv.wavelengths.empty()) {
      std::size_t start = 0;
      if (!cells.empty() && trim(cells[0]) == "id") {
        has_id = true;
        start = 1;
      }
      for (std::size_t i = start; i < cells.size(); ++i) {
        csv.wavelengths.push_back(parse_double(trim(cells[i]), path, lineno));
      }
      if (csv.wavelengths.empty()) fail(path, lineno, "empty wavelength header");
      continue;
    }
    const std::size_t expected = csv.wavelengths.size() + (has_id ? 1 : 0);
    if (cells.size() != expected) {
      fail(path, lineno,
           "expected " + std::to_string(expected) + " cells, got " +
               std::to_string(cells.size()));
    }
    std::size_t start = 0;
    if (has_id) {
      csv.ids.push_back(trim(cells[0]));
      start = 1;
    }
    std::vector<double> row;
    row.reserve(csv.wavelengths.size());
    for (std::size_t i = start; i < cells.size(); ++i) {
      row.push_back(parse_double(trim(cells[i]), path, lineno));
    }
    csv.rows.push_back(std::move(row));
  }
  if (csv.wavelengths.empty()) fail(path, "missing wavelength header");
  return csv;
}

void write_spectra_csv(const std::string& path,
                       const std::vector<std::string>& ids,
                       const std::vector<SpectralCurve>& curves) {
  if (!ids.empty() && ids.size() != curves.size()) {
    fail(path, "id count does not match curve count");
  }
  std::ofstream f = open_out(path);
  if (!ids.empty()) f << "id,";
  for (int i = 0; i < kSampleCount; ++i) {
    if (i > 0) f << ',';
    print_g9(f, wavelength_at(i));
  }
  f << '\n';
  for (std::size_t r = 0; r < curves.size(); ++r) {
    if (!ids.empty()) f << ids[r] << ',';
    for (int i = 0; i < kSampleCount; ++i) {
      if (i > 0) f << ',';
      print_g9(f, curves[r][i]);
    }
    f << '\n';
  }
  finish_out(f, path);
}

void write_dataset_csv(const std::string& path,
                       const std::vector<LabeledSpectrum>& items) {
  std::ofstream f = open_out(path);
  f << "id,kind,origin,split";
  for (int i = 0; i < kSampleCount; ++i) {
    f << ',';
    print_g9(f, wavelength_at(i));
  }
  f << '\n';
  for (const auto& item : items) {
    f << item.id << ',' << to_string(item.kind) << ','
      << to_string(item.origin) << ',' << to_string(item.split);
    for (int i = 0; i < kSampleCount; ++i) {
      f << ',';
      print_g9(f, item.curve[i]);
    }
    f << '\n';
  }
  finish_out(f, path);
}

std::vector<LabeledSpectrum> read_dataset_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  int lineno = 0;
  std::vector<LabeledSpectrum> out;
  bool saw_header = false;

  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (!saw_header) {
      if (cells.size() != 4 + kSampleCount || trim(cells[0]) != "id") {
        fail(path, lineno, "bad dataset header");
      }
      for (int i = 0; i < kSampleCount; ++i) {
        const double wl =
            parse_double(trim(cells[static_cast<std::size_t>(4 + i)]), path,
                         lineno);
        if (std::abs(wl - wavelength_at(i)) > 1e-6) {
          fail(path, lineno, "wavelength grid mismatch");
        }
      }
      saw_header = true;
      continue;
    }
    if (cells.size() != 4 + kSampleCount) {
      fail(path, lineno, "wrong cell count");
    }
    LabeledSpectrum item;
    item.id = trim(cells[0]);
    const std::string kind = trim(cells[1]);
    if (kind == "reflectance") {
      item.kind = SpectrumKind::reflectance;
    } else if (kind == "illumination") {
      item.kind = SpectrumKind::illumination;
    } else {
      fail(path, lineno, "unknown kind '" + kind + "'");
    }
    try {
      item.origin = origin_from_string(trim(cells[2]));
      item.split = split_from_string(trim(cells[3]));
    } catch (const std::invalid_argument& e) {
      fail(path, lineno, e.what());
    }
    for (int i = 0; i < kSampleCount; ++i) {
      item.curve[i] = parse_double(
          trim(cells[static_cast<std::size_t>(4 + i)]), path, lineno);
    }
    out.push_back(std::move(item));
  }
  if (!saw_header) fail(path, "missing dataset header");
  return out;
}

// ---------------------------------------------------------------------------
// Codes CSV.

CodesCsv read_codes_csv(const std::string& path) {
  std::ifstream f = open_in(path);
  std::string line;
  int lineno = 0;
  CodesCsv out;
  int k = -1;

  while (std::getline(f, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(trim(line), ',');
    if (k < 0) {
      if (cells.size() < 2 || trim(cells[0]) != "id") {
        fail(path, lineno, "bad codes header (expected id,c0,...)");
      }
      k = static_cast<int>(cells.size()) - 1;
      for (int i = 0; i < k; ++i) {
        if (trim(cells[static_cast<std::size_t>(1 + i)]) !=
            "c" + std::to_string(i)) {
          fail(path, lineno, "bad codes header column " + std::to_string(i));
        }
      }
      continue;
    }
    if (static_cast<int>(cells.size()) != k + 1) {
      fail(path, lineno, "wrong cell count");
    }
    out.ids.push_back(trim(cells[0]));
    LatentCode z;
    z.z.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      z.z.push_back(parse_double(trim(cells[static_cast<std::size_t>(1 + i)]),
                                 path, lineno));
    }
    out.codes.push_back(std::move(z));
  }
  if (k < 0) fail(path, "missing codes header");
  return out;
}

void write_codes_csv(const std::string& path,
                     const std::vector<std::string>& ids,
                     const std::vector<LatentCode>& codes) {
  if (ids.size() != codes.size()) {
    fail(path, "id count does not match code count");
  }
  std::ofstream f = open_out(path);
  const int k = codes.empty() ? 0 : codes.front().k();
  f << "id";
  for (int i = 0; i < k; ++i) f << ",c" << i;
  f << '\n';
  for (std::size_t r = 0; r < codes.size(); ++r) {
    if (codes[r].k() != k) fail(path, "codes have inconsistent dimensions");
    f << ids[r];
    for (int i = 0; i < k; ++i) {
      f << ',';
      print_g17(f, codes[r][i]);
    }
    f << '\n';
  }
  finish_out(f, path);
}

// ---------------------------------------------------------------------------
// Weight files.

namespace {

json meta_to_json(const CodecTrainingMeta& meta) {
  return json{{"seed", meta.seed},
              {"lambda_weights", meta.lambda_weights},
              {"epochs", meta.epochs}};
}

CodecTrainingMeta meta_from_json(const json& j) {
  CodecTrainingMeta meta;
  meta.seed = j.at("seed").get<std::uint64_t>();
  const auto lw = j.at("lambda_weights").get<std::vector<double>>();
  if (lw.size() != meta.lambda_weights.size()) {
    throw FormatError("weights file: lambda_weights must have 5 entries");
  }
  std::copy(lw.begin(), lw.end(), meta.lambda_weights.begin());
  meta.epochs = j.at("epochs").get<int>();
  return meta;
}

json parse_json_file(const std::string& path) {
  std::ifstream f = open_in(path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    fail(path, std::string("JSON parse error: ") + e.what());
  }
}

void dump_json_file(const std::string& path, const json& j) {
  std::ofstream f = open_out(path);
  f << j.dump(2) << '\n';
  finish_out(f, path);
}

}  // namespace

CodecWeights load_codec_weights(const std::string& path) {
  const json j = parse_json_file(path);
  CodecWeights w;
  try {
    if (j.at("format").get<std::string>() != "codec-weights") {
      fail(path, "not a codec weights file");
    }
    w.k = j.at("k").get<int>();
    w.n = j.at("n").get<int>();
    w.beta = j.at("beta").get<double>();
    w.raw_enc = j.at("raw_enc").get<std::vector<double>>();
    w.raw_dec = j.at("raw_dec").get<std::vector<double>>();
    if (j.contains("meta")) w.meta = meta_from_json(j.at("meta"));
  } catch (const json::exception& e) {
    fail(path, std::string("bad codec weights: ") + e.what());
  }
  try {
    validate(w);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return w;
}

void save_codec_weights(const std::string& path, const CodecWeights& w) {
  validate(w);
  json j{{"format", "codec-weights"}, {"version", kToolVersion},
         {"k", w.k},                  {"n", w.n},
         {"beta", w.beta},            {"raw_enc", w.raw_enc},
         {"raw_dec", w.raw_dec},      {"meta", meta_to_json(w.meta)}};
  dump_json_file(path, j);
}

UpsamplerWeights load_upsampler_weights(const std::string& path) {
  const json j = parse_json_file(path);
  UpsamplerWeights w;
  try {
    if (j.at("format").get<std::string>() != "upsampler-weights") {
      fail(path, "not an upsampler weights file");
    }
    w.k = j.at("k").get<int>();
    w.hidden = j.at("hidden").get<int>();
    w.w1 = j.at("w1").get<std::vector<double>>();
    w.b1 = j.at("b1").get<std::vector<double>>();
    w.w2 = j.at("w2").get<std::vector<double>>();
    w.b2 = j.at("b2").get<std::vector<double>>();
    w.w3 = j.at("w3").get<std::vector<double>>();
    w.b3 = j.at("b3").get<std::vector<double>>();
    if (j.contains("meta")) w.meta = meta_from_json(j.at("meta"));
  } catch (const json::exception& e) {
    fail(path, std::string("bad upsampler weights: ") + e.what());
  }
  try {
    validate(w);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return w;
}

void save_upsampler_weights(const std::string& path,
                            const UpsamplerWeights& w) {
  validate(w);
  json j{{"format", "upsampler-weights"},
         {"version", kToolVersion},
         {"k", w.k},
         {"hidden", w.hidden},
         {"w1", w.w1},
         {"b1", w.b1},
         {"w2", w.w2},
         {"b2", w.b2},
         {"w3", w.w3},
         {"b3", w.b3},
         {"meta", meta_to_json(w.meta)}};
  dump_json_file(path, j);
}

// ---------------------------------------------------------------------------
// Raw channel images and PPM.

ChannelImage read_raw_image(const std::string& path) {
  std::ifstream f = open_in(path, /*binary=*/true);
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, "HCF1", 4) != 0) {
    fail(path, "bad magic (expected HCF1)");
  }
  std::uint32_t dims[3];
  f.read(reinterpret_cast<char*>(dims), sizeof dims);
  if (!f) fail(path, "truncated header");
  ChannelImage img;
  img.width = static_cast<int>(dims[0]);
  img.height = static_cast<int>(dims[1]);
  img.channels = static_cast<int>(dims[2]);
  if (img.width <= 0 || img.height <= 0 || img.channels <= 0 ||
      img.width > 1 << 16 || img.height > 1 << 16 || img.channels > 1024) {
    fail(path, "implausible image dimensions");
  }
  const std::size_t count = static_cast<std::size_t>(img.width) * img.height *
                            img.channels;
  img.data.resize(count);
  f.read(reinterpret_cast<char*>(img.data.data()),
         static_cast<std::streamsize>(count * sizeof(float)));
  if (!f) fail(path, "truncated pixel data");
  return img;
}

void write_raw_image(const std::string& path, const ChannelImage& img) {
  if (img.width <= 0 || img.height <= 0 || img.channels <= 0 ||
      img.data.size() != static_cast<std::size_t>(img.width) * img.height *
                             img.channels) {
    fail(path, "image dimensions do not match data size");
  }
  std::ofstream f = open_out(path, /*binary=*/true);
  f.write("HCF1", 4);
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(img.width),
                                 static_cast<std::uint32_t>(img.height),
                                 static_cast<std::uint32_t>(img.channels)};
  f.write(reinterpret_cast<const char*>(dims), sizeof dims);
  f.write(reinterpret_cast<const char*>(img.data.data()),
          static_cast<std::streamsize>(img.data.size() * sizeof(float)));
  finish_out(f, path);
}

void write_ppm(const std::string& path, int width, int height,
               const std::vector<unsigned char>& rgb8) {
  if (rgb8.size() != static_cast<std::size_t>(width) * height * 3) {
    fail(path, "pixel buffer does not match dimensions");
  }
  std::ofstream f = open_out(path, /*binary=*/true);
  f << "P6\n" << width << ' ' << height << "\n255\n";
  f.write(reinterpret_cast<const char*>(rgb8.data()),
          static_cast<std::streamsize>(rgb8.size()));
  finish_out(f, path);
}

Ppm8 read_ppm(const std::string& path) {
  std::ifstream f = open_in(path, /*binary=*/true);
  std::string magic;
  f >> magic;
  if (magic != "P6") fail(path, "expected binary PPM (P6)");
  const auto next_token = [&]() {
    std::string tok;
    for (;;) {
      if (!(f >> tok)) fail(path, "truncated PPM header");
      if (tok[0] == '#') {
        std::string rest;
        std::getline(f, rest);
        continue;
      }
      return tok;
    }
  };
  Ppm8 img;
  img.width = static_cast<int>(parse_int(next_token(), path, 0));
  img.height = static_cast<int>(parse_int(next_token(), path, 0));
  const int maxval = static_cast<int>(parse_int(next_token(), path, 0));
  if (img.width <= 0 || img.height <= 0 || maxval != 255) {
    fail(path, "unsupported PPM header");
  }
  f.get();  // single whitespace after maxval
  img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  f.read(reinterpret_cast<char*>(img.rgb.data()),
         static_cast<std::streamsize>(img.rgb.size()));
  if (!f) fail(path, "truncated PPM pixel data");
  return img;
}

// ---------------------------------------------------------------------------
// Spectrum expressions and scenes.

SpectralCurve parse_spectrum_spec(const std::string& spec, bool reflectance,
                                  const std::string& base_dir) {
  if (trim(spec).empty()) {
    throw FormatError("spectrum spec: empty expression");
  }
  SpectralCurve sum = SpectralCurve::zero();
  for (const std::string& raw_term : split(trim(spec), '+')) {
    const std::string term = trim(raw_term);
    SpectralCurve cur;
    if (term == "d65") {
      cur = CmfTable::instance().d65();
    } else if (term.rfind("flat:", 0) == 0) {
      const double v = parse_double(term.substr(5), "spectrum spec", 0);
      cur = SpectralCurve::flat(v);
    } else if (term.rfind("gauss:", 0) == 0) {
      const auto args = split(term.substr(6), ',');
      if (args.size() != 3) {
        throw FormatError("spectrum spec: gauss wants CENTER,SIGMA,AMP: " +
                          term);
      }
      cur = gaussian_curve(parse_double(args[0], "spectrum spec", 0),
                           parse_double(args[1], "spectrum spec", 0),
                           parse_double(args[2], "spectrum spec", 0));
    } else if (term.rfind("blackbody:", 0) == 0) {
      cur = blackbody_curve(parse_double(term.substr(10), "spectrum spec", 0));
    } else if (term.rfind("csv:", 0) == 0) {
      std::string ref = term.substr(4);
      std::string want_id;
      const std::size_t hash_pos = ref.find('#');
      if (hash_pos != std::string::npos) {
        want_id = ref.substr(hash_pos + 1);
        ref = ref.substr(0, hash_pos);
      }
      std::filesystem::path p(ref);
      if (p.is_relative() && !base_dir.empty()) {
        p = std::filesystem::path(base_dir) / p;
      }
      const SpectraCsv csv = read_spectra_csv(p.string());
      std::size_t row = 0;
      if (!want_id.empty()) {
        bool found = false;
        for (std::size_t r = 0; r < csv.ids.size(); ++r) {
          if (csv.ids[r] == want_id) {
            row = r;
            found = true;
            break;
          }
        }
        if (!found) {
          throw FormatError(p.string() + ": no curve with id '" + want_id +
                            "'");
        }
      }
      if (csv.rows.empty()) throw FormatError(p.string() + ": no curves");
      cur = resample(csv.wavelengths, csv.rows[row], /*zero_outside=*/true);
    } else {
      throw FormatError("spectrum spec: unknown term '" + term + "'");
    }
    sum = add(sum, cur);
  }
  zero_outside_active_band(sum);
  if (reflectance) {
    for (int i = 0; i < kSampleCount; ++i) {
      sum[i] = std::clamp(sum[i], 0.0, 1.0);
    }
  } else {
    const double peak = sum.max_value();
    if (peak > 0.0) sum = scale(sum, 1.0 / peak);
  }
  return sum;
}

Scene load_scene(const std::string& path) {
  std::ifstream f = open_in(path);
  const std::string base_dir =
      std::filesystem::path(path).parent_path().string();
  Scene scene;
  std::string line;
  int lineno = 0;

  const auto wall_index = [&](const std::string& name, int ln) {
    if (name == "left") return 0;
    if (name == "right") return 1;
    if (name == "floor") return 2;
    if (name == "ceiling") return 3;
    if (name == "back") return 4;
    if (name == "front") return 5;
    fail(path, ln, "unknown wall '" + name + "'");
  };

  while (std::getline(f, line)) {
    ++lineno;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    std::istringstream ss(line);
    std::vector<std::string> tok;
    std::string t;
    while (ss >> t) tok.push_back(t);
    if (tok.empty()) continue;

    const auto num = [&](std::size_t i) {
      if (i >= tok.size()) fail(path, lineno, "missing argument");
      return parse_double(tok[i], path, lineno);
    };
    const auto integer = [&](std::size_t i) {
      if (i >= tok.size()) fail(path, lineno, "missing argument");
      return static_cast<int>(parse_int(tok[i], path, lineno));
    };
    const auto expect_args = [&](std::size_t n, const char* usage) {
      if (tok.size() != n + 1) {
        fail(path, lineno, std::string("usage: ") + usage);
      }
    };

    if (tok[0] == "camera") {
      expect_args(10, "camera px py pz lx ly lz ux uy uz vfov");
      scene.camera.position = {num(1), num(2), num(3)};
      scene.camera.look_at = {num(4), num(5), num(6)};
      scene.camera.up = {num(7), num(8), num(9)};
      scene.camera.vfov_degrees = num(10);
    } else if (tok[0] == "box") {
      expect_args(6, "box minx miny minz maxx maxy maxz");
      scene.box_min = {num(1), num(2), num(3)};
      scene.box_max = {num(4), num(5), num(6)};
    } else if (tok[0] == "material") {
      expect_args(1, "material SPECTRUM");
      scene.materials.push_back(
          parse_spectrum_spec(tok[1], /*reflectance=*/true, base_dir));
    } else if (tok[0] == "wall") {
      expect_args(2, "wall NAME MATERIAL_INDEX");
      scene.wall_material[static_cast<std::size_t>(
          wall_index(tok[1], lineno))] = integer(2);
    } else if (tok[0] == "sphere") {
      expect_args(5, "sphere cx cy cz radius material");
      SceneObject obj;
      obj.kind = SceneObject::Kind::sphere;
      obj.center = {num(1), num(2), num(3)};
      obj.radius = num(4);
      obj.material = integer(5);
      if (obj.radius <= 0) fail(path, lineno, "sphere radius must be > 0");
      scene.objects.push_back(obj);
    } else if (tok[0] == "block") {
      expect_args(7, "block minx miny minz maxx maxy maxz material");
      SceneObject obj;
      obj.kind = SceneObject::Kind::block;
      obj.box_min = {num(1), num(2), num(3)};
      obj.box_max = {num(4), num(5), num(6)};
      obj.material = integer(7);
      if (obj.box_min.x >= obj.box_max.x || obj.box_min.y >= obj.box_max.y ||
          obj.box_min.z >= obj.box_max.z) {
        fail(path, lineno, "block extents must be positive");
      }
      scene.objects.push_back(obj);
    } else if (tok[0] == "light") {
      expect_args(11, "light cx cy cz ux uy uz vx vy vz scale SPECTRUM");
      SceneLight light;
      light.corner = {num(1), num(2), num(3)};
      light.edge_u = {num(4), num(5), num(6)};
      light.edge_v = {num(7), num(8), num(9)};
      light.scale = num(10);
      light.spd = parse_spectrum_spec(tok[11], /*reflectance=*/false, base_dir);
      scene.lights.push_back(std::move(light));
    } else {
      fail(path, lineno, "unknown directive '" + tok[0] + "'");
    }
  }

  const int material_count = static_cast<int>(scene.materials.size());
  for (int w = 0; w < 6; ++w) {
    if (scene.wall_material[static_cast<std::size_t>(w)] >= material_count) {
      fail(path, "wall references material " +
                     std::to_string(
                         scene.wall_material[static_cast<std::size_t>(w)]) +
                     " but only " + std::to_string(material_count) +
                     " are defined");
    }
  }
  for (const auto& obj : scene.objects) {
    if (obj.material < 0 || obj.material >= material_count) {
      fail(path, "object references an undefined material");
    }
  }
  return scene;
}

// ---------------------------------------------------------------------------
// Config files.

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f = open_in(path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    std::string key, value;
    const std::size_t eq = line.find('=');
    if (eq != std::string::npos) {
      key = trim(line.substr(0, eq));
      value = trim(line.substr(eq + 1));
    } else {
      const std::size_t sp = line.find_first_of(" \t");
      if (sp == std::string::npos) {
        fail(path, lineno, "expected 'key value' or 'key = value'");
      }
      key = trim(line.substr(0, sp));
      value = trim(line.substr(sp + 1));
    }
    if (key.empty() || value.empty()) {
      fail(path, lineno, "empty key or value");
    }
    kv[key] = value;
  }
  return kv;
}

namespace {

double cfg_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw FormatError("config key " + key + ": bad number '" + value + "'");
  }
  if (pos != value.size()) {
    throw FormatError("config key " + key + ": bad number '" + value + "'");
  }
  return v;
}

int cfg_int(const std::string& key, const std::string& value) {
  const double v = cfg_double(key, value);
  if (v != std::floor(v)) {
    throw FormatError("config key " + key + ": expected an integer");
  }
  return static_cast<int>(v);
}

std::uint64_t cfg_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw FormatError("config key " + key + ": bad unsigned integer '" +
                      value + "'");
  }
}

}  // namespace

void apply_train_config(const std::map<std::string, std::string>& kv,
                        TrainConfig* cfg, LossWeights* lw) {
  for (const auto& [key, value] : kv) {
    if (key == "lr") {
      cfg->lr = cfg_double(key, value);
    } else if (key == "batch_size") {
      cfg->batch_size = cfg_int(key, value);
    } else if (key == "max_epochs") {
      cfg->max_epochs = cfg_int(key, value);
    } else if (key == "patience") {
      cfg->patience = cfg_int(key, value);
    } else if (key == "val_fraction") {
      cfg->val_fraction = cfg_double(key, value);
    } else if (key == "illum_scale_min") {
      cfg->illum_scale_min = cfg_double(key, value);
    } else if (key == "illum_scale_max") {
      cfg->illum_scale_max = cfg_double(key, value);
    } else if (key == "steps_per_epoch") {
      cfg->steps_per_epoch = cfg_int(key, value);
    } else if (key == "seed") {
      cfg->seed = cfg_u64(key, value);
    } else if (key == "lambda_e2e") {
      lw->e2e = cfg_double(key, value);
    } else if (key == "lambda_rec") {
      lw->rec = cfg_double(key, value);
    } else if (key == "lambda_code") {
      lw->code = cfg_double(key, value);
    } else if (key == "lambda_col") {
      lw->col = cfg_double(key, value);
    } else if (key == "lambda_alg") {
      lw->alg = cfg_double(key, value);
    } else {
      throw FormatError("unknown training config key '" + key + "'");
    }
  }
}

void apply_upsample_config(const std::map<std::string, std::string>& kv,
                           UpsampleTrainConfig* cfg) {
  for (const auto& [key, value] : kv) {
    if (key == "lr") {
      cfg->lr = cfg_double(key, value);
    } else if (key == "weight_decay") {
      cfg->weight_decay = cfg_double(key, value);
    } else if (key == "batch_size") {
      cfg->batch_size = cfg_int(key, value);
    } else if (key == "grad_clip_norm") {
      cfg->grad_clip_norm = cfg_double(key, value);
    } else if (key == "epochs") {
      cfg->epochs = cfg_int(key, value);
    } else if (key == "plateau_factor") {
      cfg->plateau_factor = cfg_double(key, value);
    } else if (key == "plateau_patience") {
      cfg->plateau_patience = cfg_int(key, value);
    } else if (key == "min_lr") {
      cfg->min_lr = cfg_double(key, value);
    } else if (key == "lambda_maxabs") {
      cfg->lambda_maxabs = cfg_double(key, value);
    } else if (key == "lambda_color") {
      cfg->lambda_color = cfg_double(key, value);
    } else if (key == "hidden") {
      cfg->hidden = cfg_int(key, value);
    } else if (key == "seed") {
      cfg->seed = cfg_u64(key, value);
    } else {
      throw FormatError("unknown upsampler config key '" + key + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// Manifests and reports.

std::uint64_t hash_file(const std::string& path) {
  std::ifstream f = open_in(path, /*binary=*/true);
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[65536];
  while (f) {
    f.read(buf, sizeof buf);
    const std::streamsize got = f.gcount();
    if (got > 0) h = fnv1a64(buf, static_cast<std::size_t>(got), h);
  }
  return h;
}

void write_manifest(const std::string& path, const Manifest& m) {
  json inputs = json::array();
  for (const auto& in : m.inputs) {
    inputs.push_back({{"path", in.path}, {"fnv1a64", in.fnv1a64_hex}});
  }
  const json j{{"tool_version", m.tool_version},
               {"command", m.command},
               {"seeds", m.seeds},
               {"inputs", inputs},
               {"outputs", m.outputs},
               {"extra", m.extra},
               {"wall_seconds", m.wall_seconds}};
  dump_json_file(path, j);
}

void write_train_report_csv(const std::string& path, const TrainReport& r) {
  std::ofstream f = open_out(path);
  f << "epoch,e2e,rec,code,col,alg,train_total,val_total\n";
  for (const auto& e : r.epochs) {
    f << e.epoch;
    for (double v : {e.e2e, e.rec, e.code, e.col, e.alg, e.train_total,
                     e.val_total}) {
      f << ',';
      print_g9(f, v);
    }
    f << '\n';
  }
  finish_out(f, path);
}

void write_upsample_report_csv(const std::string& path,
                               const UpsampleReport& r) {
  std::ofstream f = open_out(path);
  f << "epoch,latent_mse,latent_maxabs,color,total,lr\n";
  for (const auto& e : r.epochs) {
    f << e.epoch;
    for (double v : {e.latent_mse, e.latent_maxabs, e.color, e.total, e.lr}) {
      f << ',';
      print_g9(f, v);
    }
    f << '\n';
  }
  finish_out(f, path);
}

void write_grid_search_csv(const std::string& path,
                           const std::vector<GridSearchEntry>& entries) {
  std::ofstream f = open_out(path);
  f << "variant,lambda_e2e,lambda_rec,lambda_code,lambda_col,lambda_alg,"
       "de94_b1,de94_b2,de94_b3,de94_mean,rank\n";
  for (const auto& e : entries) {
    f << e.variant;
    for (double v : {e.lw.e2e, e.lw.rec, e.lw.code, e.lw.col, e.lw.alg,
                     e.de94_b1, e.de94_b2, e.de94_b3, e.de94_mean}) {
      f << ',';
      print_g9(f, v);
    }
    f << ',' << e.rank << '\n';
  }
  finish_out(f, path);
}

}  // namespace hadacodec
