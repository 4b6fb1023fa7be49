#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadacodec/codec.hpp"
#include "hadacodec/dataset.hpp"
#include "hadacodec/renderer.hpp"
#include "hadacodec/trainer.hpp"
#include "hadacodec/upsampler.hpp"

namespace hadacodec {

inline constexpr const char* kToolVersion = "1.0.0";

// Malformed input files raise FormatError with file, location, and cause.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spectra CSV: header row of wavelengths (9 significant digits; optional
// leading `id` column), one curve per subsequent row.

struct SpectraCsv {
  std::vector<double> wavelengths;
  std::vector<std::string> ids;  // empty when the file has no id column
  std::vector<std::vector<double>> rows;
};

SpectraCsv read_spectra_csv(const std::string& path);

// Writes curves on the canonical grid. `ids` may be empty (no id column).
void write_spectra_csv(const std::string& path,
                       const std::vector<std::string>& ids,
                       const std::vector<SpectralCurve>& curves);

// Labeled dataset CSV (id, kind, origin, split + samples) used by
// gen-dataset output directories.
void write_dataset_csv(const std::string& path,
                       const std::vector<LabeledSpectrum>& items);
std::vector<LabeledSpectrum> read_dataset_csv(const std::string& path);

// Codes CSV: header `id,c0..c{k-1}`.
struct CodesCsv {
  std::vector<std::string> ids;
  std::vector<LatentCode> codes;
};
CodesCsv read_codes_csv(const std::string& path);
void write_codes_csv(const std::string& path,
                     const std::vector<std::string>& ids,
                     const std::vector<LatentCode>& codes);

// ---------------------------------------------------------------------------
// Weight files (JSON; float arrays round-trip bit-exactly).

CodecWeights load_codec_weights(const std::string& path);
void save_codec_weights(const std::string& path, const CodecWeights& w);

UpsamplerWeights load_upsampler_weights(const std::string& path);
void save_upsampler_weights(const std::string& path,
                            const UpsamplerWeights& w);

// ---------------------------------------------------------------------------
// Raw channel images: magic "HCF1", then little-endian uint32 width, height,
// channels, then width*height*channels little-endian float32, row-major
// (y, x, channel).

ChannelImage read_raw_image(const std::string& path);
void write_raw_image(const std::string& path, const ChannelImage& img);

// Binary 8-bit PPM (P6).
void write_ppm(const std::string& path, int width, int height,
               const std::vector<unsigned char>& rgb8);
struct Ppm8 {
  int width = 0, height = 0;
  std::vector<unsigned char> rgb;
};
Ppm8 read_ppm(const std::string& path);

// ---------------------------------------------------------------------------
// Scene description files (line-oriented; see README for the grammar).
Scene load_scene(const std::string& path);

// Spectral primitive expressions used by scene files:
//   flat:V | gauss:CENTER,SIGMA,AMP | blackbody:KELVIN | d65 | csv:PATH#ID
// joined with `+`. Reflectances clamp to [0, 1]; emitter spectra are
// unit-peak normalized. All results are zeroed outside [400, 700] nm.
SpectralCurve parse_spectrum_spec(const std::string& spec, bool reflectance,
                                  const std::string& base_dir = "");

// ---------------------------------------------------------------------------
// Flat key/value config files (`key value` or `key = value`, `#` comments).
std::map<std::string, std::string> read_config_file(const std::string& path);

// Applies recognized keys onto defaults; unknown keys raise FormatError.
void apply_train_config(const std::map<std::string, std::string>& kv,
                        TrainConfig* cfg, LossWeights* lw);
void apply_upsample_config(const std::map<std::string, std::string>& kv,
                           UpsampleTrainConfig* cfg);

// ---------------------------------------------------------------------------
// Run manifests: every pipeline command records tool version, seeds, input
// hashes, output paths, and wall time next to its primary output.

struct ManifestInput {
  std::string path;
  std::string fnv1a64_hex;
};

struct Manifest {
  std::string tool_version = kToolVersion;
  std::string command;
  std::vector<std::uint64_t> seeds;
  std::vector<ManifestInput> inputs;
  std::vector<std::string> outputs;
  std::map<std::string, std::string> extra;
  double wall_seconds = 0;
};

std::uint64_t hash_file(const std::string& path);  // FNV-1a of file bytes
void write_manifest(const std::string& path, const Manifest& m);

// Training logs.
void write_train_report_csv(const std::string& path, const TrainReport& r);
void write_upsample_report_csv(const std::string& path,
                               const UpsampleReport& r);
void write_grid_search_csv(const std::string& path,
                           const std::vector<GridSearchEntry>& entries);

}  // namespace hadacodec
