#include "hadacodec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/io.hpp"
#include "hadacodec/rng.hpp"
#include "spectral_tables.hpp"

namespace hadacodec {

const char* to_string(SpectrumKind k) {
  return k == SpectrumKind::reflectance ? "reflectance" : "illumination";
}

const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    default: return "test";
  }
}

const char* to_string(Origin o) {
  switch (o) {
    case Origin::munsell: return "munsell";
    case Origin::optimal: return "optimal";
    case Origin::smooth_saturated: return "smooth_saturated";
    case Origin::broadband_synth: return "broadband_synth";
    case Origin::narrowband_synth: return "narrowband_synth";
    case Origin::daylight_synth: return "daylight_synth";
    default: return "flipped";
  }
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  if (s == "test") return Split::test;
  throw std::invalid_argument("unknown split label: " + s);
}

Origin origin_from_string(const std::string& s) {
  for (Origin o : {Origin::munsell, Origin::optimal, Origin::smooth_saturated,
                   Origin::broadband_synth, Origin::narrowband_synth,
                   Origin::daylight_synth, Origin::flipped}) {
    if (s == to_string(o)) return o;
  }
  throw std::invalid_argument("unknown origin label: " + s);
}

// ---------------------------------------------------------------------------
// Constrained least squares.

namespace {

// Exact Euclidean projection onto {x : c.x = y0, lo <= x <= hi} via bisection
// on the equality multiplier (the clamped-shift map is monotone in mu).
bool project_box_hyperplane(const std::vector<double>& c, double y0,
                            const std::vector<double>& lo,
                            const std::vector<double>& hi,
                            std::vector<double>* x) {
  const std::size_t n = x->size();
  const auto phi = [&](double mu) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::clamp((*x)[i] + mu * c[i], lo[i], hi[i]);
      acc += c[i] * v;
    }
    return acc - y0;
  };
  // Feasibility of the equality within the box.
  double min_val = 0.0, max_val = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    min_val += c[i] >= 0 ? c[i] * lo[i] : c[i] * hi[i];
    max_val += c[i] >= 0 ? c[i] * hi[i] : c[i] * lo[i];
  }
  if (y0 < min_val - 1e-12 || y0 > max_val + 1e-12) return false;

  double a = -1.0, b = 1.0;
  for (int i = 0; i < 90 && phi(a) > 0.0; ++i) a *= 2.0;
  for (int i = 0; i < 90 && phi(b) < 0.0; ++i) b *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    if (phi(mid) < 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  const double mu = 0.5 * (a + b);
  for (std::size_t i = 0; i < n; ++i) {
    (*x)[i] = std::clamp((*x)[i] + mu * c[i], lo[i], hi[i]);
  }
  return true;
}

}  // namespace

BoxedLsResult solve_boxed_least_squares(const BoxedLsProblem& p, double tol,
                                        int max_iterations) {
  const int n = p.vars, m = p.rows;
  BoxedLsResult res;
  res.x.assign(static_cast<std::size_t>(n), 0.0);

  // Start from the box midpoint projected onto the constraint set.
  for (int i = 0; i < n; ++i) {
    res.x[static_cast<std::size_t>(i)] =
        0.5 * (p.lo[static_cast<std::size_t>(i)] +
               p.hi[static_cast<std::size_t>(i)]);
  }
  if (!project_box_hyperplane(p.c, p.y0, p.lo, p.hi, &res.x)) {
    res.converged = false;
    res.eq_residual = std::abs(p.y0);
    return res;
  }

  const auto grad = [&](const std::vector<double>& x, std::vector<double>* g) {
    // g = 2 A^T (A x - t)
    std::vector<double> r(static_cast<std::size_t>(m), 0.0);
    for (int row = 0; row < m; ++row) {
      const double* arow = &p.a[static_cast<std::size_t>(row) * n];
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += arow[i] * x[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(row)] = acc - p.t[static_cast<std::size_t>(row)];
    }
    g->assign(static_cast<std::size_t>(n), 0.0);
    for (int row = 0; row < m; ++row) {
      const double* arow = &p.a[static_cast<std::size_t>(row) * n];
      const double rr = 2.0 * r[static_cast<std::size_t>(row)];
      for (int i = 0; i < n; ++i) (*g)[static_cast<std::size_t>(i)] += rr * arow[i];
    }
  };

  // Lipschitz constant of the gradient: 2 * lambda_max(A^T A), estimated by
  // power iteration.
  std::vector<double> v(static_cast<std::size_t>(n),
                        1.0 / std::sqrt(static_cast<double>(n)));
  double lambda = 0.0;
  for (int it = 0; it < 100; ++it) {
    std::vector<double> av(static_cast<std::size_t>(m), 0.0);
    for (int row = 0; row < m; ++row) {
      const double* arow = &p.a[static_cast<std::size_t>(row) * n];
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += arow[i] * v[static_cast<std::size_t>(i)];
      av[static_cast<std::size_t>(row)] = acc;
    }
    std::vector<double> atav(static_cast<std::size_t>(n), 0.0);
    for (int row = 0; row < m; ++row) {
      const double* arow = &p.a[static_cast<std::size_t>(row) * n];
      for (int i = 0; i < n; ++i) {
        atav[static_cast<std::size_t>(i)] +=
            arow[i] * av[static_cast<std::size_t>(row)];
      }
    }
    double nrm = 0.0;
    for (double x : atav) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-300) break;
    lambda = nrm;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = atav[i] / nrm;
  }
  const double step = 1.0 / std::max(2.02 * lambda, 1e-12);

  // FISTA with monotone restart.
  std::vector<double> x = res.x, y = res.x, x_prev = res.x, g;
  double t_mom = 1.0;
  const auto objective = [&](const std::vector<double>& xx) {
    double acc = 0.0;
    for (int row = 0; row < m; ++row) {
      const double* arow = &p.a[static_cast<std::size_t>(row) * n];
      double r = -p.t[static_cast<std::size_t>(row)];
      for (int i = 0; i < n; ++i) r += arow[i] * xx[static_cast<std::size_t>(i)];
      acc += r * r;
    }
    return acc;
  };
  double f_prev = objective(x);

  const auto kkt = [&](const std::vector<double>& xx) {
    std::vector<double> gg;
    grad(xx, &gg);
    std::vector<double> z = xx;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= gg[i];
    project_box_hyperplane(p.c, p.y0, p.lo, p.hi, &z);
    double r = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      r = std::max(r, std::abs(z[i] - xx[i]));
    }
    return r;
  };

  int it = 0;
  for (; it < max_iterations; ++it) {
    grad(y, &g);
    std::vector<double> x_next = y;
    for (std::size_t i = 0; i < x_next.size(); ++i) x_next[i] -= step * g[i];
    project_box_hyperplane(p.c, p.y0, p.lo, p.hi, &x_next);

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_mom * t_mom));
    const double beta = (t_mom - 1.0) / t_next;
    x_prev = x;
    x = x_next;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = x[i] + beta * (x[i] - x_prev[i]);
    }
    t_mom = t_next;

    if ((it + 1) % 50 == 0) {
      const double f = objective(x);
      if (f > f_prev) {  // restart momentum
        y = x;
        t_mom = 1.0;
      }
      f_prev = f;
      res.kkt_residual = kkt(x);
      if (res.kkt_residual <= tol) {
        ++it;
        break;
      }
    }
  }

  res.x = x;
  res.iterations = it;
  res.kkt_residual = kkt(x);
  double cx = 0.0;
  for (int i = 0; i < n; ++i) {
    cx += p.c[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  }
  res.eq_residual = std::abs(cx - p.y0);
  res.converged = res.kkt_residual <= tol;
  return res;
}

// ---------------------------------------------------------------------------
// Reflectance generators.

namespace {

struct Chromaticity {
  double x = 0, y = 0;
};

Chromaticity chromaticity_of(const ColorTriple& xyz) {
  const double s = xyz[0] + xyz[1] + xyz[2];
  return {xyz[0] / s, xyz[1] / s};
}

Chromaticity white_chromaticity() {
  return chromaticity_of(CmfTable::instance().white_xyz());
}

// 12 hue directions around the linear-sRGB hue circle (primaries,
// secondaries, and six intermediates).
std::vector<Chromaticity> hue_targets_12() {
  const double rgbs[12][3] = {
      {1, 0, 0}, {1, 0.5, 0}, {1, 1, 0}, {0.5, 1, 0},
      {0, 1, 0}, {0, 1, 0.5}, {0, 1, 1}, {0, 0.5, 1},
      {0, 0, 1}, {0.5, 0, 1}, {1, 0, 1}, {1, 0, 0.5},
  };
  std::vector<Chromaticity> out;
  out.reserve(12);
  for (const auto& rgb : rgbs) {
    ColorTriple c;
    c.space = ColorSpace::LinearRGB;
    c.c = {rgb[0], rgb[1], rgb[2]};
    out.push_back(chromaticity_of(linear_rgb_to_xyz(c)));
  }
  return out;
}

// HSV hue wheel (S = V = 1) in linear RGB for the finer 24-hue sweep.
std::array<double, 3> hue_wheel_rgb(double hue01) {
  const double h = hue01 * 6.0;
  const int sector = static_cast<int>(h) % 6;
  const double f = h - std::floor(h);
  switch (sector) {
    case 0: return {1, f, 0};
    case 1: return {1 - f, 1, 0};
    case 2: return {0, 1, f};
    case 3: return {0, 1 - f, 1};
    case 4: return {f, 0, 1};
    default: return {1, 0, 1 - f};
  }
}

// Target XYZ at luminance y0 for a hue chromaticity mixed toward the D65
// white by saturation s.
void target_xz(const Chromaticity& hue, double s, double y0, double* xt,
               double* zt) {
  const Chromaticity w = white_chromaticity();
  const double x = w.x + s * (hue.x - w.x);
  const double y = w.y + s * (hue.y - w.y);
  *xt = x * y0 / y;
  *zt = (1.0 - x - y) * y0 / y;
}

bool in_active_band(int i) {
  const double lambda = wavelength_at(i);
  return lambda >= kActiveBandMin && lambda <= kActiveBandMax;
}

BoxedLsProblem reflectance_problem(double xt, double zt, double y0) {
  const CmfTable& t = CmfTable::instance();
  BoxedLsProblem p;
  p.rows = 2;
  p.vars = kSampleCount;
  p.a.resize(2 * kSampleCount);
  p.t = {xt, zt};
  p.c.resize(kSampleCount);
  p.y0 = y0;
  p.lo.assign(kSampleCount, 0.0);
  p.hi.assign(kSampleCount, 1.0);
  for (int i = 0; i < kSampleCount; ++i) {
    p.a[static_cast<std::size_t>(i)] = t.wx()[i];
    p.a[static_cast<std::size_t>(kSampleCount + i)] = t.wz()[i];
    p.c[static_cast<std::size_t>(i)] = t.wy()[i];
    if (!in_active_band(i)) p.hi[static_cast<std::size_t>(i)] = 0.0;
  }
  return p;
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        count > 1 ? a + (b - a) * i / (count - 1) : a;
  }
  return out;
}

}  // namespace

std::vector<LabeledSpectrum> gen_optimal_reflectances(double s_min,
                                                      double s_max,
                                                      double y0) {
  const auto hues = hue_targets_12();
  const auto sats = linspace(s_min, s_max, 3);
  std::vector<LabeledSpectrum> out;
  for (std::size_t h = 0; h < hues.size(); ++h) {
    for (std::size_t si = 0; si < sats.size(); ++si) {
      double xt = 0, zt = 0;
      target_xz(hues[h], sats[si], y0, &xt, &zt);
      const BoxedLsProblem p = reflectance_problem(xt, zt, y0);
      BoxedLsResult r = solve_boxed_least_squares(p);
      if (!r.converged && r.eq_residual > 1e-6) {
        std::fprintf(stderr,
                     "gen_optimal_reflectances: target hue %zu sat %.3f "
                     "infeasible, skipping\n",
                     h, sats[si]);
        continue;
      }
      LabeledSpectrum ls;
      char id[64];
      std::snprintf(id, sizeof id, "opt_h%02zu_s%zu", h, si);
      ls.id = id;
      ls.kind = SpectrumKind::reflectance;
      ls.origin = Origin::optimal;
      for (int i = 0; i < kSampleCount; ++i) {
        ls.curve[i] = std::clamp(r.x[static_cast<std::size_t>(i)], 0.0, 1.0);
      }
      out.push_back(std::move(ls));
    }
  }
  return out;
}

std::vector<LabeledSpectrum> gen_smooth_saturated(double s_min, double s_max,
                                                  double y0) {
  constexpr int kBases = 8;
  constexpr double kSigma = 40.0;
  const auto centers = linspace(kActiveBandMin, kActiveBandMax, kBases);
  std::array<SpectralCurve, kBases> phi;
  for (int g = 0; g < kBases; ++g) {
    phi[static_cast<std::size_t>(g)] =
        gaussian_curve(centers[static_cast<std::size_t>(g)], kSigma, 1.0);
    zero_outside_active_band(phi[static_cast<std::size_t>(g)]);
  }
  const CmfTable& t = CmfTable::instance();

  std::vector<LabeledSpectrum> out;
  const auto sats = linspace(s_min, s_max, 6);
  for (int h = 0; h < 24; ++h) {
    const auto rgb = hue_wheel_rgb(h / 24.0);
    ColorTriple c;
    c.space = ColorSpace::LinearRGB;
    c.c = rgb;
    const Chromaticity hue = chromaticity_of(linear_rgb_to_xyz(c));
    for (std::size_t si = 0; si < sats.size(); ++si) {
      double xt = 0, zt = 0;
      target_xz(hue, sats[si], y0, &xt, &zt);
      // Same program, expressed over non-negative basis weights.
      BoxedLsProblem p;
      p.rows = 2;
      p.vars = kBases;
      p.a.assign(2 * kBases, 0.0);
      p.t = {xt, zt};
      p.c.assign(kBases, 0.0);
      p.y0 = y0;
      p.lo.assign(kBases, 0.0);
      p.hi.assign(kBases, 4.0);
      for (int g = 0; g < kBases; ++g) {
        for (int i = 0; i < kSampleCount; ++i) {
          p.a[static_cast<std::size_t>(g)] +=
              t.wx()[i] * phi[static_cast<std::size_t>(g)][i];
          p.a[static_cast<std::size_t>(kBases + g)] +=
              t.wz()[i] * phi[static_cast<std::size_t>(g)][i];
          p.c[static_cast<std::size_t>(g)] +=
              t.wy()[i] * phi[static_cast<std::size_t>(g)][i];
        }
      }
      BoxedLsResult r = solve_boxed_least_squares(p);
      if (!r.converged && r.eq_residual > 1e-6) {
        std::fprintf(stderr,
                     "gen_smooth_saturated: hue %d sat %.3f infeasible, "
                     "skipping\n",
                     h, sats[si]);
        continue;
      }
      LabeledSpectrum ls;
      char id[64];
      std::snprintf(id, sizeof id, "smooth_h%02d_s%zu", h, si);
      ls.id = id;
      ls.kind = SpectrumKind::reflectance;
      ls.origin = Origin::smooth_saturated;
      for (int i = 0; i < kSampleCount; ++i) {
        double v = 0.0;
        for (int g = 0; g < kBases; ++g) {
          v += r.x[static_cast<std::size_t>(g)] *
               phi[static_cast<std::size_t>(g)][i];
        }
        ls.curve[i] = std::clamp(v, 0.0, 1.0);
      }
      zero_outside_active_band(ls.curve);
      out.push_back(std::move(ls));
    }
  }
  return out;
}

std::vector<LabeledSpectrum> gen_munsell_standin(std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "dataset.munsell_standin");
  std::vector<LabeledSpectrum> out;
  out.reserve(64);
  for (int c = 0; c < 64; ++c) {
    const double c0 = rng.uniform(0.25, 0.65);
    double amp[3], phase[3];
    for (int j = 0; j < 3; ++j) {
      amp[j] = rng.uniform(0.0, 0.35 / (j + 1));
      phase[j] = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    }
    LabeledSpectrum ls;
    char id[32];
    std::snprintf(id, sizeof id, "mstandin_%03d", c);
    ls.id = id;
    ls.kind = SpectrumKind::reflectance;
    ls.origin = Origin::munsell;
    for (int i = 0; i < kSampleCount; ++i) {
      const double tpos =
          (wavelength_at(i) - kActiveBandMin) / (kActiveBandMax - kActiveBandMin);
      double v = c0;
      for (int j = 0; j < 3; ++j) {
        v += amp[j] * std::cos(2.0 * 3.14159265358979323846 * (j + 1) * tpos +
                               phase[j]);
      }
      ls.curve[i] = std::clamp(v, 0.0, 1.0);
    }
    zero_outside_active_band(ls.curve);
    out.push_back(std::move(ls));
  }
  return out;
}

std::vector<LabeledSpectrum> load_munsell(const std::string& path) {
  const SpectraCsv csv = read_spectra_csv(path);
  if (csv.rows.empty()) {
    std::fprintf(stderr, "load_munsell: %s contains no curves\n", path.c_str());
    return {};
  }
  std::vector<LabeledSpectrum> out;
  out.reserve(csv.rows.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    LabeledSpectrum ls;
    ls.id = r < csv.ids.size() ? csv.ids[r] : "munsell_" + std::to_string(r);
    ls.kind = SpectrumKind::reflectance;
    ls.origin = Origin::munsell;
    ls.curve = resample(csv.wavelengths, csv.rows[r], /*zero_outside=*/true);
    for (int i = 0; i < kSampleCount; ++i) {
      ls.curve[i] = std::clamp(ls.curve[i], 0.0, 1.0);
    }
    out.push_back(std::move(ls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Illumination generators.

SpectralCurve blackbody_curve(double kelvin) {
  // Relative Planck radiance; the second radiation constant in nm K.
  constexpr double c2_nm_k = 1.4387768775e7;
  SpectralCurve s;
  for (int i = 0; i < kSampleCount; ++i) {
    const double lambda = wavelength_at(i);
    const double x = c2_nm_k / (lambda * kelvin);
    s[i] = 1.0 / (std::pow(lambda / 560.0, 5.0) * std::expm1(x));
  }
  zero_outside_active_band(s);
  const double peak = s.max_value();
  if (peak > 0.0) s = scale(s, 1.0 / peak);
  return s;
}

SpectralCurve daylight_curve(double cct) {
  using namespace tables;
  const double t = cct;
  double xd;
  if (t <= 7000.0) {
    xd = 0.244063 + 0.09911e3 / t + 2.9678e6 / (t * t) -
         4.6070e9 / (t * t * t);
  } else {
    xd = 0.237040 + 0.24748e3 / t + 1.9018e6 / (t * t) -
         2.0064e9 / (t * t * t);
  }
  const double yd = -3.000 * xd * xd + 2.870 * xd - 0.275;
  const double m = 0.0241 + 0.2562 * xd - 0.7341 * yd;
  const double m1 = (-1.3515 - 1.7703 * xd + 5.9114 * yd) / m;
  const double m2 = (0.0300 - 31.4424 * xd + 30.0717 * yd) / m;

  std::vector<double> grid(kDaylightSamples), vals(kDaylightSamples);
  for (int i = 0; i < kDaylightSamples; ++i) {
    grid[static_cast<std::size_t>(i)] =
        kDaylightLambdaMin + kDaylightLambdaStep * i;
    vals[static_cast<std::size_t>(i)] =
        kDaylightS0[i] + m1 * kDaylightS1[i] + m2 * kDaylightS2[i];
  }
  SpectralCurve s = resample(grid, vals, /*zero_outside=*/true);
  for (int i = 0; i < kSampleCount; ++i) s[i] = std::max(s[i], 0.0);
  const double peak = s.max_value();
  if (peak > 0.0) s = scale(s, 1.0 / peak);
  return s;
}

std::vector<LabeledSpectrum> gen_illuminants_synthetic() {
  std::vector<LabeledSpectrum> out;

  // 82 blackbody radiators, CCT log-spaced on [2000, 12000] K.
  for (int i = 0; i < 82; ++i) {
    const double t = 2000.0 * std::exp(std::log(6.0) * i / 81.0);
    LabeledSpectrum ls;
    char id[48];
    std::snprintf(id, sizeof id, "bb_%02d_%.0fK", i, t);
    ls.id = id;
    ls.kind = SpectrumKind::illumination;
    ls.origin = Origin::broadband_synth;
    ls.curve = blackbody_curve(t);
    out.push_back(std::move(ls));
  }

  // Daylight model series.
  for (int j = 0; j <= 12; ++j) {
    const double cct = 4000.0 + 500.0 * j;
    LabeledSpectrum ls;
    char id[48];
    std::snprintf(id, sizeof id, "day_%.0fK", cct);
    ls.id = id;
    ls.kind = SpectrumKind::illumination;
    ls.origin = Origin::daylight_synth;
    ls.curve = daylight_curve(cct);
    out.push_back(std::move(ls));
  }

  // Narrowband Gaussians: single peaks and peak pairs on grid wavelengths
  // inside the active band, 367 curves total.
  std::vector<int> centers;
  for (int i = 0; i < kSampleCount; ++i) {
    if (in_active_band(i)) centers.push_back(i);
  }
  const auto push_narrow = [&](const char* id, const SpectralCurve& c) {
    LabeledSpectrum ls;
    ls.id = id;
    ls.kind = SpectrumKind::illumination;
    ls.origin = Origin::narrowband_synth;
    ls.curve = c;
    zero_outside_active_band(ls.curve);
    const double peak = ls.curve.max_value();
    if (peak > 0.0) ls.curve = scale(ls.curve, 1.0 / peak);
    out.push_back(std::move(ls));
  };
  for (const double sigma : {5.0, 10.0, 20.0}) {
    for (int ci : centers) {
      char id[48];
      std::snprintf(id, sizeof id, "nb_s%.0f_%.0f", sigma, wavelength_at(ci));
      push_narrow(id, gaussian_curve(wavelength_at(ci), sigma, 1.0));
    }
  }
  int pairs = 0;
  for (std::size_t a = 0; a < centers.size() && pairs < 277; ++a) {
    for (std::size_t b = a + 3; b < centers.size() && pairs < 277; ++b) {
      char id[48];
      std::snprintf(id, sizeof id, "nb2_%.0f_%.0f",
                    wavelength_at(centers[a]), wavelength_at(centers[b]));
      push_narrow(id, add(gaussian_curve(wavelength_at(centers[a]), 10.0, 1.0),
                          gaussian_curve(wavelength_at(centers[b]), 10.0, 0.7)));
      ++pairs;
    }
  }
  return out;
}

std::vector<LabeledSpectrum> load_lamp_spds(const std::string& path) {
  const SpectraCsv csv = read_spectra_csv(path);
  if (csv.rows.empty()) {
    std::fprintf(stderr, "load_lamp_spds: %s contains no curves\n",
                 path.c_str());
    return {};
  }
  std::vector<LabeledSpectrum> out;
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    LabeledSpectrum ls;
    ls.id = r < csv.ids.size() ? csv.ids[r] : "lamp_" + std::to_string(r);
    ls.kind = SpectrumKind::illumination;
    ls.origin = Origin::broadband_synth;
    ls.curve = resample(csv.wavelengths, csv.rows[r], /*zero_outside=*/true);
    for (int i = 0; i < kSampleCount; ++i) {
      ls.curve[i] = std::max(ls.curve[i], 0.0);
    }
    const double peak = ls.curve.max_value();
    if (peak <= 0.0) continue;
    ls.curve = scale(ls.curve, 1.0 / peak);
    out.push_back(std::move(ls));
  }
  return out;
}

std::vector<LabeledSpectrum> flip_augment(
    const std::vector<LabeledSpectrum>& broadband) {
  std::vector<LabeledSpectrum> out;
  for (const auto& src : broadband) {
    const double peak = src.curve.max_value();
    LabeledSpectrum ls;
    ls.id = src.id + "_flip";
    ls.kind = src.kind;
    ls.origin = Origin::flipped;
    for (int i = 0; i < kSampleCount; ++i) ls.curve[i] = peak - src.curve[i];
    zero_outside_active_band(ls.curve);
    const double fpeak = ls.curve.max_value();
    if (fpeak <= 1e-12) continue;  // flat input flips to nothing
    ls.curve = scale(ls.curve, 1.0 / fpeak);
    out.push_back(std::move(ls));
  }
  return out;
}

std::vector<LabeledSpectrum> cosine_dedup(
    const std::vector<LabeledSpectrum>& in, double tau) {
  std::vector<LabeledSpectrum> kept;
  std::vector<double> norms;
  for (const auto& item : in) {
    double n2 = 0.0;
    for (int i = 0; i < kSampleCount; ++i) n2 += item.curve[i] * item.curve[i];
    const double nrm = std::sqrt(n2);
    bool duplicate = false;
    for (std::size_t kidx = 0; kidx < kept.size(); ++kidx) {
      double dot = 0.0;
      for (int i = 0; i < kSampleCount; ++i) {
        dot += item.curve[i] * kept[kidx].curve[i];
      }
      const double sim = dot / (nrm * norms[kidx] + 1e-300);
      if (sim >= tau) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back(item);
      norms.push_back(nrm);
    }
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Ring-sector chromaticity split.

namespace {

std::array<double, 2> ab_coords(const LabeledSpectrum& ls) {
  const ColorTriple white = CmfTable::instance().white_xyz();
  ColorTriple xyz;
  if (ls.kind == SpectrumKind::reflectance) {
    xyz = xyz_of_reflectance(ls.curve);
  } else {
    xyz = spectrum_to_xyz(ls.curve);
    if (xyz[1] <= 0.0) return {0.0, 0.0};
    const double s = 100.0 / xyz[1];
    xyz.c = {xyz[0] * s, xyz[1] * s, xyz[2] * s};
  }
  const ColorTriple lab = xyz_to_lab(xyz, white);
  return {lab[1], lab[2]};
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void ring_sector_split(std::vector<LabeledSpectrum>& items,
                       const SplitConfig& cfg) {
  if (items.empty()) return;
  const std::size_t n = items.size();
  std::vector<double> as(n), bs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ab = ab_coords(items[i]);
    as[i] = ab[0];
    bs[i] = ab[1];
  }
  const double ca = median_of(as), cb = median_of(bs);

  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  std::vector<int> sector(n);
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double da = as[i] - ca, db = bs[i] - cb;
    double ang = std::atan2(db, da);
    if (ang < 0.0) ang += kTwoPi;
    sector[i] = std::min(cfg.angular_bins - 1,
                         static_cast<int>(ang / kTwoPi * cfg.angular_bins));
    radius[i] = std::hypot(da, db);
  }

  // Radial terciles within each sector.
  std::vector<std::vector<std::size_t>> by_sector(
      static_cast<std::size_t>(cfg.angular_bins));
  for (std::size_t i = 0; i < n; ++i) {
    by_sector[static_cast<std::size_t>(sector[i])].push_back(i);
  }
  std::vector<int> ring(n, 0);
  for (auto& members : by_sector) {
    if (members.empty()) continue;
    std::vector<double> radii;
    radii.reserve(members.size());
    for (auto i : members) radii.push_back(radius[i]);
    std::sort(radii.begin(), radii.end());
    const double q1 = radii[members.size() / 3];
    const double q2 = radii[2 * members.size() / 3];
    for (auto i : members) {
      ring[i] = radius[i] < q1 ? 0 : (radius[i] < q2 ? 1 : 2);
    }
  }

  // Per-cell allocation at the configured fraction; stochastic rounding keeps
  // the global fraction unbiased, fractional cells of <2 members go to train.
  for (int s = 0; s < cfg.angular_bins; ++s) {
    for (int r = 0; r < 3; ++r) {
      std::vector<std::size_t> cell;
      for (auto i : by_sector[static_cast<std::size_t>(s)]) {
        if (ring[i] == r) cell.push_back(i);
      }
      if (cell.empty()) continue;
      if (cell.size() < 2) {
        items[cell[0]].split = Split::train;
        continue;
      }
      char purpose[64];
      std::snprintf(purpose, sizeof purpose, "split.%d.%d.%d",
                    items[cell[0]].kind == SpectrumKind::reflectance ? 0 : 1,
                    s, r);
      Rng rng = Rng::stream(cfg.seed, purpose);
      for (std::size_t i = cell.size(); i > 1; --i) {
        std::swap(cell[i - 1], cell[rng.index(static_cast<std::uint32_t>(i))]);
      }
      const double want = cfg.train_fraction * static_cast<double>(cell.size());
      std::size_t n_train = static_cast<std::size_t>(std::floor(want));
      const double frac = want - std::floor(want);
      if (frac > 0.0 && rng.uniform() < frac) ++n_train;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        items[cell[i]].split = i < n_train ? Split::train : Split::test;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Dataset assembly.

std::vector<const SpectralCurve*> Dataset::pool(SpectrumKind kind,
                                                Split split) const {
  const auto& src =
      kind == SpectrumKind::reflectance ? reflectance : illumination;
  std::vector<const SpectralCurve*> out;
  for (const auto& item : src) {
    if (item.split == split) out.push_back(&item.curve);
  }
  return out;
}

Dataset build_dataset(const DatasetBuildOptions& opts,
                      DatasetBuildStats* stats) {
  Dataset ds;

  // Reflectances: measured library (or its stand-in) plus synthetic targets.
  std::vector<LabeledSpectrum> refl =
      opts.munsell_path ? load_munsell(*opts.munsell_path)
                        : gen_munsell_standin(opts.seed);
  {
    auto optimal = gen_optimal_reflectances();
    auto smooth = gen_smooth_saturated();
    refl.insert(refl.end(), optimal.begin(), optimal.end());
    refl.insert(refl.end(), smooth.begin(), smooth.end());
  }

  // Illuminations: synthetic families, optional measured lamps, flips of the
  // broadband members, then dedup.
  std::vector<LabeledSpectrum> illum = gen_illuminants_synthetic();
  if (opts.lamp_spd_path) {
    auto lamps = load_lamp_spds(*opts.lamp_spd_path);
    illum.insert(illum.end(), lamps.begin(), lamps.end());
  }
  {
    std::vector<LabeledSpectrum> broadband;
    for (const auto& item : illum) {
      if (item.origin == Origin::broadband_synth) broadband.push_back(item);
    }
    auto flips = flip_augment(broadband);
    illum.insert(illum.end(), flips.begin(), flips.end());
  }
  const int candidates = static_cast<int>(illum.size());
  illum = cosine_dedup(illum, 0.95);

  SplitConfig refl_cfg;
  refl_cfg.angular_bins = 180;
  refl_cfg.seed = opts.seed;
  ring_sector_split(refl, refl_cfg);

  SplitConfig illum_cfg;
  illum_cfg.angular_bins = 36;
  illum_cfg.seed = opts.seed;
  ring_sector_split(illum, illum_cfg);

  ds.reflectance = std::move(refl);
  ds.illumination = std::move(illum);

  if (stats != nullptr) {
    stats->reflectance_total = static_cast<int>(ds.reflectance.size());
    stats->illumination_candidates = candidates;
    stats->illumination_kept = static_cast<int>(ds.illumination.size());
    stats->reflectance_train = 0;
    stats->reflectance_test = 0;
    stats->illumination_train = 0;
    stats->illumination_test = 0;
    for (const auto& item : ds.reflectance) {
      (item.split == Split::train ? stats->reflectance_train
                                  : stats->reflectance_test)++;
    }
    for (const auto& item : ds.illumination) {
      (item.split == Split::train ? stats->illumination_train
                                  : stats->illumination_test)++;
    }
  }
  return ds;
}

}  // namespace hadacodec
