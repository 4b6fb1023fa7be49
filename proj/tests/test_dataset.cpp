#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hadacodec/colorimetry.hpp"
#include "hadacodec/dataset.hpp"
#include "hadacodec/rng.hpp"
#include "hadacodec/spectrum.hpp"

using namespace hadacodec;

TEST_CASE("label string round trips") {
  CHECK(split_from_string(to_string(Split::train)) == Split::train);
  CHECK(split_from_string(to_string(Split::test)) == Split::test);
  for (Origin o : {Origin::munsell, Origin::optimal, Origin::smooth_saturated,
                   Origin::broadband_synth, Origin::narrowband_synth,
                   Origin::daylight_synth, Origin::flipped}) {
    CHECK(origin_from_string(to_string(o)) == o);
  }
  CHECK_THROWS(split_from_string("nope"));
  CHECK_THROWS(origin_from_string("nope"));
}

TEST_CASE("boxed least squares: interior solution matches closed form") {
  // minimize (x1-1)^2 + (x2-2)^2 s.t. x1+x2 = 2, 0 <= x <= 10.
  // Unconstrained-by-box optimum: hyperplane projection of (1,2) = (0.5,1.5).
  BoxedLsProblem p;
  p.rows = 2;
  p.vars = 2;
  p.a = {1, 0, 0, 1};
  p.t = {1, 2};
  p.c = {1, 1};
  p.y0 = 2.0;
  p.lo = {0, 0};
  p.hi = {10, 10};
  const BoxedLsResult r = solve_boxed_least_squares(p);
  CHECK(r.converged);
  CHECK(r.kkt_residual <= 1e-8);
  CHECK(r.eq_residual <= 1e-10);
  CHECK(r.x[0] == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(r.x[1] == doctest::Approx(1.5).epsilon(1e-7));
}

TEST_CASE("boxed least squares: active box bound") {
  // Same objective, x1+x2 = 1.5, x <= 1: optimum (0.5, 1.0) with the
  // upper bound active on x2 (KKT multiplier 1 > 0).
  BoxedLsProblem p;
  p.rows = 2;
  p.vars = 2;
  p.a = {1, 0, 0, 1};
  p.t = {1, 2};
  p.c = {1, 1};
  p.y0 = 1.5;
  p.lo = {0, 0};
  p.hi = {1, 1};
  const BoxedLsResult r = solve_boxed_least_squares(p);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("boxed least squares: infeasible equality is reported") {
  // x1+x2 = 2 cannot be met inside [0, 0.8]^2 (max attainable 1.6).
  BoxedLsProblem p;
  p.rows = 2;
  p.vars = 2;
  p.a = {1, 0, 0, 1};
  p.t = {1, 2};
  p.c = {1, 1};
  p.y0 = 2.0;
  p.lo = {0, 0};
  p.hi = {0.8, 0.8};
  const BoxedLsResult r = solve_boxed_least_squares(p);
  CHECK_FALSE(r.converged);
  CHECK(r.eq_residual > 0.3);  // stuck at |1.6 - 2.0| = 0.4
}

TEST_CASE("boxed least squares: random overdetermined problem reaches KKT") {
  Rng rng = Rng::stream(3, "test.ls.random");
  BoxedLsProblem p;
  p.rows = 8;
  p.vars = 5;
  p.a.resize(40);
  for (double& v : p.a) v = rng.uniform(-1.0, 1.0);
  p.t.resize(8);
  for (double& v : p.t) v = rng.uniform(-1.0, 1.0);
  p.c.assign(5, 1.0);
  p.y0 = 1.0;
  p.lo.assign(5, 0.0);
  p.hi.assign(5, 1.0);
  const BoxedLsResult r = solve_boxed_least_squares(p);
  CHECK(r.converged);
  CHECK(r.kkt_residual <= 1e-8);
  double sum = 0.0;
  for (double v : r.x) {
    sum += v;
    CHECK(v >= -1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("optimal reflectances hit the luminance plane inside the box") {
  const auto items = gen_optimal_reflectances();
  CHECK(items.size() == 36u);  // 12 hues x 3 saturations, all feasible
  for (const auto& it : items) {
    CHECK(it.kind == SpectrumKind::reflectance);
    CHECK(it.origin == Origin::optimal);
    CHECK(curve_is_valid(it.curve, /*reflectance=*/true));
    // Zero outside the active band by construction.
    for (int i = 0; i < 4; ++i) CHECK(it.curve[i] == 0.0);
    for (int i = 34; i < kSampleCount; ++i) CHECK(it.curve[i] == 0.0);
    // Equality constraint: luminance Y = 30 under the weighted rows.
    const ColorTriple xyz = xyz_of_reflectance(it.curve);
    CHECK(xyz[1] == doctest::Approx(30.0).epsilon(1e-5));
  }
  // Deterministic: a second call reproduces identical curves.
  const auto again = gen_optimal_reflectances();
  REQUIRE(again.size() == items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(again[i].id == items[i].id);
    CHECK(again[i].curve.v == items[i].curve.v);
  }
}

TEST_CASE("smooth saturated reflectances are valid, smooth, distinct") {
  const auto items = gen_smooth_saturated();
  CHECK(items.size() == 144u);  // 24 hues x 6 saturations
  for (const auto& it : items) {
    CHECK(it.origin == Origin::smooth_saturated);
    CHECK(curve_is_valid(it.curve, /*reflectance=*/true));
    for (int i = 0; i < 4; ++i) CHECK(it.curve[i] == 0.0);
    for (int i = 34; i < kSampleCount; ++i) CHECK(it.curve[i] == 0.0);
    CHECK(it.curve.max_value() > 0.0);
  }
  // Gaussian-basis curves: bounded second difference inside the band
  // (smoothness, loosely).
  for (const auto& it : items) {
    for (int i = 6; i <= 31; ++i) {
      const double dd =
          it.curve[i + 1] - 2.0 * it.curve[i] + it.curve[i - 1];
      CHECK(std::abs(dd) < 0.35);
    }
  }
}

TEST_CASE("stand-in reflectance library is seeded and bounded") {
  const auto a = gen_munsell_standin(7);
  const auto b = gen_munsell_standin(7);
  const auto c = gen_munsell_standin(8);
  CHECK(a.size() == 64u);
  REQUIRE(b.size() == a.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].curve.v == b[i].curve.v);
    CHECK(curve_is_valid(a[i].curve, /*reflectance=*/true));
    if (a[i].curve.v != c[i].curve.v) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("blackbody curves follow displacement toward blue") {
  const SpectralCurve warm = blackbody_curve(2500);
  const SpectralCurve hot = blackbody_curve(10000);
  CHECK(warm.max_value() == doctest::Approx(1.0));
  CHECK(hot.max_value() == doctest::Approx(1.0));
  for (int i = 0; i < 4; ++i) {
    CHECK(warm[i] == 0.0);
    CHECK(hot[i] == 0.0);
  }
  // Ratio of blue (index 7, ~438 nm) to red (index 30, ~669 nm) energy grows
  // with temperature.
  const double warm_ratio = warm[7] / warm[30];
  const double hot_ratio = hot[7] / hot[30];
  CHECK(hot_ratio > warm_ratio * 2.0);
  // A 2500 K radiator rises monotonically toward the red end of the band.
  for (int i = 5; i < 33; ++i) CHECK(warm[i + 1] >= warm[i]);
}

TEST_CASE("daylight model at 6500 K lands near the tabulated white") {
  const SpectralCurve d65ish = daylight_curve(6500);
  CHECK(d65ish.max_value() == doctest::Approx(1.0));
  ColorTriple xyz = spectrum_to_xyz(d65ish);
  const double s = xyz[0] + xyz[1] + xyz[2];
  // Chromaticity within 0.01 of the tabulated D65 illuminant (the model is
  // an analytic fit, and the active-band zeroing shifts it slightly).
  CHECK(std::abs(xyz[0] / s - 0.3127) < 0.01);
  CHECK(std::abs(xyz[1] / s - 0.3290) < 0.01);
  CHECK_THROWS(daylight_curve(3000));  // model domain starts at 4000 K
}

TEST_CASE("synthetic illuminant deck composition") {
  const auto items = gen_illuminants_synthetic();
  std::map<Origin, int> by_origin;
  for (const auto& it : items) {
    by_origin[it.origin]++;
    CHECK(it.kind == SpectrumKind::illumination);
    CHECK(it.curve.max_value() == doctest::Approx(1.0));
    for (int i = 0; i < 4; ++i) CHECK(it.curve[i] == 0.0);
    for (int i = 34; i < kSampleCount; ++i) CHECK(it.curve[i] == 0.0);
  }
  CHECK(by_origin[Origin::broadband_synth] == 82);
  CHECK(by_origin[Origin::daylight_synth] == 13);
  CHECK(by_origin[Origin::narrowband_synth] == 367);
  CHECK(items.size() == 462u);
}

TEST_CASE("flip augmentation inverts, renormalizes, and drops flat curves") {
  std::vector<LabeledSpectrum> in(2);
  in[0].id = "bb";
  in[0].origin = Origin::broadband_synth;
  in[0].curve = gaussian_curve(550, 60, 1.0);
  zero_outside_active_band(in[0].curve);
  in[1].id = "flat1";
  in[1].origin = Origin::broadband_synth;
  in[1].curve = SpectralCurve::flat(1.0);  // flip of a constant is zero
  zero_outside_active_band(in[1].curve);

  const auto flipped = flip_augment(in);
  REQUIRE(flipped.size() == 1u);  // the constant curve's flip vanished
  CHECK(flipped[0].id == "bb_flip");
  CHECK(flipped[0].origin == Origin::flipped);
  CHECK(flipped[0].curve.max_value() == doctest::Approx(1.0));
  // The peak of the original (550 nm, index ~18) is now a valley.
  const int peak_idx = 18;
  CHECK(flipped[0].curve[peak_idx] < 0.1);
}

TEST_CASE("cosine dedup keeps the first of near-duplicates") {
  std::vector<LabeledSpectrum> in(3);
  in[0].id = "a";
  in[0].curve = gaussian_curve(550, 50, 1.0);
  in[1].id = "a_clone";
  in[1].curve = gaussian_curve(551, 50, 0.9);  // nearly parallel to a
  in[2].id = "b";
  in[2].curve = gaussian_curve(430, 8, 1.0);  // very different support
  const auto kept = cosine_dedup(in, 0.95);
  REQUIRE(kept.size() == 2u);
  CHECK(kept[0].id == "a");
  CHECK(kept[1].id == "b");
  // With a permissive threshold everything stays.
  CHECK(cosine_dedup(in, 0.9999999).size() == 3u);
}

TEST_CASE("ring sector split approximates the train fraction on dense data") {
  // 5000 smooth reflectances spread over hue and radius so the 180-sector
  // grid is densely populated.
  std::vector<LabeledSpectrum> items;
  Rng rng = Rng::stream(17, "test.split.dense");
  for (int i = 0; i < 5000; ++i) {
    LabeledSpectrum s;
    s.id = "x" + std::to_string(i);
    s.kind = SpectrumKind::reflectance;
    s.curve = add(gaussian_curve(rng.uniform(410.0, 690.0),
                                 rng.uniform(25.0, 120.0),
                                 rng.uniform(0.05, 0.9)),
                  SpectralCurve::flat(rng.uniform(0.0, 0.1)));
    for (int j = 0; j < kSampleCount; ++j) {
      s.curve[j] = std::min(1.0, s.curve[j]);
    }
    zero_outside_active_band(s.curve);
    items.push_back(std::move(s));
  }
  SplitConfig cfg;
  cfg.angular_bins = 36;
  cfg.train_fraction = 0.70;
  cfg.seed = 5;
  ring_sector_split(items, cfg);
  int train = 0;
  for (const auto& it : items) train += it.split == Split::train ? 1 : 0;
  const double frac = static_cast<double>(train) / items.size();
  CHECK(frac > 0.65);
  CHECK(frac < 0.75);

  // Determinism.
  std::vector<LabeledSpectrum> again = items;
  for (auto& it : again) it.split = Split::train;
  ring_sector_split(again, cfg);
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(again[i].split == items[i].split);
  }
}

TEST_CASE("ring sector split sends sparse cells to train") {
  std::vector<LabeledSpectrum> items(1);
  items[0].id = "only";
  items[0].kind = SpectrumKind::reflectance;
  items[0].curve = gaussian_curve(550, 50, 0.5);
  items[0].split = Split::test;  // must be overwritten
  SplitConfig cfg;
  cfg.angular_bins = 180;
  ring_sector_split(items, cfg);
  CHECK(items[0].split == Split::train);
}

TEST_CASE("full dataset build composition and pools") {
  DatasetBuildOptions opts;
  opts.seed = 0;
  DatasetBuildStats stats;
  const Dataset ds = build_dataset(opts, &stats);

  // 64 stand-in + 36 optimal + 144 smooth, never deduplicated.
  CHECK(ds.reflectance.size() == 244u);
  CHECK(stats.reflectance_total == 244);

  // 462 synthetic + 82 broadband flips before the cosine filter.
  CHECK(stats.illumination_candidates == 544);
  CHECK(static_cast<int>(ds.illumination.size()) == stats.illumination_kept);
  CHECK(stats.illumination_kept < stats.illumination_candidates);
  CHECK(stats.illumination_kept > 300);  // narrowband deck survives dedup

  // No duplicate ids within a kind.
  std::vector<std::string> ids;
  for (const auto& it : ds.illumination) ids.push_back(it.id);
  std::sort(ids.begin(), ids.end());
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());

  // Pool views match the split labels.
  const auto train_refl = ds.pool(SpectrumKind::reflectance, Split::train);
  const auto test_refl = ds.pool(SpectrumKind::reflectance, Split::test);
  CHECK(train_refl.size() + test_refl.size() == ds.reflectance.size());
  CHECK(static_cast<int>(train_refl.size()) == stats.reflectance_train);
  CHECK(static_cast<int>(test_refl.size()) == stats.reflectance_test);
  CHECK(stats.reflectance_test > 0);
  CHECK(stats.illumination_train > 0);
  CHECK(stats.illumination_test > 0);

  // Deterministic rebuild.
  const Dataset ds2 = build_dataset(opts, nullptr);
  REQUIRE(ds2.reflectance.size() == ds.reflectance.size());
  for (std::size_t i = 0; i < ds.reflectance.size(); ++i) {
    CHECK(ds2.reflectance[i].curve.v == ds.reflectance[i].curve.v);
    CHECK(ds2.reflectance[i].split == ds.reflectance[i].split);
  }
}
