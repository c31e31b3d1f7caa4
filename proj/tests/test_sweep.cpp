#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "hodec/sweep.hpp"

using namespace hodec;

namespace {

// synthetic curve pair with a prescribed difference d(v)
std::vector<SweepSample> samples_from_difference(double v_min, double v_max, double step,
                                                 double (*difference)(double)) {
  std::vector<SweepSample> out;
  for (double v = v_min; v <= v_max + 1e-9; v += step) {
    const double d = difference(v);
    out.push_back(SweepSample{v, 0.5 + 0.5 * d, 0.5 - 0.5 * d});
  }
  return out;
}

int transversal_and_touch_count(const SweepResult& r) {
  return static_cast<int>(r.intersections.size());
}

// near-tangent: the difference is already tiny on a bracketing sample
bool near_tangent(const std::vector<SweepSample>& samples, double v) {
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    if (samples[i].velocity <= v && v <= samples[i + 1].velocity) {
      const double a = std::abs(samples[i].gamma_f - samples[i].gamma_m);
      const double b = std::abs(samples[i + 1].gamma_f - samples[i + 1].gamma_m);
      return std::min(a, b) < 0.01;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("find_intersections locates sign changes by interpolation") {
  SUBCASE("symmetric sign change lands on the midpoint") {
    const std::vector<SweepSample> s = {{9.0, 0.55, 0.45}, {11.0, 0.45, 0.55}};
    const auto hits = find_intersections(s);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == doctest::Approx(10.0).epsilon(1e-12));
  }

  SUBCASE("no sign change, no intersections") {
    const std::vector<SweepSample> s = {{0, 0.8, 0.4}, {10, 0.7, 0.5}, {20, 0.9, 0.3}};
    CHECK(find_intersections(s).empty());
  }

  SUBCASE("an exact zero between same-signed neighbors is reported once") {
    const std::vector<SweepSample> s = {{4, 0.6, 0.5}, {5, 0.5, 0.5}, {6, 0.6, 0.5}};
    const auto hits = find_intersections(s);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == 5.0);
  }

  SUBCASE("a crossing that passes through a sample is not double counted") {
    const std::vector<SweepSample> s = {{4, 0.6, 0.5}, {5, 0.5, 0.5}, {6, 0.4, 0.5}};
    const auto hits = find_intersections(s);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == 5.0);
  }

  SUBCASE("identical curves yield nothing") {
    const std::vector<SweepSample> s = {{0, 0.5, 0.5}, {10, 0.6, 0.6}, {20, 0.7, 0.7}};
    CHECK(find_intersections(s).empty());
  }

  SUBCASE("asymmetric crossing interpolates linearly") {
    // d: +0.3 at v=0, -0.1 at v=1 -> root at 0.75
    const std::vector<SweepSample> s = {{0.0, 0.65, 0.35}, {1.0, 0.45, 0.55}};
    const auto hits = find_intersections(s);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == doctest::Approx(0.75).epsilon(1e-12));
  }
}

TEST_CASE("reported intersections satisfy the interpolated-zero bound") {
  const auto check_zeros = [](const std::vector<SweepSample>& samples,
                              const std::vector<double>& hits) {
    for (double v : hits) {
      for (size_t i = 0; i + 1 < samples.size(); ++i) {
        if (samples[i].velocity <= v && v <= samples[i + 1].velocity) {
          const double t = (v - samples[i].velocity) /
                           (samples[i + 1].velocity - samples[i].velocity);
          const double df = samples[i].gamma_f + t * (samples[i + 1].gamma_f - samples[i].gamma_f);
          const double dm = samples[i].gamma_m + t * (samples[i + 1].gamma_m - samples[i].gamma_m);
          CHECK(std::abs(df - dm) < 1e-6);
          break;
        }
      }
    }
  };

  const auto sinuous = samples_from_difference(0, 20, 0.1, [](double v) {
    return 0.2 * std::sin(v);
  });
  check_zeros(sinuous, find_intersections(sinuous));

  SweepSpec spec;
  spec.preset = find_preset("fig8-high");
  const SweepResult r = run_sweep(spec);
  check_zeros(r.samples, r.intersections);
}

TEST_CASE("run_sweep validates its spec") {
  SweepSpec spec;
  spec.preset = find_preset("fig8-high");
  spec.v_min = 5;
  spec.v_max = 5;
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpec);
  spec.v_max = 4;
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpec);
  spec.v_min = 0;
  spec.v_max = 20;
  spec.step = 0;
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpec);
  spec.step = 15.0;  // fewer than three samples
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpec);

  spec.step = 0.1;
  spec.service = ServiceType::Data;
  CHECK_THROWS_AS(run_sweep(spec), MissingProfile);
}

TEST_CASE("voice sweep under the strong preset") {
  SweepSpec spec;
  spec.preset = find_preset("fig8-high");
  const SweepResult r = run_sweep(spec);

  CHECK(r.samples.size() == 201);
  for (const SweepSample& s : r.samples) {
    CHECK(s.gamma_f >= 0.0);
    CHECK(s.gamma_f <= 1.0);
    CHECK(s.gamma_m >= 0.0);
    CHECK(s.gamma_m <= 1.0);
  }
  // descending femto velocity: the femto factor falls across the sweep
  CHECK(r.samples.front().gamma_f > r.samples.back().gamma_f);
  CHECK(r.samples.front().gamma_f > r.samples.front().gamma_m);

  REQUIRE(!r.intersections.empty());
  for (double v : r.intersections) {
    CHECK(v >= 0.0);
    CHECK(v <= 20.0);
  }

  // segments partition the sampled span
  REQUIRE(!r.segments.empty());
  CHECK(r.segments.front().v_lo == 0.0);
  CHECK(r.segments.back().v_hi == 20.0);
  for (size_t i = 1; i < r.segments.size(); ++i) {
    CHECK(r.segments[i].v_lo == r.segments[i - 1].v_hi);
  }
}

TEST_CASE("identical networks produce identical curves and no intersections") {
  SweepSpec spec;
  spec.preset = find_preset("fig8-high");  // same anchors on both sides
  const VariableRanges macro_ranges =
      ProfileTable::builtin().lookup(ServiceType::Voice, NetworkKind::Macrocell);
  spec.profiles.set(ServiceType::Voice, NetworkKind::Femtocell, macro_ranges);  // ascending too

  const SweepResult r = run_sweep(spec);
  for (const SweepSample& s : r.samples) CHECK(s.gamma_f == s.gamma_m);
  CHECK(r.intersections.empty());
  REQUIRE(r.segments.size() == 1);
  CHECK(r.segments[0].preferred == NetworkKind::Femtocell);  // ties prefer femto
}

TEST_CASE("preferred segments") {
  const DecisionConfig cfg{0.6, 1.0};

  SUBCASE("single crossing splits the span") {
    SweepSpec spec;
    spec.preset = find_preset("fig8-high");
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.intersections.size() == 1);
    CHECK(r.intersections[0] == doctest::Approx(10.0).epsilon(1e-9));
    REQUIRE(r.segments.size() == 2);
    CHECK(r.segments[0].preferred == NetworkKind::Femtocell);
    CHECK(r.segments[1].preferred == NetworkKind::Macrocell);
  }

  SUBCASE("no crossing, one segment") {
    const auto samples = samples_from_difference(0, 20, 0.5, [](double) { return 0.4; });
    const auto segments = preferred_segments(samples, {}, cfg);
    REQUIRE(segments.size() == 1);
    CHECK(segments[0].v_lo == 0.0);
    CHECK(segments[0].v_hi == 20.0);
    CHECK(segments[0].preferred == NetworkKind::Femtocell);
  }

  SUBCASE("two crossings alternate three segments") {
    const auto samples = samples_from_difference(0, 20, 0.1, [](double v) {
      return 0.2 * std::cos(3.14159265358979323846 * v / 10.0);  // roots at 5 and 15
    });
    const auto hits = find_intersections(samples);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(hits[1] == doctest::Approx(15.0).epsilon(1e-3));
    const auto segments = preferred_segments(samples, hits, cfg);
    REQUIRE(segments.size() == 3);
    CHECK(segments[0].preferred == NetworkKind::Femtocell);
    CHECK(segments[1].preferred == NetworkKind::Macrocell);
    CHECK(segments[2].preferred == NetworkKind::Femtocell);
  }
}

TEST_CASE("segment verdicts agree with direct re-evaluation") {
  std::mt19937 rng(31);
  for (const char* preset : {"fig8-high", "fig10-low"}) {
    SweepSpec spec;
    spec.preset = find_preset(preset);
    const SweepResult r = run_sweep(spec);
    const VariableSet fvars =
        build_variables(spec.profiles.lookup(spec.service, NetworkKind::Femtocell));
    const VariableSet mvars =
        build_variables(spec.profiles.lookup(spec.service, NetworkKind::Macrocell));

    for (const Segment& seg : r.segments) {
      std::uniform_real_distribution<double> inside(seg.v_lo + spec.step, seg.v_hi - spec.step);
      if (inside.a() >= inside.b()) continue;
      for (int i = 0; i < 10; ++i) {
        const double v = inside(rng);
        FuzzyInput fin{level_peak(fvars.rssi, spec.preset.femto.rssi),
                       level_peak(fvars.rate, spec.preset.femto.rate), v,
                       level_peak(fvars.snir, spec.preset.femto.snir)};
        FuzzyInput min{level_peak(mvars.rssi, spec.preset.macro.rssi),
                       level_peak(mvars.rate, spec.preset.macro.rate), v,
                       level_peak(mvars.snir, spec.preset.macro.snir)};
        const double gf = defuzzify_centroid(infer(spec.rulebase, fin, fvars));
        const double gm = defuzzify_centroid(infer(spec.rulebase, min, mvars));
        const HandoverOutcome o = decide_case2(HandoverFactor{gf, NetworkKind::Femtocell},
                                               HandoverFactor{gm, NetworkKind::Macrocell},
                                               spec.config);
        const NetworkKind preferred = o.verdict == Verdict::HandoverToFemto
                                          ? NetworkKind::Femtocell
                                          : NetworkKind::Macrocell;
        CHECK(preferred == seg.preferred);
      }
    }
  }
}

TEST_CASE("halving the step leaves crossing counts stable") {
  for (auto service : {ServiceType::Voice, ServiceType::Video}) {
    for (const char* preset : {"fig8-high", "fig9-medium", "fig10-low"}) {
      SweepSpec spec;
      spec.service = service;
      spec.preset = find_preset(preset);
      spec.step = 0.1;
      const SweepResult coarse = run_sweep(spec);
      spec.step = 0.05;
      const SweepResult fine = run_sweep(spec);

      int allowance = 0;
      for (double v : coarse.intersections) allowance += near_tangent(coarse.samples, v);
      for (double v : fine.intersections) allowance += near_tangent(fine.samples, v);

      const int delta = std::abs(transversal_and_touch_count(coarse) -
                                 transversal_and_touch_count(fine));
      CHECK(delta <= allowance);
    }
  }
}

TEST_CASE("csv export") {
  SweepSpec spec;
  spec.preset = find_preset("fig8-high");
  const SweepResult r = run_sweep(spec);

  std::ostringstream os;
  export_csv(r, os);
  const std::string csv = os.str();

  SUBCASE("header, one row per sample, trailing comment") {
    CHECK(csv.rfind("velocity_kmh,gamma_femto,gamma_macro\n", 0) == 0);
    size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 1 + r.samples.size() + 1);
    CHECK(csv.find("# intersections: 10.000000\n") != std::string::npos);
  }

  SUBCASE("rows parse back to six decimal places") {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    for (const SweepSample& s : r.samples) {
      REQUIRE(std::getline(in, line));
      double v = 0, gf = 0, gm = 0;
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &v, &gf, &gm) == 3);
      CHECK(std::abs(v - s.velocity) <= 5e-7);
      CHECK(std::abs(gf - s.gamma_f) <= 5e-7);
      CHECK(std::abs(gm - s.gamma_m) <= 5e-7);
    }
  }

  SUBCASE("no crossings prints none") {
    SweepResult flat;
    flat.samples = samples_from_difference(0, 2, 1.0, [](double) { return 0.1; });
    std::ostringstream fs;
    export_csv(flat, fs);
    CHECK(fs.str().find("# intersections: none\n") != std::string::npos);
  }

  SUBCASE("a broken stream raises IoError") {
    std::ostringstream bad;
    bad.setstate(std::ios::badbit);
    CHECK_THROWS_AS(export_csv(r, bad), IoError);
  }
}

TEST_CASE("preset lookup") {
  CHECK(find_preset("fig8-high").name == "fig8-high");
  CHECK(find_preset("fig9-medium").macro.rssi == InputLevel::Medium);
  CHECK(find_preset("fig10-low").macro.snir == InputLevel::Medium);
  CHECK(builtin_presets().size() == 3);
  CHECK_THROWS_AS(find_preset("fig11-ultra"), InvalidSpec);
}
