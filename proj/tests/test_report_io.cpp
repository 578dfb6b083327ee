#include <doctest.h>

#include <cmath>
#include <sstream>

#include "carastar/report_io.hpp"

using namespace carastar;

namespace {

const DiskGrid& small_grid() {
    static const DiskGrid grid(48, 128, 0.995);
    return grid;
}

} // namespace

TEST_CASE("format_real renders 12 significant digits") {
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(-17.0 / 24.0) == "-0.708333333333");
    SplitMix64 rng(111);
    for (int i = 0; i < 200; ++i) {
        const double x = (rng.uniform01() - 0.5) * std::pow(10.0, (int)(rng.next() % 9) - 4);
        CHECK(round12(round12(x)) == round12(x));
    }
}

TEST_CASE("theorem and verdict names round-trip") {
    for (TheoremId id : {TheoremId::T1, TheoremId::C1, TheoremId::C2, TheoremId::C3,
                         TheoremId::T2, TheoremId::C4, TheoremId::C5, TheoremId::C6,
                         TheoremId::T3, TheoremId::C7, TheoremId::C8, TheoremId::C9})
        CHECK(theorem_id_from_name(theorem_id_name(id)) == id);
    for (Verdict v : {Verdict::Certified, Verdict::HypothesisFails, Verdict::Counterexample,
                      Verdict::PreconditionFails})
        CHECK(verdict_from_name(verdict_name(v)) == v);
    CHECK_THROWS_AS(theorem_id_from_name("t9"), ConfigError);
    CHECK_THROWS_AS(verdict_from_name("maybe"), ConfigError);
}

TEST_CASE("series json: config pair encoding round-trips") {
    const PowerSeries s({Complex(1.0), Complex(0.0), Complex(0.07, -0.25)});
    const Json j = series_to_json(s);
    const PowerSeries back = series_from_json(j, "p");
    REQUIRE(back.truncation_order() == s.truncation_order());
    for (int k = 0; k <= s.truncation_order(); ++k) {
        CHECK(back.coefficient(static_cast<std::size_t>(k)).real() ==
              round12(s.coefficient(static_cast<std::size_t>(k)).real()));
        CHECK(back.coefficient(static_cast<std::size_t>(k)).imag() ==
              round12(s.coefficient(static_cast<std::size_t>(k)).imag()));
    }
    CHECK_THROWS_AS(series_from_json(Json::array(), "p"), ConfigError);
    CHECK_THROWS_AS(series_from_json(Json::parse("[[1,0],[1]]"), "p"), ConfigError);
}

TEST_CASE("theorem report serialization is a codec fixed point") {
    ExtremumEstimate fake_a;
    fake_a.value = 1.0;
    const HClassFunction p(PowerSeries({Complex(1.0), Complex(0.05)}), 1);
    const TheoremReport report = check_t1(p, PowerSeries({Complex(1.0)}), 0.0,
                                          ALowerBound(1.0, fake_a), small_grid());
    const Json j = to_json(report);
    const TheoremReport back = theorem_report_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.verdict == report.verdict);
    CHECK(back.theorem_id == report.theorem_id);
    CHECK(back.params.n == report.params.n);
    CHECK(*back.hypothesis_margin ==
          doctest::Approx(*report.hypothesis_margin).epsilon(1e-11));

    // precondition failure: extremum fields serialize as nulls
    const HClassFunction constant(PowerSeries({Complex(1.0)}), 1);
    const TheoremReport fail = check_t2(constant, 0.0, small_grid());
    const Json jf = to_json(fail);
    CHECK(jf["hypothesis"]["extremum"].is_null());
    const TheoremReport fail_back = theorem_report_from_json(jf);
    CHECK(fail_back.verdict == Verdict::PreconditionFails);
    CHECK(to_json(fail_back).dump() == jf.dump());
}

TEST_CASE("witness serialization carries the documented fields") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    const auto witness =
        mm_witness(PowerSeries({Complex(1.0), Complex(-2.0)}), 1, q0, small_grid());
    REQUIRE(witness.has_value());
    const Json j = to_json(*witness);
    for (const char* key :
         {"z0_r", "z0_theta", "zeta0_re", "zeta0_im", "rho", "sigma", "m", "residual"})
        CHECK(j.contains(key));
    CHECK(j["m"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(j["z0_r"].get<double>() == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("fuzz report serialization keeps zero counts visible") {
    FuzzConfig config;
    config.theorem = TheoremId::T2;
    config.family = FunctionFamily{FamilyId::PolyP, 1, 0.5, 6};
    config.seed = 3;
    config.trials = 10;
    const FuzzReport report = fuzz_theorem(config, small_grid());
    const Json j = to_json(report);
    REQUIRE(j.contains("counterexample_count"));
    CHECK(j["counterexample_count"].get<int>() == 0);
    CHECK(j["trials"].get<int>() == 10);
    CHECK(j.contains("worst_conclusion_margin"));
    CHECK(j["counterexamples"].is_array());
}

TEST_CASE("threshold csv: exact header and empty optional cells") {
    std::vector<ThresholdRow> rows;
    const T2Bounds b = t2_bounds(1, 0.0);
    rows.push_back(ThresholdRow{1, 0.0, 1.0, std::nullopt, b.low, b.high});
    rows.push_back(ThresholdRow{2, 0.5, 1.0 - 1.0 / std::numbers::pi, 0.4, std::nullopt,
                                t1_threshold(2, 0.4, 0.5)});
    std::ostringstream out;
    write_threshold_csv(out, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,alpha,mu,A,threshold_low,threshold_high");
    std::getline(in, line);
    CHECK(line.substr(0, 8) == "1,0,1,,-"); // empty A cell, negative low
    CHECK(line.find("1.73205080757") != std::string::npos);
}

TEST_CASE("sharpness csv header") {
    std::ostringstream out;
    write_sharpness_csv(out, {SharpnessPoint{0.1, 0.5, 0.25}});
    CHECK(out.str().substr(0, 45) == "parameter,hypothesis_margin,conclusion_margin");
}
