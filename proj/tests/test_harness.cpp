#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "carastar/harness.hpp"

using namespace carastar;

namespace {

constexpr double pi = std::numbers::pi;

const DiskGrid& small_grid() {
    static const DiskGrid grid(48, 128, 0.995);
    return grid;
}

// Independent transcription of the published splitmix64 step.
std::uint64_t reference_splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace

TEST_CASE("SplitMix64 matches an independent transcription") {
    SplitMix64 rng(12345);
    std::uint64_t state = 12345;
    for (int i = 0; i < 100; ++i)
        CHECK(rng.next() == reference_splitmix64(state));

    SplitMix64 a(7);
    SplitMix64 b(7);
    for (int i = 0; i < 20; ++i)
        CHECK(a.next() == b.next());

    SplitMix64 u(99);
    double mean = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double v = u.uniform01();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        mean += v;
    }
    CHECK(mean / 10000.0 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("generate_p_instances: determinism and invariants") {
    const FunctionFamily family{FamilyId::PolyP, 2, 0.3, 6};
    const std::vector<HClassFunction> first = generate_p_instances(family, 42, 20);
    const std::vector<HClassFunction> second = generate_p_instances(family, 42, 20);
    REQUIRE(first.size() == 20);
    for (std::size_t i = 0; i < first.size(); ++i)
        CHECK(first[i].series().coefficients() == second[i].series().coefficients());

    const std::vector<HClassFunction> other = generate_p_instances(family, 43, 20);
    CHECK(first[0].series().coefficients() != other[0].series().coefficients());

    for (const HClassFunction& p : first) {
        CHECK(p.index_n() == 2);
        CHECK(p.series().coefficient(0) == Complex(1.0));
        CHECK(p.series().coefficient(1) == Complex(0.0));
        CHECK(p.nonconstant());
        double sum = 0.0;
        for (int k = 2; k <= 6; ++k)
            sum += std::abs(p.series().coefficient(static_cast<std::size_t>(k)));
        CHECK(sum <= 0.3 + 1e-12);
    }
}

TEST_CASE("generate_p_instances: cap keeps the family zero-free") {
    const FunctionFamily family{FamilyId::PolyP, 1, 0.9, 5};
    const std::vector<HClassFunction> instances = generate_p_instances(family, 11, 10);
    for (const HClassFunction& p : instances)
        CHECK(min_modulus(p, small_grid()).value >= 0.1 - 1e-9);
}

TEST_CASE("generate_f_instances: structure") {
    const FunctionFamily family{FamilyId::PolyF, 2, 0.2, 6};
    const std::vector<NormalizedFunction> instances = generate_f_instances(family, 5, 10);
    for (const NormalizedFunction& f : instances) {
        CHECK(f.series().coefficient(0) == Complex(0.0));
        CHECK(f.series().coefficient(1) == Complex(1.0));
        CHECK(f.series().coefficient(2) == Complex(0.0));
    }
}

TEST_CASE("generate_schwarz_instances: subordinate by construction") {
    const FunctionFamily family{FamilyId::SchwarzComposed, 1, 0.9, 4};
    const std::vector<SchwarzInstance> instances = generate_schwarz_instances(family, 17, 30);
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    for (const SchwarzInstance& inst : instances) {
        CHECK(std::abs(inst.c) <= 0.9);
        CHECK(inst.power >= 1);
        CHECK(inst.power <= 4);
        const AnalyticMap h = schwarz_composite(q0, inst.c, inst.power);
        CHECK(is_subordinate_halfplane(h, q0, small_grid()).subordinate);
    }
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(generate_p_instances(FunctionFamily{FamilyId::PolyP, 2, 0.3, 1}, 1, 1),
                    ConfigError);
    CHECK_THROWS_AS(generate_p_instances(FunctionFamily{FamilyId::PolyP, 0, 0.3, 4}, 1, 1),
                    ConfigError);
    CHECK_THROWS_AS(generate_p_instances(FunctionFamily{FamilyId::PolyP, 1, -0.1, 4}, 1, 1),
                    ConfigError);
    CHECK_THROWS_AS(generate_f_instances(FunctionFamily{FamilyId::PolyF, 2, 0.2, 2}, 1, 1),
                    ConfigError);
    CHECK_THROWS_AS(
        generate_schwarz_instances(FunctionFamily{FamilyId::SchwarzComposed, 1, 1.5, 3}, 1, 1),
        ConfigError);
    CHECK_THROWS_AS(generate_f_instances(FunctionFamily{FamilyId::PolyP, 1, 0.2, 4}, 1, 1),
                    ConfigError);
}

TEST_CASE("fuzz_theorem: t2 smoke run tallies cleanly") {
    FuzzConfig config;
    config.theorem = TheoremId::T2;
    config.family = FunctionFamily{FamilyId::PolyP, 1, 0.5, 8};
    config.seed = 2024;
    config.trials = 50;
    const FuzzReport report = fuzz_theorem(config, small_grid());
    CHECK(report.trials == 50);
    CHECK(report.certified_count + report.hypothesis_fail_count +
              report.precondition_fail_count + report.counterexample_count ==
          report.trials);
    CHECK(report.counterexample_count == 0);
    REQUIRE(report.worst_conclusion_margin.has_value());
    CHECK(*report.worst_conclusion_margin > 0.0);

    const FuzzReport again = fuzz_theorem(config, small_grid());
    CHECK(again.certified_count == report.certified_count);
    CHECK(again.hypothesis_fail_count == report.hypothesis_fail_count);
    CHECK(*again.worst_conclusion_margin == *report.worst_conclusion_margin);
}

TEST_CASE("fuzz_theorem: t1 family with auto-satisfied hypothesis certifies everything") {
    // cap 0.3 over degrees 1..4 bounds sum (k+1)|c_k| by 1.05 < 1 + n/2,
    // so Re(p + z p') > -1/2 for every instance.
    FuzzConfig config;
    config.theorem = TheoremId::T1;
    config.family = FunctionFamily{FamilyId::PolyP, 1, 0.3, 4};
    config.g = PowerSeries({Complex(1.0)});
    config.alpha = 0.0;
    config.declared_a = 1.0;
    config.seed = 7;
    config.trials = 50;
    const FuzzReport report = fuzz_theorem(config, small_grid());
    CHECK(report.counterexample_count == 0);
    CHECK(report.certified_count == report.trials);
}

TEST_CASE("fuzz_theorem: t3 smoke run") {
    FuzzConfig config;
    config.theorem = TheoremId::T3;
    config.family = FunctionFamily{FamilyId::PolyP, 2, 0.4, 6};
    config.seed = 99;
    config.trials = 30;
    const FuzzReport report = fuzz_theorem(config, small_grid());
    CHECK(report.counterexample_count == 0);
    CHECK(report.certified_count + report.hypothesis_fail_count +
              report.precondition_fail_count ==
          report.trials);
}

TEST_CASE("fuzz_theorem: rejects corollary ids and bad trial counts") {
    FuzzConfig config;
    config.theorem = TheoremId::C5;
    CHECK_THROWS_AS(fuzz_theorem(config, small_grid()), ConfigError);
    config.theorem = TheoremId::T2;
    config.trials = 0;
    CHECK_THROWS_AS(fuzz_theorem(config, small_grid()), ConfigError);
}

TEST_CASE("example1_report: n = 2 quantities") {
    const double k_max = example1_k_max(2);
    CHECK(std::abs(k_max - 7.0 / 88.0) < 1e-15);
    const Example1Report report = example1_report(2, 0.9 * k_max, small_grid());
    CHECK(std::abs(report.threshold - 17.0 / 24.0) < 1e-15);
    CHECK(std::abs(report.threshold_from_t1 - report.threshold) < 1e-12);
    CHECK(report.declared_a == doctest::Approx(0.2357022604).epsilon(1e-9));
    CHECK(report.a_estimated_inf >= report.declared_a);
    CHECK(report.a_estimated_inf ==
          doctest::Approx(std::sqrt(2.0) / 2.0 - 1.0 / 3.0).epsilon(1e-4));
    CHECK(report.t1_report.verdict == Verdict::Certified);
    CHECK_FALSE(report.boundary_case);
    CHECK(report.chain_margin > 1e-3);
    CHECK(report.chain_gap > 0.0); // triangle bound is not tight
    CHECK(report.conclusion_bound == doctest::Approx(pi / 4.0).epsilon(1e-15));
    CHECK(report.t1_report.conclusion_sup_arg->value <
          report.conclusion_bound);
    CHECK(report.t1_report.conclusion_sup_arg->value ==
          doctest::Approx(std::asin(0.9 * k_max)).epsilon(1e-3));
}

TEST_CASE("example1_report: the k_max case sits on the chain boundary") {
    const Example1Report report = example1_report(2, example1_k_max(2), small_grid());
    CHECK(std::abs(report.chain_margin) < 1e-13);
    CHECK(report.boundary_case);
    // the measured infimum still clears the threshold; the verdict records it
    CHECK(report.t1_report.verdict == Verdict::Certified);
    CHECK(report.chain_gap > 0.01);
}

TEST_CASE("example1_report: n = 3 formulas cross-check") {
    CHECK(std::abs(example1_k_max(3) - 0.1) < 1e-15);
    CHECK(std::abs(example1_threshold(3) - 0.5) < 1e-15);
    CHECK(std::abs(example1_threshold(3) -
                   t1_threshold(3, 1.0 / (3.0 * std::sqrt(2.0)), pi / 4.0)) < 1e-12);
}

TEST_CASE("example1_report: guards") {
    CHECK_THROWS_AS(example1_report(1, 0.05, small_grid()), ConfigError);
    CHECK_THROWS_AS(example1_report(2, 0.2, small_grid()), ConfigError);
    CHECK_THROWS_AS(example1_report(2, 0.0, small_grid()), ConfigError);
}

TEST_CASE("sharpness_probe: worked-example sweep crosses zero at k_max") {
    SharpnessParams params;
    params.n = 2;
    params.param_from = 0.0;
    params.param_to = 2.0 * example1_k_max(2);
    params.steps = 21;
    const std::vector<SharpnessPoint> curve =
        sharpness_probe(TheoremId::T1, params, small_grid());
    REQUIRE(curve.size() == 21);

    // strictly decreasing, affine in k
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i].hypothesis_margin < curve[i - 1].hypothesis_margin);
    const double step0 = curve[1].hypothesis_margin - curve[0].hypothesis_margin;
    for (std::size_t i = 2; i < curve.size(); ++i)
        CHECK(std::abs((curve[i].hypothesis_margin - curve[i - 1].hypothesis_margin) -
                       step0) < 1e-12);

    // zero crossing brackets k_max
    bool bracketed = false;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i - 1].hypothesis_margin >= 0.0 && curve[i].hypothesis_margin < 0.0) {
            CHECK(curve[i - 1].parameter <= example1_k_max(2) + 1e-12);
            CHECK(curve[i].parameter >= example1_k_max(2) - 1e-12);
            bracketed = true;
        }
    }
    CHECK(bracketed);

    // conclusion stays positive wherever the hypothesis holds
    for (const SharpnessPoint& point : curve)
        if (point.hypothesis_margin > 0.0)
            CHECK(point.conclusion_margin > 0.0);
}

TEST_CASE("sharpness_probe: t2 near the sector limit shows a crossing") {
    SharpnessParams params;
    params.n = 1;
    params.alpha = pi / 2.0 - 0.02;
    params.param_from = 0.0;
    params.param_to = 0.5;
    params.steps = 26;
    const std::vector<SharpnessPoint> curve =
        sharpness_probe(TheoremId::T2, params, small_grid());
    CHECK(curve.front().hypothesis_margin > 0.0);
    CHECK(curve.back().hypothesis_margin < 0.0);
    for (const SharpnessPoint& point : curve)
        if (point.hypothesis_margin > 0.0)
            CHECK(point.conclusion_margin > 0.0);
}

TEST_CASE("sharpness_probe: t3 margins stay positive on a modest cap") {
    SharpnessParams params;
    params.n = 1;
    params.alpha = 0.0;
    params.param_from = 0.0;
    params.param_to = 0.3;
    params.steps = 16;
    const std::vector<SharpnessPoint> curve =
        sharpness_probe(TheoremId::T3, params, small_grid());
    for (const SharpnessPoint& point : curve) {
        CHECK(point.hypothesis_margin > 0.0);
        CHECK(point.conclusion_margin > 0.0);
    }
}
