#ifndef CARASTAR_REPORT_IO_HPP
#define CARASTAR_REPORT_IO_HPP

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "carastar/analytic.hpp"
#include "carastar/criteria.hpp"
#include "carastar/disk_opt.hpp"
#include "carastar/errors.hpp"
#include "carastar/harness.hpp"
#include "carastar/subordination.hpp"

namespace carastar {

inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// All reals in reports carry 12 significant digits.
inline std::string format_real(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return std::string(buffer);
}

/// The double actually written to JSON: the closest value to the 12-digit
/// rendering, so serialized output is a fixed point of serialize(parse(.)).
inline double round12(double x) {
    return std::strtod(format_real(x).c_str(), nullptr);
}

inline Json json_real(double x) { return Json(round12(x)); }

inline Json json_optional(const std::optional<double>& x) {
    return x ? json_real(*x) : Json(nullptr);
}

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

inline std::string theorem_id_name(TheoremId id) {
    switch (id) {
    case TheoremId::T1: return "t1";
    case TheoremId::C1: return "c1";
    case TheoremId::C2: return "c2";
    case TheoremId::C3: return "c3";
    case TheoremId::T2: return "t2";
    case TheoremId::C4: return "c4";
    case TheoremId::C5: return "c5";
    case TheoremId::C6: return "c6";
    case TheoremId::T3: return "t3";
    case TheoremId::C7: return "c7";
    case TheoremId::C8: return "c8";
    case TheoremId::C9: return "c9";
    }
    throw ConfigError("unknown theorem id");
}

inline TheoremId theorem_id_from_name(const std::string& name) {
    static const std::pair<const char*, TheoremId> table[] = {
        {"t1", TheoremId::T1}, {"c1", TheoremId::C1}, {"c2", TheoremId::C2},
        {"c3", TheoremId::C3}, {"t2", TheoremId::T2}, {"c4", TheoremId::C4},
        {"c5", TheoremId::C5}, {"c6", TheoremId::C6}, {"t3", TheoremId::T3},
        {"c7", TheoremId::C7}, {"c8", TheoremId::C8}, {"c9", TheoremId::C9},
    };
    for (const auto& [key, id] : table)
        if (name == key)
            return id;
    throw ConfigError("unknown theorem id '" + name + "'");
}

inline std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::HypothesisFails: return "hypothesis_fails";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::PreconditionFails: return "precondition_fails";
    }
    throw ConfigError("unknown verdict");
}

inline Verdict verdict_from_name(const std::string& name) {
    if (name == "certified") return Verdict::Certified;
    if (name == "hypothesis_fails") return Verdict::HypothesisFails;
    if (name == "counterexample") return Verdict::Counterexample;
    if (name == "precondition_fails") return Verdict::PreconditionFails;
    throw ConfigError("unknown verdict '" + name + "'");
}

// ---------------------------------------------------------------------------
// Series and grid
// ---------------------------------------------------------------------------

/// Config encoding of a series: array of [re, im] pairs.
inline Json series_to_json(const PowerSeries& series) {
    Json out = Json::array();
    for (const Complex& c : series.coefficients())
        out.push_back(Json::array({json_real(c.real()), json_real(c.imag())}));
    return out;
}

inline PowerSeries series_from_json(const Json& j, const std::string& key) {
    if (!j.is_array() || j.empty())
        throw ConfigError("config error: " + key +
                          " must be a non-empty array of [re, im] pairs");
    std::vector<Complex> coeffs;
    coeffs.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw ConfigError("config error: " + key +
                              " entries must be [re, im] number pairs");
        coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return PowerSeries(std::move(coeffs));
}

inline Json grid_to_json(const DiskGrid& grid, int refine_steps) {
    Json j;
    j["radial"] = grid.radial_count();
    j["angular"] = grid.angular_count();
    j["max_radius"] = json_real(grid.max_radius());
    j["refine_steps"] = refine_steps;
    return j;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json to_json(const ExtremumEstimate& est) {
    Json j;
    j["value"] = json_real(est.value);
    j["location"] = Json{{"radius", json_real(est.location.radius())},
                         {"angle", json_real(est.location.angle())}};
    j["refined"] = est.refined;
    j["samples_used"] = est.samples_used;
    return j;
}

inline ExtremumEstimate extremum_from_json(const Json& j) {
    ExtremumEstimate est;
    est.value = j.at("value").get<double>();
    est.location = DiskPoint(j.at("location").at("radius").get<double>(),
                             j.at("location").at("angle").get<double>());
    est.refined = j.at("refined").get<bool>();
    est.samples_used = j.at("samples_used").get<std::int64_t>();
    return est;
}

inline Json to_json(const TheoremReport& report) {
    Json j;
    j["theorem"] = theorem_id_name(report.theorem_id);
    j["params"] = Json{{"n", report.params.n},
                       {"alpha", json_real(report.params.alpha)},
                       {"mu", json_real(report.params.mu)},
                       {"declared_a", json_optional(report.params.declared_a)}};
    j["hypothesis"] = Json{
        {"extremum",
         report.hypothesis_extremum ? to_json(*report.hypothesis_extremum) : Json(nullptr)},
        {"threshold_low", json_optional(report.threshold_low)},
        {"threshold_high", json_optional(report.threshold_high)},
        {"margin", json_optional(report.hypothesis_margin)}};
    j["conclusion"] = Json{
        {"sup_arg",
         report.conclusion_sup_arg ? to_json(*report.conclusion_sup_arg) : Json(nullptr)},
        {"bound", json_optional(report.conclusion_bound)},
        {"margin", json_optional(report.conclusion_margin)}};
    j["verdict"] = verdict_name(report.verdict);
    j["boundary_case"] = report.boundary_case;
    j["note"] = report.note;
    return j;
}

inline TheoremReport theorem_report_from_json(const Json& j) {
    TheoremReport report;
    report.theorem_id = theorem_id_from_name(j.at("theorem").get<std::string>());
    const Json& params = j.at("params");
    report.params.n = params.at("n").get<int>();
    report.params.alpha = params.at("alpha").get<double>();
    report.params.mu = params.at("mu").get<double>();
    if (!params.at("declared_a").is_null())
        report.params.declared_a = params.at("declared_a").get<double>();
    const Json& hyp = j.at("hypothesis");
    if (!hyp.at("extremum").is_null())
        report.hypothesis_extremum = extremum_from_json(hyp.at("extremum"));
    if (!hyp.at("threshold_low").is_null())
        report.threshold_low = hyp.at("threshold_low").get<double>();
    if (!hyp.at("threshold_high").is_null())
        report.threshold_high = hyp.at("threshold_high").get<double>();
    if (!hyp.at("margin").is_null())
        report.hypothesis_margin = hyp.at("margin").get<double>();
    const Json& conc = j.at("conclusion");
    if (!conc.at("sup_arg").is_null())
        report.conclusion_sup_arg = extremum_from_json(conc.at("sup_arg"));
    if (!conc.at("bound").is_null())
        report.conclusion_bound = conc.at("bound").get<double>();
    if (!conc.at("margin").is_null())
        report.conclusion_margin = conc.at("margin").get<double>();
    report.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    report.boundary_case = j.at("boundary_case").get<bool>();
    report.note = j.at("note").get<std::string>();
    return report;
}

/// Witness wire format: z0 in polar, zeta0 split into re/im, plus the
/// touch data and the imaginary residue of the multiplier.
inline Json to_json(const Witness& w) {
    Json j;
    j["z0_r"] = json_real(w.z0.radius());
    j["z0_theta"] = json_real(w.z0.angle());
    j["zeta0_re"] = json_real(w.zeta0.real());
    j["zeta0_im"] = json_real(w.zeta0.imag());
    j["rho"] = json_real(w.rho);
    j["sigma"] = json_real(w.sigma);
    j["m"] = json_real(w.m);
    j["residual"] = json_real(w.residual);
    return j;
}

inline Json to_json(const FuzzReport& report) {
    Json j;
    j["theorem"] = theorem_id_name(report.theorem_id);
    j["trials"] = report.trials;
    j["certified_count"] = report.certified_count;
    j["hypothesis_fail_count"] = report.hypothesis_fail_count;
    j["precondition_fail_count"] = report.precondition_fail_count;
    j["counterexample_count"] = report.counterexample_count;
    j["seed"] = report.seed;
    j["worst_conclusion_margin"] = json_optional(report.worst_conclusion_margin);
    Json records = Json::array();
    for (const CounterexampleRecord& rec : report.counterexamples) {
        Json coeffs = Json::array();
        for (const Complex& c : rec.coefficients)
            coeffs.push_back(Json::array({json_real(c.real()), json_real(c.imag())}));
        records.push_back(Json{{"trial_index", rec.trial_index},
                               {"coefficients", coeffs},
                               {"report", to_json(rec.report)}});
    }
    j["counterexamples"] = records;
    return j;
}

inline Json to_json(const Example1Report& report) {
    Json j;
    j["n"] = report.n;
    j["k"] = json_real(report.k);
    j["k_max"] = json_real(report.k_max);
    j["declared_a"] = json_real(report.declared_a);
    j["a_estimated_inf"] = json_real(report.a_estimated_inf);
    j["threshold"] = json_real(report.threshold);
    j["threshold_from_t1"] = json_real(report.threshold_from_t1);
    j["chain_lower_bound"] = json_real(report.chain_lower_bound);
    j["chain_margin"] = json_real(report.chain_margin);
    j["boundary_case"] = report.boundary_case;
    j["arcsin_k"] = json_real(report.arcsin_k);
    j["arcsin_k_max"] = json_real(report.arcsin_k_max);
    j["conclusion_bound"] = json_real(report.conclusion_bound);
    j["reconciliation"] =
        Json{{"declared_a_vs_estimated_inf_gap", json_real(report.declared_gap)},
             {"hypothesis_inf_vs_chain_bound_gap", json_real(report.chain_gap)}};
    j["check"] = to_json(report.t1_report);
    return j;
}

// ---------------------------------------------------------------------------
// CSV tables
// ---------------------------------------------------------------------------

struct ThresholdRow {
    int n;
    double alpha;
    double mu;
    std::optional<double> a;
    std::optional<double> threshold_low;
    double threshold_high;
};

inline constexpr std::string_view kThresholdCsvHeader =
    "n,alpha,mu,A,threshold_low,threshold_high";

inline void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
    out << kThresholdCsvHeader << '\n';
    for (const ThresholdRow& row : rows) {
        out << row.n << ',' << format_real(row.alpha) << ',' << format_real(row.mu) << ',';
        if (row.a)
            out << format_real(*row.a);
        out << ',';
        if (row.threshold_low)
            out << format_real(*row.threshold_low);
        out << ',' << format_real(row.threshold_high) << '\n';
    }
}

inline void write_sharpness_csv(std::ostream& out,
                                const std::vector<SharpnessPoint>& curve) {
    out << "parameter,hypothesis_margin,conclusion_margin\n";
    for (const SharpnessPoint& point : curve)
        out << format_real(point.parameter) << ',' << format_real(point.hypothesis_margin)
            << ',' << format_real(point.conclusion_margin) << '\n';
}

} // namespace carastar

#endif
