// carastar command line: certify sector conditions for analytic functions on
// the unit disk, reproduce the worked coefficient example, fuzz the criteria
// for counterexamples, search for subordination boundary touches, and
// tabulate thresholds.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carastar/carastar.hpp"

namespace fs = std::filesystem;
using namespace carastar;

namespace {

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

double parse_double(const std::string& text, const std::string& key) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError("config error: " + key + " has unparsable number '" + text + "'");
    return value;
}

// One coefficient token: re, im-only ("0.5i", "-i") or re+im ("1+0.5i").
Complex parse_complex_token(std::string token, const std::string& key) {
    std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
    if (token.empty())
        throw ConfigError("config error: " + key + " has an empty coefficient");
    if (token.back() != 'i' && token.back() != 'I')
        return Complex(parse_double(token, key), 0.0);
    std::string body = token.substr(0, token.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t pos = 1; pos < body.size(); ++pos) {
        const char c = body[pos];
        const char prev = body[pos - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E')
            split = pos;
    }
    std::string real_part;
    std::string imag_part;
    if (split == std::string::npos) {
        imag_part = body;
    } else {
        real_part = body.substr(0, split);
        imag_part = body.substr(split);
    }
    double real = real_part.empty() ? 0.0 : parse_double(real_part, key);
    double imag;
    if (imag_part.empty() || imag_part == "+")
        imag = 1.0;
    else if (imag_part == "-")
        imag = -1.0;
    else
        imag = parse_double(imag_part, key);
    return Complex(real, imag);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

PowerSeries parse_series(const std::string& text, const std::string& key) {
    std::vector<Complex> coeffs;
    for (const std::string& token : split_commas(text))
        coeffs.push_back(parse_complex_token(token, key));
    if (coeffs.empty())
        throw ConfigError("config error: " + key + " must list coefficients");
    return PowerSeries(std::move(coeffs));
}

// "1..4" or "1,2,4".
std::vector<int> parse_int_range(const std::string& text, const std::string& key) {
    const std::size_t dots = text.find("..");
    std::vector<int> out;
    if (dots != std::string::npos) {
        const int from = static_cast<int>(parse_double(text.substr(0, dots), key));
        const int to = static_cast<int>(parse_double(text.substr(dots + 2), key));
        if (to < from)
            throw ConfigError("config error: " + key + " range is empty");
        for (int v = from; v <= to; ++v)
            out.push_back(v);
        return out;
    }
    for (const std::string& token : split_commas(text))
        out.push_back(static_cast<int>(parse_double(token, key)));
    return out;
}

// "0,0.2,...,1.4" extends the last step arithmetically up to the end value.
std::vector<double> parse_double_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    const std::vector<std::string> tokens = split_commas(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "...") {
            if (out.size() < 2 || i + 1 >= tokens.size())
                throw ConfigError("config error: " + key +
                                  " ellipsis needs two values before and one after");
            const double step = out[out.size() - 1] - out[out.size() - 2];
            if (!(step > 0.0))
                throw ConfigError("config error: " + key + " ellipsis needs increasing values");
            const double stop = parse_double(tokens[i + 1], key);
            double v = out.back() + step;
            while (v <= stop + 1e-9) {
                out.push_back(v);
                v += step;
            }
            ++i;
        } else {
            out.push_back(parse_double(tokens[i], key));
        }
    }
    if (out.empty())
        throw ConfigError("config error: " + key + " must list values");
    return out;
}

// ---------------------------------------------------------------------------
// Config file and resolved run options
// ---------------------------------------------------------------------------

struct GlobalOptions {
    std::optional<int> grid_radial;
    std::optional<int> grid_angular;
    std::optional<double> max_radius;
    std::optional<int> refine_steps;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::string config_path;
};

struct Resolved {
    DiskGrid grid = DiskGrid::defaults();
    int refine_steps = kDefaultRefineSteps;
    double tolerance = kCertTolerance;
    std::uint64_t seed = 42;
    fs::path out_dir = ".";
    Json config; // parsed config file, or null
};

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config error: cannot open config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config error: " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config error: config root must be an object");
    return j;
}

template <typename T>
std::optional<T> config_scalar(const Json& config, const char* group, const char* name) {
    if (config.is_null() || !config.contains(group))
        return std::nullopt;
    const Json& g = config.at(group);
    if (!g.is_object() || !g.contains(name))
        return std::nullopt;
    try {
        return g.at(name).get<T>();
    } catch (const std::exception&) {
        throw ConfigError(std::string("config error: ") + group + "." + name +
                          " has the wrong type");
    }
}

Resolved resolve(const GlobalOptions& opts) {
    Resolved r;
    if (!opts.config_path.empty())
        r.config = load_config(opts.config_path);
    const int radial =
        opts.grid_radial.value_or(config_scalar<int>(r.config, "grid", "radial").value_or(256));
    const int angular = opts.grid_angular.value_or(
        config_scalar<int>(r.config, "grid", "angular").value_or(1024));
    const double max_radius = opts.max_radius.value_or(
        config_scalar<double>(r.config, "grid", "max_radius").value_or(1.0 - 1e-3));
    try {
        r.grid = DiskGrid(radial, angular, max_radius);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    r.refine_steps = opts.refine_steps.value_or(
        config_scalar<int>(r.config, "refine", "steps").value_or(kDefaultRefineSteps));
    if (r.refine_steps < 0)
        throw ConfigError("config error: refine.steps must be >= 0");
    r.tolerance = opts.tolerance.value_or(kCertTolerance);
    if (!(r.tolerance > 0.0))
        throw ConfigError("config error: tolerance must be positive");
    r.seed = opts.seed.value_or(42);
    r.out_dir = opts.out_dir;
    return r;
}

// Function literal: explicit flag first, then config key.
std::optional<PowerSeries> function_literal(const std::string& flag_value,
                                            const Json& config, const std::string& key) {
    if (!flag_value.empty())
        return parse_series(flag_value, key);
    if (!config.is_null() && config.contains(key))
        return series_from_json(config.at(key), key);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buffer);
}

Json envelope(const std::string& command, const Resolved& r) {
    Json j;
    j["schema"] = "carastar/1";
    j["tool_version"] = std::string(kToolVersion);
    j["generated_at"] = utc_timestamp();
    j["command"] = command;
    j["grid"] = grid_to_json(r.grid, r.refine_steps);
    j["tolerance"] = json_real(r.tolerance);
    j["seed"] = r.seed;
    return j;
}

void write_json(const fs::path& path, const Json& j) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

int exit_for(Verdict verdict) {
    switch (verdict) {
    case Verdict::Certified:
        return 0;
    case Verdict::HypothesisFails:
    case Verdict::PreconditionFails:
        return 2;
    case Verdict::Counterexample:
        return 3;
    }
    return 1;
}

// ---------------------------------------------------------------------------
// Subcommand state
// ---------------------------------------------------------------------------

struct CheckOptions {
    std::string theorem;
    int n = 1;
    std::optional<double> alpha;
    std::optional<double> mu;
    std::string p_text;
    std::string f_text;
    std::string g_text;
    std::optional<double> declared_a;
};

struct Example1Options {
    int n = 2;
    std::optional<double> k;
    int sweep_steps = 41;
};

struct FuzzOptions {
    std::string theorem = "t2";
    int trials = 1000;
    int n = 1;
    double cap = 0.5;
    int degree_cap = 8;
    double alpha = 0.0;
    std::string g_text;
    std::optional<double> declared_a;
};

struct WitnessOptions {
    std::string h_text;
    double alpha = 0.0;
    int n = 1;
    std::string orientation = "plus";
};

struct TabulateOptions {
    std::string theorem = "t2";
    std::string n_text = "1";
    std::string alpha_text;
    std::string mu_text;
    std::optional<double> a;
};

int run_check(const CheckOptions& opts, const Resolved& r) {
    const TheoremId id = theorem_id_from_name(opts.theorem);
    const bool needs_f = id == TheoremId::C2 || id == TheoremId::C5 || id == TheoremId::C8;
    const bool mu_form = id == TheoremId::C1 || id == TheoremId::C2 || id == TheoremId::C4 ||
                         id == TheoremId::C5 || id == TheoremId::C7 || id == TheoremId::C8;
    if (opts.n < 1)
        throw ConfigError("config error: n must be >= 1");
    double angle_value;
    if (mu_form) {
        if (!opts.mu)
            throw ConfigError("config error: --mu is required for " + opts.theorem);
        if (!(*opts.mu > 0.0) || *opts.mu > 1.0)
            throw ConfigError("config error: mu must lie in (0, 1]");
        angle_value = *opts.mu;
    } else {
        if (!opts.alpha)
            throw ConfigError("config error: --alpha is required for " + opts.theorem);
        if (!(std::abs(*opts.alpha) < std::numbers::pi / 2.0))
            throw ConfigError("config error: alpha must satisfy |alpha| < pi/2");
        angle_value = *opts.alpha;
    }
    const PowerSeries g = function_literal(opts.g_text, r.config, "g")
                              .value_or(PowerSeries({Complex(1.0)}));

    TheoremReport report;
    if (needs_f) {
        const auto f_series = function_literal(opts.f_text, r.config, "f");
        if (!f_series)
            throw ConfigError("config error: f is required for " + opts.theorem);
        const NormalizedFunction f(*f_series, opts.n);
        if (id == TheoremId::C2) {
            const double alpha = SectorParam::from_mu(angle_value).alpha;
            const ALowerBound a = a_of(g, alpha, r.grid, opts.declared_a, r.refine_steps);
            report = check_c2(f, g, angle_value, a, r.grid, r.refine_steps, r.tolerance);
        } else if (id == TheoremId::C5) {
            report = check_c5(f, angle_value, r.grid, r.refine_steps, r.tolerance);
        } else {
            report = check_c8(f, angle_value, r.grid, r.refine_steps, r.tolerance);
        }
    } else {
        const auto p_series = function_literal(opts.p_text, r.config, "p");
        if (!p_series)
            throw ConfigError("config error: p is required for " + opts.theorem);
        const HClassFunction p(*p_series, opts.n);
        switch (id) {
        case TheoremId::T1: {
            const ALowerBound a =
                a_of(g, angle_value, r.grid, opts.declared_a, r.refine_steps);
            report = check_t1(p, g, angle_value, a, r.grid, r.refine_steps, r.tolerance);
            break;
        }
        case TheoremId::C1: {
            const double alpha = SectorParam::from_mu(angle_value).alpha;
            const ALowerBound a = a_of(g, alpha, r.grid, opts.declared_a, r.refine_steps);
            report = check_c1(p, g, angle_value, a, r.grid, r.refine_steps, r.tolerance);
            break;
        }
        case TheoremId::C3: {
            const ALowerBound a =
                a_of_signed(g, angle_value, r.grid, opts.declared_a, r.refine_steps);
            report = check_c3(p, g, angle_value, a, r.grid, r.refine_steps, r.tolerance);
            break;
        }
        case TheoremId::T2:
            report = check_t2(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        case TheoremId::C4:
            report = check_c4(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        case TheoremId::C6:
            report = check_c6(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        case TheoremId::T3:
            report = check_t3(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        case TheoremId::C7:
            report = check_c7(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        case TheoremId::C9:
            report = check_c9(p, angle_value, r.grid, r.refine_steps, r.tolerance);
            break;
        default:
            throw ConfigError("config error: unsupported theorem for check");
        }
    }

    Json j = envelope("check", r);
    j["report"] = to_json(report);
    write_json(r.out_dir / "report.json", j);
    std::cout << "verdict: " << verdict_name(report.verdict);
    if (report.boundary_case)
        std::cout << " (inconclusive boundary case)";
    if (!report.note.empty())
        std::cout << " - " << report.note;
    std::cout << '\n';
    return exit_for(report.verdict);
}

int run_example1(const Example1Options& opts, const Resolved& r) {
    const double k = opts.k.value_or(0.9 * example1_k_max(opts.n));
    const Example1Report report =
        example1_report(opts.n, k, r.grid, r.refine_steps, r.tolerance);
    Json j = envelope("example1", r);
    j["report"] = to_json(report);
    write_json(r.out_dir / "report.json", j);

    SharpnessParams sweep;
    sweep.n = opts.n;
    sweep.param_from = 0.0;
    sweep.param_to = 2.0 * report.k_max;
    sweep.steps = opts.sweep_steps;
    const std::vector<SharpnessPoint> curve =
        sharpness_probe(TheoremId::T1, sweep, r.grid, r.refine_steps);
    fs::create_directories(r.out_dir / "tables");
    std::ofstream csv(r.out_dir / "tables" / "sharpness_example1.csv");
    write_sharpness_csv(csv, curve);

    std::cout << "k_max = " << format_real(report.k_max)
              << ", threshold = " << format_real(report.threshold)
              << ", verdict: " << verdict_name(report.t1_report.verdict);
    if (report.boundary_case)
        std::cout << " (hypothesis chain margin on the boundary)";
    std::cout << '\n';
    return exit_for(report.t1_report.verdict);
}

int run_fuzz(const FuzzOptions& opts, const Resolved& r) {
    FuzzConfig config;
    config.theorem = theorem_id_from_name(opts.theorem);
    config.family = FunctionFamily{FamilyId::PolyP, opts.n, opts.cap, opts.degree_cap};
    config.g = function_literal(opts.g_text, r.config, "g")
                   .value_or(PowerSeries({Complex(1.0)}));
    config.alpha = opts.alpha;
    config.declared_a = opts.declared_a;
    config.seed = r.seed;
    config.trials = opts.trials;
    const FuzzReport report = fuzz_theorem(config, r.grid, r.refine_steps, r.tolerance);
    Json j = envelope("fuzz", r);
    j["report"] = to_json(report);
    write_json(r.out_dir / "report.json", j);
    std::cout << "trials: " << report.trials << ", certified: " << report.certified_count
              << ", hypothesis_fails: " << report.hypothesis_fail_count
              << ", precondition_fails: " << report.precondition_fail_count
              << ", counterexamples: " << report.counterexample_count << '\n';
    return report.counterexample_count > 0 ? 3 : 0;
}

int run_witness(const WitnessOptions& opts, const Resolved& r) {
    const auto h_series = function_literal(opts.h_text, r.config, "h");
    if (!h_series)
        throw ConfigError("config error: h is required for witness");
    Orientation orientation;
    if (opts.orientation == "plus")
        orientation = Orientation::Plus;
    else if (opts.orientation == "minus")
        orientation = Orientation::Minus;
    else
        throw ConfigError("config error: orientation must be plus or minus");
    const RotatedHalfPlaneTarget q(opts.alpha, orientation);
    const AnalyticMap h = to_analytic_map(*h_series, opts.n);
    const SubordinationCheck sub = is_subordinate_halfplane(h, q, r.grid, r.refine_steps);
    Json j = envelope("witness", r);
    Json payload;
    payload["subordinate"] = sub.subordinate;
    payload["margin"] = json_real(sub.margin);
    if (sub.subordinate) {
        payload["witness"] = Json(nullptr);
        j["report"] = payload;
        write_json(r.out_dir / "report.json", j);
        std::cout << "subordinate: none found (margin " << format_real(sub.margin) << ")\n";
        return 0;
    }
    const std::optional<Witness> witness = mm_witness(h, q, r.grid, r.refine_steps);
    payload["witness"] = witness ? to_json(*witness) : Json(nullptr);
    j["report"] = payload;
    write_json(r.out_dir / "report.json", j);
    if (witness)
        std::cout << "witness: z0 = (" << format_real(witness->z0.radius()) << ", "
                  << format_real(witness->z0.angle()) << "), m = " << format_real(witness->m)
                  << '\n';
    return 0;
}

int run_tabulate(const TabulateOptions& opts, const Resolved& r) {
    const TheoremId id = theorem_id_from_name(opts.theorem);
    const std::vector<int> ns = parse_int_range(opts.n_text, "n");
    const bool mu_form =
        id == TheoremId::C1 || id == TheoremId::C4 || id == TheoremId::C7;
    std::vector<double> angles;
    if (mu_form) {
        if (opts.mu_text.empty())
            throw ConfigError("config error: --mu is required for " + opts.theorem);
        angles = parse_double_list(opts.mu_text, "mu");
    } else {
        if (opts.alpha_text.empty())
            throw ConfigError("config error: --alpha is required for " + opts.theorem);
        angles = parse_double_list(opts.alpha_text, "alpha");
    }
    std::vector<ThresholdRow> rows;
    for (int n : ns) {
        for (double angle : angles) {
            const SectorParam sector =
                mu_form ? SectorParam::from_mu(angle) : SectorParam::from_alpha(angle);
            ThresholdRow row{n, sector.alpha, sector.mu, std::nullopt, std::nullopt, 0.0};
            switch (id) {
            case TheoremId::T1:
                if (!opts.a)
                    throw ConfigError("config error: --A is required for t1");
                row.a = *opts.a;
                row.threshold_high = t1_threshold(n, *opts.a, angle);
                break;
            case TheoremId::C1:
                if (!opts.a)
                    throw ConfigError("config error: --A is required for c1");
                row.a = *opts.a;
                row.threshold_high = c1_threshold(n, *opts.a, angle);
                break;
            case TheoremId::T2: {
                const T2Bounds bounds = t2_bounds(n, angle);
                row.threshold_low = bounds.low;
                row.threshold_high = bounds.high;
                break;
            }
            case TheoremId::C4: {
                const T2Bounds bounds = c4_bounds(n, angle);
                row.threshold_low = bounds.low;
                row.threshold_high = bounds.high;
                break;
            }
            case TheoremId::T3:
                row.threshold_high = n_half_plus_one(n) * std::cos(angle);
                break;
            case TheoremId::C7:
                row.threshold_high =
                    n_half_plus_one(n) * std::sin(std::numbers::pi / 2.0 * angle);
                break;
            default:
                throw ConfigError("config error: tabulate covers t1, c1, t2, c4, t3, c7");
            }
            rows.push_back(row);
        }
    }
    fs::create_directories(r.out_dir / "tables");
    const fs::path path = r.out_dir / "tables" / ("thresholds_" + opts.theorem + ".csv");
    std::ofstream csv(path);
    if (!csv)
        throw ConfigError("cannot write " + path.string());
    write_threshold_csv(csv, rows);
    std::cout << "wrote " << path.string() << " (" << rows.size() << " rows)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical certification of sector conditions for analytic functions "
                 "on the unit disk"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--grid-radial", global.grid_radial, "radial sample count (default 256)");
    app.add_option("--grid-angular", global.grid_angular,
                   "angular sample count (default 1024)");
    app.add_option("--max-radius", global.max_radius,
                   "radial clamp in (0,1) (default 1 - 1e-3)");
    app.add_option("--refine-steps", global.refine_steps,
                   "pattern-search refinement iterations (default 60)");
    app.add_option("--tolerance", global.tolerance,
                   "certification margin tolerance (default 1e-7)");
    app.add_option("--seed", global.seed, "PRNG seed (default 42)");
    app.add_option("--out", global.out_dir, "output directory (default .)");
    app.add_option("--config", global.config_path,
                   "JSON config file (grid.*, refine.steps, function literals)");

    CheckOptions check_opts;
    CLI::App* check = app.add_subcommand("check", "run one theorem check");
    check->fallthrough();
    check->add_option("--theorem", check_opts.theorem, "t1|c1|c2|c3|t2|c4|c5|c6|t3|c7|c8|c9")
        ->required();
    check->add_option("--n", check_opts.n, "index n (default 1)");
    check->add_option("--alpha", check_opts.alpha, "rotation angle in radians");
    check->add_option("--mu", check_opts.mu, "sector order in (0, 1]");
    check->add_option("--p", check_opts.p_text, "coefficients of p (comma separated)");
    check->add_option("--f", check_opts.f_text, "coefficients of f (comma separated)");
    check->add_option("--g", check_opts.g_text, "coefficients of g (default 1)");
    check->add_option("--declared-A", check_opts.declared_a,
                      "declared lower bound for the constant A");

    Example1Options example1_opts;
    CLI::App* example1 = app.add_subcommand("example1", "reproduce the worked example");
    example1->fallthrough();
    example1->add_option("--n", example1_opts.n, "index n >= 2 (default 2)");
    example1->add_option("--k", example1_opts.k, "coefficient k (default 0.9 k_max)");
    example1->add_option("--sweep-steps", example1_opts.sweep_steps,
                         "points in the sharpness sweep CSV (default 41)");

    FuzzOptions fuzz_opts;
    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized falsification run");
    fuzz->fallthrough();
    fuzz->add_option("--theorem", fuzz_opts.theorem, "t1|t2|t3 (default t2)");
    fuzz->add_option("--trials", fuzz_opts.trials, "trial count (default 1000)");
    fuzz->add_option("--n", fuzz_opts.n, "family index n (default 1)");
    fuzz->add_option("--cap", fuzz_opts.cap, "coefficient cap (default 0.5)");
    fuzz->add_option("--degree-cap", fuzz_opts.degree_cap, "family degree cap (default 8)");
    fuzz->add_option("--alpha", fuzz_opts.alpha, "rotation angle (default 0)");
    fuzz->add_option("--g", fuzz_opts.g_text, "t1 weight g (default 1)");
    fuzz->add_option("--declared-A", fuzz_opts.declared_a, "t1 declared A");

    WitnessOptions witness_opts;
    CLI::App* witness = app.add_subcommand("witness", "subordination boundary-touch search");
    witness->fallthrough();
    witness->set_help_flag("--help", "print help"); // frees --h for the function literal
    witness->add_option("--h", witness_opts.h_text, "coefficients of h");
    witness->add_option("--alpha", witness_opts.alpha, "target rotation (default 0)");
    witness->add_option("--n", witness_opts.n, "index of h (default 1)");
    witness->add_option("--orientation", witness_opts.orientation, "plus|minus (default plus)");

    TabulateOptions tab_opts;
    CLI::App* tabulate = app.add_subcommand("tabulate", "threshold tables as CSV");
    tabulate->fallthrough();
    tabulate->add_option("--theorem", tab_opts.theorem, "t1|c1|t2|c4|t3|c7 (default t2)");
    tabulate->add_option("--n", tab_opts.n_text, "n range, e.g. 1..4 (default 1)");
    tabulate->add_option("--alpha", tab_opts.alpha_text, "alpha list, e.g. 0,0.2,...,1.4");
    tabulate->add_option("--mu", tab_opts.mu_text, "mu list for the mu-form tables");
    tabulate->add_option("--A", tab_opts.a, "declared A for t1/c1 tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    try {
        const Resolved r = resolve(global);
        fs::create_directories(r.out_dir);
        if (check->parsed())
            return run_check(check_opts, r);
        if (example1->parsed())
            return run_example1(example1_opts, r);
        if (fuzz->parsed())
            return run_fuzz(fuzz_opts, r);
        if (witness->parsed())
            return run_witness(witness_opts, r);
        if (tabulate->parsed())
            return run_tabulate(tab_opts, r);
        std::cerr << "config error: no subcommand\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "not certified: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
