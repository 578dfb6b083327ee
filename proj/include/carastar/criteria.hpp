#ifndef CARASTAR_CRITERIA_HPP
#define CARASTAR_CRITERIA_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "carastar/analytic.hpp"
#include "carastar/disk_opt.hpp"
#include "carastar/errors.hpp"

namespace carastar {

/// Margins must exceed this to claim a certification; values within
/// +/- tolerance of zero are inconclusive boundary cases.
inline constexpr double kCertTolerance = 1e-7;

/// Sector half-opening data. alpha is the rotation angle, mu the sector
/// order; they are tied by (pi/2) mu = pi/2 - |alpha|.
struct SectorParam {
    double alpha = 0.0;
    double mu = 1.0;

    static SectorParam from_alpha(double alpha) {
        if (!(std::abs(alpha) < std::numbers::pi / 2.0))
            throw ConfigError("alpha must satisfy |alpha| < pi/2");
        return SectorParam{alpha, 1.0 - 2.0 * std::abs(alpha) / std::numbers::pi};
    }

    static SectorParam from_mu(double mu) {
        if (!(mu > 0.0) || mu > 1.0)
            throw ConfigError("mu must lie in (0, 1]");
        return SectorParam{(std::numbers::pi / 2.0) * (1.0 - mu), mu};
    }
};

/// A positive lower bound for the half-plane-weighted infimum of g over the
/// disk: declared is the value the thresholds are evaluated with, and must
/// not exceed the numerical infimum estimate.
struct ALowerBound {
    double declared;
    ExtremumEstimate estimated_inf;

    ALowerBound(double declared, ExtremumEstimate estimated_inf)
        : declared(declared), estimated_inf(std::move(estimated_inf)) {
        if (!(this->declared > 0.0))
            throw ConfigError("A must be positive");
        if (this->declared > this->estimated_inf.value + 1e-9)
            throw ConfigError("declared A exceeds the estimated infimum; "
                              "not a valid lower bound");
    }
};

enum class TheoremId { T1, C1, C2, C3, T2, C4, C5, C6, T3, C7, C8, C9 };

enum class Verdict { Certified, HypothesisFails, Counterexample, PreconditionFails };

struct TheoremParams {
    int n = 1;
    double alpha = 0.0;
    double mu = 1.0;
    std::optional<double> declared_a;
};

/// Structured outcome of one theorem check: the binding hypothesis
/// extremum against its threshold(s), the conclusion supremum against the
/// sector bound, and the verdict. A Counterexample verdict is
/// release-blocking and must never occur for a correct implementation.
struct TheoremReport {
    TheoremId theorem_id = TheoremId::T1;
    TheoremParams params;
    std::optional<ExtremumEstimate> hypothesis_extremum;
    std::optional<double> threshold_low;
    std::optional<double> threshold_high;
    std::optional<double> hypothesis_margin;
    std::optional<ExtremumEstimate> conclusion_sup_arg;
    std::optional<double> conclusion_bound;
    std::optional<double> conclusion_margin;
    Verdict verdict = Verdict::PreconditionFails;
    bool boundary_case = false;
    std::string note;
};

// ---------------------------------------------------------------------------
// Closed-form thresholds
// ---------------------------------------------------------------------------

/// ((cos a + 2nA) sin^2 a - (nA)^2 cos a) / (2nA).
inline double t1_threshold(int n, double a_lower, double alpha) {
    if (!(a_lower > 0.0))
        throw ConfigError("A must be positive");
    if (n < 1)
        throw ConfigError("n must be >= 1");
    if (!(std::abs(alpha) < std::numbers::pi / 2.0))
        throw ConfigError("alpha must satisfy |alpha| < pi/2");
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const double na = n * a_lower;
    return ((c + 2.0 * na) * s * s - na * na * c) / (2.0 * na);
}

/// mu-form of the same threshold: ((sin(pi mu/2) + 2nA) cos^2(pi mu/2)
/// - (nA)^2 sin(pi mu/2)) / (2nA).
inline double c1_threshold(int n, double a_lower, double mu) {
    if (!(a_lower > 0.0))
        throw ConfigError("A must be positive");
    if (n < 1)
        throw ConfigError("n must be >= 1");
    if (!(mu > 0.0) || mu > 1.0)
        throw ConfigError("mu must lie in (0, 1]");
    const double half = std::numbers::pi / 2.0 * mu;
    const double s = std::sin(half);
    const double c = std::cos(half);
    const double na = n * a_lower;
    return ((s + 2.0 * na) * c * c - na * na * s) / (2.0 * na);
}

/// n = 1 specialization.
inline double c3_threshold(double a_lower, double alpha) {
    if (!(alpha >= 0.0))
        throw ConfigError("alpha must satisfy 0 <= alpha < pi/2");
    return t1_threshold(1, a_lower, alpha);
}

struct T2Bounds {
    double low;
    double high;
};

/// Two-sided bound on Im(p + z p'/p):
/// -/+ (sqrt(2n cos^2 a + n^2) -/+ ... ) / cos a with low < 0 < high.
inline T2Bounds t2_bounds(int n, double alpha) {
    if (n < 1)
        throw ConfigError("n must be >= 1");
    if (!(alpha >= 0.0) || !(alpha < std::numbers::pi / 2.0))
        throw ConfigError("alpha must satisfy 0 <= alpha < pi/2");
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    const double root = std::sqrt(2.0 * n * c * c + static_cast<double>(n) * n);
    return T2Bounds{-(root + n * s) / c, (root - n * s) / c};
}

/// mu-form of t2_bounds.
inline T2Bounds c4_bounds(int n, double mu) {
    if (n < 1)
        throw ConfigError("n must be >= 1");
    if (!(mu > 0.0) || mu > 1.0)
        throw ConfigError("mu must lie in (0, 1]");
    const double half = std::numbers::pi / 2.0 * mu;
    const double s = std::sin(half);
    const double c = std::cos(half);
    const double root = std::sqrt(2.0 * n * s * s + static_cast<double>(n) * n);
    return T2Bounds{-(root + n * c) / s, (root - n * c) / s};
}

/// The boundary profile (rho^2 (2cos^2 a + n) - 2 n rho sin a + n)
/// / (2 rho cos a) whose minimum over rho > 0 is t2_bounds.high.
inline double g1_profile(int n, double alpha, double rho) {
    if (rho == 0.0)
        throw DomainError("sigma/rho singular at rho = 0");
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    return (rho * rho * (2.0 * c * c + n) - 2.0 * n * rho * s + n) / (2.0 * rho * c);
}

/// Minimizer of g1_profile over rho > 0: sqrt(n / (2 cos^2 a + n)).
inline double rho_star(int n, double alpha) {
    const double c = std::cos(alpha);
    return std::sqrt(n / (2.0 * c * c + n));
}

inline double n_half_plus_one(int n) { return 0.5 * n + 1.0; }

/// Pointwise t3 hypothesis margin:
/// (n/2 + 1) |p(z)| cos a - |p(z) + z p'(z)/p(z) - 1|; positive means the
/// hypothesis holds at z.
inline double t3_margin(const HClassFunction& p, double alpha, const DiskPoint& z) {
    const Complex pv = p.eval(z);
    if (std::abs(pv) < kZeroTolerance)
        throw ZeroEncountered("zero of p encountered");
    const Complex functional = pv + z.value() * p.series().derivative().eval(z.value()) / pv;
    const double factor = n_half_plus_one(p.index_n()) * std::abs(pv) * std::cos(alpha);
    return factor - std::abs(functional - Complex(1.0));
}

// ---------------------------------------------------------------------------
// Hypothesis infima and the constant A
// ---------------------------------------------------------------------------

/// Numerical infimum of Re(g) cos a - |Im(g) sin a| over the sampled disk;
/// fails when the estimate is not positive. A smaller declared value (for
/// instance a closed-form bound) may be supplied and is used in the
/// thresholds.
inline ALowerBound a_of(const PowerSeries& g, double alpha, const DiskGrid& grid,
                        std::optional<double> declared = std::nullopt,
                        int refine_steps = kDefaultRefineSteps) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    ExtremumEstimate est = estimate_inf(
        [&](const DiskPoint& z) {
            const Complex gv = g.eval(z);
            return gv.real() * c - std::abs(gv.imag() * s);
        },
        grid, refine_steps);
    if (!(est.value > 0.0))
        throw DomainError("condition (2.1) fails: A <= 0");
    return ALowerBound(declared.value_or(est.value), est);
}

/// Signed variant without the absolute value on the imaginary part, used by
/// the n = 1 corollary with 0 <= alpha < pi/2.
inline ALowerBound a_of_signed(const PowerSeries& g, double alpha, const DiskGrid& grid,
                               std::optional<double> declared = std::nullopt,
                               int refine_steps = kDefaultRefineSteps) {
    if (!(alpha >= 0.0) || !(alpha < std::numbers::pi / 2.0))
        throw ConfigError("alpha must satisfy 0 <= alpha < pi/2");
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    ExtremumEstimate est = estimate_inf(
        [&](const DiskPoint& z) {
            const Complex gv = g.eval(z);
            return gv.real() * c - gv.imag() * s;
        },
        grid, refine_steps);
    if (!(est.value > 0.0))
        throw DomainError("condition (2.1) fails: A <= 0");
    return ALowerBound(declared.value_or(est.value), est);
}

namespace detail {

// sup |arg| sweep; an exact zero is graded as the worst possible argument
// so that certification fails instead of crashing on a measure-zero hit.
template <typename Eval>
ExtremumEstimate sup_abs_arg(Eval&& value_at, const DiskGrid& grid, int refine_steps) {
    return estimate_sup(
        [&](const DiskPoint& z) {
            const Complex w = value_at(z);
            if (w.real() == 0.0 && w.imag() == 0.0)
                return std::numbers::pi;
            return std::abs(arg_principal(w));
        },
        grid, refine_steps);
}

inline Verdict resolve_verdict(double hyp_margin, double conc_margin, double tol,
                               bool& boundary) {
    if (hyp_margin > tol) {
        if (conc_margin > tol)
            return Verdict::Certified;
        if (conc_margin < -tol)
            return Verdict::Counterexample;
        boundary = true;
        return Verdict::HypothesisFails;
    }
    if (std::abs(hyp_margin) <= tol)
        boundary = true;
    return Verdict::HypothesisFails;
}

inline TheoremReport precondition_failure(TheoremId id, TheoremParams params,
                                          std::string note) {
    TheoremReport report;
    report.theorem_id = id;
    report.params = std::move(params);
    report.verdict = Verdict::PreconditionFails;
    report.note = std::move(note);
    return report;
}

// Shared tail of the one-sided checks: inf of a real hypothesis functional
// against a lower threshold plus a sup |arg| conclusion.
template <typename Hypothesis, typename Value>
TheoremReport one_sided_check(TheoremId id, TheoremParams params, Hypothesis&& hyp_fn,
                              double threshold, double conclusion_bound, Value&& value_at,
                              const DiskGrid& grid, int refine_steps, double tol) {
    TheoremReport report;
    report.theorem_id = id;
    report.params = std::move(params);
    report.threshold_high = threshold;
    try {
        report.hypothesis_extremum = estimate_inf(hyp_fn, grid, refine_steps);
        report.conclusion_sup_arg = sup_abs_arg(value_at, grid, refine_steps);
    } catch (const ZeroEncountered& e) {
        report.verdict = Verdict::PreconditionFails;
        report.note = e.what();
        return report;
    }
    report.hypothesis_margin = report.hypothesis_extremum->value - threshold;
    report.conclusion_bound = conclusion_bound;
    report.conclusion_margin = conclusion_bound - report.conclusion_sup_arg->value;
    report.verdict = resolve_verdict(*report.hypothesis_margin, *report.conclusion_margin,
                                     tol, report.boundary_case);
    return report;
}

// Shared tail of the two-sided Im checks.
template <typename Functional, typename Value>
TheoremReport two_sided_check(TheoremId id, TheoremParams params, Functional&& im_fn,
                              T2Bounds bounds, double conclusion_bound, Value&& value_at,
                              const DiskGrid& grid, int refine_steps, double tol) {
    TheoremReport report;
    report.theorem_id = id;
    report.params = std::move(params);
    report.threshold_low = bounds.low;
    report.threshold_high = bounds.high;
    ExtremumEstimate im_inf;
    ExtremumEstimate im_sup;
    try {
        im_inf = estimate_inf(im_fn, grid, refine_steps);
        im_sup = estimate_sup(im_fn, grid, refine_steps);
        report.conclusion_sup_arg = sup_abs_arg(value_at, grid, refine_steps);
    } catch (const ZeroEncountered& e) {
        report.verdict = Verdict::PreconditionFails;
        report.note = e.what();
        return report;
    }
    const double low_margin = im_inf.value - bounds.low;
    const double high_margin = bounds.high - im_sup.value;
    report.hypothesis_extremum = low_margin < high_margin ? im_inf : im_sup;
    report.hypothesis_margin = std::min(low_margin, high_margin);
    report.conclusion_bound = conclusion_bound;
    report.conclusion_margin = conclusion_bound - report.conclusion_sup_arg->value;
    report.verdict = resolve_verdict(*report.hypothesis_margin, *report.conclusion_margin,
                                     tol, report.boundary_case);
    return report;
}

} // namespace detail

// ---------------------------------------------------------------------------
// t1 family
// ---------------------------------------------------------------------------

inline TheoremReport check_t1_as(TheoremId id, const HClassFunction& p, const PowerSeries& g,
                                 double alpha, const ALowerBound& a, const DiskGrid& grid,
                                 int refine_steps = kDefaultRefineSteps,
                                 double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_alpha(alpha);
    TheoremParams params{p.index_n(), sector.alpha, sector.mu, a.declared};
    if (!p.nonconstant())
        return detail::precondition_failure(id, params, "p is identically 1");
    const double threshold = id == TheoremId::C1
                                 ? c1_threshold(p.index_n(), a.declared, sector.mu)
                                 : t1_threshold(p.index_n(), a.declared, alpha);
    return detail::one_sided_check(
        id, params,
        [&](const DiskPoint& z) { return caratheodory_functional_t1(p, g, z).real(); },
        threshold, std::numbers::pi / 2.0 - std::abs(alpha),
        [&](const DiskPoint& z) { return p.eval(z); }, grid, refine_steps, tol);
}

/// The t1 check: inf Re(p + g z p') must exceed t1_threshold, and then
/// |arg p| must stay below pi/2 - |alpha|.
inline TheoremReport check_t1(const HClassFunction& p, const PowerSeries& g, double alpha,
                              const ALowerBound& a, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    return check_t1_as(TheoremId::T1, p, g, alpha, a, grid, refine_steps, tol);
}

/// mu-form of check_t1.
inline TheoremReport check_c1(const HClassFunction& p, const PowerSeries& g, double mu,
                              const ALowerBound& a, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    return check_t1_as(TheoremId::C1, p, g, sector.alpha, a, grid, refine_steps, tol);
}

/// n = 1 form with the signed integrand for A.
inline TheoremReport check_c3(const HClassFunction& p, const PowerSeries& g, double alpha,
                              const ALowerBound& a, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    if (p.index_n() != 1)
        throw ConfigError("this corollary requires index n = 1");
    if (!(alpha >= 0.0))
        throw ConfigError("alpha must satisfy 0 <= alpha < pi/2");
    return check_t1_as(TheoremId::C3, p, g, alpha, a, grid, refine_steps, tol);
}

/// Starlike form: hypothesis on Re(zf'/f + g (zf'/f)(1 - zf'/f + zf''/f')),
/// conclusion on |arg(zf'/f)|, with zeros of f or f' on the grid reported
/// as precondition failures.
inline TheoremReport check_c2(const NormalizedFunction& f, const PowerSeries& g, double mu,
                              const ALowerBound& a, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    TheoremParams params{f.index_n(), sector.alpha, sector.mu, a.declared};
    if (!f.nonidentity())
        return detail::precondition_failure(TheoremId::C2, params,
                                            "zf'/f is identically 1");
    const PowerSeries fhat = f.series().shifted_down();
    const PowerSeries fprime = f.series().derivative();
    const PowerSeries fsecond = fprime.derivative();
    const ExtremumEstimate min_fhat =
        estimate_inf([&](const DiskPoint& z) { return std::abs(fhat.eval(z)); }, grid,
                     refine_steps);
    if (min_fhat.value <= tol)
        return detail::precondition_failure(TheoremId::C2, params, "zero of f on grid");
    const ExtremumEstimate min_fprime =
        estimate_inf([&](const DiskPoint& z) { return std::abs(fprime.eval(z)); }, grid,
                     refine_steps);
    if (min_fprime.value <= tol)
        return detail::precondition_failure(TheoremId::C2, params, "zero of f' on grid");
    const double threshold = c1_threshold(f.index_n(), a.declared, mu);
    auto quotient = [&](const DiskPoint& z) {
        return z.radius() == 0.0 ? Complex(1.0)
                                 : fprime.eval(z.value()) / fhat.eval(z.value());
    };
    auto functional = [&](const DiskPoint& z) {
        const Complex s = quotient(z);
        const Complex t = z.radius() == 0.0
                              ? Complex(0.0)
                              : z.value() * fsecond.eval(z.value()) / fprime.eval(z.value());
        return (s + g.eval(z) * s * (Complex(1.0) - s + t)).real();
    };
    return detail::one_sided_check(TheoremId::C2, params, functional, threshold,
                                   std::numbers::pi / 2.0 * mu, quotient, grid,
                                   refine_steps, tol);
}

// ---------------------------------------------------------------------------
// t2 family
// ---------------------------------------------------------------------------

inline TheoremReport check_t2_as(TheoremId id, const HClassFunction& p, double alpha,
                                 T2Bounds bounds, double conclusion_bound,
                                 const DiskGrid& grid, int refine_steps, double tol) {
    TheoremParams params{p.index_n(), alpha, 1.0 - 2.0 * std::abs(alpha) / std::numbers::pi,
                         std::nullopt};
    if (!p.nonconstant())
        return detail::precondition_failure(id, params, "p is identically 1");
    const ExtremumEstimate modulus = min_modulus(p, grid, refine_steps);
    if (modulus.value <= tol)
        return detail::precondition_failure(id, params, "p vanishes on the grid");
    return detail::two_sided_check(
        id, params,
        [&](const DiskPoint& z) { return caratheodory_functional_t2(p, z).imag(); }, bounds,
        conclusion_bound, [&](const DiskPoint& z) { return p.eval(z); }, grid, refine_steps,
        tol);
}

/// The t2 check: Im(p + z p'/p) must stay strictly inside t2_bounds,
/// and then |arg p| stays below pi/2 - alpha. Requires p nonvanishing.
inline TheoremReport check_t2(const HClassFunction& p, double alpha, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    return check_t2_as(TheoremId::T2, p, alpha, t2_bounds(p.index_n(), alpha),
                       std::numbers::pi / 2.0 - alpha, grid, refine_steps, tol);
}

/// mu-form of check_t2.
inline TheoremReport check_c4(const HClassFunction& p, double mu, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    return check_t2_as(TheoremId::C4, p, sector.alpha, c4_bounds(p.index_n(), mu),
                       std::numbers::pi / 2.0 * mu, grid, refine_steps, tol);
}

/// n = 1 form of check_t2.
inline TheoremReport check_c6(const HClassFunction& p, double alpha, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    if (p.index_n() != 1)
        throw ConfigError("this corollary requires index n = 1");
    return check_t2_as(TheoremId::C6, p, alpha, t2_bounds(1, alpha),
                       std::numbers::pi / 2.0 - alpha, grid, refine_steps, tol);
}

/// Starlike form of the two-sided bound: Im(1 + zf''/f') inside c4_bounds
/// implies |arg(zf'/f)| < (pi/2) mu.
inline TheoremReport check_c5(const NormalizedFunction& f, double mu, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    TheoremParams params{f.index_n(), sector.alpha, sector.mu, std::nullopt};
    if (!f.nonidentity())
        return detail::precondition_failure(TheoremId::C5, params,
                                            "zf'/f is identically 1");
    const PowerSeries fhat = f.series().shifted_down();
    const PowerSeries fprime = f.series().derivative();
    const PowerSeries fsecond = fprime.derivative();
    const ExtremumEstimate min_quotient = estimate_inf(
        [&](const DiskPoint& z) {
            return z.radius() == 0.0
                       ? 1.0
                       : std::abs(fprime.eval(z.value()) / fhat.eval(z.value()));
        },
        grid, refine_steps);
    if (!std::isfinite(min_quotient.value) || min_quotient.value <= tol)
        return detail::precondition_failure(TheoremId::C5, params,
                                            "zf'/f vanishes on the grid");
    const ExtremumEstimate min_fprime =
        estimate_inf([&](const DiskPoint& z) { return std::abs(fprime.eval(z)); }, grid,
                     refine_steps);
    if (min_fprime.value <= tol)
        return detail::precondition_failure(TheoremId::C5, params, "zero of f' on grid");
    auto quotient = [&](const DiskPoint& z) {
        return z.radius() == 0.0 ? Complex(1.0)
                                 : fprime.eval(z.value()) / fhat.eval(z.value());
    };
    return detail::two_sided_check(
        TheoremId::C5, params,
        [&](const DiskPoint& z) {
            const Complex t = z.radius() == 0.0
                                  ? Complex(0.0)
                                  : z.value() * fsecond.eval(z.value()) /
                                        fprime.eval(z.value());
            return (Complex(1.0) + t).imag();
        },
        c4_bounds(f.index_n(), mu), std::numbers::pi / 2.0 * mu, quotient, grid,
        refine_steps, tol);
}

// ---------------------------------------------------------------------------
// t3 family
// ---------------------------------------------------------------------------

inline TheoremReport check_t3_as(TheoremId id, const HClassFunction& p, double alpha,
                                 double factor_angle_cos, double conclusion_bound,
                                 const DiskGrid& grid, int refine_steps, double tol) {
    TheoremParams params{p.index_n(), alpha, 1.0 - 2.0 * std::abs(alpha) / std::numbers::pi,
                         std::nullopt};
    if (!p.nonconstant())
        return detail::precondition_failure(id, params, "p is identically 1");
    const ExtremumEstimate modulus = min_modulus(p, grid, refine_steps);
    if (modulus.value <= tol)
        return detail::precondition_failure(id, params, "p vanishes on the grid");
    const double factor = n_half_plus_one(p.index_n());
    const PowerSeries pprime = p.series().derivative();
    return detail::one_sided_check(
        id, params,
        [&](const DiskPoint& z) {
            const Complex pv = p.eval(z);
            const Complex functional = pv + z.value() * pprime.eval(z.value()) / pv;
            return factor * std::abs(pv) * factor_angle_cos -
                   std::abs(functional - Complex(1.0));
        },
        0.0, conclusion_bound, [&](const DiskPoint& z) { return p.eval(z); }, grid,
        refine_steps, tol);
}

/// The t3 check: |p + z p'/p - 1| < (n/2 + 1)|p| cos alpha everywhere,
/// then |arg p| < pi/2 - |alpha|.
inline TheoremReport check_t3(const HClassFunction& p, double alpha, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    if (!(std::abs(alpha) < std::numbers::pi / 2.0))
        throw ConfigError("alpha must satisfy |alpha| < pi/2");
    return check_t3_as(TheoremId::T3, p, alpha, std::cos(alpha),
                       std::numbers::pi / 2.0 - std::abs(alpha), grid, refine_steps, tol);
}

/// mu-form of check_t3 with factor (n/2 + 1)|p| sin(pi mu / 2).
inline TheoremReport check_c7(const HClassFunction& p, double mu, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    return check_t3_as(TheoremId::C7, p, sector.alpha,
                       std::sin(std::numbers::pi / 2.0 * mu),
                       std::numbers::pi / 2.0 * mu, grid, refine_steps, tol);
}

/// Starlike form: |zf''/f'| < (n/2 + 1) |zf'/f| sin(pi mu/2) implies
/// |arg(zf'/f)| < (pi/2) mu.
inline TheoremReport check_c8(const NormalizedFunction& f, double mu, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    const SectorParam sector = SectorParam::from_mu(mu);
    TheoremParams params{f.index_n(), sector.alpha, sector.mu, std::nullopt};
    if (!f.nonidentity())
        return detail::precondition_failure(TheoremId::C8, params,
                                            "zf'/f is identically 1");
    const PowerSeries fhat = f.series().shifted_down();
    const PowerSeries fprime = f.series().derivative();
    const PowerSeries fsecond = fprime.derivative();
    const ExtremumEstimate min_quotient = estimate_inf(
        [&](const DiskPoint& z) {
            return z.radius() == 0.0
                       ? 1.0
                       : std::abs(fprime.eval(z.value()) / fhat.eval(z.value()));
        },
        grid, refine_steps);
    if (!std::isfinite(min_quotient.value) || min_quotient.value <= tol)
        return detail::precondition_failure(TheoremId::C8, params,
                                            "zf'/f vanishes on the grid");
    const ExtremumEstimate min_fprime =
        estimate_inf([&](const DiskPoint& z) { return std::abs(fprime.eval(z)); }, grid,
                     refine_steps);
    if (min_fprime.value <= tol)
        return detail::precondition_failure(TheoremId::C8, params, "zero of f' on grid");
    const double factor = n_half_plus_one(f.index_n());
    const double sin_half = std::sin(std::numbers::pi / 2.0 * mu);
    auto quotient = [&](const DiskPoint& z) {
        return z.radius() == 0.0 ? Complex(1.0)
                                 : fprime.eval(z.value()) / fhat.eval(z.value());
    };
    return detail::one_sided_check(
        TheoremId::C8, params,
        [&](const DiskPoint& z) {
            const Complex s = quotient(z);
            const Complex t = z.radius() == 0.0
                                  ? Complex(0.0)
                                  : z.value() * fsecond.eval(z.value()) /
                                        fprime.eval(z.value());
            return factor * std::abs(s) * sin_half - std::abs(t);
        },
        0.0, std::numbers::pi / 2.0 * mu, quotient, grid, refine_steps, tol);
}

/// n = 1 form of check_t3 (hypothesis factor 3/2).
inline TheoremReport check_c9(const HClassFunction& p, double alpha, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps,
                              double tol = kCertTolerance) {
    if (p.index_n() != 1)
        throw ConfigError("this corollary requires index n = 1");
    if (!(alpha >= 0.0) || !(alpha < std::numbers::pi / 2.0))
        throw ConfigError("alpha must satisfy 0 <= alpha < pi/2");
    return check_t3_as(TheoremId::C9, p, alpha, std::cos(alpha),
                       std::numbers::pi / 2.0 - alpha, grid, refine_steps, tol);
}

} // namespace carastar

#endif
