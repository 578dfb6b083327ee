#ifndef CARASTAR_SUBORDINATION_HPP
#define CARASTAR_SUBORDINATION_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>

#include "carastar/analytic.hpp"
#include "carastar/disk_opt.hpp"
#include "carastar/errors.hpp"

namespace carastar {

enum class Orientation { Plus, Minus };

/// Moebius map q(z) = (e^{i phi} + e^{-i phi} z) / (1 - z) with
/// phi = +alpha (Plus) or -alpha (Minus). It sends the unit disk onto the
/// open right half-plane with q(0) = e^{i phi}, and has its only pole at
/// z = 1.
class RotatedHalfPlaneTarget {
public:
    RotatedHalfPlaneTarget(double alpha, Orientation orientation)
        : rotation_(alpha), orientation_(orientation),
          phi_(orientation == Orientation::Plus ? alpha : -alpha) {
        if (!(std::abs(alpha) < std::numbers::pi / 2.0))
            throw ConfigError("alpha must satisfy |alpha| < pi/2");
    }

    double rotation() const { return rotation_; }
    Orientation orientation() const { return orientation_; }
    Complex value_at_zero() const { return std::polar(1.0, phi_); }

    Complex eval(Complex z) const {
        if (std::abs(Complex(1.0) - z) < kZeroTolerance)
            throw DomainError("half-plane target has a pole at z = 1");
        return (std::polar(1.0, phi_) + std::polar(1.0, -phi_) * z) / (Complex(1.0) - z);
    }

    /// q'(z) = 2 cos(phi) / (1 - z)^2.
    Complex derivative(Complex z) const {
        const Complex denom = Complex(1.0) - z;
        if (std::abs(denom) < kZeroTolerance)
            throw DomainError("half-plane target has a pole at z = 1");
        return 2.0 * std::cos(phi_) / (denom * denom);
    }

    /// Inverse map (w - e^{i phi}) / (w + e^{-i phi}); purely imaginary w
    /// land on the unit circle.
    Complex inverse(Complex w) const {
        const Complex denom = w + std::polar(1.0, -phi_);
        if (std::abs(denom) < kZeroTolerance)
            throw DomainError("inverse singular");
        return (w - std::polar(1.0, phi_)) / denom;
    }

private:
    double rotation_;
    Orientation orientation_;
    double phi_;
};

/// zeta q'(zeta) on the boundary for the Plus target, as a function of the
/// touch height rho: -(rho^2 - 2 rho sin a + 1) / (2 cos a). Always
/// negative since the numerator is (rho - sin a)^2 + cos^2 a.
inline double sigma1(double rho, double alpha) {
    const double c = std::cos(alpha);
    if (!(c > 0.0))
        throw ConfigError("alpha must satisfy |alpha| < pi/2");
    return -(rho * rho - 2.0 * rho * std::sin(alpha) + 1.0) / (2.0 * c);
}

/// Minus-target counterpart -(rho^2 + 2 rho sin a + 1) / (2 cos a),
/// which is sigma1 reflected in rho (bit-exactly, by delegation).
inline double sigma2(double rho, double alpha) { return sigma1(-rho, alpha); }

/// An analytic function on the disk given by value and derivative
/// evaluators. Power series convert exactly; composites (q composed with a
/// Schwarz map) evaluate in closed form, which matters near the boundary
/// where truncation error would dominate.
struct AnalyticMap {
    std::function<Complex(Complex)> value;
    std::function<Complex(Complex)> deriv;
    int index_n = 1;
};

inline AnalyticMap to_analytic_map(const PowerSeries& series, int index_n = 1) {
    PowerSeries deriv = series.derivative();
    return AnalyticMap{
        [series](Complex z) { return series.eval(z); },
        [deriv](Complex z) { return deriv.eval(z); },
        index_n,
    };
}

/// Exact nonnegative integer power (std::pow on complex goes through
/// exp/log and is undefined at the origin for exponent 0).
inline Complex int_pow(Complex z, int exponent) {
    Complex result(1.0);
    while (exponent > 0) {
        if (exponent & 1)
            result *= z;
        z *= z;
        exponent >>= 1;
    }
    return result;
}

/// h = q(c z^m), subordinate to q by construction for |c| <= 1.
inline AnalyticMap schwarz_composite(const RotatedHalfPlaneTarget& q, Complex c, int power) {
    if (power < 1)
        throw ConfigError("Schwarz power must be >= 1");
    if (std::abs(c) > 1.0)
        throw ConfigError("Schwarz coefficient must satisfy |c| <= 1");
    return AnalyticMap{
        [q, c, power](Complex z) { return q.eval(c * int_pow(z, power)); },
        [q, c, power](Complex z) {
            const Complex w = c * int_pow(z, power);
            return q.derivative(w) * c * static_cast<double>(power) *
                   int_pow(z, power - 1);
        },
        power,
    };
}

struct SubordinationCheck {
    bool subordinate;
    double margin; // inf Re(h) over the grid
    ExtremumEstimate inf_re;
};

/// For the half-plane targets, h is subordinate to q exactly when
/// h(0) = q(0) and h maps into the right half-plane; numerically the image
/// condition is inf Re(h) > 0 over the sampled grid.
inline SubordinationCheck is_subordinate_halfplane(const AnalyticMap& h,
                                                   const RotatedHalfPlaneTarget& q,
                                                   const DiskGrid& grid,
                                                   int refine_steps = kDefaultRefineSteps) {
    if (std::abs(h.value(Complex(0.0)) - q.value_at_zero()) > kZeroTolerance)
        throw DomainError("subordination undefined: centers differ");
    ExtremumEstimate inf_re = estimate_inf(
        [&](const DiskPoint& z) { return h.value(z.value()).real(); }, grid, refine_steps);
    return SubordinationCheck{inf_re.value > 0.0, inf_re.value, inf_re};
}

inline SubordinationCheck is_subordinate_halfplane(const PowerSeries& h,
                                                   const RotatedHalfPlaneTarget& q,
                                                   const DiskGrid& grid,
                                                   int refine_steps = kDefaultRefineSteps) {
    return is_subordinate_halfplane(to_analytic_map(h), q, grid, refine_steps);
}

/// Boundary-touch data for a failed subordination: an interior point z0
/// where h meets the boundary of the half-plane, the boundary preimage
/// zeta0, the touch height rho, the boundary derivative sigma, and the
/// multiplier m with its imaginary residue as a quality metric.
struct Witness {
    DiskPoint z0;
    Complex zeta0;
    double rho;
    double sigma;
    double m;
    double residual;
};

namespace detail {

// Bisect Re h = 0 in radius along a fixed ray. lo must have Re h > 0 and
// hi Re h <= 0.
inline double bisect_touch_radius(const AnalyticMap& h, double angle, double lo, double hi,
                                  int iterations = 80) {
    const Complex unit = std::polar(1.0, angle);
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h.value(mid * unit).real() > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// 1-D pattern minimization of Re h over the angle at fixed radius.
inline double refine_touch_angle(const AnalyticMap& h, double radius, double angle,
                                 double step, int iterations = 60) {
    double best = h.value(std::polar(radius, angle)).real();
    for (int i = 0; i < iterations; ++i) {
        const double left = angle - step;
        const double right = angle + step;
        const double vl = h.value(std::polar(radius, left)).real();
        const double vr = h.value(std::polar(radius, right)).real();
        if (vl < best && vl <= vr) {
            angle = left;
            best = vl;
        } else if (vr < best) {
            angle = right;
            best = vr;
        } else {
            step *= 0.5;
        }
    }
    return angle;
}

} // namespace detail

/// Build and validate the witness for a given touch point z0 (Re h(z0)
/// must vanish up to the bisection tolerance). Exposed separately so
/// externally supplied touches can be checked too.
inline Witness witness_at(const AnalyticMap& h, const RotatedHalfPlaneTarget& q,
                          const DiskPoint& z0) {
    const Complex touch = h.value(z0.value());
    const Complex zeta0 = q.inverse(touch);
    if (std::abs(zeta0 - Complex(1.0)) < 1e-6)
        throw DomainError("touch at excluded boundary point zeta = 1");
    if (std::abs(std::abs(zeta0) - 1.0) > 1e-9)
        throw DomainError("touch preimage is off the unit circle; Re h(z0) does not vanish");
    const double rho = touch.imag();
    const Complex sigma_direct = zeta0 * q.derivative(zeta0);
    const double sigma_closed = q.orientation() == Orientation::Plus
                                    ? sigma1(rho, q.rotation())
                                    : sigma2(rho, q.rotation());
    if (std::abs(sigma_direct - Complex(sigma_closed)) > 1e-8)
        throw DomainError("boundary derivative disagrees with its closed form; "
                          "touch point is not on the boundary");
    const Complex multiplier = z0.value() * h.deriv(z0.value()) / sigma_direct;
    Witness w;
    w.z0 = z0;
    w.zeta0 = zeta0;
    w.rho = rho;
    w.sigma = sigma_direct.real();
    w.m = multiplier.real();
    w.residual = std::abs(multiplier.imag());
    if (w.residual > 1e-6)
        throw DomainError("multiplier is not real: touch is not a clean boundary contact");
    return w;
}

/// Search for a Miller-Mocanu touch point of h against q: none when h is
/// subordinate at grid resolution; otherwise the minimal-radius point with
/// Re h = 0, located by a coarse scan, radial sign-change bisection along
/// the minimizing ray and alternating 1-D angle refinement.
inline std::optional<Witness> mm_witness(const AnalyticMap& h,
                                         const RotatedHalfPlaneTarget& q,
                                         const DiskGrid& grid,
                                         int refine_steps = kDefaultRefineSteps) {
    if (std::abs(h.value(Complex(0.0)) - q.value_at_zero()) > kZeroTolerance)
        throw DomainError("subordination undefined: centers differ");
    const ExtremumEstimate inf_re = estimate_inf(
        [&](const DiskPoint& z) { return h.value(z.value()).real(); }, grid, refine_steps);
    if (inf_re.value > 0.0)
        return std::nullopt;

    double angle = inf_re.location.angle();
    double hi = grid.max_radius();
    if (!(h.value(std::polar(hi, angle)).real() <= 0.0))
        throw DomainError("touch not isolated: no sign change along the candidate ray");
    double radius = detail::bisect_touch_radius(h, angle, 0.0, hi);

    // Alternate radius bisection and angle minimization: the minimal-radius
    // touch sits where Re h vanishes and is angularly stationary.
    for (int round = 0; round < 4; ++round) {
        angle = detail::refine_touch_angle(h, radius, angle, grid.angular_cell());
        if (h.value(std::polar(radius, angle)).real() <= 0.0) {
            radius = detail::bisect_touch_radius(h, angle, 0.0, radius);
        } else if (h.value(std::polar(hi, angle)).real() <= 0.0) {
            radius = detail::bisect_touch_radius(h, angle, radius, hi);
        } else {
            throw DomainError("touch not isolated: sign change lost during refinement");
        }
    }
    return witness_at(h, q, DiskPoint(radius, angle));
}

inline std::optional<Witness> mm_witness(const PowerSeries& h, int index_n,
                                         const RotatedHalfPlaneTarget& q,
                                         const DiskGrid& grid,
                                         int refine_steps = kDefaultRefineSteps) {
    return mm_witness(to_analytic_map(h, index_n), q, grid, refine_steps);
}

} // namespace carastar

#endif
