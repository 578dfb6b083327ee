#ifndef CARASTAR_ANALYTIC_HPP
#define CARASTAR_ANALYTIC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "carastar/errors.hpp"

namespace carastar {

using Complex = std::complex<double>;

/// Denominators with modulus below this are treated as zeros.
inline constexpr double kZeroTolerance = 1e-12;

/// A point of the open unit disk in polar form. The cartesian value is
/// cached so hot loops pay for cos/sin exactly once per point.
class DiskPoint {
public:
    DiskPoint() : radius_(0.0), angle_(0.0), value_(0.0, 0.0) {}

    DiskPoint(double radius, double angle) {
        if (!(radius >= 0.0) || radius >= 1.0)
            throw ConfigError("DiskPoint radius must lie in [0, 1)");
        radius_ = radius;
        angle_ = normalize_angle(angle);
        value_ = std::polar(radius_, angle_);
    }

    static DiskPoint from_complex(Complex z) {
        return DiskPoint(std::abs(z), std::arg(z));
    }

    double radius() const { return radius_; }
    double angle() const { return angle_; }
    Complex value() const { return value_; }

    static double normalize_angle(double angle) {
        const double two_pi = 2.0 * std::numbers::pi;
        double a = std::fmod(angle, two_pi);
        if (a < 0.0)
            a += two_pi;
        if (a >= two_pi)
            a = 0.0;
        return a;
    }

private:
    friend class DiskGrid;
    // Fast path used by grid sweeps: unit = e^{i*angle} precomputed.
    DiskPoint(double radius, double angle, Complex unit)
        : radius_(radius), angle_(angle), value_(radius * unit) {}

    double radius_;
    double angle_;
    Complex value_;
};

/// Truncated complex power series a_0 + a_1 z + ... + a_N z^N.
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Complex> coefficients)
        : coeffs_(std::move(coefficients)) {
        if (coeffs_.empty())
            throw ConfigError("PowerSeries needs at least the constant coefficient");
    }

    PowerSeries(std::initializer_list<Complex> coefficients)
        : PowerSeries(std::vector<Complex>(coefficients)) {}

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    Complex coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
    }

    /// Horner evaluation; exact a_0 at z = 0.
    Complex eval(Complex z) const {
        Complex acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
            acc = acc * z + coeffs_[k];
        return acc;
    }

    Complex eval(const DiskPoint& z) const { return eval(z.value()); }
    Complex operator()(Complex z) const { return eval(z); }
    Complex operator()(const DiskPoint& z) const { return eval(z.value()); }

    /// Coefficient k of the result is (k+1) * a_{k+1}.
    PowerSeries derivative() const {
        if (coeffs_.size() == 1)
            return PowerSeries({Complex(0.0)});
        std::vector<Complex> out(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            out[k - 1] = static_cast<double>(k) * coeffs_[k];
        return PowerSeries(std::move(out));
    }

    /// Series of f(z)/z for series with a_0 = 0 (coefficient shift).
    PowerSeries shifted_down() const {
        if (std::abs(coeffs_[0]) > kZeroTolerance)
            throw DomainError("shifted_down requires a vanishing constant term");
        if (coeffs_.size() == 1)
            return PowerSeries({Complex(0.0)});
        return PowerSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        std::vector<Complex> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = a.coefficient(k) + b.coefficient(k);
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator*(Complex scale, const PowerSeries& s) {
        std::vector<Complex> out(s.coeffs_.size());
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = scale * s.coeffs_[k];
        return PowerSeries(std::move(out));
    }

    bool operator==(const PowerSeries& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

/// Member of H[1, n]: p(z) = 1 + a_n z^n + a_{n+1} z^{n+1} + ...
/// Construction checks the structural part (a_0 = 1, vanishing prefix);
/// non-constancy is a query because degenerate members are still evaluable.
class HClassFunction {
public:
    HClassFunction(PowerSeries series, int index_n)
        : series_(std::move(series)), index_n_(index_n) {
        if (index_n_ < 1)
            throw ConfigError("H[1,n] index n must be >= 1");
        if (std::abs(series_.coefficient(0) - Complex(1.0)) > kZeroTolerance)
            throw ConfigError("H[1,n] requires a_0 = 1");
        for (int k = 1; k < index_n_; ++k)
            if (std::abs(series_.coefficient(static_cast<std::size_t>(k))) > kZeroTolerance)
                throw ConfigError("H[1,n] requires a_1 = ... = a_{n-1} = 0 "
                                  "(coefficients inconsistent with index n)");
    }

    const PowerSeries& series() const { return series_; }
    int index_n() const { return index_n_; }

    /// True when some tail coefficient exceeds tol, i.e. p is not
    /// identically 1 at machine resolution.
    bool nonconstant(double tol = kZeroTolerance) const {
        for (std::size_t k = static_cast<std::size_t>(index_n_);
             k <= static_cast<std::size_t>(series_.truncation_order()); ++k)
            if (std::abs(series_.coefficient(k)) > tol)
                return true;
        return false;
    }

    Complex eval(const DiskPoint& z) const { return series_.eval(z.value()); }
    Complex eval(Complex z) const { return series_.eval(z); }

private:
    PowerSeries series_;
    int index_n_;
};

/// Member of A_n: f(z) = z + a_{n+1} z^{n+1} + ...
class NormalizedFunction {
public:
    NormalizedFunction(PowerSeries series, int index_n)
        : series_(std::move(series)), index_n_(index_n) {
        if (index_n_ < 1)
            throw ConfigError("A_n index n must be >= 1");
        if (std::abs(series_.coefficient(0)) > kZeroTolerance)
            throw ConfigError("A_n requires a_0 = 0");
        if (std::abs(series_.coefficient(1) - Complex(1.0)) > kZeroTolerance)
            throw ConfigError("A_n requires a_1 = 1");
        for (int k = 2; k <= index_n_; ++k)
            if (std::abs(series_.coefficient(static_cast<std::size_t>(k))) > kZeroTolerance)
                throw ConfigError("A_n requires a_2 = ... = a_n = 0 "
                                  "(coefficients inconsistent with index n)");
    }

    const PowerSeries& series() const { return series_; }
    int index_n() const { return index_n_; }

    /// True when f is not the identity, i.e. z f'(z)/f(z) is not
    /// identically 1.
    bool nonidentity(double tol = kZeroTolerance) const {
        for (std::size_t k = static_cast<std::size_t>(index_n_) + 1;
             k <= static_cast<std::size_t>(series_.truncation_order()); ++k)
            if (std::abs(series_.coefficient(k)) > tol)
                return true;
        return false;
    }

private:
    PowerSeries series_;
    int index_n_;
};

/// Principal argument in (-pi, pi]. Throws for w = 0, which in the checkers
/// signals a zero of p where the hypotheses require p != 0.
inline double arg_principal(Complex w) {
    if (w.real() == 0.0 && w.imag() == 0.0)
        throw DomainError("argument undefined at w = 0");
    double a = std::arg(w);
    // atan2(-0, x<0) yields -pi; fold onto the principal branch.
    if (a <= -std::numbers::pi)
        a = std::numbers::pi;
    return a;
}

/// z f'(z) / f(z) for f in A_n, computed as f'(z) / (f(z)/z) so the
/// removable singularity at the origin needs no special casing beyond the
/// exact value 1 at z = 0.
inline Complex starlike_quotient(const NormalizedFunction& f, const DiskPoint& z) {
    if (z.radius() == 0.0)
        return Complex(1.0);
    const Complex zc = z.value();
    const Complex fhat = f.series().shifted_down().eval(zc);
    if (std::abs(fhat) < kZeroTolerance)
        throw ZeroEncountered("zero of f encountered");
    return f.series().derivative().eval(zc) / fhat;
}

/// p(z) + g(z) * z * p'(z), the quantity whose real part the t1-style
/// hypotheses bound from below.
inline Complex caratheodory_functional_t1(const HClassFunction& p, const PowerSeries& g,
                                          const DiskPoint& z) {
    const Complex zc = z.value();
    return p.eval(zc) + g.eval(zc) * zc * p.series().derivative().eval(zc);
}

/// p(z) + z p'(z) / p(z). Throws when p(z) is numerically zero.
inline Complex caratheodory_functional_t2(const HClassFunction& p, const DiskPoint& z) {
    const Complex zc = z.value();
    const Complex pv = p.eval(zc);
    if (std::abs(pv) < kZeroTolerance)
        throw ZeroEncountered("zero of p encountered");
    return pv + zc * p.series().derivative().eval(zc) / pv;
}

} // namespace carastar

#endif
