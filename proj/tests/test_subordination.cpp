#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "carastar/harness.hpp"
#include "carastar/subordination.hpp"

using namespace carastar;

namespace {

constexpr double pi = std::numbers::pi;

const DiskGrid& test_grid() {
    static const DiskGrid grid(96, 384, 0.999);
    return grid;
}

// h = e^{i a}(1 + c z^n), a member of H[e^{i a}, n]; touches the boundary
// of the right half-plane inside the disk exactly when |c| > cos a, at
// height rho = sin a, with multiplier 2n.
AnalyticMap rotated_monomial(double alpha, Complex c, int n) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(n + 1), Complex(0.0));
    coeffs[0] = std::polar(1.0, alpha);
    coeffs[static_cast<std::size_t>(n)] = std::polar(1.0, alpha) * c;
    return to_analytic_map(PowerSeries(coeffs), n);
}

} // namespace

TEST_CASE("target: values, pole, image half-plane") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    CHECK(std::abs(q0.eval(Complex(0.0)) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(q0.eval(Complex(-1.0))) < 1e-15);
    CHECK_THROWS_AS(q0.eval(Complex(1.0)), DomainError);

    const RotatedHalfPlaneTarget q45(pi / 4.0, Orientation::Plus);
    CHECK(std::abs(q45.eval(Complex(0.0)) - std::polar(1.0, pi / 4.0)) < 1e-15);
    const RotatedHalfPlaneTarget q45m(pi / 4.0, Orientation::Minus);
    CHECK(std::abs(q45m.eval(Complex(0.0)) - std::polar(1.0, -pi / 4.0)) < 1e-15);

    SplitMix64 rng(83);
    for (int i = 0; i < 500; ++i) {
        const Complex z = rng.uniform_disk(0.999);
        CHECK(q45.eval(z).real() > 0.0);
        CHECK(q45m.eval(z).real() > 0.0);
    }
}

TEST_CASE("target inverse: spot values, boundary correspondence, round trip") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    CHECK(std::abs(q0.inverse(Complex(0.0)) - Complex(-1.0)) < 1e-15);
    CHECK(std::abs(q0.inverse(Complex(1.0))) < 1e-15);
    CHECK_THROWS_AS(q0.inverse(Complex(-1.0, 0.0)), DomainError);

    const RotatedHalfPlaneTarget q45(pi / 4.0, Orientation::Plus);
    SplitMix64 rng(89);
    for (int i = 0; i < 200; ++i) {
        const double rho = -10.0 + 20.0 * rng.uniform01();
        const Complex zeta = q45.inverse(Complex(0.0, rho));
        CHECK(std::abs(std::abs(zeta) - 1.0) < 1e-10);
    }
    for (int i = 0; i < 1000; ++i) {
        const Complex z = rng.uniform_disk(0.99);
        const RotatedHalfPlaneTarget& q = (i % 2 == 0) ? q0 : q45;
        CHECK(std::abs(q.inverse(q.eval(z)) - z) < 1e-10);
    }
}

TEST_CASE("sigma: spot values, negativity, reflection") {
    CHECK(sigma1(0.0, 0.0) == -0.5);
    CHECK(sigma1(1.0, 0.0) == -1.0);

    SplitMix64 rng(97);
    for (int i = 0; i < 200; ++i) {
        const double alpha = -1.4 + 2.8 * rng.uniform01();
        // vertex of the numerator quadratic: sigma1(sin a, a) = -cos(a)/2
        CHECK(std::abs(sigma1(std::sin(alpha), alpha) + std::cos(alpha) / 2.0) < 1e-15);
    }
    for (int i = 0; i < 10000; ++i) {
        const double alpha = -(pi / 2.0 - 1e-3) + 2.0 * (pi / 2.0 - 1e-3) * rng.uniform01();
        const double rho = -20.0 + 40.0 * rng.uniform01();
        CHECK(sigma1(rho, alpha) < 0.0);
        CHECK(sigma2(rho, alpha) == sigma1(-rho, alpha));
        CHECK(std::abs(sigma2(rho, alpha) - sigma1(rho, -alpha)) <=
              1e-12 * std::abs(sigma2(rho, alpha)));
    }
}

TEST_CASE("sigma matches direct Moebius differentiation on the boundary") {
    SplitMix64 rng(101);
    for (int i = 0; i < 500; ++i) {
        const double alpha = -1.3 + 2.6 * rng.uniform01();
        const double rho = -8.0 + 16.0 * rng.uniform01();
        const RotatedHalfPlaneTarget plus(alpha, Orientation::Plus);
        const Complex zeta = plus.inverse(Complex(0.0, rho));
        CHECK(std::abs(zeta * plus.derivative(zeta) - Complex(sigma1(rho, alpha))) < 1e-8);

        const RotatedHalfPlaneTarget minus(alpha, Orientation::Minus);
        const Complex zeta2 = minus.inverse(Complex(0.0, rho));
        CHECK(std::abs(zeta2 * minus.derivative(zeta2) - Complex(sigma2(rho, alpha))) <
              1e-8);
    }
}

TEST_CASE("is_subordinate_halfplane: series and composite instances") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    const DiskGrid& grid = test_grid();

    const SubordinationCheck affine =
        is_subordinate_halfplane(PowerSeries({Complex(1.0), Complex(0.5)}), q0, grid);
    CHECK(affine.subordinate);
    CHECK(affine.margin == doctest::Approx(0.5).epsilon(1e-3));

    const SubordinationCheck not_sub =
        is_subordinate_halfplane(PowerSeries({Complex(1.0), Complex(-2.0)}), q0, grid);
    CHECK_FALSE(not_sub.subordinate);

    const AnalyticMap composed = schwarz_composite(q0, Complex(0.7), 3);
    CHECK(is_subordinate_halfplane(composed, q0, grid).subordinate);

    CHECK_THROWS_AS(
        is_subordinate_halfplane(PowerSeries({Complex(0.9), Complex(0.1)}), q0, grid),
        DomainError);
}

TEST_CASE("mm_witness: hand-checked touch for h = 1 - 2z") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    const auto witness =
        mm_witness(PowerSeries({Complex(1.0), Complex(-2.0)}), 1, q0, test_grid());
    REQUIRE(witness.has_value());
    CHECK(std::abs(witness->z0.radius() - 0.5) < 1e-6);
    const double angle = witness->z0.angle();
    CHECK((angle < 1e-6 || angle > 2.0 * pi - 1e-6));
    CHECK(std::abs(witness->rho) < 1e-6);
    CHECK(std::abs(witness->zeta0 - Complex(-1.0)) < 1e-6);
    CHECK(std::abs(witness->sigma + 0.5) < 1e-6);
    CHECK(std::abs(witness->m - 2.0) < 1e-6);
    CHECK(witness->residual < 1e-8);
}

TEST_CASE("mm_witness: subordinate composites yield none") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    const AnalyticMap h = schwarz_composite(q0, Complex(1.0 - 1e-9), 1);
    CHECK_FALSE(mm_witness(h, q0, test_grid()).has_value());
}

TEST_CASE("mm_witness: rotated monomial family hits rho = sin a, m = 2n") {
    SplitMix64 rng(103);
    for (int i = 0; i < 30; ++i) {
        const double alpha = -1.2 + 2.4 * rng.uniform01();
        const int n = 1 + static_cast<int>(rng.next() % 3);
        const double magnitude = std::cos(alpha) * (1.1 + 0.8 * rng.uniform01());
        const Complex c = std::polar(magnitude, 2.0 * pi * rng.uniform01());
        const AnalyticMap h = rotated_monomial(alpha, c, n);
        const RotatedHalfPlaneTarget q(alpha, Orientation::Plus);
        const auto witness = mm_witness(h, q, test_grid());
        REQUIRE(witness.has_value());
        CHECK(std::abs(witness->rho - std::sin(alpha)) < 1e-6);
        CHECK(std::abs(witness->sigma + std::cos(alpha) / 2.0) < 1e-6);
        CHECK(std::abs(witness->m - 2.0 * n) < 1e-5);
        CHECK(witness->m >= n - 1e-4);

        // witness soundness: the touch closes through the target and the
        // multiplier equation balances up to the imaginary residue
        const Complex touch = h.value(witness->z0.value());
        CHECK(std::abs(touch - q.eval(witness->zeta0)) < 1e-8);
        CHECK(std::abs(witness->z0.value() * h.deriv(witness->z0.value()) -
                       witness->m * witness->zeta0 * q.derivative(witness->zeta0)) < 1e-6);
    }
}

TEST_CASE("witness_at: touches at the excluded boundary point are rejected") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    // h(0.5) = 1e7 i lands within 2e-7 of zeta = 1 under the inverse map.
    const Complex c = (Complex(0.0, 1e7) - Complex(1.0)) / Complex(0.5);
    const AnalyticMap h = to_analytic_map(PowerSeries({Complex(1.0), c}), 1);
    CHECK_THROWS_AS(witness_at(h, q0, DiskPoint(0.5, 0.0)), DomainError);
}

TEST_CASE("mm_witness: unbracketable sign change is reported") {
    const DiskGrid grid(16, 16, 0.9);
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    // Negative only at one interior grid point; positive on the whole
    // max-radius ring, so the radial bisection cannot bracket.
    const double bad_radius = grid.radii()[10];
    const double bad_angle = grid.angles()[5];
    AnalyticMap h;
    h.index_n = 1;
    h.value = [bad_radius, bad_angle](Complex z) {
        const bool at_bad = std::abs(std::abs(z) - bad_radius) < 1e-12 &&
                            std::abs(DiskPoint::normalize_angle(std::arg(z)) - bad_angle) <
                                1e-12;
        return at_bad ? Complex(-1.0) : Complex(1.0);
    };
    h.deriv = [](Complex) { return Complex(0.0); };
    CHECK_THROWS_AS(mm_witness(h, q0, grid, 0), DomainError);
}

TEST_CASE("mm_witness: mismatched centers are rejected") {
    const RotatedHalfPlaneTarget q0(0.0, Orientation::Plus);
    CHECK_THROWS_AS(mm_witness(PowerSeries({Complex(0.5), Complex(-2.0)}), 1, q0, test_grid()),
                    DomainError);
}
