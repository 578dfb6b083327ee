#ifndef CARASTAR_DISK_OPT_HPP
#define CARASTAR_DISK_OPT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "carastar/analytic.hpp"
#include "carastar/errors.hpp"

namespace carastar {

inline constexpr int kDefaultRefineSteps = 60;

/// Sampling grid on the open unit disk. Radii are clustered quadratically
/// toward the boundary, where every extremum of interest is approached;
/// the grid always contains the center and the max_radius ring.
class DiskGrid {
public:
    DiskGrid(int radial_count, int angular_count, double max_radius)
        : radial_count_(radial_count), angular_count_(angular_count),
          max_radius_(max_radius) {
        if (radial_count_ < 2)
            throw ConfigError("grid.radial must be >= 2");
        if (angular_count_ < 4)
            throw ConfigError("grid.angular must be >= 4");
        if (!(max_radius_ > 0.0) || max_radius_ >= 1.0)
            throw ConfigError("grid.max_radius must lie in (0, 1)");
        radii_.resize(static_cast<std::size_t>(radial_count_));
        for (int i = 0; i < radial_count_; ++i) {
            const double t = static_cast<double>(i) / (radial_count_ - 1);
            radii_[static_cast<std::size_t>(i)] = max_radius_ * t * (2.0 - t);
        }
        radii_.front() = 0.0;
        radii_.back() = max_radius_;
        angles_.resize(static_cast<std::size_t>(angular_count_));
        units_.resize(static_cast<std::size_t>(angular_count_));
        for (int j = 0; j < angular_count_; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / angular_count_;
            angles_[static_cast<std::size_t>(j)] = theta;
            units_[static_cast<std::size_t>(j)] = std::polar(1.0, theta);
        }
    }

    static DiskGrid defaults() { return DiskGrid(256, 1024, 1.0 - 1e-3); }

    int radial_count() const { return radial_count_; }
    int angular_count() const { return angular_count_; }
    double max_radius() const { return max_radius_; }
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& angles() const { return angles_; }

    DiskPoint point(int radial_index, int angular_index) const {
        return DiskPoint(radii_[static_cast<std::size_t>(radial_index)],
                         angles_[static_cast<std::size_t>(angular_index)],
                         units_[static_cast<std::size_t>(angular_index)]);
    }

    /// Radial spacing of the cell containing index i (used as the initial
    /// refinement step).
    double radial_cell(int radial_index) const {
        if (radial_index + 1 < radial_count_)
            return radii_[static_cast<std::size_t>(radial_index) + 1] -
                   radii_[static_cast<std::size_t>(radial_index)];
        return radii_.back() - radii_[radii_.size() - 2];
    }

    double angular_cell() const { return 2.0 * std::numbers::pi / angular_count_; }

private:
    int radial_count_;
    int angular_count_;
    double max_radius_;
    std::vector<double> radii_;
    std::vector<double> angles_;
    std::vector<Complex> units_;
};

/// Result of a grid extremum estimate: the value, where it was attained,
/// whether local refinement improved on the best grid sample, and how many
/// objective evaluations were spent.
struct ExtremumEstimate {
    double value = 0.0;
    DiskPoint location;
    bool refined = false;
    std::int64_t samples_used = 0;
};

namespace detail {

template <typename Objective>
double checked_eval(Objective& objective, const DiskPoint& z) {
    const double v = objective(z);
    if (!std::isfinite(v))
        throw SingularObjective(
            "objective singular on grid at radius " + std::to_string(z.radius()) +
                ", angle " + std::to_string(z.angle()),
            z.radius(), z.angle());
    return v;
}

// Derivative-free descent in (radius, angle) from the best grid sample.
// Step starts at one grid cell and halves whenever no axis move improves;
// candidates tie-break by smallest radius, then smallest angle.
template <typename Objective>
void pattern_refine(Objective& objective, const DiskGrid& grid, int steps,
                    double& best_value, DiskPoint& best_point,
                    double init_dr, std::int64_t& samples, bool& improved) {
    double dr = init_dr;
    double dtheta = grid.angular_cell();
    double r = best_point.radius();
    double theta = best_point.angle();
    for (int it = 0; it < steps; ++it) {
        double cand_value = best_value;
        double cand_r = r;
        double cand_theta = theta;
        bool moved = false;
        const double rs[2] = {std::max(0.0, r - dr), std::min(grid.max_radius(), r + dr)};
        const double ts[2] = {theta - dtheta, theta + dtheta};
        auto consider = [&](double cr, double ct) {
            const DiskPoint p(cr, ct);
            const double v = checked_eval(objective, p);
            ++samples;
            const bool better =
                v < cand_value ||
                (v == cand_value && moved &&
                 (p.radius() < cand_r ||
                  (p.radius() == cand_r && p.angle() < cand_theta)));
            if (v < best_value && better) {
                cand_value = v;
                cand_r = p.radius();
                cand_theta = p.angle();
                moved = true;
            }
        };
        consider(rs[0], theta);
        consider(rs[1], theta);
        consider(r, ts[0]);
        consider(r, ts[1]);
        if (moved) {
            best_value = cand_value;
            r = cand_r;
            theta = cand_theta;
            improved = true;
        } else {
            dr *= 0.5;
            dtheta *= 0.5;
        }
    }
    best_point = DiskPoint(r, theta);
}

} // namespace detail

/// Estimate inf over the disk of a real objective: full grid scan in
/// radius-major order (so constant objectives report the first grid point),
/// then local pattern-search refinement clamped to radius <= max_radius.
/// Deterministic for fixed inputs.
template <typename Objective>
ExtremumEstimate estimate_inf(Objective&& objective, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps) {
    auto& obj = objective;
    std::int64_t samples = 0;
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    int best_j = 0;
    for (int i = 0; i < grid.radial_count(); ++i) {
        for (int j = 0; j < grid.angular_count(); ++j) {
            const DiskPoint p = grid.point(i, j);
            const double v = detail::checked_eval(obj, p);
            ++samples;
            if (v < best) {
                best = v;
                best_i = i;
                best_j = j;
            }
        }
    }
    DiskPoint where = grid.point(best_i, best_j);
    bool improved = false;
    if (refine_steps > 0)
        detail::pattern_refine(obj, grid, refine_steps, best, where,
                               grid.radial_cell(best_i), samples, improved);
    ExtremumEstimate est;
    est.value = best;
    est.location = where;
    est.refined = improved;
    est.samples_used = samples;
    return est;
}

/// sup f = -inf(-f), exactly.
template <typename Objective>
ExtremumEstimate estimate_sup(Objective&& objective, const DiskGrid& grid,
                              int refine_steps = kDefaultRefineSteps) {
    auto negated = [&](const DiskPoint& z) { return -objective(z); };
    ExtremumEstimate est = estimate_inf(negated, grid, refine_steps);
    est.value = -est.value;
    return est;
}

/// inf |p(z)| over the sampled disk; callers compare against their own
/// tolerance to reject functions with zeros.
inline ExtremumEstimate min_modulus(const HClassFunction& p, const DiskGrid& grid,
                                    int refine_steps = kDefaultRefineSteps) {
    return estimate_inf([&](const DiskPoint& z) { return std::abs(p.eval(z)); },
                        grid, refine_steps);
}

} // namespace carastar

#endif
