#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace stablekit {

// Uniform wavenumber grid. Invariants: strictly increasing, uniformly spaced
// (each gap within 1e-12 of the nominal spacing, relatively), spacing > 0.
class WavenumberGrid {
public:
    WavenumberGrid(std::vector<double> points, double spacing)
        : points_(std::move(points)), spacing_(spacing) {
        if (points_.empty()) throw std::invalid_argument("WavenumberGrid: empty grid");
        if (!(spacing_ > 0.0)) throw std::invalid_argument("WavenumberGrid: spacing must be > 0");
        for (std::size_t i = 1; i < points_.size(); ++i) {
            const double gap = points_[i] - points_[i - 1];
            if (!(gap > 0.0)) throw std::invalid_argument("WavenumberGrid: points must be strictly increasing");
            if (std::abs(gap - spacing_) > 1e-12 * spacing_)
                throw std::invalid_argument("WavenumberGrid: points not uniformly spaced");
        }
    }

    static WavenumberGrid uniform(double start, double spacing, std::size_t count) {
        std::vector<double> pts(count);
        for (std::size_t i = 0; i < count; ++i) pts[i] = start + static_cast<double>(i) * spacing;
        return WavenumberGrid(std::move(pts), spacing);
    }

    // k in [0.2, 1.0], step 0.01 (81 points): the regression grid.
    static WavenumberGrid regression_default(double k_min = 0.2, double k_max = 1.0, double step = 0.01) {
        const auto count = static_cast<std::size_t>(std::llround((k_max - k_min) / step)) + 1;
        return uniform(k_min, step, count);
    }

    // Left-Riemann grid on [-pi, pi]: `count` points from -pi with spacing
    // 2pi/count, so +pi is the right edge of the last panel, not a node.
    static WavenumberGrid distance_default(std::size_t count = 100) {
        if (count < 2) throw std::invalid_argument("WavenumberGrid: need at least 2 points");
        const double dk = 2.0 * std::numbers::pi / static_cast<double>(count);
        return uniform(-std::numbers::pi, dk, count);
    }

    const std::vector<double>& points() const { return points_; }
    double spacing() const { return spacing_; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

    // True when the union of left-Riemann panels [k_i, k_i + spacing] covers [lo, hi].
    bool covers(double lo, double hi, double tol = 1e-9) const {
        return front() <= lo + tol && back() + spacing_ >= hi - tol;
    }

private:
    std::vector<double> points_;
    double spacing_;
};

} // namespace stablekit
