#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "stable.hpp"

namespace stablekit {

// Precomputed pdf/cdf evaluator for one parameter set. pdf() and cdf() in
// stable.hpp price a fresh quadrature per call, which is far too slow for KS
// statistics over 1e5 points or likelihood sums over thousands of tail
// points. The table samples the density once (quadrature at nodes and segment
// midpoints), integrates it cumulatively with Simpson increments, and then
// answers queries from piecewise parabolas; outside the sampled range the
// power-tail survival asymptote (or the Gaussian form at alpha = 2) takes
// over. Immutable after construction, shareable across threads.
class StableTable {
public:
    explicit StableTable(const StableParams& p, const QuadOptions& opt = {}) : p_(p) {
        p_.validate();
        build(opt);
    }

    const StableParams& params() const { return p_; }

    double pdf(double x) const {
        if (x < x_.front() || x > x_.back()) return tail_pdf(x);
        const auto [i, s] = locate(x);
        return std::max(parabola(f_[i], fm_[i], f_[i + 1], s), 0.0);
    }

    double log_pdf(double x) const {
        if (x < x_.front() || x > x_.back()) return tail_log_pdf(x);
        const auto [i, s] = locate(x);
        const double v = parabola(f_[i], fm_[i], f_[i + 1], s);
        if (!(v >= std::numeric_limits<double>::min())) return std::log(std::numeric_limits<double>::min());
        return std::log(v);
    }

    double cdf(double x) const {
        if (x < x_.front()) return left_tail_mass(x);
        if (x > x_.back()) return 1.0 - right_tail_mass(x);
        const auto [i, s] = locate(x);
        // Integral of the segment parabola from the left node to s.
        const double h = x_[i + 1] - x_[i];
        const double a = f_[i], m = fm_[i], b = f_[i + 1];
        const double s2 = s * s, s3 = s2 * s;
        const double ia = 2.0 * s3 / 3.0 - 1.5 * s2 + s;
        const double im = 2.0 * s2 - 4.0 * s3 / 3.0;
        const double ib = 2.0 * s3 / 3.0 - 0.5 * s2;
        return std::clamp(cdf_[i] + h * (a * ia + m * im + b * ib), 0.0, 1.0);
    }

    // |1 - (integrated mass + asymptote tails)|: how well the table closes.
    double closure_defect() const { return closure_defect_; }

private:
    void build(const QuadOptions& opt) {
        const double radius = detail::tail_handoff_radius(p_);
        const double core = std::min(10.0 * p_.gamma, radius);
        const double step = p_.gamma / 50.0;

        std::vector<double> offs;
        for (double t = core; t > 0.0; t -= step) offs.push_back(-t);
        offs.push_back(0.0);
        for (double t = step; t <= core + 0.5 * step; t += step) offs.push_back(t);
        for (double t = core * 1.03; t < radius; t *= 1.03) {
            offs.push_back(t);
            offs.insert(offs.begin(), -t);
        }
        offs.insert(offs.begin(), -radius);
        offs.push_back(radius);

        const std::size_t n = offs.size();
        x_.resize(n);
        for (std::size_t i = 0; i < n; ++i) x_[i] = p_.delta + offs[i];
        f_.resize(n);
        fm_.resize(n - 1);
        for (std::size_t i = 0; i < n; ++i) f_[i] = stablekit::pdf(p_, x_[i], opt);
        for (std::size_t i = 0; i + 1 < n; ++i) fm_[i] = stablekit::pdf(p_, 0.5 * (x_[i] + x_[i + 1]), opt);

        cdf_.resize(n);
        cdf_[0] = detail::survival_asymptote(p_, radius, false);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double h = x_[i + 1] - x_[i];
            cdf_[i + 1] = cdf_[i] + h * (f_[i] + 4.0 * fm_[i] + f_[i + 1]) / 6.0;
        }
        closure_defect_ = std::abs(1.0 - (cdf_.back() + detail::survival_asymptote(p_, radius, true)));
    }

    std::pair<std::size_t, double> locate(double x) const {
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - x_.begin());
        i = std::clamp<std::size_t>(i, 1, x_.size() - 1) - 1;
        return {i, (x - x_[i]) / (x_[i + 1] - x_[i])};
    }

    // Three-point Lagrange through (0,a), (1/2,m), (1,b) evaluated at s.
    static double parabola(double a, double m, double b, double s) {
        return a * (2.0 * s - 1.0) * (s - 1.0) + m * 4.0 * s * (1.0 - s) + b * s * (2.0 * s - 1.0);
    }

    double left_tail_mass(double x) const {
        if (p_.alpha == 2.0) return gauss_tail(p_.delta - x);
        return detail::survival_asymptote(p_, p_.delta - x, false);
    }
    double right_tail_mass(double x) const {
        if (p_.alpha == 2.0) return gauss_tail(x - p_.delta);
        return detail::survival_asymptote(p_, x - p_.delta, true);
    }
    // S(alpha=2) has variance 2 gamma^2: survival = erfc(t / (2 gamma)) / 2.
    double gauss_tail(double t) const { return 0.5 * std::erfc(t / (2.0 * p_.gamma)); }

    double tail_pdf(double x) const {
        const double t = std::abs(x - p_.delta);
        if (p_.alpha == 2.0)
            return std::exp(-t * t / (4.0 * p_.gamma * p_.gamma)) / (2.0 * p_.gamma * std::numbers::sqrt2 *
                                                                     std::sqrt(std::numbers::pi / 2.0));
        const bool right = x > p_.delta;
        const double s = detail::survival_asymptote(p_, t, right);
        return p_.alpha * s / t; // d/dt [c t^-a] = a c t^-(a+1)
    }

    double tail_log_pdf(double x) const {
        const double t = std::abs(x - p_.delta);
        const double floor_log = std::log(std::numeric_limits<double>::min());
        if (p_.alpha == 2.0) {
            const double lg = -t * t / (4.0 * p_.gamma * p_.gamma) -
                              std::log(2.0 * p_.gamma) - 0.5 * std::log(std::numbers::pi);
            return std::max(lg, floor_log);
        }
        const bool right = x > p_.delta;
        const double s = detail::survival_asymptote(p_, t, right);
        if (!(s > 0.0)) return floor_log;
        return std::max(std::log(p_.alpha * s / t), floor_log);
    }

    StableParams p_;
    std::vector<double> x_, f_, fm_, cdf_;
    double closure_defect_ = 0.0;
};

} // namespace stablekit
