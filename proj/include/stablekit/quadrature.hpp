#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace stablekit {

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    std::size_t max_panels = 20000;
    std::size_t initial_panels = 1; // caller hint, e.g. one panel per oscillation
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;      // accumulated Kronrod error estimate
    std::size_t panels = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights (positive half; node 7 is the midpoint).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGk15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGk15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// One Gauss-Kronrod 7-15 panel: returns the Kronrod estimate and |K15-G7| as
// the error proxy (conservative; fine for the smooth-but-oscillatory CF
// integrands this library feeds it).
template <class Fn>
inline void gk15(const Fn& f, double a, double b, double& value, double& error) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double k = kGk15WeightsK[7] * fc;
    double g = kGk15WeightsG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kGk15Nodes[j];
        const double sum = f(c - x) + f(c + x);
        k += kGk15WeightsK[j] * sum;
        if (j % 2 == 1) g += kGk15WeightsG[j / 2] * sum; // odd Kronrod nodes are the Gauss nodes
    }
    value = k * h;
    error = std::abs((k - g) * h);
}

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; } // max-heap on error
};

} // namespace detail

// Globally adaptive Gauss-Kronrod integration on [a, b]. Splits the worst
// panel until the summed error estimate meets max(abs_tol, rel_tol*|I|) or the
// panel budget is exhausted (IntegrationFailure).
template <class Fn>
inline QuadResult integrate_adaptive(const Fn& f, double a, double b, const QuadOptions& opt = {}) {
    if (!(b > a)) return {};
    const std::size_t m0 = std::clamp<std::size_t>(opt.initial_panels, 1, opt.max_panels);
    std::priority_queue<detail::Panel> heap;
    double total = 0.0, err = 0.0;
    const double w = (b - a) / static_cast<double>(m0);
    for (std::size_t i = 0; i < m0; ++i) {
        detail::Panel p{a + static_cast<double>(i) * w, a + static_cast<double>(i + 1) * w, 0, 0};
        if (i + 1 == m0) p.b = b;
        detail::gk15(f, p.a, p.b, p.value, p.error);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    std::size_t panels = m0;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (panels >= opt.max_panels)
            throw IntegrationFailure("adaptive quadrature: panel budget exhausted before tolerance");
        detail::Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        detail::Panel l{worst.a, mid, 0, 0}, r{mid, worst.b, 0, 0};
        detail::gk15(f, l.a, l.b, l.value, l.error);
        detail::gk15(f, r.a, r.b, r.value, r.error);
        total += l.value + r.value;
        err += l.error + r.error;
        heap.push(l);
        heap.push(r);
        ++panels;
        // Error sums of many tiny panels bottom out near machine noise; stop
        // refining once the estimate is clearly below representable progress.
        if (err < 1e-300) break;
    }
    return {total, err, panels};
}

} // namespace stablekit
