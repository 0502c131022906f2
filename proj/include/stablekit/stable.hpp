#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "errors.hpp"
#include "quadrature.hpp"

namespace stablekit {

// ============================================================================
// Stable-distribution parameters, S(alpha, beta, gamma, delta) in the
// 1-parameterization: the characteristic function is
//   phi(k) = exp{ i delta k - gamma^alpha |k|^alpha (1 - i beta sgn(k) w(k,alpha)) }
//   w(k, alpha) = tan(pi alpha / 2)        for alpha != 1
//   w(k, alpha) = -(2/pi) log|k|           for alpha  = 1
// ============================================================================

struct StableParams {
    double alpha = 2.0; // tail index, 0 < alpha <= 2
    double beta = 0.0;  // skewness, -1 <= beta <= 1
    double gamma = 1.0; // scale, > 0
    double delta = 0.0; // location, finite

    void validate() const {
        if (!(alpha > 0.0) || !(alpha <= 2.0) || !std::isfinite(alpha))
            throw std::invalid_argument("StableParams: alpha must be in (0, 2]");
        if (!(beta >= -1.0) || !(beta <= 1.0) || !std::isfinite(beta))
            throw std::invalid_argument("StableParams: beta must be in [-1, 1]");
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("StableParams: gamma must be > 0");
        if (!std::isfinite(delta))
            throw std::invalid_argument("StableParams: delta must be finite");
    }
};

// tan(pi alpha / 2) with the boundary pinned: exactly 0 at alpha = 2, so that
// beta drops out of every formula there instead of leaving ~1e-16 residue.
inline double tanpa(double alpha) {
    if (alpha == 2.0) return 0.0;
    return std::tan(std::numbers::pi * alpha / 2.0);
}

inline std::complex<double> cf(const StableParams& p, double k) {
    p.validate();
    if (!std::isfinite(k)) throw std::invalid_argument("cf: k must be finite");
    if (k == 0.0) return {1.0, 0.0}; // limit handled explicitly, avoids log(0)
    const double ak = std::abs(k);
    const double env = std::pow(p.gamma * ak, p.alpha); // gamma^alpha |k|^alpha
    double phase = p.delta * k;
    if (p.alpha == 1.0) {
        // w = -(2/pi) log|k|: exponent -gamma|k| - i (2/pi) beta gamma k log|k|
        phase -= (2.0 / std::numbers::pi) * p.beta * p.gamma * k * std::log(ak);
    } else {
        phase += p.beta * (k > 0 ? 1.0 : -1.0) * env * tanpa(p.alpha);
    }
    return std::polar(std::exp(-env), phase);
}

// Right/left survival constant: P(X > x) ~ c x^{-alpha} for the standardized
// law, with c = Gamma(alpha) sin(pi alpha/2) (1+beta) / pi. For general gamma
// the tail mass scales by gamma^alpha (handled by callers that need it).
inline double tail_asymptote_constant(const StableParams& p) {
    if (p.alpha == 2.0) throw std::domain_error("tail_asymptote_constant: no power tail at alpha = 2");
    if (!(p.alpha > 0.0 && p.alpha < 2.0)) throw std::domain_error("tail_asymptote_constant: alpha outside (0, 2)");
    return std::tgamma(p.alpha) * std::sin(std::numbers::pi * p.alpha / 2.0) * (1.0 + p.beta) / std::numbers::pi;
}

namespace detail {

// |phi(k)| = exp(-(gamma k)^alpha) < 1e-16 beyond this k: truncation point of
// the inversion integral. ln(1e16) = 36.84...
inline double cf_truncation_k(const StableParams& p) {
    constexpr double kLogCut = 36.841361487904734; // -log(1e-16)
    return std::pow(kLogCut, 1.0 / p.alpha) / p.gamma;
}

// Total phase swept by e^{-ikx} phi(k) over [0, K]; sizes the initial panel
// count so the adaptive pass starts with ~1.5 rad per panel.
inline double inversion_phase_span(const StableParams& p, double x, double kmax) {
    const double drift = std::abs(p.delta - x) * kmax;
    if (p.alpha == 1.0) {
        const double lk = std::max(std::abs(std::log(kmax)), 1.0);
        return drift + (2.0 / std::numbers::pi) * std::abs(p.beta) * p.gamma * kmax * lk;
    }
    return drift + std::abs(p.beta * tanpa(p.alpha)) * std::pow(p.gamma * kmax, p.alpha);
}

// One-sided survival asymptote S(t) = (1 +/- beta) c_alpha gamma^alpha t^{-alpha}
// measured from the location delta (t = |x - delta|). Zero at alpha = 2.
inline double survival_asymptote(const StableParams& p, double t, bool right_side) {
    if (p.alpha == 2.0) return 0.0;
    const double c_alpha = std::tgamma(p.alpha) * std::sin(std::numbers::pi * p.alpha / 2.0) / std::numbers::pi;
    const double skew = right_side ? (1.0 + p.beta) : (1.0 - p.beta);
    return skew * c_alpha * std::pow(p.gamma, p.alpha) * std::pow(t, -p.alpha);
}

// Radius |x - delta| beyond which the one-term survival asymptote is accurate
// to ~3e-5 absolute. Derived from the second series term ratio
// rho = Gamma(2a)|sin(pi a)| / (2 Gamma(a) sin(pi a/2)); near alpha = 1 the
// ratio formula degenerates (log corrections), so a wide fixed radius is used.
// Capped so a pdf evaluation at the radius stays inside the default panel
// budget (the integrand oscillates ~K|x-delta| radians); small alpha trades
// asymptote accuracy for feasibility.
inline double tail_handoff_radius(const StableParams& p) {
    if (p.alpha == 2.0) return 14.0 * p.gamma; // Gaussian mass beyond is < 1e-21
    const double budget_safe = 20000.0 / cf_truncation_k(p);
    double r;
    if (std::abs(p.alpha - 1.0) < 0.05) {
        r = 400.0 * p.gamma;
    } else {
        const double a = p.alpha;
        const double rho = std::tgamma(2.0 * a) * std::abs(std::sin(std::numbers::pi * a)) /
                           (2.0 * std::tgamma(a) * std::sin(std::numbers::pi * a / 2.0));
        const double c = std::tgamma(a) * std::sin(std::numbers::pi * a / 2.0) * (1.0 + std::abs(p.beta)) /
                         std::numbers::pi;
        constexpr double kTarget = 3e-5;
        r = p.gamma * std::pow(2.0 * c * std::max(rho, 0.05) / kTarget, 1.0 / (2.0 * a));
    }
    return std::clamp(std::min(r, budget_safe), 8.0 * p.gamma, 600.0 * p.gamma);
}

// Integrand of the symmetry-reduced inversion
//   f(x) = (1/pi) int_0^inf exp(-(gamma k)^alpha) cos(theta(k)) dk.
struct InversionIntegrand {
    double alpha, beta, gamma, drift; // drift = delta - x
    bool alpha_is_one;
    double tan_half; // tan(pi alpha/2), 0 at alpha=2

    double operator()(double k) const {
        const double env = std::exp(-std::pow(gamma * k, alpha));
        double theta = drift * k;
        if (alpha_is_one) {
            if (k > 0.0) theta -= (2.0 / std::numbers::pi) * beta * gamma * k * std::log(k);
        } else {
            theta += beta * std::pow(gamma * k, alpha) * tan_half;
        }
        return env * std::cos(theta);
    }
};

inline QuadOptions pdf_quad_options(const StableParams& p, double x, double kmax, const QuadOptions& opt) {
    QuadOptions o = opt;
    const double span = inversion_phase_span(p, x, kmax);
    o.initial_panels = std::clamp<std::size_t>(static_cast<std::size_t>(span / 1.5) + 16, 16, opt.max_panels);
    if (o.initial_panels >= opt.max_panels)
        throw IntegrationFailure("pdf: oscillation count exceeds panel budget (x too far in the tail or alpha too small)");
    return o;
}

} // namespace detail

// Density by Fourier inversion of the CF, using the symmetry-reduced real
// integral with adaptive truncation where |phi| < 1e-16 and adaptive
// Gauss-Kronrod refinement. Clamped at 0 against quadrature noise.
inline double pdf(const StableParams& p, double x, const QuadOptions& opt = {}) {
    p.validate();
    if (!std::isfinite(x)) throw std::invalid_argument("pdf: x must be finite");
    const double kmax = detail::cf_truncation_k(p);
    const detail::InversionIntegrand f{p.alpha, p.beta, p.gamma, p.delta - x, p.alpha == 1.0, tanpa(p.alpha)};
    const QuadOptions o = detail::pdf_quad_options(p, x, kmax, opt);
    const QuadResult r = integrate_adaptive(f, 0.0, kmax, o);
    return std::max(r.value / std::numbers::pi, 0.0);
}

namespace detail {

// P(X > delta) - P(X < delta) for the standardized law, by integrating the
// paired density difference f(u) - f(-u) out to the asymptote handoff. Depends
// only on (alpha, beta); memoized per thread because every cdf call needs it.
inline double median_offset_mass(double alpha, double beta, const QuadOptions& opt) {
    if (beta == 0.0 || alpha == 2.0) return 0.0;
    struct Cache {
        double alpha = -1, beta = 0, value = 0;
    };
    thread_local Cache cache;
    if (cache.alpha == alpha && cache.beta == beta) return cache.value;

    const StableParams std_params{alpha, beta, 1.0, 0.0};
    const double radius = tail_handoff_radius(std_params);
    QuadOptions outer = opt;
    outer.rel_tol = std::max(opt.rel_tol, 1e-8);
    outer.abs_tol = 1e-10;
    outer.initial_panels = 64;
    outer.max_panels = 4000;
    const auto paired = [&](double u) {
        return pdf(std_params, u, opt) - pdf(std_params, -u, opt);
    };
    const QuadResult r = integrate_adaptive(paired, 0.0, radius, outer);
    const double tail_diff = survival_asymptote(std_params, radius, true) -
                             survival_asymptote(std_params, radius, false);
    cache = {alpha, beta, r.value + tail_diff};
    return cache.value;
}

} // namespace detail

// Distribution function. Anchored at F(delta) = (1 - D)/2 where D is the
// paired outward integral of the density (exactly 1/2 in the symmetric case),
// then integrates the pdf from delta to x; beyond the asymptote handoff radius
// the power-tail survival term takes over.
inline double cdf(const StableParams& p, double x, const QuadOptions& opt = {}) {
    p.validate();
    if (std::isnan(x)) throw std::invalid_argument("cdf: x must not be NaN");
    if (x == std::numeric_limits<double>::infinity()) return 1.0;
    if (x == -std::numeric_limits<double>::infinity()) return 0.0;

    const double t = x - p.delta;
    const double radius = detail::tail_handoff_radius(p);
    if (t >= radius) return 1.0 - detail::survival_asymptote(p, t, true);
    if (t <= -radius) return detail::survival_asymptote(p, -t, false);

    const double anchor = 0.5 * (1.0 - detail::median_offset_mass(p.alpha, p.beta, opt));
    if (t == 0.0) return anchor;

    QuadOptions outer = opt;
    outer.rel_tol = std::max(opt.rel_tol, 1e-9);
    outer.abs_tol = 1e-11;
    outer.initial_panels = std::clamp<std::size_t>(static_cast<std::size_t>(std::abs(t) / p.gamma) + 8, 8, 512);
    outer.max_panels = 4000;
    const auto dens = [&](double u) { return pdf(p, u, opt); };
    double mass;
    if (t > 0.0)
        mass = integrate_adaptive(dens, p.delta, x, outer).value;
    else
        mass = -integrate_adaptive(dens, x, p.delta, outer).value;
    return std::clamp(anchor + mass, 0.0, 1.0);
}

} // namespace stablekit
