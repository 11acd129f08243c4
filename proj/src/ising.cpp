#include "qfourier/ising.hpp"

#include <cstdlib>
#include <iostream>
#include <limits>

namespace qf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kDelta = std::sqrt(2.0);

long maxit_env(long fallback) {
    if (const char* s = std::getenv("QFOURIER_MAXIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring invalid QFOURIER_MAXIT=\"" << s << "\"\n";
    }
    return fallback;
}

double slice_norm2(const IsingElement& e) {
    // ||a 1 + b sqrt(2) e1||_2 on Z2: coefficients (a + b/delta, b/delta)
    double u = e.a + e.b / kDelta, v = e.b / kDelta;
    return std::sqrt(2.0 * (u * u + v * v));
}

double raw_t_step(double t, double delta) {
    double d2 = delta * delta, d3 = d2 * delta;
    double num = 2 * d2 * (t * t + 1) + (d3 + 3 * delta) * t;
    double den = 2 * d2 + (d3 + 9 * delta) * t + (6 * d2 + 8) * t * t +
                 6 * delta * t * t * t;
    return t + t * (t * t - 1) * num / den;
}

}  // namespace

double IsingElement::t() const { return a == 0 ? kInf : b / a; }

IsingElement ising_element(double beta) {
    if (!(beta > 0)) throw IsingError("ising_element: beta must be positive");
    return {std::exp(beta) - std::exp(-beta), kDelta * std::exp(-beta)};
}

GroupPtr ising_group() { return group_from_spec("Z2"); }

TwoBox ising_twobox(const IsingElement& e, GroupPtr z2) {
    if (z2->order() != 2) throw IsingError("ising_twobox: group must be Z2");
    TwoBox x = zero_box(z2, Shading::Plus);
    x.coeff[0] = e.a + e.b / kDelta;
    x.coeff[1] = e.b / kDelta;
    return x;
}

IsingElement b_half_closed(const IsingElement& e) {
    double a = e.a, b = e.b, d = kDelta;
    if (a == 0 && b == 0) throw IsingError("b_half_closed: zero element");
    double den = 2 * (a * d + b) * (b * d + a) * (a * a * d + b * b * d + 2 * a * b);
    double na = (a * a * d + 2 * a * b) * (a * a * d + 2 * a * b) * (b * d + a) +
                (a * a * a * a * d + 2 * a * a * b * b * d + 4 * a * a * a * b) * (a * d + b);
    double nb = (b * b * b * b * d + 2 * a * a * b * b * d + 4 * a * b * b * b) * (b * d + a) +
                (b * b * d + 2 * a * b) * (b * b * d + 2 * a * b) * (a * d + b);
    return {na / den, nb / den};
}

double t_step(double t, double delta) {
    if (!(t >= 0)) throw IsingError("t_step: t must be non-negative");
    if (std::isinf(t)) return kInf;
    if (t == 0) return 0;
    // reciprocal chart for large t (the map commutes with t -> 1/t exactly)
    if (t > 1e3) return 1.0 / raw_t_step(1.0 / t, delta);
    return raw_t_step(t, delta);
}

std::string to_string(IsingPhase p) {
    switch (p) {
        case IsingPhase::Ordered_ID: return "Ordered_ID";
        case IsingPhase::Disordered_JP: return "Disordered_JP";
        case IsingPhase::Critical_Zero: return "Critical_Zero";
    }
    return "?";
}

IsingPoint classify_element(const IsingElement& start, double beta_label, long maxit) {
    if (maxit < 0) maxit = maxit_env(100000);
    IsingPoint pt;
    pt.beta = beta_label;
    pt.t0 = start.t();

    // work in the chart where the tracked ratio is <= 1: the closed form is
    // symmetric under (a,b) swap, which is the Fourier duals' t -> 1/t
    bool swapped = pt.t0 > 1.0;
    IsingElement e = swapped ? IsingElement{start.b, start.a} : start;

    const double zero_tol = 1e-10, rel_tol = 1e-13;
    bool zero = false, settled = false;
    for (long k = 0; k < maxit; ++k) {
        if (slice_norm2(e) < zero_tol) {
            zero = true;
            break;
        }
        IsingElement next = b_half_closed(e);
        double rel = std::abs(slice_norm2(next) - slice_norm2(e)) /
                     std::max(slice_norm2(e), 1e-300);
        ++pt.iterations;
        e = next;
        if (rel < rel_tol) {
            settled = true;
            break;
        }
    }
    if (slice_norm2(e) < zero_tol) zero = true;

    IsingElement lim = swapped ? IsingElement{e.b, e.a} : e;
    GroupPtr z2 = ising_group();
    if (zero) {
        pt.phase = IsingPhase::Critical_Zero;
        pt.limit_scalar = 0;
        pt.entropy_final = 0;
        return pt;
    }
    if (!settled)
        throw IsingError("classify_element: no stabilization within " +
                         std::to_string(maxit) + " iterations");
    // in the working chart the ratio flowed to 0: the first slot survives
    pt.phase = swapped ? IsingPhase::Disordered_JP : IsingPhase::Ordered_ID;
    pt.limit_scalar = swapped ? lim.b : lim.a;
    pt.entropy_final = entropy(ising_twobox(lim, z2));
    return pt;
}

IsingPoint classify_beta(double beta, long maxit) {
    IsingPoint pt = classify_element(ising_element(beta), beta, maxit);
    return pt;
}

std::vector<IsingPoint> phase_scan(double beta_min, double beta_max, int steps) {
    if (steps < 1) throw IsingError("phase_scan: need at least one step");
    if (!(beta_min > 0) || beta_max < beta_min)
        throw IsingError("phase_scan: need 0 < beta_min <= beta_max");
    std::vector<IsingPoint> out;
    for (int i = 0; i < steps; ++i) {
        double beta = steps == 1 ? beta_min
                                 : beta_min + (beta_max - beta_min) * i / (steps - 1);
        out.push_back(classify_beta(beta));
    }
    return out;
}

CriticalBeta critical_beta(int tstep_iters, double beta_tol) {
    CriticalBeta cb;
    cb.analytic = std::log(1.0 + std::sqrt(2.0)) / 2.0;

    auto escaped_up = [&](double beta) {
        // t0 > 1 for beta < beta_c; after enough steps t flees to its fixed end
        double t = kDelta / (std::exp(2 * beta) - 1.0);
        for (int i = 0; i < tstep_iters; ++i) {
            t = t_step(t);
            if (std::isinf(t) || t > 1e12) return true;
            if (t < 1e-12) return false;
        }
        return t > 1.0;
    };

    double lo = 0.05, hi = 2.0;  // t0(lo) >> 1, t0(hi) << 1
    if (!escaped_up(lo) || escaped_up(hi))
        throw IsingError("critical_beta: bracket does not straddle the transition");
    while (hi - lo > beta_tol) {
        double mid = 0.5 * (lo + hi);
        (escaped_up(mid) ? lo : hi) = mid;
    }
    cb.bisection = 0.5 * (lo + hi);
    return cb;
}

}  // namespace qf
