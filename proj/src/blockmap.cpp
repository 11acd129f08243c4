#include "qfourier/blockmap.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>

#include "qfourier/spectral.hpp"

namespace qf {

namespace {

long maxit_env(long fallback) {
    if (const char* s = std::getenv("QFOURIER_MAXIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring invalid QFOURIER_MAXIT=\"" << s << "\"\n";
    }
    return fallback;
}

void require_nonzero(const TwoBox& x, const char* who) {
    if (norm2(x) == 0.0) throw BlockmapError(std::string(who) + ": zero input");
}

double entropy_of_squares(const TwoBox& x) {
    Eigen::VectorXd s = singular_values(x);
    double h = 0;
    for (int i = 0; i < s.size(); ++i) {
        double a = s[i] * s[i];
        if (a > 0) h -= a * std::log(a);
    }
    return h;
}

}  // namespace

TwoBox b_cm(const TwoBox& x) {
    require_nonzero(x, "b_cm");
    NormTriple nt = norm_triple(x);
    double c = (x.delta() * x.delta()) / (nt.n1 * nt.n2 * nt.n2);
    TwoBox xs = adjoint(x);
    TwoBox left = coproduct(contragredient(xs), x);
    TwoBox right = coproduct(contragredient(x), xs);
    return c * multiply(left, right);
}

TwoBox b_mc(const TwoBox& x) {
    require_nonzero(x, "b_mc");
    NormTriple nt = norm_triple(x);
    double c = x.delta() / (nt.ninf * nt.n2 * nt.n2);
    TwoBox xs = adjoint(x);
    TwoBox left = multiply(contragredient(x), contragredient(xs));
    TwoBox right = multiply(xs, x);
    return c * coproduct(left, right);
}

TwoBox b_lambda(const TwoBox& x, double lambda) {
    if (lambda < 0 || lambda > 1)
        throw BlockmapError("b_lambda: lambda must lie in [0, 1]");
    if (lambda == 0.0) return b_mc(x);
    if (lambda == 1.0) return b_cm(x);
    return lambda * b_cm(x) + (1.0 - lambda) * b_mc(x);
}

double entropy(const TwoBox& x) {
    return entropy_of_squares(x) + entropy_of_squares(sft(x));
}

double commute_defect(const TwoBox& x, double lambda, double tol) {
    Predicates p = predicates(x, tol);
    if (!p.is_bipositive)
        throw BlockmapError("commute_defect: input is not bi-positive");
    return distance2(sft(b_lambda(x, lambda)), b_lambda(sft(x), 1.0 - lambda));
}

std::string to_string(FlowClass c) {
    switch (c) {
        case FlowClass::BiprojectionMultiple: return "BiprojectionMultiple";
        case FlowClass::Zero: return "Zero";
        case FlowClass::Unresolved: return "Unresolved";
    }
    return "?";
}

FlowResult iterate_blockmap(const TwoBox& x0, const IterateOptions& opt) {
    require_nonzero(x0, "iterate_blockmap");
    long maxit = opt.maxit >= 0 ? opt.maxit : maxit_env(100000);
    FlowResult res;
    TwoBox x = x0;
    res.trajectory_norms.push_back(norm2(x));
    if (opt.track_entropy) res.entropy_trace.push_back(entropy(x));
    if (opt.record_states) res.states.push_back(x);

    bool settled = false;
    for (long k = 0; k < maxit; ++k) {
        if (norm2(x) < opt.zero_tol) break;  // decayed to zero
        TwoBox next = b_lambda(x, opt.lambda);
        double step = distance2(next, x);
        x = next;
        res.trajectory_norms.push_back(norm2(x));
        if (opt.track_entropy) res.entropy_trace.push_back(entropy(x));
        if (opt.record_states) res.states.push_back(x);
        if (step < opt.step_tol) {  // only genuine changes count as iterations
            settled = true;
            break;
        }
        ++res.iterations;
    }
    res.limit = x;

    double lim_norm = norm2(x);
    if (lim_norm < opt.zero_tol) {
        res.classification = FlowClass::Zero;
        return res;
    }
    if (!settled) {
        res.classification = FlowClass::Unresolved;
        return res;
    }

    // fit limit = c * B over the enumerated lattice, keep the best residual
    double best_res = std::numeric_limits<double>::infinity();
    for (auto& rec : enumerate_biprojections(x.group, x.shading)) {
        double c = inner(rec.element, x).real() / rec.trace;  // tr2(B x)/tr2(B B)
        double r = distance2(x, c * rec.element);
        if (r < best_res) {
            best_res = r;
            res.witness = std::move(rec);
            res.scalar = c;
        }
    }
    res.residual = best_res;
    res.classification = best_res <= opt.classify_tol * std::max(1.0, lim_norm)
                             ? FlowClass::BiprojectionMultiple
                             : FlowClass::Unresolved;
    return res;
}

}  // namespace qf
