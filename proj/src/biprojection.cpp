#include "qfourier/biprojection.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>

#include "qfourier/characters.hpp"
#include "qfourier/rng.hpp"
#include "qfourier/spectral.hpp"

namespace qf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

long maxit_from_env(long fallback) {
    if (const char* s = std::getenv("QFOURIER_MAXIT")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring invalid QFOURIER_MAXIT=\"" << s << "\"\n";
    }
    return fallback;
}

// H(a) = -tr2(a log a) for positive a, via eigenvalues (0 log 0 = 0)
double von_neumann_entropy_of_squares(const TwoBox& x) {
    // entropy of |x|^2 from the singular values of x
    Eigen::VectorXd s = singular_values(x);
    double h = 0;
    for (int i = 0; i < s.size(); ++i) {
        double a = s[i] * s[i];
        if (a > 0) h -= a * std::log(a);
    }
    return h;
}

bool projection_leq(const TwoBox& small, const TwoBox& big, double tol) {
    // for projections p <= q iff p q = p
    return distance2(multiply(small, big), small) <= tol * std::max(1.0, norm2(small));
}

}  // namespace

bool is_biprojection(const TwoBox& x, double tol) {
    if (norm2(x) == 0.0) return false;
    if (!is_projection(x, tol)) return false;
    TwoBox y = sft(x);
    double c = pnorm(y, kInf);
    if (c <= 0) return false;
    TwoBox p = (1.0 / c) * y;
    return is_positive(p, tol) && is_projection(p, tol);
}

BiprojectionRecord subgroup_biprojection(GroupPtr g, const std::vector<int>& h, Shading s) {
    std::vector<int> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted[0] != 0)
        throw BiprojectionError("subgroup_biprojection: set does not contain the identity");
    uint64_t mask = 0;
    for (int e : sorted) {
        if (e < 0 || e >= g->order())
            throw BiprojectionError("subgroup_biprojection: element " + std::to_string(e) +
                                    " out of range");
        mask |= uint64_t{1} << e;
    }
    for (int a : sorted)
        for (int b : sorted)
            if (!(mask >> g->mul(a, b) & 1))
                throw BiprojectionError(
                    "subgroup_biprojection: not closed, " + g->element_name(a) + "*" +
                    g->element_name(b) + " = " + g->element_name(g->mul(a, b)) +
                    " is outside the set");
    for (int a : sorted)
        if (!(mask >> g->inv(a) & 1))
            throw BiprojectionError("subgroup_biprojection: inverse of " +
                                    g->element_name(a) + " is outside the set");

    BiprojectionRecord rec;
    if (s == Shading::Plus) {
        TwoBox x = zero_box(g, s);
        for (int e : sorted) x.coeff[e] = 1.0 / sorted.size();
        rec.element = x;
    } else {
        rec.element = indicator_box(g, sorted);
    }
    rec.subgroup = sorted;
    rec.trace = trace(rec.element).real();
    return rec;
}

std::vector<BiprojectionRecord> enumerate_biprojections(GroupPtr g, Shading s) {
    std::vector<BiprojectionRecord> out;
    for (const auto& h : subgroups(*g)) out.push_back(subgroup_biprojection(g, h, s));
    return out;
}

TwoBox cesaro_mean(const TwoBox& x, double tol, long maxit) {
    if (maxit < 0) maxit = maxit_from_env(100000);
    if (pnorm(x, 1.0) > x.delta() * (1 + 1e-12))
        std::cerr << "warning: cesaro_mean input has ||x||_1 = " << pnorm(x, 1.0)
                  << " > delta; convergence is not guaranteed\n";
    TwoBox power = x;          // x^(*k)
    TwoBox mean = x;           // running Cesaro mean
    for (long k = 2; k <= maxit; ++k) {
        TwoBox next = coproduct(power, x);
        // if the powers themselves converge, their limit is the Cesaro limit
        if (distance2(next, power) < tol) return next;
        double w = 1.0 / static_cast<double>(k);
        TwoBox new_mean = (1.0 - w) * mean + w * next;
        if (distance2(new_mean, mean) < tol) return new_mean;
        power = next;
        mean = new_mean;
    }
    throw BiprojectionError("cesaro_mean: no convergence within " + std::to_string(maxit) +
                            " iterations (tol " + std::to_string(tol) + ")");
}

BiprojectionRecord generated_biprojection(const TwoBox& x) {
    if (norm2(x) == 0.0) throw BiprojectionError("generated_biprojection: zero input");
    TwoBox z = range_projection(coproduct(x, contragredient(x)));
    double tr = trace(z).real();
    for (int it = 0; it < 200; ++it) {
        TwoBox grown = range_projection(z + coproduct(z, z));
        double tr2 = trace(grown).real();
        z = grown;
        if (std::abs(tr2 - tr) <= 1e-9 * std::max(1.0, tr2)) break;
        tr = tr2;
    }
    // match against the subgroup lattice: smallest B with z <= B
    const BiprojectionRecord* best = nullptr;
    auto all = enumerate_biprojections(x.group, x.shading);
    for (const auto& rec : all)
        if (projection_leq(z, rec.element, 1e-7))
            if (!best || rec.trace < best->trace) best = &rec;
    if (!best)
        throw BiprojectionError("generated_biprojection: grown support matches no "
                                "enumerated biprojection");
    if (distance2(z, best->element) > 1e-7 * std::max(1.0, norm2(z)))
        throw BiprojectionError("generated_biprojection: support growth stalled strictly "
                                "below the smallest containing biprojection");
    return *best;
}

BiprojectionRecord b2_projection(const TwoBox& x) {
    if (norm2(x) == 0.0) throw BiprojectionError("b2_projection: zero input");
    TwoBox y = coproduct(contragredient(x), x);
    double target = norm2(x) * norm2(x) / x.delta();
    TwoBox p = spectral_projection_at(y, target, 1e-8);
    if (norm2(p) == 0.0)
        throw BiprojectionError("b2_projection: no spectrum near ||x||_2^2/delta = " +
                                std::to_string(target));
    if (!is_biprojection(p, 1e-7))
        throw BiprojectionError("b2_projection: spectral projection failed biprojection "
                                "certification");
    BiprojectionRecord rec;
    rec.element = p;
    rec.trace = trace(p).real();
    // attach the subgroup witness when the lattice contains the projection
    for (const auto& cand : enumerate_biprojections(x.group, x.shading))
        if (distance2(cand.element, p) <= 1e-7 * std::max(1.0, norm2(p))) {
            rec.subgroup = cand.subgroup;
            break;
        }
    return rec;
}

ShiftFlags shift_tests(const TwoBox& p, const TwoBox& biproj, double tol) {
    if (!is_projection(p, 1e-8))
        throw BiprojectionError("shift_tests: first argument is not a projection");
    if (!is_biprojection(biproj, 1e-8))
        throw BiprojectionError("shift_tests: second argument is not a biprojection");
    double trB = trace(biproj).real();
    double scale = std::max(1.0, norm2(p));
    ShiftFlags f;
    bool traces_match = std::abs(trace(p).real() - trB) <= tol * std::max(1.0, trB);
    double c = trB / p.delta();
    f.is_left_shift =
        traces_match && distance2(coproduct(p, biproj), c * p) <= tol * scale;
    f.is_right_shift =
        traces_match && distance2(coproduct(biproj, p), c * p) <= tol * scale;
    TwoBox right_range = range_projection(coproduct(p, contragredient(p)));
    TwoBox left_range = range_projection(coproduct(contragredient(p), p));
    f.is_right_subshift = projection_leq(right_range, biproj, tol);
    f.is_left_subshift = projection_leq(left_range, biproj, tol);
    return f;
}

BishiftCertificate is_bishift(const TwoBox& x, double tol) {
    if (norm2(x) == 0.0) throw BiprojectionError("is_bishift: zero input");
    const double delta = x.delta();
    TwoBox fx = sft(x);

    NormTriple nx = norm_triple(x);
    NormTriple nfx = norm_triple(fx);

    auto close = [&](double a, double b) {
        return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
    };
    auto isometry_multiple = [&](const TwoBox& y, double yinf) {
        TwoBox yyy = multiply(multiply(y, adjoint(y)), y);
        return distance2(yyy, (yinf * yinf) * y) <=
               tol * std::max(1.0, yinf * yinf * norm2(y));
    };

    BishiftCertificate cert;

    // (2): extremal bi-partial isometry (both saturations, both shadings)
    cert.extremal_bi_isometry = isometry_multiple(x, nx.ninf) &&
                                isometry_multiple(fx, nfx.ninf) &&
                                close(nfx.ninf, nx.n1 / delta) &&
                                close(nx.ninf, nfx.n1 / delta);

    // (3): S(x) S(F(x)) = delta^2
    double sprod = support_size(x) * support_size(fx);
    cert.size_product = close(sprod, delta * delta);

    // (4): H(|x|^2) + H(|F(x)|^2) = ||x||_2^2 (2 log delta - 4 log ||x||_2)
    double lhs4 = von_neumann_entropy_of_squares(x) + von_neumann_entropy_of_squares(fx);
    double rhs4 = nx.n2 * nx.n2 * (2 * std::log(delta) - 4 * std::log(nx.n2));
    cert.entropy_identity = std::abs(lhs4 - rhs4) <= tol * std::max({1.0, std::abs(rhs4)});

    // (6): ||x * contragredient(x*)||_r = (1/delta) ||x||_1 ||x||_r, some grid r
    TwoBox conv6 = coproduct(x, contragredient(adjoint(x)));
    cert.young_saturated = false;
    for (double r : {1.25, 1.5, 1.75})
        if (close(pnorm(conv6, r), nx.n1 * pnorm(x, r) / delta)) cert.young_saturated = true;

    // (8): ||F(x)||_{t/(t-1)} = (1/delta)^{2/t-1} ||x||_t, some grid t in (1,2)
    cert.hy_saturated = false;
    for (double t : {1.25, 1.5, 1.75}) {
        double tc = t / (t - 1.0);
        double rhs = std::pow(1.0 / delta, 2.0 / t - 1.0) * pnorm(x, t);
        if (close(pnorm(fx, tc), rhs)) cert.hy_saturated = true;
    }

    // (10): multiple of a partial isometry with S(x * contragredient(x*)) = S(x)
    // and ||x * contragredient(x*)||_1 = (1/delta) ||x||_1^2
    cert.partial_isometry_sizes = isometry_multiple(x, nx.ninf) &&
                                  close(support_size(conv6), support_size(x)) &&
                                  close(pnorm(conv6, 1.0), nx.n1 * nx.n1 / delta);

    const bool v = cert.extremal_bi_isometry;
    cert.consistent = cert.size_product == v && cert.entropy_identity == v &&
                      cert.young_saturated == v && cert.hy_saturated == v &&
                      cert.partial_isometry_sizes == v;
    cert.all_true = cert.consistent && v;
    return cert;
}

TwoBox make_bishift_abelian(GroupPtr g, const std::vector<int>& h, int char_index,
                            int coset_rep) {
    if (!g->is_abelian())
        throw BiprojectionError("make_bishift_abelian: " + g->name() + " is not abelian");
    BiprojectionRecord sub = subgroup_biprojection(g, h, Shading::Minus);  // validates H
    const std::vector<int>& hs = *sub.subgroup;
    if (coset_rep < 0 || coset_rep >= g->order())
        throw BiprojectionError("make_bishift_abelian: coset representative out of range");

    // subgroup as a group of its own, indexed by position in hs
    int m = static_cast<int>(hs.size());
    std::vector<int> pos(g->order(), -1);
    for (int i = 0; i < m; ++i) pos[hs[i]] = i;
    std::vector<int> table(static_cast<size_t>(m) * m);
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
        names.push_back(g->element_name(hs[i]));
        for (int j = 0; j < m; ++j)
            table[static_cast<size_t>(i) * m + j] = pos[g->mul(hs[i], hs[j])];
    }
    auto hgrp = std::make_shared<FiniteGroup>(g->name() + "-sub", m, std::move(table),
                                              std::move(names));
    CharacterTable ct = character_table(hgrp);
    if (char_index < 0 || char_index >= ct.irrep_count())
        throw BiprojectionError("make_bishift_abelian: character index " +
                                std::to_string(char_index) + " out of range (subgroup has " +
                                std::to_string(ct.irrep_count()) + " characters)");

    // x(s h) = chi(h) on the coset s H, zero elsewhere
    TwoBox x = zero_box(g, Shading::Minus);
    for (int i = 0; i < m; ++i)
        x.coeff[g->mul(coset_rep, hs[i])] = ct.value(char_index, i);
    return x;
}

BiprojectionRecord right_absorbing_biprojection(const TwoBox& p) {
    if (!is_projection(p, 1e-8))
        throw BiprojectionError("right_absorbing_biprojection: input is not a projection");
    const BiprojectionRecord* best = nullptr;
    auto all = enumerate_biprojections(p.group, p.shading);
    for (const auto& rec : all) {
        TwoBox r = range_projection(coproduct(p, rec.element));
        if (distance2(r, p) <= 1e-8 * std::max(1.0, norm2(p)))
            if (!best || rec.trace > best->trace) best = &rec;
    }
    if (!best)
        throw BiprojectionError("right_absorbing_biprojection: not even the trivial "
                                "biprojection is absorbed (numerical failure)");
    return *best;
}

bool absorption_check(const TwoBox& a, const TwoBox& b, uint64_t seed, int samples,
                      double tol) {
    double c = trace(b).real() / a.delta();
    if (distance2(coproduct(a, b), c * a) > tol * std::max(1.0, norm2(a) * std::abs(c)))
        throw BiprojectionError("absorption_check: precondition a*b = (tr2(b)/delta) a "
                                "does not hold");
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        TwoBox x = rng.random_box(a.group, a.shading);
        TwoBox xb = multiply(x, b), bx = multiply(b, x);
        cplx cc = trace(xb) / a.delta();
        double scale = std::max(1.0, norm2(a) * std::abs(cc));
        if (distance2(coproduct(a, xb), cc * a) > tol * scale) return false;
        if (distance2(coproduct(a, bx), cc * a) > tol * scale) return false;
    }
    return true;
}

}  // namespace qf
