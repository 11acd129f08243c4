#include "qfourier/inequalities.hpp"

#include <cmath>
#include <limits>

#include "qfourier/biprojection.hpp"
#include "qfourier/spectral.hpp"

namespace qf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double inv_or_zero(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }
}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Saturated: return "saturated";
        case Verdict::Violated: return "violated";
    }
    return "?";
}

Verdict classify(double lhs, double rhs, double sat_tol, double viol_tol) {
    if (std::abs(lhs - rhs) <= sat_tol * std::max(rhs, 0.0)) return Verdict::Saturated;
    if (lhs > rhs * (1 + viol_tol)) return Verdict::Violated;
    return Verdict::Holds;
}

namespace {
InequalityReport make_report(std::string check, double lhs, double rhs, double r, double t,
                             double s) {
    InequalityReport rep;
    rep.check = std::move(check);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.ratio = rhs > 0 ? lhs / rhs : (lhs == 0 ? 1.0 : kInf);
    rep.r = r;
    rep.t = t;
    rep.s = s;
    rep.verdict = classify(lhs, rhs);
    return rep;
}
}  // namespace

InequalityReport young_check(const TwoBox& x, const TwoBox& y, double r, double t,
                             double s) {
    if (std::abs(inv_or_zero(r) + 1.0 - inv_or_zero(t) - inv_or_zero(s)) > 1e-12)
        throw std::invalid_argument("young_check: exponents violate 1/r + 1 = 1/t + 1/s");
    double lhs = pnorm(coproduct(x, y), r);
    double rhs = pnorm(x, t) * pnorm(y, s) / x.delta();
    return make_report("young", lhs, rhs, r, t, s);
}

InequalityReport hausdorff_young_check(const TwoBox& x, double t) {
    if (!(t >= 2.0)) throw std::invalid_argument("hausdorff_young_check: need t >= 2");
    double s = std::isinf(t) ? 1.0 : t / (t - 1.0);
    double lhs = pnorm(sft(x), t);
    double rhs = std::pow(1.0 / x.delta(), 1.0 - 2.0 * inv_or_zero(t)) * pnorm(x, s);
    return make_report("hausdorff-young", lhs, rhs, 0, t, s);
}

InequalityReport holder_check(const TwoBox& x, const TwoBox& y, double p, double q) {
    if (std::abs(inv_or_zero(p) + inv_or_zero(q) - 1.0) > 1e-12)
        throw std::invalid_argument("holder_check: exponents are not conjugate");
    double lhs = std::abs(trace(multiply(x, y)));
    double rhs = pnorm(x, p) * pnorm(y, q);
    return make_report("holder", lhs, rhs, 0, p, q);
}

std::vector<std::array<double, 3>> young_exponent_grid(bool interior_only) {
    std::vector<double> ts;
    if (interior_only)
        ts = {1.25, 1.5, 1.75};
    else
        ts = {1.0, 1.25, 1.5, 1.75, 2.0, kInf};
    std::vector<std::array<double, 3>> out;
    for (double t : ts)
        for (double s : ts) {
            double ir = inv_or_zero(t) + inv_or_zero(s) - 1.0;
            if (ir < -1e-12 || ir > 1.0 + 1e-12) continue;
            double r = ir <= 1e-12 ? kInf : 1.0 / ir;
            if (interior_only && (std::isinf(r) || r <= 1.0 + 1e-12)) continue;
            out.push_back({r, t, s});
        }
    return out;
}

SumsetReport sumset_bounds(const TwoBox& p, const TwoBox& q, double tol) {
    if (!is_projection(p, 1e-8) || !is_projection(q, 1e-8))
        throw std::invalid_argument("sumset_bounds: both inputs must be projections");
    double tp = trace(p).real(), tq = trace(q).real();
    SumsetReport rep;
    TwoBox conv = coproduct(p, q);
    rep.value = support_size(conv);
    rep.lower = std::max(tp, tq);
    rep.upper = tp * tq;
    rep.lower_attained = std::abs(rep.value - rep.lower) <= tol * std::max(1.0, rep.lower);
    rep.upper_attained = std::abs(rep.value - rep.upper) <= tol * std::max(1.0, rep.upper);
    if (std::abs(rep.value - tq) <= tol * std::max(1.0, tq))
        rep.scaled_projection_right = is_projection((p.delta() / tp) * conv, 1e-7);
    if (std::abs(rep.value - tp) <= tol * std::max(1.0, tp))
        rep.scaled_projection_left = is_projection((p.delta() / tq) * conv, 1e-7);
    return rep;
}

InverseSumsetReport inverse_sumset_certify(const TwoBox& p, const TwoBox& q, double tol) {
    if (!is_projection(p, 1e-8) || !is_projection(q, 1e-8))
        throw std::invalid_argument("inverse_sumset_certify: inputs must be projections");
    double tp = trace(p).real();
    double delta = p.delta();
    InverseSumsetReport rep;

    auto size_is_tp = [&](const TwoBox& z) {
        return std::abs(support_size(z) - tp) <= tol * std::max(1.0, tp);
    };

    rep.c1 = size_is_tp(coproduct(p, q));

    // grid of words p * (q*qbar)^(*m) * q^(*j), m in {0,1,2}, j in {0,1}, m+j > 0
    TwoBox qq = coproduct(q, contragredient(q));
    bool any = false, all = true;
    for (int m = 0; m <= 2; ++m)
        for (int j = 0; j <= 1; ++j) {
            if (m + j == 0) continue;
            TwoBox w = p;
            for (int i = 0; i < m; ++i) w = coproduct(w, qq);
            if (j) w = coproduct(w, q);
            bool ok = size_is_tp(w);
            any = any || ok;
            all = all && ok;
        }
    rep.c2 = any;
    rep.c3 = all;

    // (4): some enumerated biprojection B with q a right subshift and
    // p * (delta/tr2 B) B = p
    rep.c4 = false;
    for (const auto& rec : enumerate_biprojections(p.group, p.shading)) {
        TwoBox pb = (delta / rec.trace) * coproduct(p, rec.element);
        if (distance2(pb, p) > 1e-8 * std::max(1.0, norm2(p))) continue;
        ShiftFlags f = shift_tests(q, rec.element);
        if (f.is_right_subshift) {
            rep.c4 = true;
            break;
        }
    }

    // (5): B1(q) <= B2(p)
    try {
        BiprojectionRecord b1 = generated_biprojection(q);
        BiprojectionRecord b2 = b2_projection(p);
        rep.c5 = distance2(multiply(b1.element, b2.element), b1.element) <=
                 1e-8 * std::max(1.0, norm2(b1.element));
    } catch (const BiprojectionError&) {
        rep.c5 = false;
    }

    rep.consistent = rep.c2 == rep.c1 && rep.c3 == rep.c1 && rep.c4 == rep.c1 &&
                     rep.c5 == rep.c1;
    rep.all_true = rep.consistent && rep.c1;
    return rep;
}

UpperSumsetReport upper_sumset_certify(const TwoBox& p, const TwoBox& q, double tol) {
    if (!is_projection(p, 1e-8) || !is_projection(q, 1e-8))
        throw std::invalid_argument("upper_sumset_certify: inputs must be projections");
    double tp = trace(p).real(), tq = trace(q).real();
    double delta = p.delta();
    UpperSumsetReport rep;

    TwoBox lhs1 = multiply(coproduct(contragredient(p), p), coproduct(q, contragredient(q)));
    TwoBox rhs1 = (tp * tq / (delta * delta)) * jones_projection(p.group, p.shading);
    rep.c1 = distance2(lhs1, rhs1) <= 1e-7 * std::max(1.0, norm2(rhs1));

    rep.c2 = is_projection(delta * coproduct(p, q), 1e-7);

    rep.c3 = std::abs(support_size(coproduct(p, q)) - tp * tq) <=
             tol * std::max(1.0, tp * tq);

    rep.implications_ok = (rep.c1 == rep.c2) && (!rep.c1 || rep.c3);
    return rep;
}

YoungExtremalReport young_extremal_certify(const TwoBox& x, const TwoBox& y, double tol) {
    YoungExtremalReport rep;
    rep.saturated = true;
    for (const auto& [r, t, s] : young_exponent_grid(true)) {
        InequalityReport ir = young_check(x, y, r, t, s);
        if (ir.verdict != Verdict::Saturated) rep.saturated = false;
    }
    BishiftCertificate cx = is_bishift(x, tol);
    BishiftCertificate cy = is_bishift(y, tol);
    bool ranges_match = false;
    if (cx.all_true && cy.all_true) {
        TwoBox rx = range_projection(adjoint(sft_inverse(x)));
        TwoBox ry = range_projection(sft_inverse(y));
        ranges_match = distance2(rx, ry) <= 1e-7 * std::max(1.0, norm2(rx));
    }
    rep.bishift_pair = cx.all_true && cy.all_true && ranges_match;
    rep.consistent = rep.saturated == rep.bishift_pair;
    return rep;
}

HYExtremalReport hy_extremal_certify(const TwoBox& x, double tol) {
    HYExtremalReport rep;
    rep.saturated = true;
    for (double t : {1.25, 1.5, 1.75}) {
        double lhs = pnorm(sft(x), t / (t - 1.0));
        double rhs = std::pow(1.0 / x.delta(), 2.0 / t - 1.0) * pnorm(x, t);
        if (classify(lhs, rhs) != Verdict::Saturated) rep.saturated = false;
    }
    rep.bishift = is_bishift(x, tol).all_true;
    rep.consistent = rep.saturated == rep.bishift;
    return rep;
}

std::vector<RepSumsetRow> rep_sumset_report(GroupPtr g, double tol) {
    CharacterTable ct = character_table(g);
    int k = ct.irrep_count();
    // all nonempty irrep subsets; fine for the builtin table sizes
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::vector<RepSumsetRow> rows;
    for (const auto& v : subsets)
        for (const auto& w : subsets) {
            RepSumsetRow row;
            row.v = v;
            row.w = w;
            TwoBox zv = central_projection(ct, v);
            TwoBox zw = central_projection(ct, w);
            row.dim_v = trace(zv).real();
            row.dim_w = trace(zw).real();
            row.value = support_size(coproduct(zv, zw));
            std::vector<int> m = tensor_multiplicities(ct, v, w);
            row.oracle = 0;
            for (int i = 0; i < k; ++i)
                if (m[i] > 0) row.oracle += ct.dims[i] * ct.dims[i];
            double lower = std::max(row.dim_v, row.dim_w);
            double upper = row.dim_v * row.dim_w;
            row.bounds_ok = row.value >= lower - tol && row.value <= upper + tol;
            row.oracle_ok = std::abs(row.value - row.oracle) <= tol;
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace qf
