#pragma once

#include <array>

#include "qfourier/characters.hpp"
#include "qfourier/twobox.hpp"

namespace qf {

enum class Verdict { Holds, Saturated, Violated };
std::string to_string(Verdict v);

// One evaluated inequality instance. lhs <= rhs is the claim; ratio = lhs/rhs
// (1.0 when both sides vanish). Saturation wins over violation inside the
// overlap band: |lhs-rhs| <= sat_tol*rhs -> Saturated, else
// lhs > rhs*(1+viol_tol) -> Violated, else Holds.
struct InequalityReport {
    std::string check;
    double lhs = 0, rhs = 0, ratio = 0;
    double r = 0, t = 0, s = 0;  // exponents in play (0 = unused)
    Verdict verdict = Verdict::Holds;
};

constexpr double kSaturationTol = 1e-8;
constexpr double kViolationTol = 1e-9;

Verdict classify(double lhs, double rhs, double sat_tol = kSaturationTol,
                 double viol_tol = kViolationTol);

// Young: ||x * y||_r <= (1/delta) ||x||_t ||y||_s with 1/r + 1 = 1/t + 1/s.
// Exponent consistency is validated to 1e-12 (1/inf = 0).
InequalityReport young_check(const TwoBox& x, const TwoBox& y, double r, double t, double s);

// Hausdorff-Young: ||F(x)||_t <= (1/delta)^(1-2/t) ||x||_s, t >= 2 conjugate to s.
InequalityReport hausdorff_young_check(const TwoBox& x, double t);

// Hoelder: |tr2(x y)| <= ||x||_p ||y||_q with 1/p + 1/q = 1.
InequalityReport holder_check(const TwoBox& x, const TwoBox& y, double p, double q);

// Exponent triples (r, t, s) for Young sweeps: grid values plus endpoints,
// filtered to admissible combinations.
std::vector<std::array<double, 3>> young_exponent_grid(bool interior_only = false);

// Sum-set bounds for projections p, q:
// max(tr2 p, tr2 q) <= S(p*q) <= tr2(p) tr2(q).
struct SumsetReport {
    double value = 0;  // S(p * q)
    double lower = 0, upper = 0;
    bool lower_attained = false;  // value == lower
    bool upper_attained = false;  // value == upper
    // when value == tr2(q): is (delta/tr2 p) p*q a projection (must be, by
    // the equality characterization)? mirrored flag for tr2(p).
    bool scaled_projection_right = false;
    bool scaled_projection_left = false;
};
SumsetReport sumset_bounds(const TwoBox& p, const TwoBox& q, double tol = 1e-6);

// The five equivalent characterizations of equality in the lower sum-set
// bound S(p*q) = tr2(p); all verdicts must agree.
struct InverseSumsetReport {
    bool c1 = false;  // S(p*q) = tr2(p)
    bool c2 = false;  // S(p*(q*qbar)^m*q^j) = tr2(p) for SOME grid (m,j)
    bool c3 = false;  // ... for ALL grid (m,j)
    bool c4 = false;  // exists biprojection B: q right subshift of B, p*B ~ p
    bool c5 = false;  // B1(q) <= B2(p)
    bool consistent = false;
    bool all_true = false;
};
InverseSumsetReport inverse_sumset_certify(const TwoBox& p, const TwoBox& q,
                                           double tol = 1e-6);

// Characterization of equality in the upper bound S(p*q) = tr2(p) tr2(q):
// (1) (pbar*p)(q*qbar) = (tr2(p) tr2(q)/delta^2) e1  <=>  (2) delta p*q is a
// projection  =>  (3) the size equality.
struct UpperSumsetReport {
    bool c1 = false, c2 = false, c3 = false;
    bool implications_ok = false;  // c1 == c2 and (c1 -> c3)
};
UpperSumsetReport upper_sumset_certify(const TwoBox& p, const TwoBox& q, double tol = 1e-6);

// Extremizer certification for Young's inequality: saturation on the interior
// exponent grid vs "both are bi-shifts with matching dual ranges".
struct YoungExtremalReport {
    bool saturated = false;
    bool bishift_pair = false;
    bool consistent = false;
};
YoungExtremalReport young_extremal_certify(const TwoBox& x, const TwoBox& y,
                                           double tol = 1e-8);

// Extremizer certification for Hausdorff-Young: saturation on the grid vs
// bi-shift certificate.
struct HYExtremalReport {
    bool saturated = false;
    bool bishift = false;
    bool consistent = false;
};
HYExtremalReport hy_extremal_certify(const TwoBox& x, double tol = 1e-8);

// Representation-theoretic sum-set check: for central projections p = z_V,
// q = z_W, the size S(z_V * z_W) must equal the sum of d_k^2 over the
// distinct irreducibles in V (x) W (character-table oracle).
struct RepSumsetRow {
    std::vector<int> v, w;    // irrep index sets
    double dim_v = 0, dim_w = 0;  // |V|, |W| = traces
    double value = 0;             // S(z_V * z_W)
    double oracle = 0;            // character-table prediction for |V (x) W|
    bool bounds_ok = false;    // |V| <= value <= |V||W| (max with |W| below)
    bool oracle_ok = false;    // |value - oracle| < tol
};
std::vector<RepSumsetRow> rep_sumset_report(GroupPtr g, double tol = 1e-6);

}  // namespace qf
