#pragma once

#include <optional>

#include "qfourier/twobox.hpp"

namespace qf {

struct BiprojectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certified biprojection together with its subgroup witness (present for
// all enumerated/constructed ones on group models).
struct BiprojectionRecord {
    TwoBox element;
    std::optional<std::vector<int>> subgroup;
    double trace = 0.0;
};

// x is a projection and F(x) is a positive multiple of a projection.
bool is_biprojection(const TwoBox& x, double tol = 1e-8);

// Biprojection of a subgroup H: (1/|H|) sum_{h in H} L_h on Plus, the
// indicator 1_H on Minus. H must be a subgroup (error names the offender).
BiprojectionRecord subgroup_biprojection(GroupPtr g, const std::vector<int>& h, Shading s);

// One record per subgroup, ordered by (trace on Minus reading: |H|, elements).
std::vector<BiprojectionRecord> enumerate_biprojections(GroupPtr g, Shading s);

// Cesaro mean of the convolution powers x, x*x, x*x*x, ... Converges for
// ||x||_1 <= delta; stops when consecutive means (or consecutive powers) are
// within tol, errors out after maxit iterations. The default maxit can be
// overridden with the QFOURIER_MAXIT environment variable.
TwoBox cesaro_mean(const TwoBox& x, double tol = 1e-12, long maxit = -1);

// Smallest biprojection B with R(x * contragredient(x)) <= B, found by
// growing the range of convolution powers and matching against the
// enumerated lattice.
BiprojectionRecord generated_biprojection(const TwoBox& x);

// Spectral projection of contragredient(x) * x at ||x||_2^2 / delta,
// certified to be a biprojection.
BiprojectionRecord b2_projection(const TwoBox& x);

// Shift relations of a projection p against a biprojection B.
struct ShiftFlags {
    bool is_left_shift = false;    // p * B = (tr2 B / delta) p and traces match
    bool is_right_shift = false;   // B * p = (tr2 B / delta) p and traces match
    bool is_left_subshift = false;   // R(contragredient(p) * p) <= B
    bool is_right_subshift = false;  // R(p * contragredient(p)) <= B
};
ShiftFlags shift_tests(const TwoBox& p, const TwoBox& biproj, double tol = 1e-9);

// Verdicts for the equivalent characterizations of bi-shifts that the
// toolkit evaluates numerically. Criteria are numbered after the ten-way
// equivalence; all must agree on exact inputs.
struct BishiftCertificate {
    bool extremal_bi_isometry = false;  // (2)
    bool size_product = false;          // (3) S(x) S(F(x)) = delta^2
    bool entropy_identity = false;      // (4) closed-form sum of entropies
    bool young_saturated = false;       // (6) on the exponent grid
    bool hy_saturated = false;          // (8) on the exponent grid
    bool partial_isometry_sizes = false;  // (10)
    bool consistent = false;  // all six verdicts equal
    bool all_true = false;
};
BishiftCertificate is_bishift(const TwoBox& x, double tol = 1e-8);

// Translated subgroup character: the Minus 2-box supported on the coset
// s H with values chi(s^-1 g), a bi-shift by construction. G must be
// abelian; characters of H are indexed as in character_table (trivial = 0).
TwoBox make_bishift_abelian(GroupPtr g, const std::vector<int>& h, int char_index,
                            int coset_rep);

// Maximal biprojection B with p * B ~ p (right absorption), scanned over the
// enumerated lattice. p must be a projection.
BiprojectionRecord right_absorbing_biprojection(const TwoBox& p);

// Checks the absorption identity: given positive a, b with
// a * b = (tr2(b)/delta) a, verifies a * (x b) = a * (b x) = (tr2(x b)/delta) a
// for seeded random x.
bool absorption_check(const TwoBox& a, const TwoBox& b, uint64_t seed = 1,
                      int samples = 8, double tol = 1e-9);

}  // namespace qf
