#pragma once

#include "qfourier/twobox.hpp"

namespace qf {

// Irreducible characters of a finite group, recovered numerically from the
// minimal central idempotents of the group algebra. Row order is
// deterministic: trivial character first, then by (dimension, value vector).
struct CharacterTable {
    GroupPtr group;
    // chi[i][c] = value of irrep i on conjugacy class c
    std::vector<std::vector<cplx>> chi;
    std::vector<int> dims;
    // z[i] = minimal central projection of irrep i (Plus shading),
    // z[i] = (d_i/n) sum_g conj(chi_i(g)) L_g
    std::vector<TwoBox> central;

    int irrep_count() const { return static_cast<int>(chi.size()); }
    cplx value(int irrep, int element) const {
        return chi[irrep][group->class_of(element)];
    }
};

// Computed by diagonalizing a generic self-adjoint element of the center and
// reading characters off the minimal idempotents; results are certified
// (integrality of dimensions, orthogonality, sum of squares = |G|).
CharacterTable character_table(GroupPtr g);

// Central projection for a set of irreps (sum of the minimal ones).
TwoBox central_projection(const CharacterTable& t, const std::vector<int>& irreps);

// Multiplicity vector of V (x) W where V, W are given by irrep index sets:
// m[k] = <chi_V chi_W, chi_k>, rounded from near-integers.
std::vector<int> tensor_multiplicities(const CharacterTable& t, const std::vector<int>& v,
                                       const std::vector<int>& w);

}  // namespace qf
