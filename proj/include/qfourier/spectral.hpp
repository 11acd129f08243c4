#pragma once

#include <functional>

#include "qfourier/twobox.hpp"

namespace qf {

// Raised when an input violates a spectral precondition (e.g. not
// self-adjoint) or a certified reconstruction misses its tolerance.
struct SpectralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spectral resolution x = sum_k value[k] * projection[k] of a self-adjoint
// 2-box. Eigenvalues are clustered with an absolute-plus-relative gap
// tolerance and listed ascending; projections live in the same algebra.
struct SpectralData {
    std::vector<double> values;
    std::vector<TwoBox> projections;

    TwoBox apply(const std::function<double(double)>& f) const;  // functional calculus
};

SpectralData spectral_decompose(const TwoBox& x, double tol = 1e-9);

// Polar parts of an arbitrary 2-box: x = isometry * absval with
// absval = (x* x)^(1/2) and the partial isometry supported on the range.
struct PolarData {
    TwoBox absval;
    TwoBox isometry;
};
PolarData polar(const TwoBox& x);

// Projection onto the range of x; eigenvalues of x x* below
// rank_tol * ||x x*||_inf count as zero.
TwoBox range_projection(const TwoBox& x, double rank_tol = 1e-9);

// S(x) = tr2(range projection), the "size" of x
double support_size(const TwoBox& x, double rank_tol = 1e-9);

// Sum of the eigenprojections of self-adjoint x with |eigenvalue - value|
// <= tol * max(1, |value|); the zero box if no eigenvalue is close.
TwoBox spectral_projection_at(const TwoBox& x, double value, double tol = 1e-8);

// Tolerance-based structure predicates.
struct Predicates {
    bool is_positive = false;
    bool is_projection = false;
    bool is_partial_isometry = false;
    bool is_extremal = false;    // ||F(x)||_inf == (1/delta) ||x||_1
    bool is_bipositive = false;  // x >= 0 and F(x) >= 0
};
Predicates predicates(const TwoBox& x, double tol = 1e-8);

bool is_positive(const TwoBox& x, double tol = 1e-8);
bool is_projection(const TwoBox& x, double tol = 1e-8);

// min real eigenvalue of a self-adjoint 2-box
double min_eigenvalue(const TwoBox& x);

}  // namespace qf
