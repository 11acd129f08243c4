#pragma once

#include "qfourier/biprojection.hpp"
#include "qfourier/twobox.hpp"

namespace qf {

struct BlockmapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The two one-parameter families of block maps and their convex combination.
// Both fix exactly the positive multiples of biprojections and never increase
// ||.||_t. Inputs must be nonzero.
TwoBox b_cm(const TwoBox& x);  // multiplication of coproducts
TwoBox b_mc(const TwoBox& x);  // coproduct of multiplications
TwoBox b_lambda(const TwoBox& x, double lambda);

// total Fourier entropy H(|x|^2) + H(|F(x)|^2), H(a) = -tr2(a log a)
double entropy(const TwoBox& x);

// || F(B_lambda(x)) - B_(1-lambda)(F(x)) ||_2 for bi-positive x (the two sides
// commute exactly on such inputs; error if x is not bi-positive)
double commute_defect(const TwoBox& x, double lambda, double tol = 1e-8);

enum class FlowClass { BiprojectionMultiple, Zero, Unresolved };
std::string to_string(FlowClass c);

struct IterateOptions {
    double lambda = 0.5;
    double step_tol = 1e-12;       // stop when ||x_{n+1} - x_n||_2 < step_tol
    double zero_tol = 1e-10;       // classify as Zero when ||x_n||_2 < zero_tol
    double classify_tol = 1e-8;    // residual bound for BiprojectionMultiple
    long maxit = -1;               // -1: 100000, overridable via QFOURIER_MAXIT
    bool track_entropy = true;
    bool record_states = false;    // keep the iterates (for trajectory dumps)
};

struct FlowResult {
    FlowClass classification = FlowClass::Unresolved;
    TwoBox limit;
    long iterations = 0;
    // nearest biprojection fit (valid when classified as BiprojectionMultiple)
    BiprojectionRecord witness;
    double scalar = 0.0;    // limit ~ scalar * witness.element
    double residual = 0.0;  // ||limit - scalar * witness||_2
    std::vector<double> trajectory_norms;    // ||x_n||_2 per step
    std::vector<double> entropy_trace;       // when track_entropy
    std::vector<TwoBox> states;              // when record_states
};

// Iterates x -> B_lambda(x) until the step criterion triggers, then
// classifies the limit against the enumerated biprojection lattice.
FlowResult iterate_blockmap(const TwoBox& x0, const IterateOptions& opt = {});

}  // namespace qf
