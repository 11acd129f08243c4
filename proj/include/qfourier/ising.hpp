#pragma once

#include <cmath>

#include "qfourier/blockmap.hpp"
#include "qfourier/twobox.hpp"

namespace qf {

struct IsingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two-dimensional slice of the Z2 group algebra: x = a*1 + b*(sqrt(2) e1).
// The Boltzmann parametrization a = e^beta - e^-beta, b = sqrt(2) e^-beta
// gives coefficients (e^beta, e^-beta) on (L_e, L_g).
struct IsingElement {
    double a = 0, b = 0;
    double t() const;  // the ratio b/a; +inf when a == 0
};

IsingElement ising_element(double beta);            // requires beta > 0
TwoBox ising_twobox(const IsingElement& e, GroupPtr z2);
GroupPtr ising_group();                             // the Z2 group

// Closed form of B_{1/2} restricted to the slice (degree-1 homogeneous).
IsingElement b_half_closed(const IsingElement& e);

// One step of the induced rational dynamics on t = b/a; delta = sqrt(2) for
// the Ising family but kept general. Fixed points 0, 1, +inf; duality
// t_step(1/t) = 1/t_step(t).
double t_step(double t, double delta = std::sqrt(2.0));

enum class IsingPhase { Ordered_ID, Disordered_JP, Critical_Zero };
std::string to_string(IsingPhase p);

struct IsingPoint {
    double beta = 0;
    double t0 = 0;
    IsingPhase phase = IsingPhase::Critical_Zero;
    long iterations = 0;
    double limit_scalar = 0;   // surviving coefficient of the limit (0 at criticality)
    double entropy_final = 0;  // total Fourier entropy of the limit 2-box
};

// Classifies one inverse temperature by iterating the closed form until the
// surviving coefficient stabilizes (relative change < 1e-13) or the element
// decays below the zero threshold.
IsingPoint classify_beta(double beta, long maxit = -1);
// Same, but starting from an explicit slice element (used for exact t = 1).
IsingPoint classify_element(const IsingElement& start, double beta_label = 0,
                            long maxit = -1);

std::vector<IsingPoint> phase_scan(double beta_min, double beta_max, int steps);

// Critical temperature: the analytic value ln(1+sqrt(2))/2 and a bisection
// estimate from sign changes of t_N - 1 after N applications of t_step.
struct CriticalBeta {
    double analytic = 0;
    double bisection = 0;
};
CriticalBeta critical_beta(int tstep_iters = 200, double beta_tol = 1e-10);

}  // namespace qf
