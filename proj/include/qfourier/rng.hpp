#pragma once

#include <cmath>
#include <random>

#include "qfourier/twobox.hpp"

namespace qf {

// Deterministic sampling helpers. Box-Muller over mt19937_64 is used instead
// of std::normal_distribution because the latter's output is
// implementation-defined; this way a seed pins the exact stream everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    double uniform() {  // in [0, 1)
        return (eng_() >> 11) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
    }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx cgauss() { return {gauss(), gauss()}; }

    // iid standard complex Gaussian coefficients
    TwoBox random_box(GroupPtr g, Shading s) {
        TwoBox x = zero_box(g, s);
        for (int i = 0; i < g->order(); ++i) x.coeff[i] = cgauss();
        return x;
    }

    // x* x for a Gaussian x: positive, generically full-rank
    TwoBox random_positive(GroupPtr g, Shading s) {
        TwoBox x = random_box(g, s);
        return multiply(adjoint(x), x);
    }

    TwoBox random_selfadjoint(GroupPtr g, Shading s) {
        TwoBox x = random_box(g, s);
        return 0.5 * (x + adjoint(x));
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qf
