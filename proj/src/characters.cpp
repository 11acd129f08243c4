#include "qfourier/characters.hpp"

#include <algorithm>
#include <cmath>

#include "qfourier/spectral.hpp"

namespace qf {

namespace {

struct CharError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// generic self-adjoint central element: sum of class sums with weights w_C
// satisfying w_{C^-1} = conj(w_C); the attempt index varies the weights.
TwoBox generic_central(GroupPtr g, int attempt) {
    const auto& classes = g->conjugacy_classes();
    int nc = static_cast<int>(classes.size());
    // class of the inverses of class c
    std::vector<int> inv_class(nc);
    for (int c = 0; c < nc; ++c) inv_class[c] = g->class_of(g->inv(classes[c][0]));
    TwoBox x = zero_box(g, Shading::Plus);
    double fa = 1.7 + 0.37 * attempt, fb = 2.3 + 0.59 * attempt;
    for (int c = 0; c < nc; ++c) {
        if (inv_class[c] < c) continue;  // partner already handled
        double re = std::cos(fa * (c + 1));
        double im = inv_class[c] == c ? 0.0 : 0.618 * std::sin(fb * (c + 1));
        for (int e : classes[c]) x.coeff[e] += cplx(re, im);
        if (inv_class[c] != c)
            for (int e : classes[inv_class[c]]) x.coeff[e] += cplx(re, -im);
    }
    return x;
}

bool near_integer(double v, double tol, int& out) {
    out = static_cast<int>(std::lround(v));
    return std::abs(v - out) <= tol;
}

// lexicographic compare of value vectors with a tolerance band
bool char_less(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].real() - b[i].real()) > 1e-6) return a[i].real() > b[i].real();
        if (std::abs(a[i].imag() - b[i].imag()) > 1e-6) return a[i].imag() > b[i].imag();
    }
    return false;
}

bool try_table(GroupPtr g, int attempt, CharacterTable& out) {
    const auto& classes = g->conjugacy_classes();
    int n = g->order();
    int nc = static_cast<int>(classes.size());

    SpectralData sd = spectral_decompose(generic_central(g, attempt), 1e-9);
    if (static_cast<int>(sd.projections.size()) != nc) return false;

    struct Row {
        int dim;
        std::vector<cplx> chi;
        TwoBox z;
    };
    std::vector<Row> rows;
    for (auto& z : sd.projections) {
        // z = (d/n) sum_g conj(chi(g)) L_g, so d = sqrt(n z(e)) and
        // chi(g) = (n/d) conj(z(g))
        double de2 = n * z.coeff[0].real();
        int d;
        if (de2 <= 0 || !near_integer(std::sqrt(de2), 1e-6, d)) return false;
        Row r;
        r.dim = d;
        r.chi.resize(nc);
        for (int c = 0; c < nc; ++c)
            r.chi[c] = std::conj(z.coeff[classes[c][0]]) * double(n) / double(d);
        // coefficients must be constant on classes (centrality)
        for (int c = 0; c < nc; ++c)
            for (int e : classes[c])
                if (std::abs(z.coeff[e] - z.coeff[classes[c][0]]) > 1e-7) return false;
        r.z = std::move(z);
        rows.push_back(std::move(r));
    }

    // certify: sum d^2 = n and first-column values chi(e) = d
    int sumsq = 0;
    for (auto& r : rows) {
        sumsq += r.dim * r.dim;
        if (std::abs(r.chi[0] - cplx(r.dim)) > 1e-6) return false;
    }
    if (sumsq != n) return false;

    // orthonormality of rows under (1/n) sum_g chi_i(g) conj(chi_j(g))
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            cplx acc = 0;
            for (int c = 0; c < nc; ++c)
                acc += double(classes[c].size()) * rows[i].chi[c] * std::conj(rows[j].chi[c]);
            acc /= double(n);
            double want = i == j ? 1.0 : 0.0;
            if (std::abs(acc - cplx(want)) > 1e-7) return false;
        }

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        bool ta = true, tb = true;
        for (auto& v : a.chi) ta = ta && std::abs(v - cplx(1)) < 1e-6;
        for (auto& v : b.chi) tb = tb && std::abs(v - cplx(1)) < 1e-6;
        if (ta != tb) return ta;  // trivial character first
        if (a.dim != b.dim) return a.dim < b.dim;
        return char_less(a.chi, b.chi);
    });

    out.group = g;
    for (auto& r : rows) {
        out.chi.push_back(std::move(r.chi));
        out.dims.push_back(r.dim);
        out.central.push_back(std::move(r.z));
    }
    return true;
}

}  // namespace

CharacterTable character_table(GroupPtr g) {
    for (int attempt = 0; attempt < 12; ++attempt) {
        CharacterTable t;
        if (try_table(g, attempt, t)) return t;
    }
    throw CharError("character_table: could not certify a table for " + g->name());
}

TwoBox central_projection(const CharacterTable& t, const std::vector<int>& irreps) {
    TwoBox acc = zero_box(t.group, Shading::Plus);
    for (int i : irreps) {
        if (i < 0 || i >= t.irrep_count())
            throw std::out_of_range("central_projection: irrep index " + std::to_string(i));
        acc = acc + t.central[i];
    }
    return acc;
}

std::vector<int> tensor_multiplicities(const CharacterTable& t, const std::vector<int>& v,
                                       const std::vector<int>& w) {
    const auto& classes = t.group->conjugacy_classes();
    int nc = static_cast<int>(classes.size());
    int n = t.group->order();
    std::vector<cplx> cv(nc, 0), cw(nc, 0);
    for (int i : v)
        for (int c = 0; c < nc; ++c) cv[c] += t.chi[i][c];
    for (int i : w)
        for (int c = 0; c < nc; ++c) cw[c] += t.chi[i][c];
    std::vector<int> m(t.irrep_count());
    for (int k = 0; k < t.irrep_count(); ++k) {
        cplx acc = 0;
        for (int c = 0; c < nc; ++c)
            acc += double(classes[c].size()) * cv[c] * cw[c] * std::conj(t.chi[k][c]);
        acc /= double(n);
        int mk = static_cast<int>(std::lround(acc.real()));
        if (std::abs(acc - cplx(mk)) > 1e-6)
            throw CharError("tensor_multiplicities: non-integral multiplicity " +
                            std::to_string(acc.real()));
        m[k] = mk;
    }
    return m;
}

}  // namespace qf
