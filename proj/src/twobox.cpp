#include "qfourier/twobox.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace qf {

std::string to_string(Shading s) { return s == Shading::Plus ? "plus" : "minus"; }

void require_compatible(const TwoBox& a, const TwoBox& b, const char* op) {
    bool same_group = a.group == b.group ||
                      (a.group && b.group && a.group->order() == b.group->order() &&
                       a.group->name() == b.group->name());
    if (!same_group)
        throw ShadingError(std::string(op) + ": operands live on different groups (" +
                           a.group->name() + " vs " + b.group->name() + ")");
    if (a.shading != b.shading)
        throw ShadingError(std::string(op) + ": operands have different shadings (" +
                           to_string(a.shading) + " vs " + to_string(b.shading) + ")");
}

TwoBox zero_box(GroupPtr g, Shading s) {
    return {g, s, Eigen::VectorXcd::Zero(g->order())};
}

TwoBox identity_box(GroupPtr g, Shading s) {
    TwoBox x = zero_box(g, s);
    if (s == Shading::Plus)
        x.coeff[0] = 1.0;
    else
        x.coeff.setOnes();
    return x;
}

TwoBox jones_projection(GroupPtr g, Shading s) {
    TwoBox x = zero_box(g, s);
    if (s == Shading::Plus)
        x.coeff.setConstant(1.0 / g->order());
    else
        x.coeff[0] = 1.0;
    return x;
}

TwoBox convolution_unit(GroupPtr g, Shading s) {
    return g->delta() * jones_projection(g, s);
}

TwoBox basis_box(GroupPtr g, Shading s, int element) {
    if (element < 0 || element >= g->order())
        throw std::out_of_range("basis_box: element " + std::to_string(element) +
                                " out of range for " + g->name());
    TwoBox x = zero_box(g, s);
    x.coeff[element] = 1.0;
    return x;
}

TwoBox indicator_box(GroupPtr g, const std::vector<int>& subset) {
    TwoBox x = zero_box(g, Shading::Minus);
    for (int e : subset) {
        if (e < 0 || e >= g->order())
            throw std::out_of_range("indicator_box: element " + std::to_string(e) +
                                    " out of range for " + g->name());
        x.coeff[e] = 1.0;
    }
    return x;
}

TwoBox operator+(const TwoBox& a, const TwoBox& b) {
    require_compatible(a, b, "operator+");
    return {a.group, a.shading, a.coeff + b.coeff};
}

TwoBox operator-(const TwoBox& a, const TwoBox& b) {
    require_compatible(a, b, "operator-");
    return {a.group, a.shading, a.coeff - b.coeff};
}

TwoBox operator*(cplx s, const TwoBox& a) { return {a.group, a.shading, s * a.coeff}; }

TwoBox multiply(const TwoBox& a, const TwoBox& b) {
    require_compatible(a, b, "multiply");
    const FiniteGroup& g = *a.group;
    int n = g.order();
    TwoBox out = zero_box(a.group, a.shading);
    if (a.shading == Shading::Plus) {
        // (ab)(g) = sum_h a(h) b(h^-1 g), accumulated as (ab)(hk) += a(h) b(k)
        for (int h = 0; h < n; ++h) {
            cplx ah = a.coeff[h];
            if (ah == cplx(0)) continue;
            for (int k = 0; k < n; ++k) out.coeff[g.mul(h, k)] += ah * b.coeff[k];
        }
    } else {
        out.coeff = a.coeff.cwiseProduct(b.coeff);
    }
    return out;
}

TwoBox coproduct(const TwoBox& a, const TwoBox& b) {
    require_compatible(a, b, "coproduct");
    const FiniteGroup& g = *a.group;
    int n = g.order();
    double delta = g.delta();
    TwoBox out = zero_box(a.group, a.shading);
    if (a.shading == Shading::Plus) {
        // (a * b)(g) = delta a(g) b(g)
        out.coeff = delta * a.coeff.cwiseProduct(b.coeff);
    } else {
        // (a * b)(g) = (1/delta) sum_u a(u) b(u^-1 g)
        for (int u = 0; u < n; ++u) {
            cplx au = a.coeff[u];
            if (au == cplx(0)) continue;
            for (int k = 0; k < n; ++k) out.coeff[g.mul(u, k)] += au * b.coeff[k];
        }
        out.coeff /= delta;
    }
    return out;
}

TwoBox sft(const TwoBox& x) {
    const FiniteGroup& g = *x.group;
    double delta = g.delta();
    TwoBox out = zero_box(x.group, opposite(x.shading));
    if (x.shading == Shading::Plus) {
        // F(x)(g) = delta x(g)
        out.coeff = delta * x.coeff;
    } else {
        // F(f)(g) = (1/delta) f(g^-1)
        for (int e = 0; e < g.order(); ++e) out.coeff[e] = x.coeff[g.inv(e)] / delta;
    }
    return out;
}

TwoBox sft_inverse(const TwoBox& x) {
    const FiniteGroup& g = *x.group;
    double delta = g.delta();
    TwoBox out = zero_box(x.group, opposite(x.shading));
    if (x.shading == Shading::Plus) {
        // F^-1(x)(g) = delta x(g^-1)
        for (int e = 0; e < g.order(); ++e) out.coeff[e] = delta * x.coeff[g.inv(e)];
    } else {
        // F^-1(f)(g) = (1/delta) f(g)
        out.coeff = x.coeff / delta;
    }
    return out;
}

TwoBox contragredient(const TwoBox& x) {
    const FiniteGroup& g = *x.group;
    TwoBox out = zero_box(x.group, x.shading);
    for (int e = 0; e < g.order(); ++e) out.coeff[e] = x.coeff[g.inv(e)];
    return out;
}

TwoBox adjoint(const TwoBox& x) {
    const FiniteGroup& g = *x.group;
    TwoBox out = zero_box(x.group, x.shading);
    if (x.shading == Shading::Plus) {
        for (int e = 0; e < g.order(); ++e) out.coeff[e] = std::conj(x.coeff[g.inv(e)]);
    } else {
        out.coeff = x.coeff.conjugate();
    }
    return out;
}

cplx trace(const TwoBox& x) {
    if (x.shading == Shading::Plus) return double(x.n()) * x.coeff[0];
    return x.coeff.sum();
}

cplx inner(const TwoBox& a, const TwoBox& b) {
    require_compatible(a, b, "inner");
    // tr2(a* b); on both shadings this reduces to a weighted dot product
    if (a.shading == Shading::Plus) return double(a.n()) * a.coeff.dot(b.coeff);
    return a.coeff.dot(b.coeff);
}

double norm2(const TwoBox& x) {
    double s = x.coeff.squaredNorm();
    if (x.shading == Shading::Plus) s *= x.n();
    return std::sqrt(s);
}

double distance2(const TwoBox& a, const TwoBox& b) { return norm2(a - b); }

Eigen::MatrixXcd to_matrix(const TwoBox& x) {
    const FiniteGroup& g = *x.group;
    int n = g.order();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    if (x.shading == Shading::Plus) {
        // lambda(x)_{j,k} = x(j k^-1)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m(j, k) = x.coeff[g.mul(j, g.inv(k))];
    } else {
        m.diagonal() = x.coeff;
    }
    return m;
}

TwoBox box_from_matrix(GroupPtr g, Shading s, const Eigen::MatrixXcd& m) {
    TwoBox out = zero_box(g, s);
    if (s == Shading::Plus)
        out.coeff = m.col(0);  // column at the identity
    else
        out.coeff = m.diagonal();
    return out;
}

Eigen::VectorXd singular_values(const TwoBox& x) {
    if (x.shading == Shading::Minus) {
        Eigen::VectorXd v = x.coeff.cwiseAbs();
        std::sort(v.data(), v.data() + v.size(), std::greater<double>());
        return v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_matrix(x));
    return svd.singularValues();
}

double pnorm(const TwoBox& x, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("pnorm: exponent must satisfy p >= 1, got " +
                                    std::to_string(p));
    if (p == 2.0) return norm2(x);
    Eigen::VectorXd s = singular_values(x);
    if (std::isinf(p)) return s.size() ? s[0] : 0.0;
    double acc = 0;
    for (int i = 0; i < s.size(); ++i) acc += std::pow(s[i], p);
    return std::pow(acc, 1.0 / p);
}

NormTriple norm_triple(const TwoBox& x) {
    Eigen::VectorXd s = singular_values(x);
    NormTriple t{0, 0, s.size() ? s[0] : 0.0};
    for (int i = 0; i < s.size(); ++i) {
        t.n1 += s[i];
        t.n2 += s[i] * s[i];
    }
    t.n2 = std::sqrt(t.n2);
    return t;
}

bool is_selfadjoint(const TwoBox& x, double tol) {
    return distance2(x, adjoint(x)) <= tol * std::max(1.0, norm2(x));
}

}  // namespace qf
