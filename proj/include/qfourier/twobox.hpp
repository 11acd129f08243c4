#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "qfourier/group.hpp"

namespace qf {

using cplx = std::complex<double>;

// Shading of a 2-box. Plus is the group-algebra side (coefficients of the
// left-regular generators L_g), Minus the function-algebra side (pointwise
// values on the group).
enum class Shading { Plus, Minus };

inline Shading opposite(Shading s) { return s == Shading::Plus ? Shading::Minus : Shading::Plus; }
std::string to_string(Shading s);

// A 2-box: a group, a shading, and one complex coefficient per element.
struct TwoBox {
    GroupPtr group;
    Shading shading = Shading::Plus;
    Eigen::VectorXcd coeff;

    int n() const { return group->order(); }
    double delta() const { return group->delta(); }
    cplx operator()(int g) const { return coeff[g]; }
};

// Raised when operands live on different groups or shadings don't match the
// operation's requirements.
struct ShadingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require_compatible(const TwoBox& a, const TwoBox& b, const char* op);

// --- constructors ---------------------------------------------------------

TwoBox zero_box(GroupPtr g, Shading s);
// multiplicative unit: L_e on Plus, the constant-1 function on Minus
TwoBox identity_box(GroupPtr g, Shading s);
// Jones projection: e1 = (1/n) sum_g L_g on Plus, the point mass at e on Minus
TwoBox jones_projection(GroupPtr g, Shading s);
// unit for the convolution product: delta * (Jones projection of the shading)
TwoBox convolution_unit(GroupPtr g, Shading s);
// single generator L_g (Plus) or indicator of {g} (Minus)
TwoBox basis_box(GroupPtr g, Shading s, int element);
// indicator function of a subset (Minus shading)
TwoBox indicator_box(GroupPtr g, const std::vector<int>& subset);

// --- linear structure ------------------------------------------------------

TwoBox operator+(const TwoBox& a, const TwoBox& b);
TwoBox operator-(const TwoBox& a, const TwoBox& b);
TwoBox operator*(cplx s, const TwoBox& a);
inline TwoBox operator*(double s, const TwoBox& a) { return cplx(s, 0) * a; }
inline TwoBox operator*(const TwoBox& a, cplx s) { return s * a; }

// --- ring operations --------------------------------------------------------

// multiplication of the shading: convolution of coefficients on Plus,
// pointwise product on Minus
TwoBox multiply(const TwoBox& a, const TwoBox& b);
// coproduct (the convolution in the planar-algebra sense): pointwise with a
// delta factor on Plus, normalized convolution on Minus
TwoBox coproduct(const TwoBox& a, const TwoBox& b);
// string Fourier transform (1-click rotation), shading-reversing
TwoBox sft(const TwoBox& x);
TwoBox sft_inverse(const TwoBox& x);
// contragredient: coefficient reversal g -> g^-1, no conjugation
TwoBox contragredient(const TwoBox& x);
// adjoint (the * of the C*-algebra of the shading)
TwoBox adjoint(const TwoBox& x);

// --- traces, norms, matrices -------------------------------------------------

// unnormalized Markov trace: tr2(1) = delta^2, tr2(Jones projection) = 1
cplx trace(const TwoBox& x);
// <a, b> = tr2(a* b)
cplx inner(const TwoBox& a, const TwoBox& b);
// ||x||_2 = sqrt(tr2(x* x)), computed directly from coefficients
double norm2(const TwoBox& x);
double distance2(const TwoBox& a, const TwoBox& b);

// matrix of the shading's GNS action: lambda(x) for Plus, diag(values) for Minus
Eigen::MatrixXcd to_matrix(const TwoBox& x);
// inverse of to_matrix; trusts that m lies in the image (column at the
// identity resp. the diagonal is read off)
TwoBox box_from_matrix(GroupPtr g, Shading s, const Eigen::MatrixXcd& m);

// singular values of to_matrix(x), descending
Eigen::VectorXd singular_values(const TwoBox& x);
// Schatten/L^p norm, p in [1, inf]; pnorm(x, 2) == norm2(x)
double pnorm(const TwoBox& x, double p);

// all three of ||x||_1, ||x||_2, ||x||_inf from one decomposition
struct NormTriple {
    double n1, n2, ninf;
};
NormTriple norm_triple(const TwoBox& x);

bool is_selfadjoint(const TwoBox& x, double tol = 1e-9);

}  // namespace qf
