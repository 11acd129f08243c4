#include "qfourier/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace qf {

TwoBox SpectralData::apply(const std::function<double(double)>& f) const {
    if (projections.empty()) throw SpectralError("apply: empty spectral data");
    TwoBox acc = zero_box(projections[0].group, projections[0].shading);
    for (size_t k = 0; k < values.size(); ++k) acc = acc + f(values[k]) * projections[k];
    return acc;
}

SpectralData spectral_decompose(const TwoBox& x, double tol) {
    double scale = norm2(x);
    if (distance2(x, adjoint(x)) > tol * std::max(1.0, scale) * 10)
        throw SpectralError("spectral_decompose: input is not self-adjoint (||x - x*||_2 = " +
                            std::to_string(distance2(x, adjoint(x))) + ")");
    Eigen::MatrixXcd m = 0.5 * (to_matrix(x) + to_matrix(adjoint(x)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const Eigen::MatrixXcd& v = es.eigenvectors();
    int n = static_cast<int>(ev.size());
    double span = std::max(std::abs(ev[0]), std::abs(ev[n - 1]));
    double gap = tol * std::max(1.0, span);

    SpectralData out;
    int i = 0;
    while (i < n) {
        int j = i + 1;
        while (j < n && ev[j] - ev[j - 1] <= gap) ++j;
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
        double mean = 0;
        for (int k = i; k < j; ++k) {
            p += v.col(k) * v.col(k).adjoint();
            mean += ev[k];
        }
        out.values.push_back(mean / (j - i));
        out.projections.push_back(box_from_matrix(x.group, x.shading, p));
        i = j;
    }

    // certified reconstruction
    TwoBox rec = zero_box(x.group, x.shading);
    for (size_t k = 0; k < out.values.size(); ++k)
        rec = rec + out.values[k] * out.projections[k];
    if (distance2(rec, x) > 1e-9 * std::max(1.0, scale))
        throw SpectralError("spectral_decompose: reconstruction residual " +
                            std::to_string(distance2(rec, x)) + " exceeds tolerance");
    return out;
}

PolarData polar(const TwoBox& x) {
    TwoBox h = multiply(adjoint(x), x);  // x* x, positive
    SpectralData sd = spectral_decompose(h);
    double top = sd.values.empty() ? 0.0 : std::abs(sd.values.back());
    double cut = 1e-12 * top;  // kernel cut, safely above eigensolver noise
    PolarData out;
    out.absval = sd.apply([](double t) { return t > 0 ? std::sqrt(t) : 0.0; });
    TwoBox isqrt = sd.apply([&](double t) { return t > cut ? 1.0 / std::sqrt(t) : 0.0; });
    out.isometry = multiply(x, isqrt);
    if (distance2(multiply(out.isometry, out.absval), x) > 1e-9 * std::max(1.0, norm2(x)))
        throw SpectralError("polar: w|x| fails to reconstruct x within tolerance");
    return out;
}

TwoBox range_projection(const TwoBox& x, double rank_tol) {
    TwoBox h = multiply(x, adjoint(x));  // x x*, its support is the range of x
    SpectralData sd = spectral_decompose(h);
    double top = sd.values.empty() ? 0.0 : std::max(0.0, sd.values.back());
    // cut on the eigenvalues of x x* relative to the largest one; thresholding
    // the square roots instead would lift eigensolver noise (~eps * top) above
    // any reasonable singular-value cut
    double cut = rank_tol * top;
    TwoBox acc = zero_box(x.group, x.shading);
    for (size_t k = 0; k < sd.values.size(); ++k)
        if (sd.values[k] > cut) acc = acc + sd.projections[k];
    return acc;
}

double support_size(const TwoBox& x, double rank_tol) {
    return trace(range_projection(x, rank_tol)).real();
}

TwoBox spectral_projection_at(const TwoBox& x, double value, double tol) {
    SpectralData sd = spectral_decompose(x);
    TwoBox acc = zero_box(x.group, x.shading);
    double window = tol * std::max(1.0, std::abs(value));
    for (size_t k = 0; k < sd.values.size(); ++k)
        if (std::abs(sd.values[k] - value) <= window) acc = acc + sd.projections[k];
    return acc;
}

double min_eigenvalue(const TwoBox& x) {
    Eigen::MatrixXcd m = 0.5 * (to_matrix(x) + to_matrix(adjoint(x)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
}

bool is_positive(const TwoBox& x, double tol) {
    if (!is_selfadjoint(x, tol)) return false;
    Eigen::MatrixXcd m = 0.5 * (to_matrix(x) + to_matrix(adjoint(x)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    double top = std::max(std::abs(es.eigenvalues()[0]),
                          std::abs(es.eigenvalues()[x.n() - 1]));
    return es.eigenvalues()[0] >= -tol * std::max(1.0, top);
}

bool is_projection(const TwoBox& x, double tol) {
    if (!is_selfadjoint(x, tol)) return false;
    return distance2(multiply(x, x), x) <= tol * std::max(1.0, norm2(x));
}

Predicates predicates(const TwoBox& x, double tol) {
    Predicates p;
    p.is_positive = is_positive(x, tol);
    p.is_projection = is_projection(x, tol);
    // partial isometry: x x* x = x
    TwoBox xxx = multiply(multiply(x, adjoint(x)), x);
    p.is_partial_isometry = distance2(xxx, x) <= tol * std::max(1.0, norm2(x));
    // extremal: ||F(x)||_inf = (1/delta) ||x||_1
    double lhs = pnorm(sft(x), std::numeric_limits<double>::infinity());
    double rhs = pnorm(x, 1.0) / x.delta();
    p.is_extremal = std::abs(lhs - rhs) <= tol * std::max(1.0, rhs);
    p.is_bipositive = p.is_positive && is_positive(sft(x), tol);
    return p;
}

}  // namespace qf
