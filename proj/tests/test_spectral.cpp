#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "qfourier/rng.hpp"
#include "qfourier/spectral.hpp"

using namespace qf;

TEST_CASE("spectral decomposition of (1 + L_t)/2 for a transposition") {
    auto g = group_from_spec("S3");
    int t = -1;  // any involution
    for (int e = 1; e < 6; ++e)
        if (g->mul(e, e) == 0) t = e;
    REQUIRE(t > 0);
    TwoBox x = 0.5 * (identity_box(g, Shading::Plus) + basis_box(g, Shading::Plus, t));

    // oracle: eigenvalues of the 6x6 matrix directly
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(x));
    int zeros = 0, ones = 0;
    for (int i = 0; i < 6; ++i) {
        if (std::abs(es.eigenvalues()(i)) < 1e-12) ++zeros;
        if (std::abs(es.eigenvalues()(i) - 1) < 1e-12) ++ones;
    }
    CHECK(zeros == 3);
    CHECK(ones == 3);

    SpectralData sd = spectral_decompose(x);
    REQUIRE(sd.values.size() == 2);
    CHECK(sd.values[0] == doctest::Approx(0).epsilon(1e-12));
    CHECK(sd.values[1] == doctest::Approx(1).epsilon(1e-12));
    CHECK(trace(sd.projections[0]).real() == doctest::Approx(3).epsilon(1e-12));
    CHECK(trace(sd.projections[1]).real() == doctest::Approx(3).epsilon(1e-12));
    CHECK(distance2(sd.projections[1], x) == doctest::Approx(0).epsilon(1e-10));
    CHECK(support_size(x) == doctest::Approx(3).epsilon(1e-12));
    CHECK(distance2(range_projection(x), x) == doctest::Approx(0).epsilon(1e-10));

    // resolution of the identity
    TwoBox sum = sd.projections[0] + sd.projections[1];
    CHECK(distance2(sum, identity_box(g, Shading::Plus)) == doctest::Approx(0).epsilon(1e-10));
}

TEST_CASE("functional calculus") {
    auto g = group_from_spec("D4");
    Rng rng(21);
    TwoBox x = rng.random_positive(g, Shading::Plus);
    SpectralData sd = spectral_decompose(x);
    CHECK(distance2(sd.apply([](double v) { return v; }), x) ==
          doctest::Approx(0).epsilon(1e-9));
    TwoBox root = sd.apply([](double v) { return std::sqrt(std::max(v, 0.0)); });
    CHECK(distance2(multiply(root, root), x) == doctest::Approx(0).epsilon(1e-8));

    CHECK_THROWS_AS(spectral_decompose(rng.random_box(g, Shading::Plus)), SpectralError);
}

TEST_CASE("polar decomposition reconstructs and is certified") {
    for (Shading s : {Shading::Plus, Shading::Minus}) {
        auto g = group_from_spec("S3");
        Rng rng(22);
        TwoBox x = rng.random_box(g, s);
        PolarData pd = polar(x);
        CHECK(is_positive(pd.absval));
        CHECK(distance2(multiply(pd.isometry, pd.absval), x) ==
              doctest::Approx(0).epsilon(1e-9));
        // w* w is the support of |x|
        TwoBox ww = multiply(adjoint(pd.isometry), pd.isometry);
        CHECK(distance2(ww, range_projection(pd.absval)) == doctest::Approx(0).epsilon(1e-8));
    }
}

TEST_CASE("range projections act as left units on their element") {
    auto g = group_from_spec("Q8");
    Rng rng(23);
    for (Shading s : {Shading::Plus, Shading::Minus}) {
        TwoBox x = rng.random_box(g, s);
        TwoBox r = range_projection(x);
        CHECK(is_projection(r));
        CHECK(distance2(multiply(r, x), x) == doctest::Approx(0).epsilon(1e-9));
        CHECK(support_size(x) == doctest::Approx(trace(r).real()).epsilon(1e-12));
        // generic elements are invertible: full support
        CHECK(support_size(x) == doctest::Approx(g->order()).epsilon(1e-12));
    }
}

TEST_CASE("spectral_projection_at hits the right eigenspace") {
    auto g = group_from_spec("Z6");
    Rng rng(24);
    TwoBox x = rng.random_selfadjoint(g, Shading::Plus);
    SpectralData sd = spectral_decompose(x);
    for (size_t k = 0; k < sd.values.size(); ++k) {
        TwoBox p = spectral_projection_at(x, sd.values[k]);
        CHECK(distance2(p, sd.projections[k]) == doctest::Approx(0).epsilon(1e-9));
    }
    TwoBox none = spectral_projection_at(x, 1e9);
    CHECK(norm2(none) == doctest::Approx(0));
}

TEST_CASE("predicates on canonical elements") {
    auto g = group_from_spec("S3");
    TwoBox e1 = jones_projection(g, Shading::Plus);
    Predicates p = predicates(e1);
    CHECK(p.is_positive);
    CHECK(p.is_projection);
    CHECK(p.is_partial_isometry);

    // group elements L_g are extremal bi-partial isometries
    for (int e = 0; e < 6; ++e) {
        Predicates q = predicates(basis_box(g, Shading::Plus, e));
        CHECK(q.is_partial_isometry);
        CHECK(q.is_extremal);
        CHECK(q.is_projection == (e == 0));
    }

    Rng rng(25);
    TwoBox x = rng.random_box(g, Shading::Plus);
    CHECK(is_positive(multiply(adjoint(x), x)));
    CHECK(min_eigenvalue(multiply(adjoint(x), x)) >= -1e-10);
}
