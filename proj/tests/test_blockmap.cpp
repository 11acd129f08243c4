#include <doctest.h>

#include "qfourier/blockmap.hpp"
#include "qfourier/ising.hpp"
#include "qfourier/rng.hpp"
#include "qfourier/spectral.hpp"

using namespace qf;

TEST_CASE("biprojection multiples are fixed points of every block map") {
    for (const char* spec : {"Z4", "S3"}) {
        auto g = group_from_spec(spec);
        for (Shading s : {Shading::Plus, Shading::Minus}) {
            for (const auto& rec : enumerate_biprojections(g, s)) {
                TwoBox x = 1.7 * rec.element;
                for (double lambda : {0.0, 0.5, 1.0}) {
                    CHECK(distance2(b_lambda(x, lambda), x) <
                          1e-11 * std::max(1.0, norm2(x)));
                }
            }
        }
    }
}

TEST_CASE("block maps are positively homogeneous of degree one") {
    auto g = group_from_spec("S3");
    Rng rng(51);
    TwoBox x = rng.random_box(g, Shading::Plus);
    for (double lambda : {0.0, 0.3, 1.0}) {
        TwoBox bx = b_lambda(x, lambda);
        CHECK(distance2(b_lambda(2.0 * x, lambda), 2.0 * bx) < 1e-10);
        // a phase scales by its modulus
        CHECK(distance2(b_lambda(cplx(0, 2) * x, lambda), 2.0 * bx) < 1e-10);
    }
    CHECK_THROWS_AS(b_lambda(x, 1.5), BlockmapError);
    CHECK_THROWS_AS(b_lambda(zero_box(g, Shading::Plus), 0.5), BlockmapError);
}

TEST_CASE("the critical Ising ray contracts by (10+7sqrt2)/(12+8sqrt2)") {
    TwoBox x = ising_twobox({1.0, 1.0}, ising_group());
    double mu = (10 + 7 * std::sqrt(2.0)) / (12 + 8 * std::sqrt(2.0));
    CHECK(distance2(b_lambda(x, 0.5), mu * x) < 1e-12);

    IsingElement next = b_half_closed({1.0, 1.0});
    CHECK(next.a == doctest::Approx(mu).epsilon(1e-13));
    CHECK(next.b == doctest::Approx(mu).epsilon(1e-13));
}

TEST_CASE("Fourier transform intertwines the two block-map families") {
    auto g = group_from_spec("Z6");
    Rng rng(52);
    for (int k = 0; k < 4; ++k) {
        TwoBox x = b_lambda(rng.random_box(g, k % 2 ? Shading::Minus : Shading::Plus), 0.5);
        for (double lambda : {0.0, 0.25, 0.5, 1.0})
            CHECK(commute_defect(x, lambda) < 1e-9 * std::max(1.0, norm2(x)));
    }
    CHECK_THROWS_AS(commute_defect(rng.random_box(g, Shading::Plus), 0.5), BlockmapError);
}

TEST_CASE("flow from the Jones projection is already converged") {
    auto g = group_from_spec("S3");
    FlowResult res = iterate_blockmap(jones_projection(g, Shading::Plus));
    CHECK(res.classification == FlowClass::BiprojectionMultiple);
    CHECK(res.iterations == 0);
    CHECK(res.scalar == doctest::Approx(1).epsilon(1e-10));
    CHECK(res.residual < 1e-10);
    REQUIRE(res.witness.subgroup.has_value());
    CHECK(res.witness.subgroup->size() == 6);  // e1 belongs to the full group
}

TEST_CASE("random bi-positive starts classify with monotone norms") {
    auto g = group_from_spec("S3");
    Rng rng(53);
    for (int k = 0; k < 6; ++k) {
        TwoBox x0 = b_lambda(rng.random_box(g, k % 2 ? Shading::Minus : Shading::Plus), 0.5);
        IterateOptions opt;
        opt.lambda = k % 3 == 0 ? 0.5 : (k % 3 == 1 ? 0.0 : 1.0);
        opt.record_states = true;
        FlowResult res = iterate_blockmap(x0, opt);
        CHECK(res.classification != FlowClass::Unresolved);
        REQUIRE(res.trajectory_norms.size() >= 1);
        for (size_t i = 1; i < res.trajectory_norms.size(); ++i)
            CHECK(res.trajectory_norms[i] <= res.trajectory_norms[i - 1] + 1e-12);
        CHECK(res.states.size() == res.trajectory_norms.size());
        CHECK(res.entropy_trace.size() == res.trajectory_norms.size());
        if (res.classification == FlowClass::BiprojectionMultiple) {
            CHECK(res.residual <= 1e-8 * std::max(1.0, norm2(res.limit)));
            CHECK(is_biprojection(res.witness.element));
        }
    }
}

TEST_CASE("entropy of a normalized bi-shift is 2 log delta") {
    auto z4 = group_from_spec("Z4");
    TwoBox x = make_bishift_abelian(z4, {0, 2}, 1, 1);
    x = (1.0 / norm2(x)) * x;
    CHECK(entropy(x) == doctest::Approx(2 * std::log(z4->delta())).epsilon(1e-10));

    // normalized biprojections reach the same value; bi-shifts minimize, so
    // generic elements sit strictly above
    TwoBox b = indicator_box(z4, {0, 2});
    b = (1.0 / norm2(b)) * b;
    CHECK(entropy(b) == doctest::Approx(2 * std::log(z4->delta())).epsilon(1e-10));

    Rng rng(54);
    TwoBox r = rng.random_positive(z4, Shading::Minus);
    r = (1.0 / norm2(r)) * r;
    CHECK(entropy(r) > 2 * std::log(z4->delta()) + 1e-6);
}

TEST_CASE("flows on a larger group settle onto the biprojection lattice") {
    auto g = group_from_spec("D4");
    Rng rng(55);
    TwoBox x0 = b_lambda(rng.random_positive(g, Shading::Plus), 0.5);
    FlowResult res = iterate_blockmap(x0);
    CHECK(res.classification != FlowClass::Unresolved);
    if (res.classification == FlowClass::BiprojectionMultiple) {
        // the limit really is scalar * biprojection
        CHECK(distance2(res.limit, res.scalar * res.witness.element) <=
              1e-8 * std::max(1.0, norm2(res.limit)));
    }
}
