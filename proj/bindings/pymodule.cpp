// Python bindings for the main operations of the toolkit.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfourier/biprojection.hpp"
#include "qfourier/blockmap.hpp"
#include "qfourier/characters.hpp"
#include "qfourier/inequalities.hpp"
#include "qfourier/ising.hpp"
#include "qfourier/rng.hpp"
#include "qfourier/spectral.hpp"

namespace py = pybind11;
using namespace qf;

namespace {

Shading parse_shading(const std::string& s) {
    if (s == "plus") return Shading::Plus;
    if (s == "minus") return Shading::Minus;
    throw std::invalid_argument("shading must be 'plus' or 'minus', got '" + s + "'");
}

py::dict report_dict(const InequalityReport& r) {
    py::dict d;
    d["check"] = r.check;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["ratio"] = r.ratio;
    d["verdict"] = to_string(r.verdict);
    return d;
}

}  // namespace

PYBIND11_MODULE(_qfourier, m) {
    m.doc() = "2-box Fourier analysis on finite group models";

    py::register_exception<GroupError>(m, "GroupError");
    py::register_exception<ShadingError>(m, "ShadingError");
    py::register_exception<SpectralError>(m, "SpectralError");
    py::register_exception<BiprojectionError>(m, "BiprojectionError");
    py::register_exception<BlockmapError>(m, "BlockmapError");
    py::register_exception<IsingError>(m, "IsingError");

    py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("delta", &FiniteGroup::delta)
        .def_property_readonly("name", &FiniteGroup::name)
        .def_property_readonly("abelian", &FiniteGroup::is_abelian)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("element_name", &FiniteGroup::element_name)
        .def("__repr__",
             [](const FiniteGroup& g) { return "<Group " + g.name() + ">"; });

    m.def("group", &group_from_spec, py::arg("spec"),
          "Builtin group by spec: Zn, S3, D4, Q8, products like Z2xZ4, or a "
          "multiplication-table file path");
    m.def("subgroups",
          [](GroupPtr g) { return subgroups(*g); });

    py::class_<TwoBox>(m, "TwoBox")
        .def_property_readonly("group", [](const TwoBox& x) { return x.group; })
        .def_property_readonly("shading",
                               [](const TwoBox& x) { return to_string(x.shading); })
        .def_property_readonly("coeff", [](const TwoBox& x) { return x.coeff; })
        .def("__add__", [](const TwoBox& a, const TwoBox& b) { return a + b; })
        .def("__sub__", [](const TwoBox& a, const TwoBox& b) { return a - b; })
        .def("__rmul__", [](const TwoBox& a, cplx s) { return s * a; })
        .def("__repr__", [](const TwoBox& x) {
            return "<TwoBox " + to_string(x.shading) + " on " + x.group->name() + ">";
        });

    m.def("box",
          [](GroupPtr g, const std::string& shading, const Eigen::VectorXcd& coeff) {
              Shading s = parse_shading(shading);
              if (coeff.size() != g->order())
                  throw std::invalid_argument("coefficient length != group order");
              TwoBox x = zero_box(g, s);
              x.coeff = coeff;
              return x;
          },
          py::arg("group"), py::arg("shading"), py::arg("coeff"));
    m.def("zero_box", [](GroupPtr g, const std::string& s) {
        return zero_box(g, parse_shading(s));
    });
    m.def("identity_box", [](GroupPtr g, const std::string& s) {
        return identity_box(g, parse_shading(s));
    });
    m.def("jones_projection", [](GroupPtr g, const std::string& s) {
        return jones_projection(g, parse_shading(s));
    });
    m.def("basis_box", [](GroupPtr g, const std::string& s, int e) {
        return basis_box(g, parse_shading(s), e);
    });
    m.def("indicator_box", &indicator_box, py::arg("group"), py::arg("subset"));
    m.def("random_box", [](GroupPtr g, const std::string& s, uint64_t seed) {
        Rng rng(seed);
        return rng.random_box(g, parse_shading(s));
    }, py::arg("group"), py::arg("shading"), py::arg("seed"));

    m.def("multiply", &multiply);
    m.def("coproduct", &coproduct);
    m.def("sft", &sft);
    m.def("sft_inverse", &sft_inverse);
    m.def("adjoint", &adjoint);
    m.def("contragredient", &contragredient);
    m.def("trace", [](const TwoBox& x) { return trace(x); });
    m.def("norm2", &norm2);
    m.def("distance2", &distance2);
    m.def("pnorm", &pnorm, py::arg("x"), py::arg("p"));
    m.def("support_size", &support_size, py::arg("x"), py::arg("rank_tol") = 1e-9);
    m.def("to_matrix", &to_matrix);
    m.def("entropy", &entropy);

    m.def("is_positive", &is_positive, py::arg("x"), py::arg("tol") = 1e-8);
    m.def("is_projection", &is_projection, py::arg("x"), py::arg("tol") = 1e-8);
    m.def("is_biprojection", &is_biprojection, py::arg("x"), py::arg("tol") = 1e-8);

    m.def("subgroup_biprojection",
          [](GroupPtr g, const std::vector<int>& h, const std::string& s) {
              return subgroup_biprojection(g, h, parse_shading(s)).element;
          });
    m.def("enumerate_biprojections", [](GroupPtr g, const std::string& s) {
        py::list out;
        for (const auto& rec : enumerate_biprojections(g, parse_shading(s))) {
            py::dict d;
            d["element"] = rec.element;
            d["subgroup"] = *rec.subgroup;
            d["trace"] = rec.trace;
            out.append(d);
        }
        return out;
    });
    m.def("make_bishift_abelian", &make_bishift_abelian, py::arg("group"),
          py::arg("subgroup"), py::arg("character"), py::arg("coset_rep"));
    m.def("is_bishift", [](const TwoBox& x, double tol) {
        BishiftCertificate c = is_bishift(x, tol);
        py::dict d;
        d["extremal_bi_isometry"] = c.extremal_bi_isometry;
        d["size_product"] = c.size_product;
        d["entropy_identity"] = c.entropy_identity;
        d["young_saturated"] = c.young_saturated;
        d["hy_saturated"] = c.hy_saturated;
        d["partial_isometry_sizes"] = c.partial_isometry_sizes;
        d["consistent"] = c.consistent;
        d["all_true"] = c.all_true;
        return d;
    }, py::arg("x"), py::arg("tol") = 1e-8);

    m.def("young_check", [](const TwoBox& x, const TwoBox& y, double r, double t,
                            double s) { return report_dict(young_check(x, y, r, t, s)); });
    m.def("hausdorff_young_check", [](const TwoBox& x, double t) {
        return report_dict(hausdorff_young_check(x, t));
    });
    m.def("holder_check", [](const TwoBox& x, const TwoBox& y, double p, double q) {
        return report_dict(holder_check(x, y, p, q));
    });
    m.def("sumset_bounds", [](const TwoBox& p, const TwoBox& q) {
        SumsetReport r = sumset_bounds(p, q);
        py::dict d;
        d["value"] = r.value;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["lower_attained"] = r.lower_attained;
        d["upper_attained"] = r.upper_attained;
        return d;
    });
    m.def("inverse_sumset_certify", [](const TwoBox& p, const TwoBox& q) {
        InverseSumsetReport r = inverse_sumset_certify(p, q);
        py::dict d;
        d["c1"] = r.c1;
        d["c2"] = r.c2;
        d["c3"] = r.c3;
        d["c4"] = r.c4;
        d["c5"] = r.c5;
        d["consistent"] = r.consistent;
        d["all_true"] = r.all_true;
        return d;
    });

    m.def("b_lambda", &b_lambda, py::arg("x"), py::arg("lam"));
    m.def("iterate_blockmap",
          [](const TwoBox& x, double lam, long maxit) {
              IterateOptions opt;
              opt.lambda = lam;
              opt.maxit = maxit;
              FlowResult r = iterate_blockmap(x, opt);
              py::dict d;
              d["classification"] = to_string(r.classification);
              d["limit"] = r.limit;
              d["iterations"] = r.iterations;
              d["scalar"] = r.scalar;
              d["residual"] = r.residual;
              d["trajectory_norms"] = r.trajectory_norms;
              d["entropy_trace"] = r.entropy_trace;
              return d;
          },
          py::arg("x"), py::arg("lam") = 0.5, py::arg("maxit") = -1);

    m.def("t_step", &t_step, py::arg("t"), py::arg("delta") = std::sqrt(2.0));
    m.def("classify_beta", [](double beta) {
        IsingPoint p = classify_beta(beta);
        py::dict d;
        d["beta"] = p.beta;
        d["t0"] = p.t0;
        d["phase"] = to_string(p.phase);
        d["iterations"] = p.iterations;
        d["limit_scalar"] = p.limit_scalar;
        d["entropy_final"] = p.entropy_final;
        return d;
    });
    m.def("critical_beta", []() {
        CriticalBeta cb = critical_beta();
        py::dict d;
        d["analytic"] = cb.analytic;
        d["bisection"] = cb.bisection;
        return d;
    });
}
