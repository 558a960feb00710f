#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galdef/brauer_recipe.hpp"
#include "galdef/cohomology.hpp"
#include "galdef/congruence.hpp"
#include "galdef/errors.hpp"
#include "galdef/lifting.hpp"
#include "galdef/obstruction.hpp"
#include "galdef/version.hpp"

namespace py = pybind11;
using namespace galdef;

namespace {

py::dict group_invariants(std::uint32_t ell, std::uint64_t q) {
    auto g = make_group(ell, q);
    py::dict out;
    out["ell"] = g->ell();
    out["q"] = g->q();
    out["ord_q"] = g->ord_q();
    out["m"] = g->m();
    out["order"] = g->order();
    return out;
}

py::dict levelraise(std::uint32_t ell, std::uint64_t q, std::uint32_t alpha, std::uint32_t beta) {
    auto h = levelraise_h0(ell, q, alpha, beta);
    py::dict out;
    out["dim"] = h.dim;
    out["generator_tags"] = h.generator_tags;
    return out;
}

std::uint32_t explicit_b_py(std::uint32_t ell, std::uint64_t q, std::uint32_t i1,
                            std::uint32_t ip1, std::uint32_t i2, std::uint32_t ip2) {
    auto g = make_group(ell, q);
    return explicit_b(*g, g->make(i1, ip1), g->make(i2, ip2));
}

py::dict recipe_compare(std::uint32_t ell, std::uint64_t q) {
    RecipeComparison cmp = compare_recipe_to_formula(ell, q);
    py::dict out;
    out["uniform"] = cmp.uniform;
    out["lambda"] = cmp.lambda;
    out["pairs_checked"] = cmp.pairs_checked;
    return out;
}

std::uint32_t cohomology_dim_py(std::uint32_t ell, std::uint64_t q, const std::string& module,
                                std::uint32_t degree, std::uint32_t alpha, std::uint32_t beta,
                                const std::string& view_name) {
    auto group = make_group(ell, q);
    auto view = view_name == "tau" ? GroupView::tau_cyclic(group) : GroupView::full(group);
    std::shared_ptr<const GaloisModule> mod;
    if (module == "trivial") {
        mod = trivial_module(group);
    } else if (module == "mu") {
        mod = mu_module(group);
    } else {
        ResidualFrobenius frob(ell, alpha, beta);
        if (module == "ad0")
            mod = build_adjoint(group, frob, false);
        else if (module == "ad0-twisted")
            mod = build_adjoint(group, frob, true);
        else if (module == "ad")
            mod = build_ad(group, frob, false);
        else if (module == "ad-twisted")
            mod = build_ad(group, frob, true);
        else
            throw invalid_parameters("unknown module " + module);
    }
    return cohomology_dim(*view, *mod, degree);
}

py::dict standing(std::uint64_t N, std::uint32_t ell) {
    StandingCheck s = check_standing(N, ell);
    py::dict out;
    out["ok"] = s.ok;
    out["violations"] = s.violations;
    return out;
}

py::dict ars(std::uint64_t N, std::uint64_t m_deg) {
    ArsPrimes a = ars_congruence_primes(N, m_deg);
    py::dict out;
    out["full"] = a.full;
    out["refined"] = a.refined;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite tame-quotient deformation obstruction calculator";
    m.attr("__version__") = kVersion;

    py::register_exception<invalid_parameters>(m, "InvalidParameters", PyExc_ValueError);
    py::register_exception<data_error>(m, "DataError", PyExc_ValueError);
    py::register_exception<too_large>(m, "TooLarge", PyExc_RuntimeError);

    m.def("group_invariants", &group_invariants, py::arg("ell"), py::arg("q"),
          "orders and exponents of the tame quotient Gamma(ell, q)");
    m.def("levelraise_h0", &levelraise, py::arg("ell"), py::arg("q"), py::arg("alpha"),
          py::arg("beta"),
          "dimension and generator tags of the twisted trace-zero invariants");
    m.def("explicit_b", &explicit_b_py, py::arg("ell"), py::arg("q"), py::arg("i1"),
          py::arg("ip1"), py::arg("i2"), py::arg("ip2"),
          "closed-form exponent at a pair of normal-form elements");
    m.def("recipe_compare", &recipe_compare, py::arg("ell"), py::arg("q"),
          "scalar comparison of the lattice construction against the closed form");
    m.def("cohomology_dim", &cohomology_dim_py, py::arg("ell"), py::arg("q"), py::arg("module"),
          py::arg("degree"), py::arg("alpha") = 0, py::arg("beta") = 0, py::arg("view") = "full",
          "dim H^degree of a named module over Gamma(ell, q)");
    m.def("sturm_bound", &sturm_bound, py::arg("N"), py::arg("k"),
          "floor(k * mu / 12), clamped to 1");
    m.def("supercuspidal_vanishes", &supercuspidal_vanishes, py::arg("p"), py::arg("ell"));
    m.def("principal_series_nonzero", &principal_series_nonzero, py::arg("p"), py::arg("ell"));
    m.def("steinberg_h0", &steinberg_h0, py::arg("ell"), py::arg("p"));
    m.def("check_standing", &standing, py::arg("N"), py::arg("ell"));
    m.def("ars_congruence_primes", &ars, py::arg("N"), py::arg("m_deg"));
}
