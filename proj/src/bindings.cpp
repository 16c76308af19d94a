#include "bifrac/asymptotics.hpp"
#include "bifrac/covariance.hpp"
#include "bifrac/estimator.hpp"
#include "bifrac/montecarlo.hpp"
#include "bifrac/simulate.hpp"
#include "bifrac/specialfn.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bifrac;

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "bivariate fractal-index estimation core";

    mod.def("gamma_fn", &gamma_fn, py::arg("x"));
    mod.def("bessel_k", &bessel_k, py::arg("nu"), py::arg("x"));
    mod.def("matern_correlation", &matern_correlation, py::arg("h"), py::arg("nu"),
            py::arg("a"));
    mod.def("matern_b1", &matern_b1, py::arg("nu"), py::arg("a"));
    mod.def("trajectory_dimension", &trajectory_dimension, py::arg("alpha11"),
            py::arg("alpha22"));
    mod.def("component_graph_dimension", &component_graph_dimension, py::arg("alpha"));

    py::class_<MaternParams>(mod, "MaternParams")
        .def(py::init<>())
        .def_readwrite("nu11", &MaternParams::nu11)
        .def_readwrite("nu22", &MaternParams::nu22)
        .def_readwrite("nu12", &MaternParams::nu12)
        .def_readwrite("a11", &MaternParams::a11)
        .def_readwrite("a22", &MaternParams::a22)
        .def_readwrite("a12", &MaternParams::a12)
        .def_readwrite("sigma1", &MaternParams::sigma1)
        .def_readwrite("sigma2", &MaternParams::sigma2)
        .def_readwrite("rho", &MaternParams::rho);

    py::class_<LocalExpansion>(mod, "LocalExpansion")
        .def(py::init<>())
        .def_readwrite("sigma1_sq", &LocalExpansion::sigma1_sq)
        .def_readwrite("sigma2_sq", &LocalExpansion::sigma2_sq)
        .def_readwrite("rho", &LocalExpansion::rho)
        .def_readwrite("c11", &LocalExpansion::c11)
        .def_readwrite("c22", &LocalExpansion::c22)
        .def_readwrite("c12", &LocalExpansion::c12)
        .def_readwrite("alpha11", &LocalExpansion::alpha11)
        .def_readwrite("alpha22", &LocalExpansion::alpha22)
        .def_readwrite("alpha12", &LocalExpansion::alpha12)
        .def_readwrite("beta11", &LocalExpansion::beta11)
        .def_readwrite("beta22", &LocalExpansion::beta22)
        .def_readwrite("beta12", &LocalExpansion::beta12)
        .def("equality_case", &LocalExpansion::equality_case);

    mod.def("local_expansion", &local_expansion, py::arg("params"));
    mod.def(
        "check_validity",
        [](const LocalExpansion& exp) {
            const ValidityResult v = check_validity(exp);
            return py::make_tuple(v.valid, v.reason);
        },
        py::arg("expansion"));
    mod.def(
        "check_matern_validity",
        [](const MaternParams& p) {
            const ValidityResult v = check_matern_validity(p);
            return py::make_tuple(v.valid, v.reason);
        },
        py::arg("params"));

    py::class_<CovarianceModel, std::shared_ptr<CovarianceModel>>(mod, "CovarianceModel")
        .def("evaluate", &CovarianceModel::evaluate, py::arg("t"))
        .def_property_readonly("expansion", &CovarianceModel::expansion);

    py::class_<MaternModel, CovarianceModel, std::shared_ptr<MaternModel>>(mod,
                                                                           "MaternModel")
        .def(py::init<const MaternParams&>(), py::arg("params"));

    py::class_<SamplePath>(mod, "SamplePath")
        .def(py::init<>())
        .def_readwrite("n", &SamplePath::n)
        .def_readwrite("x1", &SamplePath::x1)
        .def_readwrite("x2", &SamplePath::x2);

    mod.def(
        "simulate_path",
        [](const CovarianceModel& model, int n, std::uint64_t base_seed,
           std::uint64_t replicate) {
            return simulate_path(model, n, SeedSpec{base_seed, replicate});
        },
        py::arg("model"), py::arg("n"), py::arg("base_seed"), py::arg("replicate") = 0);

    py::class_<WeightVector>(mod, "WeightVector")
        .def_readonly("L", &WeightVector::L)
        .def("m", &WeightVector::m);

    mod.def("ols_weights", &ols_weights, py::arg("m"));
    mod.def("gls_weights", &gls_weights, py::arg("m"), py::arg("n"),
            py::arg("nu_plugin"));
    mod.def("zbar", &zbar, py::arg("path"), py::arg("u"), py::arg("component"));
    mod.def("estimate_alpha", &estimate_alpha, py::arg("path"), py::arg("component"),
            py::arg("weights"));

    py::class_<JointEstimate>(mod, "JointEstimate")
        .def_readonly("alpha11_hat", &JointEstimate::alpha11_hat)
        .def_readonly("alpha22_hat", &JointEstimate::alpha22_hat)
        .def_readonly("nu11_hat", &JointEstimate::nu11_hat)
        .def_readonly("nu22_hat", &JointEstimate::nu22_hat)
        .def_readonly("dim_hat", &JointEstimate::dim_hat);

    mod.def("estimate_joint", &estimate_joint, py::arg("path"), py::arg("w1"),
            py::arg("w2"));
    mod.def("default_dilations", &default_dilations, py::arg("n"));

    mod.def("sigma0_marginal", &sigma0_marginal, py::arg("h"), py::arg("u"),
            py::arg("v"), py::arg("alpha"), py::arg("c"));
    mod.def("tau", &tau, py::arg("u"), py::arg("alpha"), py::arg("c"));
    mod.def("psi_rate", &psi_rate, py::arg("x1"), py::arg("x2"));
    mod.def(
        "phi0_matrix",
        [](const LocalExpansion& exp, int m, double tol) {
            return phi0_matrix(exp, m, tol).matrix;
        },
        py::arg("expansion"), py::arg("m"), py::arg("tol") = 1.0e-10);

    py::class_<AsymptoticLaw>(mod, "AsymptoticLaw")
        .def_readonly("covariance", &AsymptoticLaw::covariance)
        .def_readonly("correlation", &AsymptoticLaw::correlation);

    mod.def("asymptotic_law", &asymptotic_law, py::arg("expansion"), py::arg("w1"),
            py::arg("w2"), py::arg("tol") = 1.0e-10);

    py::register_exception<NotPositiveDefinite>(mod, "NotPositiveDefinite");
    py::register_exception<DegeneratePath>(mod, "DegeneratePathError");
}
