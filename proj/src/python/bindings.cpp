#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlgs/analysis.hpp"
#include "nlgs/experiment.hpp"
#include "nlgs/extension.hpp"
#include "nlgs/spectral.hpp"

namespace py = pybind11;
using namespace nlgs;

namespace {

BoundaryConstraint bc_from_kwargs(const std::string& type, double value, double q,
                                  double u_ref, double ell) {
    if (type == "dirichlet") return BoundaryConstraint{Dirichlet::constant(value)};
    if (type == "free") return BoundaryConstraint{Free{q, u_ref}};
    if (type == "neumann") return BoundaryConstraint{Neumann{ell, q, u_ref}};
    throw ConfigError("unknown constraint type '" + type + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quadrature solver for the nonlocal Gray-Scott system";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NumericalError>(m, "NumericalError");
    py::register_exception<DivergenceError>(m, "DivergenceError");

    py::class_<Kernel>(m, "Kernel")
        .def_static("exponential", &Kernel::exponential, py::arg("sigma"))
        .def_static("algebraic", &Kernel::algebraic, py::arg("a"))
        .def_property_readonly("shape", &Kernel::shape)
        .def("describe", &Kernel::describe)
        .def("density", &Kernel::density, py::arg("z"))
        .def("antiderivatives",
             [](const Kernel& k, double z) {
                 const KernelPrimitives p = k.antiderivatives(z);
                 return py::make_tuple(p.F, p.F_prime);
             },
             py::arg("z"))
        .def("f1", py::overload_cast<double>(&Kernel::f1, py::const_), py::arg("h"))
        .def("tail_mass", &Kernel::tail_mass, py::arg("R"))
        .def("second_moment", &Kernel::second_moment)
        .def("tail_integral_against",
             [](const Kernel& k, double x, double R,
                const std::function<double(double)>& g, const std::string& side,
                double abs_tol) {
                 return k.tail_integral_against(
                     x, R, g, side == "left" ? ExteriorSide::left : ExteriorSide::right,
                     abs_tol);
             },
             py::arg("x"), py::arg("R"), py::arg("g"), py::arg("side"),
             py::arg("abs_tol") = 1e-12)
        .def("__repr__", &Kernel::describe);

    py::class_<Grid>(m, "Grid")
        .def_static("from_half_width", &Grid::from_half_width, py::arg("L"), py::arg("M"))
        .def_readonly("M", &Grid::M)
        .def_readonly("h", &Grid::h)
        .def_readonly("L", &Grid::L)
        .def_property_readonly("node_count", &Grid::node_count)
        .def("nodes", &Grid::nodes);

    py::class_<BoundaryConstraint>(m, "BoundaryConstraint")
        .def(py::init([](const std::string& type, double value, double q, double u_ref,
                         double ell) {
                 return bc_from_kwargs(type, value, q, u_ref, ell);
             }),
             py::arg("type"), py::arg("value") = 0.0, py::arg("q") = 2.0,
             py::arg("u_ref") = 0.0, py::arg("ell") = 0.0);

    py::class_<WeightSet>(m, "WeightSet")
        .def_readonly("M", &WeightSet::M)
        .def_readonly("f1", &WeightSet::f1)
        .def("at", &WeightSet::at, py::arg("j"))
        .def_property_readonly("values", [](const WeightSet& w) { return w.w; });

    m.def("compute_weights", &compute_weights, py::arg("kernel"), py::arg("grid"));
    m.def("tent", &tent, py::arg("t"), py::arg("h"));

    py::class_<DiscreteOperator>(m, "DiscreteOperator")
        .def("apply", &DiscreteOperator::apply, py::arg("u"),
             "Action of -K on a grid function")
        .def_property_readonly("matrix", &DiscreteOperator::matrix)
        .def_property_readonly("affine", &DiscreteOperator::affine)
        .def_property_readonly("weights", &DiscreteOperator::weights)
        .def("full_linear_matrix", &DiscreteOperator::full_linear_matrix);

    m.def("assemble", &assemble, py::arg("kernel"), py::arg("grid"), py::arg("bc"),
          py::arg("tail_tol") = 1e-12, "Assemble the dense realization of -K");

    py::class_<NeumannExtension>(m, "NeumannExtension")
        .def(py::init<const DiscreteOperator&>(), py::arg("op"))
        .def_property_readonly("inner_begin", &NeumannExtension::inner_begin)
        .def_property_readonly("inner_count", &NeumannExtension::inner_count)
        .def("extend", &NeumannExtension::extend, py::arg("inner"))
        .def("residual_norm", &NeumannExtension::residual_norm, py::arg("full"));

    py::class_<GrayScottParams>(m, "GrayScottParams")
        .def(py::init([](double d_u, double d_v, double A, double B) {
                 GrayScottParams p{d_u, d_v, A, B};
                 p.validate();
                 return p;
             }),
             py::arg("d_u"), py::arg("d_v"), py::arg("A"), py::arg("B"))
        .def_readonly("d_u", &GrayScottParams::d_u)
        .def_readonly("d_v", &GrayScottParams::d_v)
        .def_readonly("A", &GrayScottParams::A)
        .def_readonly("B", &GrayScottParams::B);

    py::class_<SystemState>(m, "SystemState")
        .def(py::init([](Eigen::VectorXd u, Eigen::VectorXd v, double t) {
                 return SystemState{std::move(u), std::move(v), t};
             }),
             py::arg("u"), py::arg("v"), py::arg("t") = 0.0)
        .def_readwrite("u", &SystemState::u)
        .def_readwrite("v", &SystemState::v)
        .def_readwrite("t", &SystemState::t);

    m.def("pulse_initial_conditions",
          py::overload_cast<const Grid&, double, double>(&pulse_initial_conditions),
          py::arg("grid"), py::arg("alpha") = 0.1, py::arg("beta") = 3.0);

    m.def("rhs",
          [](const SystemState& s, const GrayScottParams& p, const DiscreteOperator& ou,
             const DiscreteOperator& ov) {
              const Derivatives d = rhs(s, p, ou, ov);
              return py::make_tuple(d.du, d.dv);
          },
          py::arg("state"), py::arg("params"), py::arg("op_u"), py::arg("op_v"));

    m.def("quasilinear_det", &quasilinear_det, py::arg("state"), py::arg("eps"),
          py::arg("params"));

    m.def("symbol", &symbol, py::arg("kernel"), py::arg("xi"),
          "Fourier symbol of K (gamma_hat - 1)");

    m.def("lp_error",
          py::overload_cast<const Eigen::VectorXd&, const Eigen::VectorXd&, int, double>(
              &lp_error),
          py::arg("u"), py::arg("ref"), py::arg("p"), py::arg("h"));

    m.def("observed_order",
          [](double ec, double ef, double hc, double hf) -> py::object {
              const auto o = observed_order(ec, ef, hc, hf);
              if (!o) return py::none();
              return py::float_(*o);
          },
          py::arg("e_coarse"), py::arg("e_fine"), py::arg("h_coarse"), py::arg("h_fine"));

    py::class_<ProfileMetrics>(m, "ProfileMetrics")
        .def_readonly("max_value", &ProfileMetrics::max_value)
        .def_readonly("max_location", &ProfileMetrics::max_location)
        .def_readonly("plateau_width", &ProfileMetrics::plateau_width)
        .def_readonly("boundary_value", &ProfileMetrics::boundary_value)
        .def_readonly("oscillation_count", &ProfileMetrics::oscillation_count);

    m.def("profile_metrics",
          py::overload_cast<const Eigen::VectorXd&, const Grid&, double>(&profile_metrics),
          py::arg("v"), py::arg("grid"), py::arg("level_fraction") = 0.95);

    // configuration-driven entry points
    m.def("preset_names", &preset_names);
    m.def("preset_json",
          [](const std::string& name, bool desk) { return preset(name, desk).to_json(); },
          py::arg("name"), py::arg("desk") = false);
    m.def("run_experiment_json",
          [](const std::string& json_text, const std::string& out_dir) {
              RunConfig cfg = parse_config(json_text);
              if (!out_dir.empty()) cfg.output.dir = out_dir;
              run_experiment(cfg);
          },
          py::arg("config_json"), py::arg("out_dir") = "",
          "Parse a configuration document and run it");

    m.def("simulate_json",
          [](const std::string& json_text, const std::string& out_dir) {
              RunConfig cfg = parse_config(json_text);
              if (!out_dir.empty()) cfg.output.dir = out_dir;
              cfg.validate();
              if (cfg.experiment != ExperimentKind::simulate)
                  throw ConfigError("simulate_json expects a 'simulate' configuration");
              const RunResult r = simulate_into(cfg, cfg.output.dir);
              py::dict out;
              out["u"] = r.final_state.u;
              out["v"] = r.final_state.v;
              out["t"] = r.final_state.t;
              out["steps"] = r.steps;
              out["reason"] = r.reason == StopReason::steady ? "steady" : "nmax";
              out["max_update_history"] = r.max_update_history;
              return out;
          },
          py::arg("config_json"), py::arg("out_dir") = "");
}
