// Python bindings for the collocation solver core.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "trigbvp/errors.hpp"
#include "trigbvp/expression.hpp"
#include "trigbvp/linear_solver.hpp"
#include "trigbvp/newton_solver.hpp"
#include "trigbvp/problem_spec.hpp"
#include "trigbvp/test_problems.hpp"
#include "trigbvp/trig_interp.hpp"

namespace py = pybind11;
using namespace trigbvp;

namespace {

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

BoundaryConditions boundary_from_args(const std::string& type, double alpha, double beta) {
  const auto parsed = boundary_type_from_name(type);
  if (!parsed) throw InvalidInputError("unknown boundary type '" + type + "'");
  return make_boundary(*parsed, alpha, beta);
}

expr::Expression parse_expr(const std::string& text) { return expr::Expression::parse(text); }

LinearProblem linear_from_expressions(const std::string& p, const std::string& q,
                                      const std::string& r, double s, double e,
                                      const BoundaryConditions& bc) {
  const auto pe = parse_expr(p);
  const auto qe = parse_expr(q);
  const auto re = parse_expr(r);
  return LinearProblem{[pe](double x) { return pe.eval(x); },
                       [qe](double x) { return qe.eval(x); },
                       [re](double x) { return re.eval(x); }, s, e, bc};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sine-series collocation solver for two-point boundary value problems";

  py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<OutOfDomainError>(m, "OutOfDomainError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);

  py::class_<OddTrigPoly>(m, "OddTrigPoly")
      .def(py::init<double, std::vector<double>>(), py::arg("half_period"), py::arg("coeffs"))
      .def_property_readonly("half_period", &OddTrigPoly::half_period)
      .def_property_readonly("coeffs",
                             [](const OddTrigPoly& p) { return p.coeffs(); })
      .def("__call__", &OddTrigPoly::eval, py::arg("x"), py::arg("order") = 0);

  py::class_<CutoffSpec>(m, "CutoffSpec")
      .def(py::init<double, double, double>(), py::arg("s"), py::arg("e"), py::arg("delta"));

  m.def("cutoff_eval", &cutoff_eval, py::arg("spec"), py::arg("x"),
        "Smooth window: 1 on [s, e], 0 outside [s-delta, e+delta]");

  m.def("interpolate_odd", &interpolate_odd, py::arg("samples"), py::arg("half_period"),
        "Sine interpolant of odd-periodic samples on [-b, b)");

  py::class_<OdeGrid>(m, "OdeGrid")
      .def_readonly("M", &OdeGrid::M)
      .def_readonly("m", &OdeGrid::m)
      .def_readonly("n", &OdeGrid::n)
      .def_readonly("s", &OdeGrid::s)
      .def_readonly("e", &OdeGrid::e)
      .def_readonly("delta", &OdeGrid::delta)
      .def_readonly("b", &OdeGrid::b)
      .def_readonly("o", &OdeGrid::o)
      .def_readonly("points", &OdeGrid::points);

  m.def("build_grid", &build_grid, py::arg("s"), py::arg("e"), py::arg("M"), py::arg("m"));

  py::class_<BoundaryConditions>(m, "BoundaryConditions")
      .def(py::init(&boundary_from_args), py::arg("type"), py::arg("alpha"), py::arg("beta"))
      .def_readonly("alpha", &BoundaryConditions::alpha)
      .def_readonly("beta", &BoundaryConditions::beta);

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("V", [](const SolveReport& r) { return to_vector(r.V); })
      .def_property_readonly("B", [](const SolveReport& r) { return to_vector(r.B); })
      .def_readonly("a0", &SolveReport::a0)
      .def_readonly("a1", &SolveReport::a1)
      .def_property_readonly(
          "solvability",
          [](const SolveReport& r) { return solvability_name(r.solvability); })
      .def_readonly("rank_phi", &SolveReport::rank_phi)
      .def_readonly("rank_aug", &SolveReport::rank_aug)
      .def_readonly("condition_estimate", &SolveReport::condition_estimate)
      .def_readonly("residual_max", &SolveReport::residual_max)
      .def_readonly("boundary_errors", &SolveReport::boundary_errors)
      .def_readonly("newton_trace", &SolveReport::newton_trace)
      .def("__call__",
           [](const SolveReport& r, double x, int order) {
             return evaluate_solution(r, x, order);
           },
           py::arg("x"), py::arg("order") = 0);

  m.def(
      "solve_linear",
      [](const std::string& p, const std::string& q, const std::string& r, double s,
         double e, const BoundaryConditions& bc, int q_exp, std::size_t padding,
         double rank_tolerance) {
        const std::size_t M = std::size_t{1} << q_exp;
        LinearOptions options;
        options.rank_tolerance = rank_tolerance;
        return solve_linear(linear_from_expressions(p, q, r, s, e, bc), M,
                            padding == 0 ? default_padding(M) : padding, options);
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("e"), py::arg("bc"),
      py::arg("q_exp") = 7, py::arg("padding") = 0, py::arg("rank_tolerance") = 1e-10,
      "Direct solve of y'' = p(x) y' + q(x) y + r(x); coefficients are expressions in x");

  m.def(
      "solve_linear_callable",
      [](const std::function<double(double)>& p, const std::function<double(double)>& q,
         const std::function<double(double)>& r, double s, double e,
         const BoundaryConditions& bc, int q_exp, std::size_t padding) {
        const std::size_t M = std::size_t{1} << q_exp;
        return solve_linear(LinearProblem{p, q, r, s, e, bc}, M,
                            padding == 0 ? default_padding(M) : padding);
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"), py::arg("e"), py::arg("bc"),
      py::arg("q_exp") = 7, py::arg("padding") = 0,
      "Same as solve_linear but with Python callables for p, q, r");

  m.def(
      "solve_nonlinear",
      [](const std::string& f, const std::optional<std::string>& df_dv,
         const std::optional<std::string>& df_du, double s, double e,
         const BoundaryConditions& bc, int q_exp, std::size_t padding) {
        nlohmann::json j;
        j["kind"] = "nonlinear";
        j["interval"] = {s, e};
        j["f"] = f;
        if (df_dv) j["df_dv"] = *df_dv;
        if (df_du) j["df_du"] = *df_du;
        j["boundary"] = {{"type", "neumann"}, {"alpha", bc.alpha}, {"beta", bc.beta}};
        ProblemSpec spec = ProblemSpec::from_json(j);
        NonlinearProblem problem = spec.nonlinear_problem();
        problem.bc = bc;
        const std::size_t M = std::size_t{1} << q_exp;
        return solve_nonlinear(problem, M, padding == 0 ? default_padding(M) : padding);
      },
      py::arg("f"), py::arg("df_dv") = std::nullopt, py::arg("df_du") = std::nullopt,
      py::arg("s") = 0.0, py::arg("e") = 1.0, py::arg("bc") = BoundaryConditions(),
      py::arg("q_exp") = 7, py::arg("padding") = 0,
      "Newton solve of y'' = f(x, y, y'); f and optional partials are expressions in x, v, u");

  m.def(
      "solve_named",
      [](const std::string& name, double beta_scale, std::optional<double> theta, int q_exp,
         std::size_t padding) {
        nlohmann::json j;
        j["kind"] = "named";
        j["name"] = name;
        j["beta_scale"] = beta_scale;
        if (theta) j["theta"] = *theta;
        const ProblemSpec spec = ProblemSpec::from_json(j);
        const TestProblem problem = spec.named_problem();
        const std::size_t M = std::size_t{1} << q_exp;
        const SolveReport report =
            solve_linear(problem.linear(), M, padding == 0 ? default_padding(M) : padding);
        const ErrorReport err = measure_error(report, problem);
        return py::make_tuple(report, err.max_grid_error);
      },
      py::arg("name"), py::arg("beta_scale") = 1.0, py::arg("theta") = std::nullopt,
      py::arg("q_exp") = 7, py::arg("padding") = 0,
      "Solve a built-in benchmark problem; returns (report, max error vs the base solution)");

  m.def("parse_print", [](const std::string& text) {
    return expr::Expression::parse(text).print();
  });
  m.def("eval_expression",
        [](const std::string& text, double x, double v, double u) {
          return expr::Expression::parse(text).eval(x, v, u);
        },
        py::arg("text"), py::arg("x") = 0.0, py::arg("v") = 0.0, py::arg("u") = 0.0);
}
