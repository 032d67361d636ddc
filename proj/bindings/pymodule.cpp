#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ternwb/cyclotomic.hpp"
#include "ternwb/relations.hpp"
#include "ternwb/report.hpp"
#include "ternwb/spectral.hpp"
#include "ternwb/suites.hpp"

namespace py = pybind11;
using namespace ternwb;
using exactfield::Cyclo12;

namespace {

py::dict record_to_dict(const cli::CheckRecord& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["check_id"] = r.check_id;
  d["paper_ref"] = r.paper_ref;
  d["status"] = r.status;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  if (r.residual) d["residual"] = *r.residual;
  return d;
}

gradedalg::RelationVariant variant_arg(const std::string& name) {
  auto v = gradedalg::variant_from_name(name);
  if (!v) throw std::invalid_argument("unknown relation variant: " + name);
  return *v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "verification workbench core: exact cyclotomic arithmetic, graded "
      "relation algebras, and sextic-oscillator numerics";

  py::class_<Cyclo12>(m, "Cyclo12")
      .def(py::init<>())
      .def_static("zero", &Cyclo12::zero)
      .def_static("one", &Cyclo12::one)
      .def_static("from_int", &Cyclo12::from_int)
      .def_static("zeta", &Cyclo12::zeta)
      .def_static("i_unit", &Cyclo12::i_unit)
      .def_static("j_unit", &Cyclo12::j_unit)
      .def_static("j2_unit", &Cyclo12::j2_unit)
      .def_static("sqrt3", &Cyclo12::sqrt3)
      .def("pow", &Cyclo12::pow)
      .def("is_zero", &Cyclo12::is_zero)
      .def("is_real", &Cyclo12::is_real)
      .def("to_complex", &Cyclo12::to_complex)
      .def("conj", [](const Cyclo12& a) { return conj(a); })
      .def("inv", [](const Cyclo12& a) { return inv(a); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &Cyclo12::to_string)
      .def("__str__", &Cyclo12::to_string);

  m.def(
      "run_suite",
      [](const std::string& name, unsigned long long seed, int jobs) {
        cli::RunConfig cfg;
        cfg.seed = seed;
        cfg.jobs = jobs;
        std::vector<std::string> names;
        if (name == "all")
          names = {"algebra", "clifford", "forms", "heisenberg"};
        else
          names = {name};
        py::list out;
        for (const auto& r : cli::run_suites(names, cfg))
          out.append(record_to_dict(r));
        return out;
      },
      py::arg("name"), py::arg("seed") = 1729, py::arg("jobs") = 1,
      "run a verification suite and return its check records");

  m.def(
      "hilbert_dims",
      [](const std::string& variant, int N) {
        auto r = gradedalg::hilbert_check(variant_arg(variant), N);
        return std::vector<int>(r.dims.begin(), r.dims.end());
      },
      py::arg("variant"), py::arg("N"),
      "graded dimensions in degrees 0..4 of a Grassmann-type variant");

  m.def(
      "quotient_dim",
      [](const std::string& variant, int N, int degree) {
        return gradedalg::quotient_dim(variant_arg(variant), N, degree);
      },
      py::arg("variant"), py::arg("N"), py::arg("degree"));

  m.def(
      "surjection",
      [](const std::string& src, const std::string& dst, int N) {
        return gradedalg::surjection_check(variant_arg(src), variant_arg(dst), N);
      },
      py::arg("src"), py::arg("dst"), py::arg("N"),
      "true if the quotient by src relations surjects onto the dst quotient");

  m.def(
      "sextic_spectrum",
      [](int M) {
        auto sp = spectral::sextic_spectrum(M);
        py::dict d;
        d["M"] = sp.M;
        d["eigenvalues"] = sp.eigenvalues;
        d["error_estimates"] = sp.error_estimates;
        d["converged_count"] = sp.converged_count();
        return d;
      },
      py::arg("M") = 400);

  m.def(
      "fd_sextic",
      [](double L, double h, int count) {
        auto fd = spectral::fd_oracle_sextic(L, h, count);
        py::dict d;
        d["eigenvalues"] = fd.eigenvalues;
        d["boundary_mass"] = fd.boundary_mass;
        d["resolution_warning"] = fd.resolution_warning;
        return d;
      },
      py::arg("L") = 7.0, py::arg("h") = 0.025, py::arg("count") = 6);

  m.def(
      "series_match",
      [](int branch, int terms) {
        auto sol = spectral::series_solution(branch, terms);
        auto match = spectral::match_series(sol);
        py::dict d;
        d["branch"] = match.branch;
        d["p_derived"] = exactfield::to_string(match.p_derived);
        d["q_derived"] = exactfield::to_string(match.q_derived);
        d["p_printed"] = exactfield::to_string(match.p_printed);
        d["q_printed"] = exactfield::to_string(match.q_printed);
        d["printed_matches"] = match.printed_matches;
        d["argument_minus_matches"] = match.minus_sign_matches;
        d["argument_plus_matches"] = match.plus_sign_matches;
        d["printed_first_gap"] = match.printed_residual;
        d["ode_residual"] = spectral::series_ode_residual(sol);
        return d;
      },
      py::arg("branch"), py::arg("terms") = 40);

  m.def("action_integral", &spectral::action_integral, py::arg("E"),
        py::arg("m") = 1.0, py::arg("k") = 1.0);
  m.def("gamma_closed_form", &spectral::gamma_closed_form, py::arg("E"),
        py::arg("m") = 1.0, py::arg("k") = 1.0);
  m.def("en_coefficient", &spectral::en_coefficient);

  m.def(
      "energy_levels",
      [](int n_max, const std::string& convention) {
        py::list out;
        for (const auto& r :
             spectral::energy_levels(n_max, convention, 1.0, 1.0, 1.0)) {
          py::dict d;
          d["n"] = r.n;
          d["E_n"] = r.E_n;
          d["action"] = r.action;
          d["convention"] = r.convention;
          out.append(d);
        }
        return out;
      },
      py::arg("n_max") = 10, py::arg("convention") = "standard_2pi_half");

  m.def(
      "records_json",
      [](const std::string& name, unsigned long long seed) {
        cli::RunConfig cfg;
        cfg.seed = seed;
        std::vector<std::string> names;
        if (name == "all")
          names = {"algebra", "clifford", "forms", "heisenberg"};
        else
          names = {name};
        return cli::records_to_json(cli::run_suites(names, cfg));
      },
      py::arg("name") = "all", py::arg("seed") = 1729,
      "render suite records as the canonical report.json text");
}
