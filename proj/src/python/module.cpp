#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deficit/channel.hpp"
#include "deficit/measures.hpp"
#include "deficit/optimize.hpp"
#include "deficit/scenarios.hpp"

namespace py = pybind11;
using namespace deficit;

namespace {

ComplexMatrix matrix_from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Complex>> matrix_to_rows(const ComplexMatrix& m) {
  std::vector<std::vector<Complex>> rows(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return rows;
}

Objective parse_objective(const std::string& name) {
  if (name == "chv") return Objective::ClassicalCorrelation;
  if (name == "dcl") return Objective::ClassicalDeficit;
  throw std::invalid_argument("objective must be 'chv' or 'dcl'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "one-way information deficits and classical correlations of small "
              "bipartite quantum states";

  py::class_<DensityMatrix>(mod, "DensityMatrix")
      .def(py::init([](std::size_t da, std::size_t db,
                       const std::vector<std::vector<Complex>>& rows) {
             return DensityMatrix(Dims{da, db}, matrix_from_rows(rows));
           }),
           py::arg("dim_a"), py::arg("dim_b"), py::arg("matrix"))
      .def_property_readonly("dim_a", [](const DensityMatrix& r) { return r.dims().a; })
      .def_property_readonly("dim_b", [](const DensityMatrix& r) { return r.dims().b; })
      .def("matrix", [](const DensityMatrix& r) { return matrix_to_rows(r.matrix()); });

  py::class_<ProjectiveMeasurement>(mod, "ProjectiveMeasurement")
      .def(py::init<std::vector<std::vector<Complex>>>(), py::arg("basis"))
      .def_static("computational", &ProjectiveMeasurement::computational, py::arg("dim"))
      .def_static("qubit", &ProjectiveMeasurement::qubit, py::arg("theta"), py::arg("phi"))
      .def_static("eigenbasis",
                  [](const DensityMatrix& rho_a) {
                    return ProjectiveMeasurement::eigenbasis(rho_a.matrix());
                  },
                  py::arg("rho_a"))
      .def_property_readonly("basis", &ProjectiveMeasurement::basis);

  py::class_<MeasuredQuantities>(mod, "MeasuredQuantities")
      .def_readonly("c_hv", &MeasuredQuantities::classical_correlation)
      .def_readonly("delta_cl", &MeasuredQuantities::classical_deficit)
      .def_readonly("deficit_q", &MeasuredQuantities::quantum_deficit)
      .def_readonly("mutual_information", &MeasuredQuantities::mutual_information)
      .def_readonly("alice_entropy_cost", &MeasuredQuantities::alice_entropy_cost)
      .def_readonly("outcome_weights", &MeasuredQuantities::outcome_weights)
      .def_readonly("outcome_entropies", &MeasuredQuantities::outcome_entropies);

  py::class_<OptimizeResult>(mod, "OptimizeResult")
      .def_readonly("value", &OptimizeResult::value)
      .def_readonly("measurement", &OptimizeResult::measurement)
      .def_readonly("quantities", &OptimizeResult::quantities)
      .def_readonly("evaluations", &OptimizeResult::evaluations)
      .def_readonly("converged", &OptimizeResult::converged);

  mod.def("pure_state",
          [](std::size_t da, std::size_t db, const std::vector<Complex>& amplitudes) {
            return PureState(Dims{da, db}, amplitudes).to_density();
          },
          py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"));

  mod.def("entropy", &entropy, py::arg("rho"));
  mod.def("partial_trace",
          [](const DensityMatrix& rho, const std::string& keep) {
            if (keep == "A") return partial_trace(rho, Subsystem::A);
            if (keep == "B") return partial_trace(rho, Subsystem::B);
            throw std::invalid_argument("keep must be 'A' or 'B'");
          },
          py::arg("rho"), py::arg("keep"));
  mod.def("mutual_information", &mutual_information, py::arg("rho"));
  mod.def("i_go", &i_go, py::arg("rho"));
  mod.def("i_lo", &i_lo, py::arg("rho"));

  mod.def("evaluate_measurement", &evaluate_measurement, py::arg("rho"), py::arg("m"));
  mod.def("dephase_alice", &dephase_alice, py::arg("rho"), py::arg("m"));

  mod.def("maximize",
          [](const DensityMatrix& rho, const std::string& objective, std::size_t starts,
             std::uint64_t seed, bool support_restricted) {
            OptimizeOptions o;
            o.starts = starts;
            o.seed = seed;
            o.support_restricted = support_restricted;
            return maximize(rho, parse_objective(objective), o);
          },
          py::arg("rho"), py::arg("objective") = "chv", py::arg("starts") = 24,
          py::arg("seed") = 20240901, py::arg("support_restricted") = false);

  mod.def("build_sw99_state", &build_sw99_state);
  mod.def("build_knr01_state", &build_knr01_state);
  mod.def("orthogonal_chi_scan",
          [](std::size_t theta_steps, std::size_t phi_steps, std::size_t weight_steps) {
            return orthogonal_ensemble_scan(make_damping_channel(), theta_steps, phi_steps,
                                            weight_steps);
          },
          py::arg("theta_steps") = 64, py::arg("phi_steps") = 128,
          py::arg("weight_steps") = 41);
}
