#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "twostate/aggregate.hpp"
#include "twostate/core_model.hpp"
#include "twostate/errors.hpp"
#include "twostate/optimize.hpp"
#include "twostate/profiles.hpp"
#include "twostate/spectral.hpp"

namespace py = pybind11;
using namespace twostate;

namespace {

ActivityProfile tabulated_from_pairs(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<ProfileSample> samples;
  samples.reserve(pairs.size());
  for (const auto& [t, p] : pairs) samples.push_back({t, p});
  return ActivityProfile::tabulated(std::move(samples));
}

}  // namespace

PYBIND11_MODULE(_twostate, m) {
  m.doc() = "Two-state interference model of the aggregate product.";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);

  py::class_<ExchangeFrequency>(m, "ExchangeFrequency")
      .def(py::init<double>(), py::arg("omega"))
      .def_property_readonly("value", &ExchangeFrequency::value);

  py::class_<TwoStateAmplitude>(m, "TwoStateAmplitude")
      .def_readonly("c1", &TwoStateAmplitude::c1)
      .def_readonly("c2", &TwoStateAmplitude::c2)
      .def("norm_squared", &TwoStateAmplitude::norm_squared);

  py::class_<CapacityOperator>(m, "CapacityOperator")
      .def(py::init<double, double, double, double>(), py::arg("q11"), py::arg("q22"),
           py::arg("q12_mod"), py::arg("delta"))
      .def_property_readonly("q11", &CapacityOperator::q11)
      .def_property_readonly("q22", &CapacityOperator::q22)
      .def_property_readonly("q12_mod", &CapacityOperator::q12_mod)
      .def_property_readonly("delta", &CapacityOperator::delta)
      .def("sandwich", &CapacityOperator::sandwich, py::arg("amplitude"));

  m.def("amplitudes_at", &amplitudes_at, py::arg("freq"), py::arg("t"));
  m.def("instantaneous_capacity", &instantaneous_capacity, py::arg("op"), py::arg("freq"),
        py::arg("p_at_t"), py::arg("t"));

  py::enum_<ProfileKind>(m, "ProfileKind")
      .value("step", ProfileKind::step)
      .value("decay", ProfileKind::decay)
      .value("tabulated", ProfileKind::tabulated);

  py::class_<ActivityProfile>(m, "ActivityProfile")
      .def_static("step", &ActivityProfile::step, py::arg("horizon"))
      .def_static("decay", &ActivityProfile::decay, py::arg("gamma"))
      .def_static("tabulated", &tabulated_from_pairs, py::arg("samples"),
                  "Build from (t, p) pairs; renormalized to unit integral.")
      .def_static("load_csv", &load_profile_csv, py::arg("path"))
      .def_property_readonly("kind", &ActivityProfile::kind)
      .def("evaluate", &ActivityProfile::evaluate, py::arg("t"))
      .def("peak_time", &ActivityProfile::peak_time)
      .def("normalization_defect", &ActivityProfile::normalization_defect);

  py::class_<FourierCoefficient>(m, "FourierCoefficient")
      .def_readonly("real_part", &FourierCoefficient::real_part)
      .def_readonly("imag_part", &FourierCoefficient::imag_part)
      .def("magnitude", &FourierCoefficient::magnitude);
  m.def("fourier_coefficient", &fourier_coefficient, py::arg("profile"), py::arg("omega"));

  py::class_<AggregateResult>(m, "AggregateResult")
      .def_readonly("q", &AggregateResult::q)
      .def_readonly("q_star", &AggregateResult::q_star)
      .def_readonly("classical_part", &AggregateResult::classical_part)
      .def_readonly("asymmetry_term", &AggregateResult::asymmetry_term)
      .def_readonly("interference_term", &AggregateResult::interference_term);
  m.def("aggregate_product", &aggregate_product, py::arg("op"), py::arg("profile"),
        py::arg("freq"));
  m.def("scaled_symmetric", &scaled_symmetric, py::arg("q12_ratio"), py::arg("profile"),
        py::arg("freq"), py::arg("delta"));
  m.def("interference_contribution", &interference_contribution, py::arg("op"),
        py::arg("profile"), py::arg("freq"));

  py::enum_<OptimumStatus>(m, "OptimumStatus")
      .value("converged", OptimumStatus::converged)
      .value("at_bracket_edge", OptimumStatus::at_bracket_edge)
      .value("flat", OptimumStatus::flat);

  py::class_<OptimumReport>(m, "OptimumReport")
      .def_readonly("argmax", &OptimumReport::argmax)
      .def_readonly("q_star_max", &OptimumReport::q_star_max)
      .def_readonly("delta_used", &OptimumReport::delta_used)
      .def_readonly("iterations", &OptimumReport::iterations)
      .def_readonly("residual", &OptimumReport::residual)
      .def_readonly("tolerance", &OptimumReport::tolerance)
      .def_readonly("status", &OptimumReport::status);
  m.def("step_model_optimum", &step_model_optimum);
  m.def("decay_model_optimum", &decay_model_optimum);
  m.def("maximize_q_star",
        py::overload_cast<const ActivityProfile&, double, double, double, double>(
            &maximize_q_star),
        py::arg("profile"), py::arg("delta"), py::arg("omega_lo"), py::arg("omega_hi"),
        py::arg("q12_ratio"));
  m.def("maximize_q_star",
        py::overload_cast<const CapacityOperator&, const ActivityProfile&, double, double>(
            &maximize_q_star),
        py::arg("op"), py::arg("profile"), py::arg("omega_lo"), py::arg("omega_hi"));
}
