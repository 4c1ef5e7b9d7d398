// JSON-string entry points; the Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsc/classical.hpp"
#include "qsc/coideal.hpp"
#include "qsc/errors.hpp"
#include "qsc/json_io.hpp"
#include "qsc/sweep.hpp"
#include "qsc/verifier.hpp"

namespace py = pybind11;
using namespace qsc;

namespace {

struct Resolved {
  ClassSpec spec;
  PointParams params;
  ReportOptions options;
};

Resolved resolve(const std::string& config) {
  Json j;
  try {
    j = Json::parse(config);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("config is not valid JSON: ") + e.what());
  }
  const CaseConfig c = case_config_from_json(j);
  const ClassSpec spec = spec_of(c);
  return {spec, params_of(c, spec), options_of(c)};
}

std::string verify(const std::string& config, bool timings) {
  const Resolved r = resolve(config);
  const VerificationReport rep = full_report(r.spec, r.params, r.options);
  return (timings ? to_json(rep) : canonical_json(rep)).dump();
}

std::string point(const std::string& config) {
  const Resolved r = resolve(config);
  Json j = to_json(quantum_point_unchecked(r.spec, r.params));
  j["valid"] = validate_params(r.spec, r.params).ok;
  return j.dump();
}

std::string satake(const std::string& config) {
  const Resolved r = resolve(config);
  const QuantumPoint p = quantum_point(r.spec, r.params);
  const ThetaData td = theta_for_class(r.spec, root_system(r.spec.lie));
  return satake_json(td, build_stabilizer(natural_rep(r.spec.lie), td, r.params, p.A)).dump();
}

std::string poisson(const std::string& series, const std::string& matrix) {
  const CMatrix a = eval_at_one(qmatrix_from_json(Json::parse(matrix)));
  if (!a.is_square()) throw InvalidSpec("matrix must be square");
  const ClassicalAlgebraData& data = classical_algebra(LieSeries::from_algebra(series, static_cast<int>(a.rows())));
  const BivectorValue v = bivector_at(data, a);
  Json j;
  j["vanishes"] = v.is_zero();
  if (!v.is_zero()) j["largest_coefficient"] = v.largest().to_string();
  j["antisymmetric"] = v.is_antisymmetric();
  try {
    j["omega_part"] = check_lemma2(data, a).pass;
  } catch (const PreconditionViolated&) {
    j["omega_part"] = nullptr;
  }
  return j.dump();
}

std::string sweep(int Nmax, const std::vector<std::string>& series, unsigned threads) {
  Json rows = Json::array();
  for (const auto& r : run_sweep(enumerate_cases(Nmax, series), threads)) {
    Json x;
    x["case"] = r.case_id;
    x["pass"] = r.pass;
    x["failing"] = r.failing;
    if (!r.error.empty()) x["error"] = r.error;
    rows.push_back(std::move(x));
  }
  return rows.dump();
}

std::vector<std::string> desk() {
  std::vector<std::string> out;
  for (const auto& s : desk_cases()) out.push_back(s.id());
  return out;
}

}  // namespace

PYBIND11_MODULE(_qsymclass, m) {
  py::register_exception<Error>(m, "QscError", PyExc_ValueError);
  m.def("verify", &verify, py::arg("config"), py::arg("timings") = false, py::call_guard<py::gil_scoped_release>());
  m.def("point", &point, py::arg("config"));
  m.def("satake", &satake, py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("poisson", &poisson, py::arg("series"), py::arg("matrix"));
  m.def("sweep", &sweep, py::arg("Nmax"), py::arg("series") = std::vector<std::string>{}, py::arg("threads") = 0u,
        py::call_guard<py::gil_scoped_release>());
  m.def("desk_cases", &desk);
}
