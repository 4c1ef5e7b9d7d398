#include "qsc/json_io.hpp"

#include "qsc/errors.hpp"

namespace qsc {

Json to_json(const CaseConfig& c) {
  Json j;
  j["series"] = c.series;
  j["N"] = c.N;
  j["family"] = c.family;
  j["m"] = c.m;
  j["sign"] = c.sign;
  j["unit"] = c.unit;
  Json p = Json::object();
  for (const auto& [k, v] : c.params) p[k] = v;
  j["params"] = p;
  j["checks"] = c.checks;
  return j;
}

CaseConfig case_config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidSpec("config must be a JSON object");
  static const std::vector<std::string> known = {"series", "N", "family", "m", "sign", "unit", "params", "checks"};
  for (const auto& [k, v] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) throw InvalidSpec("unknown config key '" + k + "'");
  }
  CaseConfig c;
  try {
    if (!j.contains("series") || !j.contains("N")) throw InvalidSpec("config needs 'series' and 'N'");
    c.series = j.at("series").get<std::string>();
    c.N = j.at("N").get<int>();
    if (j.contains("family")) c.family = j.at("family").get<std::string>();
    if (j.contains("m")) c.m = j.at("m").get<int>();
    if (j.contains("sign")) c.sign = j.at("sign").get<int>();
    if (j.contains("unit")) c.unit = j.at("unit").get<int>();
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) {
        c.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
      }
    }
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("malformed config: ") + e.what());
  }
  return c;
}

ClassSpec spec_of(const CaseConfig& c) {
  Family fam;
  if (c.family == "t2" || c.family == "T2") {
    fam = Family::T2;
  } else if (c.family == "t4" || c.family == "T4") {
    fam = Family::T4;
  } else {
    throw InvalidSpec("family must be t2 or t4, got '" + c.family + "'");
  }
  if (c.sign != 1 && c.sign != -1) throw InvalidSpec("sign must be +1 or -1");
  return ClassSpec::make(LieSeries::from_algebra(c.series, c.N), fam, fam == Family::T2 ? c.m : 0, c.sign, c.unit);
}

PointParams params_of(const CaseConfig& c, const ClassSpec& spec) {
  std::map<int, QScalar> overrides;
  for (const auto& [name, literal] : c.params) overrides[param_index(spec, name)] = parse_scalar(literal);
  return complete_params(spec, overrides);
}

ReportOptions options_of(const CaseConfig& c) {
  ReportOptions o;
  const auto& groups = check_groups();
  for (const auto& g : c.checks) {
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) throw InvalidSpec("unknown check group '" + g + "'");
    o.groups.insert(g);
  }
  return o;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidSpec("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw InvalidSpec("matrix rows must be non-empty arrays");
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || row.size() != cols) throw InvalidSpec("matrix rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& x = row.at(c);
      m(r, c) = parse_scalar(x.is_string() ? x.get<std::string>() : x.dump());
    }
  }
  return m;
}

Json to_json(const CheckRecord& r, bool with_timing) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.mismatch) {
    j["mismatch"] = {{"row", r.mismatch->row + 1}, {"col", r.mismatch->col + 1}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
  }
  if (with_timing) j["ms"] = r.ms;
  return j;
}

Json canonical_json(const VerificationReport& r) {
  Json j;
  j["case"] = r.case_id;
  j["param_digest"] = r.param_digest;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j = canonical_json(r);
  Json t = Json::object();
  for (const auto& c : r.checks) {
    if (c.ms > 0) t[c.name] = c.ms;
  }
  t["total"] = r.total_ms;
  j["timings"] = t;
  return j;
}

Json params_to_json(const ClassSpec& spec, const PointParams& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params.values) j[param_name(spec, k)] = v.to_string();
  return j;
}

Json to_json(const QuantumPoint& p) {
  Json j;
  j["case"] = p.spec.id();
  j["params"] = params_to_json(p.spec, p.params);
  j["A"] = matrix_to_json(p.A);
  j["A0"] = matrix_to_json(p.A0);
  return j;
}

namespace {

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json satake_json(const ThetaData& td, const StabilizerSet& ss) {
  Json j;
  j["case"] = td.spec.id();
  j["pi_l"] = int_list(td.pi_l);
  j["bar_pi_l"] = int_list(td.bar_pi_l);
  Json tilde = Json::object();
  for (const auto& [a, c] : td.tilde_simple) tilde[std::to_string(a)] = int_list(c);
  j["tilde"] = tilde;
  Json arcs = Json::array();
  for (const auto& [a, b] : td.prime_pairing) {
    if (a < b) arcs.push_back({a, b});
  }
  j["arcs"] = arcs;
  Json gens = Json::array();
  for (const auto& g : ss.mixed) {
    Json x;
    x["alpha"] = g.alpha;
    x["f_word"] = g.word.text();
    x["c_solved"] = g.c_solved ? Json(g.c_solved->to_string()) : Json(nullptr);
    x["c_formula"] = g.tabulated.value ? Json(g.tabulated.value->to_string()) : Json(nullptr);
    if (g.tabulated.candidate) x["c_candidate"] = g.tabulated.candidate->to_string();
    x["verdict"] = g.verdict;
    if (!g.tabulated.note.empty()) x["note"] = g.tabulated.note;
    if (!g.solve_error.empty()) x["error"] = g.solve_error;
    gens.push_back(std::move(x));
  }
  j["generators"] = gens;
  return j;
}

}  // namespace qsc
