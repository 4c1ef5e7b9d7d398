// qsc: command-line front end.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qsc/json_io.hpp"
#include "qsc/sweep.hpp"

using namespace qsc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct CaseFlags {
  std::string series;
  int N = 0;
  std::string family;
  int m = 0;
  std::string sign;
  int unit = 0;
  std::vector<std::string> params;
  std::string config;
  std::vector<std::string> checks;
  CLI::Option* o_series = nullptr;
  CLI::Option* o_N = nullptr;
  CLI::Option* o_family = nullptr;
  CLI::Option* o_m = nullptr;
  CLI::Option* o_sign = nullptr;
  CLI::Option* o_unit = nullptr;
  CLI::Option* o_checks = nullptr;
};

struct OutputFlags {
  std::string format = "json";
  std::string out;
};

void add_case_flags(CLI::App* app, CaseFlags& f, bool with_checks = false) {
  f.o_series = app->add_option("--series", f.series, "sl, so or sp");
  f.o_N = app->add_option("--N", f.N, "size of the natural representation");
  f.o_family = app->add_option("--family", f.family, "t2 or t4");
  f.o_m = app->add_option("--m", f.m, "block size m (t2)");
  f.o_sign = app->add_option("--sign", f.sign, "+ or -");
  f.o_unit = app->add_option("--unit", f.unit, "sl only: scale the point by i^unit");
  app->add_option("--param", f.params, "parameter override name=literal, e.g. y1=q^2 (repeatable)");
  app->add_option("--config", f.config, "JSON case config; flags given explicitly override it");
  if (with_checks) {
    f.o_checks = app->add_option("--checks", f.checks, "check groups to run")->delimiter(',');
  }
}

void add_output_flags(CLI::App* app, OutputFlags& o) {
  app->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", o.out, "write to FILE instead of stdout");
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw InvalidSpec("sign must be + or -, got '" + s + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec("'" + path + "' is not valid JSON: " + e.what());
  }
}

CaseConfig resolve(const CaseFlags& f) {
  CaseConfig c;
  if (!f.config.empty()) c = case_config_from_json(read_json_file(f.config));
  if (f.config.empty() && (!f.o_series->count() || !f.o_N->count())) {
    throw InvalidSpec("--series and --N are required (or --config)");
  }
  if (f.o_series->count()) c.series = f.series;
  if (f.o_N->count()) c.N = f.N;
  if (f.o_family->count()) c.family = f.family;
  if (f.o_m->count()) c.m = f.m;
  if (f.o_sign->count()) c.sign = parse_sign(f.sign);
  if (f.o_unit->count()) c.unit = f.unit;
  if (f.o_checks && f.o_checks->count()) c.checks = f.checks;
  for (const auto& kv : f.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidSpec("--param expects name=literal, got '" + kv + "'");
    c.params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return c;
}

void emit(const OutputFlags& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InvalidSpec("cannot write '" + o.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string check_line(const CheckRecord& r) {
  std::string s = std::string(r.pass ? "PASS " : "FAIL ") + r.name;
  if (!r.detail.empty()) s += "  " + r.detail;
  if (r.mismatch) s += "  [" + r.mismatch->lhs + " vs " + r.mismatch->rhs + "]";
  return s + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.case_id << "  params " << r.param_digest << "\n";
  for (const auto& c : r.checks) os << "  " << check_line(c);
  os << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, " << std::fixed << std::setprecision(1)
     << r.total_ms << " ms)\n";
  return os.str();
}

int cmd_verify(const CaseFlags& f, const OutputFlags& o) {
  const CaseConfig c = resolve(f);
  const ClassSpec spec = spec_of(c);
  const PointParams params = params_of(c, spec);
  const VerificationReport r = full_report(spec, params, options_of(c));
  emit(o, o.format == "json" ? to_json(r).dump(2) : report_text(r));
  return r.pass() ? kPass : kFail;
}

int cmd_sweep(int Nmax, const std::vector<std::string>& series, unsigned threads, const OutputFlags& o) {
  const auto cases = enumerate_cases(Nmax, series);
  const auto rows = run_sweep(cases, threads);
  bool ok = true;
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& r : rows) {
    ok = ok && r.pass;
    Json x;
    x["case"] = r.case_id;
    x["pass"] = r.pass;
    if (!r.failing.empty()) x["failing"] = r.failing;
    if (!r.error.empty()) x["error"] = r.error;
    x["ms"] = r.ms;
    j.push_back(x);
    os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.case_id << std::right << std::fixed
       << std::setprecision(1) << std::setw(9) << r.ms << " ms";
    for (const auto& n : r.failing) os << "  " << n;
    if (!r.error.empty()) os << "  error: " << r.error;
    os << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass ? 1 : 0;
  os << passed << "/" << rows.size() << " cases pass\n";
  Json doc;
  doc["cases"] = j;
  doc["passed"] = passed;
  doc["total"] = rows.size();
  emit(o, o.format == "json" ? doc.dump(2) : os.str());
  return ok ? kPass : kFail;
}

struct CaseData {
  ClassSpec spec;
  PointParams params;
  QuantumPoint point;
  ThetaData td;
  StabilizerSet ss;
};

CaseData load_case(const CaseFlags& f) {
  const CaseConfig c = resolve(f);
  CaseData d;
  d.spec = spec_of(c);
  d.params = params_of(c, d.spec);
  d.point = quantum_point_unchecked(d.spec, d.params);
  d.td = theta_for_class(d.spec, root_system(d.spec.lie));
  d.ss = build_stabilizer(natural_rep(d.spec.lie), d.td, d.params, d.point.A);
  return d;
}

int cmd_satake(const CaseFlags& f, const OutputFlags& o) {
  const CaseData d = load_case(f);
  if (o.format == "json") {
    emit(o, satake_json(d.td, d.ss).dump(2));
    return kPass;
  }
  std::ostringstream os;
  os << satake_text(d.td);
  for (const auto& g : d.ss.mixed) {
    os << "  a" << g.alpha << ": F~ = " << g.word.text() << "\n";
    os << "      c_solved  = " << (g.c_solved ? g.c_solved->to_string() : "unsolved (" + g.solve_error + ")") << "\n";
    if (g.tabulated.value) os << "      c_formula = " << g.tabulated.value->to_string() << "\n";
    if (g.tabulated.candidate) os << "      candidate = " << g.tabulated.candidate->to_string() << "\n";
    os << "      " << g.verdict;
    if (!g.tabulated.note.empty()) os << " (" << g.tabulated.note << ")";
    os << "\n";
  }
  emit(o, os.str());
  return kPass;
}

int cmd_stabilizer(const CaseFlags& f, const OutputFlags& o) {
  const CaseData d = load_case(f);
  const auto checks = check_stabilizer(d.ss, d.point.A);
  const bool ok = all_pass(checks);
  if (o.format == "json") {
    Json j = satake_json(d.td, d.ss);
    Json l = Json::array();
    for (const auto& g : d.ss.l_generators) l.push_back(g.name);
    Json h = Json::array();
    for (const auto& g : d.ss.cartan_generators) h.push_back(g.name);
    j["levi_generators"] = l;
    j["cartan_generators"] = h;
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(to_json(c));
    j["checks"] = cs;
    j["pass"] = ok;
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << d.spec.id() << "\n";
    for (const auto& c : checks) os << "  " << check_line(c);
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, os.str());
  }
  return ok ? kPass : kFail;
}

int cmd_poisson(const CaseFlags& f, const std::string& matrix, const OutputFlags& o) {
  CMatrix a;
  LieSeries lie;
  std::string label;
  if (!matrix.empty()) {
    Json mj;
    if (matrix.front() == '@') {
      mj = read_json_file(matrix.substr(1));
    } else {
      try {
        mj = Json::parse(matrix);
      } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("--matrix is not valid JSON: ") + e.what());
      }
    }
    a = eval_at_one(qmatrix_from_json(mj));
    if (!a.is_square()) throw InvalidSpec("--matrix must be square");
    if (!f.o_series->count()) throw InvalidSpec("--series is required with --matrix");
    lie = LieSeries::from_algebra(f.series, static_cast<int>(a.rows()));
    if (f.o_N->count() && f.N != lie.N) throw InvalidSpec("--N does not match the matrix size");
    label = lie.label() + " explicit point";
  } else {
    const CaseConfig c = resolve(f);
    const ClassSpec spec = spec_of(c);
    a = quantum_point_unchecked(spec, params_of(c, spec)).A0;
    lie = spec.lie;
    label = spec.id();
  }
  const ClassicalAlgebraData& data = classical_algebra(lie);
  const BivectorValue v = bivector_at(data, a);
  std::string omega;
  bool omega_ok = true;
  try {
    const CheckRecord r = check_lemma2(data, a);
    omega = r.pass ? "omega part vanishes" : "omega part nonzero";
    omega_ok = r.pass;
  } catch (const PreconditionViolated&) {
    omega = "not applicable (Ad_a^2 != id)";
  }
  if (o.format == "json") {
    Json j;
    j["point"] = label;
    j["vanishes"] = v.is_zero();
    if (!v.is_zero()) j["largest_coefficient"] = v.largest().to_string();
    j["antisymmetric"] = v.is_antisymmetric();
    j["omega_part"] = omega;
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << label << "\n  bivector " << (v.is_zero() ? "vanishes" : "nonzero, largest coefficient " + v.largest().to_string())
       << "\n  omega part: " << omega << "\n";
    emit(o, os.str());
  }
  return v.is_zero() && omega_ok ? kPass : kFail;
}

int cmd_point(const CaseFlags& f, const OutputFlags& o) {
  const CaseConfig c = resolve(f);
  const ClassSpec spec = spec_of(c);
  const PointParams params = params_of(c, spec);
  const QuantumPoint p = quantum_point_unchecked(spec, params);
  const ParamValidation v = validate_params(spec, params);
  if (o.format == "json") {
    Json j = to_json(p);
    j["constraint_ok"] = v.ok;
    if (!v.ok) j["violations"] = v.violations;
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << spec.id() << "\n";
    for (const auto& [k, val] : params.values) os << "  " << param_name(spec, k) << " = " << val.to_string() << "\n";
    os << "A:\n";
    for (std::size_t r = 0; r < p.A.rows(); ++r) {
      os << " ";
      for (std::size_t k = 0; k < p.A.cols(); ++k) os << " " << p.A(r, k).to_string();
      os << "\n";
    }
    for (const auto& s : v.violations) os << "violation: " << s << "\n";
    emit(o, os.str());
  }
  return v.ok ? kPass : kFail;
}

int cmd_rmatrix(const CaseFlags& f, bool show, const OutputFlags& o) {
  if (!f.o_series->count() || !f.o_N->count()) throw InvalidSpec("--series and --N are required");
  const LieSeries lie = LieSeries::from_algebra(f.series, f.N);
  const RMatrixData& rd = rmatrix_data(lie);
  std::vector<CheckRecord> checks;
  checks.push_back(timed([&] { return check_braid(rd.S, lie.N); }));
  checks.push_back(check_annihilator(rd.S, lie));
  if (rd.varpi) {
    for (auto& r : check_varpi(*rd.varpi, rd.S, lie)) checks.push_back(r);
  }
  for (auto& r : check_rtt_compat(natural_rep(lie), rd.R)) checks.push_back(r);
  const bool ok = all_pass(checks);
  if (o.format == "json") {
    Json j;
    j["algebra"] = lie.label();
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(to_json(c));
    j["checks"] = cs;
    j["pass"] = ok;
    if (show) j["R"] = matrix_to_json(rd.R);
    emit(o, j.dump(2));
  } else {
    std::ostringstream os;
    os << lie.label() << "\n";
    for (const auto& c : checks) os << "  " << check_line(c);
    os << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, os.str());
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for quantum symmetric conjugacy classes"};
  app.require_subcommand(1);
  OutputFlags out;

  CaseFlags verify_f;
  auto* verify = app.add_subcommand("verify", "run every check for one case");
  add_case_flags(verify, verify_f, true);
  add_output_flags(verify, out);

  int Nmax = 0;
  unsigned threads = 0;
  std::vector<std::string> sweep_series;
  auto* sweep = app.add_subcommand("sweep", "verify every case up to Nmax with default parameters");
  sweep->add_option("--Nmax", Nmax, "largest N")->required();
  sweep->add_option("--series", sweep_series, "restrict to sl, so or sp (repeatable)");
  sweep->add_option("--threads", threads, "worker threads, 0 = all cores");
  add_output_flags(sweep, out);

  CaseFlags satake_f;
  auto* satake = app.add_subcommand("satake", "Satake data and coideal generators");
  add_case_flags(satake, satake_f);
  add_output_flags(satake, out);

  CaseFlags stab_f;
  auto* stab = app.add_subcommand("stabilizer", "check the coideal stabilizer against A");
  add_case_flags(stab, stab_f);
  add_output_flags(stab, out);

  CaseFlags poisson_f;
  std::string matrix;
  auto* poisson = app.add_subcommand("poisson", "Poisson bivector at the classical point or at --matrix");
  add_case_flags(poisson, poisson_f);
  poisson->add_option("--matrix", matrix, "JSON array of rows of literals, or @FILE");
  add_output_flags(poisson, out);

  CaseFlags point_f;
  auto* point = app.add_subcommand("point", "print the quantum point");
  add_case_flags(point, point_f);
  add_output_flags(point, out);

  CaseFlags rm_f;
  bool show = false;
  auto* rm = app.add_subcommand("rmatrix", "structural checks of the R-matrix");
  add_case_flags(rm, rm_f);
  rm->add_flag("--show", show, "include R in the output");
  add_output_flags(rm, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_f, out);
    if (*sweep) return cmd_sweep(Nmax, sweep_series, threads, out);
    if (*satake) return cmd_satake(satake_f, out);
    if (*stab) return cmd_stabilizer(stab_f, out);
    if (*poisson) return cmd_poisson(poisson_f, matrix, out);
    if (*point) return cmd_point(point_f, out);
    if (*rm) return cmd_rmatrix(rm_f, show, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
