// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "qsc/classical.hpp"
#include "qsc/coideal.hpp"
#include "qsc/sweep.hpp"
#include "qsc/verifier.hpp"

using namespace qsc;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::vector<LieSeries> desk_series() {
  std::vector<LieSeries> out;
  for (const auto& s : desk_cases()) {
    if (std::find(out.begin(), out.end(), s.lie) == out.end()) out.push_back(s.lie);
  }
  return out;
}

QuantumPoint default_point(const ClassSpec& s) { return quantum_point(s, default_params(s)); }

Outcome reflection_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = desk_cases();
  for (const auto& s : cases) {
    const CheckRecord r = check_reflection(default_point(s).A, rmatrix_data(s.lie).S);
    o.require(r.pass, s.id() + ": " + r.detail);
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(sec < 300.0, "runtime over 5 minutes");
  std::ostringstream os;
  os << cases.size() << " cases, " << sec << " s";
  o.summary = os.str();
  return o;
}

Outcome oc_suite() {
  Outcome o;
  int n = 0;
  for (const auto& s : desk_cases()) {
    if (s.lie.series == Series::A) continue;
    const RMatrixData& d = rmatrix_data(s.lie);
    const CheckRecord r = check_oc(default_point(s).A, d.S, *d.varpi, d.epsilon);
    o.require(r.pass, s.id() + ": " + r.detail);
    ++n;
  }
  int series = 0;
  for (const auto& lie : desk_series()) {
    if (lie.series == Series::A) continue;
    const RMatrixData& d = rmatrix_data(lie);
    for (const auto& r : check_varpi(*d.varpi, d.S, lie)) o.require(r.pass, lie.label() + " " + r.name);
    ++series;
  }
  o.summary = std::to_string(n) + " cases, varpi checked for " + std::to_string(series) + " algebras";
  return o;
}

Outcome invariant_suite() {
  Outcome o;
  int n = 0;
  for (const auto& s : desk_cases()) {
    const QMatrix A = default_point(s).A;
    for (const auto& r : check_min_poly(A, s)) o.require(r.pass, s.id() + " " + r.name + ": " + r.detail);
    const CheckRecord t = check_q_trace(A, s, root_system(s.lie));
    o.require(t.pass, s.id() + " q_trace: " + t.detail);
    ++n;
  }
  o.summary = std::to_string(n) + " cases, minimal polynomial, multiplicities, q-trace";
  return o;
}

Outcome stabilizer_suite() {
  Outcome o;
  int gens = 0, formulas = 0, candidates = 0;
  for (const auto& s : desk_cases()) {
    const QuantumPoint p = default_point(s);
    const ThetaData td = theta_for_class(s, root_system(s.lie));
    const StabilizerSet ss = build_stabilizer(natural_rep(s.lie), td, p.params, p.A);
    for (const auto& r : check_stabilizer(ss, p.A)) o.require(r.pass, s.id() + " " + r.name + ": " + r.detail);
    gens += static_cast<int>(ss.l_generators.size() + ss.cartan_generators.size() + ss.mixed.size());
    for (const auto& g : ss.mixed) {
      o.require(g.c_solved.has_value(), s.id() + " a" + std::to_string(g.alpha) + " unsolved: " + g.solve_error);
      if (g.tabulated.value && g.c_solved) {
        ++formulas;
        o.require(*g.tabulated.value == *g.c_solved,
                  s.id() + " a" + std::to_string(g.alpha) + " erratum: solved " + g.c_solved->to_string());
      }
      if (g.tabulated.candidate) ++candidates;
    }
  }
  o.summary = std::to_string(gens) + " generators commute, " + std::to_string(formulas) + " closed forms equal, " +
              std::to_string(candidates) + " without an unambiguous formula";
  return o;
}

Outcome rmatrix_suite() {
  Outcome o;
  int n = 0;
  for (const auto& lie : desk_series()) {
    const RMatrixData& d = rmatrix_data(lie);
    const CheckRecord b = check_braid(d.S, lie.N);
    o.require(b.pass, lie.label() + " braid: " + b.detail);
    const CheckRecord a = check_annihilator(d.S, lie);
    o.require(a.pass, lie.label() + " " + a.name);
    for (const auto& r : check_rtt_compat(natural_rep(lie), d.R)) o.require(r.pass, lie.label() + " " + r.name);
    ++n;
  }
  o.summary = std::to_string(n) + " algebras: braid on N^3, Hecke or cubic, RTT for all generators";
  return o;
}

Outcome classical_suite() {
  Outcome o;
  int n = 0;
  for (const auto& s : desk_cases()) {
    const CMatrix A0 = default_point(s).A0;
    const ClassicalAlgebraData& d = classical_algebra(s.lie);
    o.require(bivector_at(d, A0).is_zero(), s.id() + " bivector nonzero");
    try {
      o.require(check_lemma2(d, A0).pass, s.id() + " omega part");
    } catch (const Error& e) {
      o.require(false, s.id() + " omega part: " + e.what());
    }
    const auto N = static_cast<std::size_t>(s.lie.N);
    const GaussRational sign = s.family == Family::T2 ? GaussRational(1) : GaussRational(-1);
    o.require(A0 * A0 == CMatrix::identity(N) * sign, s.id() + " A0^2");
    ++n;
  }
  CMatrix t(3);
  t(0, 0) = GaussRational(4);
  t(1, 1) = GaussRational(1);
  t(2, 2) = GaussRational(Rational(1, 4));
  const BivectorValue v = bivector_at(classical_algebra(LieSeries::from_algebra("sl", 3)), t);
  o.require(!v.is_zero(), "diag(4, 1, 1/4) gives a zero bivector");
  o.summary = std::to_string(n) + " classical points, negative control largest coefficient " + v.largest().to_string();
  return o;
}

Outcome negative_controls() {
  Outcome o;
  auto mk = [](const char* alg, int N, Family f, int m) { return ClassSpec::make(LieSeries::from_algebra(alg, N), f, m, 1); };
  // one violated pair per constraint family
  const std::vector<std::pair<ClassSpec, int>> cases = {
      {mk("sl", 4, Family::T2, 2), 2}, {mk("so", 7, Family::T2, 3), 3}, {mk("so", 8, Family::T2, 2), 1},
      {mk("sp", 8, Family::T2, 4), 3}, {mk("sp", 6, Family::T4, 0), 3}, {mk("so", 8, Family::T4, 0), 1},
      {mk("so", 6, Family::T4, 0), 3},
  };
  for (const auto& [s, idx] : cases) {
    PointParams p = default_params(s);
    p.values[idx] *= QScalar::q();
    const VerificationReport r = full_report(s, p);
    bool caught = false;
    for (const auto& c : r.checks) caught = caught || (!c.pass && c.name != "param_constraint");
    o.require(caught, s.id() + " violated parameter not detected");
  }
  int perturbed = 0;
  for (const auto& s : desk_cases()) {
    const QuantumPoint pt = default_point(s);
    const NaturalRep& rep = natural_rep(s.lie);
    const StabilizerSet ss = build_stabilizer(rep, theta_for_class(s, root_system(s.lie)), pt.params, pt.A);
    for (const auto& g : ss.mixed) {
      if (!g.c_solved) continue;
      const QMatrix X = g.cartan * rep.e[static_cast<std::size_t>(g.alpha - 1)] + g.F_tilde * (*g.c_solved * QScalar::q());
      o.require(!(X * pt.A == pt.A * X), s.id() + " a" + std::to_string(g.alpha) + " survives c -> q c");
      ++perturbed;
    }
  }
  o.summary = std::to_string(cases.size()) + " constraint families, " + std::to_string(perturbed) + " perturbed generators";
  return o;
}

Outcome table_consistency() {
  Outcome o;
  int entries = 0;
  for (const auto& s : desk_cases()) {
    const RootSystem& rs = root_system(s.lie);
    const ThetaData td = theta_for_class(s, rs);
    o.require(tabulated_pi_l(s) == td.pi_l, s.id() + " Pi_l");
    const auto tilde = tabulated_tilde(s);
    const auto prime = tabulated_prime(s);
    for (int a : td.bar_pi_l) {
      ++entries;
      o.require(tilde.count(a) && tilde.at(a) == td.tilde_simple.at(a), s.id() + " a" + std::to_string(a) + "~");
      o.require(prime.count(a) && prime.at(a) == td.prime_pairing.at(a), s.id() + " a" + std::to_string(a) + "'");
      IntVec d = td.tilde_simple.at(a);
      d[static_cast<std::size_t>(td.prime_pairing.at(a) - 1)] -= 1;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const bool levi = std::find(td.pi_l.begin(), td.pi_l.end(), static_cast<int>(i) + 1) != td.pi_l.end();
        o.require(d[i] >= 0 && (d[i] == 0 || levi), s.id() + " a" + std::to_string(a) + "~ - a' outside Z+ Pi_l");
      }
    }
    o.require(tilde.size() == td.bar_pi_l.size(), s.id() + " table size");
  }
  o.summary = std::to_string(entries) + " table entries";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reflection equation", reflection_suite},
      {"OC relation and varpi", oc_suite},
      {"class invariants", invariant_suite},
      {"coideal stabilizer", stabilizer_suite},
      {"R-matrix structure", rmatrix_suite},
      {"classical Poisson bivector", classical_suite},
      {"negative controls", negative_controls},
      {"Satake table consistency", table_consistency},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << " (" << name << "): " << o.summary << "\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(o.failures.size(), 10); ++i) std::cout << "    " << o.failures[i] << "\n";
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
