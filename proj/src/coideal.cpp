#include "qsc/coideal.hpp"

#include "qsc/errors.hpp"

namespace qsc {

QMatrix q_commutator(const QMatrix& x, const QMatrix& y, const QScalar& a) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("q_commutator: shapes differ");
  QMatrix yx = y * x;
  if (!a.is_one()) yx *= a;
  return x * y - yx;
}

namespace {

std::string subscript(const QScalar& a) {
  if (a.is_one()) return "";
  const QScalar q = QScalar::q();
  if (a == q) return "_q";
  if (a == q.inverse()) return "_q^-1";
  if (a == q * q) return "_q^2";
  return "_(" + a.to_string() + ")";
}

}  // namespace

std::string FWord::text() const {
  if (steps.empty()) return "";
  std::string s = "F" + std::to_string(steps.front().index);
  for (std::size_t k = 1; k < steps.size(); ++k) {
    s = "[" + s + ", F" + std::to_string(steps[k].index) + "]" + subscript(steps[k].coeff);
  }
  return s;
}

IntVec FWord::letter_counts(int n) const {
  IntVec c(static_cast<std::size_t>(n), 0);
  for (const auto& s : steps) c[static_cast<std::size_t>(s.index - 1)] += 1;
  return c;
}

FWord f_tilde_word(const ClassSpec& spec, int alpha) {
  const int n = spec.lie.n;
  const int N = spec.lie.N;
  const int m = spec.m;
  const QScalar q = QScalar::q();
  const QScalar qb = q.inverse();
  const QScalar q2 = q * q;
  FWord w;
  auto start = [&](int i) { w.steps.push_back({i, QScalar(1)}); };
  auto step = [&](int i, const QScalar& a) { w.steps.push_back({i, a}); };
  auto up = [&](int from, int to, const QScalar& a) {
    for (int j = from; j <= to; ++j) step(j, a);
  };
  auto down = [&](int from, int to, const QScalar& a) {
    for (int j = from; j >= to; --j) step(j, a);
  };
  auto unmatched = [&]() -> FWord {
    throw InvalidSpec("no root vector word for alpha_" + std::to_string(alpha) + " in " + spec.id());
  };
  if (alpha < 1 || alpha > n) return unmatched();

  switch (spec.lie.series) {
    case Series::A:
      if (spec.family != Family::T2 || m == 0) return unmatched();
      if (2 * m == N || alpha < m || alpha > N - m) {
        start(n + 1 - alpha);
      } else if (alpha == m) {
        start(m + 1);
        up(m + 2, n + 1 - m, q);
      } else if (alpha == N - m) {
        start(m);
        up(m + 1, n - m, qb);
      } else {
        return unmatched();
      }
      break;
    case Series::B:
      if (alpha < m) {
        start(alpha);
      } else if (alpha == m && m == n) {
        start(n);
      } else if (alpha == m) {
        start(m);
        up(m + 1, n, q);
        step(n, QScalar(1));
        down(n - 1, m + 1, q);
      } else {
        return unmatched();
      }
      break;
    case Series::C:
      if (spec.family == Family::T4) {
        start(alpha);
      } else if (alpha % 2 == 0 && alpha < m) {
        start(alpha);
        step(alpha + 1, q);
        step(alpha - 1, q);
      } else if (alpha == m && m == n) {
        start(n);
        step(n - 1, q2);
        step(n - 1, QScalar(1));
      } else if (alpha == m && m == n - 1) {
        start(n - 1);
        step(n, q2);
        step(n - 2, q);
      } else if (alpha == m && m > 0) {
        start(m);
        up(m + 1, n - 1, q);
        step(n, q2);
        down(n - 1, m + 1, q);
        step(m - 1, q);
      } else {
        return unmatched();
      }
      break;
    case Series::D:
      if (spec.family == Family::T2) {
        if (alpha < m) {
          start(alpha);
        } else if (m == n && alpha == n) {
          start(n);
        } else if (m == n - 1 && alpha == n - 1) {
          start(n);
        } else if (m == n - 1 && alpha == n) {
          start(n - 1);
        } else if (alpha == m && m > 0) {
          start(m);
          up(m + 1, n, q);
          down(n - 2, m + 1, q);
        } else {
          return unmatched();
        }
      } else if (alpha % 2 == 0 && alpha < n - 1) {
        start(alpha);
        step(alpha + 1, q);
        step(alpha - 1, q);
      } else if (n % 2 == 0 && alpha == n) {
        start(n);
      } else if (n % 2 == 1 && alpha == n - 1) {
        start(n);
        step(n - 2, q);
      } else if (n % 2 == 1 && alpha == n) {
        start(n - 1);
        step(n - 2, q);
      } else {
        return unmatched();
      }
      break;
  }
  return w;
}

QMatrix evaluate_word(const NaturalRep& rep, const FWord& word) {
  if (word.steps.empty()) throw InvalidSpec("empty root vector word");
  QMatrix x = rep.F.at(static_cast<std::size_t>(word.steps.front().index - 1));
  for (std::size_t k = 1; k < word.steps.size(); ++k) {
    x = q_commutator(x, rep.F.at(static_cast<std::size_t>(word.steps[k].index - 1)), word.steps[k].coeff);
  }
  return x;
}

QMatrix f_tilde_root_vector(const NaturalRep& rep, const ClassSpec& spec, int alpha) {
  return evaluate_word(rep, f_tilde_word(spec, alpha));
}

QScalar solve_mixture(const QMatrix& base, const QMatrix& F_tilde, const QMatrix& A) {
  const QMatrix u = base * A - A * base;
  const QMatrix v = F_tilde * A - A * F_tilde;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    for (std::size_t c = 0; c < v.cols(); ++c) {
      if (v(r, c).is_zero()) continue;
      const QScalar sol = -u(r, c) / v(r, c);
      if (!(u + v * sol).is_zero()) throw Inconsistent("no mixture coefficient makes X commute with A");
      return sol;
    }
  }
  if (u.is_zero()) throw Underdetermined("both commutators vanish; the mixture coefficient is not determined");
  throw Inconsistent("[F~, A] vanishes but the Cartan part does not commute with A");
}

TabulatedMixture mixture_formula(const ClassSpec& spec, int alpha, const PointParams& params) {
  const int n = spec.lie.n;
  const int N = spec.lie.N;
  const int m = spec.m;
  const QScalar q = QScalar::q();
  auto qp = [](int k) { return QScalar::q_power(k); };
  auto p = [&](int i) -> QScalar {
    auto it = params.values.find(i);
    if (it == params.values.end()) throw InvalidSpec("parameter index " + std::to_string(i) + " missing");
    return it->second;
  };
  auto sgn = [](int k) { return QScalar(k % 2 == 0 ? 1 : -1); };
  TabulatedMixture out;
  auto value = [&](QScalar v, std::string note = {}) {
    out.value = std::move(v);
    out.note = std::move(note);
    return out;
  };

  switch (spec.lie.series) {
    case Series::A:
      if (spec.family != Family::T2 || m == 0) break;
      if (alpha < m || alpha > N - m) return value(p(alpha + 1) / p(alpha));
      if (2 * m == N && alpha == m) {
        return value(qp(-2 * m + 1) / (p(m) * p(m)), "printed label c_{alpha_i} read as c_{alpha_m}");
      }
      if (alpha == m) return value(sgn(N + 1) * qp(-N + m) / p(m));
      if (alpha == N - m) return value(sgn(N + 1) * qp(2 * N - 5 * m - 3) / p(m));
      break;
    case Series::B:
      if (alpha < m) return value(-q * p(alpha + 1) / p(alpha));
      if (alpha == m && m < n) return value(sgn(n - m + 1) / (p(m) * qp(m + 1)));
      if (alpha == m && m == n) return value(QScalar(-1) / (p(m) * qp(m)));
      break;
    case Series::C:
      if (spec.family == Family::T4) {
        if (alpha < n) return value(-q * p(alpha + 1) / p(alpha));
        return value(QScalar(-1) / (p(n) * p(n) * qp(2 * n)));
      }
      if (alpha % 2 == 0 && alpha < m) return value(-q * p(alpha + 1) / p(alpha - 1));
      if (alpha == m && m <= n - 1) return value(sgn(n + 1) / (p(m - 1) * qp(m)));
      if (alpha == m && m == n) return value(QScalar(-1) / ((q * q + QScalar(1)) * qp(2 * n - 2) * p(n - 1) * p(n - 1)));
      break;
    case Series::D:
      if (spec.family == Family::T2) {
        if (alpha < m) return value(-q * p(alpha + 1) / p(alpha));
        if (m == n && alpha == n) return value(QScalar(-1) / (p(n - 1) * p(n) * qp(2 * n - 1)));
        if (m == n - 1 && (alpha == n - 1 || alpha == n)) {
          out.candidate = QScalar(-1) / (p(m) * qp(n));
          out.note = alpha == n - 1 ? "printed subscript y_{i-1} is undefined; candidate is the general display at m = n-1"
                                    : "no printed formula; candidate is the general display at m = n-1";
          return out;
        }
        if (alpha == m && m <= n - 2) return value(sgn(n - m) / (p(m) * qp(m + 1)));
        break;
      }
      if (alpha % 2 == 0 && alpha < n - 1) return value(-q * p(alpha + 1) / p(alpha - 1));
      if (n % 2 == 0 && alpha == n) return value(QScalar(-1) / (qp(2 * n - 3) * p(n - 1) * p(n - 1)));
      if (n % 2 == 1 && (alpha == n - 1 || alpha == n)) {
        QScalar c = p(n) / p(n - 2);
        if (alpha == n) c = -c;
        return value(c, "i read as q^{n-1} z_n, printed z_{n-1} read as z_{n-2}");
      }
      break;
  }
  out.note = "no tabulated formula";
  return out;
}

StabilizerSet build_stabilizer(const NaturalRep& rep, const ThetaData& td, const PointParams& params, const QMatrix& A) {
  StabilizerSet ss;
  const int n = rep.lie.n;
  for (int b : td.pi_l) {
    const auto k = static_cast<std::size_t>(b - 1);
    const std::string s = std::to_string(b);
    ss.l_generators.push_back({"e" + s, rep.e[k]});
    ss.l_generators.push_back({"f" + s, rep.f[k]});
    ss.l_generators.push_back({"K" + s, rep.k[k]});
    ss.l_generators.push_back({"K" + s + "^-1", rep.k_inv[k]});
  }
  for (int a : td.bar_pi_l) {
    CoidealGen g;
    g.alpha = a;
    g.tilde = td.tilde_simple.at(a);
    IntVec c = g.tilde;
    c[static_cast<std::size_t>(a - 1)] -= 1;
    g.cartan = rep.cartan(c);
    IntVec neg = c;
    for (auto& x : neg) x = -x;
    ss.cartan_generators.push_back({"K(a" + std::to_string(a) + "~ - a" + std::to_string(a) + ")", g.cartan});
    ss.cartan_generators.push_back({"K(a" + std::to_string(a) + "~ - a" + std::to_string(a) + ")^-1", rep.cartan(neg)});
    g.word = f_tilde_word(td.spec, a);
    g.F_tilde = evaluate_word(rep, g.word);
    const QMatrix base = g.cartan * rep.e[static_cast<std::size_t>(a - 1)];
    try {
      g.c_solved = solve_mixture(base, g.F_tilde, A);
    } catch (const Error& e) {
      g.solve_error = e.what();
    }
    g.tabulated = mixture_formula(td.spec, a, params);
    g.X = g.c_solved ? base + g.F_tilde * *g.c_solved : base;
    if (!g.c_solved) {
      g.verdict = "unsolved";
    } else if (g.tabulated.value) {
      g.verdict = *g.tabulated.value == *g.c_solved ? "match" : "mismatch";
    } else if (g.tabulated.candidate) {
      g.verdict = *g.tabulated.candidate == *g.c_solved ? "candidate-match" : "candidate-mismatch";
    } else {
      g.verdict = "no-formula";
    }
    (void)n;
    ss.mixed.push_back(std::move(g));
  }
  return ss;
}

namespace {

CheckRecord commute_all(const std::string& name, const std::vector<NamedMatrix>& gens, const QMatrix& A) {
  for (const auto& g : gens) {
    CheckRecord r = compare_matrices(name, g.m * A, A * g.m);
    if (!r.pass) {
      r.detail = g.name + ": " + r.detail;
      return r;
    }
  }
  return verdict(name, true, std::to_string(gens.size()) + " generators commute with A");
}

}  // namespace

std::vector<CheckRecord> check_stabilizer(const StabilizerSet& ss, const QMatrix& A) {
  std::vector<CheckRecord> out;
  out.push_back(commute_all("stabilizer_levi", ss.l_generators, A));
  out.push_back(commute_all("stabilizer_cartan", ss.cartan_generators, A));
  for (const auto& g : ss.mixed) {
    const std::string s = "a" + std::to_string(g.alpha);
    const IntVec counts = g.word.letter_counts(static_cast<int>(g.tilde.size()));
    out.push_back(verdict("f_word_weight_" + s, counts == g.tilde, g.word.text()));
    if (!g.c_solved) {
      out.push_back(verdict("stabilizer_X_" + s, false, g.solve_error));
    } else {
      CheckRecord r = compare_matrices("stabilizer_X_" + s, g.X * A, A * g.X);
      if (r.pass) r.detail = "c = " + g.c_solved->to_string();
      out.push_back(r);
    }
    std::string detail = g.verdict;
    if (g.tabulated.value) detail += ", formula " + g.tabulated.value->to_string();
    if (g.tabulated.candidate) detail += ", candidate " + g.tabulated.candidate->to_string();
    if (!g.tabulated.note.empty()) detail += " (" + g.tabulated.note + ")";
    out.push_back(verdict("mixture_formula_" + s, g.verdict != "mismatch" && g.verdict != "unsolved", detail));
  }
  return out;
}

}  // namespace qsc
