#include "qsc/rootdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "qsc/errors.hpp"

namespace qsc {

std::string to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
  }
  return "?";
}

std::string to_string(Family f) { return f == Family::T2 ? "t2" : "t4"; }

// ---------------------------------------------------------------------------
// LieSeries
// ---------------------------------------------------------------------------

LieSeries LieSeries::make(Series s, int n) {
  const int min_rank = s == Series::D ? 2 : 1;
  if (n < min_rank || n > 64) {
    throw InvalidSpec("invalid rank " + std::to_string(n) + " for series " + to_string(s));
  }
  LieSeries l;
  l.series = s;
  l.n = n;
  switch (s) {
    case Series::A: l.N = n + 1; break;
    case Series::B: l.N = 2 * n + 1; break;
    case Series::C:
    case Series::D: l.N = 2 * n; break;
  }
  return l;
}

LieSeries LieSeries::from_algebra(const std::string& algebra, int N) {
  if (algebra == "sl") {
    if (N < 2) throw InvalidSpec("sl(N) needs N >= 2");
    return make(Series::A, N - 1);
  }
  if (algebra == "so") {
    if (N < 3) throw InvalidSpec("so(N) needs N >= 3");
    return N % 2 ? make(Series::B, (N - 1) / 2) : make(Series::D, N / 2);
  }
  if (algebra == "sp") {
    if (N < 2 || N % 2) throw InvalidSpec("sp(N) needs even N >= 2");
    return make(Series::C, N / 2);
  }
  throw InvalidSpec("unknown algebra '" + algebra + "' (expected sl, so or sp)");
}

std::string LieSeries::algebra() const {
  switch (series) {
    case Series::A: return "sl";
    case Series::B:
    case Series::D: return "so";
    case Series::C: return "sp";
  }
  return "?";
}

std::string LieSeries::label() const { return algebra() + "(" + std::to_string(N) + ")"; }

int LieSeries::epsilon() const {
  if (series == Series::A) return 0;
  return symplectic() ? -1 : 1;
}

// ---------------------------------------------------------------------------
// RootSystem
// ---------------------------------------------------------------------------

int RootSystem::pairing(const IntVec& a, const IntVec& b) const {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

IntVec RootSystem::weight(int j) const {
  IntVec w(static_cast<std::size_t>(lie.coord_dim()), 0);
  if (lie.series == Series::A) {
    w[static_cast<std::size_t>(j - 1)] = 1;
  } else if (j <= lie.n) {
    w[static_cast<std::size_t>(j - 1)] = 1;
  } else if (lie.prime(j) <= lie.n) {
    w[static_cast<std::size_t>(lie.prime(j) - 1)] = -1;
  }
  return w;
}

int RootSystem::two_rho_of_basis(int j) const { return pairing(two_rho, weight(j)); }

IntVec RootSystem::from_simple_coordinates(const IntVec& c) const {
  IntVec v(static_cast<std::size_t>(lie.coord_dim()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c[i] * simple_roots[i][k];
  }
  return v;
}

std::optional<IntVec> RootSystem::simple_coordinates(const IntVec& v) const {
  const std::size_t n = simple_roots.size();
  // Solve the Gram system (alpha_i, alpha_j) c_j = (v, alpha_i).
  std::vector<std::vector<mpq_class>> g(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = cartan_pairing[i][j];
    g[i][n] = pairing(v, simple_roots[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(g[p][c]) == 0) ++p;
    std::swap(g[p], g[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(g[r][c]) == 0) continue;
      mpq_class f = g[r][c] / g[c][c];
      for (std::size_t k = c; k <= n; ++k) g[r][k] -= f * g[c][k];
    }
  }
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class x = g[i][n] / g[i][i];
    if (x.get_den() != 1) return std::nullopt;
    out[i] = static_cast<int>(x.get_num().get_si());
  }
  if (from_simple_coordinates(out) != v) return std::nullopt;
  return out;
}

bool RootSystem::is_positive_root(const IntVec& v) const {
  return std::find(positive_roots.begin(), positive_roots.end(), v) != positive_roots.end();
}

bool RootSystem::is_root(const IntVec& v) const {
  IntVec neg = v;
  for (auto& x : neg) x = -x;
  return is_positive_root(v) || is_positive_root(neg);
}

RootSystem build_root_system(const LieSeries& lie) {
  RootSystem rs;
  rs.lie = lie;
  const int n = lie.n;
  const auto dim = static_cast<std::size_t>(lie.coord_dim());
  auto eps = [&](int i) {
    IntVec v(dim, 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
  };
  auto add = [](IntVec a, const IntVec& b, int s = 1) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
    return a;
  };
  for (int i = 1; i <= n; ++i) {
    if (lie.series == Series::A || i < n) {
      rs.simple_roots.push_back(add(eps(i), eps(i + 1), -1));
    } else if (lie.series == Series::B) {
      rs.simple_roots.push_back(eps(n));
    } else if (lie.series == Series::C) {
      rs.simple_roots.push_back(add(eps(n), eps(n)));
    } else {
      rs.simple_roots.push_back(add(eps(n - 1), eps(n)));
    }
  }
  rs.cartan_pairing.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rs.cartan_pairing[i][j] = rs.pairing(rs.simple_roots[i], rs.simple_roots[j]);
  }

  // Closure by root strings, one height at a time.
  std::set<IntVec> known(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<IntVec> layer = rs.simple_roots;
  std::vector<IntVec> all = layer;
  while (!layer.empty()) {
    std::set<IntVec> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        const IntVec& a = rs.simple_roots[i];
        int p = 0;
        while (known.count(add(beta, a, -(p + 1)))) ++p;
        const int cartan = 2 * rs.pairing(beta, a) / rs.pairing(a, a);
        if (p - cartan > 0) {
          IntVec up = add(beta, a);
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  rs.positive_roots = all;

  rs.two_rho.assign(dim, 0);
  for (const auto& r : rs.positive_roots) rs.two_rho = add(rs.two_rho, r);

  std::vector<std::pair<std::pair<int, IntVec>, IntVec>> keyed;
  for (const auto& r : rs.positive_roots) {
    IntVec c = *rs.simple_coordinates(r);
    keyed.push_back({{std::accumulate(c.begin(), c.end(), 0), c}, r});
  }
  std::sort(keyed.begin(), keyed.end());
  rs.positive_roots.clear();
  for (auto& k : keyed) rs.positive_roots.push_back(k.second);

  rs.kappa.assign(static_cast<std::size_t>(lie.N), 1);
  if (lie.symplectic()) {
    for (int j = lie.N / 2 + 1; j <= lie.N; ++j) rs.kappa[static_cast<std::size_t>(j - 1)] = -1;
  }
  return rs;
}

// ---------------------------------------------------------------------------
// ClassSpec
// ---------------------------------------------------------------------------

void ClassSpec::validate() const {
  if (sign != 1 && sign != -1) throw InvalidSpec("sign must be +1 or -1");
  if (unit < 0 || unit > 3) throw InvalidSpec("unit must be one of 0..3 (power of i)");
  if (unit != 0 && lie.series != Series::A) throw InvalidSpec("a scalar unit is only defined for sl(N)");
  if (family == Family::T2) {
    if (m < 0 || 2 * m > lie.N) throw InvalidSpec("t2 needs 0 <= m <= N/2");
    if (lie.symplectic() && m % 2) throw InvalidSpec("sp(N) t2 needs even m");
  } else {
    if (lie.series != Series::C && lie.series != Series::D) {
      throw InvalidSpec("t4 exists only for sp(2n) and so(2n)");
    }
    if (m != 0) throw InvalidSpec("t4 takes no block size");
  }
}

ClassSpec ClassSpec::make(const LieSeries& lie, Family family, int m, int sign, int unit) {
  ClassSpec s{lie, family, m, sign, unit};
  s.validate();
  return s;
}

int ClassSpec::P() const {
  if (family == Family::T4) return lie.N / 2;
  return sign > 0 ? lie.N - m : m;
}

int ClassSpec::M() const {
  if (family == Family::T4) return lie.N / 2;
  return sign > 0 ? m : lie.N - m;
}

std::string ClassSpec::id() const {
  std::string s = lie.label() + " " + to_string(family);
  if (family == Family::T2) s += " m=" + std::to_string(m);
  s += sign > 0 ? " +" : " -";
  if (unit != 0) s += " unit=i^" + std::to_string(unit);
  return s;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

IntVec SignedPermutation::apply(const IntVec& v) const {
  IntVec out(v.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) out[static_cast<std::size_t>(target[k])] += sign[k] * v[k];
  return out;
}

bool SignedPermutation::is_involution() const {
  for (std::size_t k = 0; k < target.size(); ++k) {
    const auto t = static_cast<std::size_t>(target[k]);
    if (target[t] != static_cast<int>(k) || sign[t] * sign[k] != 1) return false;
  }
  return true;
}

namespace {

SignedPermutation theta_permutation(const ClassSpec& spec) {
  const LieSeries& lie = spec.lie;
  const int dim = lie.coord_dim();
  SignedPermutation t;
  t.target.resize(static_cast<std::size_t>(dim));
  std::iota(t.target.begin(), t.target.end(), 0);
  t.sign.assign(static_cast<std::size_t>(dim), 1);
  auto set = [&](int i, int j, int s) {
    t.target[static_cast<std::size_t>(i - 1)] = j - 1;
    t.sign[static_cast<std::size_t>(i - 1)] = s;
  };
  const int m = spec.m;
  const int n = lie.n;
  if (spec.family == Family::T2) {
    switch (lie.series) {
      case Series::A:
        for (int i = 1; i <= m; ++i) {
          set(i, lie.prime(i), 1);
          set(lie.prime(i), i, 1);
        }
        break;
      case Series::B:
      case Series::D:
        for (int i = 1; i <= m; ++i) set(i, i, -1);
        break;
      case Series::C:
        for (int i = 1; i <= m; ++i) set(i, i % 2 ? i + 1 : i - 1, -1);
        break;
    }
  } else if (lie.series == Series::C) {
    for (int i = 1; i <= n; ++i) set(i, i, -1);
  } else {
    for (int i = 1; i <= n; ++i) {
      if (i % 2 && i < n) set(i, i + 1, -1);
      if (i % 2 == 0) set(i, i - 1, -1);
    }
  }
  return t;
}

IntVec negated(IntVec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

ThetaData theta_for_class(const ClassSpec& spec, const RootSystem& rs) {
  spec.validate();
  if (!(rs.lie == spec.lie)) throw InvalidSpec("root system does not match the class");
  ThetaData td;
  td.spec = spec;
  td.theta = theta_permutation(spec);
  for (int i = 1; i <= spec.lie.n; ++i) {
    const IntVec& a = rs.simple_roots[static_cast<std::size_t>(i - 1)];
    if (td.theta.apply(a) == a) {
      td.pi_l.push_back(i);
    } else {
      td.bar_pi_l.push_back(i);
      td.tilde[i] = negated(td.theta.apply(a));
    }
  }
  td.tilde_simple = tilde_table(td, rs);
  for (int a : td.bar_pi_l) td.prime_pairing[a] = alpha_prime(td, rs, a);
  return td;
}

std::map<int, IntVec> tilde_table(const ThetaData& td, const RootSystem& rs) {
  std::map<int, IntVec> out;
  for (const auto& [a, v] : td.tilde) {
    if (!rs.is_positive_root(v)) {
      throw PreconditionViolated("-theta(alpha_" + std::to_string(a) + ") is not a positive root");
    }
    out[a] = *rs.simple_coordinates(v);
  }
  return out;
}

int alpha_prime(const ThetaData& td, const RootSystem& rs, int alpha) {
  auto it = td.tilde.find(alpha);
  if (it == td.tilde.end()) throw PreconditionViolated("alpha_" + std::to_string(alpha) + " lies in Pi_l");
  const IntVec c = *rs.simple_coordinates(it->second);
  std::vector<int> found;
  for (int b : td.bar_pi_l) {
    IntVec d = c;
    d[static_cast<std::size_t>(b - 1)] -= 1;
    bool ok = true;
    for (std::size_t k = 0; k < d.size() && ok; ++k) {
      const bool in_l = std::find(td.pi_l.begin(), td.pi_l.end(), static_cast<int>(k) + 1) != td.pi_l.end();
      if (d[k] < 0 || (d[k] > 0 && !in_l)) ok = false;
    }
    if (ok) found.push_back(b);
  }
  if (found.size() != 1) {
    throw PreconditionViolated("alpha' for alpha_" + std::to_string(alpha) + " is not unique");
  }
  return found.front();
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

namespace {

IntVec simple_sum(int n, std::initializer_list<std::pair<int, int>> terms) {
  IntVec v(static_cast<std::size_t>(n), 0);
  for (auto [idx, coeff] : terms) v[static_cast<std::size_t>(idx - 1)] += coeff;
  return v;
}

IntVec range_sum(int n, int from, int to, int coeff) {
  IntVec v(static_cast<std::size_t>(n), 0);
  for (int l = from; l <= to; ++l) v[static_cast<std::size_t>(l - 1)] += coeff;
  return v;
}

IntVec plus(IntVec a, const IntVec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

std::vector<int> tabulated_pi_l(const ClassSpec& spec) {
  const int n = spec.lie.n;
  const int m = spec.m;
  std::vector<int> out;
  auto range = [&](int from, int to) {
    for (int i = from; i <= to; ++i) out.push_back(i);
  };
  if (spec.family == Family::T4) {
    if (spec.lie.series == Series::D) {
      for (int i = 1; i <= 2 * (n / 2) - 1; i += 2) out.push_back(i);
    }
    return out;
  }
  switch (spec.lie.series) {
    case Series::A: range(m + 1, n - m); break;
    case Series::B: range(m + 1, n); break;
    case Series::D:
      if (m + 1 < n) range(m + 1, n);
      break;
    case Series::C:
      for (int i = 1; i < m; i += 2) out.push_back(i);
      range(m + 1, n);
      break;
  }
  return out;
}

std::map<int, IntVec> tabulated_tilde(const ClassSpec& spec) {
  const int n = spec.lie.n;
  const int m = spec.m;
  const int N = spec.lie.N;
  std::map<int, IntVec> t;
  auto simple = [&](int i) { return simple_sum(n, {{i, 1}}); };
  if (spec.family == Family::T4) {
    if (spec.lie.series == Series::C) {
      for (int i = 1; i <= n; ++i) t[i] = simple(i);
    } else {
      for (int i = 2; i < n - 1; i += 2) t[i] = range_sum(n, i - 1, i + 1, 1);
      if (n % 2 == 0) {
        t[n] = simple(n);
      } else {
        t[n - 1] = simple_sum(n, {{n - 2, 1}, {n, 1}});
        t[n] = simple_sum(n, {{n - 2, 1}, {n - 1, 1}});
      }
    }
    return t;
  }
  if (m == 0) return t;
  switch (spec.lie.series) {
    case Series::A:
      if (2 * m == N) {
        for (int i = 1; i <= n; ++i) t[i] = simple(n + 1 - i);
      } else {
        for (int i = 1; i <= m - 1; ++i) t[i] = simple(n + 1 - i);
        for (int i = n + 2 - m; i <= n; ++i) t[i] = simple(n + 1 - i);
        t[m] = range_sum(n, m + 1, n + 1 - m, 1);
        t[n + 1 - m] = range_sum(n, m, n - m, 1);
      }
      break;
    case Series::B:
      for (int i = 1; i < m; ++i) t[i] = simple(i);
      t[m] = plus(simple(m), range_sum(n, m + 1, n, 2));
      break;
    case Series::D:
      if (m == n) {
        for (int i = 1; i <= n; ++i) t[i] = simple(i);
      } else {
        for (int i = 1; i < m; ++i) t[i] = simple(i);
        if (m == n - 1) {
          t[n - 1] = simple(n);
          t[n] = simple(n - 1);
        } else {
          t[m] = plus(plus(simple(m), range_sum(n, m + 1, n - 2, 2)), simple_sum(n, {{n - 1, 1}, {n, 1}}));
        }
      }
      break;
    case Series::C:
      for (int i = 1; i <= m / 2 - 1; ++i) t[2 * i] = range_sum(n, 2 * i - 1, 2 * i + 1, 1);
      if (m < n) {
        t[m] = plus(plus(simple_sum(n, {{m - 1, 1}, {m, 1}}), range_sum(n, m + 1, n - 1, 2)), simple(n));
      } else {
        t[m] = simple_sum(n, {{m - 1, 2}, {m, 1}});
      }
      break;
  }
  return t;
}

std::map<int, int> tabulated_prime(const ClassSpec& spec) {
  const int n = spec.lie.n;
  const int m = spec.m;
  std::map<int, int> p;
  const std::vector<int> l = tabulated_pi_l(spec);
  for (int i = 1; i <= n; ++i) {
    if (std::find(l.begin(), l.end(), i) == l.end()) p[i] = i;
  }
  if (spec.family == Family::T2 && spec.lie.series == Series::A && m > 0) {
    for (int i = 1; i <= m; ++i) {
      p[i] = n + 1 - i;
      p[n + 1 - i] = i;
    }
  }
  const bool d_arc = spec.lie.series == Series::D &&
                     ((spec.family == Family::T2 && m == n - 1) || (spec.family == Family::T4 && n % 2));
  if (d_arc) {
    p[n - 1] = n;
    p[n] = n - 1;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Satake text
// ---------------------------------------------------------------------------

namespace {

std::string root_text(const IntVec& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (c[k] != 1) out += std::to_string(c[k]) + "*";
    out += "a" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string satake_text(const ThetaData& td) {
  std::ostringstream os;
  os << td.spec.id() << "\n";
  os << "nodes:";
  for (int i = 1; i <= td.spec.lie.n; ++i) {
    const bool filled = std::find(td.pi_l.begin(), td.pi_l.end(), i) != td.pi_l.end();
    os << " a" << i << (filled ? "[*]" : "[o]");
  }
  os << "\nPi_l = ";
  if (td.pi_l.empty()) {
    os << "∅";
  } else {
    os << "{";
    for (std::size_t k = 0; k < td.pi_l.size(); ++k) os << (k ? ", a" : "a") << td.pi_l[k];
    os << "}";
  }
  os << "\narcs:";
  bool any = false;
  for (const auto& [a, b] : td.prime_pairing) {
    if (a < b) {
      os << " a" << a << "<->a" << b;
      any = true;
    }
  }
  if (!any) os << " none";
  os << "\n";
  for (const auto& [a, c] : td.tilde_simple) os << "  a" << a << "~ = " << root_text(c) << "\n";
  return os.str();
}

}  // namespace qsc
