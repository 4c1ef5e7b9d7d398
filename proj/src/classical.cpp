#include "qsc/classical.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qsc/natrep.hpp"

namespace qsc {

namespace {

GaussRational trace_product(const CMatrix& x, const CMatrix& y) {
  GaussRational s;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (!x(i, k).is_zero() && !y(k, i).is_zero()) s += x(i, k) * y(k, i);
    }
  }
  return s;
}

CMatrix bracket(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

std::string root_label(const IntVec& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c[k]);
  }
  return "(" + s + ")";
}

}  // namespace

ClassicalAlgebraData build_classical_algebra(const LieSeries& lie) {
  ClassicalAlgebraData d;
  d.lie = lie;
  d.roots = build_root_system(lie);
  const NaturalRep rep = build_natural_rep(lie);
  const int n = lie.n;
  std::vector<CMatrix> es, fs;
  for (int i = 0; i < n; ++i) {
    es.push_back(eval_at_one(rep.e[static_cast<std::size_t>(i)]));
    fs.push_back(eval_at_one(rep.f[static_cast<std::size_t>(i)]));
    d.h.push_back(bracket(es.back(), fs.back()));
  }

  const auto& pos = d.roots.positive_roots;
  std::map<IntVec, std::size_t> where;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    const IntVec c = *d.roots.simple_coordinates(pos[a]);
    int height = 0;
    for (int x : c) height += x;
    CMatrix e, f;
    if (height == 1) {
      std::size_t i = 0;
      while (c[i] == 0) ++i;
      e = es[i];
      f = fs[i];
    } else {
      bool found = false;
      for (int i = 0; i < n && !found; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        IntVec rest = c;
        rest[static_cast<std::size_t>(i)] -= 1;
        auto it = where.find(rest);
        if (it == where.end()) continue;
        e = bracket(es[static_cast<std::size_t>(i)], d.e[it->second]);
        f = bracket(d.f[it->second], fs[static_cast<std::size_t>(i)]);
        found = !e.is_zero();
      }
      if (!found) throw PreconditionViolated("no bracket produces the root vector " + root_label(c));
    }
    const GaussRational t = trace_product(e, f);
    if (t.is_zero()) throw PreconditionViolated("trace form degenerate on " + root_label(c));
    f *= t.inverse();
    where[c] = d.e.size();
    d.e.push_back(std::move(e));
    d.f.push_back(std::move(f));
  }

  for (int i = 0; i < n; ++i) {
    d.basis.push_back(d.h[static_cast<std::size_t>(i)]);
    d.labels.push_back("h" + std::to_string(i + 1));
  }
  for (std::size_t a = 0; a < pos.size(); ++a) {
    d.basis.push_back(d.e[a]);
    d.labels.push_back("e" + root_label(*d.roots.simple_coordinates(pos[a])));
  }
  for (std::size_t a = 0; a < pos.size(); ++a) {
    d.basis.push_back(d.f[a]);
    d.labels.push_back("f" + root_label(*d.roots.simple_coordinates(pos[a])));
  }

  const std::size_t D = d.basis.size();
  d.gram = CMatrix(D);
  for (std::size_t a = 0; a < D; ++a) {
    for (std::size_t b = a; b < D; ++b) {
      d.gram(a, b) = trace_product(d.basis[a], d.basis[b]);
      d.gram(b, a) = d.gram(a, b);
    }
  }
  d.omega = inverse(d.gram);
  d.rho_cl = CMatrix(D);
  for (std::size_t a = 0; a < pos.size(); ++a) {
    d.rho_cl(d.e_offset() + a, d.f_offset() + a) = GaussRational(1);
    d.rho_cl(d.f_offset() + a, d.e_offset() + a) = GaussRational(-1);
  }
  return d;
}

const ClassicalAlgebraData& classical_algebra(const LieSeries& lie) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ClassicalAlgebraData>> cache;
  const auto key = std::make_pair(static_cast<int>(lie.series), lie.n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<ClassicalAlgebraData>(build_classical_algebra(lie));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

std::vector<GaussRational> coordinates(const ClassicalAlgebraData& data, const CMatrix& y) {
  const std::size_t D = data.dim();
  std::vector<GaussRational> t(D), c(D);
  for (std::size_t b = 0; b < D; ++b) t[b] = trace_product(data.basis[b], y);
  for (std::size_t k = 0; k < D; ++k) {
    for (std::size_t b = 0; b < D; ++b) {
      if (!data.omega(k, b).is_zero() && !t[b].is_zero()) c[k] += data.omega(k, b) * t[b];
    }
  }
  CMatrix back(y.rows(), y.cols());
  for (std::size_t k = 0; k < D; ++k) {
    if (!c[k].is_zero()) back += data.basis[k] * c[k];
  }
  if (!(back == y)) throw PreconditionViolated("matrix does not lie in " + data.lie.label());
  return c;
}

CMatrix adjoint_matrix(const ClassicalAlgebraData& data, const CMatrix& a) {
  const CMatrix a_inv = inverse(a);
  const std::size_t D = data.dim();
  CMatrix M(D);
  for (std::size_t j = 0; j < D; ++j) {
    const auto c = coordinates(data, a * data.basis[j] * a_inv);
    for (std::size_t k = 0; k < D; ++k) M(k, j) = c[k];
  }
  return M;
}

bool BivectorValue::is_antisymmetric() const { return coeffs == -coeffs.transpose(); }

GaussRational BivectorValue::largest() const {
  GaussRational best;
  Rational best_norm = 0;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    for (std::size_t c = 0; c < coeffs.cols(); ++c) {
      const Rational nn = coeffs(r, c).norm();
      if (nn > best_norm) {
        best_norm = nn;
        best = coeffs(r, c);
      }
    }
  }
  return best;
}

namespace {

CMatrix omega_terms(const ClassicalAlgebraData& data, const CMatrix& M) {
  return data.omega * M.transpose() - M * data.omega;
}

}  // namespace

BivectorValue omega_part(const ClassicalAlgebraData& data, const CMatrix& a) {
  return {omega_terms(data, adjoint_matrix(data, a))};
}

BivectorValue bivector_at(const ClassicalAlgebraData& data, const CMatrix& a) {
  const CMatrix M = adjoint_matrix(data, a);
  const CMatrix D = M - CMatrix::identity(data.dim());
  return {D * data.rho_cl * D.transpose() + omega_terms(data, M)};
}

CheckRecord check_lemma2(const ClassicalAlgebraData& data, const CMatrix& a) {
  const CMatrix M = adjoint_matrix(data, a);
  if (!(M * M == CMatrix::identity(data.dim()))) throw PreconditionViolated("Ad_a is not an involution");
  CheckRecord r = expect_zero("poisson_omega_part", omega_terms(data, M));
  if (r.pass) r.detail = "omega part vanishes";
  return r;
}

CheckRecord check_lemma1_equivariance(const ClassicalAlgebraData& data, const CMatrix& a, const CMatrix& b) {
  const CMatrix Mb = adjoint_matrix(data, b);
  const CMatrix lhs = omega_part(data, b * a * inverse(b)).coeffs;
  const CMatrix rhs = Mb * omega_part(data, a).coeffs * Mb.transpose();
  return compare_matrices("poisson_equivariance", lhs, rhs);
}

CheckRecord check_bivector_zero(const ClassicalAlgebraData& data, const CMatrix& a) {
  const BivectorValue v = bivector_at(data, a);
  if (!v.is_antisymmetric()) return verdict("poisson_bivector", false, "bivector is not antisymmetric");
  CheckRecord r = expect_zero("poisson_bivector", v.coeffs);
  r.detail = r.pass ? "bivector vanishes" : "largest coefficient " + v.largest().to_string();
  return r;
}

std::vector<CheckRecord> check_classical_algebra(const ClassicalAlgebraData& data) {
  std::vector<CheckRecord> out;
  const auto& rs = data.roots;
  const int n = data.lie.n;
  bool ok = true;
  std::string detail;
  // h_i acts on v_j by s_i (alpha_i, wt v_j); find s_i and confirm it fits every line
  std::vector<Rational> scale(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n && ok; ++i) {
    const IntVec& ai = rs.simple_roots[static_cast<std::size_t>(i)];
    const CMatrix& h = data.h[static_cast<std::size_t>(i)];
    Rational& s = scale[static_cast<std::size_t>(i)];
    for (int j = 1; j <= data.lie.N && s == 0; ++j) {
      const int p = rs.pairing(ai, rs.weight(j));
      if (p != 0) s = h(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)).re() / p;
    }
    for (int j = 1; j <= data.lie.N; ++j) {
      const GaussRational want(Rational(s * rs.pairing(ai, rs.weight(j))));
      if (!(h(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) == want)) ok = false;
    }
    if (!h.is_zero() && s == 0) ok = false;
    if (!ok) detail = "h" + std::to_string(i + 1) + " is not a weight functional";
  }
  for (std::size_t a = 0; a < data.e.size() && ok; ++a) {
    const IntVec& beta = rs.positive_roots[a];
    for (int i = 0; i < n && ok; ++i) {
      const IntVec& ai = rs.simple_roots[static_cast<std::size_t>(i)];
      const GaussRational value(Rational(scale[static_cast<std::size_t>(i)] * rs.pairing(beta, ai)));
      const CMatrix& h = data.h[static_cast<std::size_t>(i)];
      if (!(bracket(h, data.e[a]) == data.e[a] * value) || !(bracket(h, data.f[a]) == data.f[a] * -value)) {
        ok = false;
        detail = data.labels[data.e_offset() + a] + " against h" + std::to_string(i + 1);
      }
    }
  }
  out.push_back(verdict("root_vectors", ok, ok ? std::to_string(data.e.size()) + " positive roots" : detail));

  ok = true;
  for (std::size_t a = 0; a < data.e.size() && ok; ++a) {
    ok = trace_product(data.e[a], data.f[a]).is_one();
  }
  out.push_back(verdict("form_normalization", ok));

  CheckRecord inv = verdict("omega_invariance", true, "dim " + std::to_string(data.dim()));
  for (std::size_t x = 0; x < data.dim() && inv.pass; ++x) {
    CMatrix Dx(data.dim());
    for (std::size_t j = 0; j < data.dim(); ++j) {
      const auto c = coordinates(data, bracket(data.basis[x], data.basis[j]));
      for (std::size_t k = 0; k < data.dim(); ++k) Dx(k, j) = c[k];
    }
    CheckRecord r = expect_zero("omega_invariance", Dx * data.omega + data.omega * Dx.transpose());
    if (!r.pass) {
      r.detail = "ad " + data.labels[x] + ": " + r.detail;
      inv = r;
    }
  }
  out.push_back(inv);
  return out;
}

}  // namespace qsc
