#include "qsc/repoints.hpp"

#include <algorithm>
#include <cctype>

#include "qsc/errors.hpp"

namespace qsc {

ParamKind param_kind(const ClassSpec& spec) {
  const bool sp = spec.lie.symplectic();
  if (spec.family == Family::T2) return sp ? ParamKind::SkewBlock : ParamKind::SkewDiagonal;
  return sp ? ParamKind::SkewDiagonal : ParamKind::SkewBlock;
}

char param_letter(const ClassSpec& spec) { return param_kind(spec) == ParamKind::SkewDiagonal ? 'y' : 'z'; }

std::vector<std::pair<int, int>> param_pairs(const ClassSpec& spec) {
  const LieSeries& lie = spec.lie;
  std::vector<std::pair<int, int>> out;
  if (spec.family == Family::T2) {
    if (!lie.symplectic()) {
      for (int i = 1; i <= spec.m; ++i) out.emplace_back(i, lie.prime(i));
    } else {
      for (int i = 1; i < spec.m; i += 2) out.emplace_back(i, lie.N - i);
    }
  } else if (lie.symplectic()) {
    for (int i = 1; i <= lie.n; ++i) out.emplace_back(i, lie.prime(i));
  } else {
    for (int i = 1; i < lie.n; i += 2) out.emplace_back(i, lie.N - i);
    if (lie.n % 2) out.emplace_back(lie.n, lie.n);
  }
  return out;
}

QScalar pair_constant(const ClassSpec& spec) {
  const int N = spec.lie.N;
  if (spec.family == Family::T2) return QScalar::q_power(-N);
  if (spec.lie.symplectic()) return -QScalar::q_power(-N - 2);
  return -QScalar::q_power(-N + 2);
}

PointParams default_params(const ClassSpec& spec) {
  spec.validate();
  PointParams p;
  p.kind = param_kind(spec);
  const QScalar c = pair_constant(spec);
  for (auto [a, b] : param_pairs(spec)) {
    if (a == b) {
      // z_n^2 = -q^(-N+2) with N = 2n
      p.values[a] = QScalar::i() * QScalar::q_power(-spec.lie.n + 1);
    } else {
      p.values[a] = QScalar(1);
      p.values[b] = c;
    }
  }
  return p;
}

ParamValidation validate_params(const ClassSpec& spec, const PointParams& params) {
  ParamValidation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  if (params.kind != param_kind(spec)) fail("parameter kind does not match the class");
  const QScalar c = pair_constant(spec);
  std::map<int, bool> expected;
  for (auto [a, b] : param_pairs(spec)) {
    expected[a] = true;
    expected[b] = true;
    auto ia = params.values.find(a);
    auto ib = params.values.find(b);
    if (ia == params.values.end() || ib == params.values.end()) {
      fail("missing " + param_name(spec, ia == params.values.end() ? a : b));
      continue;
    }
    if (ia->second.is_zero() || ib->second.is_zero()) {
      fail(param_name(spec, ia->second.is_zero() ? a : b) + " is zero");
      continue;
    }
    const QScalar prod = ia->second * ib->second;
    if (!(prod == c)) {
      std::string lhs = a == b ? param_name(spec, a) + "^2" : param_name(spec, a) + "*" + param_name(spec, b);
      fail(lhs + " = " + prod.to_string() + " != " + c.to_string());
    }
  }
  for (const auto& [k, val] : params.values) {
    if (!expected.count(k)) fail("unexpected parameter index " + std::to_string(k));
  }
  return v;
}

std::string param_name(const ClassSpec& spec, int index) {
  const char letter = param_letter(spec);
  for (auto [a, b] : param_pairs(spec)) {
    if (index == a) return letter + std::to_string(a);
    if (index == b) return letter + std::to_string(a) + "'";
  }
  return letter + std::to_string(index);
}

int param_index(const ClassSpec& spec, const std::string& name) {
  const char letter = param_letter(spec);
  if (name.size() < 2 || name[0] != letter) {
    throw InvalidSpec("unknown parameter '" + name + "' (this class uses " + std::string(1, letter) + "-parameters)");
  }
  std::string digits = name.substr(1);
  bool primed = false;
  if (!digits.empty() && digits.back() == '\'') {
    primed = true;
    digits.pop_back();
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidSpec("malformed parameter name '" + name + "'");
  }
  const int i = std::stoi(digits);
  for (auto [a, b] : param_pairs(spec)) {
    if (primed && i == a) return b;
    if (!primed && (i == a || i == b)) return i;
  }
  throw InvalidSpec("parameter '" + name + "' does not exist for " + spec.id());
}

PointParams complete_params(const ClassSpec& spec, const std::map<int, QScalar>& overrides) {
  PointParams p = default_params(spec);
  const QScalar c = pair_constant(spec);
  for (auto [a, b] : param_pairs(spec)) {
    const bool has_a = overrides.count(a) > 0;
    const bool has_b = overrides.count(b) > 0;
    if (has_a) p.values[a] = overrides.at(a);
    if (has_b) p.values[b] = overrides.at(b);
    if (has_a && !has_b && a != b) {
      if (overrides.at(a).is_zero()) throw ConstraintViolation(param_name(spec, a) + " must be nonzero");
      p.values[b] = c / overrides.at(a);
    }
  }
  for (const auto& [k, v] : overrides) {
    if (!p.values.count(k)) throw InvalidSpec("parameter index " + std::to_string(k) + " does not exist");
  }
  return p;
}

GaussRational unit_scalar(int unit) {
  switch (((unit % 4) + 4) % 4) {
    case 0: return GaussRational(1);
    case 1: return GaussRational::i();
    case 2: return GaussRational(-1);
    default: return -GaussRational::i();
  }
}

namespace {

// Shared shape of A and A0: diagonal d_first on lines <= m, d_mid on the
// middle lines, zero on the last m lines, then the parameter terms.
template <class T>
Matrix<T> assemble(const ClassSpec& spec, const T& d_first, const T& d_mid, const std::map<int, T>& values) {
  const LieSeries& lie = spec.lie;
  const int N = lie.N;
  Matrix<T> A(static_cast<std::size_t>(N));
  auto at = [&](int r, int c) -> T& { return A(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)); };
  if (spec.family == Family::T2) {
    for (int i = 1; i <= N; ++i) {
      if (i <= spec.m) {
        at(i, i) = d_first;
      } else if (i < lie.prime(spec.m)) {
        at(i, i) = d_mid;
      }
    }
  }
  for (const auto& [a, v] : values) {
    if (param_kind(spec) == ParamKind::SkewDiagonal) {
      at(a, lie.prime(a)) += v;
    } else {
      at(a, lie.prime(a) - 1) += v;
      at(a + 1, lie.prime(a)) -= v;
    }
  }
  T scale = T(unit_scalar(spec.unit));
  if (spec.sign < 0) scale = -scale;
  if (!scale.is_one()) A *= scale;
  return A;
}

}  // namespace

QMatrix point_matrix(const ClassSpec& spec, const PointParams& params) {
  spec.validate();
  const int m = spec.m;
  const QScalar d_mid = QScalar::q_power(-m);
  const QScalar d_first = d_mid * (QScalar(1) - QScalar::q_power(-spec.lie.N + 2 * m));
  return assemble<QScalar>(spec, d_first, d_mid, params.values);
}

namespace {

CMatrix classical_matrix(const ClassSpec& spec, const std::map<int, GaussRational>& values, bool check) {
  spec.validate();
  if (check) {
    const GaussRational c = spec.family == Family::T2 ? GaussRational(1) : GaussRational(-1);
    for (auto [a, b] : param_pairs(spec)) {
      if (!values.count(a) || !values.count(b)) throw ConstraintViolation("missing classical parameter " + param_name(spec, a));
      if (!(values.at(a) * values.at(b) == c)) {
        throw ConstraintViolation("classical constraint violated for " + param_name(spec, a) + ": product " +
                                  (values.at(a) * values.at(b)).to_string() + " != " + c.to_string());
      }
    }
  }
  return assemble<GaussRational>(spec, GaussRational(0), GaussRational(1), values);
}

QuantumPoint make_point(const ClassSpec& spec, const PointParams& params, bool check) {
  spec.validate();
  if (check) {
    ParamValidation v = validate_params(spec, params);
    if (!v.ok) {
      std::string msg = "parameter constraint violated:";
      for (const auto& s : v.violations) msg += " " + s + ";";
      throw ConstraintViolation(msg);
    }
  }
  QuantumPoint p;
  p.spec = spec;
  p.params = params;
  p.A = point_matrix(spec, params);
  std::map<int, GaussRational> at_one;
  for (const auto& [k, v] : params.values) at_one[k] = v.eval_at_one();
  p.A0 = classical_matrix(spec, at_one, check);
  return p;
}

}  // namespace

CMatrix classical_point(const ClassSpec& spec, const std::map<int, GaussRational>& params_at_one) {
  return classical_matrix(spec, params_at_one, true);
}

QuantumPoint quantum_point(const ClassSpec& spec, const PointParams& params) { return make_point(spec, params, true); }

QuantumPoint quantum_point_unchecked(const ClassSpec& spec, const PointParams& params) {
  return make_point(spec, params, false);
}

}  // namespace qsc
