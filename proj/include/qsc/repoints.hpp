#pragma once
// Classical points A0 and their quantizations A.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsc/matrix.hpp"
#include "qsc/rootdata.hpp"

namespace qsc {

/// y-parameters sit on the skew diagonal (i, i'); z-parameters weight the
/// 2x2 blocks z_i (e_{i,i'-1} - e_{i+1,i'}).
enum class ParamKind { SkewDiagonal, SkewBlock };

struct PointParams {
  ParamKind kind = ParamKind::SkewDiagonal;
  std::map<int, QScalar> values;  ///< 1-based index -> value
};

struct QuantumPoint {
  ClassSpec spec;
  PointParams params;
  QMatrix A;
  CMatrix A0;
};

ParamKind param_kind(const ClassSpec& spec);
char param_letter(const ClassSpec& spec);  ///< 'y' or 'z'

/// Constrained pairs (free index, partner index); a self-paired index appears as (i, i).
std::vector<std::pair<int, int>> param_pairs(const ClassSpec& spec);
/// The required product of each pair: q^-N, -q^(-N-2), q^-N or -q^(-N+2).
QScalar pair_constant(const ClassSpec& spec);

PointParams default_params(const ClassSpec& spec);

struct ParamValidation {
  bool ok = true;
  std::vector<std::string> violations;
};
ParamValidation validate_params(const ClassSpec& spec, const PointParams& params);

/// Resolves "y1", "y1'" (partner of 1), "z3", ... to a parameter index. Throws InvalidSpec.
int param_index(const ClassSpec& spec, const std::string& name);
/// Display name of an index, e.g. "y1" or "y1'".
std::string param_name(const ClassSpec& spec, int index);

/// Defaults with overrides applied. Overriding only the free member of a pair
/// re-derives its partner from the constraint; overriding only the partner
/// keeps the free default.
PointParams complete_params(const ClassSpec& spec, const std::map<int, QScalar>& overrides);

/// The displayed matrix for given parameters, with no constraint check.
QMatrix point_matrix(const ClassSpec& spec, const PointParams& params);

/// Classical point from parameters at q = 1. Throws ConstraintViolation.
CMatrix classical_point(const ClassSpec& spec, const std::map<int, GaussRational>& params_at_one);

/// Throws ConstraintViolation when params break the family constraint.
QuantumPoint quantum_point(const ClassSpec& spec, const PointParams& params);
/// Same without the constraint check, for negative controls.
QuantumPoint quantum_point_unchecked(const ClassSpec& spec, const PointParams& params);

/// i^unit as a scalar.
GaussRational unit_scalar(int unit);

}  // namespace qsc
