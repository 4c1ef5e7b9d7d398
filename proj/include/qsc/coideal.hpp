#pragma once
// Generators of the coideal stabilizer U_q(k) in the natural representation.

#include <optional>
#include <string>
#include <vector>

#include "qsc/check.hpp"
#include "qsc/natrep.hpp"
#include "qsc/repoints.hpp"
#include "qsc/rootdata.hpp"

namespace qsc {

/// [x, y]_a = xy - a yx
QMatrix q_commutator(const QMatrix& x, const QMatrix& y, const QScalar& a);

/// Iterated q-commutator [..[[F_{i0}, F_{i1}]_{a1}, F_{i2}]_{a2} .. ].
struct FWord {
  struct Step {
    int index = 0;
    QScalar coeff;  ///< unused on the first step
  };
  std::vector<Step> steps;

  std::string text() const;
  /// Letter multiplicities, i.e. the root in simple coordinates.
  IntVec letter_counts(int n) const;
};

/// The word for F_{alpha~}. Throws InvalidSpec when alpha is fixed by theta.
FWord f_tilde_word(const ClassSpec& spec, int alpha);
QMatrix evaluate_word(const NaturalRep& rep, const FWord& word);
QMatrix f_tilde_root_vector(const NaturalRep& rep, const ClassSpec& spec, int alpha);

/// The c with [base + c F, A] = 0. Throws Inconsistent or Underdetermined.
QScalar solve_mixture(const QMatrix& base, const QMatrix& F_tilde, const QMatrix& A);

/// Tabulated closed form of c_alpha.
struct TabulatedMixture {
  std::optional<QScalar> value;      ///< absent when no unambiguous formula applies
  std::optional<QScalar> candidate;  ///< a reading offered when value is absent
  std::string note;
};
TabulatedMixture mixture_formula(const ClassSpec& spec, int alpha, const PointParams& params);

struct CoidealGen {
  int alpha = 0;
  FWord word;
  IntVec tilde;      ///< alpha~ in simple coordinates
  QMatrix cartan;    ///< pi(q^{h_{alpha~} - h_alpha})
  QMatrix F_tilde;
  std::optional<QScalar> c_solved;
  std::string solve_error;
  TabulatedMixture tabulated;
  QMatrix X;
  std::string verdict;  ///< match | mismatch | candidate-match | candidate-mismatch | no-formula | unsolved
};

struct NamedMatrix {
  std::string name;
  QMatrix m;
};

struct StabilizerSet {
  std::vector<NamedMatrix> l_generators;
  std::vector<NamedMatrix> cartan_generators;
  std::vector<CoidealGen> mixed;
};

StabilizerSet build_stabilizer(const NaturalRep& rep, const ThetaData& td, const PointParams& params, const QMatrix& A);

/// [g, A] = 0 for every generator; one record per group plus one per mixed generator.
std::vector<CheckRecord> check_stabilizer(const StabilizerSet& ss, const QMatrix& A);

}  // namespace qsc
