#pragma once
// The natural representation of U_q(g) on C^N and the q-trace.

#include <vector>

#include "qsc/check.hpp"
#include "qsc/matrix.hpp"
#include "qsc/rootdata.hpp"

namespace qsc {

struct NaturalRep {
  LieSeries lie;
  std::vector<QMatrix> e;      ///< pi(e_i), index i-1
  std::vector<QMatrix> f;      ///< pi(f_i)
  std::vector<QMatrix> k;      ///< pi(q^{h_i}), diagonal
  std::vector<QMatrix> k_inv;  ///< pi(q^{-h_i})
  std::vector<QMatrix> F;      ///< pi(q^{h_i}) pi(f_i)
  std::vector<IntVec> k_exponents;  ///< exponent of q on each diagonal line of pi(q^{h_i})

  /// prod_i pi(q^{h_i})^{c_i} for integer c (diagonal).
  QMatrix cartan(const IntVec& c) const;
};

NaturalRep build_natural_rep(const LieSeries& lie);

/// Relations (i), (ii), (iii) and (iv): one record per relation family.
std::vector<CheckRecord> check_defining_relations(const NaturalRep& rep, const RootSystem& rs);

/// R (pi⊗pi)(Delta x) = (pi⊗pi)(Delta^op x) R for x = e_i, f_i, q^{±h_i}.
std::vector<CheckRecord> check_rtt_compat(const NaturalRep& rep, const QMatrix& R);

/// Sum_j q^{2(rho, wt v_j)} A_jj.
QScalar q_trace(const QMatrix& A, const RootSystem& rs);

}  // namespace qsc
