#pragma once
// Classical root systems in the epsilon basis, symmetric classes and the
// involution theta they induce on weights.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsc {

using IntVec = std::vector<int>;

enum class Series { A, B, C, D };
enum class Family { T2, T4 };

std::string to_string(Series s);
std::string to_string(Family f);

struct LieSeries {
  Series series = Series::A;
  int n = 1;  ///< rank
  int N = 2;  ///< size of the natural representation

  /// Throws InvalidSpec on a bad rank.
  static LieSeries make(Series s, int n);
  /// From "sl" | "so" | "sp" and the matrix size.
  static LieSeries from_algebra(const std::string& algebra, int N);

  std::string algebra() const;  ///< "sl", "so" or "sp"
  std::string label() const;    ///< e.g. "so(5)"
  bool orthogonal() const { return series == Series::B || series == Series::D; }
  bool symplectic() const { return series == Series::C; }
  /// +1 orthogonal, -1 symplectic, 0 for sl.
  int epsilon() const;
  int prime(int i) const { return N + 1 - i; }
  /// Length of epsilon-coordinate vectors: N for sl, n otherwise.
  int coord_dim() const { return series == Series::A ? N : n; }

  friend bool operator==(const LieSeries&, const LieSeries&) = default;
};

struct RootSystem {
  LieSeries lie;
  std::vector<IntVec> simple_roots;    ///< alpha_1 .. alpha_n
  std::vector<IntVec> positive_roots;  ///< ordered by height, then lexicographically
  IntVec two_rho;                      ///< 2(rho, eps_k) per coordinate
  std::vector<IntVec> cartan_pairing;  ///< (alpha_i, alpha_j)
  IntVec kappa;                        ///< kappa_j for j = 1..N (index j-1)

  int pairing(const IntVec& a, const IntVec& b) const;
  /// Weight of the basis vector v_j, j = 1..N.
  IntVec weight(int j) const;
  /// 2(rho, wt v_j). Zero on the middle line of so(2n+1).
  int two_rho_of_basis(int j) const;
  /// Expansion in simple roots, if integral.
  std::optional<IntVec> simple_coordinates(const IntVec& v) const;
  IntVec from_simple_coordinates(const IntVec& c) const;
  bool is_positive_root(const IntVec& v) const;
  bool is_root(const IntVec& v) const;
};

/// Simple roots listed directly, positive roots by closure along root strings.
RootSystem build_root_system(const LieSeries& lie);

/// One symmetric conjugacy class.
struct ClassSpec {
  LieSeries lie;
  Family family = Family::T2;
  int m = 0;     ///< block size, T2 only
  int sign = 1;  ///< overall sign of the point
  int unit = 0;  ///< sl only: the point is scaled by i^unit

  /// Throws InvalidSpec.
  void validate() const;
  static ClassSpec make(const LieSeries& lie, Family family, int m, int sign, int unit = 0);

  /// Eigenvalue multiplicities: sign + gives (N-m, m), sign - gives (m, N-m).
  int P() const;
  int M() const;
  std::string id() const;  ///< e.g. "so(6) t2 m=1 +"

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

/// theta(eps_k) = sign[k] * eps_{target[k]} on coordinate indices (0-based).
struct SignedPermutation {
  std::vector<int> target;
  std::vector<int> sign;
  IntVec apply(const IntVec& v) const;
  bool is_involution() const;
};

struct ThetaData {
  ClassSpec spec;
  SignedPermutation theta;
  std::vector<int> pi_l;      ///< 1-based simple-root indices fixed by theta
  std::vector<int> bar_pi_l;  ///< the rest
  std::map<int, IntVec> tilde;         ///< alpha -> -theta(alpha), epsilon coordinates
  std::map<int, IntVec> tilde_simple;  ///< same in simple-root coordinates
  std::map<int, int> prime_pairing;    ///< alpha -> alpha'
};

ThetaData theta_for_class(const ClassSpec& spec, const RootSystem& rs);
inline ThetaData theta_for_class(const ClassSpec& spec) { return theta_for_class(spec, build_root_system(spec.lie)); }

/// alpha -> alpha~ in simple-root coordinates for alpha in bar Pi_l.
/// Throws PreconditionViolated if some alpha~ is not a positive root.
std::map<int, IntVec> tilde_table(const ThetaData& td, const RootSystem& rs);

/// The unique simple alpha' with alpha~ - alpha' in Z+ Pi_l.
int alpha_prime(const ThetaData& td, const RootSystem& rs, int alpha);

/// Hand-written tables of Pi_l, alpha~ (simple coordinates) and alpha', kept
/// independent of the theta computation so the two can be compared.
std::vector<int> tabulated_pi_l(const ClassSpec& spec);
std::map<int, IntVec> tabulated_tilde(const ClassSpec& spec);
std::map<int, int> tabulated_prime(const ClassSpec& spec);

/// Satake-style textual summary: filled nodes, open nodes, arcs, tilde table.
std::string satake_text(const ThetaData& td);

}  // namespace qsc
