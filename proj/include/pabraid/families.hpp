#pragma once

// The braid families beta_{m,n} and sigma_{m,n}.
//
// Each pseudo-Anosov member has a train-track transition matrix of dimension
// m+n+2 and a closed-form characteristic polynomial built from
// R_m(t) = t^m (t - 1) - 2:
//
//   beta:  T_{m,n}(t) = t^(n+1) R_m(t) + (R_m)_*(t)
//   sigma: S_{m,n}(t) = t^(n+1) R_m(t) - (R_m)_*(t)      (n >= m + 2)
//
// The dilatation is the largest real root. Sigma parameters are normalized to
// n > m, since sigma_{m,n} and sigma_{n,m} share their dilatation.

#include "pabraid/linalg.hpp"
#include "pabraid/poly.hpp"
#include "pabraid/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pabraid {

/// Parameters that fail a precondition (bad m, n, g or a non-pA member).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent routes to the same quantity disagreed.
class CrossCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family { beta, sigma };

struct FamilyParams {
  Family family = Family::beta;
  int m = 1;
  int n = 1;

  /// (m + n) / 2; empty when m + n is odd.
  std::optional<int> g() const;
  /// Throws InvalidParameters unless m >= 1 and n >= 1.
  void validate() const;
  /// Sigma parameters with m and n swapped so that n >= m; beta unchanged.
  FamilyParams normalized() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

enum class TNClass { pseudo_anosov, reducible, periodic };

enum class Provenance { closed_form, matrix_charpoly, both_agree };

struct DilatationResult {
  FamilyParams params;
  TNClass tn = TNClass::pseudo_anosov;
  /// Present iff tn == pseudo_anosov.
  std::optional<IntPolynomial> defining_poly;
  std::optional<RootEnclosure> root;
  std::optional<Provenance> provenance;
};

/// Prong counts of the invariant foliations on the sphere.
struct SingularityData {
  int marked_point_prongs = 1;
  int marked_point_count = 0;
  int p_prongs = 0;
  /// Second interior fixed point; beta only.
  std::optional<int> q_prongs;
  int p_infinity_prongs = 0;

  /// Sum over all singularities of (2 - prongs); equals 4 on the sphere.
  int euler_poincare_sum() const;
};

std::string_view to_string(Family f);
std::string_view to_string(TNClass c);
std::string_view to_string(Provenance p);
/// "beta"/"sigma"; throws InvalidParameters otherwise.
Family parse_family(std::string_view text);

TNClass classify(const FamilyParams& params);

/// t^(m+1) - t^m - 2.
IntPolynomial r_poly(int m);
/// The (m+1) x (m+1) transition matrix of the subgraph map, with
/// char_poly(r_matrix(m)) == r_poly(m).
IntMatrix r_matrix(int m);

/// T_{m,n} or S_{m,n}; rejects non-pA parameters.
IntPolynomial closed_form_poly(const FamilyParams& params);

/// T'_{m,n} for beta, S'_{m,n} for sigma (normalized to n > m).
/// Basis order: v_1..v_m = e(p,1)..e(p,m); v_{m+1} = e(p,m+n+1);
/// v_{m+1+k} = e(m+k, m+k+1) for k = 1..n; v_{m+n+2} = e(p,m+1).
IntMatrix transition_matrix(const FamilyParams& params);

/// w = 2(v_1+..+v_m) + v_{m+1} - (v_{m+2}+..+v_{m+n+1}) + v_{m+n+2}, the
/// eigenvalue-1 vector of S'_{m,n}. Sigma pA range only; normalized.
std::vector<Integer> kernel_vector(int m, int n);

/// Largest real root above 1 of the closed form, cross-checked against the
/// characteristic polynomial of the transition matrix. Non-pA sigma members
/// come back with only `tn` filled in. Throws CrossCheckError when the two
/// routes disagree.
DilatationResult dilatation(const FamilyParams& params, double tol = 1e-9);

SingularityData singularity_data(const FamilyParams& params);

/// Whether the pA map lifts to an orientable pA map on a closed surface
/// with the same dilatation.
bool orientable_lift(const FamilyParams& params);

/// t^(2g+1) - 2 t^(g+1) - 2 t^g + 1.
IntPolynomial minimizer_equation(int g);

struct MinimizerReport {
  int g = 0;
  DilatationResult result;
  /// Largest real root of minimizer_equation(g).
  RootEnclosure equation_root;
  /// |lambda^(2g+1) - 2 lambda^(g+1) - 2 lambda^g + 1| at the witness.
  Real equation_residual;
  /// |lambda^(g+1) - (lambda + 1 + sqrt(lambda^2 + lambda + 1))| at the witness.
  Real closed_form_residual;
  /// (2 + sqrt 3)^(1/(g+1)) < lower and upper < (2 + sqrt 3)^(1/g),
  /// decided in exact arithmetic.
  bool lower_bound_holds = false;
  bool upper_bound_holds = false;
  /// Numeric values of the two bounds, for reporting.
  double lower_bound = 0;
  double upper_bound = 0;
};

/// Dilatation of sigma_{g-1,g+1}, the least dilatation among both families
/// with m + n = 2g, together with its defining-equation and bound checks.
MinimizerReport minimizer(int g, double tol = 1e-9);

/// Decides 2 + sqrt 3 < x^k (sign > 0) or x^k < 2 + sqrt 3 (sign < 0) exactly.
int compare_power_with_two_plus_sqrt3(const Rational& x, int k);

}  // namespace pabraid
