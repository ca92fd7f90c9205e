#include "pabraid/families.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace pabraid {

std::optional<int> FamilyParams::g() const {
  if ((m + n) % 2 != 0) return std::nullopt;
  return (m + n) / 2;
}

void FamilyParams::validate() const {
  if (m < 1 || n < 1) {
    throw InvalidParameters("m and n must be >= 1 (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
}

FamilyParams FamilyParams::normalized() const {
  if (family == Family::sigma && m > n) return {family, n, m};
  return *this;
}

int SingularityData::euler_poincare_sum() const {
  int sum = marked_point_count * (2 - marked_point_prongs);
  sum += 2 - p_prongs;
  if (q_prongs) sum += 2 - *q_prongs;
  sum += 2 - p_infinity_prongs;
  return sum;
}

std::string_view to_string(Family f) { return f == Family::beta ? "beta" : "sigma"; }

std::string_view to_string(TNClass c) {
  switch (c) {
    case TNClass::pseudo_anosov: return "pseudo_anosov";
    case TNClass::reducible: return "reducible";
    case TNClass::periodic: return "periodic";
  }
  return "pseudo_anosov";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::matrix_charpoly: return "matrix_charpoly";
    case Provenance::both_agree: return "both_agree";
  }
  return "both_agree";
}

Family parse_family(std::string_view text) {
  if (text == "beta") return Family::beta;
  if (text == "sigma") return Family::sigma;
  throw InvalidParameters("family must be 'beta' or 'sigma', got '" + std::string(text) + "'");
}

TNClass classify(const FamilyParams& params) {
  params.validate();
  if (params.family == Family::beta) return TNClass::pseudo_anosov;
  const int gap = std::abs(params.m - params.n);
  if (gap == 0) return TNClass::periodic;
  if (gap == 1) return TNClass::reducible;
  return TNClass::pseudo_anosov;
}

namespace {

void require_pseudo_anosov(const FamilyParams& params, std::string_view what) {
  const TNClass c = classify(params);
  if (c != TNClass::pseudo_anosov) {
    throw InvalidParameters(std::string(what) + ": " + std::string(to_string(params.family)) + "(" +
                            std::to_string(params.m) + "," + std::to_string(params.n) + ") is " +
                            std::string(to_string(c)) + ", not pseudo-Anosov");
  }
}

void require_m(int m) {
  if (m < 1) throw InvalidParameters("m must be >= 1 (got " + std::to_string(m) + ")");
}

}  // namespace

IntPolynomial r_poly(int m) {
  require_m(m);
  std::vector<Integer> c(static_cast<std::size_t>(m) + 2);
  c[0] = -2;
  c[static_cast<std::size_t>(m)] = -1;
  c[static_cast<std::size_t>(m) + 1] = 1;
  return IntPolynomial(std::move(c));
}

IntMatrix r_matrix(int m) {
  require_m(m);
  const auto d = static_cast<std::size_t>(m) + 1;
  IntMatrix r(d);
  // Superdiagonal shift on e(p,1)..e(p,m), then the last column (2, 1) and
  // the wrap-around entry in the bottom-left corner.
  for (std::size_t j = 1; j + 1 < d; ++j) r(j - 1, j) = 1;
  r(d - 2, d - 1) = 2;
  r(d - 1, d - 1) = 1;
  r(d - 1, 0) = 1;
  return r;
}

IntPolynomial closed_form_poly(const FamilyParams& params) {
  require_pseudo_anosov(params, "closed_form_poly");
  const FamilyParams p = params.normalized();
  return salem_boyd({r_poly(p.m), static_cast<std::size_t>(p.n) + 1,
                     p.family == Family::beta ? SalemBoydSign::plus : SalemBoydSign::minus});
}

IntMatrix transition_matrix(const FamilyParams& params) {
  require_pseudo_anosov(params, "transition_matrix");
  const FamilyParams p = params.normalized();
  const auto m = static_cast<std::size_t>(p.m);
  const auto n = static_cast<std::size_t>(p.n);
  IntMatrix t(m + n + 2);
  // 1-based indices as in the basis description.
  auto set = [&t](std::size_t row, std::size_t col, long v) { t(row - 1, col - 1) = v; };

  // Upper-left block: r_matrix(m) on v_1..v_{m+1}.
  for (std::size_t j = 2; j <= m; ++j) set(j - 1, j, 1);
  set(m, m + 1, 2);
  set(m + 1, m + 1, 1);
  set(m + 1, 1, 1);
  // Coupling from v_{m+2} and v_{m+n+2} into the upper block.
  set(m, m + 2, 1);
  set(m + 1, m + 2, 2);
  set(m, m + n + 2, 1);
  // Lower block: shift along the edges e(m+k, m+k+1).
  for (std::size_t k = 1; k < n; ++k) set(m + 1 + k, m + 2 + k, 1);
  set(m + n + 2, m + 2, -1);
  // The entry that distinguishes S' from T'.
  set(m + n + 1, m + 1, p.family == Family::beta ? 1 : -1);
  return t;
}

std::vector<Integer> kernel_vector(int m, int n) {
  const FamilyParams p = FamilyParams{Family::sigma, m, n};
  require_pseudo_anosov(p, "kernel_vector");
  const FamilyParams q = p.normalized();
  std::vector<Integer> w;
  w.reserve(static_cast<std::size_t>(q.m + q.n + 2));
  for (int i = 0; i < q.m; ++i) w.emplace_back(2);
  w.emplace_back(1);
  for (int i = 0; i < q.n; ++i) w.emplace_back(-1);
  w.emplace_back(1);
  return w;
}

DilatationResult dilatation(const FamilyParams& params, double tol) {
  DilatationResult out;
  out.params = params;
  out.tn = classify(params);
  if (out.tn != TNClass::pseudo_anosov) return out;

  IntPolynomial poly = closed_form_poly(params);
  RootEnclosure root = largest_real_root(poly, Rational(1), tol);
  while (root.lower <= 1) root = refine(poly, std::move(root), root.width().convert_to<double>() / 4);

  const IntPolynomial matrix_poly = char_poly(transition_matrix(params));
  if (matrix_poly != poly) {
    // Equal polynomials share their roots; otherwise compare the roots.
    const RootEnclosure other = largest_real_root(matrix_poly, Rational(1), tol);
    if (abs(other.witness - root.witness) > Real(2 * tol)) {
      throw CrossCheckError("dilatation: closed form and transition matrix disagree for " +
                            std::string(to_string(params.family)) + "(" + std::to_string(params.m) + "," +
                            std::to_string(params.n) + ")");
    }
  }
  out.defining_poly = std::move(poly);
  out.root = std::move(root);
  out.provenance = Provenance::both_agree;
  return out;
}

SingularityData singularity_data(const FamilyParams& params) {
  require_pseudo_anosov(params, "singularity_data");
  const FamilyParams p = params.normalized();
  SingularityData s;
  s.marked_point_prongs = 1;
  s.marked_point_count = p.m + p.n + 1;
  s.p_prongs = p.m + 1;
  if (p.family == Family::beta) {
    s.q_prongs = p.n + 1;
    s.p_infinity_prongs = 1;
  } else {
    s.p_infinity_prongs = p.n;
  }
  return s;
}

bool orientable_lift(const FamilyParams& params) {
  require_pseudo_anosov(params, "orientable_lift");
  if (params.family == Family::beta) return params.m % 2 == 1 && params.n % 2 == 1;
  return (params.m + params.n) % 2 == 0;
}

IntPolynomial minimizer_equation(int g) {
  if (g < 1) throw InvalidParameters("g must be >= 1");
  const auto k = static_cast<std::size_t>(g);
  std::vector<Integer> c(2 * k + 2);
  c[0] = 1;
  c[k] = -2;
  c[k + 1] = -2;
  c[2 * k + 1] = 1;
  return IntPolynomial(std::move(c));
}

int compare_power_with_two_plus_sqrt3(const Rational& x, int k) {
  Rational y = 1;
  for (int i = 0; i < k; ++i) y *= x;
  const Rational shifted = y - 2;
  if (shifted <= 0) return -1;
  // y - 2 > 0, so y > 2 + sqrt 3 iff (y - 2)^2 > 3; equality is impossible.
  return shifted * shifted > 3 ? 1 : -1;
}

MinimizerReport minimizer(int g, double tol) {
  if (g < 2) throw InvalidParameters("minimizer needs g >= 2 (got " + std::to_string(g) + ")");
  MinimizerReport rep;
  rep.g = g;
  rep.result = dilatation(FamilyParams{Family::sigma, g - 1, g + 1}, tol);
  const RootEnclosure& root = *rep.result.root;

  const IntPolynomial eq = minimizer_equation(g);
  rep.equation_root = largest_real_root(eq, Rational(1), tol);
  if (abs(rep.equation_root.witness - root.witness) > Real(2 * tol)) {
    throw CrossCheckError("minimizer: dilatation of sigma(" + std::to_string(g - 1) + "," + std::to_string(g + 1) +
                          ") is not the largest root of its defining equation");
  }

  const Real lambda = root.witness;
  rep.equation_residual = abs(evaluate(eq, lambda));
  const Real rhs = lambda + 1 + sqrt(lambda * lambda + lambda + 1);
  rep.closed_form_residual = abs(pow(lambda, g + 1) - rhs);

  rep.lower_bound_holds = compare_power_with_two_plus_sqrt3(root.lower, g + 1) > 0;
  rep.upper_bound_holds = compare_power_with_two_plus_sqrt3(root.upper, g) < 0;
  const double c = std::log(2.0 + std::sqrt(3.0));
  rep.lower_bound = std::exp(c / (g + 1));
  rep.upper_bound = std::exp(c / g);
  return rep;
}

}  // namespace pabraid
