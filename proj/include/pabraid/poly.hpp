#pragma once

#include "pabraid/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pabraid {

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order: `coeffs()[i]` multiplies t^i.
/// The stored sequence never ends in a zero, so the zero polynomial is the
/// empty sequence and has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  /// c * t^k.
  static IntPolynomial monomial(const Integer& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Empty for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  /// Throws std::domain_error on the zero polynomial.
  const Integer& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial derivative() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

/// t^k * f.
IntPolynomial shift_by_power(const IntPolynomial& f, std::size_t k);

/// Exact value at a rational point.
Rational evaluate(const IntPolynomial& f, const Rational& x);

/// Sign of f(x) for rational x, computed on the cleared-denominator integer
/// form so no rational normalization is needed.
int sign_at(const IntPolynomial& f, const Rational& x);

/// Horner evaluation in the precision of `x`.
template <unsigned D>
FixedReal<D> evaluate(const IntPolynomial& f, const FixedReal<D>& x) {
  FixedReal<D> acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * x + FixedReal<D>(*it);
  }
  return acc;
}

/// f_*(t) = t^d f(1/t), d = deg f. Throws std::invalid_argument on zero.
IntPolynomial reciprocal(const IntPolynomial& f);

enum class Symmetry { reciprocal, anti_reciprocal, neither };

/// Exact comparison of f against f_* and -f_*. Throws on zero.
Symmetry symmetry_class(const IntPolynomial& f);

enum class SalemBoydSign { plus, minus };

struct SalemBoydSpec {
  IntPolynomial base;
  std::size_t exponent = 0;
  SalemBoydSign sign = SalemBoydSign::plus;
};

/// t^n P +/- P_*. Throws std::invalid_argument when P is not monic.
IntPolynomial salem_boyd(const SalemBoydSpec& spec);

std::string_view to_string(Symmetry s);
std::string_view to_string(SalemBoydSign s);
/// Accepts "plus"/"minus" and "+"/"-".
SalemBoydSign parse_sign(std::string_view text);

// Text format: comma-separated ascending coefficients, e.g. "-2,-1,1".
IntPolynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const IntPolynomial& f);

// JSON format: array of ascending coefficients; entries outside the exactly
// representable double range (|c| > 2^53) are written as decimal strings.
nlohmann::ordered_json to_json(const IntPolynomial& f);
IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j);

/// Human-readable form, highest degree first, e.g. "t^2 - t - 2".
std::string pretty(const IntPolynomial& f);

}  // namespace pabraid
