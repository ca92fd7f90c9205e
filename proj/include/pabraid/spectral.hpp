#pragma once

// Root location for integer polynomials.
//
// Two independent routes live here. The certified route (Sturm counting and
// rational bisection) yields RootEnclosures whose endpoints are checked by
// exact sign evaluation. The numeric route (Aberth-Ehrlich iteration in MPFR)
// yields every complex root and feeds the Mahler measure and the unit-circle
// census; it is never used to certify anything.

#include "pabraid/numeric.hpp"
#include "pabraid/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pabraid {

/// Closed interval [lower, upper] with rational endpoints around one real root.
struct RootEnclosure {
  Rational lower;
  Rational upper;
  /// Best available approximation; lies inside [lower, upper].
  Real witness;
  /// True iff f(lower) * f(upper) < 0 was verified in exact arithmetic.
  bool certified = false;

  Rational width() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

/// True iff `a` lies strictly to the left of `b` with no overlap.
inline bool strictly_below(const RootEnclosure& a, const RootEnclosure& b) { return a.upper < b.lower; }

class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sturm sequence of a nonzero polynomial of degree >= 1, kept primitive
/// over Z. count(a, b) is the number of distinct real roots in (a, b].
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& f);

  int sign_changes(const Rational& x) const;
  std::size_t count(const Rational& a, const Rational& b) const;
  const std::vector<IntPolynomial>& chain() const { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// 1 + max_i |c_i| / |c_d|: every complex root has modulus below this.
Rational cauchy_bound(const IntPolynomial& f);

/// Greatest real root strictly above `floor`, enclosed to width <= tol.
/// Throws NoRootError when (floor, cauchy_bound] holds no real root.
RootEnclosure largest_real_root(const IntPolynomial& f, const Rational& floor, double tol);

/// Shrinks a certified enclosure to width <= tol by exact sign bisection.
RootEnclosure refine(const IntPolynomial& f, RootEnclosure e, double tol);

/// Compares the roots enclosed by `a` (of fa) and `b` (of fb), refining both
/// until they separate. Returns -1 (a < b) or 1 (a > b). Returns 0 when the
/// enclosures still overlap at width `min_tol`.
int compare_roots(const IntPolynomial& fa, RootEnclosure& a, const IntPolynomial& fb, RootEnclosure& b,
                  double min_tol = 1e-40);

/// Minimal complex number over a fixed-precision MPFR type.
template <typename R>
struct Complex {
  R re{0};
  R im{0};

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const R den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  R norm() const { return re * re + im * im; }
  R abs() const { return hypot(re, im); }
};

struct ComplexRoot {
  Complex<Real> value;
  /// |f(z)| / |f'(z)| at the final iterate. A disk of radius degree * residual
  /// around `value` contains a root of f.
  Real residual;
};

struct AberthOptions {
  /// Working precision to start from; doubled on failure up to max_bits.
  unsigned start_bits = 128;
  unsigned max_bits = 1024;
  std::size_t max_iterations = 4000;
};

/// All complex roots, counted with multiplicity, by Aberth-Ehrlich
/// simultaneous iteration until every residual is below `precision`.
/// Throws ConvergenceError when max_bits is exhausted.
std::vector<ComplexRoot> all_roots(const IntPolynomial& f, double precision, const AberthOptions& opts = {});

struct MahlerMeasure {
  Real value;
  /// Propagated from the per-root residual disks.
  Real error_bound;
};

/// |leading coefficient| * prod max(1, |z_i|), with error_bound <= tol.
MahlerMeasure mahler_measure(const IntPolynomial& f, double tol = 1e-12, const AberthOptions& opts = {});

struct UnitCircleCensus {
  std::size_t outside = 0;
  std::size_t on_circle = 0;
  std::size_t inside = 0;
  double tol = 1e-9;
};

/// Roots with ||z| - 1| <= tol count as on_circle, never as outside.
UnitCircleCensus count_outside_unit(const IntPolynomial& f, double tol = 1e-9, const AberthOptions& opts = {});

}  // namespace pabraid
