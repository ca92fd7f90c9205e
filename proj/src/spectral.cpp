#include "pabraid/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace pabraid {

namespace {

Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

IntPolynomial divide_exact(const IntPolynomial& f, const Integer& d) {
  std::vector<Integer> v = f.coeffs();
  for (auto& c : v) c /= d;
  return IntPolynomial(std::move(v));
}

/// Pseudo-remainder of a by b with the multiplier lc(b)^(da-db+1) made
/// positive, so the result is a positive multiple of the true remainder.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t da = *a.degree();
  const std::size_t db = *b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  const std::size_t steps = da - db + 1;
  for (std::size_t i = da + 1; i-- > db;) {
    const Integer lead = r[i];
    for (auto& c : r) c *= lb;
    if (lead != 0) {
      const std::size_t shift = i - db;
      for (std::size_t j = 0; j <= db; ++j) r[j + shift] -= lead * b.coeffs()[j];
    }
  }
  IntPolynomial out(std::move(r));
  if (lb < 0 && steps % 2 == 1) out = -out;
  return out;
}

Real to_real(const Rational& q) { return Real(mp::numerator(q)) / Real(mp::denominator(q)); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

/// Midpoint of the enclosure, polished by Newton steps that must stay inside.
Real polished_witness(const IntPolynomial& f, const Rational& lower, const Rational& upper) {
  const Real lo = to_real(lower);
  const Real hi = to_real(upper);
  Real x = (lo + hi) / 2;
  const IntPolynomial df = f.derivative();
  for (int i = 0; i < 12; ++i) {
    const Real d = evaluate(df, x);
    if (d == 0) break;
    const Real next = x - evaluate(f, x) / d;
    if (next < lo || next > hi) break;
    if (next == x) break;
    x = next;
  }
  return x;
}

RootEnclosure make_enclosure(const IntPolynomial& f, Rational lower, Rational upper) {
  RootEnclosure e;
  e.certified = sign_at(f, lower) * sign_at(f, upper) < 0;
  e.witness = polished_witness(f, lower, upper);
  e.lower = std::move(lower);
  e.upper = std::move(upper);
  return e;
}

/// Enclosure around an exactly known root r, which is the only root of f in
/// (r - radius, r + radius].
RootEnclosure around_exact_root(const IntPolynomial& f, const Rational& r, const Rational& radius,
                                const Rational& tol) {
  const Rational w = std::min(radius, tol) / 2;
  RootEnclosure e = make_enclosure(f, r - w, r + w);
  e.witness = to_real(r);
  return e;
}

/// Sturm bisection of (lo, hi], known to hold exactly one distinct root,
/// down to width <= tol. Used when the root has even multiplicity.
RootEnclosure sturm_bisect(const IntPolynomial& f, const SturmSequence& s, Rational lo, Rational hi,
                           const Rational& tol) {
  int vhi = s.sign_changes(hi);
  while (hi - lo > tol) {
    Rational mid = midpoint(lo, hi);
    const int vm = s.sign_changes(mid);
    if (vm - vhi >= 1) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
      vhi = vm;
    }
  }
  return make_enclosure(f, std::move(lo), std::move(hi));
}

/// Exact sign bisection of [lo, hi] with f(lo) f(hi) < 0 and one distinct
/// root inside.
RootEnclosure sign_bisect(const IntPolynomial& f, Rational lo, Rational hi, const Rational& tol) {
  const int slo = sign_at(f, lo);
  while (hi - lo > tol) {
    Rational mid = midpoint(lo, hi);
    const int sm = sign_at(f, mid);
    if (sm == 0) return around_exact_root(f, mid, (hi - lo) / 2, tol);
    if (sm == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return make_enclosure(f, std::move(lo), std::move(hi));
}

Rational positive_tol(double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be a positive finite number");
  return to_rational(tol);
}

}  // namespace

SturmSequence::SturmSequence(const IntPolynomial& f) {
  if (f.is_zero() || *f.degree() == 0) throw std::invalid_argument("Sturm sequence needs degree >= 1");
  chain_.push_back(f);
  IntPolynomial d = f.derivative();
  chain_.push_back(divide_exact(d, content(d)));
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    if (*b.degree() == 0) break;
    IntPolynomial r = -positive_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    r = divide_exact(r, content(r));
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) return 0;
  const int diff = sign_changes(a) - sign_changes(b);
  return diff > 0 ? static_cast<std::size_t>(diff) : 0;
}

Rational cauchy_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cauchy_bound of the zero polynomial");
  const Integer lead = abs(f.leading());
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) m = std::max(m, Integer(abs(f.coeffs()[i])));
  return Rational(1) + Rational(m, lead);
}

RootEnclosure largest_real_root(const IntPolynomial& f, const Rational& floor, double tol) {
  const Rational tol_q = positive_tol(tol);
  if (f.is_zero() || *f.degree() == 0) throw NoRootError("constant polynomial has no roots");
  const Rational bound = cauchy_bound(f);
  if (bound <= floor) throw NoRootError("no real root above floor");
  const SturmSequence s(f);

  // Isolate the greatest root: (lo, hi] holds it and nothing lies in (hi, bound].
  Rational lo = floor;
  Rational hi = bound;
  int vlo = s.sign_changes(lo);
  int vhi = s.sign_changes(hi);
  if (vlo - vhi <= 0) throw NoRootError("no real root above floor");
  while (vlo - vhi > 1) {
    Rational mid = midpoint(lo, hi);
    const int vm = s.sign_changes(mid);
    if (vm - vhi >= 1) {
      lo = std::move(mid);
      vlo = vm;
    } else {
      hi = std::move(mid);
      vhi = vm;
    }
  }

  while (true) {
    const int shi = sign_at(f, hi);
    if (shi == 0) {
      // hi is the root; nothing else lies in (lo, infinity).
      return around_exact_root(f, hi, hi - lo, tol_q);
    }
    const int slo = sign_at(f, lo);
    if (slo != 0 && slo != shi) return sign_bisect(f, std::move(lo), std::move(hi), tol_q);
    if (slo == shi) return sturm_bisect(f, s, std::move(lo), std::move(hi), tol_q);
    // lo is a smaller root; step it off.
    Rational mid = midpoint(lo, hi);
    if (s.count(mid, hi) >= 1) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
}

RootEnclosure refine(const IntPolynomial& f, RootEnclosure e, double tol) {
  const Rational tol_q = positive_tol(tol);
  if (e.width() <= tol_q) return e;
  if (e.certified) return sign_bisect(f, e.lower, e.upper, tol_q);
  const SturmSequence s(f);
  if (s.count(e.lower, e.upper) != 1) {
    throw std::invalid_argument("refine: enclosure does not isolate a single root");
  }
  return sturm_bisect(f, s, e.lower, e.upper, tol_q);
}

int compare_roots(const IntPolynomial& fa, RootEnclosure& a, const IntPolynomial& fb, RootEnclosure& b,
                  double min_tol) {
  while (true) {
    if (strictly_below(a, b)) return -1;
    if (strictly_below(b, a)) return 1;
    const Rational widest = std::max(a.width(), b.width());
    const double next = std::max(min_tol, widest.convert_to<double>() / 64);
    if (widest.convert_to<double>() <= min_tol) return 0;
    a = refine(fa, std::move(a), next);
    b = refine(fb, std::move(b), next);
  }
}

// ---------------------------------------------------------------------------
// Aberth-Ehrlich

namespace {

template <unsigned D>
bool aberth_pass(const IntPolynomial& f, double precision, std::size_t max_iterations,
                 std::vector<ComplexRoot>& out) {
  using R = FixedReal<D>;
  using C = Complex<R>;
  const std::size_t n = *f.degree();
  std::vector<R> c;
  c.reserve(n + 1);
  for (const auto& x : f.coeffs()) c.emplace_back(x);

  // Start on a circle whose radius is the geometric mean of the root moduli,
  // with an irrational angular offset to avoid symmetric stalls.
  R radius = 1;
  if (c.front() != 0) radius = pow(abs(c.front() / c.back()), R(1) / R(n));
  if (radius < R("0.5")) radius = R("0.5");
  std::vector<C> z(n);
  const R two_pi = 2 * boost::math::constants::pi<R>();
  for (std::size_t k = 0; k < n; ++k) {
    const R theta = two_pi * R(k) / R(n) + R("0.4");
    z[k] = C{radius * cos(theta), radius * sin(theta)};
  }

  const R target = R(precision);
  std::vector<C> ratio(n);
  std::vector<R> residual(n);
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      C p{c[n], R(0)};
      C dp{R(0), R(0)};
      for (std::size_t i = n; i-- > 0;) {
        dp = dp * z[k] + p;
        p = p * z[k] + C{c[i], R(0)};
      }
      if (p.norm() == 0) {
        ratio[k] = C{};
        residual[k] = 0;
      } else if (dp.norm() == 0) {
        ratio[k] = C{target, target};
        residual[k] = std::numeric_limits<R>::infinity();
      } else {
        ratio[k] = p / dp;
        residual[k] = ratio[k].abs();
      }
      if (!(residual[k] < target)) done = false;
    }
    if (done) {
      out.clear();
      out.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        out.push_back(ComplexRoot{Complex<Real>{Real(z[k].re), Real(z[k].im)}, Real(residual[k])});
      }
      return true;
    }
    std::vector<C> next(z);
    for (std::size_t k = 0; k < n; ++k) {
      if (residual[k] == 0) continue;
      C sum{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const C diff = z[k] - z[j];
        if (diff.norm() == 0) continue;
        sum = sum + C{R(1), R(0)} / diff;
      }
      const C denom = C{R(1), R(0)} - ratio[k] * sum;
      const C step = denom.norm() == 0 ? ratio[k] : ratio[k] / denom;
      next[k] = z[k] - step;
    }
    z = std::move(next);
  }
  return false;
}

bool aberth_at_bits(unsigned bits, const IntPolynomial& f, double precision, std::size_t max_iterations,
                    std::vector<ComplexRoot>& out) {
  // digits10 ~ bits * log10(2), rounded up.
  switch (bits) {
    case 128: return aberth_pass<39>(f, precision, max_iterations, out);
    case 256: return aberth_pass<78>(f, precision, max_iterations, out);
    case 512: return aberth_pass<155>(f, precision, max_iterations, out);
    default: return aberth_pass<309>(f, precision, max_iterations, out);
  }
}

constexpr std::array<unsigned, 4> kPrecisionLevels{128, 256, 512, 1024};

Real disk_radius(const ComplexRoot& r, std::size_t degree) { return r.residual * Real(degree); }

}  // namespace

std::vector<ComplexRoot> all_roots(const IntPolynomial& f, double precision, const AberthOptions& opts) {
  if (f.is_zero() || *f.degree() == 0) throw std::invalid_argument("all_roots needs degree >= 1");
  if (!(precision > 0)) throw std::invalid_argument("precision must be positive");
  std::vector<ComplexRoot> out;
  if (*f.degree() == 1) {
    const Real root = -Real(f.coeff(0)) / Real(f.coeff(1));
    out.push_back(ComplexRoot{Complex<Real>{root, Real(0)}, Real(0)});
    return out;
  }
  for (unsigned bits : kPrecisionLevels) {
    if (bits < opts.start_bits && bits != kPrecisionLevels.back()) continue;
    if (bits > opts.max_bits) break;
    if (aberth_at_bits(bits, f, precision, opts.max_iterations, out)) return out;
  }
  throw ConvergenceError("Aberth iteration did not converge for " + pretty(f));
}

MahlerMeasure mahler_measure(const IntPolynomial& f, double tol, const AberthOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("Mahler measure of the zero polynomial");
  const Real lead = abs(Real(f.leading()));
  const std::size_t d = *f.degree();
  if (d == 0) return {lead, Real(0)};
  double precision = std::min(1e-15, tol / (100.0 * static_cast<double>(d)));
  for (int attempt = 0; attempt < 6; ++attempt, precision *= 1e-6) {
    const auto roots = all_roots(f, precision, opts);
    Real value = lead;
    Real hi = lead;
    Real lo = lead;
    for (const auto& r : roots) {
      const Real mod = r.value.abs();
      const Real rad = disk_radius(r, d);
      value *= std::max(Real(1), mod);
      hi *= std::max(Real(1), mod + rad);
      lo *= std::max(Real(1), mod - rad);
    }
    const Real bound = hi - lo;
    if (bound <= Real(tol)) return {value, bound};
  }
  throw ConvergenceError("Mahler measure error bound above tolerance for " + pretty(f));
}

UnitCircleCensus count_outside_unit(const IntPolynomial& f, double tol, const AberthOptions& opts) {
  if (f.is_zero()) throw std::invalid_argument("census of the zero polynomial");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  UnitCircleCensus census;
  census.tol = tol;
  const std::size_t d = *f.degree();
  if (d == 0) return census;
  double precision = std::min(1e-15, tol / (100.0 * static_cast<double>(d)));
  for (int attempt = 0; attempt < 6; ++attempt, precision *= 1e-6) {
    const auto roots = all_roots(f, precision, opts);
    bool sharp = true;
    census.outside = census.on_circle = census.inside = 0;
    for (const auto& r : roots) {
      if (disk_radius(r, d) * 4 >= Real(tol)) sharp = false;
      const Real gap = r.value.abs() - 1;
      if (abs(gap) <= Real(tol)) {
        ++census.on_circle;
      } else if (gap > 0) {
        ++census.outside;
      } else {
        ++census.inside;
      }
    }
    if (sharp) return census;
  }
  throw ConvergenceError("root disks too wide to classify against the unit circle for " + pretty(f));
}

}  // namespace pabraid
