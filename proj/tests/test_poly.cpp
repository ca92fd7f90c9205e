#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pabraid/poly.hpp"

#include <random>

using namespace pabraid;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree, long bound = 30) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(std::move(c));
}

IntPolynomial random_monic(std::mt19937& rng, int max_degree) {
  auto c = random_poly(rng, max_degree).coeffs();
  if (c.empty()) c.push_back(0);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("normalization and degree") {
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK_FALSE(IntPolynomial{}.degree().has_value());
  CHECK(IntPolynomial{1, 2, 0, 0}.coeffs().size() == 2);
  CHECK(IntPolynomial{5}.degree() == 0u);
  CHECK(IntPolynomial{-2, -1, 1}.degree() == 2u);
  CHECK_THROWS_AS(IntPolynomial{}.leading(), std::domain_error);
  CHECK(IntPolynomial{-2, -1, 1}.coeff(7) == 0);
}

TEST_CASE("arithmetic examples") {
  CHECK(IntPolynomial{1, 1} + IntPolynomial{-1, 1} == IntPolynomial{0, 2});
  CHECK(IntPolynomial{-2, -1, 1} * IntPolynomial{1} == IntPolynomial{-2, -1, 1});
  CHECK(shift_by_power(IntPolynomial{-2, -1, 1}, 2) == IntPolynomial{0, 0, -2, -1, 1});
  CHECK(IntPolynomial{1, 1} - IntPolynomial{1, 1} == IntPolynomial{});
  CHECK(IntPolynomial{-2, 1} * IntPolynomial{1, 1} == IntPolynomial{-2, -1, 1});
  CHECK(IntPolynomial{1, 2, 3}.derivative() == IntPolynomial{2, 6});
  CHECK(shift_by_power(IntPolynomial{}, 3).is_zero());
}

TEST_CASE("evaluation") {
  const IntPolynomial r1{-2, -1, 1};
  const IntPolynomial t11{1, -1, -4, -1, 1};
  CHECK(evaluate(r1, Rational(1)) == -2);
  CHECK(evaluate(r1, Rational(2)) == 0);
  CHECK(evaluate(t11, Rational(0)) == 1);
  CHECK(evaluate(r1, Rational(1, 2)) == Rational(-9, 4));
  CHECK(sign_at(r1, Rational(1)) == -1);
  CHECK(sign_at(r1, Rational(2)) == 0);
  CHECK(sign_at(r1, Rational(5, 2)) == 1);
  CHECK(sign_at(r1, Rational(-3, 2)) == 1);
  CHECK(abs(evaluate(r1, Real("1.5")) - Real("-1.25")) < Real("1e-50"));
}

TEST_CASE("reciprocal and symmetry class") {
  CHECK(reciprocal(IntPolynomial{-2, -1, 1}) == IntPolynomial{1, -1, -2});
  CHECK(reciprocal(IntPolynomial{5}) == IntPolynomial{5});
  CHECK(reciprocal(IntPolynomial{1, -1, -4, -1, 1}) == IntPolynomial{1, -1, -4, -1, 1});
  CHECK_THROWS_AS(reciprocal(IntPolynomial{}), std::invalid_argument);
  // f(0) = 0 loses the trailing power of t.
  CHECK(reciprocal(IntPolynomial{0, 1, 2}) == IntPolynomial{2, 1});

  CHECK(symmetry_class(IntPolynomial{1, -1, -4, -1, 1}) == Symmetry::reciprocal);
  CHECK(symmetry_class(IntPolynomial{-1, 1, 2, 0, -2, -1, 1}) == Symmetry::anti_reciprocal);
  CHECK(symmetry_class(IntPolynomial{-2, -1, 1}) == Symmetry::neither);
}

TEST_CASE("salem_boyd examples") {
  const IntPolynomial r1{-2, -1, 1};
  CHECK(salem_boyd({r1, 2, SalemBoydSign::plus}) == IntPolynomial{1, -1, -4, -1, 1});
  CHECK(salem_boyd({r1, 4, SalemBoydSign::minus}) == IntPolynomial{-1, 1, 2, 0, -2, -1, 1});
  CHECK(salem_boyd({r1, 0, SalemBoydSign::plus}) == IntPolynomial{-1, -2, -1});
  CHECK(salem_boyd({r1, 1, SalemBoydSign::plus}).degree() == 3u);
  CHECK_THROWS_AS(salem_boyd({IntPolynomial{1, 2}, 3, SalemBoydSign::plus}), std::invalid_argument);
}

TEST_CASE("property: reciprocal is an involution when f(0) != 0") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto c = random_poly(rng, 15).coeffs();
    if (c.empty() || c.front() == 0) continue;
    const IntPolynomial f(c);
    CHECK(reciprocal(reciprocal(f)) == f);
  }
}

TEST_CASE("property: product degree is the sum of degrees") {
  std::mt19937 rng(12);
  for (int i = 0; i < 300; ++i) {
    const IntPolynomial a = random_poly(rng, 10);
    const IntPolynomial b = random_poly(rng, 10);
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).is_zero());
    } else {
      CHECK((a * b).degree() == *a.degree() + *b.degree());
    }
  }
}

TEST_CASE("property: ring axioms against pointwise evaluation") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial a = random_poly(rng, 8);
    const IntPolynomial b = random_poly(rng, 8);
    const Rational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
    CHECK(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
    CHECK(evaluate(a - b, x) == evaluate(a, x) - evaluate(b, x));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: Salem-Boyd members are reciprocal or anti-reciprocal") {
  std::mt19937 rng(14);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial p = random_monic(rng, 9);
    for (std::size_t n = 0; n <= 12; ++n) {
      for (auto s : {SalemBoydSign::plus, SalemBoydSign::minus}) {
        const IntPolynomial q = salem_boyd({p, n, s});
        if (q.is_zero()) continue;
        // Symmetric about the formal degree n + deg P, whether or not the
        // leading terms cancel.
        const std::size_t d = n + *p.degree();
        std::vector<Integer> c = q.coeffs();
        c.resize(d + 1);
        std::vector<Integer> rev(c.rbegin(), c.rend());
        const Integer e = s == SalemBoydSign::plus ? 1 : -1;
        bool sym = true;
        for (std::size_t k = 0; k <= d; ++k) sym = sym && rev[k] == e * c[k];
        CHECK(sym);
        if (q.degree() == d) {
          CHECK(symmetry_class(q) != Symmetry::neither);
        } else {
          // Cancellation only happens at n = 0 with P(0) = -/+1.
          CHECK(n == 0);
          CHECK(p.coeff(0) == -e);
        }
      }
    }
  }
}

TEST_CASE("property: shift identity Q_{n+1} - t Q_n = +/-(1 - t) P_*") {
  std::mt19937 rng(15);
  const IntPolynomial one_minus_t{1, -1};
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial p = random_monic(rng, 9);
    for (std::size_t n = 0; n <= 12; ++n) {
      const IntPolynomial plus = salem_boyd({p, n + 1, SalemBoydSign::plus}) -
                                 shift_by_power(salem_boyd({p, n, SalemBoydSign::plus}), 1);
      const IntPolynomial minus = salem_boyd({p, n + 1, SalemBoydSign::minus}) -
                                  shift_by_power(salem_boyd({p, n, SalemBoydSign::minus}), 1);
      CHECK(plus == one_minus_t * reciprocal(p));
      CHECK(minus == -(one_minus_t * reciprocal(p)));
    }
  }
}

TEST_CASE("property: Q_n degree is n + deg P for P = R_m") {
  for (int m = 1; m <= 8; ++m) {
    const IntPolynomial r = shift_by_power(IntPolynomial{-1, 1}, static_cast<std::size_t>(m)) - IntPolynomial{2};
    for (std::size_t n = 1; n <= 30; ++n) {
      CHECK(salem_boyd({r, n, SalemBoydSign::plus}).degree() == n + static_cast<std::size_t>(m) + 1);
      CHECK(salem_boyd({r, n, SalemBoydSign::minus}).degree() == n + static_cast<std::size_t>(m) + 1);
    }
  }
}

TEST_CASE("text and JSON formats") {
  CHECK(parse_polynomial("-2,-1,1") == IntPolynomial{-2, -1, 1});
  CHECK(parse_polynomial(" -2, -1 , 1 ") == IntPolynomial{-2, -1, 1});
  CHECK(parse_polynomial("[-2,-1,1]") == IntPolynomial{-2, -1, 1});
  CHECK(format_polynomial(IntPolynomial{-2, -1, 1}) == "-2,-1,1");
  CHECK(pretty(IntPolynomial{-2, -1, 1}) == "t^2 - t - 2");
  CHECK_THROWS_AS(parse_polynomial("1,x,2"), std::invalid_argument);

  const Integer big = Integer(1) << 80;
  const IntPolynomial f(std::vector<Integer>{big, 3, 1});
  const auto j = to_json(f);
  CHECK(j[0].is_string());
  CHECK(j[1] == 3);
  CHECK(polynomial_from_json(j) == f);

  std::mt19937 rng(16);
  for (int i = 0; i < 100; ++i) {
    const IntPolynomial g = random_poly(rng, 12, 1000000);
    CHECK(parse_polynomial(format_polynomial(g)) == g);
    CHECK(polynomial_from_json(to_json(g)) == g);
  }
}

TEST_CASE("sign parsing") {
  CHECK(parse_sign("plus") == SalemBoydSign::plus);
  CHECK(parse_sign("-") == SalemBoydSign::minus);
  CHECK_THROWS_AS(parse_sign("times"), std::invalid_argument);
}
