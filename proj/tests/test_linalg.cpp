#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pabraid/families.hpp"
#include "pabraid/linalg.hpp"

#include <random>

using namespace pabraid;

namespace {

// Independent oracle: Gaussian elimination over Q with row swaps.
Rational rational_det(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t dim, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix a(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = d(rng);
  }
  return a;
}

IntMatrix shifted(const IntMatrix& a, long x) {
  IntMatrix b(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) b(i, j) = -a(i, j);
    b(i, i) += x;
  }
  return b;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS(IntMatrix(0));
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a(0, 1) == 2);
  CHECK(a(1, 0) == 3);
  CHECK(IntMatrix::identity(3)(2, 2) == 1);
  CHECK(a * std::vector<Integer>{1, 1} == std::vector<Integer>{3, 7});
  CHECK(a.is_nonnegative());
  CHECK_FALSE(IntMatrix{{1, -1}, {0, 1}}.is_nonnegative());
}

TEST_CASE("determinant examples") {
  CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("property: Bareiss determinant matches rational elimination") {
  std::mt19937 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto dim = static_cast<std::size_t>(1 + rng() % 7);
    const IntMatrix a = random_matrix(rng, dim, 9);
    CHECK(Rational(determinant(a)) == rational_det(a));
  }
  // Singular by construction: a repeated row.
  for (int i = 0; i < 30; ++i) {
    IntMatrix a = random_matrix(rng, 5, 9);
    for (std::size_t j = 0; j < 5; ++j) a(3, j) = a(1, j);
    CHECK(determinant(a) == 0);
  }
}

TEST_CASE("char_poly examples") {
  // R_1 with columns = images of e(p,1), e(p,2).
  CHECK(char_poly(IntMatrix{{0, 2}, {1, 1}}) == IntPolynomial{-2, -1, 1});
  CHECK(char_poly(IntMatrix{{7}}) == IntPolynomial{-7, 1});
  CHECK(char_poly(IntMatrix{{-3}}) == IntPolynomial{3, 1});
  CHECK(char_poly(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});
  CHECK(char_poly(transition_matrix({Family::beta, 1, 3})) ==
        salem_boyd({IntPolynomial{-2, -1, 1}, 4, SalemBoydSign::plus}));
}

TEST_CASE("property: char_poly agrees with det(xI - M) at random integers") {
  std::mt19937 rng(22);
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(1 + rng() % 8);
    const IntMatrix a = random_matrix(rng, dim, 6);
    const IntPolynomial cp = char_poly(a);
    CHECK(cp.degree() == dim);
    CHECK(cp.is_monic());
    for (int k = 0; k < 10; ++k) {
      const long x = static_cast<long>(rng() % 61) - 30;
      CHECK(evaluate(cp, Rational(x)) == rational_det(shifted(a, x)));
    }
  }
}

TEST_CASE("property: trace and determinant appear in char_poly") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto dim = static_cast<std::size_t>(1 + rng() % 7);
    const IntMatrix a = random_matrix(rng, dim, 9);
    const IntPolynomial cp = char_poly(a);
    Integer trace = 0;
    for (std::size_t k = 0; k < dim; ++k) trace += a(k, k);
    CHECK(cp.coeff(dim - 1) == -trace);
    const Integer sign = dim % 2 ? -1 : 1;
    CHECK(cp.coeff(0) == sign * determinant(a));
  }
}

TEST_CASE("property: block upper-triangular char_poly factors") {
  std::mt19937 rng(24);
  for (int i = 0; i < 40; ++i) {
    const auto p = static_cast<std::size_t>(1 + rng() % 4);
    const auto q = static_cast<std::size_t>(1 + rng() % 4);
    const IntMatrix a = random_matrix(rng, p, 5);
    const IntMatrix b = random_matrix(rng, q, 5);
    IntMatrix blk = random_matrix(rng, p + q, 5);
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) blk(r, c) = a(r, c);
    }
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) blk(p + r, p + c) = b(r, c);
      for (std::size_t c = 0; c < p; ++c) blk(p + r, c) = 0;
    }
    CHECK(char_poly(blk) == char_poly(a) * char_poly(b));
  }
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(r_matrix(2)));
  CHECK_FALSE(is_irreducible(IntMatrix::identity(2)));
  CHECK(is_irreducible(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_irreducible(IntMatrix{{1, 1}, {0, 1}}));
  CHECK(is_irreducible(IntMatrix{{3}}));
  CHECK_FALSE(is_irreducible(IntMatrix{{0}}));
  // Signs are ignored: T'_{1,3} has -1 entries.
  CHECK(is_irreducible(transition_matrix({Family::beta, 1, 3})));
  CHECK(is_irreducible(IntMatrix{{0, -1}, {1, 0}}));
}

TEST_CASE("perron_root examples") {
  const auto r1 = perron_root(r_matrix(1), 1e-12);
  CHECK(r1.lower <= 2);
  CHECK(r1.upper >= 2);
  CHECK(r1.width() <= to_rational(1e-12));
  CHECK_FALSE(r1.certified);

  const auto perm = perron_root(IntMatrix{{0, 1}, {1, 0}}, 1e-10);
  CHECK(perm.lower <= 1);
  CHECK(perm.upper >= 1);

  const auto r2 = perron_root(r_matrix(2), 1e-9);
  CHECK(abs(r2.witness - Real("1.69562")).convert_to<double>() < 1e-5);

  CHECK_THROWS_AS(perron_root(IntMatrix{{1, -1}, {1, 1}}, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(perron_root(IntMatrix::identity(2), 1e-9), std::invalid_argument);
}

TEST_CASE("property: Perron root matches the largest real root of char_poly") {
  std::mt19937 rng(25);
  std::uniform_int_distribution<long> d(0, 3);
  int tested = 0;
  while (tested < 40) {
    const auto dim = static_cast<std::size_t>(2 + rng() % 5);
    IntMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = d(rng);
    }
    if (!is_irreducible(a)) continue;
    ++tested;
    const auto pr = perron_root(a, 1e-10);
    const auto lr = largest_real_root(char_poly(a), -cauchy_bound(char_poly(a)), 1e-10);
    CHECK(pr.lower <= lr.upper);
    CHECK(lr.lower <= pr.upper);
  }
}

TEST_CASE("JSON round trip") {
  const IntMatrix a = r_matrix(3);
  const auto j = to_json(a);
  CHECK(j["dim"] == 4);
  CHECK(matrix_from_json(j) == a);
  CHECK_THROWS(matrix_from_json(nlohmann::ordered_json::parse(R"({"dim":2,"entries":[[1,2]]})")));
}
