#include "pabraid/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pabraid {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix rows must all have length dim");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x >= 0; });
}

std::vector<Integer> operator*(const IntMatrix& m, const std::vector<Integer>& v) {
  if (v.size() != m.dim()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.dim();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.backend().data(), v.backend().data(), prev.backend().data());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
  const std::size_t n = m.dim();
  // Newton divided differences on the nodes 0, 1, ..., n.
  std::vector<Rational> dd(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = -m(i, j);
      a(i, i) += static_cast<unsigned long>(x);
    }
    dd[x] = Rational(determinant(std::move(a)));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = n; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<unsigned long>(k);
  }
  // Newton form to monomial basis: p = dd[n]; p = p * (t - k) + dd[k].
  std::vector<Rational> p{dd[n]};
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * static_cast<unsigned long>(k);
    }
    next[0] += dd[k];
    p = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) {
    if (mp::denominator(c) != 1) throw std::logic_error("char_poly: interpolated coefficient is not integral");
    coeffs.push_back(mp::numerator(c));
  }
  IntPolynomial out(std::move(coeffs));
  if (out.degree() != n || !out.is_monic()) throw std::logic_error("char_poly: result is not monic of degree dim");
  return out;
}

namespace {

bool reaches_all(const IntMatrix& m, bool transpose) {
  const std::size_t n = m.dim();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& e = transpose ? m(j, i) : m(i, j);
      if (e != 0 && !seen[j]) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Rational exact_rational(const Real& x) {
  // x = mantissa * 2^exp exactly.
  mpz_t z;
  mpz_init(z);
  const mpfr_exp_t e = mpfr_get_z_2exp(z, x.backend().data());
  Rational q{Integer(z)};
  mpz_clear(z);
  if (e >= 0) {
    q *= Rational(Integer(1) << static_cast<unsigned>(e));
  } else {
    q /= Rational(Integer(1) << static_cast<unsigned>(-e));
  }
  return q;
}

}  // namespace

bool is_irreducible(const IntMatrix& m) {
  if (m.dim() == 1) return m(0, 0) != 0;
  return reaches_all(m, false) && reaches_all(m, true);
}

RootEnclosure perron_root(const IntMatrix& m, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!m.is_nonnegative()) {
    throw std::invalid_argument("perron_root: matrix has negative entries; use the characteristic polynomial");
  }
  if (!is_irreducible(m)) throw std::invalid_argument("perron_root: matrix is reducible");
  const std::size_t n = m.dim();
  // I + M is primitive, so power iteration converges even when M is periodic.
  IntMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) += 1;
  std::vector<Real> x(n, Real(1));
  const Rational tol_q = to_rational(tol);
  constexpr std::size_t kMaxIterations = 1'000'000;
  for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
    std::vector<Real> y(n, Real(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) != 0) y[i] += Real(a(i, j)) * x[j];
      }
    }
    Real lo = y[0] / x[0];
    Real hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const Real r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    const Real scale = *std::max_element(y.begin(), y.end());
    for (auto& v : y) v /= scale;
    x = std::move(y);
    if (hi - lo > Real(tol) / 4 && iter % 64 != 63) continue;

    // Collatz-Wielandt bounds, evaluated exactly at the current iterate.
    std::vector<Rational> xq(n);
    for (std::size_t i = 0; i < n; ++i) xq[i] = exact_rational(x[i]);
    Rational lower;
    Rational upper;
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) != 0) s += Rational(a(i, j)) * xq[j];
      }
      const Rational r = s / xq[i];
      if (i == 0 || r < lower) lower = r;
      if (i == 0 || r > upper) upper = r;
    }
    lower -= 1;
    upper -= 1;
    if (upper - lower <= tol_q) {
      if (lower == upper) {
        // Exact eigenvector: widen to a proper interval.
        lower -= tol_q / 2;
        upper += tol_q / 2;
      }
      RootEnclosure e;
      e.witness = (Real(mp::numerator(lower)) / Real(mp::denominator(lower)) +
                   Real(mp::numerator(upper)) / Real(mp::denominator(upper))) /
                  2;
      e.lower = std::move(lower);
      e.upper = std::move(upper);
      e.certified = false;
      return e;
    }
  }
  throw ConvergenceError("perron_root: power iteration did not reach the tolerance");
}

nlohmann::ordered_json to_json(const IntMatrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.dim();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

IntMatrix matrix_from_json(const nlohmann::ordered_json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& rows = j.at("entries");
  IntMatrix m(dim);
  if (!rows.is_array() || rows.size() != dim) throw std::invalid_argument("matrix JSON: entries must have dim rows");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim) {
      throw std::invalid_argument("matrix JSON: each row must have dim entries");
    }
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = rows[i][k].get<long long>();
  }
  return m;
}

}  // namespace pabraid
