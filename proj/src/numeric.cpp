#include "pabraid/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace pabraid {

Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("to_rational: non-finite value");
  }
  // mpq_set_d is exact for finite doubles.
  mpq_t q;
  mpq_init(q);
  mpq_set_d(q, x);
  Rational out(q);
  mpq_clear(q);
  return out;
}

std::string to_decimal(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Integer& z) { return z.str(); }

}  // namespace pabraid
