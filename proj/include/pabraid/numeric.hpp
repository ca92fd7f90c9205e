#pragma once

// Number types shared by every module.
//
// Exact work uses GMP integers and rationals. Approximate work uses MPFR
// floats with the precision fixed at compile time: Boost's variable precision
// MPFR type keeps its default precision in a process-wide static, which is
// not safe once table sweeps fan out across threads.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace pabraid {

namespace mp = boost::multiprecision;

using Integer = mp::mpz_int;
using Rational = mp::mpq_rational;

/// MPFR float with `Digits10` decimal digits, expression templates off.
template <unsigned Digits10>
using FixedReal = mp::number<mp::mpfr_float_backend<Digits10>, mp::et_off>;

/// Public real type: about 200 bits, enough to carry any witness we report.
using Real = FixedReal<60>;

/// Exact rational value of a finite double.
Rational to_rational(double x);

/// Decimal rendering with `digits` significant digits, round-to-nearest.
std::string to_decimal(const Real& x, int digits = 10);

/// "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace pabraid
