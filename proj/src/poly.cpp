#include "pabraid/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pabraid {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial operator*(const Integer& c, IntPolynomial a) {
  if (c == 0) return {};
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

IntPolynomial shift_by_power(const IntPolynomial& f, std::size_t k) {
  if (f.is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPolynomial(std::move(v));
}

Rational evaluate(const IntPolynomial& f, const Rational& x) {
  Rational acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

int sign_at(const IntPolynomial& f, const Rational& x) {
  // q^d f(p/q) = sum c_i p^i q^(d-i), q > 0.
  const auto& c = f.coeffs();
  if (c.empty()) return 0;
  const Integer p = mp::numerator(x);
  const Integer q = mp::denominator(x);
  Integer acc = 0;
  Integer qpow = 1;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  // The loop above multiplies the constant term by q^d and the leading
  // term by q^0, matching the homogenized form.
  return acc.sign();
}

IntPolynomial reciprocal(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
  std::vector<Integer> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(v));
}

Symmetry symmetry_class(const IntPolynomial& f) {
  // Compare against the degree-d reversal with trailing zeros kept, so that
  // f(0) = 0 never counts as (anti-)reciprocal by accident.
  if (f.is_zero()) throw std::invalid_argument("symmetry_class of the zero polynomial");
  const auto& c = f.coeffs();
  const std::size_t d = c.size() - 1;
  bool rec = true;
  bool anti = true;
  for (std::size_t i = 0; i <= d && (rec || anti); ++i) {
    if (c[i] != c[d - i]) rec = false;
    if (c[i] != -c[d - i]) anti = false;
  }
  if (rec) return Symmetry::reciprocal;
  if (anti) return Symmetry::anti_reciprocal;
  return Symmetry::neither;
}

IntPolynomial salem_boyd(const SalemBoydSpec& spec) {
  if (!spec.base.is_monic()) throw std::invalid_argument("Salem-Boyd base polynomial must be monic");
  IntPolynomial q = shift_by_power(spec.base, spec.exponent);
  if (spec.sign == SalemBoydSign::plus) {
    q += reciprocal(spec.base);
  } else {
    q -= reciprocal(spec.base);
  }
  return q;
}

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::reciprocal: return "reciprocal";
    case Symmetry::anti_reciprocal: return "anti_reciprocal";
    case Symmetry::neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(SalemBoydSign s) { return s == SalemBoydSign::plus ? "plus" : "minus"; }

SalemBoydSign parse_sign(std::string_view text) {
  if (text == "plus" || text == "+") return SalemBoydSign::plus;
  if (text == "minus" || text == "-") return SalemBoydSign::minus;
  throw std::invalid_argument("sign must be 'plus' or 'minus', got '" + std::string(text) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Integer parse_integer(std::string_view tok) {
  tok = trim(tok);
  std::string_view digits = tok;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("invalid integer coefficient '" + std::string(tok) + "'");
  }
  if (tok.front() == '+') tok.remove_prefix(1);
  return Integer(std::string(tok));
}

const Integer& max_safe_integer() {
  static const Integer v = Integer(1) << 53;
  return v;
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    try {
      return polynomial_from_json(nlohmann::ordered_json::parse(text));
    } catch (const nlohmann::ordered_json::exception& e) {
      throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
  }
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<Integer> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

std::string format_polynomial(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].str();
  }
  return out;
}

nlohmann::ordered_json to_json(const IntPolynomial& f) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) {
    if (abs(c) <= max_safe_integer()) {
      arr.push_back(c.convert_to<long long>());
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

IntPolynomial polynomial_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number_unsigned()) {
      coeffs.emplace_back(e.get<unsigned long long>());
    } else if (e.is_number_integer()) {
      coeffs.emplace_back(e.get<long long>());
    } else if (e.is_string()) {
      coeffs.push_back(parse_integer(e.get<std::string>()));
    } else {
      throw std::invalid_argument("polynomial JSON entries must be integers or integer strings");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

std::string pretty(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Integer& c = f.coeffs()[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace pabraid
