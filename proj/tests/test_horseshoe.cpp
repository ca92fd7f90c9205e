#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pabraid/families.hpp"
#include "pabraid/horseshoe.hpp"

#include <random>

using namespace pabraid;

TEST_CASE("canonicalize") {
  CHECK(canonicalize("01001").canonical == "00101");
  CHECK(canonicalize("10010").canonical == "00101");
  const auto t = canonicalize("111");
  CHECK(t.canonical == "111");
  CHECK_FALSE(t.primitive);
  CHECK(t.period == 3);
  CHECK_FALSE(canonicalize("0101").primitive);
  CHECK(canonicalize("0").primitive);
  CHECK(canonicalize("0011").primitive);
  CHECK_THROWS_AS(canonicalize(""), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize("1021"), std::invalid_argument);
}

TEST_CASE("code_to_family examples") {
  CHECK(code_to_family("10010") == FamilyCode{1, 3, CodeForm::A});
  CHECK(code_to_family("1000100") == FamilyCode{2, 4, CodeForm::A});
  CHECK(code_to_family("1000101") == FamilyCode{2, 4, CodeForm::B});
  CHECK(code_to_family("10011") == FamilyCode{1, 3, CodeForm::B});
  CHECK_FALSE(code_to_family("10010110").has_value());
  CHECK_FALSE(code_to_family("0").has_value());
  CHECK_FALSE(code_to_family("1").has_value());
  // Form B with n = m + 1 is outside the pA range.
  CHECK_FALSE(code_to_family("100101").has_value());
  // A rotation of 10010.
  CHECK(code_to_family("10100") == FamilyCode{1, 3, CodeForm::A});
}

TEST_CASE("family_to_codes examples") {
  CHECK(family_to_codes(1, 3) == std::pair<std::string, std::string>{"10010", "10011"});
  CHECK(family_to_codes(2, 4) == std::pair<std::string, std::string>{"1000100", "1000101"});
  CHECK_THROWS_AS(family_to_codes(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(family_to_codes(0, 3), std::invalid_argument);
}

TEST_CASE("property: round trip, length law and rotation invariance") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = m + 2; n <= 12; ++n) {
      const auto [a, b] = family_to_codes(m, n);
      CHECK(a.size() == static_cast<std::size_t>(m + n + 1));
      CHECK(b.size() == static_cast<std::size_t>(m + n + 1));
      CHECK(code_to_family(a) == FamilyCode{m, n, CodeForm::A});
      CHECK(code_to_family(b) == FamilyCode{m, n, CodeForm::B});
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(code_to_family(a.substr(k) + a.substr(0, k)) == code_to_family(a));
        CHECK(code_to_family(b.substr(k) + b.substr(0, k)) == code_to_family(b));
      }
      CHECK(canonicalize(a).canonical != canonicalize(b).canonical);
    }
  }
}

TEST_CASE("property: canonical form is a least rotation shared by all rotations") {
  std::mt19937 rng(41);
  for (int i = 0; i < 200; ++i) {
    std::string w(1 + rng() % 12, '0');
    for (auto& c : w) c = rng() % 2 ? '1' : '0';
    const auto o = canonicalize(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::string r = w.substr(k) + w.substr(0, k);
      CHECK(canonicalize(r).canonical == o.canonical);
      CHECK(o.canonical <= r);
    }
  }
}

TEST_CASE("ordering anchor against the period-8 competitor") {
  CHECK(dilatation({Family::sigma, 2, 5}).root->lower > to_rational(1.4134));
}

TEST_CASE("JSON") {
  const auto j = to_json(canonicalize("10010"), code_to_family("10010"));
  CHECK(j.dump() == R"({"code":"10010","canonical":"00101","family":{"m":1,"n":3,"form":"A"}})");
  const auto k = to_json(canonicalize("10010110"), std::nullopt);
  CHECK(k["family"].is_null());
}
