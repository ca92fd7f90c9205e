#pragma once

// Periodic orbits of the Smale horseshoe, given by their binary codes, and
// the codes whose braid type is that of sigma_{m,n}:
//
//   form A: 1 0^(n-1) 1 0^m
//   form B: 1 0^(n-1) 1 0^(m-1) 1        with m >= 1, n >= m + 2.
//
// Codes are cyclic words; every rotation names the same orbit.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace pabraid {

struct CodeOrbit {
  std::string word;
  std::size_t period = 0;
  /// Lexicographically least rotation of `word`.
  std::string canonical;
  /// False when `word` is a proper power of a shorter word.
  bool primitive = true;
};

enum class CodeForm { A, B };

struct FamilyCode {
  int m = 0;
  int n = 0;
  CodeForm form = CodeForm::A;

  friend bool operator==(const FamilyCode&, const FamilyCode&) = default;
};

/// Throws std::invalid_argument for empty or non-binary words.
CodeOrbit canonicalize(std::string_view word);

/// Tries every rotation against form A, then form B.
std::optional<FamilyCode> code_to_family(std::string_view word);

/// (form A code, form B code). Requires m >= 1 and n >= m + 2.
std::pair<std::string, std::string> family_to_codes(int m, int n);

std::string_view to_string(CodeForm f);

/// {"code","canonical","family":{"m","n","form"}|null}
nlohmann::ordered_json to_json(const CodeOrbit& orbit, const std::optional<FamilyCode>& family);

}  // namespace pabraid
