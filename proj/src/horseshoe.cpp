#include "pabraid/horseshoe.hpp"

#include <algorithm>
#include <stdexcept>

namespace pabraid {

namespace {

void require_binary(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("horseshoe code must be nonempty");
  if (!std::all_of(word.begin(), word.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw std::invalid_argument("horseshoe code must contain only '0' and '1': '" + std::string(word) + "'");
  }
}

std::string rotation(std::string_view word, std::size_t k) {
  std::string out(word.substr(k));
  out.append(word.substr(0, k));
  return out;
}

/// "1", a zeros, "1", b zeros: form A with n = a + 1, m = b.
std::optional<FamilyCode> match_form_a(std::string_view w) {
  if (w.size() < 2 || w.front() != '1') return std::nullopt;
  const auto second = w.find('1', 1);
  if (second == std::string_view::npos) return std::nullopt;
  if (w.find('1', second + 1) != std::string_view::npos) return std::nullopt;
  const int n = static_cast<int>(second);
  const int m = static_cast<int>(w.size() - second - 1);
  if (m < 1 || n < m + 2) return std::nullopt;
  return FamilyCode{m, n, CodeForm::A};
}

/// "1", a zeros, "1", b zeros, "1": form B with n = a + 1, m = b + 1.
std::optional<FamilyCode> match_form_b(std::string_view w) {
  if (w.size() < 3 || w.front() != '1' || w.back() != '1') return std::nullopt;
  const auto second = w.find('1', 1);
  if (second == w.size() - 1) return std::nullopt;
  if (w.find('1', second + 1) != w.size() - 1) return std::nullopt;
  const int n = static_cast<int>(second);
  const int m = static_cast<int>(w.size() - 1 - second);
  if (m < 1 || n < m + 2) return std::nullopt;
  return FamilyCode{m, n, CodeForm::B};
}

}  // namespace

CodeOrbit canonicalize(std::string_view word) {
  require_binary(word);
  CodeOrbit orbit;
  orbit.word = std::string(word);
  orbit.period = word.size();
  orbit.canonical = orbit.word;
  for (std::size_t k = 1; k < word.size(); ++k) orbit.canonical = std::min(orbit.canonical, rotation(word, k));
  // Primitive iff no proper rotation reproduces the word.
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (word.size() % k == 0 && rotation(word, k) == word) {
      orbit.primitive = false;
      break;
    }
  }
  return orbit;
}

std::optional<FamilyCode> code_to_family(std::string_view word) {
  require_binary(word);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (auto hit = match_form_a(rotation(word, k))) return hit;
  }
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (auto hit = match_form_b(rotation(word, k))) return hit;
  }
  return std::nullopt;
}

std::pair<std::string, std::string> family_to_codes(int m, int n) {
  if (m < 1 || n < m + 2) {
    throw std::invalid_argument("family_to_codes needs m >= 1 and n >= m + 2 (got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
  const auto nz = static_cast<std::size_t>(n - 1);
  std::string a = "1" + std::string(nz, '0') + "1" + std::string(static_cast<std::size_t>(m), '0');
  std::string b = "1" + std::string(nz, '0') + "1" + std::string(static_cast<std::size_t>(m - 1), '0') + "1";
  return {std::move(a), std::move(b)};
}

std::string_view to_string(CodeForm f) { return f == CodeForm::A ? "A" : "B"; }

nlohmann::ordered_json to_json(const CodeOrbit& orbit, const std::optional<FamilyCode>& family) {
  nlohmann::ordered_json j;
  j["code"] = orbit.word;
  j["canonical"] = orbit.canonical;
  if (family) {
    j["family"] = {{"m", family->m}, {"n", family->n}, {"form", std::string(to_string(family->form))}};
  } else {
    j["family"] = nullptr;
  }
  return j;
}

}  // namespace pabraid
