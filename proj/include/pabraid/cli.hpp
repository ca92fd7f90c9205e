#pragma once

// Command-line front end.
//
//   pabraid [--tol T] [--format json|csv] [--csv] [--precision BITS] <command> ...
//
//   dilatation <family> <m> <n>
//   table <family> <m_lo..m_hi> <n_lo..n_hi>
//   salem-boyd <poly_file> [--n-max N] [--sign plus|minus]
//   verify [--depth quick|full]
//   horseshoe <code>
//
// Exit codes: 0 success, 1 failed verify check, 2 invalid parameters or
// input, 3 cross-check disagreement, 4 numeric failure.

#include "pabraid/families.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pabraid {

enum ExitCode : int {
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_invalid = 2,
  exit_cross_check = 3,
  exit_numeric = 4,
};

/// Decimal with 10 significant digits, round to nearest.
std::string format_real(const Real& x);

/// "a..b" or a single integer "a". Returns {lo, hi}; lo > hi is an empty
/// range. Throws InvalidParameters on anything else.
std::pair<int, int> parse_range(std::string_view text);

/// {"family","m","n","tn_class","poly","root","log_lambda","provenance"}, with
/// null for the last four on non-pA members. m and n are reported as requested.
nlohmann::ordered_json result_json(const FamilyParams& requested, const DilatationResult& r);

inline constexpr std::string_view csv_header = "family,m,n,class,lambda,log_lambda";
std::string csv_row(const FamilyParams& requested, const DilatationResult& r);

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pabraid
