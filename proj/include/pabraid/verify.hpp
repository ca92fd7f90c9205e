#pragma once

#include "pabraid/spectral.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace pabraid {

enum class VerifyDepth { quick, full };

struct VerifyLimits {
  int mn_max = 4;           // family grids: 1 <= m, n <= mn_max
  int g_max = 5;            // minimizer sweep: 2 <= g <= g_max
  int mono_m_max = 4;       // monotonicity rows: m <= mono_m_max
  int mono_n_max = 4;       // ... and n <= mono_n_max
  int order_m_max = 4;      // minimizer comparisons: m <= order_m_max
  int mahler_m_max = 6;     // M(R_m) = 2
  int r_m_max = 6;          // lambda(R_m) decreasing
  int sb_m_max = 4;         // Salem-Boyd root counts: m <= sb_m_max
  int sb_n_max = 10;        // ... and n <= sb_n_max
  int conv_m_max = 2;       // Mahler convergence: m <= conv_m_max
  int conv_n_max = 20;      // ... over n <= conv_n_max
  int code_m_max = 3;       // horseshoe round trip
  int code_n_max = 8;

  static VerifyLimits for_depth(VerifyDepth depth);
};

struct CheckRecord {
  std::string id;
  std::string range;
  bool passed = false;
  /// Smallest slack seen over the range (0 for exact identities).
  double worst_margin = 0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;

  std::size_t passed() const;
  std::size_t total() const { return checks.size(); }
  bool all_passed() const { return passed() == total(); }
};

VerifyReport run_verify(const VerifyLimits& limits, double tol = 1e-9, const AberthOptions& aberth = {});

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace pabraid
