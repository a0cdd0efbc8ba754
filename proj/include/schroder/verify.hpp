#ifndef SCHRODER_VERIFY_HPP
#define SCHRODER_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "schroder/config.hpp"

namespace schroder {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// First mismatch, or a short summary of what was checked.
  std::string detail;
  double seconds = 0;
};

/// classical, oeis, cat_schrod, bizley, coprime, rotation, haglund, ct,
/// parking, encoding, reduction, all.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Runs one suite. "classical" and "oeis" are the two halves of criterion 1;
/// "all" runs criteria 1 to 10 in order, one result each.
std::vector<CriterionResult> run_suite(std::string_view name, const Config& cfg = {});

/// "PASS  3 bizley (0.12s) ..." / "FAIL ..."
std::string format_result(const CriterionResult& r);

}  // namespace schroder

#endif  // SCHRODER_VERIFY_HPP
