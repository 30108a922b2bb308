#ifndef WREATH_CHECKS_HPP_
#define WREATH_CHECKS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/report.hpp"

namespace wreath {

// Scope override for a named check.  With no overrides each check runs on
// its default verification grid (the one the test suite pins); a group or a
// size range narrows or redirects it.
struct CheckScope {
  std::optional<std::string> group;  // group spec string
  std::optional<int> max_n;
  std::optional<int> m;
};

std::vector<std::string> available_checks();

// Runs one named check; throws on unknown names.
std::vector<Report> run_check(const std::string& name, const CheckScope& scope = {});

// The full verification suite (every named check on its default grid), in a
// fixed order.  Deterministic output.
std::vector<Report> run_all_checks();

// Runs the suite twice, compares the serialized reports byte for byte, and
// appends the determinism verdict.
std::vector<Report> run_all_checks_with_determinism();

}  // namespace wreath

#endif  // WREATH_CHECKS_HPP_
