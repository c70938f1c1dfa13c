#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gsgp/core.hpp"

// Command-line surface. Exit codes: 0 = success / property holds,
// 1 = violation or counterexample found, 2 = usage or input error.

namespace gsgp {

struct PropertyEntry {
  std::string name;
  std::string value;
  std::string witness;  // optional supporting detail
};

struct PropertyReport {
  std::vector<PropertyEntry> entries;
};

PropertyReport analyze(const GammaSemigroup& M);

std::string render_text(const PropertyReport& report);
std::string render_json(const PropertyReport& report);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsgp
