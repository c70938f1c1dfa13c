#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "gsgp/core.hpp"

// Test-side oracles, deliberately independent of the library's
// validation and enumeration paths: straight loops over raw entries.

namespace testutil {

inline bool oracle_mixed_associative(const gsgp::RawTable& t) {
  auto at = [&](int gamma, int a, int b) { return t.entries[(gamma * t.m + a) * t.m + b]; };
  for (int alpha = 0; alpha < t.g; ++alpha)
    for (int beta = 0; beta < t.g; ++beta)
      for (int a = 0; a < t.m; ++a)
        for (int b = 0; b < t.m; ++b)
          for (int c = 0; c < t.m; ++c)
            if (at(beta, at(alpha, a, b), c) != at(alpha, a, at(beta, b, c))) return false;
  return true;
}

inline bool oracle_plain_associative(const std::vector<gsgp::Elem>& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a * n + b] * n + c] != t[a * n + t[b * n + c]]) return false;
  return true;
}

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

inline gsgp::RawTable raw_of(int m, int g, std::vector<gsgp::Elem> entries) {
  gsgp::RawTable t;
  t.m = m;
  t.g = g;
  t.entries = std::move(entries);
  return t;
}

}  // namespace testutil
