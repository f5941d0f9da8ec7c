#pragma once

#include "charid/char_identity.hpp"

#include <vector>

namespace testing_helpers {

inline charid::HighestWeight W(const char* text) { return charid::parse_highest_weight(text); }
inline charid::Rational Q(const char* text) { return charid::parse_rational(text); }

/// Non-negative integer dominant weights of gl(n) with lambda_1 <= top.
inline std::vector<charid::HighestWeight> small_weights(std::size_t n, int top) {
  std::vector<charid::HighestWeight> out;
  std::vector<charid::Rational> cur;
  auto rec = [&](auto&& self, int bound) -> void {
    if (cur.size() == n) {
      out.push_back(charid::HighestWeight{cur});
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, top);
  return out;
}

}  // namespace testing_helpers
