#pragma once

// Test-only reference computations. These deliberately avoid the library's
// algorithms: everything is done by direct enumeration on expanded lists.

#include <algorithm>
#include <functional>
#include <vector>

#include "hirz/checked.hpp"

namespace oracle {

using hirz::Int;

/// S^m of a split bundle by enumerating nondecreasing index tuples.
inline std::vector<Int> sym_power(const std::vector<Int>& degrees, Int m) {
  std::vector<Int> out;
  if (m == 0) return {0};
  const Int n = static_cast<Int>(degrees.size());
  std::function<void(Int, Int, Int)> rec = [&](Int start, Int left, Int acc) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (Int i = start; i < n; ++i) rec(i, left - 1, acc + degrees[i]);
  };
  rec(0, m, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// dim H^0(P^1, O(d)) as the number of monomials x^i y^(d-i).
inline Int sections(Int d) {
  Int n = 0;
  for (Int i = 0; i <= d; ++i) ++n;
  return n;
}

inline Int h0_of(const std::vector<Int>& degrees) {
  Int total = 0;
  for (Int d : degrees) total += sections(d);
  return total;
}

}  // namespace oracle
