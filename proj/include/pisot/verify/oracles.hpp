#pragma once

// Independent reference computations used to cross-check the library. They
// share no code with the enumeration and search routines they check.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pisot/qfield.hpp"

namespace pisot::oracle {

using Pair = std::pair<std::int64_t, std::int64_t>;  // a + b*beta

// Every value sum_{j<=degree} a_j alpha^j with a_j in [lo, hi] and
// alpha = alpha_sign * beta, by unpruned set expansion in machine integers.
inline std::vector<Pair> all_values(long p, int sign, int alpha_sign, long lo, long hi, int degree) {
  auto times_alpha = [&](const Pair& x) {
    // (a + b beta) beta = sign*b + (a + p b) beta
    Pair y{sign * x.second, x.first + p * x.second};
    if (alpha_sign < 0) y = {-y.first, -y.second};
    return y;
  };
  std::vector<Pair> layer;
  for (long d = lo; d <= hi; ++d) layer.push_back({d, 0});
  for (int k = 1; k <= degree; ++k) {
    std::vector<Pair> next;
    next.reserve(layer.size() * static_cast<std::size_t>(hi - lo + 1));
    for (const auto& x : layer) {
      const Pair y = times_alpha(x);
      for (long d = lo; d <= hi; ++d) next.push_back({y.first + d, y.second});
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return layer;
}

inline bool contains(const std::vector<Pair>& values, const QuadInt& z) {
  const Pair key{static_cast<std::int64_t>(z.a()), static_cast<std::int64_t>(z.b())};
  return std::binary_search(values.begin(), values.end(), key);
}

// Value of a digit string (most significant first) in base alpha, in machine
// integers.
inline Pair evaluate(long p, int sign, int alpha_sign, const std::vector<long>& msf) {
  Pair acc{0, 0};
  for (long d : msf) {
    Pair y{sign * acc.second, acc.first + p * acc.second};
    if (alpha_sign < 0) y = {-y.first, -y.second};
    acc = {y.first + d, y.second};
  }
  return acc;
}

}  // namespace pisot::oracle
