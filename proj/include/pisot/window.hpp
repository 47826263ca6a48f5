#pragma once

#include <sstream>
#include <string>

#include "pisot/qfield.hpp"

namespace pisot {

// Interval with exact endpoints in Q(beta) and per-endpoint closedness.
struct Window {
  QuadRat lo;
  QuadRat hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Window make(QuadRat lo, QuadRat hi, bool lo_closed, bool hi_closed) {
    const auto c = lo <=> hi;
    if (c > 0 || (c == 0 && !(lo_closed && hi_closed))) {
      throw ParameterError("window requires lo < hi (or a closed point)");
    }
    return Window{std::move(lo), std::move(hi), lo_closed, hi_closed};
  }
  static Window closed(QuadRat lo, QuadRat hi) { return make(std::move(lo), std::move(hi), true, true); }
  static Window open(QuadRat lo, QuadRat hi) { return make(std::move(lo), std::move(hi), false, false); }

  QuadUnit unit() const { return lo.unit(); }
  QuadRat length() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }

  bool contains(const QuadRat& x) const {
    const auto cl = x <=> lo;
    if (cl < 0 || (cl == 0 && !lo_closed)) return false;
    const auto ch = x <=> hi;
    if (ch > 0 || (ch == 0 && !hi_closed)) return false;
    return true;
  }
  bool contains_interior(const QuadRat& x) const { return x > lo && x < hi; }

  Window interior() const { return Window{lo, hi, false, false}; }
  Window closure() const { return Window{lo, hi, true, true}; }

  // Image under x -> k*x; orientation flips for negative k.
  Window scaled(const QuadRat& k) const {
    const int s = sign_of(k);
    if (s == 0) return Window{k * lo, k * lo, true, true};
    if (s > 0) return Window{k * lo, k * hi, lo_closed, hi_closed};
    return Window{k * hi, k * lo, hi_closed, lo_closed};
  }

  // Whole window contained in other, flags respected.
  bool subset_of(const Window& other) const {
    const auto cl = lo <=> other.lo;
    if (cl < 0 || (cl == 0 && lo_closed && !other.lo_closed)) return false;
    const auto ch = hi <=> other.hi;
    if (ch > 0 || (ch == 0 && hi_closed && !other.hi_closed)) return false;
    return true;
  }

  friend bool operator==(const Window&, const Window&) = default;
};

inline std::string to_string(const Window& w) {
  std::ostringstream os;
  os << (w.lo_closed ? "[" : "(") << to_string(w.lo) << ", " << to_string(w.hi)
     << (w.hi_closed ? "]" : ")");
  return os.str();
}

}  // namespace pisot
