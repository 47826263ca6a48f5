#pragma once

// Cut-and-project sets Sigma(Omega) = { x in Z[beta] : x' in Omega }.

#include <algorithm>
#include <array>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pisot/numeration.hpp"
#include "pisot/qfield.hpp"
#include "pisot/window.hpp"

namespace pisot {

// Strictly increasing lattice points together with the window and the real
// range they were enumerated over.
struct PointList {
  std::vector<QuadInt> points;
  Window window;
  QuadRat range_lo;
  QuadRat range_hi;

  std::size_t size() const noexcept { return points.size(); }
};

// Word over {A, B, C}; A codes delta1 (positive conjugate), C codes delta2
// (negative conjugate), B codes delta1 + delta2.
struct GapWord {
  std::string letters;
  std::optional<QuadInt> delta1;
  std::optional<QuadInt> delta2;

  std::size_t size() const noexcept { return letters.size(); }
};

// Window containing the conjugates of X^m(beta) for digits {0..m}.
inline Window acceptance_window(QuadUnit u, long m) {
  if (m < 1) throw ParameterError("m >= 1 required");
  const QuadRat beta = QuadRat::beta(u);
  const QuadRat one(u, 1);
  if (u.sign() > 0) {
    const QuadRat den = beta * beta - one;
    return Window::open(-(beta * Rational(m)) / den, beta * beta * Rational(m) / den);
  }
  return Window::make(QuadRat(u), beta * Rational(m) / (beta - one), true, false);
}

// Interior of I_{1/alpha', A} with 0 adjoined, for alpha = alpha_sign * beta.
inline Window acceptance_window_modified(QuadUnit u, const Alphabet& alphabet, int alpha_sign) {
  if (!(QuadRat(u, alphabet.size()) > QuadRat::beta(u))) {
    throw AlphabetTooSmall("#A must exceed beta");
  }
  const QuadRat alpha_conj = QuadRat::beta_conj(u) * Rational(alpha_sign);
  const Window interval = rep_interval(alpha_conj.inverse(), alphabet);
  Window w = interval.interior();
  if (sign_of(w.lo) == 0) w.lo_closed = true;
  if (sign_of(w.hi) == 0) w.hi_closed = true;
  return w;
}

// All x in Z[beta] with r1 <= x <= r2 and x' in omega, ascending.
inline PointList enumerate(QuadUnit u, const Window& omega, const QuadRat& r1, const QuadRat& r2) {
  if (r1 > r2) throw ParameterError("range requires R1 <= R2");
  const QuadRat beta = QuadRat::beta(u);
  const QuadRat beta_conj = QuadRat::beta_conj(u);
  // x - x' = b * (beta - beta')
  const QuadRat spread = beta - beta_conj;
  const Integer b_min = ceil_of((r1 - omega.hi) / spread);
  const Integer b_max = floor_of((r2 - omega.lo) / spread);

  PointList out{{}, omega, r1, r2};
  for (Integer b = b_min; b <= b_max; ++b) {
    const QuadRat bb = beta * Rational(b);
    const QuadRat bc = beta_conj * Rational(b);
    const QuadRat lo_real = r1 - bb;
    const QuadRat lo_conj = omega.lo - bc;
    const QuadRat hi_real = r2 - bb;
    const QuadRat hi_conj = omega.hi - bc;
    const Integer a_min = ceil_of(lo_real > lo_conj ? lo_real : lo_conj);
    const Integer a_max = floor_of(hi_real < hi_conj ? hi_real : hi_conj);
    for (Integer a = a_min; a <= a_max; ++a) {
      QuadInt x(u, a, b);
      if (omega.contains(QuadRat(x.conjugate()))) out.points.push_back(std::move(x));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

// beta' * omega; beta * Sigma(omega) = Sigma(beta' * omega).
inline Window scale_window(QuadUnit u, const Window& omega) { return omega.scaled(QuadRat::beta_conj(u)); }

inline PointList scale_points(const PointList& list) {
  PointList out = list;
  for (auto& x : out.points) x = x.times_beta();
  const QuadRat beta = QuadRat::beta(list.window.unit());
  out.window = scale_window(list.window.unit(), list.window);
  out.range_lo = list.range_lo * beta;
  out.range_hi = list.range_hi * beta;
  return out;
}

struct ThreeGapBasis {
  std::optional<QuadInt> delta1;  // positive conjugate
  std::optional<QuadInt> delta2;  // negative conjugate
};

// Fits sorted distinct gap values to {delta1, delta2, delta1 + delta2}.
inline std::optional<ThreeGapBasis> classify_three_gap(const std::vector<QuadInt>& distinct) {
  auto conj_sign = [](const QuadInt& x) { return sign_of(x.conjugate()); };
  auto basis_of = [&](const QuadInt& x, const QuadInt& y) -> std::optional<ThreeGapBasis> {
    const int sx = conj_sign(x);
    const int sy = conj_sign(y);
    if (sx * sy >= 0) return std::nullopt;
    return sx > 0 ? ThreeGapBasis{x, y} : ThreeGapBasis{y, x};
  };
  switch (distinct.size()) {
    case 1: {
      ThreeGapBasis basis;
      (conj_sign(distinct[0]) > 0 ? basis.delta1 : basis.delta2) = distinct[0];
      return basis;
    }
    case 2: {
      if (auto b = basis_of(distinct[0], distinct[1])) return b;
      return basis_of(distinct[0], distinct[1] - distinct[0]);
    }
    case 3: {
      if (!(distinct[2] == distinct[0] + distinct[1])) return std::nullopt;
      return basis_of(distinct[0], distinct[1]);
    }
    default:
      return std::nullopt;
  }
}

inline char gap_letter(const QuadInt& gap, const ThreeGapBasis& basis) {
  if (basis.delta1 && gap == *basis.delta1) return 'A';
  if (basis.delta2 && gap == *basis.delta2) return 'C';
  if (basis.delta1 && basis.delta2 && gap == *basis.delta1 + *basis.delta2) return 'B';
  return '?';
}

inline std::vector<QuadInt> consecutive_differences(const std::vector<QuadInt>& points) {
  std::vector<QuadInt> out;
  if (points.size() < 2) return out;
  out.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) out.push_back(points[i] - points[i - 1]);
  return out;
}

inline std::vector<QuadInt> distinct_values(std::vector<QuadInt> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

struct GapAnalysis {
  std::vector<QuadInt> values;    // consecutive differences
  std::vector<QuadInt> distinct;  // ascending
  GapWord word;
};

inline GapAnalysis gaps(const PointList& list) {
  if (list.size() < 2) throw ParameterError("gap extraction needs at least 2 points");
  GapAnalysis out;
  out.values = consecutive_differences(list.points);
  out.distinct = distinct_values(out.values);
  const auto basis = classify_three_gap(out.distinct);
  if (!basis) {
    std::ostringstream os;
    os << "gap values do not fit {D1, D2, D1+D2}:";
    for (const auto& v : out.distinct) os << " [" << v << "]";
    throw NotThreeGapStructure(os.str());
  }
  out.word.delta1 = basis->delta1;
  out.word.delta2 = basis->delta2;
  out.word.letters.reserve(out.values.size());
  for (const auto& g : out.values) out.word.letters.push_back(gap_letter(g, *basis));
  return out;
}

// Columns: a, b, float_value, conj_float_value (20 significant digits).
inline std::string to_csv(const PointList& list) {
  std::ostringstream os;
  os << "a,b,float_value,conj_float_value\n";
  os << std::setprecision(20);
  for (const auto& x : list.points) {
    os << x.a() << ',' << x.b() << ',' << to_float<80>(QuadRat(x)) << ','
       << to_float<80>(QuadRat(x.conjugate())) << '\n';
  }
  return os.str();
}

}  // namespace pisot
