#pragma once

// Spectra X^A(alpha) = { sum_j a_j alpha^j : a_j in A } for alpha = +-beta.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pisot/capset.hpp"
#include "pisot/numeration.hpp"
#include "pisot/qfield.hpp"

namespace pisot {

struct SpectrumSpec {
  QuadUnit unit;
  int alpha_sign = 1;
  Alphabet alphabet;

  static SpectrumSpec make(QuadUnit unit, int alpha_sign, Alphabet alphabet) {
    if (alpha_sign != 1 && alpha_sign != -1) throw ParameterError("base sign must be + or -");
    if (!(QuadRat(unit, alphabet.size()) > QuadRat::beta(unit))) {
      throw AlphabetTooSmall("#A must exceed beta");
    }
    return SpectrumSpec{unit, alpha_sign, alphabet};
  }

  // Positive base with digits {0..m}.
  bool classical() const noexcept { return alpha_sign > 0 && alphabet.lo == 0; }

  // Hypotheses under which the spectrum coincides with its cut-and-project set:
  // alpha = -beta, or alpha = beta with {-1, 0, 1} contained in the alphabet.
  bool equals_capset() const noexcept {
    return alpha_sign < 0 || (alphabet.lo <= -1 && alphabet.hi >= 1);
  }

  QuadInt alpha() const {
    const QuadInt b = QuadInt::beta(unit);
    return alpha_sign > 0 ? b : -b;
  }

  QuadInt alpha_power(long k) const {
    QuadInt r = beta_power(unit, k);
    return (alpha_sign < 0 && (k % 2 != 0)) ? -r : r;
  }

  // I_{1/alpha', A} interior with 0 adjoined.
  Window window() const { return acceptance_window_modified(unit, alphabet, alpha_sign); }

  // Closed hull of all conjugates sum a_j alpha'^j.
  Window conj_hull() const {
    const QuadRat gamma = QuadRat(alpha().conjugate()).inverse();
    return rep_hull(gamma, alphabet);
  }
};

namespace detail {

// Bounds of sum_{j<k} a_j alpha^j over all digit choices.
struct TailBounds {
  QuadInt lo;
  QuadInt hi;
};

inline std::vector<TailBounds> tail_bounds(const SpectrumSpec& spec, long max_len) {
  std::vector<TailBounds> out;
  QuadInt lo(spec.unit), hi(spec.unit);
  QuadInt power(spec.unit, 1, 0);
  out.push_back({lo, hi});
  for (long j = 0; j < max_len; ++j) {
    if (sign_of(power) > 0) {
      lo += power * Integer(spec.alphabet.lo);
      hi += power * Integer(spec.alphabet.hi);
    } else {
      lo += power * Integer(spec.alphabet.hi);
      hi += power * Integer(spec.alphabet.lo);
    }
    out.push_back({lo, hi});
    power *= spec.alpha();
  }
  return out;
}

inline void dedupe_lattice(std::vector<QuadInt>& xs) {
  std::sort(xs.begin(), xs.end(), LatticeLess{});
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace detail

// All distinct values sum_{j<=n} a_j alpha^j inside [r1, r2], ascending.
// Built layer by layer, S_{k+1} = alpha*S_k + A, keeping only values that
// can still land in the range after the remaining digits.
inline PointList enumerate_spectrum(const SpectrumSpec& spec, long max_degree, const QuadRat& r1,
                                    const QuadRat& r2) {
  if (max_degree < 0) throw ParameterError("degree n >= 0 required");
  if (r1 > r2) throw ParameterError("range requires R1 <= R2");
  const auto tails = detail::tail_bounds(spec, max_degree);
  std::vector<QuadInt> powers;
  for (long r = 0; r <= max_degree; ++r) powers.push_back(spec.alpha_power(r));

  auto viable = [&](const QuadInt& s, long remaining) {
    const QuadRat lead = QuadRat(powers[static_cast<std::size_t>(remaining)] * s);
    const auto& t = tails[static_cast<std::size_t>(remaining)];
    return lead >= r1 - QuadRat(t.hi) && lead <= r2 - QuadRat(t.lo);
  };

  std::vector<QuadInt> layer;
  for (long d = spec.alphabet.lo; d <= spec.alphabet.hi; ++d) {
    QuadInt x(spec.unit, d, 0);
    if (viable(x, max_degree)) layer.push_back(std::move(x));
  }
  const QuadInt alpha = spec.alpha();
  for (long k = 1; k <= max_degree; ++k) {
    std::vector<QuadInt> next;
    next.reserve(layer.size() * static_cast<std::size_t>(spec.alphabet.size()));
    for (const auto& s : layer) {
      const QuadInt base = alpha * s;
      for (long d = spec.alphabet.lo; d <= spec.alphabet.hi; ++d) {
        QuadInt x = base + Integer(d);
        if (viable(x, max_degree - k)) next.push_back(std::move(x));
      }
    }
    detail::dedupe_lattice(next);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return PointList{std::move(layer), spec.window(), r1, r2};
}

struct MemberResult {
  bool member = false;
  std::optional<DigitString> witness;  // most significant digit first
  std::size_t states = 0;              // distinct states explored
};

// Exact membership z in X^A(alpha) by depth-first search over
// z -> (z - d)/alpha, pruned by the necessary conditions on z and z'.
inline MemberResult member(const QuadInt& z, const SpectrumSpec& spec) {
  MemberResult out;
  if (z.is_zero()) {
    out.member = true;
    out.witness = DigitString{};
    return out;
  }
  const Window hull = spec.conj_hull();
  const bool nonneg = spec.alpha_sign > 0 && spec.alphabet.lo >= 0;
  const bool nonpos = spec.alpha_sign > 0 && spec.alphabet.hi <= 0;
  auto viable = [&](const QuadInt& s) {
    if (nonneg && sign_of(s) < 0) return false;
    if (nonpos && sign_of(s) > 0) return false;
    return hull.contains(QuadRat(s.conjugate()));
  };
  if (!viable(z)) return out;

  const QuadInt alpha_inv = spec.alpha().unit_inverse();
  struct Frame {
    QuadInt state;
    long next_digit;
  };
  std::set<QuadInt, LatticeLess> visited{z};
  std::vector<Frame> stack{{z, spec.alphabet.lo}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_digit > spec.alphabet.hi) {
      stack.pop_back();
      continue;
    }
    const long d = top.next_digit++;
    const QuadInt child = (top.state - Integer(d)) * alpha_inv;
    if (child.is_zero()) {
      std::vector<long> lsf;
      for (const auto& f : stack) lsf.push_back(f.next_digit - 1);
      out.member = true;
      out.witness = DigitString::from_lsf(std::move(lsf));
      out.states = visited.size();
      return out;
    }
    if (!viable(child) || !visited.insert(child).second) continue;
    stack.push_back({child, spec.alphabet.lo});
  }
  out.states = visited.size();
  return out;
}

struct GapSequence {
  std::vector<QuadInt> points;          // N+1 consecutive spectrum points
  std::vector<QuadInt> values;          // N gaps
  std::vector<QuadInt> distinct;        // ascending
  std::vector<QuadInt> reference;       // gap values of Sigma(Omega) over the same range
  std::vector<std::size_t> exceptions;  // positions whose gap is not a reference value
  GapWord word;                         // '?' at exceptional positions
  std::size_t skip = 0;
};

namespace detail {

inline long log_beta_floor(QuadUnit u, const QuadRat& r) {
  long n = 0;
  QuadInt power(u, 1, 0);
  while (QuadRat(power.times_beta()) <= r) {
    power = power.times_beta();
    ++n;
  }
  return n;
}

// Increase the degree until three consecutive degrees agree on the range.
inline PointList enumerate_stable(const SpectrumSpec& spec, const QuadRat& r1, const QuadRat& r2,
                                  long start_degree) {
  long n = start_degree;
  PointList prev = enumerate_spectrum(spec, n, r1, r2);
  int stable = 0;
  while (stable < 2) {
    PointList cur = enumerate_spectrum(spec, ++n, r1, r2);
    stable = cur.points == prev.points ? stable + 1 : 0;
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace detail

// The whole spectrum on [r1, r2]. Classical spectra need no digit beyond
// beta^n <= r2; otherwise the degree grows until the set stops changing.
inline PointList enumerate_range(const SpectrumSpec& spec, const QuadRat& r1, const QuadRat& r2) {
  const long deg = detail::log_beta_floor(spec.unit, sign_of(r2) < 0 ? -r2 : r2);
  if (spec.classical()) return enumerate_spectrum(spec, deg, r1, r2);
  const long low = detail::log_beta_floor(spec.unit, sign_of(r1) < 0 ? -r1 : r1);
  return detail::enumerate_stable(spec, r1, r2, std::max(deg, low) + 2);
}

// N consecutive gaps of the spectrum. Classical spectra start after the
// first K0 points; other spectra are taken centred on 0, shifted by K0.
// The enumeration range grows by a factor beta until enough points exist.
inline GapSequence gap_sequence(const SpectrumSpec& spec, std::size_t count, std::size_t skip = 0) {
  if (count < 1) throw ParameterError("gap count N >= 1 required");
  const QuadUnit u = spec.unit;
  const QuadRat beta = QuadRat::beta(u);
  QuadRat radius = beta_pow(u, 3);
  GapSequence out;
  out.skip = skip;
  PointList pts;
  std::size_t start = 0;
  for (;;) {
    const long deg = detail::log_beta_floor(u, radius);
    if (spec.classical()) {
      pts = enumerate_spectrum(spec, deg, QuadRat(u), radius);
      if (pts.size() >= skip + count + 1) {
        start = skip;
        break;
      }
    } else {
      pts = detail::enumerate_stable(spec, -radius, radius, deg + 2);
      const auto zero = std::lower_bound(pts.points.begin(), pts.points.end(), QuadInt(u));
      const auto centre = static_cast<std::size_t>(zero - pts.points.begin());
      if (centre >= count / 2 && centre - count / 2 + skip + count < pts.size()) {
        start = centre - count / 2 + skip;
        break;
      }
    }
    radius = radius * beta;
  }

  out.points.assign(pts.points.begin() + static_cast<std::ptrdiff_t>(start),
                    pts.points.begin() + static_cast<std::ptrdiff_t>(start + count + 1));
  out.values = consecutive_differences(out.points);
  out.distinct = distinct_values(out.values);

  const PointList ref = enumerate(u, spec.window(), QuadRat(out.points.front()), QuadRat(out.points.back()));
  out.reference = distinct_values(consecutive_differences(ref.points));
  const auto basis = classify_three_gap(out.reference);
  out.word.letters.reserve(count);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const bool known = std::binary_search(out.reference.begin(), out.reference.end(), out.values[i]);
    if (!known) out.exceptions.push_back(i);
    out.word.letters.push_back(known && basis ? gap_letter(out.values[i], *basis) : '?');
  }
  if (basis) {
    out.word.delta1 = basis->delta1;
    out.word.delta2 = basis->delta2;
  }
  return out;
}

}  // namespace pisot
