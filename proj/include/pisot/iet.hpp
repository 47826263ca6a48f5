#pragma once

// Exchanges of three intervals of [0,1):
//   T(x) = x + 1 - lambda        on [0, lambda)
//   T(x) = x + 1 - lambda - mu   on [lambda, mu)
//   T(x) = x - mu                on [mu, 1)
// lambda == mu is the exchange of two intervals.

#include <array>
#include <optional>
#include <string>

#include "pisot/capset.hpp"
#include "pisot/errors.hpp"
#include "pisot/qfield.hpp"

namespace pisot {

struct IetParams {
  QuadRat lambda;
  QuadRat mu;

  static IetParams make(QuadRat lambda, QuadRat mu) {
    const QuadRat one(lambda.unit(), 1);
    if (!(sign_of(lambda) > 0 && lambda <= mu && mu < one)) {
      throw ParameterError("exchange parameters require 0 < lambda <= mu < 1");
    }
    return IetParams{std::move(lambda), std::move(mu)};
  }

  bool two_interval() const { return lambda == mu; }
};

inline char iet_letter(const IetParams& t, const QuadRat& x) {
  if (x < t.lambda) return 'A';
  if (x < t.mu) return 'B';
  return 'C';
}

inline QuadRat apply(const IetParams& t, const QuadRat& x) {
  const QuadRat one(x.unit(), 1);
  if (sign_of(x) < 0 || !(x < one)) throw OutOfDomain("exchange is defined on [0,1)");
  switch (iet_letter(t, x)) {
    case 'A':
      return x + one - t.lambda;
    case 'B':
      return x + one - t.lambda - t.mu;
    default:
      return x - t.mu;
  }
}

// u_n = letter of T^n(rho), n < count.
inline GapWord code_orbit(const IetParams& t, QuadRat rho, std::size_t count) {
  const QuadRat one(rho.unit(), 1);
  if (sign_of(rho) < 0 || !(rho < one)) throw OutOfDomain("starting point must lie in [0,1)");
  GapWord word;
  word.letters.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    word.letters.push_back(iet_letter(t, rho));
    if (n + 1 < count) rho = apply(t, rho);
  }
  return word;
}

// lambda = 1 - delta1'/|Omega|, mu = -delta2'/|Omega|.
inline IetParams params_from_gaps(const QuadRat& delta1_conj, const QuadRat& delta2_conj,
                                  const QuadRat& omega_len) {
  if (!(sign_of(delta2_conj) < 0 && sign_of(delta1_conj) > 0)) {
    throw BadGapData("gap conjugates must satisfy delta2' < 0 < delta1'");
  }
  if (!(delta1_conj < omega_len && -delta2_conj < omega_len)) {
    throw BadGapData("gap conjugates must be shorter than the window");
  }
  const QuadRat one(omega_len.unit(), 1);
  const QuadRat lambda = one - delta1_conj / omega_len;
  const QuadRat mu = -delta2_conj / omega_len;
  if (!(lambda <= mu)) throw BadGapData("gap data give lambda > mu (window shorter than delta1' - delta2')");
  return IetParams::make(lambda, mu);
}

// Normalized position of x' in the window: (x' - lo)/|Omega|.
inline QuadRat gap_word_start(const Window& omega, const QuadInt& x) {
  return (QuadRat(x.conjugate()) - omega.lo) / omega.length();
}

struct Frequencies {
  std::array<double, 3> empirical{};  // A, B, C
  std::array<std::size_t, 3> counts{};
  std::size_t total = 0;
};

inline Frequencies letter_frequencies(const GapWord& word) {
  Frequencies f;
  for (char c : word.letters) {
    if (c >= 'A' && c <= 'C') {
      ++f.counts[static_cast<std::size_t>(c - 'A')];
      ++f.total;
    }
  }
  if (f.total == 0) throw ParameterError("frequencies need a nonempty word");
  for (std::size_t i = 0; i < 3; ++i) {
    f.empirical[i] = static_cast<double>(f.counts[i]) / static_cast<double>(f.total);
  }
  return f;
}

// Interval lengths (lambda, mu - lambda, 1 - mu).
inline std::array<QuadRat, 3> exact_frequencies(const IetParams& t) {
  const QuadRat one(t.lambda.unit(), 1);
  return {t.lambda, t.mu - t.lambda, one - t.mu};
}

struct CodingCheck {
  bool ok = false;
  std::optional<std::size_t> first_mismatch;
  IetParams params;
  QuadRat rho;
  GapWord capset_word;
  GapWord iet_word;
};

// Letterwise comparison of the gap word of a cut-and-project list with the
// orbit coding of the exchange built from its gaps, started at the
// normalized conjugate of the first point. The orbit is also checked to
// follow the normalized conjugates of the points exactly.
inline CodingCheck coding_agreement(const PointList& list) {
  const GapAnalysis g = gaps(list);
  if (!g.word.delta1 || !g.word.delta2) throw BadGapData("coding needs both delta1 and delta2");
  const Window& omega = list.window;
  CodingCheck out;
  out.params = params_from_gaps(QuadRat(g.word.delta1->conjugate()), QuadRat(g.word.delta2->conjugate()),
                                omega.length());
  out.rho = gap_word_start(omega, list.points.front());
  out.capset_word = g.word;
  out.iet_word = code_orbit(out.params, out.rho, g.word.size());
  for (std::size_t i = 0; i < g.word.size(); ++i) {
    if (out.capset_word.letters[i] != out.iet_word.letters[i]) {
      out.first_mismatch = i;
      return out;
    }
  }
  QuadRat t = out.rho;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!(t == gap_word_start(omega, list.points[i]))) {
      out.first_mismatch = i;
      return out;
    }
    if (i + 1 < list.size()) t = apply(out.params, t);
  }
  out.ok = true;
  return out;
}

}  // namespace pisot
