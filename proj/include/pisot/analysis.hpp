#pragma once

// Closed-form gap values and frequencies, exceptional points of classical
// spectra, and the counterexample families.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pisot/capset.hpp"
#include "pisot/errors.hpp"
#include "pisot/qfield.hpp"
#include "pisot/spectrum.hpp"

namespace pisot {

// phi_j = beta - j for j < floor(beta), phi_{floor(beta)} = 1.
inline QuadRat phi(QuadUnit u, long j) {
  const long f = u.floor_beta();
  if (j < 0 || j > f) throw IndexError("phi_j needs 0 <= j <= floor(beta)");
  if (j == f) return QuadRat(u, 1);
  return QuadRat::beta(u) - Rational(j);
}

struct BaseDistances {
  long j = 0;
  std::array<QuadRat, 3> distances;  // 1, j - beta', j + 1 - beta'
  bool boundary = false;             // length == phi_{j-1}: the third distance does not occur
};

// Distances of a cut-and-project set whose window has length in (1, beta].
inline BaseDistances base_distances(QuadUnit u, const QuadRat& omega_len) {
  const QuadRat one(u, 1);
  if (!(omega_len > one && omega_len <= QuadRat::beta(u))) {
    throw OutOfRange("window length must lie in (1, beta]");
  }
  const QuadRat bc = QuadRat::beta_conj(u);
  for (long j = 1; j <= u.floor_beta(); ++j) {
    if (omega_len > phi(u, j) && omega_len <= phi(u, j - 1)) {
      return BaseDistances{j, {one, QuadRat(u, j) - bc, QuadRat(u, j + 1) - bc}, omega_len == phi(u, j - 1)};
    }
  }
  throw OutOfRange("no j with phi_j < |Omega| <= phi_{j-1}");
}

struct ScaledDistances {
  long k = 0;  // |Omega| / beta^k lies in (1, beta]
  BaseDistances base;
  std::array<QuadRat, 3> distances;  // base distances times beta^-k
};

// Uses beta * Sigma(Omega) = Sigma(beta' * Omega) to reduce to (1, beta].
inline ScaledDistances scaled_distances(QuadUnit u, const QuadRat& omega_len) {
  if (sign_of(omega_len) <= 0) throw OutOfRange("window length must be positive");
  const QuadRat beta = QuadRat::beta(u);
  const QuadRat one(u, 1);
  ScaledDistances out;
  QuadRat len = omega_len;
  while (len > beta) {
    len = len / beta;
    ++out.k;
  }
  while (len <= one) {
    len = len * beta;
    --out.k;
  }
  out.base = base_distances(u, len);
  const QuadRat scale = beta_pow(u, -out.k);
  for (std::size_t i = 0; i < 3; ++i) out.distances[i] = out.base.distances[i] * scale;
  return out;
}

struct GapPrediction {
  QuadUnit unit;
  long alphabet_size = 0;
  long l = 0;
  long j = 0;
  std::array<QuadRat, 3> distances;    // beta^-l * (1, j - beta', j + 1 - beta')
  std::array<QuadRat, 3> frequencies;  // same order
  bool boundary = false;

  // Letter of each distance: the sum is B, the other two are A/C by the sign
  // of their conjugates.
  std::array<char, 3> letters() const {
    const bool first_positive = sign_of(distances[0].conjugate()) > 0;
    return {first_positive ? 'A' : 'C', first_positive ? 'C' : 'A', 'B'};
  }

  // Distances that actually occur (nonzero frequency), ascending.
  std::vector<QuadInt> occurring() const {
    std::vector<QuadInt> out;
    for (std::size_t i = 0; i < 3; ++i) {
      if (!frequencies[i].is_zero()) out.push_back(distances[i].to_int());
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Unique (l, j) with
//   beta^{l-1}(beta-1) max{beta-j, 1} < #A-1 <= beta^{l-1}(beta-1)(beta-j+1).
inline GapPrediction predict_gaps(QuadUnit u, long alphabet_size) {
  const QuadRat beta = QuadRat::beta(u);
  const QuadRat one(u, 1);
  if (!(QuadRat(u, alphabet_size) > beta)) throw AlphabetTooSmall("#A must exceed beta");
  const QuadRat n(u, alphabet_size - 1);
  const QuadRat bc = QuadRat::beta_conj(u);

  std::optional<GapPrediction> found;
  for (long l = 0;; ++l) {
    const QuadRat c = beta_pow(u, l - 1) * (beta - one);
    if (c >= n) break;  // every later left bound is at least #A-1
    for (long j = 1; j <= u.floor_beta(); ++j) {
      if (!(c * phi(u, j) < n && n <= c * phi(u, j - 1))) continue;
      if (found) throw Error("internal: two (l, j) solutions for #A = " + std::to_string(alphabet_size));
      GapPrediction g;
      g.unit = u;
      g.alphabet_size = alphabet_size;
      g.l = l;
      g.j = j;
      const QuadRat scale = beta_pow(u, -l);
      g.distances = {scale, (QuadRat(u, j) - bc) * scale, (QuadRat(u, j + 1) - bc) * scale};
      g.frequencies = {one - c / n, one - c * (beta - Rational(j)) / n,
                       c * (beta - Rational(j - 1)) / n - one};
      g.boundary = n == c * phi(u, j - 1);
      found = g;
    }
  }
  if (!found) throw Error("internal: no (l, j) found for #A = " + std::to_string(alphabet_size));
  return *found;
}

// Minus case: y_k = -beta^k + m(beta^{k-1} + ... + 1), k >= 1.
// Plus case:  y_k = -beta^{2k} + m(beta^{2k-2} + ... + 1), k >= 0.
inline QuadInt counterexample_point(QuadUnit u, long m, long k) {
  const long f = u.floor_beta();
  QuadInt y(u);
  if (u.sign() < 0) {
    if (m < f || k < 1) throw ParameterError("minus case needs m >= floor(beta) and k >= 1");
    for (long i = 0; i < k; ++i) y += beta_power(u, i) * Integer(m);
    return y - beta_power(u, k);
  }
  if (m <= f || k < 0) throw ParameterError("plus case needs m > floor(beta) and k >= 0");
  for (long i = 0; i < k; ++i) y += beta_power(u, 2 * i) * Integer(m);
  return y - beta_power(u, 2 * k);
}

enum class Parity { none, even, odd };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    default:
      return "none";
  }
}

// z = m * sum_{i<j} beta^i + s beta^j (minus case), or
// z = m * sum_{i<j} beta^{2i+e} + s beta^{2j+e}, e = 0 (even) / 1 (odd).
struct ExceptionForm {
  QuadInt s;
  long j = 0;
  Parity parity = Parity::none;
};

struct ExceptionRecord {
  QuadInt point;
  std::optional<ExceptionForm> form;
};

inline QuadInt reconstruct(QuadUnit u, long m, const ExceptionForm& f) {
  const long offset = f.parity == Parity::odd ? 1 : 0;
  const long stride = f.parity == Parity::none ? 1 : 2;
  QuadInt z(u);
  for (long i = 0; i < f.j; ++i) z += beta_power(u, stride * i + offset) * Integer(m);
  return z + f.s * beta_power(u, stride * f.j + offset);
}

struct ExceptionSet {
  Window omega;
  std::vector<QuadInt> S;  // (0, m) intersected with Sigma(Omega), ascending
  std::vector<ExceptionRecord> records;

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const ExceptionRecord& r) { return !r.form; }));
  }
};

inline std::optional<ExceptionForm> decompose_exception(const QuadInt& z, long m, const std::vector<QuadInt>& S) {
  const QuadUnit u = z.unit();
  auto in_S = [&](const QuadInt& s) { return std::binary_search(S.begin(), S.end(), s); };
  const std::vector<std::pair<Parity, long>> shapes =
      u.sign() < 0 ? std::vector<std::pair<Parity, long>>{{Parity::none, 0}}
                   : std::vector<std::pair<Parity, long>>{{Parity::even, 0}, {Parity::odd, 1}};
  for (const auto& [parity, offset] : shapes) {
    const long stride = parity == Parity::none ? 1 : 2;
    QuadInt head(u);
    for (long j = 0;; ++j) {
      const QuadInt power = beta_power(u, stride * j + offset);
      const QuadInt rest = z - head;
      if (sign_of(rest) <= 0) break;
      const QuadInt s = rest * power.unit_inverse();
      if (in_S(s)) return ExceptionForm{s, j, parity};
      head += power * Integer(m);
    }
  }
  return std::nullopt;
}

// Points of Sigma(Omega) in (0, cap] missing from X^m(beta), each written in
// its exceptional form. Throws DecompositionFailure on a point that fits no
// form unless strict is false, in which case the record keeps an empty form.
inline ExceptionSet exceptional_set(QuadUnit u, long m, const QuadRat& cap, bool strict = true) {
  if (m < u.floor_beta()) throw ParameterError("m >= floor(beta) required");
  ExceptionSet out;
  out.omega = acceptance_window(u, m);
  for (auto& s : enumerate(u, out.omega, QuadRat(u), QuadRat(u, m)).points) {
    if (sign_of(s) > 0 && QuadRat(s) < QuadRat(u, m)) out.S.push_back(std::move(s));
  }

  const SpectrumSpec spec = SpectrumSpec::make(u, 1, Alphabet::zero_to(m));
  for (const auto& z : enumerate(u, out.omega, QuadRat(u), cap).points) {
    if (sign_of(z) <= 0 || member(z, spec).member) continue;
    ExceptionRecord rec{z, decompose_exception(z, m, out.S)};
    if (!rec.form && strict) throw DecompositionFailure("exceptional point " + to_string(z) + " fits no form");
    out.records.push_back(std::move(rec));
  }
  return out;
}

struct MarginReport {
  bool ok = false;                       // right inclusion holds on the range
  Window shrunk;                         // (1 - delta) * Omega
  std::optional<QuadInt> K;              // largest point of Sigma(shrunk) missing from X^m(beta)
  std::vector<QuadInt> violations;       // points of Sigma(shrunk) missing from X^m(beta)
  std::vector<QuadInt> right_violations;  // points of X^m(beta) outside Sigma(Omega)
};

// Checks [K, inf) & Sigma((1-delta) Omega) in X^m(beta) in Sigma(Omega) on
// [r1, r2]; the window is shrunk by scaling both endpoints toward 0.
inline MarginReport verify_inclusion_margin(QuadUnit u, long m, const Rational& delta, const QuadRat& r1,
                                            const QuadRat& r2) {
  if (!(delta > 0 && delta < 1)) throw ParameterError("0 < delta < 1 required");
  const Window omega = acceptance_window(u, m);
  MarginReport out;
  out.shrunk = omega.scaled(QuadRat(u, 1 - delta));

  const SpectrumSpec spec = SpectrumSpec::make(u, 1, Alphabet::zero_to(m));
  const long degree = detail::log_beta_floor(u, r2);
  const auto X = enumerate_spectrum(spec, degree, r1, r2).points;
  for (const auto& x : X) {
    if (!omega.contains(QuadRat(x.conjugate()))) out.right_violations.push_back(x);
  }
  for (const auto& z : enumerate(u, out.shrunk, r1, r2).points) {
    if (!std::binary_search(X.begin(), X.end(), z)) out.violations.push_back(z);
  }
  if (!out.violations.empty()) out.K = out.violations.back();
  out.ok = out.right_violations.empty();
  return out;
}

// Number of distinct gaps of Sigma over [r1, r2] for the four closedness
// conventions of a window: open, [lo, hi), (lo, hi], closed.
inline std::array<std::size_t, 4> boundary_conventions(const Window& omega, const QuadRat& r1, const QuadRat& r2) {
  std::array<std::size_t, 4> out{};
  const std::array<std::pair<bool, bool>, 4> flags{{{false, false}, {true, false}, {false, true}, {true, true}}};
  for (std::size_t i = 0; i < 4; ++i) {
    const Window w{omega.lo, omega.hi, flags[i].first, flags[i].second};
    const auto pts = enumerate(omega.unit(), w, r1, r2).points;
    out[i] = distinct_values(consecutive_differences(pts)).size();
  }
  return out;
}

struct GapReport {
  GapPrediction prediction;
  Alphabet alphabet;
  int alpha_sign = 1;
  std::vector<QuadInt> empirical;  // distinct values outside exception positions
  std::vector<QuadInt> missing;    // predicted with nonzero frequency, not observed
  std::vector<QuadInt> unexpected;  // observed, not predicted
  std::vector<std::pair<QuadInt, std::size_t>> exceptions;  // value, position
  std::array<std::size_t, 3> counts{};                       // per predicted distance
  std::array<double, 3> freqs{};
  double max_freq_error = 0;
  double tolerance = 0.02;

  bool values_match() const { return missing.empty() && unexpected.empty(); }
  bool frequencies_match() const { return max_freq_error <= tolerance; }
};

inline GapReport compare(const GapPrediction& prediction, const GapSequence& seq, const Alphabet& alphabet,
                         int alpha_sign, double tolerance = 0.02) {
  GapReport r;
  r.prediction = prediction;
  r.alphabet = alphabet;
  r.alpha_sign = alpha_sign;
  r.tolerance = tolerance;

  std::vector<bool> skip(seq.values.size(), false);
  for (std::size_t pos : seq.exceptions) {
    skip[pos] = true;
    r.exceptions.emplace_back(seq.values[pos], pos);
  }
  std::vector<QuadInt> kept;
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    if (!skip[i]) kept.push_back(seq.values[i]);
  }
  r.empirical = distinct_values(kept);

  const auto predicted = prediction.occurring();
  std::set_difference(predicted.begin(), predicted.end(), r.empirical.begin(), r.empirical.end(),
                      std::back_inserter(r.missing));
  std::set_difference(r.empirical.begin(), r.empirical.end(), predicted.begin(), predicted.end(),
                      std::back_inserter(r.unexpected));

  for (const auto& v : kept) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (QuadRat(v) == prediction.distances[i]) ++r.counts[i];
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    r.freqs[i] = kept.empty() ? 0.0 : static_cast<double>(r.counts[i]) / static_cast<double>(kept.size());
    r.max_freq_error = std::max(r.max_freq_error, std::fabs(r.freqs[i] - to_double(prediction.frequencies[i])));
  }
  return r;
}

inline nlohmann::json exact_json(const QuadRat& x) {
  const auto c = common_denominator(x);
  return {{"a", c.a.str()}, {"b", c.b.str()}, {"den", c.den.str()}, {"value", to_double(x)}};
}

inline nlohmann::json to_json(const GapPrediction& g) {
  nlohmann::json out;
  out["unit"] = {{"p", g.unit.p()}, {"sign", g.unit.sign()}};
  out["alphabet_size"] = g.alphabet_size;
  out["l"] = g.l;
  out["j"] = g.j;
  out["distances"] = nlohmann::json::array();
  out["frequencies"] = nlohmann::json::array();
  const auto letters = g.letters();
  out["letters"] = nlohmann::json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    out["distances"].push_back(exact_json(g.distances[i]));
    out["frequencies"].push_back(exact_json(g.frequencies[i]));
    out["letters"].push_back(std::string(1, letters[i]));
  }
  out["boundary"] = g.boundary;
  return out;
}

inline nlohmann::json to_json(const GapReport& r) {
  nlohmann::json out = to_json(r.prediction);
  out["alphabet"] = {{"a", r.alphabet.lo}, {"A", r.alphabet.hi}};
  out["base_sign"] = r.alpha_sign;
  out["exceptions"] = nlohmann::json::array();
  for (const auto& [v, pos] : r.exceptions) {
    out["exceptions"].push_back({{"a", v.a().str()}, {"b", v.b().str()}, {"position", pos}});
  }
  out["empirical"] = {{"counts", r.counts}, {"freqs", r.freqs}};
  out["values_match"] = r.values_match();
  out["max_freq_error"] = r.max_freq_error;
  return out;
}

}  // namespace pisot
