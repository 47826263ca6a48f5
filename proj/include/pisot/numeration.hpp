#pragma once

// Positional representations w = sum_i D_i / gamma^i with digits from a set
// of consecutive integers, the digit assignment D and the transformation
// T(w) = gamma*(w - D(w)), plus the digit-sum-reducing rewriting rules that
// bring nonnegative base-beta representations to a normal form.

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pisot/qfield.hpp"
#include "pisot/window.hpp"

namespace pisot {

// {lo, lo+1, ..., hi} with lo <= 0 <= hi.
struct Alphabet {
  long lo = 0;
  long hi = 1;

  static Alphabet make(long lo, long hi) {
    if (lo > 0 || hi < 0) throw ParameterError("alphabet must contain 0 (a <= 0 <= A)");
    return Alphabet{lo, hi};
  }
  static Alphabet zero_to(long m) { return make(0, m); }

  // "a..A"
  static Alphabet parse(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) throw ParameterError("alphabet must be written a..A");
    auto to_long = [](std::string_view s) {
      long v = 0;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParameterError("alphabet bounds must be integers");
      }
      return v;
    };
    return make(to_long(text.substr(0, dots)), to_long(text.substr(dots + 2)));
  }

  long size() const noexcept { return hi - lo + 1; }
  bool contains(long d) const noexcept { return lo <= d && d <= hi; }

  std::string to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// The sub-alphabet {b, ..., B} with B - b = floor(|gamma|).
using CoreAlphabet = Alphabet;

// Finite digit word, most significant digit first; the radix point sits to
// the right of the last digit.
class DigitString {
 public:
  DigitString() = default;
  explicit DigitString(std::vector<long> msf) : digits_(std::move(msf)) {}
  DigitString(std::initializer_list<long> msf) : digits_(msf) {}

  static DigitString from_lsf(std::vector<long> lsf) {
    std::reverse(lsf.begin(), lsf.end());
    return DigitString(std::move(lsf));
  }

  const std::vector<long>& digits() const noexcept { return digits_; }
  std::vector<long> lsf() const { return {digits_.rbegin(), digits_.rend()}; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }

  // Coefficient of base^power (0 beyond the most significant digit).
  long coefficient(std::size_t power) const {
    return power < digits_.size() ? digits_[digits_.size() - 1 - power] : 0;
  }

  long digit_sum() const {
    long s = 0;
    for (long d : digits_) s += d;
    return s;
  }

  DigitString stripped() const {
    auto it = std::find_if(digits_.begin(), digits_.end(), [](long d) { return d != 0; });
    return DigitString(std::vector<long>(it, digits_.end()));
  }

  bool within(const Alphabet& alphabet) const {
    return std::all_of(digits_.begin(), digits_.end(), [&](long d) { return alphabet.contains(d); });
  }

  QuadInt evaluate(const QuadInt& base) const {
    QuadInt acc(base.unit());
    for (long d : digits_) acc = acc * base + Integer(d);
    return acc;
  }
  QuadRat evaluate(const QuadRat& base) const {
    QuadRat acc(base.unit());
    for (long d : digits_) acc = acc * base + Rational(d);
    return acc;
  }

  // "1,0,-1"; the empty word is the empty string.
  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (i) os << ',';
      os << digits_[i];
    }
    return os.str();
  }

  static DigitString parse(std::string_view text) {
    std::vector<long> out;
    if (text.empty()) return DigitString(out);
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      long v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParameterError("digit strings are comma-separated integers");
      }
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return DigitString(std::move(out));
  }

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  std::vector<long> digits_;
};

// Convex hull of { sum_{i>=0} D_i / gamma^i : D_i in alphabet }.
inline Window rep_hull(const QuadRat& gamma, const Alphabet& alphabet) {
  const QuadUnit u = gamma.unit();
  const QuadRat one(u, 1);
  const Rational a = alphabet.lo;
  const Rational A = alphabet.hi;
  if (gamma > one) {
    const QuadRat k = gamma / (gamma - one);
    return Window::closed(k * a, k * A);
  }
  if (gamma < -one) {
    const QuadRat k = gamma / (gamma * gamma - one);
    return Window::closed((gamma * a + A) * k, (gamma * A + a) * k);
  }
  throw ParameterError("base must satisfy |gamma| > 1");
}

// The set of numbers with a (gamma, alphabet)-representation; an interval
// exactly when #alphabet > |gamma|.
inline Window rep_interval(const QuadRat& gamma, const Alphabet& alphabet) {
  const QuadRat abs_gamma = sign_of(gamma) < 0 ? -gamma : gamma;
  if (!(QuadRat(gamma.unit(), alphabet.size()) > abs_gamma)) {
    throw AlphabetTooSmall("#A must exceed |gamma| (A - a > |gamma| - 1)");
  }
  return rep_hull(gamma, alphabet);
}

inline std::optional<Window> intersect(const Window& x, const Window& y) {
  Window r;
  const auto cl = x.lo <=> y.lo;
  if (cl > 0) {
    r.lo = x.lo;
    r.lo_closed = x.lo_closed;
  } else if (cl < 0) {
    r.lo = y.lo;
    r.lo_closed = y.lo_closed;
  } else {
    r.lo = x.lo;
    r.lo_closed = x.lo_closed && y.lo_closed;
  }
  const auto ch = x.hi <=> y.hi;
  if (ch < 0) {
    r.hi = x.hi;
    r.hi_closed = x.hi_closed;
  } else if (ch > 0) {
    r.hi = y.hi;
    r.hi_closed = y.hi_closed;
  } else {
    r.hi = x.hi;
    r.hi_closed = x.hi_closed && y.hi_closed;
  }
  const auto c = r.lo <=> r.hi;
  if (c > 0 || (c == 0 && !(r.lo_closed && r.hi_closed))) return std::nullopt;
  return r;
}

struct DigitParams {
  QuadRat gamma;
  Alphabet alphabet;
  CoreAlphabet core;
  QuadRat shift;     // L
  Window domain;     // I_{gamma,A} = [l, r]
  Window attractor;  // gamma * [L, L+1)

  // Bucket of digit k; the outer buckets reach the ends of the domain.
  Window bucket(long k) const {
    const QuadRat left = k == alphabet.lo ? domain.lo : shift + Rational(k);
    if (k == alphabet.hi) return Window{left, domain.hi, true, true};
    return Window{left, shift + Rational(k + 1), true, false};
  }
};

inline DigitParams digit_params(const QuadRat& gamma, const Alphabet& alphabet) {
  const QuadUnit u = gamma.unit();
  DigitParams params{gamma, alphabet, alphabet, QuadRat(u), rep_interval(gamma, alphabet), Window{}};

  const bool positive = sign_of(gamma) > 0;
  const long f = static_cast<long>(floor_of(positive ? gamma : -gamma));
  long B = std::min(alphabet.hi, f);
  long b = B - f;
  if (b < alphabet.lo) {
    b = alphabet.lo;
    B = alphabet.lo + f;
  }
  params.core = CoreAlphabet{b, B};

  const QuadRat one(u, 1);
  params.shift = positive ? QuadRat(u, b) / (gamma - one) : (QuadRat(u, b) - gamma) / (gamma - one);
  params.attractor = Window{params.shift, params.shift + one, true, false}.scaled(gamma);

  // The buckets need l < L+a+1 <= L+A < r.
  const QuadRat first_cut = params.shift + Rational(alphabet.lo + 1);
  const QuadRat last_cut = params.shift + Rational(alphabet.hi);
  if (!(params.domain.lo < first_cut && first_cut <= last_cut && last_cut < params.domain.hi)) {
    throw ParameterError("digit buckets degenerate for base " + to_string(gamma) + " and alphabet " +
                         alphabet.to_string());
  }
  return params;
}

inline long digit_of(const QuadRat& w, const DigitParams& params) {
  if (!params.domain.contains(w)) throw OutOfDomain("w lies outside I_{gamma,A}");
  const Alphabet& A = params.alphabet;
  if (w < params.shift + Rational(A.lo + 1)) return A.lo;
  if (w >= params.shift + Rational(A.hi)) return A.hi;
  return static_cast<long>(floor_of(w - params.shift));
}

struct Step {
  long digit;
  QuadRat next;
};

inline Step step(const QuadRat& w, const DigitParams& params) {
  const long d = digit_of(w, params);
  return {d, params.gamma * (w - Rational(d))};
}

// Exact interval checks of the attractor properties of T for one
// configuration: T maps the domain into itself, inner buckets onto the
// attractor, the attractor is covered by core buckets and is T-invariant.
struct AttractorCheck {
  bool maps_into_domain = false;
  bool inner_buckets_to_attractor = false;
  bool attractor_in_core_buckets = false;
  bool attractor_invariant = false;

  bool ok() const {
    return maps_into_domain && inner_buckets_to_attractor && attractor_in_core_buckets &&
           attractor_invariant;
  }
};

inline AttractorCheck check_attractor(const DigitParams& params) {
  AttractorCheck out;
  const Alphabet& A = params.alphabet;
  auto image = [&](const Window& piece, long k) {
    Window shifted{piece.lo - Rational(k), piece.hi - Rational(k), piece.lo_closed, piece.hi_closed};
    return shifted.scaled(params.gamma);
  };

  out.maps_into_domain = true;
  out.inner_buckets_to_attractor = true;
  for (long k = A.lo; k <= A.hi; ++k) {
    const Window img = image(params.bucket(k), k);
    if (!img.subset_of(params.domain)) out.maps_into_domain = false;
    if (k > A.lo && k < A.hi && !img.subset_of(params.attractor)) out.inner_buckets_to_attractor = false;
  }

  const Window core_lo = params.bucket(params.core.lo);
  const Window core_hi = params.bucket(params.core.hi);
  out.attractor_in_core_buckets =
      params.attractor.subset_of(Window{core_lo.lo, core_hi.hi, core_lo.lo_closed, core_hi.hi_closed});

  out.attractor_invariant = true;
  for (long k = A.lo; k <= A.hi; ++k) {
    const auto piece = intersect(params.attractor, params.bucket(k));
    if (piece && !image(*piece, k).subset_of(params.attractor)) out.attractor_invariant = false;
  }
  return out;
}

// Number of T-steps until w enters the attractor, or nullopt past the cap.
inline std::optional<std::size_t> steps_to_attractor(QuadRat w, const DigitParams& params,
                                                     std::size_t cap = 10000) {
  for (std::size_t n = 0; n <= cap; ++n) {
    if (params.attractor.contains(w)) return n;
    w = step(w, params).next;
  }
  return std::nullopt;
}

struct NoFiniteRep {
  std::vector<long> digits;    // digits emitted before the cycle closed, least significant first
  std::vector<QuadInt> cycle;  // the repeating states of T
};

using RepresentationResult = std::variant<DigitString, NoFiniteRep>;

// Finite representation z = sum d_i alpha^i with digits from the alphabet,
// found by iterating T on z' in base gamma = 1/alpha'.
inline RepresentationResult find_representation(const QuadInt& z, const QuadInt& alpha,
                                                const Alphabet& alphabet,
                                                std::size_t iteration_cap = 1000000) {
  const QuadRat gamma = QuadRat(alpha.conjugate()).inverse();
  const DigitParams params = digit_params(gamma, alphabet);
  const QuadInt gamma_int = gamma.to_int();

  QuadInt w = z.conjugate();
  if (!params.domain.contains(QuadRat(w))) {
    throw OutOfDomain("conjugate of z lies outside I_{gamma,A}");
  }
  std::vector<long> digits;
  std::map<QuadInt, std::size_t, LatticeLess> seen;
  std::vector<QuadInt> states;
  for (std::size_t n = 0; n < iteration_cap; ++n) {
    if (w.is_zero()) return DigitString::from_lsf(std::move(digits));
    const auto [it, fresh] = seen.emplace(w, states.size());
    if (!fresh) {
      NoFiniteRep none;
      none.cycle.assign(states.begin() + static_cast<std::ptrdiff_t>(it->second), states.end());
      none.digits = std::move(digits);
      return none;
    }
    states.push_back(w);
    const long d = digit_of(QuadRat(w), params);
    digits.push_back(d);
    w = gamma_int * (w - Integer(d));
  }
  throw IterationCapExceeded("T-orbit neither closed nor reached 0 within the iteration cap");
}

// True iff every suffix of u (padded with zeros) is lexicographically smaller
// than the infinite word (p-1)(p-2)(p-2)...
inline bool lex_below_bound(const DigitString& u, long p) {
  const auto& d = u.digits();
  for (std::size_t start = 0; start < d.size(); ++start) {
    for (std::size_t i = start; i < d.size(); ++i) {
      const long bound = i == start ? p - 1 : p - 2;
      if (d[i] < bound) break;
      if (d[i] > bound) return false;
    }
  }
  return true;
}

namespace detail {

// Adds delta (least significant first) at position pos if every touched digit
// stays within [0, m]; pads with zeros as needed.
inline bool try_rewrite(std::vector<long>& lsf, std::size_t pos, const std::vector<long>& delta, long m) {
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const long cur = pos + i < lsf.size() ? lsf[pos + i] : 0;
    const long next = cur + delta[i];
    if (next < 0 || next > m) return false;
  }
  if (lsf.size() < pos + delta.size()) lsf.resize(pos + delta.size(), 0);
  for (std::size_t i = 0; i < delta.size(); ++i) lsf[pos + i] += delta[i];
  return true;
}

inline void check_digits(const DigitString& digits, long m) {
  if (!digits.within(Alphabet{0, m})) throw ParameterError("digits must lie in {0,...,m}");
}

}  // namespace detail

// One application of a beta^2 = p*beta - 1 rule, scanning from the least
// significant end: 0p0 -> 101, then 0(p-1)(p-2)^k(p-1)0 -> 10^{k+2}1.
inline std::optional<DigitString> rewrite_minus_once(const DigitString& digits, long p, long m) {
  std::vector<long> lsf = digits.lsf();
  for (std::size_t i = 0; i < lsf.size(); ++i) {
    if (detail::try_rewrite(lsf, i, {1, -p, 1}, m)) return DigitString::from_lsf(std::move(lsf));
    for (std::size_t k = 0; i + k + 3 <= lsf.size(); ++k) {
      std::vector<long> delta{1, -(p - 1)};
      delta.insert(delta.end(), k, -(p - 2));
      delta.push_back(-(p - 1));
      delta.push_back(1);
      if (detail::try_rewrite(lsf, i, delta, m)) return DigitString::from_lsf(std::move(lsf));
    }
  }
  return std::nullopt;
}

// One application of a beta^2 = p*beta + 1 rule: 0p1 -> 100, then
// 0(p+1)00 -> 10(p-1)1.
inline std::optional<DigitString> rewrite_plus_once(const DigitString& digits, long p, long m) {
  std::vector<long> lsf = digits.lsf();
  for (std::size_t i = 0; i < lsf.size(); ++i) {
    if (detail::try_rewrite(lsf, i, {-1, -p, 1}, m)) return DigitString::from_lsf(std::move(lsf));
    if (detail::try_rewrite(lsf, i, {1, p - 1, -(p + 1), 1}, m)) {
      return DigitString::from_lsf(std::move(lsf));
    }
  }
  return std::nullopt;
}

inline DigitString normalize_minus(const DigitString& digits, long p, long m) {
  if (p < 3) throw ParameterError("p>=3 required for minus case");
  if (m < p - 1) throw ParameterError("m >= floor(beta) = p-1 required");
  detail::check_digits(digits, m);
  DigitString cur = digits;
  while (auto next = rewrite_minus_once(cur, p, m)) cur = std::move(*next);
  return cur.stripped();
}

inline DigitString normalize_plus(const DigitString& digits, long p, long m) {
  if (p < 1) throw ParameterError("p>=1 required for plus case");
  if (m < p) throw ParameterError("m >= floor(beta) = p required");
  detail::check_digits(digits, m);
  DigitString cur = digits;
  while (auto next = rewrite_plus_once(cur, p, m)) cur = std::move(*next);
  return cur.stripped();
}

// y = u c m^j with c < m, u over {0..p-1}, every suffix of u below (p-1)(p-2)^omega.
struct MinusNormalForm {
  DigitString u;
  long c = 0;
  std::size_t j = 0;
};

inline std::optional<MinusNormalForm> minus_normal_form(const DigitString& y, long p, long m) {
  const DigitString s = y.stripped();
  const auto& d = s.digits();
  std::size_t j = 0;
  while (j < d.size() && d[d.size() - 1 - j] == m) ++j;
  MinusNormalForm form;
  form.j = j;
  if (j == d.size()) return form;
  form.c = d[d.size() - 1 - j];
  if (form.c < 0 || form.c > m - 1) return std::nullopt;
  form.u = DigitString(std::vector<long>(d.begin(), d.end() - static_cast<std::ptrdiff_t>(j + 1))).stripped();
  if (!form.u.within(Alphabet{0, p - 1})) return std::nullopt;
  if (!lex_below_bound(form.u, p)) return std::nullopt;
  return form;
}

// y = u w v with v a prefix of (m0)^omega, w empty or cd (c,d < m, d >= 1
// implies c <= p-1), u over {0..p}. One leading zero is allowed, so w may
// start in front of the most significant digit.
struct PlusNormalForm {
  DigitString u;
  DigitString w;
  DigitString v;
};

inline std::optional<PlusNormalForm> plus_normal_form(const DigitString& y, long p, long m) {
  std::vector<long> d{0};
  const DigitString s = y.stripped();
  d.insert(d.end(), s.digits().begin(), s.digits().end());
  const std::size_t n = d.size();
  for (std::size_t vlen = 0; vlen <= n; ++vlen) {
    bool v_ok = true;
    for (std::size_t i = 0; i < vlen; ++i) {
      if (d[n - vlen + i] != (i % 2 == 0 ? m : 0)) {
        v_ok = false;
        break;
      }
    }
    if (!v_ok) continue;
    for (std::size_t wlen : {std::size_t{0}, std::size_t{2}}) {
      if (vlen + wlen > n) continue;
      const std::size_t ulen = n - vlen - wlen;
      if (wlen == 2) {
        const long c = d[ulen];
        const long dd = d[ulen + 1];
        if (c < 0 || c > m - 1 || dd < 0 || dd > m - 1) continue;
        if (dd >= 1 && c > p - 1) continue;
      }
      const DigitString u(std::vector<long>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(ulen)));
      if (!u.within(Alphabet{0, p})) continue;
      return PlusNormalForm{
          u.stripped(), DigitString(std::vector<long>(d.begin() + static_cast<std::ptrdiff_t>(ulen),
                                           d.begin() + static_cast<std::ptrdiff_t>(ulen + wlen))),
          DigitString(std::vector<long>(d.end() - static_cast<std::ptrdiff_t>(vlen), d.end()))};
    }
  }
  return std::nullopt;
}

}  // namespace pisot
