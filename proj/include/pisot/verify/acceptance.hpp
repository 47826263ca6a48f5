#pragma once

// The acceptance suite: one named check per criterion, each returning a
// pass/fail verdict with a short detail line.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pisot/analysis.hpp"
#include "pisot/capset.hpp"
#include "pisot/iet.hpp"
#include "pisot/numeration.hpp"
#include "pisot/spectrum.hpp"
#include "pisot/verify/oracles.hpp"

namespace pisot::verify {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Verdict()> run;
};

struct Result {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline std::string describe(const SpectrumSpec& s) {
  std::ostringstream os;
  os << "p=" << s.unit.p() << (s.unit.sign() > 0 ? "+" : "-") << " A=" << s.alphabet.to_string()
     << " base=" << (s.alpha_sign > 0 ? "+" : "-");
  return os.str();
}

inline std::vector<SpectrumSpec> modified_configs() {
  const auto g = QuadUnit::golden();
  const auto m3 = QuadUnit::make(3, -1);
  return {SpectrumSpec::make(g, 1, Alphabet::make(-1, 1)), SpectrumSpec::make(g, -1, Alphabet::make(-1, 1)),
          SpectrumSpec::make(g, -1, Alphabet::make(0, 2)), SpectrumSpec::make(m3, 1, Alphabet::make(-1, 2))};
}

inline std::vector<SpectrumSpec> gap_configs() {
  const auto g = QuadUnit::golden();
  return {SpectrumSpec::make(g, 1, Alphabet::zero_to(1)), SpectrumSpec::make(g, 1, Alphabet::zero_to(2)),
          SpectrumSpec::make(QuadUnit::silver(), 1, Alphabet::zero_to(2)),
          SpectrumSpec::make(QuadUnit::make(3, -1), 1, Alphabet::zero_to(3)),
          SpectrumSpec::make(g, 1, Alphabet::make(-1, 2))};
}

// At least count points of Sigma(omega) from r1 upward.
inline PointList enumerate_from(const Window& omega, const QuadRat& r1, std::size_t count) {
  const QuadUnit u = omega.unit();
  QuadRat width = beta_pow(u, 4);
  for (;;) {
    PointList pts = enumerate(u, omega, r1, r1 + width);
    if (pts.size() >= count) {
      pts.points.resize(count);
      pts.range_hi = QuadRat(pts.points.back());
      return pts;
    }
    width = width * QuadRat::beta(u);
  }
}

// First real point from which the half-open exchange coding applies to an
// open window: past the lattice point whose conjugate is the lower endpoint.
inline QuadRat coding_start(const Window& omega) {
  const QuadUnit u = omega.unit();
  if (omega.lo_closed || !omega.lo.is_integral()) return QuadRat(u);
  const QuadRat xc = omega.lo.conjugate();
  if (sign_of(xc) < 0) return QuadRat(u);
  return QuadRat(u, floor_of(xc) + 1);
}

struct Fail {
  std::ostringstream os;
  bool any = false;
  template <class T>
  Fail& operator<<(const T& v) {
    any = true;
    os << v;
    return *this;
  }
};

inline Verdict verdict(const Fail& f, const std::string& ok_detail) {
  if (f.any) return {false, f.os.str()};
  return {true, ok_detail};
}

}  // namespace detail

inline Verdict check_spectrum_capset() {
  detail::Fail fail;
  std::size_t total = 0;
  for (const auto& spec : detail::modified_configs()) {
    const QuadRat r = beta_pow(spec.unit, 7);
    const auto x = enumerate_spectrum(spec, 20, -r, r);
    const auto s = enumerate(spec.unit, spec.window(), -r, r);
    total += x.size();
    if (x.points != s.points) {
      fail << detail::describe(spec) << ": spectrum " << x.size() << " points vs cut-and-project " << s.size()
           << "; ";
    }
  }
  return detail::verdict(fail, std::to_string(total) + " points equal across 4 configurations");
}

inline Verdict check_counterexamples() {
  detail::Fail fail;
  const auto m3 = QuadUnit::make(3, -1);
  const std::vector<std::pair<QuadUnit, long>> cases{{m3, 2}, {m3, 3}, {QuadUnit::golden(), 2}};
  for (const auto& [u, m] : cases) {
    const Window omega = acceptance_window(u, m);
    const auto spec = SpectrumSpec::make(u, 1, Alphabet::zero_to(m));
    for (long k = 1; k <= 8; ++k) {
      const QuadInt y = counterexample_point(u, m, k);
      if (!omega.contains(QuadRat(y.conjugate()))) fail << u.name() << " m=" << m << " k=" << k << " not in Sigma; ";
      if (member(y, spec).member) fail << u.name() << " m=" << m << " k=" << k << " in spectrum; ";
    }
  }
  return detail::verdict(fail, "24 points in Sigma(Omega) and outside X^m(beta)");
}

inline Verdict check_no_exceptions() {
  detail::Fail fail;
  const std::vector<std::pair<QuadUnit, long>> cases{{QuadUnit::golden(), 1}, {QuadUnit::silver(), 2}};
  for (const auto& [u, m] : cases) {
    const auto ex = exceptional_set(u, m, beta_pow(u, 8), false);
    if (!ex.records.empty()) fail << u.name() << " m=" << m << ": " << ex.records.size() << " exceptional points; ";
  }
  return detail::verdict(fail, "no exceptional points up to beta^8");
}

struct GapRun {
  SpectrumSpec spec;
  GapPrediction prediction;
  GapSequence sequence;
  GapReport report;
};

inline std::vector<GapRun> gap_runs(std::size_t count) {
  std::vector<GapRun> out;
  for (const auto& spec : detail::gap_configs()) {
    GapRun run{spec, predict_gaps(spec.unit, spec.alphabet.size()), gap_sequence(spec, count), {}};
    run.report = compare(run.prediction, run.sequence, spec.alphabet, spec.alpha_sign);
    out.push_back(std::move(run));
  }
  return out;
}

inline Verdict check_gap_values() {
  detail::Fail fail;
  constexpr std::size_t count = 10000;
  std::size_t exceptions = 0;
  for (const auto& run : gap_runs(count)) {
    const auto& r = run.report;
    const std::string name = detail::describe(run.spec);
    if (!r.values_match()) fail << name << ": empirical values differ from prediction; ";
    if (run.prediction.boundary &&
        (r.empirical.size() != 2 || !run.prediction.frequencies[2].is_zero())) {
      fail << name << ": boundary case without exactly two values; ";
    }
    if (!run.prediction.boundary && r.empirical.size() != 3) fail << name << ": expected three values; ";
    for (const auto& e : r.exceptions) {
      if (e.second >= count / 2) fail << name << ": exception at position " << e.second << "; ";
    }
    if (!run.spec.classical() && !r.exceptions.empty()) fail << name << ": exceptions in an exact spectrum; ";
    exceptions += r.exceptions.size();
  }
  return detail::verdict(fail, "5 configurations, 10^4 gaps each, " + std::to_string(exceptions) +
                                   " leading exceptions skipped");
}

inline Verdict check_gap_frequencies() {
  detail::Fail fail;
  double worst = 0;
  for (const auto& run : gap_runs(10000)) {
    worst = std::max(worst, run.report.max_freq_error);
    if (!run.report.frequencies_match()) {
      fail << detail::describe(run.spec) << ": frequency error " << run.report.max_freq_error << "; ";
    }
  }
  return detail::verdict(fail, "max frequency error " + std::to_string(worst));
}

inline Verdict check_iet() {
  detail::Fail fail;
  for (const auto& spec : detail::modified_configs()) {
    const Window omega = spec.window();
    const auto pts = detail::enumerate_from(omega, detail::coding_start(omega), 10001);
    const auto c = coding_agreement(pts);
    if (!c.ok) fail << detail::describe(spec) << ": mismatch at letter " << c.first_mismatch.value_or(0) << "; ";
  }
  return detail::verdict(fail, "4 configurations agree on 10^4 letters");
}

inline Verdict check_exception_forms() {
  detail::Fail fail;
  std::size_t total = 0;
  const std::vector<std::pair<QuadUnit, long>> cases{{QuadUnit::make(3, -1), 3}, {QuadUnit::golden(), 2}};
  for (const auto& [u, m] : cases) {
    const auto ex = exceptional_set(u, m, beta_pow(u, 8), false);
    if (ex.records.empty()) fail << u.name() << " m=" << m << ": no exceptional points found; ";
    for (const auto& r : ex.records) {
      ++total;
      if (!r.form) {
        fail << u.name() << " m=" << m << ": " << to_string(r.point) << " fits no form; ";
        continue;
      }
      const bool in_S = std::binary_search(ex.S.begin(), ex.S.end(), r.form->s);
      if (!in_S || !(reconstruct(u, m, *r.form) == r.point)) {
        fail << u.name() << " m=" << m << ": bad decomposition of " << to_string(r.point) << "; ";
      }
    }
  }
  return detail::verdict(fail, std::to_string(total) + " exceptional points decomposed");
}

inline Verdict check_scaling() {
  detail::Fail fail;
  const auto g = QuadUnit::golden();
  const auto m3 = QuadUnit::make(3, -1);
  const std::vector<Window> windows{acceptance_window(g, 2), acceptance_window(m3, 3),
                                    SpectrumSpec::make(g, 1, Alphabet::make(-1, 1)).window()};
  std::size_t total = 0;
  for (const auto& w : windows) {
    const QuadUnit u = w.unit();
    const auto base = enumerate(u, w, QuadRat(u), beta_pow(u, 5));
    const auto image = enumerate(u, scale_window(u, w), QuadRat(u), beta_pow(u, 6));
    const auto scaled = scale_points(base);
    total += image.size();
    if (scaled.points != image.points) fail << "window " << to_string(w) << ": scaled set differs; ";
  }
  return detail::verdict(fail, std::to_string(total) + " points matched on 3 windows");
}

inline Verdict check_oracle() {
  detail::Fail fail;
  auto configs = detail::modified_configs();
  for (const auto& s : detail::gap_configs()) configs.push_back(s);
  std::size_t total = 0;
  for (const auto& spec : configs) {
    const auto values = oracle::all_values(spec.unit.p(), spec.unit.sign(), spec.alpha_sign, spec.alphabet.lo,
                                           spec.alphabet.hi, 10);
    const auto pts = enumerate(spec.unit, spec.window(), QuadRat(spec.unit), beta_pow(spec.unit, 5));
    std::size_t bad = 0;
    for (const auto& z : pts.points) {
      ++total;
      const auto m = member(z, spec);
      if (m.member != oracle::contains(values, z)) ++bad;
      if (m.member && !(m.witness->evaluate(spec.alpha()) == z && m.witness->within(spec.alphabet))) ++bad;
    }
    if (bad) fail << detail::describe(spec) << ": " << bad << " disagreements; ";
  }
  return detail::verdict(fail, std::to_string(total) + " points agree on 9 configurations");
}

inline Verdict check_rewrite() {
  detail::Fail fail;
  if (!(rewrite_minus_once(DigitString{0, 3, 0}, 3, 3) == DigitString{1, 0, 1})) fail << "0p0 -> 101 failed; ";
  if (!(normalize_minus(DigitString{0, 2, 1, 2, 0}, 3, 3) == DigitString{1, 0, 0, 0, 1})) {
    fail << "0(p-1)(p-2)(p-1)0 -> 10001 failed; ";
  }
  if (!(rewrite_plus_once(DigitString{0, 1, 1}, 1, 2) == DigitString{1, 0, 0})) fail << "0p1 -> 100 failed; ";
  if (!(normalize_plus(DigitString{0, 2, 0, 0}, 1, 2) == DigitString{1, 0, 0, 1})) fail << "0(p+1)00 -> 10(p-1)1 failed; ";

  std::mt19937_64 rng(20240611);
  struct Case {
    long p;
    int sign;
    long m;
  };
  const std::vector<Case> cases{{3, -1, 2}, {3, -1, 3}, {4, -1, 5}, {1, 1, 1}, {1, 1, 2}, {2, 1, 3}};
  std::size_t total = 0;
  for (const auto& c : cases) {
    const QuadUnit u = QuadUnit::make(c.p, c.sign);
    std::uniform_int_distribution<long> digit(0, c.m);
    std::uniform_int_distribution<int> length(1, 12);
    std::size_t bad = 0;
    for (int n = 0; n < 10000; ++n) {
      std::vector<long> d(static_cast<std::size_t>(length(rng)));
      for (auto& x : d) x = digit(rng);
      const DigitString in(d);
      ++total;
      if (c.sign < 0) {
        const auto out = normalize_minus(in, c.p, c.m);
        if (!(out.evaluate(QuadInt::beta(u)) == in.evaluate(QuadInt::beta(u)))) ++bad;
        else if (!minus_normal_form(out, c.p, c.m)) ++bad;
      } else {
        const auto out = normalize_plus(in, c.p, c.m);
        if (!(out.evaluate(QuadInt::beta(u)) == in.evaluate(QuadInt::beta(u)))) ++bad;
        else if (!plus_normal_form(out, c.p, c.m)) ++bad;
      }
    }
    if (bad) fail << "p=" << c.p << " sign=" << c.sign << " m=" << c.m << ": " << bad << " failures; ";
  }
  return detail::verdict(fail, std::to_string(total) + " random strings normalized");
}

inline std::vector<Criterion> criteria() {
  return {
      {"spectrum_capset", "modified spectrum equals cut-and-project set", check_spectrum_capset},
      {"counterexamples", "counterexample families lie in Sigma(Omega) but not in the spectrum", check_counterexamples},
      {"no_exceptions", "exclusion clause: no exceptional points", check_no_exceptions},
      {"gap_values", "closed-form gap values", check_gap_values},
      {"gap_frequencies", "closed-form gap frequencies", check_gap_frequencies},
      {"iet", "three-interval exchange coding of gap words", check_iet},
      {"exception_forms", "exceptional points decompose into s*beta-power forms", check_exception_forms},
      {"scaling", "beta * Sigma(Omega) = Sigma(beta' * Omega)", check_scaling},
      {"oracle", "membership agrees with brute-force digit expansion", check_oracle},
      {"rewrite", "rewriting normal forms", check_rewrite},
  };
}

inline Result run(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r{c.id, c.title, false, {}, 0};
  try {
    const Verdict v = c.run();
    r.pass = v.pass;
    r.detail = v.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << " - " << r.title << " (" << r.detail << ")";
  return os.str();
}

inline nlohmann::json to_json(const std::vector<Result>& results) {
  nlohmann::json out;
  out["results"] = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    out["results"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    all = all && r.pass;
  }
  out["all_pass"] = all;
  return out;
}

}  // namespace pisot::verify
