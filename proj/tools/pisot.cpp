// Command-line front end: spectra, cut-and-project sets, gaps, exchanges of
// intervals, closed-form predictions, exceptional points and the acceptance
// suite.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pisot/pisot.hpp"
#include "pisot/verify/acceptance.hpp"

namespace {

using namespace pisot;
using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  long p = 1;
  std::string sign = "+";
  std::string alphabet = "0..1";
  std::string base = "+";
  std::string format;
  std::string out;
};

int parse_sign(const std::string& text, const char* what) {
  if (text == "+" || text == "+1" || text == "1") return 1;
  if (text == "-" || text == "-1") return -1;
  throw UsageError(std::string(what) + " must be + or -");
}

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

Rational parse_rational(std::string_view s, const char* what) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_long(s, what));
  const long den = parse_long(s.substr(slash + 1), what);
  if (den == 0) throw UsageError(std::string(what) + ": zero denominator");
  return Rational(parse_long(s.substr(0, slash), what), den);
}

// [-]b^k, integers, rationals.
QuadRat parse_scalar(QuadUnit u, std::string_view s, const char* what) {
  bool negative = false;
  if (!s.empty() && s.front() == '-' && s.size() > 1 && s[1] == 'b') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.rfind("b^", 0) == 0) {
    const QuadRat x = beta_pow(u, parse_long(s.substr(2), what));
    return negative ? -x : x;
  }
  if (s == "b") return negative ? -QuadRat::beta(u) : QuadRat::beta(u);
  return QuadRat(u, parse_rational(s, what));
}

std::pair<QuadRat, QuadRat> parse_range(QuadUnit u, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must be written R1:R2");
  QuadRat lo = parse_scalar(u, std::string_view(text).substr(0, colon), "range");
  QuadRat hi = parse_scalar(u, std::string_view(text).substr(colon + 1), "range");
  if (lo > hi) throw UsageError("range requires R1 <= R2");
  return {lo, hi};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string float20(const QuadRat& x) {
  std::ostringstream os;
  os << std::setprecision(20) << to_float<80>(x);
  return os.str();
}

json point_json(const QuadInt& x) {
  return {{"a", x.a().str()},
          {"b", x.b().str()},
          {"value", float20(QuadRat(x))},
          {"conj", float20(QuadRat(x.conjugate()))}};
}

json window_json(const Window& w) {
  return {{"lo", exact_json(w.lo)},
          {"hi", exact_json(w.hi)},
          {"lo_closed", w.lo_closed},
          {"hi_closed", w.hi_closed},
          {"text", to_string(w)}};
}

void write_points(std::ostream& os, const PointList& list, const std::string& format) {
  if (format == "json") {
    json out{{"window", window_json(list.window)}, {"count", list.size()}, {"points", json::array()}};
    for (const auto& x : list.points) out["points"].push_back(point_json(x));
    os << out.dump(2) << '\n';
  } else if (format == "text") {
    os << "window " << to_string(list.window) << ", " << list.size() << " points\n";
    for (const auto& x : list.points) os << to_string(x) << "  " << float20(QuadRat(x)) << '\n';
  } else {
    os << to_csv(list);
  }
}

struct Context {
  Globals g;
  QuadUnit unit() const { return QuadUnit::make(g.p, parse_sign(g.sign, "--sign")); }
  SpectrumSpec spec() const {
    return SpectrumSpec::make(unit(), parse_sign(g.base, "--base"), Alphabet::parse(g.alphabet));
  }
  std::string format(const char* fallback) const { return g.format.empty() ? fallback : g.format; }
};

int cmd_spectrum(const Context& ctx, const std::string& range, long degree) {
  const auto spec = ctx.spec();
  const auto [lo, hi] = parse_range(spec.unit, range);
  const PointList list = degree >= 0 ? enumerate_spectrum(spec, degree, lo, hi) : enumerate_range(spec, lo, hi);
  Output out(ctx.g.out);
  write_points(out.stream(), list, ctx.format("csv"));
  return 0;
}

int cmd_capset(const Context& ctx, const std::string& range, long m) {
  const QuadUnit u = ctx.unit();
  const Window omega = m > 0 ? acceptance_window(u, m) : ctx.spec().window();
  const auto [lo, hi] = parse_range(u, range);
  Output out(ctx.g.out);
  write_points(out.stream(), enumerate(u, omega, lo, hi), ctx.format("csv"));
  return 0;
}

int cmd_gaps(const Context& ctx, std::size_t count, std::size_t skip) {
  const auto spec = ctx.spec();
  const GapSequence seq = gap_sequence(spec, count, skip);
  const GapReport report = compare(predict_gaps(spec.unit, spec.alphabet.size()), seq, spec.alphabet, spec.alpha_sign);
  Output out(ctx.g.out);
  auto& os = out.stream();
  const std::string format = ctx.format("json");
  if (format == "csv") {
    os << "position,a,b,float_value,letter\n";
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      os << i << ',' << seq.values[i].a() << ',' << seq.values[i].b() << ',' << float20(QuadRat(seq.values[i]))
         << ',' << seq.word.letters[i] << '\n';
    }
  } else if (format == "text") {
    os << "values:";
    for (const auto& v : seq.distinct) os << " [" << to_string(v) << "]";
    os << "\nexceptions: " << seq.exceptions.size() << "\nword: " << seq.word.letters << '\n';
  } else {
    json j = to_json(report);
    j["word"] = seq.word.letters;
    j["skip"] = seq.skip;
    os << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_iet(const Context& ctx, const std::string& lambda, const std::string& mu, const std::string& rho,
            std::size_t n) {
  const QuadUnit u = ctx.unit();
  const IetParams t = IetParams::make(parse_scalar(u, lambda, "--lambda"), parse_scalar(u, mu, "--mu"));
  const GapWord word = code_orbit(t, parse_scalar(u, rho, "--rho"), n);
  const auto exact = exact_frequencies(t);
  Output out(ctx.g.out);
  auto& os = out.stream();
  if (ctx.format("text") == "json") {
    json j{{"word", word.letters}, {"exact", json::array()}};
    for (const auto& f : exact) j["exact"].push_back(exact_json(f));
    if (n > 0) j["empirical"] = letter_frequencies(word).empirical;
    os << j.dump(2) << '\n';
  } else {
    os << "word " << word.letters << '\n';
    os << "exact A=" << to_string(exact[0]) << " B=" << to_string(exact[1]) << " C=" << to_string(exact[2]) << '\n';
    if (n > 0) {
      const auto f = letter_frequencies(word);
      os << "empirical A=" << f.empirical[0] << " B=" << f.empirical[1] << " C=" << f.empirical[2] << '\n';
    }
  }
  return 0;
}

int cmd_predict(const Context& ctx) {
  const QuadUnit u = ctx.unit();
  const GapPrediction g = predict_gaps(u, Alphabet::parse(ctx.g.alphabet).size());
  Output out(ctx.g.out);
  auto& os = out.stream();
  if (ctx.format("text") == "json") {
    os << to_json(g).dump(2) << '\n';
    return 0;
  }
  const auto letters = g.letters();
  os << "unit " << u.name() << "  #A=" << g.alphabet_size << "  l=" << g.l << "  j=" << g.j
     << "  boundary=" << (g.boundary ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < 3; ++i) {
    os << letters[i] << "  distance " << to_string(g.distances[i]) << " ~ " << float20(g.distances[i])
       << "  frequency " << to_string(g.frequencies[i]) << " ~ " << float20(g.frequencies[i]) << '\n';
  }
  return 0;
}

int cmd_exceptions(const Context& ctx, long m, const std::string& cap) {
  const QuadUnit u = ctx.unit();
  const ExceptionSet ex = exceptional_set(u, m, parse_scalar(u, cap, "--cap"));
  Output out(ctx.g.out);
  auto& os = out.stream();
  if (ctx.format("json") == "json") {
    json j{{"window", window_json(ex.omega)}, {"S", json::array()}, {"exceptions", json::array()}};
    for (const auto& s : ex.S) j["S"].push_back(point_json(s));
    for (const auto& r : ex.records) {
      json rec = point_json(r.point);
      rec["s"] = point_json(r.form->s);
      rec["j"] = r.form->j;
      rec["parity"] = to_string(r.form->parity);
      j["exceptions"].push_back(rec);
    }
    os << j.dump(2) << '\n';
  } else {
    os << "window " << to_string(ex.omega) << "\nS:";
    for (const auto& s : ex.S) os << " [" << to_string(s) << "]";
    os << '\n';
    for (const auto& r : ex.records) {
      os << to_string(r.point) << " ~ " << float20(QuadRat(r.point)) << "  s=" << to_string(r.form->s)
         << " j=" << r.form->j << " parity=" << to_string(r.form->parity) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& json_path) {
  std::vector<verify::Result> results;
  for (const auto& c : verify::criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    results.push_back(verify::run(c));
    std::cout << verify::format_line(results.back()) << std::endl;
  }
  if (results.empty()) throw UsageError("--only matched no criterion");
  if (!json_path.empty()) {
    Output out(json_path);
    out.stream() << verify::to_json(results).dump(2) << '\n';
  }
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  std::cout << (all ? "all criteria pass" : "some criteria FAIL") << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of quadratic Pisot units in exact arithmetic"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--p", ctx.g.p, "trace p of beta");
  app.add_option("--sign", ctx.g.sign, "+ for beta^2 = p*beta + 1, - for beta^2 = p*beta - 1");
  app.add_option("--alphabet", ctx.g.alphabet, "digit alphabet a..A");
  app.add_option("--base", ctx.g.base, "base sign: + for beta, - for -beta");
  app.add_option("--format", ctx.g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", ctx.g.out, "output file (default stdout)");

  std::string range = "-b^4:b^4";
  long degree = -1;
  long m = 0;
  std::size_t count = 1000;
  std::size_t skip = 0;
  std::string lambda, mu, rho = "0", cap = "b^6";
  std::size_t n = 20;
  std::vector<std::string> only;
  std::string json_path;

  auto* spectrum = app.add_subcommand("spectrum", "points of X^A(alpha) in a range")->fallthrough();
  spectrum->add_option("--range", range, "R1:R2 (b^k, integers, rationals)")->capture_default_str();
  spectrum->add_option("--degree", degree, "maximal digit position (default: as needed)");

  auto* capset = app.add_subcommand("capset", "cut-and-project set Sigma(Omega) in a range")->fallthrough();
  capset->add_option("--range", range, "R1:R2")->capture_default_str();
  capset->add_option("--m", m, "use the window of X^m(beta) instead of the alphabet window");

  auto* gaps_cmd = app.add_subcommand("gaps", "consecutive gaps compared with the closed form")->fallthrough();
  gaps_cmd->add_option("--count", count, "number of gaps");
  gaps_cmd->add_option("--skip", skip, "points skipped before the first gap");

  auto* iet = app.add_subcommand("iet", "orbit coding of an exchange of three intervals")->fallthrough();
  iet->add_option("--lambda", lambda)->required();
  iet->add_option("--mu", mu)->required();
  iet->add_option("--rho", rho, "starting point in [0,1)");
  iet->add_option("--n", n, "word length");

  auto* predict = app.add_subcommand("predict", "closed-form gap values and frequencies")->fallthrough();

  auto* exceptions = app.add_subcommand("exceptions", "points of Sigma(Omega) missing from X^m(beta)")->fallthrough();
  exceptions->add_option("--m", m, "largest digit")->required();
  exceptions->add_option("--cap", cap, "upper end of the scan (b^k, integer, rational)");

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--only", only, "criterion ids")->delimiter(',');
  verify_cmd->add_option("--json", json_path, "write a JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(ctx, range, degree);
    if (*capset) return cmd_capset(ctx, range, m);
    if (*gaps_cmd) return cmd_gaps(ctx, count, skip);
    if (*iet) return cmd_iet(ctx, lambda, mu, rho, n);
    if (*predict) return cmd_predict(ctx);
    if (*exceptions) return cmd_exceptions(ctx, m, cap);
    if (*verify_cmd) return cmd_verify(only, json_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
