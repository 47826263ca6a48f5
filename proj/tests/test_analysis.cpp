#include <catch2/catch_amalgamated.hpp>

#include "pisot/analysis.hpp"

using namespace pisot;

namespace {

const QuadUnit golden = QuadUnit::golden();
const QuadUnit silver = QuadUnit::silver();
const QuadUnit minus3 = QuadUnit::make(3, -1);

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(golden, 0) == QuadRat::beta(golden));
  CHECK(phi(golden, 1) == QuadRat(golden, 1));
  CHECK(phi(minus3, 1) == QuadRat::beta(minus3) - Rational(1));
  CHECK(phi(minus3, 2) == QuadRat(minus3, 1));
  CHECK_THROWS_AS(phi(golden, 2), IndexError);
  CHECK_THROWS_AS(phi(golden, -1), IndexError);
}

TEST_CASE("base and scaled distances") {
  const QuadRat bc = QuadRat::beta_conj(golden);
  const auto d = base_distances(golden, QuadRat(golden, Rational(3, 2)));
  CHECK(d.j == 1);
  CHECK(!d.boundary);
  CHECK(d.distances[0] == QuadRat(golden, 1));
  CHECK(d.distances[1] == QuadRat(golden, 1) - bc);
  CHECK(d.distances[2] == QuadRat(golden, 2) - bc);
  CHECK(base_distances(golden, QuadRat::beta(golden)).boundary);
  CHECK_THROWS_AS(base_distances(golden, QuadRat(golden, 1)), OutOfRange);
  CHECK_THROWS_AS(base_distances(golden, QuadRat(golden, 2)), OutOfRange);

  const auto s = scaled_distances(golden, beta_pow(golden, 2));
  CHECK(s.k == 1);
  CHECK(s.base.boundary);
  CHECK(s.distances[0] == beta_pow(golden, -1));
  CHECK_THROWS_AS(scaled_distances(golden, QuadRat(golden)), OutOfRange);
}

TEST_CASE("distances match enumerated cut-and-project gaps") {
  for (const auto& omega : {Window::make(QuadRat(golden), QuadRat(golden, Rational(3, 2)), true, false),
                            Window::make(QuadRat(golden), QuadRat(golden, Rational(7, 2)), true, false),
                            Window::make(QuadRat(minus3), QuadRat(minus3, Rational(9, 5)), true, false),
                            Window::make(QuadRat(silver), QuadRat(silver, Rational(3, 10)), true, false)}) {
    const QuadUnit u = omega.unit();
    const auto s = scaled_distances(u, omega.length());
    const auto g = gaps(enumerate(u, omega, QuadRat(u), QuadRat(u, 300)));
    std::vector<QuadRat> expected(s.distances.begin(), s.distances.end() - (s.base.boundary ? 1 : 0));
    std::sort(expected.begin(), expected.end());
    std::vector<QuadRat> got;
    for (const auto& v : g.distinct) got.push_back(QuadRat(v));
    CHECK(got == expected);
  }
}

TEST_CASE("gap predictions") {
  const auto g2 = predict_gaps(golden, 2);
  CHECK(g2.l == 1);
  CHECK(g2.j == 1);
  CHECK(g2.boundary);
  CHECK(g2.frequencies[2].is_zero());

  const auto g3 = predict_gaps(golden, 3);
  CHECK(g3.l == 3);
  CHECK(g3.j == 1);
  CHECK(!g3.boundary);
  CHECK(to_double(g3.frequencies[0]) == Catch::Approx(0.191).margin(0.001));
  CHECK(to_double(g3.frequencies[1]) == Catch::Approx(0.5).margin(0.001));
  CHECK(to_double(g3.frequencies[2]) == Catch::Approx(0.309).margin(0.001));

  const auto s3 = predict_gaps(silver, 3);
  CHECK(s3.l == 1);
  CHECK(s3.j == 2);
  CHECK(s3.boundary);

  const auto m4 = predict_gaps(minus3, 4);
  CHECK(m4.l == 1);
  CHECK(m4.j == 1);

  CHECK_THROWS_AS(predict_gaps(golden, 1), AlphabetTooSmall);
  CHECK_THROWS_AS(predict_gaps(minus3, 2), AlphabetTooSmall);
}

TEST_CASE("predicted frequencies are a probability vector") {
  for (const auto& u : {golden, silver, minus3, QuadUnit::make(3, 1), QuadUnit::make(5, -1)}) {
    for (long n = u.floor_beta() + 1; n <= 40; ++n) {
      const auto g = predict_gaps(u, n);
      QuadRat sum(u);
      for (const auto& f : g.frequencies) {
        CHECK(sign_of(f) >= 0);
        sum += f;
      }
      CHECK(sum == QuadRat(u, 1));
      CHECK(g.distances[2] == g.distances[0] + g.distances[1]);
      CHECK(g.occurring().size() == (g.boundary ? 2u : 3u));
    }
  }
}

TEST_CASE("counterexample points") {
  const QuadRat b = QuadRat::beta(minus3);
  CHECK(QuadRat(counterexample_point(minus3, 2, 1)) == QuadRat(minus3, 2) - b);
  const QuadRat g = QuadRat::beta(golden);
  CHECK(QuadRat(counterexample_point(golden, 2, 1)) == QuadRat(golden, 2) - g * g);
  CHECK_THROWS_AS(counterexample_point(golden, 1, 1), ParameterError);
  CHECK_THROWS_AS(counterexample_point(minus3, 1, 1), ParameterError);
  CHECK_THROWS_AS(counterexample_point(minus3, 2, 0), ParameterError);
  for (long k = 1; k <= 5; ++k) {
    const QuadInt y = counterexample_point(minus3, 3, k);
    CHECK(acceptance_window(minus3, 3).contains(QuadRat(y.conjugate())));
    CHECK(!member(y, SpectrumSpec::make(minus3, 1, Alphabet::zero_to(3))).member);
  }
}

TEST_CASE("exceptional sets") {
  const auto ex = exceptional_set(golden, 2, beta_pow(golden, 6));
  REQUIRE(!ex.records.empty());
  CHECK(ex.failures() == 0);
  for (const auto& r : ex.records) {
    REQUIRE(r.form);
    CHECK(r.form->parity != Parity::none);
    CHECK(std::binary_search(ex.S.begin(), ex.S.end(), r.form->s));
    CHECK(reconstruct(golden, 2, *r.form) == r.point);
  }
  const auto m = exceptional_set(minus3, 3, beta_pow(minus3, 6));
  REQUIRE(!m.records.empty());
  for (const auto& r : m.records) {
    REQUIRE(r.form);
    CHECK(r.form->parity == Parity::none);
    CHECK(reconstruct(minus3, 3, *r.form) == r.point);
  }
  CHECK(exceptional_set(golden, 1, beta_pow(golden, 6)).records.empty());
  CHECK_THROWS_AS(exceptional_set(minus3, 1, beta_pow(minus3, 3)), ParameterError);
  CHECK(std::string(to_string(Parity::even)) == "even");
}

TEST_CASE("inclusion margin") {
  for (const auto& [u, m] : std::vector<std::pair<QuadUnit, long>>{{golden, 2}, {minus3, 3}, {minus3, 2}}) {
    const auto r = verify_inclusion_margin(u, m, Rational(1, 10), QuadRat(u), beta_pow(u, 7));
    CHECK(r.ok);
    CHECK(r.right_violations.empty());
    CHECK(r.shrunk.subset_of(acceptance_window(u, m)));
  }
  CHECK_THROWS_AS(verify_inclusion_margin(golden, 2, Rational(0), QuadRat(golden), QuadRat(golden, 1)),
                  ParameterError);
}

TEST_CASE("boundary conventions") {
  const Window w = Window::make(QuadRat(golden), QuadRat::beta(golden), true, false);
  const auto counts = boundary_conventions(w, QuadRat(golden), QuadRat(golden, 100));
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 2);
  for (auto c : counts) CHECK(c >= 2);
}

TEST_CASE("comparison against a gap sequence") {
  const auto spec = SpectrumSpec::make(golden, 1, Alphabet::zero_to(2));
  const auto seq = gap_sequence(spec, 2000);
  const auto report = compare(predict_gaps(golden, 3), seq, spec.alphabet, 1);
  CHECK(report.values_match());
  CHECK(report.frequencies_match());

  const auto wrong = compare(predict_gaps(golden, 4), seq, spec.alphabet, 1);
  CHECK(!wrong.values_match());

  const auto j = to_json(report);
  CHECK(j["values_match"] == true);
  CHECK(j["l"] == 3);
  const auto e = exact_json(QuadRat(golden, Rational(1, 2), Rational(1, 3)));
  CHECK(e["den"] == "6");
}
