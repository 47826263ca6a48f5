#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "pisot/iet.hpp"

using namespace pisot;

namespace {

const QuadUnit golden = QuadUnit::golden();

QuadRat q(long n, long d) { return QuadRat(golden, Rational(n, d)); }

}  // namespace

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(IetParams::make(q(0, 1), q(1, 2)), ParameterError);
  CHECK_THROWS_AS(IetParams::make(q(2, 3), q(1, 2)), ParameterError);
  CHECK_THROWS_AS(IetParams::make(q(1, 3), q(1, 1)), ParameterError);
  CHECK(IetParams::make(q(1, 2), q(1, 2)).two_interval());
}

TEST_CASE("rotation example") {
  const auto t = IetParams::make(q(1, 2), q(1, 2));
  CHECK(code_orbit(t, q(0, 1), 4).letters == "ACAC");
  CHECK(apply(t, q(1, 4)) == q(3, 4));
  CHECK(apply(t, q(3, 4)) == q(1, 4));
  CHECK_THROWS_AS(apply(t, q(1, 1)), OutOfDomain);
  CHECK_THROWS_AS(apply(t, q(-1, 3)), OutOfDomain);
  CHECK_THROWS_AS(code_orbit(t, q(3, 2), 2), OutOfDomain);
}

TEST_CASE("the exchange permutes a rational grid") {
  const long N = 70;
  const auto t = IetParams::make(q(2, 7), q(5, 7));
  std::set<QuadRat> images;
  for (long k = 0; k < N; ++k) {
    const QuadRat x = apply(t, q(k, N));
    CHECK(sign_of(x) >= 0);
    CHECK(x < q(1, 1));
    CHECK((x * Rational(N)).is_integral());
    images.insert(x);
  }
  CHECK(images.size() == static_cast<std::size_t>(N));
}

TEST_CASE("exact frequencies for rational parameters") {
  const auto t = IetParams::make(q(1, 3), q(2, 3));
  const auto exact = exact_frequencies(t);
  CHECK(exact[0] == q(1, 3));
  CHECK(exact[1] == q(1, 3));
  CHECK(exact[2] == q(1, 3));
  // Rational orbits are periodic: 1/6 <-> 5/6 alternates A and C, 1/2 is fixed.
  const auto f = letter_frequencies(code_orbit(t, q(1, 6), 3000));
  CHECK(f.counts == std::array<std::size_t, 3>{1500, 0, 1500});
  const auto g = letter_frequencies(code_orbit(t, q(1, 2), 10));
  CHECK(g.counts == std::array<std::size_t, 3>{0, 10, 0});
}

TEST_CASE("empirical frequencies approach interval lengths for irrational parameters") {
  const QuadRat b = QuadRat::beta(golden);
  const auto t = IetParams::make(b - Rational(1) - Rational(1, 5), b - Rational(1));
  const auto f = letter_frequencies(code_orbit(t, q(0, 1), 20000));
  const auto exact = exact_frequencies(t);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::fabs(f.empirical[i] - to_double(exact[i])) < 0.01);
  CHECK_THROWS_AS(letter_frequencies(GapWord{}), ParameterError);
}

TEST_CASE("parameters from gap data") {
  const QuadRat len = q(3, 2);
  const auto t = params_from_gaps(q(1, 2), q(-1, 1), len);
  CHECK(t.lambda == q(2, 3));
  CHECK(t.mu == q(2, 3));
  CHECK_THROWS_AS(params_from_gaps(q(-1, 2), q(-1, 1), len), BadGapData);
  CHECK_THROWS_AS(params_from_gaps(q(2, 1), q(-1, 1), len), BadGapData);
  CHECK_THROWS_AS(params_from_gaps(q(1, 4), q(-1, 4), len), BadGapData);
}

TEST_CASE("gap words of cut-and-project sets are exchange codings") {
  for (const auto& omega : {Window::make(QuadRat(golden), QuadRat::beta(golden), true, false),
                            Window::make(QuadRat(golden), q(3, 2), true, false),
                            Window::make(q(-1, 3), q(6, 5), true, false)}) {
    const auto list = enumerate(golden, omega, QuadRat(golden), QuadRat(golden, 400));
    const auto c = coding_agreement(list);
    CHECK(c.ok);
    CHECK(!c.first_mismatch);
    CHECK(c.capset_word.letters == c.iet_word.letters);
    CHECK(c.rho == gap_word_start(omega, list.points.front()));
  }
}
