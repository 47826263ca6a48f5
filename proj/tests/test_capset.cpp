#include <catch2/catch_amalgamated.hpp>

#include "pisot/capset.hpp"

using namespace pisot;

namespace {

const QuadUnit golden = QuadUnit::golden();
const QuadUnit minus3 = QuadUnit::make(3, -1);

// Direct scan of a + b*beta over a coefficient box.
std::vector<QuadInt> scan(QuadUnit u, const Window& omega, const QuadRat& r1, const QuadRat& r2, long box) {
  std::vector<QuadInt> out;
  for (long a = -box; a <= box; ++a) {
    for (long b = -box; b <= box; ++b) {
      const QuadInt x(u, a, b);
      const QuadRat xr(x);
      if (xr >= r1 && xr <= r2 && omega.contains(QuadRat(x.conjugate()))) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("acceptance windows") {
  const QuadRat b = QuadRat::beta(golden);
  const Window w1 = acceptance_window(golden, 1);
  CHECK(w1 == Window::open(QuadRat(golden, -1), b));

  const QuadRat b3 = QuadRat::beta(minus3);
  const Window w2 = acceptance_window(minus3, 2);
  CHECK(w2 == Window::make(QuadRat(minus3), b3 * Rational(2) / (b3 - Rational(1)), true, false));
  CHECK_THROWS_AS(acceptance_window(golden, 0), ParameterError);

  const Window m = acceptance_window_modified(golden, Alphabet::make(-1, 1), 1);
  CHECK(m == Window::open(-(b + Rational(1)), b + Rational(1)));
  const Window z = acceptance_window_modified(golden, Alphabet::zero_to(2), -1);
  CHECK(z == Window::make(QuadRat(golden), (b + Rational(1)) * Rational(2), true, false));
  CHECK_THROWS_AS(acceptance_window_modified(minus3, Alphabet::zero_to(1), 1), AlphabetTooSmall);
}

TEST_CASE("enumeration agrees with a direct coefficient scan") {
  for (const auto& [u, omega] : std::vector<std::pair<QuadUnit, Window>>{
           {golden, acceptance_window(golden, 1)},
           {golden, acceptance_window(golden, 2)},
           {minus3, acceptance_window(minus3, 3)},
           {QuadUnit::silver(), acceptance_window(QuadUnit::silver(), 2)},
           {golden, Window::closed(QuadRat(golden, Rational(-1, 2)), QuadRat(golden, 1))}}) {
    const QuadRat r1(u, -7), r2(u, 23);
    const auto list = enumerate(u, omega, r1, r2);
    CHECK(list.points == scan(u, omega, r1, r2, 60));
    CHECK(std::is_sorted(list.points.begin(), list.points.end()));
    CHECK(std::adjacent_find(list.points.begin(), list.points.end()) == list.points.end());
  }
  CHECK_THROWS_AS(enumerate(golden, acceptance_window(golden, 1), QuadRat(golden, 2), QuadRat(golden, 1)),
                  ParameterError);
}

TEST_CASE("golden m=1 cut-and-project set starts 0, 1, beta, beta+1, beta+2") {
  const auto list = enumerate(golden, acceptance_window(golden, 1), QuadRat(golden), QuadRat(golden, 4));
  REQUIRE(list.size() == 5);
  CHECK(list.points[0] == QuadInt(golden, 0, 0));
  CHECK(list.points[1] == QuadInt(golden, 1, 0));
  CHECK(list.points[2] == QuadInt(golden, 0, 1));
  CHECK(list.points[3] == QuadInt(golden, 1, 1));
  CHECK(list.points[4] == QuadInt(golden, 2, 1));
}

TEST_CASE("scaling by beta maps Sigma(Omega) onto Sigma(beta' Omega)") {
  for (const auto& omega : {acceptance_window(golden, 1), acceptance_window(minus3, 2),
                            Window::make(QuadRat(golden), QuadRat(golden, Rational(3, 2)), true, false)}) {
    const QuadUnit u = omega.unit();
    const auto base = enumerate(u, omega, QuadRat(u), beta_pow(u, 5));
    const auto scaled = scale_points(base);
    const auto image = enumerate(u, scale_window(u, omega), QuadRat(u), beta_pow(u, 6));
    CHECK(scaled.points == image.points);
    CHECK(scaled.window == image.window);
  }
  const Window w = Window::make(QuadRat(golden), QuadRat(golden, 1), true, false);
  const Window s = scale_window(golden, w);
  // beta' < 0 flips the window and its closedness.
  CHECK(s.lo == QuadRat::beta_conj(golden));
  CHECK(!s.lo_closed);
  CHECK(s.hi_closed);
}

TEST_CASE("gap words of a two-distance set") {
  const QuadRat b = QuadRat::beta(golden);
  const auto list = enumerate(golden, Window::make(QuadRat(golden), b, true, false), QuadRat(golden), QuadRat(golden, 60));
  const auto g = gaps(list);
  REQUIRE(g.distinct.size() == 2);
  CHECK(g.distinct[0] == QuadInt(golden, 1, 0));
  CHECK(g.distinct[1] == QuadInt(golden, 0, 1));
  CHECK(*g.word.delta1 == QuadInt(golden, 1, 0));
  CHECK(*g.word.delta2 == QuadInt(golden, 0, 1));
  CHECK(g.word.letters.find_first_not_of("AC") == std::string::npos);
  CHECK(g.word.letters.find("AA") == std::string::npos);
}

TEST_CASE("gap words of a three-distance set") {
  const auto list = enumerate(golden, Window::make(QuadRat(golden), QuadRat(golden, Rational(3, 2)), true, false),
                              QuadRat(golden), QuadRat(golden, 200));
  const auto g = gaps(list);
  REQUIRE(g.distinct.size() == 3);
  CHECK(g.distinct[2] == g.distinct[0] + g.distinct[1]);
  CHECK(g.word.letters.find('B') != std::string::npos);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    CHECK(list.points[i] + g.values[i] == list.points[i + 1]);
  }
}

TEST_CASE("three-gap classification") {
  const QuadInt one(golden, 1, 0), beta(golden, 0, 1);
  const auto two = classify_three_gap({one, beta});
  REQUIRE(two);
  CHECK(*two->delta1 == one);
  CHECK(*two->delta2 == beta);
  CHECK(gap_letter(one + beta, *two) == 'B');
  const auto three = classify_three_gap({one, beta, one + beta});
  REQUIRE(three);
  CHECK(!classify_three_gap({one, beta, beta + beta}));
  CHECK(!classify_three_gap({}));
  CHECK_THROWS_AS(gaps(PointList{{one}, acceptance_window(golden, 1), QuadRat(golden), QuadRat(golden, 1)}),
                  ParameterError);
}

TEST_CASE("csv output") {
  const auto list = enumerate(golden, acceptance_window(golden, 1), QuadRat(golden), QuadRat(golden, 1));
  const std::string csv = to_csv(list);
  CHECK(csv.rfind("a,b,float_value,conj_float_value\n", 0) == 0);
  CHECK(csv.find("\n1,0,1,1\n") != std::string::npos);
}
