#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pisot/qfield.hpp"

using namespace pisot;
using Float200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

namespace {

const std::vector<QuadUnit> units{QuadUnit::golden(), QuadUnit::silver(), QuadUnit::make(3, 1),
                                  QuadUnit::make(3, -1), QuadUnit::make(4, -1), QuadUnit::make(7, -1)};

QuadRat random_rat(QuadUnit u, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return QuadRat(u, Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

// a + b*beta with beta = (p + sqrt(D))/2, evaluated directly in 200 bits.
Float200 reference_value(QuadUnit u, long a, long b) {
  const Float200 D = u.p() * u.p() + 4 * u.sign();
  const Float200 beta = (Float200(u.p()) + sqrt(D)) / 2;
  return Float200(a) + Float200(b) * beta;
}

}  // namespace

TEST_CASE("make_unit validates the trace and sign") {
  const auto g = make_unit(1, 1);
  CHECK(g.floor_beta() == 1);
  CHECK(g.beta_approx() == Catch::Approx(1.6180339887));
  const auto m3 = make_unit(3, -1);
  CHECK(m3.floor_beta() == 2);
  CHECK(m3.beta_approx() > 2.0);
  CHECK(m3.beta_approx() < 3.0);
  CHECK_THROWS_AS(make_unit(2, -1), ParameterError);
  CHECK_THROWS_AS(make_unit(0, 1), ParameterError);
  CHECK_THROWS_AS(make_unit(3, 0), ParameterError);
}

TEST_CASE("unit parameters: beta > 1 and |beta'| < 1") {
  for (const auto& u : units) {
    const double b = u.beta_approx();
    const double c = u.conj_approx();
    CHECK(b > 1.0);
    CHECK(std::fabs(c) < 1.0);
    CHECK(std::fabs(b + c - static_cast<double>(u.p())) < 1e-12);
    CHECK(std::fabs(b * c + u.sign()) < 1e-12);
    CHECK(floor_of(QuadRat::beta(u)) == u.floor_beta());
  }
}

TEST_CASE("conjugation examples") {
  const auto g = QuadUnit::golden();
  CHECK(QuadRat::beta(g).conjugate() == QuadRat(g, 1, -1));
  CHECK(QuadRat(g, 1, 0).conjugate() == QuadRat(g, 1, 0));
  const QuadRat x(g, 2, 3);
  CHECK(x.conjugate() == QuadRat(g, 5, -3));
  const QuadRat n = x * x.conjugate();
  CHECK(n.is_rational());
  CHECK(n.a() == x.norm());
  CHECK(x.norm() == 1);  // 4 + 6 - 9
}

TEST_CASE("sign and order examples") {
  const auto g = QuadUnit::golden();
  CHECK(sign_of(QuadRat(g, 1, -1)) == -1);
  CHECK(sign_of(QuadRat(g)) == 0);
  CHECK(sign_of(QuadRat(g, 5, -3)) == 1);
  CHECK(compare(QuadRat::beta(g), QuadRat(g, 1)) == std::strong_ordering::greater);
  CHECK(floor_of(QuadRat::beta(g)) == 1);
  const auto m3 = QuadUnit::make(3, -1);
  const QuadRat b2 = QuadRat::beta(m3) * QuadRat::beta(m3);
  CHECK(b2 == QuadRat(m3, -1, 3));
  CHECK(floor_of(b2) == 6);
  CHECK(ceil_of(b2) == 7);
  CHECK(floor_of(QuadRat(m3, Rational(7, 2))) == 3);
  CHECK(floor_of(QuadRat(m3, Rational(-7, 2))) == -4);
}

TEST_CASE("beta + beta' = p and beta * beta' = -sign") {
  for (const auto& u : units) {
    const QuadRat b = QuadRat::beta(u);
    CHECK(b + b.conjugate() == QuadRat(u, u.p()));
    CHECK(b * b.conjugate() == QuadRat(u, -u.sign()));
    CHECK(b * b == b * Rational(u.p()) + Rational(u.sign()));
  }
}

TEST_CASE("ring axioms and conjugation homomorphism on random triples") {
  std::mt19937_64 rng(7);
  for (const auto& u : units) {
    for (int i = 0; i < 300; ++i) {
      const QuadRat x = random_rat(u, rng), y = random_rat(u, rng), z = random_rat(u, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x.conjugate().conjugate() == x);
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == QuadRat(u, 1));
        CHECK((y / x) * x == y);
      }
      CHECK((x <=> y) == (sign_of(x - y) <=> 0));
    }
  }
}

TEST_CASE("Z[beta] is closed under multiplication and division by beta") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  for (const auto& u : units) {
    for (int i = 0; i < 200; ++i) {
      const QuadInt x(u, coef(rng), coef(rng));
      CHECK(x.times_beta().div_beta() == x);
      CHECK(x.div_beta().times_beta() == x);
      CHECK(QuadRat(x.times_beta()) == QuadRat(x) * QuadRat::beta(u));
      CHECK(QuadRat(x.div_beta()) == QuadRat(x) / QuadRat::beta(u));
      CHECK(QuadRat(x.conjugate()) == QuadRat(x).conjugate());
    }
    for (long k = -6; k <= 6; ++k) {
      CHECK(beta_pow(u, k) * beta_pow(u, -k) == QuadRat(u, 1));
    }
  }
}

TEST_CASE("sign_of agrees with a 200-bit evaluation") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::size_t checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const QuadUnit u = units[static_cast<std::size_t>(i) % units.size()];
    const long b = coef(rng);
    // Half the samples sit next to the cancellation line a = -b*beta.
    long a = coef(rng);
    if (i % 2 == 0) {
      a = -static_cast<long>(std::llround(static_cast<double>(b) * u.beta_approx())) + (i % 7) - 3;
    }
    const Float200 ref = reference_value(u, a, b);
    if (abs(ref) < Float200(1e-40)) continue;
    ++checked;
    const int expected = ref > 0 ? 1 : -1;
    REQUIRE(sign_of(QuadRat(u, a, b)) == expected);
  }
  CHECK(checked > 9900);
}

TEST_CASE("to_float and to_string") {
  const auto g = QuadUnit::golden();
  CHECK(to_double(QuadRat(g, Rational(1, 2), Rational(1, 2))) == Catch::Approx((1.0 + 1.6180339887498949) / 2));
  CHECK(to_string(QuadRat(g, 2, -3)) == "2 - 3*beta");
  CHECK(to_string(QuadRat(g, Rational(1, 2), 1)) == "1/2 + 1*beta");
  const auto c = common_denominator(QuadRat(g, Rational(1, 2), Rational(1, 3)));
  CHECK(c.a == 3);
  CHECK(c.b == 2);
  CHECK(c.den == 6);
}

TEST_CASE("mixing units is rejected") {
  CHECK_THROWS_AS(QuadRat(QuadUnit::golden(), 1) + QuadRat(QuadUnit::silver(), 1), ParameterError);
}
