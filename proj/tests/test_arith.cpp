#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "reinhardt/error.hpp"
#include "reinhardt/interval.hpp"
#include "reinhardt/linalg.hpp"
#include "reinhardt/loglinear.hpp"

using namespace reinhardt;
using namespace reinhardt::testing;

TEST_CASE("rational literals parse exactly and canonicalize") {
  CHECK(q("6/4") == q("3/2"));
  CHECK(q("-2") == Scalar(-2));
  CHECK(q("0/5").is_zero());
  CHECK_THROWS_AS(q("1/0"), Error);
  CHECK_THROWS_AS(q("1.5"), Error);
  CHECK_THROWS_AS(q("--1"), Error);
  CHECK_THROWS_AS(q("3/-4"), Error);
  CHECK_THROWS_AS(q(""), Error);
}

TEST_CASE("quadratic sign is decided algebraically") {
  const Scalar s2(mpq_class(0), mpq_class(1), 2);
  CHECK((s2 - q("141421356/100000000")).sign() > 0);
  CHECK((s2 - q("141421357/100000000")).sign() < 0);
  CHECK((Scalar(3) - Scalar(2) * s2).sign() > 0);  // 9 > 8
  CHECK((Scalar(2) * s2 - Scalar(3)).sign() < 0);
  CHECK(s2 * s2 == Scalar(2));
  CHECK((Scalar(1) / (Scalar(1) + s2)) == s2 - Scalar(1));
  CHECK(floor(s2) == 1);
  CHECK(ceil(-s2) == -1);
  CHECK(floor(q("-7/2")) == -4);
}

TEST_CASE("quadratic field arithmetic matches interval evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int i = 0; i < 200; ++i) {
    const Scalar x(mpq_class(dist(rng), 1 + (i % 4)), mpq_class(dist(rng)), 3);
    const Scalar y(mpq_class(dist(rng)), mpq_class(dist(rng), 2), 3);
    const Scalar z = x * y - x;
    const Interval iz = x.to_interval(128) * y.to_interval(128) - x.to_interval(128);
    CHECK(mpfr_cmp_d(iz.lower(), z.to_double() + 1e-9) <= 0);
    CHECK(mpfr_cmp_d(iz.upper(), z.to_double() - 1e-9) >= 0);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x.sign() == (x.to_double() > 0 ? 1 : (x.to_double() < 0 ? -1 : 0)));
  }
}

TEST_CASE("mixing radicands is rejected") {
  const Scalar s2(mpq_class(0), mpq_class(1), 2);
  const Scalar s3(mpq_class(0), mpq_class(1), 3);
  CHECK_THROWS_AS(s2 + s3, Error);
  CHECK_THROWS_AS(Scalar(mpq_class(0), mpq_class(1), 4), Error);
}

TEST_CASE("intervals enclose pi and shrink with precision") {
  const Interval p64 = Interval::pi(64);
  const Interval p256 = Interval::pi(256);
  CHECK(mpfr_cmp_d(p64.lower(), 3.14159265358979) > 0);
  CHECK(mpfr_cmp_d(p64.upper(), 3.1415926535898) < 0);
  CHECK(mpfr_cmp(p256.lower(), p64.lower()) >= 0);
  CHECK(precision_ladder().front() == 64);
  CHECK(precision_ladder().back() == precision_cap());
}

TEST_CASE("log-linear zero test is exact over a coprime base") {
  // log 4 - 2 log 2 = 0 ; log 6 - log 2 - log 3 = 0 ; log 12 - log 18 + log(3/2) = 0
  CHECK((LogLinear::log_of(Scalar(4)) - LogLinear::log_of(Scalar(2)) * Scalar(2)).is_zero());
  CHECK((LogLinear::log_of(Scalar(6)) - LogLinear::log_of(Scalar(2)) - LogLinear::log_of(Scalar(3))).is_zero());
  CHECK((LogLinear::log_of(Scalar(12)) - LogLinear::log_of(Scalar(18)) + LogLinear::log_of(q("3/2"))).is_zero());
  CHECK(LogLinear::log_of(Scalar(1)).is_zero());
  CHECK(!(LogLinear::log_of(Scalar(2)) - LogLinear::log_of(Scalar(3))).is_zero());
  CHECK((LogLinear::log_of(Scalar(2)) - LogLinear::log_of(Scalar(3))).sign() < 0);
  // 3 log 2 vs 2 log 3: 8 < 9
  CHECK((LogLinear::log_of(Scalar(2)) * Scalar(3) - LogLinear::log_of(Scalar(3)) * Scalar(2)).sign() < 0);
  // log 2 - 7/10 < 0
  CHECK((LogLinear::log_of(Scalar(2)) - LogLinear(q("7/10"))).sign() < 0);
}

TEST_CASE("coprime base refinement") {
  const auto [base, reps] = coprime_base({mpz_class(12), mpz_class(18)});
  // 12 = 2^2 3, 18 = 2 3^2 -> base {2, 3}
  CHECK(base.size() == 2);
  CHECK(reps[0].at(mpz_class(2)) == 2);
  CHECK(reps[1].at(mpz_class(3)) == 2);
}

TEST_CASE("kernel, inverse and determinant over the field") {
  const Matrix a = {ints({1, -1}), ints({0, 1})};
  const auto b = inverse(a);
  REQUIRE(b.has_value());
  CHECK((*b)[0] == ints({1, 1}));
  CHECK((*b)[1] == ints({0, 1}));
  CHECK(determinant(a) == Scalar(1));
  const auto ker = kernel_basis({ints({1, 1})}, 2);
  REQUIRE(ker.size() == 1);
  CHECK(dot(ker[0], ints({1, 1})).is_zero());
  CHECK(!inverse({ints({1, 2}), ints({2, 4})}).has_value());
  CHECK(primitive({q("1/2"), q("-3/4")}) == ints({2, -3}));
}

TEST_CASE("integer kernel has the full lattice rank") {
  // x + y + z = 0 and 2x - z = 0 -> kernel spanned by (1, -3, 2)
  IntMatrix m = {{1, 1, 1}, {2, 0, -1}};
  const auto k = integer_kernel(m, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] + k[0][1] + k[0][2] == 0);
  CHECK(2 * k[0][0] - k[0][2] == 0);
  CHECK(abs(k[0][0]) == 1);  // primitive
  CHECK(integer_kernel({}, 3).size() == 3);
  CHECK(integer_kernel({{1, 0}, {0, 1}}, 2).empty());
}
