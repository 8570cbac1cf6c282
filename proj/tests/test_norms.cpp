#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "reinhardt/cone.hpp"
#include "reinhardt/norms.hpp"

using namespace reinhardt;
using namespace reinhardt::testing;

namespace {

// (2 pi)^2 times the midpoint rule for the radial integral of r^{p nu + 1} over |G| in 2-D.
double quadrature_2d(const DomainSpec& spec, std::vector<double> nu, double p, double r1, double r2, int steps) {
  double sum = 0;
  const double h1 = r1 / steps, h2 = r2 / steps;
  for (int i = 0; i < steps; ++i)
    for (int j = 0; j < steps; ++j) {
      const double a = (i + 0.5) * h1, b = (j + 0.5) * h2;
      bool inside = true;
      for (const auto& c : spec.constraints())
        if (std::pow(a, c.alpha[0].to_double()) * std::pow(b, c.alpha[1].to_double()) >= c.c.to_double()) inside = false;
      if (inside) sum += std::pow(a, p * nu[0] + 1) * std::pow(b, p * nu[1] + 1);
    }
  return 4 * std::numbers::pi * std::numbers::pi * sum * h1 * h2;
}

double value_of(const NormResult& r) { return r.exact->evaluate(128).mid_double(); }

}  // namespace

TEST_CASE("sup_norm_monomial examples") {
  auto a = sup_norm_monomial(hartogs(), ints({2, -1}));
  REQUIRE(a.kind == NormKind::exact);
  CHECK(a.exact->symbolic() == "1");
  CHECK(sup_norm_monomial(hartogs(), ints({0, -1})).kind == NormKind::infinite);
  CHECK(sup_norm_monomial(polydisc(), ints({3, 1})).exact->symbolic() == "1");
  CHECK(sup_norm_monomial(scaled_hartogs(), ints({1, 0})).exact->symbolic() == "1/2");
  CHECK(sup_norm_monomial(scaled_hartogs(), ints({2, 1})).exact->symbolic() == "1/8");
  // sup |z| over {|z^2| < 2} is 2^(1/2).
  const auto root = sup_norm_monomial(make_spec(1, {{ints({2}), Scalar(2)}}), ints({1}));
  CHECK(root.exact->symbolic() == "(2)^(1/2)");
  CHECK(std::abs(value_of(root) - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("lp_norm_finite examples") {
  CHECK(!lp_norm_finite(product_hyperbola(), ints({0, 0}), 2));
  for (long p : {1, 2, 7}) CHECK(lp_norm_finite(hartogs(), ints({0, 0}), p));
  CHECK(!lp_norm_finite(disc_times_plane(), ints({0, 0}), 1));
  // 1/z2 on the Hartogs triangle: w = (2, 1) for p = 1, still negative on the generators.
  CHECK(lp_norm_finite(hartogs(), ints({0, -1}), 1));
  CHECK(!lp_norm_finite(hartogs(), ints({0, -2}), 2));
}

TEST_CASE("exact simplicial norms against quadrature") {
  const auto h = lp_norm_exact_simplicial(SimplicialFrame::from_spec(hartogs()), ints({0, 0}), 1);
  REQUIRE(h.kind == NormKind::exact);
  CHECK(h.exact->symbolic() == "pi^2/2");
  CHECK(std::abs(value_of(h) - quadrature_2d(hartogs(), {0, 0}, 1, 1, 1, 1500)) < 5e-3);

  const auto pd = lp_norm_exact_simplicial(SimplicialFrame::from_spec(polydisc()), ints({1, 0}), 2);
  CHECK(pd.exact->symbolic() == "pi^2/2");
  CHECK(std::abs(value_of(pd) - quadrature_2d(polydisc(), {1, 0}, 2, 1, 1, 1000)) < 5e-3);

  const auto s = lp_norm_exact_simplicial(SimplicialFrame::from_spec(scaled_hartogs()), ints({0, 0}), 1);
  CHECK(s.exact->symbolic() == "pi^2/32");
  CHECK(std::abs(value_of(s) - quadrature_2d(scaled_hartogs(), {0, 0}, 1, 0.5, 0.5, 1500)) < 5e-4);

  const auto w = lp_norm_exact_simplicial(SimplicialFrame::from_spec(hartogs()), ints({5, 0}), 1);
  CHECK(w.exact->symbolic() == "4*pi^2/63");
  CHECK(std::abs(value_of(w) - 4 * std::numbers::pi * std::numbers::pi / 63) < 1e-12);

  // p nu + 2 with a T_j <= 0 has no finite value.
  CHECK(lp_norm_exact_simplicial(SimplicialFrame::from_spec(hartogs()), ints({-3, 0}), 1).kind == NormKind::infinite);
}

TEST_CASE("homogeneity under threshold scaling") {
  const auto base = SimplicialFrame::from_spec(hartogs());
  for (const char* t : {"1/2", "3", "7/5"}) {
    auto scaled = base;
    for (auto& c : scaled.thresholds) c = c * q(t);
    for (const auto& nu : {ints({0, 0}), ints({3, 1}), ints({1, -1})}) {
      for (long p : {1, 2}) {
        const auto a = lp_norm_exact_simplicial(base, nu, p);
        const auto b = lp_norm_exact_simplicial(scaled, nu, p);
        REQUIRE(a.kind == NormKind::exact);
        ExponentVector w;
        for (const auto& x : nu) w.push_back(Scalar(p) * x + Scalar(2));
        Scalar total(0);
        for (const auto& tj : base.t(w)) total += tj;
        const LogLinear diff = b.exact->log() - a.exact->log() - LogLinear::log_of(q(t)) * total;
        CHECK(diff.is_zero());
      }
    }
  }
}

TEST_CASE("property: exact value is infinite exactly when the recession test fails") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  int checked = 0;
  while (checked < 40) {
    Matrix a{ints({coef(rng), coef(rng)}), ints({coef(rng), coef(rng)})};
    if (determinant(a).is_zero()) continue;
    const auto spec = make_spec(2, {{a[0], Scalar(1)}, {a[1], Scalar(1)}});
    const auto frame = SimplicialFrame::from_spec(spec);
    for (const auto& nu : {ints({0, 0}), ints({1, -1}), ints({-2, 1}), ints({2, 3})}) {
      const bool finite = lp_norm_exact_simplicial(frame, nu, 1).kind == NormKind::exact;
      CHECK(finite == lp_norm_finite(spec, nu, 1));
    }
    ++checked;
  }
}

TEST_CASE("Monte Carlo estimates") {
  const MonteCarloOptions opts{200000, 42, 0};
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const auto h = lp_norm_monte_carlo(hartogs(), ints({0, 0}), 1, opts);
  CHECK(std::abs(h.estimate - pi2 / 2) <= 3 * h.stderr_);
  const auto pd = lp_norm_monte_carlo(polydisc(), ints({1, 0}), 2, opts);
  CHECK(std::abs(pd.estimate - pi2 / 2) <= 3 * pd.stderr_);
  const auto an = lp_norm_monte_carlo(annulus(), ints({0}), 1, opts);
  CHECK(std::abs(an.estimate - 3 * std::numbers::pi / 4) <= 3 * an.stderr_);
  CHECK(lp_norm_monte_carlo(product_hyperbola(), ints({0, 0}), 1, opts).kind == NormKind::infinite);
  CHECK_THROWS_AS(lp_norm_monte_carlo(disc(), ints({-1}), 1, opts), Error);
}

TEST_CASE("Monte Carlo is independent of the thread count") {
  const auto a = lp_norm_monte_carlo(hartogs(), ints({1, 0}), 2, {300000, 7, 1});
  const auto b = lp_norm_monte_carlo(hartogs(), ints({1, 0}), 2, {300000, 7, 5});
  CHECK(a.estimate == b.estimate);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.accepted == b.accepted);
  const auto c = lp_norm_monte_carlo(hartogs(), ints({1, 0}), 2, {300000, 8, 1});
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("counter-based generator") {
  const CounterRng r(42, 3);
  CHECK(r.bits(10) == CounterRng(42, 3).bits(10));
  CHECK(r.bits(10) != r.bits(11));
  CHECK(r.bits(10) != CounterRng(42, 4).bits(10));
  double mean = 0;
  for (uint64_t i = 0; i < 100000; ++i) {
    const double u = r.uniform(i);
    REQUIRE(u > 0);
    REQUIRE(u < 1);
    mean += u;
  }
  CHECK(std::abs(mean / 100000 - 0.5) < 0.005);
}

TEST_CASE("coefficient inequality") {
  const MonteCarloOptions opts{200000, 11, 0};
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const auto pd = coefficient_inequality_check(polydisc(), {{{1, 0}, 1.0}, {{0, 0}, 1.0}}, 2, opts);
  CHECK(pd.pass);
  CHECK(std::abs(pd.total - 1.5 * pi2) < 4 * pd.total_stderr);
  CHECK(std::abs(pd.terms[0].estimate - 0.5 * pi2) < 4 * pd.terms[0].stderr_);
  CHECK(std::abs(pd.terms[1].estimate - pi2) <= 4 * pd.terms[1].stderr_ + 1e-9);

  const auto an = coefficient_inequality_check(annulus(), {{{1}, 1.0}, {{-1}, 1.0}}, 2, opts);
  CHECK(an.pass);
  const auto single = coefficient_inequality_check(hartogs(), {{{2, -1}, {0.0, 3.0}}}, 1, opts);
  CHECK(single.pass);
  CHECK(single.terms[0].estimate == doctest::Approx(single.total).epsilon(1e-12));
  CHECK_THROWS_AS(coefficient_inequality_check(polydisc(), {{{-1, 0}, 1.0}}, 1, opts), Error);
}

TEST_CASE("find_integrable_monomial") {
  const auto h = find_integrable_monomial(hartogs());
  REQUIRE(h.has_value());
  CHECK(h->nu == IntVector{0, 0});
  CHECK(h->p == 1);
  CHECK(!find_integrable_monomial(product_hyperbola()).has_value());
  CHECK(!find_integrable_monomial(disc_times_plane()).has_value());
  for (const auto& spec : random_specs(808, 30)) {
    const auto m = find_integrable_monomial(spec);
    const bool pointed = lineality_space(log_polyhedron(spec)).dim() == 0;
    CHECK(m.has_value() == pointed);
    if (!m) continue;
    ExponentVector nu;
    for (const auto& x : m->nu) nu.emplace_back(mpq_class(x));
    CHECK(monomial_holomorphic(spec, nu));
    CHECK(lp_norm_finite(spec, nu, m->p));
  }
}
