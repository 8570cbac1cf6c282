#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "reinhardt/cone.hpp"
#include "reinhardt/error.hpp"

using namespace reinhardt;
using namespace reinhardt::testing;

namespace {

ErrorCode parse_error_code(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("parse_spec: Hartogs triangle") {
  const auto spec = parse_spec(R"({"n":2, "constraints":[{"alpha":["1","-1"],"c":"1"},{"alpha":["0","1"],"c":"1"}]})");
  CHECK(spec.dim() == 2);
  REQUIRE(spec.constraints().size() == 2);
  CHECK(spec.constraints()[0].alpha == ints({1, -1}));
  CHECK(spec.constraints()[1].c == Scalar(1));
}

TEST_CASE("parse_spec: unit disc") {
  const auto spec = parse_spec(R"({"n":1, "constraints":[{"alpha":["1"],"c":"1"}]})");
  CHECK(spec.dim() == 1);
  CHECK(spec.constraints().size() == 1);
}

TEST_CASE("parse_spec: inconsistent half-lines are an empty domain") {
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1"],"c":"1"},{"alpha":["-1"],"c":"1/2"}]})") ==
        ErrorCode::empty_domain);
  // Touching closures, still no interior: x < 0 and -x < 0.
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1"],"c":"1"},{"alpha":["-1"],"c":"1"}]})") ==
        ErrorCode::empty_domain);
}

TEST_CASE("parse_spec: malformed input") {
  CHECK(parse_error_code(R"({"n":2, "constraints":[{"alpha":["1"],"c":"1"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1"],"c":"0"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1"],"c":"-1/2"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1.5"],"c":"1"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["0"],"c":"1"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "extra":1, "constraints":[]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":["1"],"c":"1","note":"x"}]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "constraints":[{"alpha":[{"a":"0","b":"1"}],"c":"1"}]})") ==
        ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":1, "quadratic_d":4, "constraints":[]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code(R"({"n":0, "constraints":[]})") == ErrorCode::invalid_input);
  CHECK(parse_error_code("not json") == ErrorCode::invalid_input);
}

TEST_CASE("parse_spec: quadratic literals") {
  const auto spec = parse_spec(
      R"({"n":2,"quadratic_d":2,"constraints":[{"alpha":["1",{"a":"0","b":"1"}],"c":"1"},)"
      R"({"alpha":["-1",{"a":"0","b":"-1"}],"c":"2"}]})");
  CHECK(!spec.constraints()[0].alpha[1].is_rational());
  CHECK(spec.constraints()[0].alpha[1].radicand() == 2);
  CHECK(parse_spec(spec_to_json(spec)).constraints()[1].alpha == spec.constraints()[1].alpha);
}

TEST_CASE("log_polyhedron keeps one half-space per constraint in order") {
  const auto p = log_polyhedron(annulus());
  REQUIRE(p.normals.size() == 2);
  CHECK(p.normals[0] == ints({1}));
  CHECK(p.normals[1] == ints({-1}));
  CHECK((p.offset(1) - LogLinear::log_of(Scalar(2))).is_zero());
  CHECK(log_polyhedron(hartogs()).normals[0] == ints({1, -1}));
}

TEST_CASE("contains: axis rule") {
  CHECK(contains(hartogs(), radii({"0", "1/2"})));
  CHECK(!contains(hartogs(), radii({"0", "0"})));
  CHECK(!contains(annulus(), radii({"0"})));
  CHECK(contains(annulus(), radii({"3/4"})));
  CHECK(!contains(annulus(), radii({"1/2"})));  // boundary, exact
  CHECK(!contains(hartogs(), radii({"1/2", "1/2"})));
  CHECK(contains(hartogs(), radii({"1/3", "1/2"})));
  CHECK(contains(polydisc(), radii({"0", "0"})));
}

TEST_CASE("contains: exact comparison at irrational boundaries") {
  // |z1|^2 |z2| < 2 at radii (1, 2) is on the boundary; at (1, 199/100) inside.
  const auto spec = make_spec(2, {{ints({2, 1}), Scalar(2)}});
  CHECK(!contains(spec, radii({"1", "2"})));
  CHECK(contains(spec, radii({"1", "199/100"})));
  // Rational exponents: |z|^{1/2} < 2 is |z| < 4.
  const auto half = make_spec(1, {{{q("1/2")}, Scalar(2)}});
  CHECK(!contains(half, radii({"4"})));
  CHECK(contains(half, radii({"3999/1000"})));
}

TEST_CASE("is_bounded") {
  CHECK(is_bounded(hartogs()));
  CHECK(!is_bounded(disc_times_plane()));
  CHECK(!is_bounded(product_hyperbola()));
  CHECK(is_bounded(annulus()));
}

TEST_CASE("has_finite_volume") {
  CHECK(has_finite_volume(hartogs()));
  CHECK(!has_finite_volume(disc_times_plane()));
  CHECK(has_finite_volume(annulus()));
  CHECK(!has_finite_volume(product_hyperbola()));
  // Unbounded but finite volume: {|z1|^2 < 1, |z1 z2| < 1}? volume of |z2| < 1/|z1| region
  // near z1 -> 0 is infinite; {|z| > 1 cut by |z|^3 ...} 1-D: {1 < |z|} has infinite area.
  CHECK(!has_finite_volume(make_spec(1, {{ints({-1}), Scalar(1)}})));
}

TEST_CASE("property: Reinhardt symmetry and log consistency") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 40);
  const DomainSpec specs[] = {hartogs(), polydisc(), scaled_hartogs()};
  for (const auto& spec : specs) {
    const auto poly = log_polyhedron(spec);
    for (int i = 0; i < 60; ++i) {
      RadialPoint p;
      std::vector<LogLinear> x;
      for (size_t j = 0; j < spec.dim(); ++j) {
        p.radii.emplace_back(mpq_class(num(rng), 32));
        x.push_back(LogLinear::log_of(p.radii.back()));
      }
      CHECK(contains(spec, p) == log_contains(poly, x));
      // Phase rotation keeps the moduli; a complex point reduced to radii gives the same answer.
      RadialPoint rotated = p;
      CHECK(contains(spec, rotated) == contains(spec, p));
    }
  }
}

TEST_CASE("property: openness and monotone axis contraction") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(1, 63);
  const auto spec = polydisc();
  const auto tri = hartogs();
  for (int i = 0; i < 80; ++i) {
    RadialPoint p{{Scalar(mpq_class(num(rng), 64)), Scalar(mpq_class(num(rng), 64))}};
    if (contains(tri, p)) {
      // Shrinking balls around p stay inside.
      for (int k = 10; k <= 30; k += 10) {
        const mpq_class eps(1, mpz_class(1) << k);
        for (int sx = -1; sx <= 1; ++sx)
          for (int sy = -1; sy <= 1; ++sy) {
            RadialPoint r{{p.radii[0] + Scalar(eps * sx), p.radii[1] + Scalar(eps * sy)}};
            CHECK(contains(tri, r));
          }
      }
    }
    // All exponents of coordinate 1 are >= 0 in the polydisc: contracting r1 keeps membership.
    if (contains(spec, p)) {
      for (const char* t : {"0", "1/3", "1"}) {
        RadialPoint r{{p.radii[0] * q(t), p.radii[1]}};
        CHECK(contains(spec, r));
      }
    }
  }
}

TEST_CASE("FastMembership agrees with exact membership") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.2);
  for (const auto& spec : {hartogs(), annulus(), polydisc()}) {
    FastMembership fast(spec);
    for (int i = 0; i < 500; ++i) {
      std::vector<double> r(spec.dim());
      RadialPoint p;
      for (auto& x : r) {
        x = u(rng);
        p.radii.emplace_back(mpq_class(x));
      }
      CHECK(fast(r) == contains(spec, p));
    }
    std::vector<double> boundary(spec.dim(), 1.0);
    RadialPoint pb;
    for (double x : boundary) pb.radii.emplace_back(mpq_class(x));
    CHECK(fast(boundary) == contains(spec, pb));
  }
}
