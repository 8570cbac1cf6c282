#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "reinhardt/classify.hpp"

using namespace reinhardt;
using namespace reinhardt::testing;

namespace {

Verdict verdict(const ClassificationReport& r, const char* name) { return r.verdicts.at(name).verdict; }

// The stored ray is a recession direction sending exactly the eps-coordinates to -inf,
// and the named constraint is negative on that set.
bool failing_epsilon_sound(const DomainSpec& spec, const SpaceVerdict& v) {
  const auto poly = log_polyhedron(spec);
  if (!v.failing_epsilon || !v.negative_constraint) return false;
  if (!recession_contains(poly, v.ray)) return false;
  bool negative = false;
  for (size_t j = 0; j < spec.dim(); ++j) {
    const bool in = (*v.failing_epsilon)[j] == 1;
    if (in && !(v.ray[j] <= Scalar(-1))) return false;
    if (!in && !v.ray[j].is_zero()) return false;
    if (in && spec.constraints()[*v.negative_constraint].alpha[j].sign() < 0) negative = true;
  }
  return negative;
}

}  // namespace

TEST_CASE("Hartogs triangle classification") {
  const auto r = classify_all(hartogs());
  CHECK(verdict(r, "Hinf") == Verdict::yes);
  CHECK(verdict(r, "L2") == Verdict::yes);
  CHECK(verdict(r, "LdiamondAk") == Verdict::yes);
  CHECK(verdict(r, "Ak") == Verdict::yes);
  CHECK(verdict(r, "HinfK") == Verdict::yes);
  REQUIRE(r.split.has_value());
  CHECK(r.split->m == 2);
  CHECK(verdict(r, "Ainf") == Verdict::no);
  CHECK(verdict(r, "SofG") == Verdict::no);
  CHECK(verdict(r, "HinfClosure") == Verdict::no);
  const auto& ainf = r.verdicts.at("Ainf");
  REQUIRE(ainf.failing_epsilon.has_value());
  CHECK(*ainf.failing_epsilon == std::vector<int>{1, 1});
  CHECK(failing_epsilon_sound(hartogs(), ainf));
  CHECK(r.bounded);
  CHECK(r.finite_volume);
  for (long k = 0; k <= 3; ++k) CHECK(classify_lp_ak(hartogs(), k).verdict == Verdict::yes);
}

TEST_CASE("per-operation examples") {
  CHECK(classify_hinf(irrational_slab()).verdict == Verdict::no);
  CHECK(classify_hinf(product_hyperbola()).verdict == Verdict::yes);
  CHECK(classify_l2(product_hyperbola()).verdict == Verdict::no);
  CHECK(classify_l2(polydisc()).verdict == Verdict::yes);
  CHECK(classify_lp_ak(disc_times_plane(), 0).verdict == Verdict::no);
  CHECK(classify_lp_ak(annulus(), 3).verdict == Verdict::yes);
  CHECK(classify_ainf(annulus()).verdict == Verdict::yes);
  CHECK(classify_ainf(polydisc()).verdict == Verdict::yes);
  const auto ec = classify_hinf_k(disc_times_plane(), 1);
  CHECK(ec.verdict == Verdict::yes);
  CHECK(ec.split->m == 1);
  CHECK(classify_hinf_k(product_hyperbola(), 2).verdict == Verdict::no);
  CHECK(classify_hinf_k(hartogs(), 1).split->m == 2);
}

TEST_CASE("aggregate examples") {
  const auto ec = classify_all(disc_times_plane());
  CHECK(verdict(ec, "Hinf") == Verdict::yes);
  CHECK(verdict(ec, "L2") == Verdict::no);
  CHECK(verdict(ec, "Ainf") == Verdict::yes);
  CHECK(verdict(ec, "HinfK") == Verdict::yes);
  CHECK(ec.split->m == 1);

  const auto irr = classify_all(irrational_slab());
  CHECK(verdict(irr, "Hinf") == Verdict::no);
  CHECK(verdict(irr, "Ainf") == Verdict::not_applicable);
  const auto& ev = irr.verdicts.at("Hinf");
  REQUIRE(ev.irrational_vector.has_value());
  CHECK(!is_integer_vector(*ev.irrational_vector));

  const auto hyp = classify_all(product_hyperbola());
  CHECK(verdict(hyp, "Hinf") == Verdict::yes);
  CHECK(verdict(hyp, "L2") == Verdict::no);
  CHECK(verdict(hyp, "HinfK") == Verdict::no);
}

TEST_CASE("the whole space") {
  const DomainSpec cn(2, {});
  const auto r = classify_all(cn);
  CHECK(!r.proper_subset);
  CHECK(verdict(r, "Hinf") == Verdict::yes);
  CHECK(verdict(r, "L2") == Verdict::not_applicable);
  CHECK(verdict(r, "LdiamondAk") == Verdict::no);
  CHECK(verdict(r, "Ainf") == Verdict::yes);
  CHECK(verdict(r, "HinfK") == Verdict::yes);
  CHECK(r.split->m == 0);
}

TEST_CASE("property: evidence soundness and the implication lattice") {
  for (const auto& spec : random_specs(2024, 40)) {
    const auto r = classify_all(spec);
    const auto poly = log_polyhedron(spec);
    for (const auto& [name, v] : r.verdicts) {
      if (v.lineality_vector) {
        CHECK(recession_contains(poly, *v.lineality_vector));
        ExponentVector neg;
        for (const auto& x : *v.lineality_vector) neg.push_back(-x);
        CHECK(recession_contains(poly, neg));
        CHECK(!is_zero_vector(*v.lineality_vector));
      }
      if (v.failing_epsilon) CHECK(failing_epsilon_sound(spec, v));
      if (v.verdict == Verdict::no) CHECK((v.lineality_vector || v.failing_epsilon || v.irrational_vector || name == "HinfK"));
    }
    if (verdict(r, "LdiamondAk") == Verdict::yes) {
      CHECK(verdict(r, "L2") == Verdict::yes);
      CHECK(r.split->m == spec.dim());
    }
    if (verdict(r, "L2") == Verdict::yes) CHECK(verdict(r, "Hinf") == Verdict::yes);
    if (verdict(r, "Ainf") == Verdict::yes) CHECK(verdict(r, "Hinf") == Verdict::yes);
  }
}

TEST_CASE("property: permutation equivariance") {
  for (const auto& spec : random_specs(77, 25, 3)) {
    std::vector<size_t> perm(spec.dim());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    const auto other = permuted(spec, perm);
    const auto a = classify_all(spec);
    const auto b = classify_all(other);
    for (const auto& [name, v] : a.verdicts) CHECK(v.verdict == b.verdicts.at(name).verdict);
    CHECK(a.lineality.dim() == b.lineality.dim());
    if (a.split && b.split) {
      CHECK(a.split->m == b.split->m);
      for (size_t j : a.split->free_coords)
        CHECK(std::find(b.split->free_coords.begin(), b.split->free_coords.end(), spec.dim() - 1 - j) !=
              b.split->free_coords.end());
    }
    const auto& ea = a.verdicts.at("Ainf");
    if (ea.failing_epsilon) {
      // The permuted axis set still fails in the permuted domain.
      std::vector<size_t> s;
      for (size_t i = 0; i < perm.size(); ++i)
        if ((*ea.failing_epsilon)[perm[i]]) s.push_back(i);
      CHECK(approach(log_polyhedron(other), s).approaches);
    }
  }
}

TEST_CASE("function space names round trip") {
  for (const char* s : {"hinf", "l2", "lp:3/2", "ldiamond:1", "ldiamond-ak:2", "ak:0", "ainf", "sofg", "hinf-closure",
                        "hinfk:3"})
    CHECK(FunctionSpace::parse(s).to_string() == s);
  CHECK_THROWS_AS(FunctionSpace::parse("lp:1/2"), Error);
  CHECK_THROWS_AS(FunctionSpace::parse("hinfk:0"), Error);
  CHECK_THROWS_AS(FunctionSpace::parse("bergman"), Error);
}
