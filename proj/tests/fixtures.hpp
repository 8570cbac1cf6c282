#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/linalg.hpp"

namespace reinhardt::testing {

inline ExponentVector ints(std::initializer_list<long> v) {
  ExponentVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline Scalar q(const std::string& s) { return Scalar::parse_rational(s); }

inline RadialPoint radii(std::initializer_list<const char*> v) {
  RadialPoint p;
  for (const char* x : v) p.radii.push_back(q(x));
  return p;
}

inline DomainSpec make_spec(size_t n, std::vector<std::pair<ExponentVector, Scalar>> cons) {
  std::vector<MonomialConstraint> out;
  for (auto& [a, c] : cons) out.push_back({a, c});
  return DomainSpec(n, std::move(out));
}

// {|z1| < |z2| < 1}
inline DomainSpec hartogs() { return make_spec(2, {{ints({1, -1}), Scalar(1)}, {ints({0, 1}), Scalar(1)}}); }
// {|z1| < |z2| < 1/2}
inline DomainSpec scaled_hartogs() { return make_spec(2, {{ints({1, -1}), Scalar(1)}, {ints({0, 1}), q("1/2")}}); }
inline DomainSpec polydisc() { return make_spec(2, {{ints({1, 0}), Scalar(1)}, {ints({0, 1}), Scalar(1)}}); }
inline DomainSpec disc() { return make_spec(1, {{ints({1}), Scalar(1)}}); }
// {1/2 < |z| < 1}
inline DomainSpec annulus() { return make_spec(1, {{ints({1}), Scalar(1)}, {ints({-1}), Scalar(2)}}); }
// E x C
inline DomainSpec disc_times_plane() { return make_spec(2, {{ints({1, 0}), Scalar(1)}}); }
// {|z1 z2| < 1}
inline DomainSpec product_hyperbola() { return make_spec(2, {{ints({1, 1}), Scalar(1)}}); }
// normals (1, sqrt 2) and (-1, -sqrt 2): a slab with irrational lineality
inline DomainSpec irrational_slab() {
  const Scalar s2(mpq_class(0), mpq_class(1), 2);
  return DomainSpec(2,
                    {{{Scalar(1), s2}, Scalar(1)}, {{Scalar(-1), -s2}, Scalar(2)}},
                    2);
}

// Random specs with integer normals in [-3, 3] and thresholds > 1, so the origin of
// log-space is interior.
inline std::vector<DomainSpec> random_specs(uint64_t seed, size_t count, size_t max_dim = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const char* thresholds[] = {"2", "3", "5/2", "3/2"};
  std::vector<DomainSpec> out;
  while (out.size() < count) {
    const size_t n = 1 + rng() % max_dim;
    const size_t m = 1 + rng() % (n + 2);
    std::vector<std::pair<ExponentVector, Scalar>> cons;
    for (size_t i = 0; i < m; ++i) {
      ExponentVector a;
      for (size_t j = 0; j < n; ++j) a.emplace_back(coef(rng));
      if (is_zero_vector(a)) a[0] = Scalar(1);
      cons.emplace_back(a, q(thresholds[rng() % 4]));
    }
    out.push_back(make_spec(n, cons));
  }
  return out;
}

// Random specs whose lineality space is non-trivial: fewer independent normals than n.
inline std::vector<DomainSpec> random_lineal_specs(uint64_t seed, size_t count, size_t max_dim = 3) {
  std::vector<DomainSpec> out;
  for (uint64_t s = seed; out.size() < count; ++s)
    for (auto& spec : random_specs(s, 4, max_dim)) {
      Matrix normals;
      for (const auto& c : spec.constraints()) normals.push_back(c.alpha);
      if (spec.dim() >= 2 && rank(normals, spec.dim()) < spec.dim() && out.size() < count) out.push_back(spec);
    }
  return out;
}

// Coordinate permutation: new coordinate i is old coordinate perm[i].
inline DomainSpec permuted(const DomainSpec& spec, const std::vector<size_t>& perm) {
  std::vector<MonomialConstraint> cons;
  for (const auto& c : spec.constraints()) {
    ExponentVector a;
    for (size_t i : perm) a.push_back(c.alpha[i]);
    cons.push_back({a, c.c});
  }
  return DomainSpec(spec.dim(), cons, spec.quadratic_d());
}

}  // namespace reinhardt::testing
