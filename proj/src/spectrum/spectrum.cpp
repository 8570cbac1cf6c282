#include "reinhardt/spectrum.hpp"

#include <map>

#include "reinhardt/norms.hpp"
#include "reinhardt/witness.hpp"

namespace reinhardt {

namespace {

ExponentVector as_scalars(const IntVector& v) {
  ExponentVector out;
  for (const auto& x : v) out.emplace_back(mpq_class(x));
  return out;
}

// Per-spec data shared by every monomial query.
class Oracle {
 public:
  explicit Oracle(const DomainSpec& spec) : spec_(spec), poly_(log_polyhedron(spec)), bounded_(is_bounded(spec)) {
    const size_t n = spec.dim();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<size_t> s;
      for (size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) s.push_back(j);
      auto r = approach(poly_, s);
      if (r.approaches) approachable_.push_back({s, r.ray});
    }
  }

  SpaceMembership query(const IntVector& nu, const FunctionSpace& space);

 private:
  struct Stratum {
    std::vector<size_t> coords;
    ExponentVector ray;
  };

  bool sup_finite(const ExponentVector& mu) {
    const std::string key = to_string(mu);
    auto it = sup_cache_.find(key);
    if (it != sup_cache_.end()) return it->second;
    return sup_cache_[key] = nonpositive_on_recession(poly_, mu);
  }

  bool lp_finite(const ExponentVector& mu, const mpq_class& p) {
    ExponentVector w;
    for (const auto& x : mu) w.push_back(Scalar(p) * x + Scalar(2));
    return strictly_negative_on_recession(poly_, w);
  }

  // Derivative orders |sigma| <= k with d^sigma z^nu != 0.
  static std::vector<std::vector<long>> live_sigmas(const IntVector& nu, long k) {
    std::vector<std::vector<long>> out;
    for (auto& s : multi_indices(nu.size(), k)) {
      bool vanishes = false;
      for (size_t l = 0; l < nu.size(); ++l)
        if (nu[l] >= 0 && nu[l] < s[l]) vanishes = true;
      if (!vanishes) out.push_back(std::move(s));
    }
    return out;
  }

  static ExponentVector minus(const IntVector& nu, const std::vector<long>& sigma) {
    ExponentVector out;
    for (size_t l = 0; l < nu.size(); ++l) out.emplace_back(mpq_class(nu[l] - sigma[l]));
    return out;
  }

  std::vector<int> indicator(const std::vector<size_t>& s) const {
    std::vector<int> e(spec_.dim(), 0);
    for (size_t j : s) e[j] = 1;
    return e;
  }

  template <class Test>
  SpaceMembership all_derivatives(const IntVector& nu, long k, Test&& test, const std::string& yes, const std::string& no) {
    SpaceMembership m;
    for (const auto& s : live_sigmas(nu, k))
      if (!test(minus(nu, s))) {
        m.verdict = Membership::no;
        m.criterion = no;
        m.sigma = s;
        return m;
      }
    m.verdict = Membership::yes;
    m.criterion = yes;
    return m;
  }

  SpaceMembership hinf_k(const IntVector& nu, long k) {
    return all_derivatives(
        nu, k, [&](const ExponentVector& mu) { return sup_finite(mu); }, "every non-zero derivative is bounded",
        "a derivative is unbounded (sup LP unbounded)");
  }

  SpaceMembership ldiamond(const IntVector& nu, long k) {
    return all_derivatives(
        nu, k, [&](const ExponentVector& mu) { return sup_finite(mu) && lp_finite(mu, 1); },
        "every non-zero derivative lies in L^p for all p in [1, inf]",
        "a derivative fails the recession test for some p in [1, inf]");
  }

  SpaceMembership ak(const IntVector& nu, long k);
  SpaceMembership ainf(const IntVector& nu, bool need_bounded);

  const DomainSpec& spec_;
  LogPolyhedron poly_;
  bool bounded_;
  std::vector<Stratum> approachable_;
  std::map<std::string, bool> sup_cache_;
};

SpaceMembership Oracle::ak(const IntVector& nu, long k) {
  SpaceMembership m;
  const auto sigmas = live_sigmas(nu, k);
  for (const auto& st : approachable_)
    for (const auto& s : sigmas)
      if (dot(minus(nu, s), st.ray).sign() > 0) {
        m.verdict = Membership::no;
        m.criterion = "a derivative blows up along a ray into the axis stratum";
        m.sigma = s;
        m.axis_set = indicator(st.coords);
        return m;
      }
  const auto hk = hinf_k(nu, k);
  if (hk.verdict == Membership::no) {
    if (bounded_) {
      m = hk;
      m.criterion = "G is bounded and a derivative is unbounded";
      return m;
    }
    m.criterion = "derivative unbounded on an unbounded domain; continuity undecided";
    return m;
  }
  for (const auto& st : approachable_)
    for (const auto& s : sigmas) {
      const ExponentVector mu = minus(nu, s);
      bool ok = true;
      for (size_t l : st.coords)
        if (mu[l].sign() < 0) ok = false;
      for (size_t l : st.coords) {
        if (ok) break;
        ExponentVector shifted = mu;
        shifted[l] -= Scalar(1);
        ok = sup_finite(shifted);
      }
      if (!ok) {
        m.criterion = "no domination by a vanishing coordinate on an approachable axis set";
        m.sigma = s;
        m.axis_set = indicator(st.coords);
        return m;
      }
    }
  m.verdict = Membership::yes;
  m.criterion = "derivatives bounded and dominated by a vanishing coordinate on every approachable axis set";
  return m;
}

SpaceMembership Oracle::ainf(const IntVector& nu, bool need_bounded) {
  SpaceMembership m;
  for (const auto& st : approachable_)
    for (size_t l : st.coords)
      if (nu[l] < 0) {
        m.verdict = Membership::no;
        m.criterion = "negative exponent on a coordinate that vanishes on the closure; high derivatives blow up";
        m.axis_set = indicator(st.coords);
        return m;
      }
  if (need_bounded && !sup_finite(as_scalars(nu))) {
    m.verdict = Membership::no;
    m.criterion = "monomial is unbounded (sup LP unbounded)";
    return m;
  }
  m.verdict = Membership::yes;
  m.criterion = "holomorphic on a neighbourhood of the closure";
  return m;
}

SpaceMembership Oracle::query(const IntVector& nu, const FunctionSpace& space) {
  using Tag = FunctionSpace::Tag;
  if (nu.size() != spec_.dim()) fail(ErrorCode::invalid_input, "exponent has wrong dimension");
  if (space.tag == Tag::SofG)
    fail(ErrorCode::invalid_input, "S(G) membership is reported through classify only, not per monomial");
  const ExponentVector v = as_scalars(nu);
  SpaceMembership m;
  if (!monomial_holomorphic(spec_, v)) {
    m.verdict = Membership::no;
    m.criterion = "not holomorphic: a negative exponent on an axis that meets G";
    return m;
  }
  switch (space.tag) {
    case Tag::Hinf:
      return hinf_k(nu, 0);
    case Tag::L2:
    case Tag::Lp: {
      const mpq_class p = space.tag == Tag::L2 ? mpq_class(2) : space.p;
      const bool ok = lp_finite(v, p);
      m.verdict = ok ? Membership::yes : Membership::no;
      m.criterion = ok ? "<p nu + 2, d> < 0 on the recession cone" : "recession direction with <p nu + 2, d> >= 0";
      return m;
    }
    case Tag::HinfK:
      return hinf_k(nu, space.k);
    case Tag::Ldiamond:
      return ldiamond(nu, space.k);
    case Tag::Ak:
      return ak(nu, space.k);
    case Tag::LdiamondAk: {
      const auto l = ldiamond(nu, space.k);
      if (l.verdict != Membership::yes) return l;
      return ak(nu, space.k);
    }
    case Tag::Ainf:
      return ainf(nu, false);
    case Tag::HinfClosure:
      return ainf(nu, true);
    case Tag::SofG:
      break;
  }
  fail(ErrorCode::internal, "unhandled function space");
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::indeterminate: return "indeterminate";
  }
  return "?";
}

SpaceMembership monomial_in_space(const DomainSpec& spec, const IntVector& nu, const FunctionSpace& space) {
  return Oracle(spec).query(nu, space);
}

std::vector<IntVector> spectrum_box(const DomainSpec& spec, const FunctionSpace& space, long radius) {
  if (radius < 0) fail(ErrorCode::invalid_input, "box radius must be non-negative");
  Oracle oracle(spec);
  const size_t n = spec.dim();
  std::vector<IntVector> out;
  IntVector nu(n, mpz_class(-radius));
  for (;;) {
    if (oracle.query(nu, space).verdict == Membership::yes) out.push_back(nu);
    size_t k = n;
    while (k > 0 && nu[k - 1] == radius) nu[--k] = -radius;
    if (k == 0) break;
    ++nu[k - 1];
  }
  return out;
}

OrthogonalityCheck spectrum_orthogonality_check(const DomainSpec& spec, long radius) {
  const auto lin = lineality_space(log_polyhedron(spec));
  OrthogonalityCheck out;
  out.pass = true;
  for (const auto& nu : spectrum_box(spec, FunctionSpace::hinf(), radius)) {
    ++out.checked;
    for (const auto& f : lin.basis)
      if (!dot(as_scalars(nu), f).is_zero()) {
        if (out.pass) out.counterexample = nu;
        out.pass = false;
      }
  }
  return out;
}

}  // namespace reinhardt
