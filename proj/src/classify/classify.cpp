#include "reinhardt/classify.hpp"

#include <algorithm>

namespace reinhardt {

namespace {

long parse_long(const std::string& s) {
  try {
    size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::invalid_input, "bad integer parameter: " + s);
}

long parse_k(const std::string& s) {
  const long k = parse_long(s);
  if (k < 0) fail(ErrorCode::invalid_input, "k must be non-negative");
  return k;
}

ExponentVector to_scalars(const IntVector& v) {
  ExponentVector out;
  for (const auto& x : v) out.emplace_back(mpq_class(x));
  return out;
}

bool in_integer_span(const ExponentVector& v, const IntMatrix& basis, size_t n) {
  Matrix m;
  for (const auto& b : basis) m.push_back(to_scalars(b));
  const size_t r = rank(m, n);
  m.push_back(v);
  return rank(m, n) == r;
}

}  // namespace

FunctionSpace FunctionSpace::lp(mpq_class p) {
  p.canonicalize();
  if (p < 1) fail(ErrorCode::invalid_input, "p must lie in [1, inf)");
  return {Tag::Lp, std::move(p), 0};
}

FunctionSpace FunctionSpace::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_arg = [&](bool needed) {
    if (needed == arg.empty()) fail(ErrorCode::invalid_input, "bad function space: " + text);
  };
  if (name == "hinf") return need_arg(false), hinf();
  if (name == "l2") return need_arg(false), l2();
  if (name == "ainf") return need_arg(false), ainf();
  if (name == "sofg") return need_arg(false), FunctionSpace{Tag::SofG};
  if (name == "hinf-closure") return need_arg(false), FunctionSpace{Tag::HinfClosure};
  need_arg(true);
  if (name == "lp") return lp(Scalar::parse_rational(arg).rational_part());
  if (name == "ldiamond") return ldiamond(parse_k(arg));
  if (name == "ldiamond-ak") return ldiamond_ak(parse_k(arg));
  if (name == "ak") return ak(parse_k(arg));
  if (name == "hinfk") {
    const long k = parse_k(arg);
    if (k < 1) fail(ErrorCode::invalid_input, "hinfk needs k >= 1");
    return hinf_k(k);
  }
  fail(ErrorCode::invalid_input, "unknown function space: " + text);
}

std::string FunctionSpace::to_string() const {
  const std::string ks = std::to_string(k);
  switch (tag) {
    case Tag::Hinf: return "hinf";
    case Tag::L2: return "l2";
    case Tag::Lp: return "lp:" + p.get_str();
    case Tag::Ldiamond: return "ldiamond:" + ks;
    case Tag::LdiamondAk: return "ldiamond-ak:" + ks;
    case Tag::Ak: return "ak:" + ks;
    case Tag::Ainf: return "ainf";
    case Tag::SofG: return "sofg";
    case Tag::HinfClosure: return "hinf-closure";
    case Tag::HinfK: return "hinfk:" + ks;
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

SpaceVerdict classify_hinf(const DomainSpec& spec) {
  SpaceVerdict v;
  const auto lin = lineality_space(log_polyhedron(spec));
  const auto rt = rational_type(lin);
  if (rt.rational) {
    v.verdict = Verdict::yes;
    v.criterion = lin.dim() == 0 ? "E(log G) = {0} is of rational type"
                                 : "E(log G) is spanned by its integer points (rational type)";
    return v;
  }
  v.verdict = Verdict::no;
  v.criterion = "E(log G) is not of rational type: integer points span a proper subspace";
  for (const auto& b : lin.basis)
    if (!in_integer_span(b, rt.integer_basis, spec.dim())) {
      v.irrational_vector = b;
      break;
    }
  return v;
}

SpaceVerdict classify_l2(const DomainSpec& spec) {
  SpaceVerdict v;
  if (!spec.proper_subset()) {
    v.criterion = "G = C^n (no constraints)";
    return v;
  }
  const auto lin = lineality_space(log_polyhedron(spec));
  if (lin.dim() == 0) {
    v.verdict = Verdict::yes;
    v.criterion = "E(log G) = {0}";
  } else {
    v.verdict = Verdict::no;
    v.criterion = "E(log G) != {0}: every monomial has infinite L2 norm along the lineality directions";
    v.lineality_vector = lin.basis.front();
  }
  return v;
}

SpaceVerdict classify_lp_ak(const DomainSpec& spec, long k) {
  require(k >= 0, "k must be non-negative");
  SpaceVerdict v;
  const auto lin = lineality_space(log_polyhedron(spec));
  if (!spec.proper_subset()) {
    v.verdict = Verdict::no;
    v.criterion = "G = C^n is not a proper subset";
    if (lin.dim() > 0) v.lineality_vector = lin.basis.front();
    return v;
  }
  if (lin.dim() == 0) {
    v.verdict = Verdict::yes;
    v.criterion = "G is fat, G != C^n and E(log G) = {0} (every k)";
  } else {
    v.verdict = Verdict::no;
    v.criterion = "E(log G) != {0}: the L^{diamond,k} space contains no non-zero monomial";
    v.lineality_vector = lin.basis.front();
  }
  return v;
}

SpaceVerdict classify_ainf(const DomainSpec& spec) {
  SpaceVerdict v;
  if (classify_hinf(spec).verdict != Verdict::yes) {
    v.criterion = "requires G to be an H-infinity domain of holomorphy";
    return v;
  }
  const size_t n = spec.dim();
  const auto poly = log_polyhedron(spec);
  std::vector<std::vector<size_t>> sets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> s;
    for (size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) s.push_back(j);
    sets.push_back(std::move(s));
  }
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& s : sets) {
    std::optional<size_t> negative;
    for (size_t i = 0; i < spec.constraints().size() && !negative; ++i)
      for (size_t j : s)
        if (spec.constraints()[i].alpha[j].sign() < 0) {
          negative = i;
          break;
        }
    // Without a negative exponent on s, contracting those coordinates stays inside G.
    if (!negative) continue;
    auto r = approach(poly, s);
    if (!r.approaches) continue;
    v.verdict = Verdict::no;
    v.criterion = "an axis stratum V_eps meets the boundary while G_eps is not contained in G";
    std::vector<int> eps(n, 0);
    for (size_t j : s) eps[j] = 1;
    v.failing_epsilon = eps;
    v.ray = r.ray;
    v.negative_constraint = negative;
    v.certificate = r.certificate;
    return v;
  }
  v.verdict = Verdict::yes;
  v.criterion = "for every eps with V_eps meeting the boundary, G_eps is contained in G";
  return v;
}

SpaceVerdict classify_hinf_k(const DomainSpec& spec, long k) {
  require(k >= 1, "HinfK needs k >= 1");
  SpaceVerdict v;
  v.split = product_split(spec, lineality_space(log_polyhedron(spec)));
  if (v.split) {
    v.verdict = Verdict::yes;
    v.criterion = "G = D x C^(n-m) with E(log D) = {0} (every k >= 1)";
  } else {
    v.verdict = Verdict::no;
    v.criterion = "G does not split as D x C^(n-m) with E(log D) = {0}";
  }
  return v;
}

ClassificationReport classify_all(const DomainSpec& spec) {
  ClassificationReport r;
  r.n = spec.dim();
  r.bounded = is_bounded(spec);
  r.finite_volume = has_finite_volume(spec);
  r.proper_subset = spec.proper_subset();
  r.lineality = lineality_space(log_polyhedron(spec));
  r.rational = rational_type(r.lineality);

  auto& v = r.verdicts;
  v["Hinf"] = classify_hinf(spec);
  v["L2"] = classify_l2(spec);
  v["LdiamondAk"] = classify_lp_ak(spec, 0);
  v["Ainf"] = classify_ainf(spec);
  v["HinfK"] = classify_hinf_k(spec, 1);
  r.split = v["HinfK"].split;

  SpaceVerdict ak;
  if (v["LdiamondAk"].verdict == Verdict::yes) {
    ak.verdict = Verdict::yes;
    ak.criterion = "implied by the L^{diamond,k} cap A^k verdict (every k)";
  } else {
    ak.criterion = "no characterization without E(log G) = {0}";
  }
  v["Ak"] = ak;
  for (const char* name : {"SofG", "HinfClosure"}) {
    SpaceVerdict s = v["Ainf"];
    s.criterion = "equivalent to the A-infinity verdict: " + s.criterion;
    v[name] = s;
  }

  const auto yes = [&](const char* name) { return v[name].verdict == Verdict::yes; };
  if (yes("LdiamondAk"))
    require(yes("L2") && yes("Hinf") && yes("HinfK") && r.split->m == r.n, "implication lattice violated (LdiamondAk)");
  if (yes("L2")) require(yes("Hinf"), "implication lattice violated (L2)");
  if (yes("Ainf")) require(yes("Hinf"), "implication lattice violated (Ainf)");

  r.statements.push_back("G is fat (open log-convex representation)");
  if (r.bounded && yes("LdiamondAk"))
    r.statements.push_back("G is bounded with E(log G) = {0}: G is an A^k-domain of holomorphy for every k");
  if (r.bounded && v["Ainf"].verdict != Verdict::not_applicable)
    r.statements.push_back(std::string("G is bounded: G is an A-infinity domain of holomorphy iff the axis condition holds (") +
                           (yes("Ainf") ? "it does" : "it fails") + ")");
  if (r.finite_volume) r.statements.push_back("G has finite volume: H^{inf,k}(G) is contained in L^{diamond,k}(G)");
  if (r.bounded) r.statements.push_back("G is bounded: A^k(G) is contained in H^{inf,k}(G)");
  return r;
}

}  // namespace reinhardt
