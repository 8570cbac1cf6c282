#include "reinhardt/report.hpp"

#include <sstream>

namespace reinhardt {

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_si());
  return a;
}

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

Json one_based(const std::vector<size_t>& v) {
  Json a = Json::array();
  for (size_t x : v) a.push_back(x + 1);
  return a;
}

Json exact_json(const ExactValue& v) {
  Json j;
  j["symbolic"] = v.symbolic();
  j["coefficient"] = scalar_json(v.coefficient);
  j["pi_power"] = v.pi_power;
  Json powers = Json::array();
  for (const auto& [base, e] : v.powers) powers.push_back({{"base", scalar_json(base)}, {"exponent", scalar_json(e)}});
  j["threshold_powers"] = powers;
  const Interval iv = v.evaluate(128);
  j["interval"] = interval_json(iv);
  j["display"] = "[" + iv.lower_string(5) + ", " + iv.upper_string(5) + "]";
  return j;
}

Json norm_value_json(const NormResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == NormKind::exact) j["exact"] = exact_json(*r.exact);
  if (r.kind == NormKind::estimate || r.samples > 0) {
    j["estimate"] = r.estimate;
    j["stderr"] = r.stderr_;
    j["samples"] = r.samples;
    j["accepted"] = r.accepted;
    j["seed"] = r.seed;
  }
  return j;
}

Json verdict_json(const SpaceVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["criterion"] = v.criterion;
  Json ev = Json::object();
  if (v.irrational_vector) ev["irrational_vector"] = vector_json(*v.irrational_vector);
  if (v.lineality_vector) ev["lineality_vector"] = vector_json(*v.lineality_vector);
  if (v.failing_epsilon) {
    ev["failing_epsilon"] = *v.failing_epsilon;
    ev["ray"] = vector_json(v.ray);
    if (v.negative_constraint) ev["negative_constraint"] = *v.negative_constraint + 1;
    if (v.certificate) {
      Json mult = Json::array();
      for (const auto& y : v.certificate->multipliers) mult.push_back(scalar_json(y));
      ev["lp_status"] = to_string(v.certificate->status);
      ev["lp_multipliers"] = mult;
    }
  }
  if (v.split) ev["m"] = v.split->m;
  j["evidence"] = ev;
  return j;
}

}  // namespace

ExponentVector parse_vector(const std::string& csv, size_t n) {
  ExponentVector out;
  for (const auto& item : split_csv(csv)) out.push_back(Scalar::parse_rational(item));
  if (out.size() != n)
    fail(ErrorCode::invalid_input, "expected " + std::to_string(n) + " comma-separated entries, got '" + csv + "'");
  return out;
}

IntVector parse_int_vector(const std::string& csv, size_t n) {
  IntVector out;
  for (const auto& s : parse_vector(csv, n)) {
    if (!s.is_integer()) fail(ErrorCode::invalid_input, "expected integer entries in '" + csv + "'");
    out.push_back(s.rational_part().get_num());
  }
  return out;
}

std::vector<mpq_class> parse_rational_list(const std::string& csv) {
  std::vector<mpq_class> out;
  for (const auto& item : split_csv(csv)) out.push_back(Scalar::parse_rational(item).rational_part());
  if (out.empty()) fail(ErrorCode::invalid_input, "empty list");
  return out;
}

Json scalar_json(const Scalar& s) { return s.to_string(); }

Json vector_json(const ExponentVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Json interval_json(const Interval& v) { return Json::array({v.lower_string(), v.upper_string()}); }

Json classify_report(const DomainSpec& spec) {
  const auto r = classify_all(spec);
  Json j;
  j["command"] = "classify";
  j["n"] = r.n;
  j["flags"] = {{"fat", "by-representation"},
                {"bounded", r.bounded},
                {"finite_volume", r.finite_volume},
                {"proper_subset", r.proper_subset}};
  Json basis = Json::array();
  for (const auto& b : r.lineality.basis) basis.push_back(vector_json(b));
  Json ibasis = Json::array();
  for (const auto& b : r.rational.integer_basis) ibasis.push_back(int_vector_json(b));
  j["lineality"] = {{"dim", r.lineality.dim()},
                    {"basis", basis},
                    {"rational_type", r.rational.rational},
                    {"integer_basis", ibasis}};
  if (r.split)
    j["product_split"] = {{"m", r.split->m},
                          {"bounded_coords", one_based(r.split->bounded_coords)},
                          {"free_coords", one_based(r.split->free_coords)}};
  else
    j["product_split"] = nullptr;
  Json verdicts;
  for (const char* name : {"Hinf", "L2", "LdiamondAk", "Ak", "Ainf", "SofG", "HinfClosure", "HinfK"}) {
    Json v = verdict_json(r.verdicts.at(name));
    if (std::string(name) == "LdiamondAk" || std::string(name) == "Ak")
      v["k"] = "all";
    else if (std::string(name) == "HinfK")
      v["k"] = "all k >= 1";
    verdicts[name] = v;
  }
  j["verdicts"] = verdicts;
  j["statements"] = r.statements;
  return j;
}

Json norm_report(const NormResult& r, const ExponentVector& nu, const mpq_class& p) {
  Json j;
  j["command"] = "norm";
  j["nu"] = vector_json(nu);
  j["p"] = p.get_str();
  j["value"] = norm_value_json(r);
  return j;
}

Json sup_report(const NormResult& r, const ExponentVector& nu) {
  Json j;
  j["command"] = "sup";
  j["nu"] = vector_json(nu);
  j["value"] = norm_value_json(r);
  return j;
}

Json volume_report(const DomainSpec& spec, std::optional<MonteCarloOptions> mc) {
  Json j;
  j["command"] = "volume";
  const bool finite = has_finite_volume(spec);
  j["finite"] = finite;
  const ExponentVector zero(spec.dim(), Scalar(0));
  if (!finite) {
    j["value"] = norm_value_json(NormResult{});
  } else if (mc) {
    j["value"] = norm_value_json(lp_norm_monte_carlo(spec, zero, 1, *mc));
  } else if (spec.constraints().size() == spec.dim()) {
    j["value"] = norm_value_json(lp_norm_exact_simplicial(SimplicialFrame::from_spec(spec), zero, 1));
  } else {
    j["value"] = nullptr;
    j["note"] = "no closed form for non-simplicial domains; rerun with --mc";
  }
  return j;
}

Json witness_report(const WitnessFunction& w, const std::optional<WitnessCertificate>& cert,
                    const std::vector<mpq_class>& p_list) {
  Json j;
  j["command"] = "witness";
  j["N"] = w.n;
  j["N0"] = w.n0.symbolic;
  j["N0_interval"] = interval_json(w.n0.value);
  j["k"] = w.k;
  j["alpha"] = vector_json(w.alpha_sum);
  j["j0"] = w.j0 + 1;
  j["d"] = scalar_json(w.d);
  Json rescale = Json::array();
  for (size_t i = 0; i < w.frame.dim(); ++i)
    rescale.push_back({{"alpha", vector_json(w.frame.a[i])}, {"c", scalar_json(w.frame.thresholds[i])}});
  j["frame"] = rescale;
  j["function"] = "w^(N*alpha)/(w^alpha_j0 - d) with w^alpha_j = z^alpha_j/c_j";
  if (cert) {
    Json ps = Json::array();
    for (const auto& p : p_list) ps.push_back(p.get_str());
    j["p_list"] = ps;
    Json checks = Json::array();
    for (const auto& c : cert->checks) {
      Json cj{{"kind", c.kind}, {"sigma", c.sigma}};
      if (c.kind == "norm") cj["p"] = c.p.get_str();
      if (c.coord >= 0) cj["coord"] = c.coord + 1;
      cj[c.kind == "norm" ? "norm" : "detail"] = c.detail;
      cj["ok"] = c.ok;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["tail_bound"] = {{"P", cert->tail.p}, {"Q", cert->tail.q}, {"R", cert->tail.r}, {"spot_check", cert->tail_spot_check}};
    j["derivative_bound"] = cert->derivative_bounds.empty() ? 0.0 : cert->derivative_bounds.front();
    j["valid"] = cert->valid;
    if (!cert->valid) j["failure"] = cert->failure;
  }
  return j;
}

Json spectrum_report(const DomainSpec& spec, const FunctionSpace& space, long radius) {
  Json j;
  j["command"] = "spectrum";
  j["space"] = space.to_string();
  j["box"] = radius;
  Json list = Json::array();
  for (const auto& nu : spectrum_box(spec, space, radius)) list.push_back(int_vector_json(nu));
  j["spectrum"] = list;
  const auto orth = spectrum_orthogonality_check(spec, radius);
  j["orthogonality"] = {{"pass", orth.pass}, {"checked", orth.checked}};
  return j;
}

Json integrable_report(const std::optional<IntegrableMonomial>& m) {
  if (!m) return nullptr;
  return {{"nu", int_vector_json(m->nu)}, {"p", m->p.get_str()}};
}

}  // namespace reinhardt
