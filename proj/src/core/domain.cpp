#include "reinhardt/domain.hpp"

#include <cmath>
#include "json.hpp"
#include <set>

#include "reinhardt/cone.hpp"
#include "reinhardt/error.hpp"

namespace reinhardt {

using nlohmann::json;

DomainSpec::DomainSpec(size_t n, std::vector<MonomialConstraint> constraints, std::optional<long> quadratic_d)
    : n_(n), constraints_(std::move(constraints)), quadratic_d_(quadratic_d) {
  require(n_ >= 1, "dimension n must be at least 1");
  if (quadratic_d_) require(is_square_free(*quadratic_d_), "quadratic_d must be a square-free integer >= 2");
  for (size_t i = 0; i < constraints_.size(); ++i) {
    const auto& con = constraints_[i];
    const std::string where = "constraint " + std::to_string(i + 1);
    require(con.alpha.size() == n_, where + ": alpha has length " + std::to_string(con.alpha.size()) +
                                        ", expected " + std::to_string(n_));
    require(!is_zero_vector(con.alpha), where + ": alpha is the zero vector");
    require(con.c.sign() > 0, where + ": threshold c must be positive");
    auto check_field = [&](const Scalar& s) {
      if (!s.is_rational())
        require(quadratic_d_ && s.radicand() == *quadratic_d_, where + ": quadratic scalar needs matching quadratic_d");
    };
    for (const auto& a : con.alpha) check_field(a);
    check_field(con.c);
  }
  if (!has_interior(log_polyhedron(*this))) fail(ErrorCode::empty_domain, "empty log-polyhedron: the constraints are inconsistent");
}

bool DomainSpec::has_integer_normals() const {
  for (const auto& con : constraints_)
    if (!is_integer_vector(con.alpha)) return false;
  return true;
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& item : obj.items())
    require(allowed.count(item.key()) > 0, "unknown field '" + item.key() + "' in " + where);
}

Scalar parse_literal(const json& v, std::optional<long> d, const std::string& where) {
  if (v.is_string()) return Scalar::parse_rational(v.get<std::string>());
  require(v.is_object(), where + ": scalar literal must be a string or {\"a\",\"b\"} object");
  reject_unknown(v, {"a", "b"}, where);
  require(v.contains("a") && v.contains("b") && v["a"].is_string() && v["b"].is_string(),
          where + ": quadratic literal needs string fields \"a\" and \"b\"");
  require(d.has_value(), where + ": quadratic literal requires quadratic_d");
  const Scalar a = Scalar::parse_rational(v["a"].get<std::string>());
  const Scalar b = Scalar::parse_rational(v["b"].get<std::string>());
  return Scalar(a.rational_part(), b.rational_part(), *d);
}

json literal_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational_part().get_str();
  return json{{"a", s.rational_part().get_str()}, {"b", s.irrational_part().get_str()}};
}

}  // namespace

DomainSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::invalid_input, std::string("spec is not valid JSON: ") + e.what());
  }
  require(doc.is_object(), "spec must be a JSON object");
  reject_unknown(doc, {"n", "quadratic_d", "constraints"}, "spec");
  require(doc.contains("n") && doc["n"].is_number_integer(), "spec field \"n\" must be an integer");
  const long long n = doc["n"].get<long long>();
  require(n >= 1, "spec field \"n\" must be >= 1");
  std::optional<long> d;
  if (doc.contains("quadratic_d")) {
    require(doc["quadratic_d"].is_number_integer(), "quadratic_d must be an integer");
    d = doc["quadratic_d"].get<long>();
    require(is_square_free(*d), "quadratic_d must be square-free and >= 2");
  }
  require(doc.contains("constraints") && doc["constraints"].is_array(), "spec field \"constraints\" must be an array");
  std::vector<MonomialConstraint> cons;
  size_t idx = 0;
  for (const auto& c : doc["constraints"]) {
    const std::string where = "constraint " + std::to_string(++idx);
    require(c.is_object(), where + " must be an object");
    reject_unknown(c, {"alpha", "c"}, where);
    require(c.contains("alpha") && c["alpha"].is_array(), where + ": \"alpha\" must be an array");
    require(c.contains("c"), where + ": missing \"c\"");
    require(c["alpha"].size() == static_cast<size_t>(n),
            where + ": dimension mismatch, alpha has " + std::to_string(c["alpha"].size()) + " entries, n = " +
                std::to_string(n));
    MonomialConstraint con;
    for (const auto& a : c["alpha"]) con.alpha.push_back(parse_literal(a, d, where));
    con.c = parse_literal(c["c"], d, where);
    require(con.c.sign() > 0, where + ": threshold c must be positive");
    cons.push_back(std::move(con));
  }
  return DomainSpec(static_cast<size_t>(n), std::move(cons), d);
}

std::string spec_to_json(const DomainSpec& spec) {
  json doc;
  doc["n"] = spec.dim();
  if (spec.quadratic_d()) doc["quadratic_d"] = *spec.quadratic_d();
  doc["constraints"] = json::array();
  for (const auto& con : spec.constraints()) {
    json alpha = json::array();
    for (const auto& a : con.alpha) alpha.push_back(literal_to_json(a));
    doc["constraints"].push_back({{"alpha", alpha}, {"c", literal_to_json(con.c)}});
  }
  return doc.dump();
}

LogPolyhedron log_polyhedron(const DomainSpec& spec) {
  LogPolyhedron p;
  p.dim = spec.dim();
  for (const auto& con : spec.constraints()) {
    p.normals.push_back(con.alpha);
    p.thresholds.push_back(con.c);
  }
  return p;
}

bool log_contains(const LogPolyhedron& poly, const std::vector<LogLinear>& x) {
  require(x.size() == poly.dim, "point dimension mismatch");
  for (size_t i = 0; i < poly.normals.size(); ++i) {
    LogLinear v = -poly.offset(i);
    for (size_t j = 0; j < poly.dim; ++j) v += x[j] * poly.normals[i][j];
    if (v.sign() >= 0) return false;
  }
  return true;
}

bool contains(const DomainSpec& spec, const RadialPoint& p) {
  require(p.radii.size() == spec.dim(), "radial point has wrong dimension");
  for (const auto& r : p.radii) require(r.sign() >= 0, "radii must be non-negative");
  for (const auto& con : spec.constraints()) {
    bool on_positive_axis = false;
    for (size_t l = 0; l < spec.dim(); ++l) {
      if (!p.radii[l].is_zero()) continue;
      const int s = con.alpha[l].sign();
      if (s < 0) return false;
      if (s > 0) on_positive_axis = true;
    }
    if (on_positive_axis) continue;  // the monomial vanishes there: 0 < c
    LogLinear v = -LogLinear::log_of(con.c);
    for (size_t l = 0; l < spec.dim(); ++l)
      if (!p.radii[l].is_zero()) v += LogLinear::log_of(p.radii[l]) * con.alpha[l];
    if (v.sign() >= 0) return false;
  }
  return true;
}

bool is_bounded(const DomainSpec& spec) {
  const LogPolyhedron poly = log_polyhedron(spec);
  for (size_t j = 0; j < spec.dim(); ++j) {
    ExponentVector e(spec.dim(), Scalar(0));
    e[j] = Scalar(1);
    if (lp_optimize(e, poly).certificate.status != LpStatus::optimal) return false;
  }
  return true;
}

bool has_finite_volume(const DomainSpec& spec) {
  return strictly_negative_on_recession(log_polyhedron(spec), ExponentVector(spec.dim(), Scalar(2)));
}

FastMembership::FastMembership(const DomainSpec& spec) : spec_(&spec) {
  for (const auto& con : spec.constraints()) {
    std::vector<double> a;
    for (const auto& x : con.alpha) a.push_back(x.to_double());
    alpha_.push_back(std::move(a));
    log_c_.push_back(LogLinear::log_of(con.c).evaluate(128).mid_double());
  }
}

bool FastMembership::operator()(std::span<const double> radii) const {
  const size_t n = spec_->dim();
  bool uncertain = false;
  for (size_t i = 0; i < alpha_.size(); ++i) {
    bool on_positive_axis = false;
    double v = -log_c_[i];
    double scale = std::abs(log_c_[i]);
    for (size_t l = 0; l < n; ++l) {
      if (radii[l] == 0.0) {
        if (alpha_[i][l] < 0) return false;
        if (alpha_[i][l] > 0) on_positive_axis = true;
        continue;
      }
      const double t = alpha_[i][l] * std::log(radii[l]);
      v += t;
      scale += std::abs(t);
    }
    if (on_positive_axis) continue;
    const double margin = 1e-12 * (1.0 + scale);
    if (v >= margin) return false;
    if (v > -margin) uncertain = true;
  }
  if (!uncertain) return true;
  RadialPoint p;
  for (double r : radii) p.radii.emplace_back(mpq_class(r));
  return contains(*spec_, p);
}

}  // namespace reinhardt
