#include "reinhardt/norms.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <thread>

#include "reinhardt/cone.hpp"

namespace reinhardt {

namespace {

ExponentVector lp_weight(const ExponentVector& nu, const mpq_class& p) {
  ExponentVector w;
  for (const auto& x : nu) w.push_back(Scalar(p) * x + Scalar(2));
  return w;
}

std::vector<double> to_doubles(const ExponentVector& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

struct Moments {
  std::vector<double> sum, sumsq;
  uint64_t accepted = 0;
};

// Runs `body` for every sample, split into fixed substreams that are reduced in
// stream order, so the result does not depend on the thread count.
// body(rng, counter_base, values) fills `values` and returns whether the sample was accepted.
using SampleBody = std::function<bool(const CounterRng&, uint64_t, std::vector<double>&)>;

Moments run_substreams(uint64_t samples, const MonteCarloOptions& opts, size_t width, const SampleBody& body,
                       uint64_t counters_per_sample) {
  require(samples > 0, "sample count must be positive");
  const uint64_t streams = (samples + kSubstreamSize - 1) / kSubstreamSize;
  std::vector<Moments> parts(streams);
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    std::vector<double> values(width);
    for (uint64_t s = next++; s < streams; s = next++) {
      Moments& m = parts[s];
      m.sum.assign(width, 0.0);
      m.sumsq.assign(width, 0.0);
      const CounterRng rng(opts.seed, s);
      const uint64_t count = std::min(kSubstreamSize, samples - s * kSubstreamSize);
      for (uint64_t i = 0; i < count; ++i) {
        std::fill(values.begin(), values.end(), 0.0);
        if (body(rng, i * counters_per_sample, values)) ++m.accepted;
        for (size_t j = 0; j < width; ++j) {
          m.sum[j] += values[j];
          m.sumsq[j] += values[j] * values[j];
        }
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, streams));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Moments total;
  total.sum.assign(width, 0.0);
  total.sumsq.assign(width, 0.0);
  for (const auto& m : parts) {
    total.accepted += m.accepted;
    for (size_t j = 0; j < width; ++j) {
      total.sum[j] += m.sum[j];
      total.sumsq[j] += m.sumsq[j];
    }
  }
  if (total.accepted == 0)
    fail(ErrorCode::invalid_input, "no sample landed in G after " + std::to_string(samples) + " proposals");
  return total;
}

std::pair<double, double> mean_and_stderr(const Moments& m, size_t j, uint64_t n, double scale) {
  const double mean = m.sum[j] / static_cast<double>(n);
  double var = m.sumsq[j] / static_cast<double>(n) - mean * mean;
  if (var < 0) var = 0;
  if (n > 1) var *= static_cast<double>(n) / static_cast<double>(n - 1);
  return {scale * mean, scale * std::sqrt(var / static_cast<double>(n))};
}

}  // namespace

SimplicialFrame SimplicialFrame::from_rows(const Matrix& a, std::vector<Scalar> thresholds) {
  require(a.size() == thresholds.size(), "frame needs one threshold per row");
  const auto inv = inverse(a);
  if (!inv) fail(ErrorCode::invalid_input, "frame rows are not linearly independent");
  SimplicialFrame f;
  f.a = a;
  f.b = *inv;
  f.det_abs = determinant(a).abs();
  f.thresholds = std::move(thresholds);
  return f;
}

SimplicialFrame SimplicialFrame::from_spec(const DomainSpec& spec, const std::vector<size_t>& rows) {
  std::vector<size_t> use = rows;
  if (use.empty()) {
    if (spec.constraints().size() != spec.dim())
      fail(ErrorCode::invalid_input, "domain is not simplicial: needs exactly n constraints or an explicit row choice");
    for (size_t i = 0; i < spec.dim(); ++i) use.push_back(i);
  }
  if (use.size() != spec.dim()) fail(ErrorCode::invalid_input, "a frame needs exactly n rows");
  Matrix a;
  std::vector<Scalar> c;
  for (size_t i : use) {
    if (i >= spec.constraints().size()) fail(ErrorCode::invalid_input, "frame row out of range");
    a.push_back(spec.constraints()[i].alpha);
    c.push_back(spec.constraints()[i].c);
  }
  return from_rows(a, std::move(c));
}

void ExactValue::normalize() {
  std::map<std::string, std::pair<Scalar, Scalar>> merged;
  for (auto& [base, e] : powers) {
    auto [it, inserted] = merged.try_emplace(base.to_string(), base, e);
    if (!inserted) it->second.second += e;
  }
  powers.clear();
  for (auto& [key, be] : merged) {
    auto& [base, e] = be;
    if (e.is_zero() || base == Scalar(1)) continue;
    if (base.is_rational() && e.is_integer()) {
      coefficient *= base.pow(e.rational_part().get_num().get_si());
      continue;
    }
    powers.emplace_back(base, e);
  }
}

LogLinear ExactValue::log() const {
  require(coefficient.sign() > 0, "log of a non-positive value");
  LogLinear l = LogLinear::log_of(coefficient);
  if (pi_power) l += LogLinear::log_pi() * Scalar(pi_power);
  for (const auto& [base, e] : powers) l += LogLinear::log_of(base) * e;
  return l;
}

Interval ExactValue::evaluate(unsigned precision) const {
  Interval v = coefficient.to_interval(precision) * Interval::pi(precision).pow(pi_power);
  for (const auto& [base, e] : powers) {
    const Interval lg = base.to_interval(precision).log();
    v = v * (e.to_interval(precision) * lg).exp();
  }
  return v;
}

std::string ExactValue::symbolic() const {
  std::string out;
  const std::string pi = pi_power == 0 ? "" : (pi_power == 1 ? "pi" : "pi^" + std::to_string(pi_power));
  if (pi.empty()) {
    if (!(coefficient == Scalar(1)) || powers.empty()) out = coefficient.to_string();
  } else if (coefficient.is_rational()) {
    const mpq_class& q = coefficient.rational_part();
    const mpz_class num = q.get_num();
    if (num == -1)
      out = "-";
    else if (num != 1)
      out = num.get_str() + "*";
    out += pi;
    if (q.get_den() != 1) out += "/" + q.get_den().get_str();
  } else {
    out = "(" + coefficient.to_string() + ")*" + pi;
  }
  for (const auto& [base, e] : powers) {
    if (!out.empty()) out += "*";
    out += "(" + base.to_string() + ")^(" + e.to_string() + ")";
  }
  return out;
}

int ExactValue::compare_one() const { return log().sign(); }

const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::exact: return "exact";
    case NormKind::estimate: return "estimate";
    case NormKind::infinite: return "infinite";
    case NormKind::zero_space: return "zero-space";
  }
  return "?";
}

bool monomial_holomorphic(const DomainSpec& spec, const ExponentVector& nu) {
  require(nu.size() == spec.dim(), "exponent has wrong dimension");
  for (size_t l = 0; l < nu.size(); ++l) {
    if (nu[l].sign() >= 0) continue;
    bool avoided = false;
    for (const auto& con : spec.constraints())
      if (con.alpha[l].sign() < 0) avoided = true;
    if (!avoided) return false;
  }
  return true;
}

NormResult sup_norm_monomial(const DomainSpec& spec, const ExponentVector& nu) {
  require(nu.size() == spec.dim(), "exponent has wrong dimension");
  const auto r = lp_optimize(nu, log_polyhedron(spec));
  NormResult out;
  if (r.certificate.status != LpStatus::optimal) return out;
  ExactValue v{Scalar(1), 0, {}};
  for (size_t i = 0; i < spec.constraints().size(); ++i)
    v.powers.emplace_back(spec.constraints()[i].c, r.certificate.multipliers[i]);
  v.normalize();
  out.kind = NormKind::exact;
  out.exact = v;
  return out;
}

bool lp_norm_finite(const DomainSpec& spec, const ExponentVector& nu, const mpq_class& p) {
  require(nu.size() == spec.dim(), "exponent has wrong dimension");
  return strictly_negative_on_recession(log_polyhedron(spec), lp_weight(nu, p));
}

NormResult lp_norm_exact_simplicial(const SimplicialFrame& frame, const ExponentVector& nu, const mpq_class& p) {
  const size_t n = frame.dim();
  require(nu.size() == n, "exponent has wrong dimension");
  const ExponentVector t = frame.t(lp_weight(nu, p));
  NormResult out;
  Scalar denom = frame.det_abs;
  for (const auto& tj : t) {
    if (tj.sign() <= 0) return out;
    denom *= tj;
  }
  ExactValue v{Scalar(mpq_class(mpz_class(1) << n)) / denom, static_cast<long>(n), {}};
  for (size_t j = 0; j < n; ++j) v.powers.emplace_back(frame.thresholds[j], t[j]);
  v.normalize();
  out.kind = NormKind::exact;
  out.exact = v;
  return out;
}

uint64_t CounterRng::bits(uint64_t counter) const {
  uint64_t h = mix64(seed_ + 0x9E3779B97F4A7C15ull * (stream_ + 1));
  h = mix64(h ^ (counter * 0xD1B54A32D192ED03ull + 0x632BE59BD9B4E019ull));
  return mix64(h + 0x9E3779B97F4A7C15ull);
}

double CounterRng::uniform(uint64_t counter) const {
  return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> bounding_radii(const DomainSpec& spec) {
  const auto poly = log_polyhedron(spec);
  std::vector<double> radii;
  for (size_t l = 0; l < spec.dim(); ++l) {
    ExponentVector e(spec.dim(), Scalar(0));
    e[l] = Scalar(1);
    const auto r = lp_optimize(e, poly);
    if (r.certificate.status != LpStatus::optimal) fail(ErrorCode::invalid_input, "domain is unbounded");
    radii.push_back(r.certificate.objective.evaluate(64).exp().upper_double());
  }
  return radii;
}

NormResult lp_norm_monte_carlo(const DomainSpec& spec, const ExponentVector& nu, const mpq_class& p,
                               const MonteCarloOptions& opts) {
  if (!monomial_holomorphic(spec, nu)) fail(ErrorCode::invalid_input, "monomial is not holomorphic on G");
  NormResult out;
  out.seed = opts.seed;
  out.samples = opts.samples;
  if (!lp_norm_finite(spec, nu, p)) return out;
  const auto radii = bounding_radii(spec);
  const size_t n = spec.dim();
  double volume = 1;
  for (double r : radii) volume *= std::numbers::pi * r * r;
  const auto e = to_doubles(nu);
  const double pd = p.get_d();
  const FastMembership inside(spec);
  const auto m = run_substreams(
      opts.samples, opts, 1,
      [&](const CounterRng& rng, uint64_t base, std::vector<double>& values) {
        double r[16];
        double lg = 0;
        for (size_t l = 0; l < n; ++l) {
          r[l] = radii[l] * std::sqrt(rng.uniform(base + l));
          if (e[l] != 0) lg += e[l] * std::log(r[l]);
        }
        if (!inside(std::span<const double>(r, n))) return false;
        values[0] = std::exp(pd * lg);
        return true;
      },
      n);
  std::tie(out.estimate, out.stderr_) = mean_and_stderr(m, 0, opts.samples, volume);
  out.accepted = m.accepted;
  out.kind = NormKind::estimate;
  return out;
}

CoefficientCheck coefficient_inequality_check(const DomainSpec& spec, const std::vector<LaurentTerm>& poly,
                                              const mpq_class& p, const MonteCarloOptions& opts) {
  const size_t n = spec.dim();
  require(n <= 16, "dimension too large for sampling");
  std::vector<std::vector<double>> exps;
  for (const auto& term : poly) {
    ExponentVector nu;
    for (const auto& x : term.nu) nu.emplace_back(mpq_class(x));
    if (nu.size() != n) fail(ErrorCode::invalid_input, "term exponent has wrong dimension");
    if (!monomial_holomorphic(spec, nu)) fail(ErrorCode::invalid_input, "term " + to_string(nu) + " is not holomorphic on G");
    exps.push_back(to_doubles(nu));
  }
  const auto radii = bounding_radii(spec);
  double volume = 1;
  for (double r : radii) volume *= std::numbers::pi * r * r;
  const double pd = p.get_d();
  const FastMembership inside(spec);
  const size_t terms = poly.size();
  const auto m = run_substreams(
      opts.samples, opts, terms + 1,
      [&](const CounterRng& rng, uint64_t base, std::vector<double>& values) {
        double r[16], theta[16];
        for (size_t l = 0; l < n; ++l) {
          r[l] = radii[l] * std::sqrt(rng.uniform(base + 2 * l));
          theta[l] = 2 * std::numbers::pi * rng.uniform(base + 2 * l + 1);
        }
        if (!inside(std::span<const double>(r, n))) return false;
        std::complex<double> f = 0;
        for (size_t t = 0; t < terms; ++t) {
          double lg = 0, arg = 0;
          for (size_t l = 0; l < n; ++l) {
            if (exps[t][l] == 0) continue;
            lg += exps[t][l] * std::log(r[l]);
            arg += exps[t][l] * theta[l];
          }
          const std::complex<double> z = poly[t].coefficient * std::polar(std::exp(lg), arg);
          values[t] = std::pow(std::abs(z), pd);
          f += z;
        }
        values[terms] = std::pow(std::abs(f), pd);
        return true;
      },
      2 * n);
  CoefficientCheck out;
  std::tie(out.total, out.total_stderr) = mean_and_stderr(m, terms, opts.samples, volume);
  out.pass = true;
  for (size_t t = 0; t < terms; ++t) {
    TermCheck tc;
    tc.nu = poly[t].nu;
    std::tie(tc.estimate, tc.stderr_) = mean_and_stderr(m, t, opts.samples, volume);
    const double combined = std::hypot(tc.stderr_, out.total_stderr);
    tc.ok = tc.estimate <= out.total + 3 * combined;
    out.pass = out.pass && tc.ok;
    out.terms.push_back(std::move(tc));
  }
  return out;
}

std::optional<IntegrableMonomial> find_integrable_monomial(const DomainSpec& spec) {
  const auto poly = log_polyhedron(spec);
  if (lineality_space(poly).dim() > 0) return std::nullopt;
  const size_t n = spec.dim();
  auto works = [&](const IntVector& nu, const mpq_class& p) {
    ExponentVector v;
    for (const auto& x : nu) v.emplace_back(mpq_class(x));
    return monomial_holomorphic(spec, v) && strictly_negative_on_recession(poly, lp_weight(v, p));
  };
  for (long radius = 0; radius <= 2; ++radius) {
    for (const mpq_class& p : {mpq_class(1), mpq_class(2)}) {
      IntVector nu(n, mpz_class(-radius));
      for (;;) {
        bool on_shell = radius == 0;
        for (const auto& x : nu)
          if (abs(x) == radius) on_shell = true;
        if (on_shell && works(nu, p)) return IntegrableMonomial{nu, p};
        size_t k = 0;
        while (k < n && nu[k] == radius) nu[k++] = -radius;
        if (k == n) break;
        ++nu[k];
      }
    }
  }
  // alpha_1 + ... + alpha_m lies in the interior of the dual cone when E(log G) = {0},
  // so a large multiple of it dominates the 2 in p nu + 2.
  ExponentVector sum(n, Scalar(0));
  for (const auto& con : spec.constraints())
    for (size_t l = 0; l < n; ++l) sum[l] += con.alpha[l];
  for (long scale = 1; scale <= (1L << 20); scale *= 2) {
    IntVector nu;
    for (const auto& x : sum) nu.push_back(floor(x * Scalar(scale) + Scalar(mpq_class(1, 2))));
    if (works(nu, 1)) return IntegrableMonomial{nu, 1};
  }
  fail(ErrorCode::internal, "no integrable monomial found although E(log G) = {0}");
}

}  // namespace reinhardt
