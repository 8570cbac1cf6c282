#include "reinhardt/witness.hpp"

#include <cmath>
#include <functional>

#include "reinhardt/cone.hpp"

namespace reinhardt {

namespace {

struct N0Term {
  Scalar a;
  bool pi = false;
};

// 2 pi / |det A|^(1/n)
Interval pi_part(const SimplicialFrame& f, unsigned prec) {
  const Interval root = (f.det_abs.to_interval(prec).log() / Interval::point(long(f.dim()), prec)).exp();
  return Interval::point(2, prec) * Interval::pi(prec) / root;
}

Interval term_value(const SimplicialFrame& f, const N0Term& t, unsigned prec) {
  Interval v = t.a.to_interval(prec);
  return t.pi ? v + pi_part(f, prec) : v;
}

long to_long(const Scalar& s) {
  require(s.is_integer(), "expected an integer exponent");
  return s.rational_part().get_num().get_si();
}

std::vector<long> to_longs(const ExponentVector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(to_long(x));
  return out;
}

long double falling(long double m, long s) {
  long double r = 1;
  for (long i = 0; i < s; ++i) r *= m - i;
  return r;
}

mpz_class falling_exact(long m, long s) {
  mpz_class r = 1;
  for (long i = 0; i < s; ++i) r *= m - i;
  return r;
}

// log |w^e| and arg w^e; -inf modulus when a zero radius meets a positive exponent.
std::pair<long double, long double> log_monomial(const std::vector<long>& e, const ComplexPoint& z) {
  long double lg = 0, arg = 0;
  for (size_t l = 0; l < e.size(); ++l) {
    if (e[l] == 0) continue;
    if (z.radii[l] == 0) {
      if (e[l] < 0) fail(ErrorCode::invalid_input, "monomial is singular at the point");
      return {-INFINITY, 0};
    }
    lg += e[l] * std::log(static_cast<long double>(z.radii[l]));
    arg += e[l] * static_cast<long double>(z.phases[l]);
  }
  return {lg, arg};
}

Complex monomial(const std::vector<long>& e, const ComplexPoint& z) {
  const auto [lg, arg] = log_monomial(e, z);
  if (std::isinf(lg)) return 0;
  return std::polar(std::exp(lg), arg);
}

void check_point(const WitnessFunction& w, const ComplexPoint& z) {
  const size_t n = w.alpha_sum.size();
  if (z.radii.size() != n || z.phases.size() != n) fail(ErrorCode::invalid_input, "point has wrong dimension");
  for (double r : z.radii)
    if (!(r >= 0)) fail(ErrorCode::invalid_input, "radii must be non-negative");
}

}  // namespace

SimplicialFrame normalized_frame(const SimplicialFrame& frame) {
  SimplicialFrame f = frame;
  f.thresholds.assign(f.dim(), Scalar(1));
  return f;
}

N0Bound compute_n0(const SimplicialFrame& frame, long k) {
  require(k >= 0, "k must be non-negative");
  const size_t n = frame.dim();
  const ExponentVector t2 = frame.t(ExponentVector(n, Scalar(2)));
  std::vector<N0Term> terms;
  for (size_t j = 0; j < n; ++j) {
    Scalar best(0);
    for (size_t l = 0; l < n; ++l) best = std::max(best, frame.b[l][j]);
    N0Term t{best * Scalar(k + 1), false};
    // The p-term (2 pi / |det A|^(1/n) - T_j(2)) / p peaks at p = 1 when positive and tends to 0 otherwise.
    N0Term with_pi{t.a - t2[j], true};
    const int s = resolve_sign([&](unsigned prec) { return pi_part(frame, prec) - t2[j].to_interval(prec); },
                               "sign of the N0 p-term");
    terms.push_back(s > 0 ? with_pi : t);
  }
  size_t best = 0;
  for (size_t j = 1; j < n; ++j) {
    const N0Term& x = terms[j];
    const N0Term& y = terms[best];
    int cmp;
    if (x.pi == y.pi)
      cmp = (x.a - y.a).sign();
    else
      cmp = resolve_sign([&](unsigned prec) { return term_value(frame, x, prec) - term_value(frame, y, prec); },
                         "comparison of N0 terms");
    if (cmp > 0) best = j;
  }
  N0Bound out;
  const N0Term& t = terms[best];
  out.j = best;
  out.pi_term = t.pi;
  out.sigma_term = t.a;
  out.value = term_value(frame, t, precision_cap());
  if (!t.pi) {
    out.n_min = ceil(t.a).get_si();
    out.symbolic = t.a.to_string();
  } else {
    out.n_min = 0;
    for (unsigned prec : precision_ladder()) {
      mpz_class lo, hi;
      const Interval v = term_value(frame, t, prec);
      v.floor_bounds(lo, hi);
      out.n_min = hi.get_si() + 1;
      if (lo == hi) break;
    }
    std::string pi = "2*pi";
    if (!(frame.det_abs == Scalar(1))) pi += "/(" + frame.det_abs.to_string() + ")^(1/" + std::to_string(n) + ")";
    if (t.a.is_zero())
      out.symbolic = pi;
    else if (t.a.sign() < 0)
      out.symbolic = pi + "-" + (-t.a).to_string();
    else
      out.symbolic = pi + "+" + t.a.to_string();
  }
  return out;
}

WitnessFunction build_witness(const WitnessSpec& spec) {
  const SimplicialFrame& frame = spec.frame;
  const size_t n = frame.dim();
  for (const auto& row : frame.a)
    if (!is_integer_vector(row)) fail(ErrorCode::invalid_input, "witness functions need integer normals");
  if (spec.j0 >= n) fail(ErrorCode::invalid_input, "j0 out of range");
  if (spec.exterior.radii.size() != n) fail(ErrorCode::invalid_input, "exterior point has wrong dimension");
  WitnessFunction w;
  w.k = spec.k;
  w.j0 = spec.j0;
  w.frame = frame;
  w.n0 = compute_n0(frame, spec.k);
  w.n = w.n0.n_min;
  w.alpha_sum.assign(n, Scalar(0));
  for (const auto& row : frame.a)
    for (size_t l = 0; l < n; ++l) w.alpha_sum[l] += row[l];
  Scalar value(1);
  for (size_t l = 0; l < n; ++l) {
    const Scalar& b = spec.exterior.radii[l];
    const long e = to_long(frame.a[spec.j0][l]);
    if (b.sign() < 0) fail(ErrorCode::invalid_input, "exterior radii must be non-negative");
    if (e == 0) continue;
    if (b.is_zero()) {
      if (e < 0) fail(ErrorCode::invalid_input, "exterior point lies on a singular axis of z^alpha_j0");
      value = Scalar(0);
      break;
    }
    value *= b.pow(e);
  }
  w.d = value / frame.thresholds[spec.j0];
  if (w.d <= Scalar(1)) fail(ErrorCode::invalid_input, "need |b^alpha_j0| > c_j0 at the exterior point");
  return w;
}

TailBound derive_tail_bound(const WitnessFunction& w, long k) {
  if (k == 0) return {1, 1, 0};
  TailBound tb{0, 1, k};
  const auto alpha = to_longs(w.alpha_sum);
  const auto a0 = to_longs(w.frame.a[w.j0]);
  for (size_t l = 0; l < alpha.size(); ++l) {
    tb.p = std::max(tb.p, w.n * std::labs(alpha[l]) + k);
    tb.q = std::max(tb.q, std::labs(a0[l]));
  }
  return tb;
}

bool spot_check_tail_bound(const WitnessFunction& w, const TailBound& tb, long k, long mu_max) {
  const auto alpha = to_longs(w.alpha_sum);
  const auto a0 = to_longs(w.frame.a[w.j0]);
  const auto sigmas = multi_indices(alpha.size(), k);
  for (long mu = 0; mu <= mu_max; ++mu) {
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), mpz_class(tb.p + tb.q * mu).get_mpz_t(), static_cast<unsigned long>(tb.r));
    for (const auto& s : sigmas) {
      mpz_class c = 1;
      for (size_t l = 0; l < alpha.size(); ++l) c *= falling_exact(w.n * alpha[l] + mu * a0[l], s[l]);
      if (abs(c) > bound) return false;
    }
  }
  return true;
}

Complex eval_witness(const WitnessFunction& w, const ComplexPoint& z) {
  check_point(w, z);
  std::vector<long> e = to_longs(w.alpha_sum);
  for (auto& x : e) x *= w.n;
  const Complex den = monomial(to_longs(w.frame.a[w.j0]), z) - static_cast<long double>(w.d.to_double());
  return monomial(e, z) / den;
}

SeriesValue eval_witness_derivative(const WitnessFunction& w, const std::vector<long>& sigma, const ComplexPoint& z,
                                    double tol) {
  check_point(w, z);
  const size_t n = w.alpha_sum.size();
  if (sigma.size() != n) fail(ErrorCode::invalid_input, "sigma has wrong dimension");
  long order = 0;
  for (long s : sigma) {
    if (s < 0) fail(ErrorCode::invalid_input, "sigma must be non-negative");
    order += s;
  }
  if (order > w.k) fail(ErrorCode::invalid_input, "|sigma| exceeds k");
  for (const auto& row : w.frame.a) {
    const auto [lg, arg] = log_monomial(to_longs(row), z);
    if (!(lg < 0)) fail(ErrorCode::invalid_input, "point lies outside the normalized domain");
  }
  const auto alpha = to_longs(w.alpha_sum);
  const auto a0 = to_longs(w.frame.a[w.j0]);
  std::vector<long> base(n);
  for (size_t l = 0; l < n; ++l) base[l] = w.n * alpha[l] - sigma[l];
  const long double d = w.d.to_double();
  const Complex step = monomial(a0, z) / d;
  const long double q = std::abs(step);
  Complex cur = monomial(base, z) / d;
  const long double amp = std::abs(cur);
  const TailBound tb = derive_tail_bound(w, w.k);
  auto bound_term = [&](long mu) {
    return amp * std::pow(static_cast<long double>(tb.p + tb.q * mu), static_cast<long double>(tb.r)) *
           std::pow(q, static_cast<long double>(mu));
  };
  SeriesValue out;
  out.value = 0;
  for (long mu = 0; mu < 1000000; ++mu) {
    long double c = 1;
    for (size_t l = 0; l < n; ++l) c *= falling(static_cast<long double>(w.n * alpha[l] + mu * a0[l]), sigma[l]);
    out.value -= c * cur;
    cur *= step;
    out.terms = mu + 1;
    if (amp == 0 || q == 0) return out;
    const long double rho =
        std::pow(static_cast<long double>(tb.p + tb.q * (mu + 2)) / (tb.p + tb.q * (mu + 1)), static_cast<long double>(tb.r)) *
        q;
    if (rho < 1 && bound_term(mu + 1) / (1 - rho) < tol) return out;
  }
  fail(ErrorCode::invalid_input, "series tolerance not reached within 10^6 terms");
}

ComplexPoint singular_point(const WitnessFunction& w, const std::vector<double>& base) {
  const auto a0 = to_longs(w.frame.a[w.j0]);
  require(base.size() == a0.size(), "base point has wrong dimension");
  ComplexPoint z{base, std::vector<double>(base.size(), 0.0)};
  size_t l = 0;
  while (l < a0.size() && a0[l] == 0) ++l;
  require(l < a0.size(), "zero normal");
  long double rest = 0;
  for (size_t m = 0; m < a0.size(); ++m)
    if (m != l && a0[m] != 0) rest += a0[m] * std::log(static_cast<long double>(base[m]));
  z.radii[l] = static_cast<double>(std::exp((std::log(static_cast<long double>(w.d.to_double())) - rest) / a0[l]));
  return z;
}

std::vector<std::vector<long>> multi_indices(size_t n, long k) {
  std::vector<std::vector<long>> out;
  for (long total = 0; total <= k; ++total) {
    std::vector<long> s(n, 0);
    std::function<void(size_t, long)> fill = [&](size_t pos, long left) {
      if (pos + 1 == n) {
        s[pos] = left;
        out.push_back(s);
        return;
      }
      for (long v = left; v >= 0; --v) {
        s[pos] = v;
        fill(pos + 1, left - v);
      }
    };
    if (n == 0) {
      if (total == 0) out.emplace_back();
    } else {
      fill(0, total);
    }
  }
  return out;
}

WitnessCertificate verify_witness_membership(const WitnessFunction& w, long k, const std::vector<mpq_class>& p_list) {
  WitnessCertificate cert;
  const SimplicialFrame frame = normalized_frame(w.frame);
  const size_t n = frame.dim();
  const auto alpha = to_longs(w.alpha_sum);

  std::vector<MonomialConstraint> cons;
  for (const auto& row : frame.a) cons.push_back({row, Scalar(1)});
  const auto poly = log_polyhedron(DomainSpec(n, cons));
  std::vector<bool> axis(n, false);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<size_t> s;
    for (size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) s.push_back(j);
    if (approach(poly, s).approaches)
      for (size_t j : s) axis[j] = true;
  }

  auto nonneg = [](const ExponentVector& t) {
    for (const auto& x : t)
      if (x.sign() < 0) return false;
    return true;
  };
  cert.valid = true;
  auto record = [&](WitnessCheck c) {
    if (!c.ok && cert.failure.empty())
      cert.failure = c.kind + " check failed for sigma " + to_string(ExponentVector(c.sigma.begin(), c.sigma.end()));
    cert.valid = cert.valid && c.ok;
    cert.checks.push_back(std::move(c));
  };
  for (const auto& sigma : multi_indices(n, k)) {
    ExponentVector nu;
    for (size_t l = 0; l < n; ++l) nu.emplace_back(w.n * alpha[l] - sigma[l]);
    for (const auto& p : p_list) {
      WitnessCheck c{"norm", sigma, p, -1, "", false};
      const auto r = lp_norm_exact_simplicial(frame, nu, p);
      if (r.kind == NormKind::exact) {
        c.detail = r.exact->symbolic();
        c.ok = r.exact->compare_one() <= 0;
      } else {
        c.detail = "infinite";
      }
      record(std::move(c));
    }
    WitnessCheck cone{"cone", sigma, 0, -1, "", false};
    const auto t = frame.t(nu);
    cone.detail = "T = " + to_string(t);
    cone.ok = nonneg(t);
    record(std::move(cone));
    for (size_t l = 0; l < n; ++l) {
      if (!axis[l]) continue;
      ExponentVector shifted = nu;
      shifted[l] -= Scalar(1);
      WitnessCheck v{"vanishing", sigma, 0, static_cast<long>(l), "", false};
      const auto ts = frame.t(shifted);
      v.detail = "T = " + to_string(ts);
      v.ok = nonneg(ts);
      record(std::move(v));
    }
  }
  cert.tail = derive_tail_bound(w, k);
  cert.tail_spot_check = spot_check_tail_bound(w, cert.tail, k, 1000);
  if (!cert.tail_spot_check) {
    cert.valid = false;
    if (cert.failure.empty()) cert.failure = "tail bound spot check failed";
  }
  // sup over D of |d^sigma f_N| <= sum_mu (P + Q mu)^R / d^{mu+1}, since |w^{N alpha - sigma}| <= 1 and |w^alpha_j0| < 1.
  const long double d = w.d.to_double();
  long double sum = 0;
  for (long mu = 0; mu < 1000000; ++mu) {
    const long double term = std::pow(static_cast<long double>(cert.tail.p + cert.tail.q * mu),
                                      static_cast<long double>(cert.tail.r)) /
                             std::pow(d, static_cast<long double>(mu + 1));
    sum += term;
    if (mu > 10 && term < 1e-18L * sum) break;
  }
  cert.derivative_bounds.assign(multi_indices(n, k).size(), static_cast<double>(sum));
  return cert;
}

}  // namespace reinhardt
