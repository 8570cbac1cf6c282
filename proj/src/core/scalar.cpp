#include "reinhardt/scalar.hpp"

#include <cctype>

#include "reinhardt/error.hpp"
#include "reinhardt/interval.hpp"

namespace reinhardt {

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) {
    d_ = 0;
  } else {
    require(is_square_free(d_), "quadratic radicand must be square-free and >= 2");
  }
}

Scalar Scalar::parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  require(valid_int(num, true) && valid_int(den, false), "malformed rational literal '" + text + "'");
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  require(q != 0, "zero denominator in literal '" + text + "'");
  return Scalar(mpq_class(p, q));
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and b^2 d wins. Equality is impossible for square-free d.
  const mpq_class a2 = a_ * a_;
  const mpq_class b2d = b_ * b_ * d_;
  return a2 > b2d ? sa : sb;
}

void Scalar::check_compatible(const Scalar& o) const {
  if (!is_rational() && !o.is_rational() && d_ != o.d_)
    fail(ErrorCode::invalid_input, "mixing quadratic scalars with different radicands");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_compatible(o);
  if (is_rational()) d_ = o.d_;
  a_ += o.a_;
  b_ += o.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_compatible(o);
  const long d = is_rational() ? o.d_ : d_;
  const mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
  const mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(ErrorCode::invalid_input, "division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  const mpq_class norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  *this *= o.conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = Scalar(1) / base;
    e = -e;
  }
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Interval Scalar::to_interval(unsigned precision) const {
  Interval r = Interval::point(a_, precision);
  if (!is_rational()) r = r + Interval::point(b_, precision) * Interval::sqrt_of(mpq_class(d_), precision);
  return r;
}

double Scalar::to_double() const {
  if (is_rational()) return a_.get_d();
  return to_interval(128).mid_double();
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string s = sgn(a_) == 0 ? "" : a_.get_str();
  if (sgn(b_) > 0 && !s.empty()) s += "+";
  if (b_ == -1)
    s += "-";
  else if (b_ != 1)
    s += b_.get_str() + "*";
  return s + "sqrt(" + std::to_string(d_) + ")";
}

mpz_class floor(const Scalar& x) {
  if (x.is_rational()) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.rational_part().get_num_mpz_t(), x.rational_part().get_den_mpz_t());
    return r;
  }
  // An irrational quadratic value is never an integer, so the ladder terminates.
  for (unsigned prec : precision_ladder()) {
    mpz_class lo, hi;
    if (x.to_interval(prec).floor_bounds(lo, hi)) return lo;
  }
  fail(ErrorCode::boundary_indeterminate, "boundary-indeterminate: floor of " + x.to_string());
}

mpz_class ceil(const Scalar& x) { return -floor(-x); }

Scalar dot(const ExponentVector& u, const ExponentVector& v) {
  require(u.size() == v.size(), "dimension mismatch in dot product");
  Scalar s;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

bool is_zero_vector(const ExponentVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_integer_vector(const ExponentVector& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

std::string to_string(const ExponentVector& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

bool is_square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace reinhardt
