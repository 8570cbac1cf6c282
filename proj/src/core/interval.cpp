#include "reinhardt/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <memory>

namespace reinhardt {

BigFloat::BigFloat(unsigned precision) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, o.value_);
}

BigFloat& BigFloat::operator=(BigFloat o) noexcept {
  swap(*this, o);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void swap(BigFloat& x, BigFloat& y) noexcept { mpfr_swap(x.value_, y.value_); }

Interval::Interval(unsigned precision) : lo_(precision), hi_(precision) {}

Interval Interval::point(const mpq_class& q, unsigned precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::point(long v, unsigned precision) { return point(mpq_class(v), precision); }

Interval Interval::pi(unsigned precision) {
  Interval r(precision);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt_of(const mpq_class& q, unsigned precision) {
  Interval r = point(q, precision);
  require(mpfr_sgn(r.lo_.get()) >= 0, "square root of a negative value");
  mpfr_sqrt(r.lo_.get(), r.lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& x, const Interval& y) {
  Interval r(std::max(x.precision(), y.precision()));
  mpfr_add(r.lo_.get(), x.lo_.get(), y.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), x.hi_.get(), y.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& x, const Interval& y) { return x + (-y); }

Interval operator*(const Interval& x, const Interval& y) {
  const unsigned prec = std::max(x.precision(), y.precision());
  Interval r(prec);
  BigFloat t(prec);
  mpfr_srcptr xs[2] = {x.lo_.get(), x.hi_.get()};
  mpfr_srcptr ys[2] = {y.lo_.get(), y.hi_.get()};
  bool first = true;
  for (auto a : xs) {
    for (auto b : ys) {
      mpfr_mul(t.get(), a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo_.get())) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) fail(ErrorCode::boundary_indeterminate, "interval division by a value straddling zero");
  Interval inv(y.precision());
  mpfr_ui_div(inv.lo_.get(), 1, y.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi_.get(), 1, y.lo_.get(), MPFR_RNDU);
  return x * inv;
}

Interval Interval::exp() const {
  Interval r(precision());
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (!positive()) fail(ErrorCode::boundary_indeterminate, "logarithm of an interval not strictly positive");
  Interval r(precision());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pow(long e) const {
  Interval r = point(1, precision());
  Interval base = e < 0 ? point(1, precision()) / *this : *this;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * base;
  return r;
}

double Interval::mid_double() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

namespace {

std::string render(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(v)) return "0";
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v, rnd),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mant = d1 d2 ... with value 0.d1d2... * 10^exp
  std::string out;
  if (exp > 0 && exp <= static_cast<mpfr_exp_t>(mant.size())) {
    out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  } else if (exp <= 0 && exp > -20) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else {
    out = mant.substr(0, 1) + "." + mant.substr(1) + "e" + std::to_string(exp - 1);
  }
  if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign + out;
}

}  // namespace

std::string Interval::lower_string(int digits) const { return render(lo_.get(), digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return render(hi_.get(), digits, MPFR_RNDU); }

bool Interval::floor_bounds(mpz_class& lo_floor, mpz_class& hi_floor) const {
  BigFloat f(precision());
  mpfr_floor(f.get(), lo_.get());
  mpfr_get_z(lo_floor.get_mpz_t(), f.get(), MPFR_RNDD);
  mpfr_floor(f.get(), hi_.get());
  mpfr_get_z(hi_floor.get_mpz_t(), f.get(), MPFR_RNDD);
  return lo_floor == hi_floor;
}

namespace {

unsigned initial_cap() {
  if (const char* env = std::getenv("REINHARDT_PRECISION")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64 && v <= (1UL << 20)) return static_cast<unsigned>(v);
  }
  return 1024;
}

std::atomic<unsigned>& cap_storage() {
  static std::atomic<unsigned> cap{initial_cap()};
  return cap;
}

}  // namespace

unsigned precision_cap() { return cap_storage().load(); }

void set_precision_cap(unsigned bits) {
  require(bits >= 64, "precision cap must be at least 64 bits");
  cap_storage().store(bits);
}

std::vector<unsigned> precision_ladder() {
  std::vector<unsigned> ladder;
  const unsigned cap = precision_cap();
  for (unsigned p = 64; p < cap; p *= 2) ladder.push_back(p);
  ladder.push_back(cap);
  return ladder;
}

}  // namespace reinhardt
