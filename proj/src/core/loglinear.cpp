#include "reinhardt/loglinear.hpp"

#include <set>

namespace reinhardt {

LogLinear LogLinear::log_of(const Scalar& c) {
  require(c.sign() > 0, "logarithm of a non-positive threshold " + c.to_string());
  LogLinear r;
  if (c.is_rational()) {
    const mpz_class num = c.rational_part().get_num();
    const mpz_class den = c.rational_part().get_den();
    if (num > 1) r.int_logs_[num] += Scalar(1);
    if (den > 1) r.int_logs_[den] -= Scalar(1);
  } else {
    r.other_logs_[c.to_string()] = {c, Scalar(1)};
  }
  return r;
}

LogLinear LogLinear::log_pi() {
  LogLinear r;
  r.other_logs_["pi"] = {Scalar(0), Scalar(1)};
  return r;
}

void LogLinear::prune() {
  std::erase_if(int_logs_, [](const auto& kv) { return kv.second.is_zero(); });
  std::erase_if(other_logs_, [](const auto& kv) { return kv.second.second.is_zero(); });
}

LogLinear LogLinear::operator-() const {
  LogLinear r = *this;
  r *= Scalar(-1);
  return r;
}

LogLinear& LogLinear::operator+=(const LogLinear& o) {
  constant_ += o.constant_;
  for (const auto& [atom, coef] : o.int_logs_) int_logs_[atom] += coef;
  for (const auto& [key, entry] : o.other_logs_) {
    auto it = other_logs_.find(key);
    if (it == other_logs_.end())
      other_logs_.emplace(key, entry);
    else
      it->second.second += entry.second;
  }
  prune();
  return *this;
}

LogLinear& LogLinear::operator-=(const LogLinear& o) { return *this += -o; }

LogLinear& LogLinear::operator*=(const Scalar& s) {
  constant_ *= s;
  for (auto& kv : int_logs_) kv.second *= s;
  for (auto& kv : other_logs_) kv.second.second *= s;
  prune();
  return *this;
}

bool LogLinear::exactly_decidable() const { return other_logs_.empty(); }

std::pair<std::vector<mpz_class>, std::vector<std::map<mpz_class, long>>> coprime_base(
    const std::vector<mpz_class>& values) {
  std::vector<std::map<mpz_class, long>> reps;
  for (const auto& v : values) reps.push_back({{v, 1}});
  for (;;) {
    std::set<mpz_class> base;
    for (const auto& r : reps)
      for (const auto& kv : r) base.insert(kv.first);
    bool split = false;
    for (auto i = base.begin(); i != base.end() && !split; ++i) {
      for (auto j = std::next(i); j != base.end() && !split; ++j) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), i->get_mpz_t(), j->get_mpz_t());
        if (g == 1) continue;
        const mpz_class x = *i, y = *j;
        for (auto& r : reps) {
          std::map<mpz_class, long> next;
          for (const auto& [b, e] : r) {
            if (b == x || b == y) {
              const mpz_class rest = b / g;
              if (rest > 1) next[rest] += e;
              next[g] += e;
            } else {
              next[b] += e;
            }
          }
          r = std::move(next);
        }
        split = true;
      }
    }
    if (!split) return {std::vector<mpz_class>(base.begin(), base.end()), reps};
  }
}

bool LogLinear::is_zero() const {
  if (!exactly_decidable()) return sign() == 0;
  if (int_logs_.empty()) return constant_.is_zero();
  if (!constant_.is_zero()) return false;
  std::vector<mpz_class> atoms;
  std::vector<Scalar> coefs;
  for (const auto& [atom, coef] : int_logs_) {
    atoms.push_back(atom);
    coefs.push_back(coef);
  }
  const auto [base, reps] = coprime_base(atoms);
  std::map<mpz_class, Scalar> total;
  for (size_t k = 0; k < reps.size(); ++k)
    for (const auto& [b, e] : reps[k]) total[b] += coefs[k] * Scalar(e);
  for (const auto& kv : total)
    if (!kv.second.is_zero()) return false;
  return true;
}

int LogLinear::sign() const {
  if (!has_logs()) return constant_.sign();
  if (exactly_decidable() && is_zero()) return 0;
  return resolve_sign([this](unsigned prec) { return evaluate(prec); }, "sign of " + to_string());
}

Interval LogLinear::evaluate(unsigned precision) const {
  Interval r = constant_.to_interval(precision);
  for (const auto& [atom, coef] : int_logs_)
    r = r + coef.to_interval(precision) * Interval::point(mpq_class(atom), precision).log();
  for (const auto& [key, entry] : other_logs_) {
    const Interval atom = key == "pi" ? Interval::pi(precision) : entry.first.to_interval(precision);
    r = r + entry.second.to_interval(precision) * atom.log();
  }
  return r;
}

std::string LogLinear::to_string() const {
  std::string s;
  auto term = [&s](const Scalar& coef, const std::string& atom) {
    std::string c = coef.to_string();
    if (!coef.is_rational()) c = "(" + c + ")";
    if (!s.empty()) s += " + ";
    s += (coef == Scalar(1) ? "" : c + "*") + "log(" + atom + ")";
  };
  if (!constant_.is_zero() || !has_logs()) s = constant_.to_string();
  for (const auto& [atom, coef] : int_logs_) term(coef, atom.get_str());
  for (const auto& [key, entry] : other_logs_) term(entry.second, key);
  return s;
}

}  // namespace reinhardt
