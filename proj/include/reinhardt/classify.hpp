#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reinhardt/cone.hpp"
#include "reinhardt/domain.hpp"

namespace reinhardt {

/// Function spaces on G. Lp carries p, the k-indexed spaces carry k.
struct FunctionSpace {
  enum class Tag { Hinf, L2, Lp, Ldiamond, LdiamondAk, Ak, Ainf, SofG, HinfClosure, HinfK };
  Tag tag = Tag::Hinf;
  mpq_class p = 2;
  long k = 0;

  static FunctionSpace hinf() { return {Tag::Hinf}; }
  static FunctionSpace l2() { return {Tag::L2}; }
  static FunctionSpace lp(mpq_class p);
  static FunctionSpace ldiamond(long k) { return {Tag::Ldiamond, 2, k}; }
  static FunctionSpace ldiamond_ak(long k) { return {Tag::LdiamondAk, 2, k}; }
  static FunctionSpace ak(long k) { return {Tag::Ak, 2, k}; }
  static FunctionSpace ainf() { return {Tag::Ainf}; }
  static FunctionSpace hinf_k(long k) { return {Tag::HinfK, 2, k}; }

  /// "hinf", "l2", "lp:3/2", "ldiamond:1", "ldiamond-ak:1", "ak:2", "ainf", "sofg",
  /// "hinf-closure", "hinfk:1".
  static FunctionSpace parse(const std::string& text);
  std::string to_string() const;
};

enum class Verdict { yes, no, not_applicable };
const char* to_string(Verdict v);

struct SpaceVerdict {
  Verdict verdict = Verdict::not_applicable;
  /// The criterion that decided the verdict, in words.
  std::string criterion;
  /// No for Hinf: a lineality basis vector outside the span of integer points.
  std::optional<ExponentVector> irrational_vector;
  /// No for L2 / LdiamondAk: a non-zero lineality vector.
  std::optional<ExponentVector> lineality_vector;
  /// No for Ainf: the axis set (0/1 indicator), the approach ray, and a constraint
  /// with a negative exponent on that set.
  std::optional<std::vector<int>> failing_epsilon;
  ExponentVector ray;
  std::optional<size_t> negative_constraint;
  std::optional<LpCertificate> certificate;
  /// Yes for HinfK.
  std::optional<ProductSplit> split;
};

SpaceVerdict classify_hinf(const DomainSpec& spec);
SpaceVerdict classify_l2(const DomainSpec& spec);
/// Independent of k; the verdict holds for every k simultaneously.
SpaceVerdict classify_lp_ak(const DomainSpec& spec, long k);
SpaceVerdict classify_ainf(const DomainSpec& spec);
/// Independent of k >= 1.
SpaceVerdict classify_hinf_k(const DomainSpec& spec, long k);

struct ClassificationReport {
  size_t n = 0;
  bool bounded = false;
  bool finite_volume = false;
  bool proper_subset = false;
  Subspace lineality;
  RationalTypeResult rational;
  std::optional<ProductSplit> split;
  /// Keyed by "Hinf", "L2", "LdiamondAk", "Ak", "Ainf", "SofG", "HinfClosure", "HinfK".
  std::map<std::string, SpaceVerdict> verdicts;
  std::vector<std::string> statements;
};

/// Runs every classifier and checks the implication lattice between the verdicts.
ClassificationReport classify_all(const DomainSpec& spec);

}  // namespace reinhardt
