#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equigen/expansion.hpp"

namespace equigen::lifting {

using expansion::LocalModel;

// Singular points p_1..p_e with their local models. Point indices are
// 1-based throughout this module.
struct SingularConfig {
  std::vector<LocalModel> points;

  // Throws UsageError for an empty list.
  static SingularConfig make(std::vector<LocalModel> points);
  int size() const { return static_cast<int>(points.size()); }
  const LocalModel& at(int j) const;
};

struct Weights {
  long M = 1;
  std::vector<long> d;  // d[j-1] = M / (b_j + 1)
};

Weights computeWeights(const SingularConfig& config);

struct PairIndex {
  int j = 1;
  int m = 1;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

// d_j (b_j + a_j - m).
long pairWeight(const SingularConfig& config, const Weights& w, PairIndex p);

// (j,m) > (j',m') iff the pair weight is smaller, ties broken by larger j.
std::strong_ordering pairCompare(const SingularConfig& config, PairIndex lhs, PairIndex rhs);

// Formal residue data of a section: (j, m) -> coefficient of s_j^{-m}.
struct SectionProfile {
  std::string id;
  std::map<PairIndex, Rational> residues;
};

// Throws UsageError for indices outside the config, m outside [1, a_j - 1]
// or zero coefficients.
void validateProfile(const SingularConfig& config, const SectionProfile& section);

struct SectionOrd {
  std::optional<PairIndex> P;  // nullopt for an empty profile
  std::optional<long> ord;     // nullopt means infinity
};

SectionOrd sectionOrd(const SingularConfig& config, const SectionProfile& section);
// min over psupp of the pair weight; the second characterization of ord.
std::optional<long> sectionOrdByMinimum(const SingularConfig& config, const SectionProfile& section);

struct BasisEntry {
  SectionProfile section;  // reduced representative; keeps the pivot's id
  std::vector<std::pair<std::string, Rational>> combination;
  PairIndex P;
  long ord = 0;
};

struct BasisI {
  std::vector<BasisEntry> entries;          // decreasing ord
  std::vector<std::string> holomorphic;     // empty profiles (ord infinity)
};

// Greedy filtration basis with pairwise distinct P. Dependent inputs throw
// UsageError naming the first section that lies in the span of earlier ones.
BasisI buildBasisI(const SingularConfig& config, const std::vector<SectionProfile>& sections);

struct StarTerm {
  int j = 1;
  int m = 1;
  int n = 1;  // F_{-n}, n = a_j - m
  Rational coefficient;
  MPoly F;  // over coefficientVars(a_j)
};

struct StarEquation {
  std::string sectionId;
  long ord = 0;
  std::vector<StarTerm> terms;
};

struct StarSystem {
  SingularConfig config;
  std::vector<StarEquation> equations;
};

// sum_q a_j r_q F_{-(a_j - m_q)}(c^{(j)}) = 0 over the pairs of psupp at the
// section's order. A single-term equation is normalized to coefficient 1.
StarSystem buildStarSystem(const SingularConfig& config, const std::vector<SectionProfile>& sections);

using BlockPoints = std::vector<std::vector<Rational>>;

Rational evaluateStar(const StarEquation& eq, const BlockPoints& points);
bool starSatisfied(const StarSystem& system, const BlockPoints& points);

// Exact n-th root of x in Q, if any (real root, so negative x needs odd n).
std::optional<Rational> rationalRoot(const Rational& x, int n);

// Rescales block j by c_k -> alpha^k c_k so that `eq` vanishes. Needs block
// j to occur in exactly one term, a nonzero value of that term and of the
// remaining sum, and a rational alpha. Returns nullopt otherwise.
std::optional<BlockPoints> rebalanceBlock(const StarEquation& eq, const BlockPoints& points, int j);

// Residue-matrix helpers: row span of the nonempty profiles.
bool inResidueSpan(const SingularConfig& config, const std::vector<SectionProfile>& sections,
                   const std::map<PairIndex, Rational>& vector);

}  // namespace equigen::lifting
