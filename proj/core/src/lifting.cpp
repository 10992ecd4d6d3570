#include "equigen/lifting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "equigen/errors.hpp"

namespace equigen::lifting {

namespace {

using Vec = std::map<PairIndex, Rational>;

std::string pairText(PairIndex p) { return "(" + std::to_string(p.j) + "," + std::to_string(p.m) + ")"; }

void axpy(Vec& target, const Rational& scale, const Vec& source) {
  for (const auto& [k, v] : source) {
    auto it = target.find(k);
    if (it == target.end()) {
      target.emplace(k, scale * v);
      continue;
    }
    it->second += scale * v;
    if (it->second.isZero()) target.erase(it);
  }
}

// Reduced row echelon form built incrementally; every pivot occurs in
// exactly one row.
class Echelon {
 public:
  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = v.find(pivots_[i]);
      if (it == v.end()) continue;
      const Rational c = it->second;
      axpy(v, -c, rows_[i]);
    }
    return v;
  }

  // Returns false when v lies in the current span.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    const PairIndex pivot = r.begin()->first;
    const Rational inv = r.begin()->second.inverse();
    for (auto& [k, val] : r) val *= inv;
    for (auto& row : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational c = it->second;
      axpy(row, -c, r);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::vector<Vec> rows_;
  std::vector<PairIndex> pivots_;
};

PairIndex maxPair(const SingularConfig& config, const Vec& v) {
  PairIndex best = v.begin()->first;
  for (const auto& [k, val] : v) {
    if (pairCompare(config, k, best) == std::strong_ordering::greater) best = k;
  }
  return best;
}

}  // namespace

SingularConfig SingularConfig::make(std::vector<LocalModel> points) {
  if (points.empty()) throw UsageError("singular configuration needs at least one point");
  for (const auto& p : points) LocalModel::make(p.a, p.b);
  return SingularConfig{std::move(points)};
}

const LocalModel& SingularConfig::at(int j) const {
  if (j < 1 || j > size())
    throw UsageError("point index " + std::to_string(j) + " outside [1, " + std::to_string(size()) + "]");
  return points[j - 1];
}

Weights computeWeights(const SingularConfig& config) {
  Weights w;
  for (const auto& p : config.points) w.M = std::lcm(w.M, static_cast<long>(p.b + 1));
  for (const auto& p : config.points) w.d.push_back(w.M / (p.b + 1));
  return w;
}

long pairWeight(const SingularConfig& config, const Weights& w, PairIndex p) {
  const LocalModel& model = config.at(p.j);
  return w.d[p.j - 1] * (model.b + model.a - p.m);
}

std::strong_ordering pairCompare(const SingularConfig& config, PairIndex lhs, PairIndex rhs) {
  const Weights w = computeWeights(config);
  const long wl = pairWeight(config, w, lhs);
  const long wr = pairWeight(config, w, rhs);
  if (wl != wr) return wl < wr ? std::strong_ordering::greater : std::strong_ordering::less;
  return lhs.j <=> rhs.j;
}

void validateProfile(const SingularConfig& config, const SectionProfile& section) {
  for (const auto& [p, r] : section.residues) {
    const LocalModel& model = config.at(p.j);
    if (p.m < 1 || p.m > model.a - 1)
      throw UsageError("section '" + section.id + "': pole order m=" + std::to_string(p.m) + " at point " +
                       std::to_string(p.j) + " outside [1, " + std::to_string(model.a - 1) + "]");
    if (r.isZero()) throw UsageError("section '" + section.id + "': zero residue stored at " + pairText(p));
  }
}

SectionOrd sectionOrd(const SingularConfig& config, const SectionProfile& section) {
  SectionOrd out;
  if (section.residues.empty()) return out;
  const PairIndex p = maxPair(config, section.residues);
  out.P = p;
  out.ord = pairWeight(config, computeWeights(config), p);
  return out;
}

std::optional<long> sectionOrdByMinimum(const SingularConfig& config, const SectionProfile& section) {
  if (section.residues.empty()) return std::nullopt;
  const Weights w = computeWeights(config);
  long best = std::numeric_limits<long>::max();
  for (const auto& [p, r] : section.residues) best = std::min(best, pairWeight(config, w, p));
  return best;
}

BasisI buildBasisI(const SingularConfig& config, const std::vector<SectionProfile>& sections) {
  BasisI out;
  Echelon span;
  struct Row {
    std::string id;
    Vec residues;
    Vec combination;  // over input positions, encoded as (index+1, 1)
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const SectionProfile& s = sections[i];
    validateProfile(config, s);
    if (s.residues.empty()) {
      out.holomorphic.push_back(s.id);
      continue;
    }
    if (!span.insert(s.residues))
      throw UsageError("section '" + s.id + "' is a linear combination of the sections listed before it");
    rows.push_back(Row{s.id, s.residues, Vec{{PairIndex{static_cast<int>(i) + 1, 1}, Rational(1)}}});
  }

  const Weights w = computeWeights(config);
  while (!rows.empty()) {
    std::size_t pick = 0;
    PairIndex best = maxPair(config, rows[0].residues);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const PairIndex p = maxPair(config, rows[i].residues);
      if (pairCompare(config, p, best) == std::strong_ordering::greater) {
        best = p;
        pick = i;
      }
    }
    Row pivot = std::move(rows[pick]);
    rows.erase(rows.begin() + static_cast<long>(pick));
    const Rational lead = pivot.residues.at(best);
    for (auto& row : rows) {
      if (maxPair(config, row.residues) != best) continue;
      const Rational c = row.residues.at(best) / lead;
      axpy(row.residues, -c, pivot.residues);
      axpy(row.combination, -c, pivot.combination);
      if (row.residues.empty())
        throw InternalConsistencyError("buildBasisI: section '" + row.id + "' vanished during elimination");
    }
    BasisEntry entry;
    entry.section = SectionProfile{pivot.id, pivot.residues};
    for (const auto& [k, c] : pivot.combination) entry.combination.emplace_back(sections[k.j - 1].id, c);
    entry.P = best;
    entry.ord = pairWeight(config, w, best);
    out.entries.push_back(std::move(entry));
  }
  std::sort(out.entries.begin(), out.entries.end(), [&](const BasisEntry& x, const BasisEntry& y) {
    if (x.ord != y.ord) return x.ord > y.ord;
    return pairCompare(config, x.P, y.P) == std::strong_ordering::greater;
  });
  return out;
}

StarSystem buildStarSystem(const SingularConfig& config, const std::vector<SectionProfile>& sections) {
  StarSystem system{config, {}};
  const Weights w = computeWeights(config);
  for (const auto& s : sections) {
    validateProfile(config, s);
    const SectionOrd so = sectionOrd(config, s);
    if (!so.ord) continue;
    StarEquation eq{s.id, *so.ord, {}};
    for (const auto& [p, r] : s.residues) {
      if (pairWeight(config, w, p) != *so.ord) continue;
      const LocalModel& model = config.at(p.j);
      const int n = model.a - p.m;
      eq.terms.push_back(StarTerm{p.j, p.m, n, Rational(model.a) * r, expansion::bigF(model, n)});
    }
    if (eq.terms.size() == 1) eq.terms[0].coefficient = Rational(1);
    system.equations.push_back(std::move(eq));
  }
  return system;
}

Rational evaluateStar(const StarEquation& eq, const BlockPoints& points) {
  Rational sum(0);
  for (const auto& term : eq.terms) {
    if (term.j < 1 || term.j > static_cast<int>(points.size()))
      throw UsageError("star equation refers to block " + std::to_string(term.j) + " but only " +
                       std::to_string(points.size()) + " blocks were given");
    const auto& block = points[term.j - 1];
    if (block.size() != term.F.vars().size())
      throw UsageError("block " + std::to_string(term.j) + " needs " + std::to_string(term.F.vars().size()) +
                       " coordinates");
    sum += term.coefficient * term.F.eval(std::span<const Rational>(block));
  }
  return sum;
}

bool starSatisfied(const StarSystem& system, const BlockPoints& points) {
  if (static_cast<int>(points.size()) != system.config.size())
    throw UsageError("expected " + std::to_string(system.config.size()) + " coordinate blocks");
  for (int j = 1; j <= system.config.size(); ++j) {
    if (static_cast<int>(points[j - 1].size()) != system.config.at(j).a - 1)
      throw UsageError("block " + std::to_string(j) + " needs " + std::to_string(system.config.at(j).a - 1) +
                       " coordinates");
  }
  return std::all_of(system.equations.begin(), system.equations.end(),
                     [&](const StarEquation& eq) { return evaluateStar(eq, points).isZero(); });
}

std::optional<Rational> rationalRoot(const Rational& x, int n) {
  if (n < 1) throw UsageError("rationalRoot: n must be positive");
  if (x.isZero()) return Rational(0);
  if (x.sign() < 0 && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(x.numerator());
  mpz_class den = x.denominator();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  if (x.sign() < 0) rn = -rn;
  return Rational(rn, rd);
}

std::optional<BlockPoints> rebalanceBlock(const StarEquation& eq, const BlockPoints& points, int j) {
  const StarTerm* own = nullptr;
  Rational rest(0);
  for (const auto& term : eq.terms) {
    const Rational value = term.coefficient * term.F.eval(std::span<const Rational>(points.at(term.j - 1)));
    if (term.j == j) {
      if (own) return std::nullopt;
      own = &term;
    } else {
      rest += value;
    }
  }
  if (!own || rest.isZero()) return std::nullopt;
  const Rational value = own->coefficient * own->F.eval(std::span<const Rational>(points.at(j - 1)));
  if (value.isZero()) return std::nullopt;
  const WeightedDegree deg = own->F.weightedDegree();
  if (deg.kind != WeightedDegree::Kind::kHomogeneous) return std::nullopt;
  const auto alpha = rationalRoot(-rest / value, deg.degree);
  if (!alpha || alpha->isZero()) return std::nullopt;
  BlockPoints out = points;
  for (std::size_t k = 0; k < out[j - 1].size(); ++k) out[j - 1][k] *= alpha->pow(static_cast<long>(k) + 2);
  return out;
}

bool inResidueSpan(const SingularConfig& config, const std::vector<SectionProfile>& sections, const Vec& vector) {
  Echelon span;
  for (const auto& s : sections) {
    validateProfile(config, s);
    if (!s.residues.empty()) span.insert(s.residues);
  }
  return span.reduce(vector).empty();
}

}  // namespace equigen::lifting
