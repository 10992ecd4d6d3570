#include "equigen/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "equigen/errors.hpp"

namespace equigen::groebner {

bool MonomialOrder::greater(const Exponents& a, const Exponents& b) const {
  if (kind == OrderKind::kGrevlex) return grevlexGreater(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Ideal::Ideal(VarSetPtr vars, std::vector<MPoly> generators, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {
  for (auto& g : generators) {
    if (!(g.vars() == *vars_)) throw UsageError("Ideal: generator over a different variable set");
    if (g.isZero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

bool GroebnerResult::isUnit() const {
  return !timedOut && basis.size() == 1 && basis[0].isConstant() && !basis[0].isZero();
}

Exponents leadingExponents(const MPoly& p, const MonomialOrder& order) {
  if (p.isZero()) throw UsageError("leadingExponents: zero polynomial");
  const Exponents* best = &p.terms().front().exponents;
  for (const auto& t : p.terms()) {
    if (order.greater(t.exponents, *best)) best = &t.exponents;
  }
  return *best;
}

namespace {

struct Timeout {};

// Integer-coefficient polynomial with terms sorted descending by the order.
struct IPoly {
  std::vector<Exponents> mons;
  std::vector<mpz_class> coeffs;

  bool empty() const { return mons.empty(); }
  std::size_t size() const { return mons.size(); }
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : start_(std::chrono::steady_clock::now()),
        end_(start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(std::min(seconds, 1.0e7)))) {}
  bool expired() const { return std::chrono::steady_clock::now() > end_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point end_;
};

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcmOf(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

int degreeOf(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

mpz_class contentOf(const IPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divideBy(IPoly& p, const mpz_class& d) {
  for (auto& c : p.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Primitive with positive leading coefficient.
void makePrimitive(IPoly& p) {
  if (p.empty()) return;
  mpz_class g = contentOf(p);
  if (sgn(p.coeffs[0]) < 0) g = -g;
  if (g != 1) divideBy(p, g);
}

// Returns lambda * p with integer coefficients, sorted by `order`.
IPoly toIPoly(const MPoly& p, const MonomialOrder& order, mpq_class* lambda = nullptr) {
  mpz_class denLcm = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), t.coefficient.raw().get_den_mpz_t());
  }
  std::vector<std::pair<Exponents, mpz_class>> terms;
  terms.reserve(p.termCount());
  for (const auto& t : p.terms()) {
    mpz_class c = t.coefficient.raw().get_num() * (denLcm / t.coefficient.raw().get_den());
    terms.emplace_back(t.exponents, std::move(c));
  }
  if (order.kind != OrderKind::kGrevlex) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  }
  IPoly out;
  for (auto& [e, c] : terms) {
    out.mons.push_back(std::move(e));
    out.coeffs.push_back(std::move(c));
  }
  if (lambda) *lambda = mpq_class(denLcm);
  return out;
}

MPoly toMPoly(const VarSetPtr& vars, const IPoly& p, const mpq_class& divisor) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    terms.push_back(Term{p.mons[i], Rational(mpq_class(p.coeffs[i]) / divisor)});
  }
  return MPoly::fromTerms(vars, std::move(terms));
}

// a*p - b*(x^shift)*g, all sorted by order.
IPoly combine(const IPoly& p, const mpz_class& a, const mpz_class& b, const Exponents& shift, const IPoly& g,
              const MonomialOrder& order) {
  IPoly out;
  out.mons.reserve(p.size() + g.size());
  out.coeffs.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  Exponents shiftedMon(shift.size());
  auto shiftedAt = [&](std::size_t k) -> const Exponents& {
    for (std::size_t v = 0; v < shift.size(); ++v) shiftedMon[v] = g.mons[k][v] + shift[v];
    return shiftedMon;
  };
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.mons.push_back(p.mons[i]);
      out.coeffs.push_back(a * p.coeffs[i]);
      ++i;
      continue;
    }
    const Exponents& gm = shiftedAt(j);
    if (i == p.size() || order.greater(gm, p.mons[i])) {
      out.mons.push_back(gm);
      out.coeffs.push_back(-b * g.coeffs[j]);
      ++j;
    } else if (order.greater(p.mons[i], gm)) {
      out.mons.push_back(p.mons[i]);
      out.coeffs.push_back(a * p.coeffs[i]);
      ++i;
    } else {
      mpz_class c = a * p.coeffs[i] - b * g.coeffs[j];
      if (c != 0) {
        out.mons.push_back(p.mons[i]);
        out.coeffs.push_back(std::move(c));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction of p by basis. The returned remainder r satisfies
// r = multiplier * p (mod basis ideal).
IPoly reduceFull(IPoly p, const std::vector<const IPoly*>& basis, const MonomialOrder& order,
                 const Deadline* deadline, mpq_class* multiplier) {
  IPoly rem;
  std::size_t steps = 0;
  while (!p.empty()) {
    if (deadline && (++steps & 63) == 0 && deadline->expired()) throw Timeout{};
    const Exponents& lead = p.mons[0];
    const IPoly* divisor = nullptr;
    for (const IPoly* g : basis) {
      if (divides(g->mons[0], lead)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      rem.mons.push_back(lead);
      rem.coeffs.push_back(p.coeffs[0]);
      p.mons.erase(p.mons.begin());
      p.coeffs.erase(p.coeffs.begin());
      continue;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.coeffs[0].get_mpz_t(), divisor->coeffs[0].get_mpz_t());
    const mpz_class a = divisor->coeffs[0] / g;
    const mpz_class b = p.coeffs[0] / g;
    Exponents shift(lead.size());
    for (std::size_t v = 0; v < lead.size(); ++v) shift[v] = lead[v] - divisor->mons[0][v];
    p = combine(p, a, b, shift, *divisor, order);
    if (a != 1) {
      for (auto& c : rem.coeffs) c *= a;
      if (multiplier) *multiplier *= a;
    }
    // Strip the common content of the working polynomial and remainder.
    mpz_class content = contentOf(p);
    for (const auto& c : rem.coeffs) {
      if (content == 1) break;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    if (content > 1) {
      divideBy(p, content);
      divideBy(rem, content);
      if (multiplier) *multiplier /= content;
    }
  }
  return rem;
}

IPoly sPolynomial(const IPoly& f, const IPoly& g, const MonomialOrder& order) {
  const Exponents l = lcmOf(f.mons[0], g.mons[0]);
  Exponents sf(l.size()), sg(l.size());
  for (std::size_t v = 0; v < l.size(); ++v) {
    sf[v] = l[v] - f.mons[0][v];
    sg[v] = l[v] - g.mons[0][v];
  }
  mpz_class gcd;
  mpz_gcd(gcd.get_mpz_t(), f.coeffs[0].get_mpz_t(), g.coeffs[0].get_mpz_t());
  const mpz_class a = g.coeffs[0] / gcd;
  const mpz_class b = f.coeffs[0] / gcd;
  IPoly shiftedF = combine(IPoly{}, 0, -1, sf, f, order);  // x^sf * f
  return combine(shiftedF, a, b, sg, g, order);
}

bool isConstant(const IPoly& p) {
  return p.size() == 1 && std::all_of(p.mons[0].begin(), p.mons[0].end(), [](int e) { return e == 0; });
}

struct PairKey {
  int degree;
  Exponents lcm;
  std::size_t i;
  std::size_t j;
};

}  // namespace

MPoly normalForm(const MPoly& p, std::span<const MPoly> basis, const MonomialOrder& order) {
  std::vector<IPoly> ib;
  for (const auto& g : basis) {
    if (!(g.vars() == p.vars())) throw UsageError("normalForm: basis over a different variable set");
    if (g.isZero()) continue;
    ib.push_back(toIPoly(g, order));
  }
  if (p.isZero()) return p;
  std::vector<const IPoly*> ptrs;
  for (const auto& g : ib) ptrs.push_back(&g);
  mpq_class lambda;
  IPoly ip = toIPoly(p, order, &lambda);
  mpq_class multiplier = 1;
  IPoly rem = reduceFull(std::move(ip), ptrs, order, nullptr, &multiplier);
  return toMPoly(p.varsPtr(), rem, lambda * multiplier);
}

GroebnerResult buchberger(const Ideal& ideal, const Budget& budget) {
  const MonomialOrder& order = ideal.order();
  const VarSetPtr& vars = ideal.varsPtr();
  const Deadline deadline(budget.seconds);
  GroebnerResult result;

  auto unit = [&]() {
    result.basis = {MPoly::constant(vars, Rational(1))};
    result.seconds = deadline.elapsed();
    return result;
  };

  std::vector<IPoly> basis;
  for (const auto& g : ideal.generators()) {
    IPoly ip = toIPoly(g, order);
    makePrimitive(ip);
    if (isConstant(ip)) return unit();
    basis.push_back(std::move(ip));
  }
  if (basis.empty()) {
    result.seconds = deadline.elapsed();
    return result;
  }

  auto pairLess = [&](const PairKey& x, const PairKey& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.lcm != y.lcm) return order.greater(y.lcm, x.lcm);
    if (x.j != y.j) return x.j < y.j;
    return x.i < y.i;
  };
  std::set<PairKey, decltype(pairLess)> queue(pairLess);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto addPairsFor = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = lcmOf(basis[i].mons[0], basis[j].mons[0]);
      const int d = degreeOf(l);
      queue.insert(PairKey{d, std::move(l), i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) addPairsFor(j);

  auto isPending = [&](std::size_t x, std::size_t y) {
    return pending.count({std::min(x, y), std::max(x, y)}) > 0;
  };

  try {
    while (!queue.empty()) {
      if (deadline.expired() || result.pairsReduced >= budget.maxPairs) throw Timeout{};
      const PairKey pair = *queue.begin();
      queue.erase(queue.begin());
      pending.erase({pair.i, pair.j});

      const IPoly& f = basis[pair.i];
      const IPoly& g = basis[pair.j];
      if (coprime(f.mons[0], g.mons[0])) {
        ++result.pairsSkipped;
        continue;
      }
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pair.i || k == pair.j) continue;
        if (divides(basis[k].mons[0], pair.lcm) && !isPending(pair.i, k) && !isPending(pair.j, k)) chain = true;
      }
      if (chain) {
        ++result.pairsSkipped;
        continue;
      }

      ++result.pairsReduced;
      std::vector<const IPoly*> ptrs;
      ptrs.reserve(basis.size());
      for (const auto& b : basis) ptrs.push_back(&b);
      IPoly h = reduceFull(sPolynomial(f, g, order), ptrs, order, &deadline, nullptr);
      if (h.empty()) continue;
      makePrimitive(h);
      if (isConstant(h)) return unit();
      basis.push_back(std::move(h));
      addPairsFor(basis.size() - 1);
    }
  } catch (const Timeout&) {
    result.timedOut = true;
    result.basis.clear();
    result.seconds = deadline.elapsed();
    return result;
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another kept element's leading monomial.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].mons[0], basis[i].mons[0])) continue;
      if (basis[j].mons[0] != basis[i].mons[0] || j < i) redundant = true;
    }
    if (!redundant) kept.push_back(i);
  }

  std::vector<std::pair<Exponents, MPoly>> reduced;
  for (std::size_t idx : kept) {
    std::vector<const IPoly*> others;
    for (std::size_t other : kept) {
      if (other != idx) others.push_back(&basis[other]);
    }
    IPoly r = reduceFull(basis[idx], others, order, nullptr, nullptr);
    const mpq_class lead(r.coeffs[0]);
    reduced.emplace_back(r.mons[0], toMPoly(vars, r, lead));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const auto& x, const auto& y) { return order.greater(x.first, y.first); });
  for (auto& [lead, poly] : reduced) result.basis.push_back(std::move(poly));
  result.seconds = deadline.elapsed();
  return result;
}

Membership radicalMember(const MPoly& p, const Ideal& ideal, const Budget& budget) {
  if (!(p.vars() == *ideal.varsPtr())) throw UsageError("radicalMember: polynomial over a different variable set");
  if (p.isZero()) return Membership::kMember;
  std::string aux = "y";
  while (ideal.varsPtr()->find(aux)) aux += "_";
  const VarSetPtr extended = withAuxiliary(*ideal.varsPtr(), aux);
  std::vector<MPoly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embedInto(extended));
  const MPoly y = MPoly::variable(extended, aux);
  gens.push_back(MPoly::constant(extended, Rational(1)) - y * p.embedInto(extended));
  const GroebnerResult gb = buchberger(Ideal(extended, std::move(gens), ideal.order()), budget);
  if (gb.timedOut) return Membership::kTimeout;
  return gb.isUnit() ? Membership::kMember : Membership::kNotMember;
}

}  // namespace equigen::groebner
