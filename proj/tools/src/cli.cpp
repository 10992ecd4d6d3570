#include "equigen_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "equigen/conditions.hpp"
#include "equigen/errors.hpp"
#include "equigen/expansion.hpp"
#include "equigen/lift_solver.hpp"
#include "equigen/lifting.hpp"
#include "equigen/reparam.hpp"
#include "equigen/verdict.hpp"
#include "equigen_cli/cache.hpp"
#include "equigen_cli/json_io.hpp"
#include "equigen_cli/scan.hpp"

namespace equigen::cli {

namespace {

using expansion::LocalModel;
using groebner::Verdict;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Options {
  int a = 0;
  int b = 0;
  std::string format = "text";
  std::string cacheDir;
  std::uint64_t seed = 20240611;
  int jobs = 1;
  double budgetSecs = 120.0;
  bool budgetGiven = false;

  std::string kind;
  std::optional<int> m;
  std::string n;
  std::optional<int> l;
  std::string point;
  std::optional<int> index;
  std::string aRange = "2..4";
  std::string bRange;
  std::optional<int> k;
  std::optional<int> smax;
  std::string deltas;
  std::string input;
  int d = 1;
  int perturb = 0;
};

LocalModel model(const Options& o) {
  if (o.a == 0 || o.b == 0) throw UsageError("--a and --b are required");
  return LocalModel::make(o.a, o.b);
}

std::optional<ResultCache> openCache(const Options& o) {
  if (auto dir = resolveCacheDir(o.cacheDir)) return ResultCache(*dir);
  return std::nullopt;
}

int verdictExit(Verdict v) {
  switch (v) {
    case Verdict::kHolds:
      return kOk;
    case Verdict::kFails:
      return kNegative;
    case Verdict::kTimeout:
      break;
  }
  return kError;
}

std::string fixed(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << seconds << "s";
  return os.str();
}

void requireFormat(const Options& o, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end())
    throw UsageError("--format " + o.format + " is not supported by this command");
}

// ---- gen ----------------------------------------------------------------

int cmdGen(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  const LocalModel mdl = model(o);
  std::vector<std::pair<std::string, MPoly>> polys;
  if (o.kind == "f") {
    std::vector<int> ms;
    if (o.m) {
      ms.push_back(*o.m);
    } else {
      for (int j = 1; j <= mdl.a - 1; ++j) ms.push_back(mdl.b + j);
    }
    for (int m : ms) polys.emplace_back("f_" + std::to_string(m), expansion::fCoeff(mdl, mdl.b, m));
  } else if (o.kind == "F") {
    auto [lo, hi] = o.n.empty() ? std::pair{1, mdl.a - 1} : parseRange(o.n);
    if (lo < 1 || hi > mdl.a - 1)
      throw UsageError("--n must lie in [1, " + std::to_string(mdl.a - 1) + "] for a=" + std::to_string(mdl.a));
    for (int n = lo; n <= hi; ++n) polys.emplace_back("F_-" + std::to_string(n), expansion::bigF(mdl, n));
  } else if (o.kind == "jacbar") {
    polys.emplace_back("Jac", expansion::jacBar(mdl));
  } else {
    const int nmax = o.n.empty() ? mdl.a + 1 : parseRange(o.n).second;
    if (nmax < 2) throw UsageError("--n must be at least 2 for theta");
    if (o.l) {
      for (int i = 0; i <= nmax; ++i)
        polys.emplace_back("Theta^(" + std::to_string(*o.l) + ")_" + std::to_string(i),
                           expansion::thetaCap(mdl, *o.l, i, nmax));
    } else {
      const auto theta = expansion::thetaSeries(mdl, nmax);
      for (int i = 2; i <= nmax; ++i) polys.emplace_back("theta_" + std::to_string(i), theta[i]);
    }
  }

  if (o.format == "json") {
    json list = json::array();
    for (const auto& [name, p] : polys) list.push_back(polyJson(name, p));
    out << json{{"a", mdl.a}, {"b", mdl.b}, {"kind", o.kind}, {"polynomials", list}}.dump(2) << "\n";
  } else {
    for (const auto& [name, p] : polys) out << name << " = " << p.toString() << "\n";
  }
  return kOk;
}

// ---- check --------------------------------------------------------------

int cmdCheckT(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  const LocalModel mdl = model(o);
  if (o.point.empty()) throw UsageError("check T needs --point");
  const auto point = parsePoint(o.point);
  const bool holds = groebner::checkT(mdl, point);
  if (o.format == "json") {
    json coords = json::array();
    for (const auto& c : point) coords.push_back(c.toString());
    out << json{{"a", mdl.a}, {"b", mdl.b}, {"condition", "T"}, {"point", coords}, {"holds", holds}}.dump(2) << "\n";
  } else {
    out << "(T) " << (holds ? "holds" : "fails") << " at (" << o.point << ")\n";
  }
  return holds ? kOk : kNegative;
}

groebner::GVerdict decideG(const LocalModel& mdl, std::optional<int> index, double budgetSecs,
                           const ResultCache* cache) {
  groebner::GVerdict v;
  v.model = mdl;
  std::vector<int> indices;
  if (index) {
    if (*index < 1 || *index > mdl.a - 1)
      throw UsageError("--index must lie in [1, " + std::to_string(mdl.a - 1) + "]");
    indices.push_back(*index);
  } else {
    for (int i = 1; i <= mdl.a - 1; ++i) indices.push_back(i);
  }
  for (int i : indices) {
    const IndexResult r = decideIndex(mdl, i, groebner::Budget{budgetSecs}, cache);
    v.detail[i] = r.detail;
    v.seconds += r.detail.bigFSeconds + r.detail.simplifiedSeconds;
  }
  v.overall = aggregate(v.detail);
  return v;
}

int cmdCheckG(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  const LocalModel mdl = model(o);
  const auto cache = openCache(o);
  const groebner::GVerdict v = decideG(mdl, o.index, o.budgetSecs, cache ? &*cache : nullptr);
  if (o.format == "json") {
    json j = verdictJson(v);
    for (const auto& [i, d] : v.detail) {
      j["detail"][std::to_string(i)]["bigFSeconds"] = d.bigFSeconds;
      j["detail"][std::to_string(i)]["simplifiedSeconds"] = d.simplifiedSeconds;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "(G) at (a,b)=(" << mdl.a << "," << mdl.b << ")\n";
    for (const auto& [i, d] : v.detail) {
      out << "  i=" << i << ": " << groebner::toString(d.verdict) << "  [F-form " << groebner::toString(d.bigFForm)
          << " " << fixed(d.bigFSeconds) << ", f-form " << groebner::toString(d.simplifiedForm) << " "
          << fixed(d.simplifiedSeconds) << "]\n";
    }
    out << "(G): " << groebner::toString(v.overall) << "\n";
  }
  return verdictExit(v.overall);
}

// ---- scan ---------------------------------------------------------------

std::string detailText(const groebner::GVerdict& v, const char* sep) {
  std::string s;
  for (const auto& [i, d] : v.detail) {
    if (!s.empty()) s += sep;
    s += std::to_string(i) + ":" + std::string(groebner::toString(d.verdict));
  }
  return s;
}

int cmdScan(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json", "csv", "md"});
  ScanOptions so;
  std::tie(so.aLo, so.aHi) = parseRange(o.aRange);
  if (o.bRange.empty()) {
    so.bLo = so.aLo + 1;
    so.bHi = 9;
  } else {
    std::tie(so.bLo, so.bHi) = parseRange(o.bRange);
  }
  if (so.aLo < 2) throw UsageError("--a must start at 2 or above");
  if ((so.aHi > 4 || so.bHi > 9) && !o.budgetGiven)
    throw UsageError("the default scan grid stops at a <= 4, b <= 9; pass --budget-secs to scan larger cells");
  so.budgetSecs = o.budgetSecs;
  so.jobs = std::max(1, o.jobs);
  const auto cache = openCache(o);
  so.cache = cache ? &*cache : nullptr;

  const std::vector<ScanRow> rows = runScan(so);
  bool timeout = false;
  for (const auto& r : rows) timeout = timeout || r.verdict.overall == Verdict::kTimeout;

  auto exceptional = [](const ScanRow& r) { return r.verdict.overall != Verdict::kHolds; };
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : rows) {
      json j = verdictJson(r.verdict);
      j["exceptional"] = exceptional(r);
      list.push_back(j);
    }
    out << json{{"engine", kEngineVersion}, {"rows", list}}.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "a,b,overall,detail,exceptional\n";
    for (const auto& r : rows) {
      out << r.model.a << "," << r.model.b << "," << groebner::toString(r.verdict.overall) << ","
          << detailText(r.verdict, ";") << "," << (exceptional(r) ? "true" : "false") << "\n";
    }
  } else if (o.format == "md") {
    out << "| a | b | (G) | per index |\n|---|---|---|---|\n";
    for (const auto& r : rows) {
      std::string overall(groebner::toString(r.verdict.overall));
      if (exceptional(r)) overall = "**" + overall + "**";
      out << "| " << r.model.a << " | " << r.model.b << " | " << overall << " | " << detailText(r.verdict, ", ")
          << " |\n";
    }
  } else {
    out << std::left << std::setw(4) << "a" << std::setw(4) << "b" << std::setw(10) << "(G)" << "per index\n";
    for (const auto& r : rows) {
      std::string overall(groebner::toString(r.verdict.overall));
      if (exceptional(r)) overall += " *";
      out << std::left << std::setw(4) << r.model.a << std::setw(4) << r.model.b << std::setw(10) << overall
          << detailText(r.verdict, " ") << "\n";
    }
  }
  return timeout ? kError : kOk;
}

// ---- reparam ------------------------------------------------------------

int cmdReparam(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  if (o.deltas.empty()) throw UsageError("reparam needs --deltas FILE");
  const json in = readJsonFile(o.deltas);
  const int a = o.a ? o.a : in.value("a", 0);
  const int b = o.b ? o.b : in.value("b", a + 1);
  const LocalModel mdl = LocalModel::make(a, b);
  const int K = o.k ? *o.k : in.value("K", 0);
  const int smax = o.smax ? *o.smax : in.value("smax", a + 2);
  const int d = in.value("d", o.d);
  if (K < 1) throw UsageError("reparam needs a positive modulus (--k or \"K\")");

  auto seriesList = [&](const char* key) {
    std::vector<series::TSeries> list;
    const json arr = in.value(key, json::array());
    if (!arr.empty() && static_cast<int>(arr.size()) != a - 1)
      throw UsageError(std::string("'") + key + "' must list " + std::to_string(a - 1) + " series");
    for (int i = 0; i < a - 1; ++i) list.push_back(arr.empty() ? series::TSeries(K) : seriesFromJson(arr[i], K));
    return list;
  };
  const auto cN = seriesList("cN");
  std::vector<series::TSeries> cN1;
  std::vector<series::TSeries> deltas;
  if (in.contains("cN1")) {
    cN1 = seriesList("cN1");
    for (int i = 0; i < a - 1; ++i) deltas.push_back(cN1[i] - cN[i]);
  } else {
    if (!in.contains("delta")) throw UsageError("--deltas file needs 'delta' or 'cN1'");
    deltas = seriesList("delta");
    for (int i = 0; i < a - 1; ++i) cN1.push_back(cN[i] + deltas[i]);
  }

  const series::ReparamResult result = series::reparamSolve(mdl, cN, cN1, smax, K, d);
  const bool residualZero = series::backSubstitutionResidual(result, cN, cN1).isZero();
  const series::AuditReport audit = series::orderBoundAudit(result, deltas);
  std::optional<series::PmVerdict> pm;
  if (in.contains("g")) {
    expansion::SigmaModel sm{mdl, {}};
    for (const auto& g : in["g"]) sm.g.push_back(rationalFromJson(g));
    pm = series::pmIdentityCheck(sm, cN, cN1, smax, K, d);
  }

  if (o.format == "json") {
    json dp = json::object();
    json eps = json::object();
    for (int i = 2; i <= a; ++i) dp[std::to_string(i)] = seriesJson(result.deltaPrimeAt(i));
    for (int i = a + 1; i <= smax; ++i) eps[std::to_string(i)] = seriesJson(result.epsilonAt(i));
    json entries = json::array();
    for (const auto& e : audit.entries)
      entries.push_back({{"coefficient", e.coefficient}, {"ord", e.ord}, {"bound", e.bound}, {"vacuous", e.vacuous},
                         {"ok", e.ok}});
    json j{{"a", a}, {"K", K}, {"smax", smax}, {"d", d}, {"deltaPrime", dp}, {"epsilon", eps},
           {"residualZero", residualZero}, {"audit", {{"passed", audit.passed()}, {"entries", entries}}}};
    j["pm"] = pm ? json(std::string(series::toString(*pm))) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    for (int i = 2; i <= a; ++i) out << "delta'_" << i << " = " << result.deltaPrimeAt(i).toString() << "\n";
    for (int i = a + 1; i <= smax; ++i) out << "eps_" << i << " = " << result.epsilonAt(i).toString() << "\n";
    out << "back-substitution residual: " << (residualZero ? "zero" : "NONZERO") << "\n";
    out << "order-bound audit: " << (audit.passed() ? "passed" : "FAILED") << " (" << audit.entries.size()
        << " coefficients)\n";
    for (const auto& v : audit.violations()) out << "  " << v << "\n";
    if (pm) out << "pm identity: " << series::toString(*pm) << "\n";
  }
  const bool ok = residualZero && audit.passed() && (!pm || *pm != series::PmVerdict::kFalse);
  return ok ? kOk : kNegative;
}

// ---- star ---------------------------------------------------------------

int cmdStar(const Options& o, std::ostream& out, bool check) {
  requireFormat(o, {"text", "json"});
  if (o.input.empty()) throw UsageError("star needs --input FILE");
  const ConfigInput in = configFromJson(readJsonFile(o.input));
  const lifting::StarSystem system = lifting::buildStarSystem(in.config, in.sections);
  const lifting::Weights w = lifting::computeWeights(in.config);

  std::optional<lifting::BlockPoints> points;
  if (check) {
    if (o.point.empty()) throw UsageError("star check needs --point with one block per singular point");
    points = parseBlocks(o.point);
    lifting::starSatisfied(system, *points);
  }

  bool all = true;
  json eqs = json::array();
  for (const auto& eq : system.equations) {
    std::optional<Rational> value;
    if (points) {
      value = lifting::evaluateStar(eq, *points);
      all = all && value->isZero();
    }
    if (o.format == "json") {
      json terms = json::array();
      for (const auto& t : eq.terms)
        terms.push_back({{"j", t.j}, {"m", t.m}, {"n", t.n}, {"coefficient", t.coefficient.toString()},
                         {"F", polyJson("F_-" + std::to_string(t.n), t.F)}});
      json e{{"section", eq.sectionId}, {"ord", eq.ord}, {"terms", terms}};
      if (value) e["value"] = value->toString();
      eqs.push_back(e);
      continue;
    }
    out << eq.sectionId << " [ord " << eq.ord << "]: ";
    for (std::size_t q = 0; q < eq.terms.size(); ++q) {
      const auto& t = eq.terms[q];
      if (q) out << " + ";
      out << "(" << t.coefficient.toString() << ")*F_-" << t.n << "(c^(" << t.j << "))";
    }
    out << " = 0";
    if (value) out << "   value " << value->toString() << (value->isZero() ? "  ok" : "  VIOLATED");
    out << "\n";
  }
  if (o.format == "json") {
    json j{{"M", w.M}, {"d", w.d}, {"equations", eqs}};
    if (points) j["satisfied"] = all;
    out << j.dump(2) << "\n";
  } else if (points) {
    out << (all ? "all star equations hold" : "some star equation fails") << "\n";
  }
  return all ? kOk : kNegative;
}

// ---- lift ---------------------------------------------------------------

int cmdLift(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  const LocalModel mdl = model(o);
  if (o.point.empty()) throw UsageError("lift needs --witness");
  if (o.d < 1) throw UsageError("--d must be positive");
  const int K = o.k ? *o.k : o.d * (mdl.b + 1) + 6;
  std::mt19937_64 rng(o.seed);
  const lifting::PerturbationProvider provider =
      o.perturb > 0 ? lifting::randomProvider(mdl, o.d, o.perturb, rng) : lifting::zeroProvider();
  const lifting::LiftProblem problem(mdl, parsePoint(o.point), K, o.d, provider);
  const lifting::LiftRun run = lifting::liftRun(problem);

  if (o.format == "json") {
    json cs = json::object();
    for (int i = 2; i <= mdl.a; ++i) cs[std::to_string(i)] = seriesJson(run.state.c[i - 2]);
    json res = json::array();
    for (const auto& r : run.residuals)
      res.push_back({{"j", r.j}, {"ord", r.ord}, {"target", r.target}, {"ok", r.ok}});
    out << json{{"a", mdl.a}, {"b", mdl.b}, {"K", K}, {"d", o.d}, {"steps", run.history.size() - 1},
                {"order", run.state.order}, {"c", cs}, {"residuals", res}, {"closed", run.closed()}}
                   .dump(2)
        << "\n";
  } else {
    out << "lift (a,b)=(" << mdl.a << "," << mdl.b << ") d=" << o.d << " K=" << K << ": "
        << run.history.size() - 1 << " steps, order " << run.state.order << "\n";
    for (int i = 2; i <= mdl.a; ++i) out << "c" << i << " = " << run.state.c[i - 2].toString() << "\n";
    for (const auto& r : run.residuals)
      out << "equation " << r.j << ": residual ord " << r.ord << " (needs >= " << r.target << ") "
          << (r.ok ? "ok" : "OPEN") << "\n";
    out << (run.closed() ? "closed" : "not closed") << "\n";
  }
  return run.closed() ? kOk : kNegative;
}

// ---- verdict ------------------------------------------------------------

int cmdVerdict(const Options& o, std::ostream& out) {
  requireFormat(o, {"text", "json"});
  if (o.input.empty()) throw UsageError("verdict needs --input FILE");
  const ConfigInput in = configFromJson(readJsonFile(o.input));
  lifting::VerdictInput vi{in.config, in.sections, in.dims, {}, in.nbarNonzero};
  const bool allDouble = std::all_of(in.config.points.begin(), in.config.points.end(),
                                     [](const LocalModel& p) { return p.a == 2; });
  if (!allDouble) {
    const auto cache = openCache(o);
    for (int j = 1; j <= in.config.size(); ++j)
      vi.gTable[j] = decideG(in.config.at(j), std::nullopt, o.budgetSecs, cache ? &*cache : nullptr);
  }
  const lifting::VerdictReport report = lifting::deformVerdict(vi);

  if (o.format == "json") {
    json points = json::array();
    for (const auto& p : report.points) {
      json pj{{"j", p.j}, {"a", in.config.at(p.j).a}, {"b", in.config.at(p.j).b},
              {"dedicatedOrders", p.dedicatedOrders}};
      pj["conditionD"] = p.conditionD ? json(*p.conditionD) : json(nullptr);
      pj["conditionG"] = p.conditionG ? json(std::string(groebner::toString(*p.conditionG))) : json(nullptr);
      points.push_back(pj);
    }
    json j{{"verdict", lifting::toString(report.verdict)}, {"reason", report.reason},
           {"doublePointCriterion", report.doublePointCriterion}, {"points", points}};
    j["certificate"] = report.certificate ? json(*report.certificate) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "verdict: " << lifting::toString(report.verdict) << "\n";
    out << "reason: " << report.reason << "\n";
    for (const auto& p : report.points) {
      out << "point " << p.j << " (a=" << in.config.at(p.j).a << ", b=" << in.config.at(p.j).b << "):";
      out << " D=" << (p.conditionD ? (*p.conditionD ? "holds" : "fails") : "n/a");
      out << " G=" << (p.conditionG ? std::string(groebner::toString(*p.conditionG)) : "n/a");
      out << " dedicated={";
      for (std::size_t q = 0; q < p.dedicatedOrders.size(); ++q) out << (q ? "," : "") << p.dedicatedOrders[q];
      out << "}\n";
    }
    if (report.certificate) {
      out << "certificate: (";
      for (std::size_t q = 0; q < report.certificate->size(); ++q) out << (q ? "," : "") << (*report.certificate)[q];
      out << ")\n";
    }
  }
  if (report.verdict == lifting::Deformation::kDeforms) return kOk;
  return kNegative;
}

// ---- selftest -----------------------------------------------------------

int cmdSelftest(const Options& o, std::ostream& out) {
  requireFormat(o, {"text"});
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  const LocalModel m46 = LocalModel::make(4, 6);
  const VarSetPtr vars = coefficientVars(4);
  const MPoly golden = MPoly::fromTerms(vars, {{{2, 1, 0}, Rational(-3, 16)}, {{0, 1, 1}, Rational(3, 4)}});
  report("F_-1 at (4,6)", expansion::bigF(m46, 1) == golden);

  const std::vector<Rational> zero{Rational(0)};
  report("(T) fails at the zero point of (2,3)", !groebner::checkT(LocalModel::make(2, 3), zero));

  const auto g34 = groebner::checkG(LocalModel::make(3, 4), groebner::Budget{30.0});
  report("(G) holds at (3,4)", g34.overall == Verdict::kHolds);
  const auto g46 = groebner::checkG(m46, groebner::Budget{30.0});
  report("(G) fails at (4,6) exactly at i=2",
         g46.overall == Verdict::kFails && g46.detail.at(1).verdict == Verdict::kHolds &&
             g46.detail.at(2).verdict == Verdict::kFails && g46.detail.at(3).verdict == Verdict::kHolds);

  std::mt19937_64 rng(o.seed);
  const LocalModel m23 = LocalModel::make(2, 3);
  const lifting::LiftProblem problem(m23, {Rational(1)}, m23.b + 7, 1, lifting::randomProvider(m23, 1, 2, rng));
  report("lift closes at (2,3)", lifting::liftRun(problem).closed());

  out << (failures == 0 ? "selftest passed" : "selftest failed") << "\n";
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

std::pair<int, int> parseRange(const std::string& text) {
  auto toInt = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("bad range '" + text + "': expected N or LO..HI");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = toInt(text);
    return {v, v};
  }
  const int lo = toInt(text.substr(0, dots));
  const int hi = toInt(text.substr(dots + 2));
  if (lo > hi) throw UsageError("bad range '" + text + "': empty");
  return {lo, hi};
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact obstruction computations for deforming curve singularities", "equigen"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto addModel = [&](CLI::App* cmd) {
    cmd->add_option("--a", o.a, "multiplicity a");
    cmd->add_option("--b", o.b, "contact order b (not a multiple of a)");
  };
  auto addCommon = [&](CLI::App* cmd, std::vector<std::string> formats) {
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--cache-dir", o.cacheDir, "result cache directory (overrides EQUIGEN_CACHE_DIR)");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-secs", o.budgetSecs, "Groebner time budget in seconds")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { o.budgetGiven = true; });
  };

  auto* gen = app.add_subcommand("gen", "print generated polynomials");
  gen->add_option("kind", o.kind, "f | F | jacbar | theta")->required()->check(CLI::IsMember({"f", "F", "jacbar", "theta"}));
  addModel(gen);
  gen->add_option("--m", o.m, "f: s-exponent M of the coefficient (default b+1..b+a-1)");
  gen->add_option("--n", o.n, "F: index or range LO..HI; theta: largest index");
  gen->add_option("--l", o.l, "theta: print Theta^(l)_i instead of theta_i");
  addCommon(gen, {"text", "json"});

  auto* check = app.add_subcommand("check", "decide condition (T) or (G)");
  check->add_option("kind", o.kind, "T | G")->required()->check(CLI::IsMember({"T", "G"}));
  addModel(check);
  check->add_option("--point", o.point, "T: comma-separated c2..ca");
  check->add_option("--index", o.index, "G: single index i");
  addCommon(check, {"text", "json"});

  auto* scan = app.add_subcommand("scan", "decide (G) over a grid of (a, b)");
  scan->add_option("--a", o.aRange, "range of a, e.g. 2..4");
  scan->add_option("--b", o.bRange, "range of b, e.g. 3..9");
  addCommon(scan, {"text", "json", "csv", "md"});

  auto* reparam = app.add_subcommand("reparam", "solve the parameter change between consecutive orders");
  addModel(reparam);
  reparam->add_option("--deltas", o.deltas, "JSON file with c(N) and delta (or c(N+1))")->required();
  reparam->add_option("--k", o.k, "t-adic modulus K");
  reparam->add_option("--smax", o.smax, "deepest s-power");
  addCommon(reparam, {"text", "json"});

  auto* star = app.add_subcommand("star", "build or check star equations");
  star->add_option("kind", o.kind, "build | check")->required()->check(CLI::IsMember({"build", "check"}));
  star->add_option("--input", o.input, "configuration JSON")->required();
  star->add_option("--point", o.point, "check: blocks c^(1);c^(2);...");
  addCommon(star, {"text", "json"});

  auto* lift = app.add_subcommand("lift", "t-adic lifting from a witness");
  addModel(lift);
  lift->add_option("--witness,--point", o.point, "comma-separated c2..ca")->required();
  lift->add_option("--k", o.k, "modulus K (default d(b+1)+6)");
  lift->add_option("--d", o.d, "weight d");
  lift->add_option("--perturb", o.perturb, "random admissible terms per equation");
  addCommon(lift, {"text", "json"});

  auto* verdict = app.add_subcommand("verdict", "decide deformability of a configuration");
  verdict->add_option("--input", o.input, "configuration JSON")->required();
  addCommon(verdict, {"text", "json"});

  auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks");
  addCommon(selftest, {"text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (gen->parsed()) return cmdGen(o, out);
    if (check->parsed()) return o.kind == "T" ? cmdCheckT(o, out) : cmdCheckG(o, out);
    if (scan->parsed()) return cmdScan(o, out);
    if (reparam->parsed()) return cmdReparam(o, out);
    if (star->parsed()) return cmdStar(o, out, o.kind == "check");
    if (lift->parsed()) return cmdLift(o, out);
    if (verdict->parsed()) return cmdVerdict(o, out);
    if (selftest->parsed()) return cmdSelftest(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace equigen::cli
