#include "equigen_cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "equigen/errors.hpp"

namespace equigen::cli {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

int intField(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw UsageError(where + ": integer field '" + key + "' is required");
  return j[key].get<int>();
}

}  // namespace

json polyJson(const std::string& name, const MPoly& p) {
  json terms = json::array();
  for (const Term& t : p.terms()) terms.push_back({{"exponents", t.exponents}, {"coefficient", t.coefficient.toString()}});
  const WeightedDegree deg = p.weightedDegree();
  json degree = nullptr;
  if (deg.kind == WeightedDegree::Kind::kHomogeneous) degree = deg.degree;
  return {{"name", name}, {"variables", p.vars().names()}, {"terms", terms}, {"weightedDegree", degree}};
}

json seriesJson(const series::TSeries& s) {
  json coeffs = json::object();
  for (int k = 0; k < s.modulus(); ++k) {
    const Rational c = s.coefficient(k);
    if (!c.isZero()) coeffs[std::to_string(k)] = c.toString();
  }
  return {{"modulus", s.modulus()}, {"coefficients", coeffs}};
}

Rational rationalFromJson(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw UsageError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

series::TSeries seriesFromJson(const json& j, int modulus) {
  series::TSeries out(modulus);
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size() && static_cast<int>(k) < modulus; ++k)
      out.setCoefficient(static_cast<int>(k), rationalFromJson(j[k]));
    return out;
  }
  if (!j.is_object()) throw UsageError("series must be an object {\"power\": coefficient} or an array");
  for (const auto& [key, value] : j.items()) {
    int power = 0;
    try {
      std::size_t used = 0;
      power = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw UsageError("series power '" + key + "' is not an integer");
    }
    if (power < 0) throw UsageError("series power " + key + " is negative");
    if (power < modulus) out.setCoefficient(power, rationalFromJson(value));
  }
  return out;
}

json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

std::vector<Rational> parsePoint(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw UsageError("empty coordinate in point '" + text + "'");
    out.push_back(Rational::parse(item));
  }
  if (out.empty()) throw UsageError("point '" + text + "' has no coordinates");
  return out;
}

lifting::BlockPoints parseBlocks(const std::string& text) {
  lifting::BlockPoints out;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, ';')) out.push_back(parsePoint(block));
  return out;
}

ConfigInput configFromJson(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw UsageError("input: 'points' must be an array of {a, b}");
  ConfigInput in;
  std::vector<lifting::LocalModel> points;
  for (const auto& p : j["points"]) points.push_back(lifting::LocalModel::make(intField(p, "a", "point"), intField(p, "b", "point")));
  in.config = lifting::SingularConfig::make(std::move(points));

  for (const auto& s : j.value("sections", json::array())) {
    lifting::SectionProfile profile;
    profile.id = s.value("id", "eta" + std::to_string(in.sections.size() + 1));
    for (const auto& r : s.value("residues", json::array())) {
      const lifting::PairIndex key{intField(r, "j", "residue"), intField(r, "m", "residue")};
      if (!r.contains("r")) throw UsageError("residue of section '" + profile.id + "' lacks 'r'");
      const Rational value = rationalFromJson(r["r"]);
      if (!profile.residues.emplace(key, value).second)
        throw UsageError("section '" + profile.id + "' lists a residue twice");
    }
    in.sections.push_back(std::move(profile));
  }

  const auto addDims = [&](int point, const json& value) {
    in.config.at(point);
    in.dims[point] = lifting::PointDims{intField(value, "twisted", "dims"), intField(value, "plain", "dims")};
  };
  const json dims = j.value("dims", json::array());
  if (dims.is_array()) {
    for (const auto& d : dims) addDims(intField(d, "j", "dims"), d);
  } else if (dims.is_object()) {
    for (const auto& [key, value] : dims.items()) addDims(std::stoi(key), value);
  } else {
    throw UsageError("input: 'dims' must be an array of {j, twisted, plain}");
  }
  const json flags = j.value("flags", json::object());
  in.nbarNonzero = flags.value("nbar_nonzero", j.value("nbar_nonzero", false));
  return in;
}

json verdictJson(const groebner::GVerdict& v) {
  json detail = json::object();
  for (const auto& [i, d] : v.detail) {
    detail[std::to_string(i)] = {{"verdict", groebner::toString(d.verdict)},
                                 {"bigFForm", groebner::toString(d.bigFForm)},
                                 {"simplifiedForm", groebner::toString(d.simplifiedForm)}};
  }
  return {{"a", v.model.a}, {"b", v.model.b}, {"overall", groebner::toString(v.overall)}, {"detail", detail}};
}

}  // namespace equigen::cli
