#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equigen/conditions.hpp"
#include "equigen/lifting.hpp"
#include "equigen/tseries.hpp"
#include "equigen/verdict.hpp"

namespace equigen::cli {

using nlohmann::json;

// {name, variables, terms: [{exponents, coefficient}], weightedDegree}.
// weightedDegree is null for an inhomogeneous polynomial.
json polyJson(const std::string& name, const MPoly& p);

// {modulus, coefficients: {"k": "p/q"}}.
json seriesJson(const series::TSeries& s);
// Accepts {"k": "p/q", ...} or a dense array of coefficients.
series::TSeries seriesFromJson(const json& j, int modulus);

Rational rationalFromJson(const json& j);

json readJsonFile(const std::filesystem::path& path);

// "p2,p3,...": comma-separated rationals.
std::vector<Rational> parsePoint(const std::string& text);
// Blocks separated by ';'.
lifting::BlockPoints parseBlocks(const std::string& text);

// {"points": [{"a", "b"}], "sections": [{"id", "residues": [{"j", "m", "r"}]}],
//  "dims": {"1": {"twisted", "plain"}}, "nbar_nonzero": bool}
struct ConfigInput {
  lifting::SingularConfig config;
  std::vector<lifting::SectionProfile> sections;
  std::map<int, lifting::PointDims> dims;
  bool nbarNonzero = false;
};

ConfigInput configFromJson(const json& j);

json verdictJson(const groebner::GVerdict& v);

}  // namespace equigen::cli
