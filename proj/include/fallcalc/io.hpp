#pragma once

#include <iosfwd>
#include <memory>

#include <json.hpp>

#include "fallcalc/counting.hpp"
#include "fallcalc/divisor.hpp"

namespace fallcalc {

nlohmann::json pointToJson(const GaussianRational& g);
GaussianRational pointFromJson(const nlohmann::json& j);

// Point lists serialize as [{re, im, zmult, pmult}] with exact "p/q" strings.
// An object form {"points": [...], "lattices": [...]} additionally describes
// unit-step arithmetic progressions, so unbounded divisors fit in a file.
nlohmann::json divisorToJson(const Divisor& d);
std::shared_ptr<DivisorSource> divisorSourceFromJson(const nlohmann::json& j);

nlohmann::json chainsToJson(const std::vector<Chain>& chains);

// Columns r,n,N,nBarDelta,NBarDelta at the given radii.
void writeCountingCsv(std::ostream& os, const DivisorSource& src, PointKind kind,
                      const std::vector<double>& radii, double eps);

std::string formatDouble(double v);

}  // namespace fallcalc
