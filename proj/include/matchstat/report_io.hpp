#pragma once

#include <string>

#include "json.hpp"
#include "matchstat/distribution.hpp"
#include "matchstat/moments.hpp"

namespace matchstat {

/// x rounded to 12 significant digits, the precision used for emitted reals.
double round12(double x);

/// Rational fields as "p/q" strings plus validity flags.
nlohmann::json to_json(const MomentReport& report);
nlohmann::json to_json(const CltReport& report);
nlohmann::json to_json(const MgfReport& report);
nlohmann::json to_json(const DescentPolynomial& poly);

/// "m,count" header followed by one row per m = 1 .. 2n-1.
std::string to_csv(const DescentPolynomial& poly);

}  // namespace matchstat
