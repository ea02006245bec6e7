#pragma once

// JSON, CSV and plain-text renderings of the library's results. Integers that
// fit in 64 bits are JSON numbers, larger ones are strings; rationals are
// always strings "p" or "p/q".

#include <string>

#include "json.hpp"
#include "srball/alexander.hpp"
#include "srball/bounds.hpp"
#include "srball/path_complex.hpp"
#include "srball/polarization.hpp"

namespace srball {

using Json = nlohmann::json;

Json json_integer(const BigInt& z);
Json json_rational(const Rational& q);
Json to_json(const FVector& f);
Json to_json(const HVector& h);
/// {"p": int, "entries": [[i, j, beta], ...]} sorted by (i, j).
Json to_json(const BettiTable& table);
Json to_json(const ShellingCertificate& cert);
Json to_json(const BallCertificate& cert);
Json to_json(const ConjectureReport& report, const std::string& instance);
Json to_json(const DualTheoremReport& report);
Json to_json(const PolarCertificate& cert);
Json to_json(const GridPoint& p);
Json to_json(const PathFamily& family);
Json faces_json(const std::vector<Face>& faces);

std::string csv_header();
std::string csv_row(const ConjectureReport& report, const std::string& instance);

/// "key: value" lines for the top-level keys of an object.
std::string text_report(const Json& object);

}  // namespace srball
