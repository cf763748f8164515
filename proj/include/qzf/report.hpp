#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qzf/bounds.hpp"
#include "qzf/invariants.hpp"
#include "qzf/mckay.hpp"
#include "qzf/wreath.hpp"

namespace qzf {

using Json = nlohmann::ordered_json;

enum class Verdict { Pass, Fail, Corrected, Skipped };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// Verdicts plus exact data for one command. Wall time is kept out of the JSON
/// so that identical invocations serialize identically.
struct Report {
  std::string command;
  Json args = Json::object();
  std::vector<Check> checks;
  Json data = Json::object();
  double wall_seconds = 0;

  void check(std::string name, bool ok, std::string detail = "");
  void add(Check c) { checks.push_back(std::move(c)); }
  /// No check failed.
  bool passed() const;
  bool any_skipped() const;

  /// Numbers in args and data are written as decimal strings.
  Json to_json() const;
  static Report from_json(const Json& j);
  /// One line per check: "[pass] name: detail".
  std::string text() const;
};

/// {"conductor": m, "terms": [[a, b, "coefficient"], ...]}; m is the lcm of the given conductor and
/// those of the coefficients.
Json to_json(const Polynomial& p, int conductor);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const NumerologyReport& r);
Json to_json(const AppendixReport& r);
Json to_json(const GammaContext& ctx);
Json to_json(const LCharacter& L);
Json to_json(const ZeroFiber& z);
Json to_json(const IdentityEntry& e, int conductor);
Json to_json(const TableRow& r);
Json to_json(const LowerBoundReport& r);

}  // namespace qzf
