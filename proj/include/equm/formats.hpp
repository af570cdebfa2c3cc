#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equm/acts.hpp"
#include "equm/auditor.hpp"
#include "equm/lottery.hpp"
#include "equm/nsreal.hpp"

namespace equm {

/*
 * NSREAL   := ["+"|"-"] TERM (("+"|"-") TERM)*
 * TERM     := RATIONAL | RATIONAL "*" EPS | EPS
 * EPS      := "eps" ["^" SIGNED_INT]
 * RATIONAL := INT ["/" POSINT]
 *
 * Whitespace between tokens is ignored. Throws SyntaxError (with the column)
 * or ZeroDenominator.
 */
NSReal parse_nsreal(std::string_view text);

/// Canonical text: increasing exponent, " + " / " - " between terms,
/// "a/b*eps^k", bare rational at exponent 0, "eps" at exponent 1, no "/1",
/// no unit coefficient. Zero renders as "0".
std::string render_nsreal(const NSReal& x);

/// "{a: 1/2, b: 1/2 - eps}"
std::string render_lottery(const Lottery& p);

/// Parsed and validated model file.
struct ModelDocument {
  Regime regime = Regime::Standard;
  std::vector<OutcomeId> outcomes;  // declaration order
  UtilityAssignment utility;
  std::vector<std::pair<std::string, Lottery>> lotteries;
  std::optional<StateSpace> states;
  Belief belief;
  std::vector<std::pair<std::string, Act>> acts;
  int grid_denominator = 8;
  int closure_depth = 1;
  std::vector<std::string> generator_ids;      // empty: every lottery and outcome
  std::vector<std::string> generator_act_ids;  // empty: every act

  const Lottery* find_lottery(std::string_view id) const;
  const Act* find_act(std::string_view id) const;
  /// A lottery id, or an outcome id read as its degenerate lottery. Throws UnknownId.
  Lottery resolve_lottery(std::string_view id) const;
  std::optional<AAModel> model() const;
  PrefStructure structure() const;
};

/// Regime constraints, referential integrity, utilities for every referenced
/// outcome. Throws SchemaError or RegimeViolation.
void validate(const ModelDocument& doc);

/// Throws SyntaxError, SchemaError (with a section/key path and line number),
/// RegimeViolation.
ModelDocument parse_model(std::string_view text);
ModelDocument load_model(const std::filesystem::path& path);

enum class OutputMode { Human, Machine };

std::string render_certificate(const Certificate& c, OutputMode mode);
std::string render_report(const AuditReport& report, OutputMode mode);

}  // namespace equm
