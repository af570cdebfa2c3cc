#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equm/acts.hpp"
#include "equm/interval_set.hpp"
#include "equm/lottery.hpp"
#include "equm/prefcore.hpp"
#include "equm/solver.hpp"
#include "equm/sweep.hpp"

namespace equm {

/// A finitely generated convex set of lotteries under one utility assignment,
/// optionally with an act model. Universal postulates are checked over the
/// mixture closure of the generators.
struct PrefStructure {
  Regime regime = Regime::Standard;
  UtilityAssignment utility;
  std::vector<Lottery> generators;
  std::optional<AAModel> model;
  std::vector<Act> generator_acts;
  int grid_denominator = 8;
  int closure_depth = 1;
};

enum class Postulate { A1, A2, A3, B2, A2Prime, A3Prime, A3DoublePrime, Gamma, A4, A5Prime };

/// "A1", "A2", "A3", "B2", "A'2", "A'3", "A''3", "gamma", "A4", "A'5".
std::string_view to_string(Postulate p) noexcept;
Postulate parse_postulate(std::string_view text);

/// Re-checkable evidence of a violated postulate.
struct Certificate {
  Postulate postulate = Postulate::A1;
  std::vector<std::pair<std::string, Lottery>> lotteries;  // by role: p, q, r, ...
  std::vector<std::pair<std::string, Act>> acts;
  std::optional<StateId> state;
  std::optional<NSReal> weight;
  std::vector<std::pair<std::string, NSReal>> values;  // evaluated utilities
  std::string claim;

  const Lottery& lottery(std::string_view role) const;
  const Act& act(std::string_view role) const;
};

struct Verdict {
  Postulate postulate = Postulate::A1;
  bool holds = true;
  std::size_t cases = 0;
  std::size_t applicable = 0;
  std::string domain;
  std::optional<std::string> witness;      // e.g. "alpha=1/2" for existential postulates
  std::optional<Certificate> counterexample;  // present iff !holds
};

struct AuditReport {
  Regime regime = Regime::Standard;
  std::string domain;
  std::vector<Verdict> verdicts;

  bool all_hold() const;
  const Verdict* find(Postulate p) const;
};

/// Closure of the structure's generators with its grid.
std::vector<Lottery> mixture_closure(const PrefStructure& s, int depth);

Verdict check_A1(const PrefStructure& s, Execution execution = Execution::Parallel);
Verdict check_A2(const PrefStructure& s, Execution execution = Execution::Parallel);
Verdict check_A3(const PrefStructure& s, Execution execution = Execution::Parallel);
/// RegimeMismatch outside NonstandardProbability.
Verdict check_B2(const PrefStructure& s, Execution execution = Execution::Parallel);
/// RegimeMismatch outside NonstandardUtility.
Verdict check_A2prime(const PrefStructure& s, Execution execution = Execution::Parallel);
Verdict check_A3prime(const PrefStructure& s, Execution execution = Execution::Parallel);
Verdict check_A3doubleprime(const PrefStructure& s, Execution execution = Execution::Parallel);
/// RegimeMismatch in NonstandardProbability.
Verdict check_gamma_property(const PrefStructure& s, Execution execution = Execution::Parallel);
/// MissingModel without an act model.
Verdict check_A4(const PrefStructure& s, Execution execution = Execution::Parallel);
Verdict check_A5prime(const PrefStructure& s, Execution execution = Execution::Parallel);

Verdict check(Postulate p, const PrefStructure& s, Execution execution = Execution::Parallel);

/// The postulates that apply to the structure: A1-A3 always, B2 for
/// nonstandard probabilities, A'2/A'3/A''3 for unsigned nonstandard utilities,
/// gamma outside nonstandard probabilities, A4 (and A'5 for unsigned
/// nonstandard utilities) when an act model is present.
std::vector<Postulate> default_postulates(const PrefStructure& s);

AuditReport run_audit(const PrefStructure& s, const std::vector<Postulate>& postulates,
                      Execution execution = Execution::Parallel);
AuditReport run_audit(const PrefStructure& s, Execution execution = Execution::Parallel);

/// Re-evaluates a counterexample through the preference functions; true iff
/// the violation is confirmed.
bool replay(const Certificate& c, const PrefStructure& s);

/// Weights used by the B2 check: the grid k/D plus eps, eps/2, 1 - eps, 1/2 + eps.
std::vector<NSReal> b2_weights(int grid_denominator);

/// Componentwise pairs ordered lexicographically; a contrast model that is
/// not a qualitative expected-utility order.
using LexPair = std::pair<Rational, Rational>;
PrefOrdering lexicographic_compare(const LexPair& v, const LexPair& w);
/// lambda v + (1 - lambda) w, componentwise.
LexPair lexicographic_mix(const Rational& lambda, const LexPair& v, const LexPair& w);
/// Weights alpha in (0, 1) with alpha p + (1 - alpha) r  `relation`  q, decided
/// exactly: each component is affine in alpha.
RationalIntervalSet lexicographic_solve(const LexPair& p, const LexPair& r, const LexPair& q,
                                        PrefOrdering relation);

}  // namespace equm
