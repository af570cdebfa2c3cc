#include "equm/auditor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equm/error.hpp"

namespace equm {

std::string_view to_string(Postulate p) noexcept {
  switch (p) {
    case Postulate::A1: return "A1";
    case Postulate::A2: return "A2";
    case Postulate::A3: return "A3";
    case Postulate::B2: return "B2";
    case Postulate::A2Prime: return "A'2";
    case Postulate::A3Prime: return "A'3";
    case Postulate::A3DoublePrime: return "A''3";
    case Postulate::Gamma: return "gamma";
    case Postulate::A4: return "A4";
    case Postulate::A5Prime: return "A'5";
  }
  return "?";
}

Postulate parse_postulate(std::string_view text) {
  for (auto p : {Postulate::A1, Postulate::A2, Postulate::A3, Postulate::B2, Postulate::A2Prime,
                 Postulate::A3Prime, Postulate::A3DoublePrime, Postulate::Gamma, Postulate::A4,
                 Postulate::A5Prime})
    if (to_string(p) == text) return p;
  throw Error(ErrorCode::SchemaError, "unknown postulate '" + std::string(text) + "'");
}

const Lottery& Certificate::lottery(std::string_view role) const {
  for (const auto& [name, p] : lotteries)
    if (name == role) return p;
  throw Error(ErrorCode::UnknownId, "certificate has no lottery " + std::string(role));
}

const Act& Certificate::act(std::string_view role) const {
  for (const auto& [name, a] : acts)
    if (name == role) return a;
  throw Error(ErrorCode::UnknownId, "certificate has no act " + std::string(role));
}

bool AuditReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

const Verdict* AuditReport::find(Postulate p) const {
  for (const auto& v : verdicts)
    if (v.postulate == p) return &v;
  return nullptr;
}

std::vector<Lottery> mixture_closure(const PrefStructure& s, int depth) {
  return mixture_closure(s.generators, s.grid_denominator, depth);
}

std::vector<NSReal> b2_weights(int grid_denominator) {
  std::vector<NSReal> w;
  for (int k = 1; k < grid_denominator; ++k) w.emplace_back(make_rational(k, grid_denominator));
  w.push_back(NSReal::eps());
  w.push_back(NSReal::monomial(make_rational(1, 2), 1));
  w.push_back(NSReal(1) - NSReal::eps());
  w.push_back(NSReal(make_rational(1, 2)) + NSReal::eps());
  return w;
}

namespace {

// Distinct utility values of the closure, with one representative lottery
// each, and the pairwise comparison matrix. Every postulate on lotteries
// depends on the lotteries only through their expected utilities.
struct Domain {
  std::vector<Lottery> lotteries;
  std::vector<NSReal> values;
  std::vector<PrefOrdering> matrix;
  std::size_t closure_size = 0;
  std::string description;

  std::size_t size() const { return values.size(); }
  PrefOrdering cmp(std::size_t a, std::size_t b) const { return matrix[a * size() + b]; }
  bool better(std::size_t a, std::size_t b) const { return cmp(a, b) == PrefOrdering::Better; }
};

Domain make_domain(const PrefStructure& s) {
  if (s.generators.empty()) throw Error(ErrorCode::PreconditionViolated, "no generator lotteries");
  if (s.grid_denominator < 2) throw Error(ErrorCode::PreconditionViolated, "grid denominator < 2");
  Domain d;
  const auto closure = mixture_closure(s, s.closure_depth);
  d.closure_size = closure.size();
  std::map<NSReal, std::size_t> index;
  for (const auto& p : closure) {
    NSReal u = expected_utility(p, s.utility);
    if (index.emplace(u, d.values.size()).second) {
      d.values.push_back(std::move(u));
      d.lotteries.push_back(p);
    }
  }
  const std::size_t n = d.size();
  d.matrix.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.matrix[a * n + b] = compare_values(d.values[a], d.values[b], s.regime);

  std::ostringstream desc;
  desc << "closure depth " << s.closure_depth << ", grid 1/" << s.grid_denominator << ": "
       << d.closure_size << " lotteries, " << n << " distinct utilities";
  d.description = desc.str();
  return d;
}

struct Triple {
  std::size_t p, q, r;
};

Triple decode(std::size_t i, std::size_t n) { return {i / (n * n), (i / n) % n, i % n}; }

NSReal mixed(const Rational& lambda, const NSReal& a, const NSReal& b) {
  return AffineValue::mixture(a, b).at(lambda);
}

NSReal mixed(const NSReal& lambda, const NSReal& a, const NSReal& b) {
  return lambda * a + (NSReal(1) - lambda) * b;
}

std::vector<Rational> grid(int denominator) {
  std::vector<Rational> w;
  for (int k = 1; k < denominator; ++k) w.push_back(make_rational(k, denominator));
  return w;
}

Verdict make_verdict(Postulate p, const Domain& d, const SweepResult& r) {
  Verdict v;
  v.postulate = p;
  v.holds = !r.first_violation;
  v.cases = r.cases;
  v.applicable = r.applicable;
  v.domain = d.description;
  return v;
}

Certificate triple_certificate(Postulate postulate, const Domain& d, const Triple& t) {
  Certificate c;
  c.postulate = postulate;
  c.lotteries = {{"p", d.lotteries[t.p]}, {"q", d.lotteries[t.q]}, {"r", d.lotteries[t.r]}};
  c.values = {{"u(p)", d.values[t.p]}, {"u(q)", d.values[t.q]}, {"u(r)", d.values[t.r]}};
  return c;
}

void require_regime(const PrefStructure& s, std::initializer_list<Regime> allowed, Postulate p) {
  if (std::find(allowed.begin(), allowed.end(), s.regime) == allowed.end())
    throw Error(ErrorCode::RegimeMismatch, std::string(to_string(p)) + " does not apply in regime " +
                                               std::string(to_string(s.regime)));
}

const AAModel& require_model(const PrefStructure& s) {
  if (!s.model) throw Error(ErrorCode::MissingModel, "act postulates need an act model");
  if (s.generator_acts.empty()) throw Error(ErrorCode::MissingModel, "no generator acts");
  return *s.model;
}

std::string render_witness(std::string_view name, const RationalIntervalSet& set) {
  return std::string(name) + "=" + set.witness()->get_str();
}

// First applicable case, for recording an example witness of a postulate that holds.
template <class F>
std::optional<std::string> first_witness(std::size_t n, F&& witness_at) {
  for (std::size_t i = 0; i < n; ++i)
    if (auto w = witness_at(i)) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Verdict check_A1(const PrefStructure& s, const Domain& d, Execution execution) {
  const std::size_t n = d.size();
  const SweepResult asym = sweep(
      n * n,
      [&](std::size_t i) {
        const std::size_t a = i / n, b = i % n;
        if (!d.better(a, b)) return CaseOutcome::NotApplicable;
        return d.better(b, a) ? CaseOutcome::Violated : CaseOutcome::Satisfied;
      },
      execution);
  if (asym.first_violation) {
    Verdict v = make_verdict(Postulate::A1, d, asym);
    const std::size_t a = *asym.first_violation / n, b = *asym.first_violation % n;
    Certificate c = triple_certificate(Postulate::A1, d, {a, b, b});
    c.lotteries.pop_back();
    c.values.pop_back();
    c.claim = "asymmetry: p > q and q > p";
    v.counterexample = std::move(c);
    return v;
  }

  const SweepResult trans = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!d.better(t.p, t.r)) return CaseOutcome::NotApplicable;
        return d.better(t.p, t.q) || d.better(t.q, t.r) ? CaseOutcome::Satisfied
                                                         : CaseOutcome::Violated;
      },
      execution);
  Verdict v = make_verdict(Postulate::A1, d, trans);
  v.cases += asym.cases;
  v.applicable += asym.applicable;
  if (trans.first_violation) {
    Certificate c = triple_certificate(Postulate::A1, d, decode(*trans.first_violation, n));
    c.claim = "negative transitivity: p > r, yet neither p > q nor q > r";
    v.counterexample = std::move(c);
  }
  (void)s;
  return v;
}

Verdict check_A2(const PrefStructure& s, const Domain& d, Execution execution) {
  const std::size_t n = d.size();
  const auto weights = grid(s.grid_denominator);
  auto failing_weight = [&](const Triple& t) -> const Rational* {
    for (const auto& w : weights)
      if (compare_values(mixed(w, d.values[t.p], d.values[t.r]), mixed(w, d.values[t.q], d.values[t.r]),
                         s.regime) != PrefOrdering::Better)
        return &w;
    return nullptr;
  };
  const SweepResult r = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!d.better(t.p, t.q)) return CaseOutcome::NotApplicable;
        return failing_weight(t) ? CaseOutcome::Violated : CaseOutcome::Satisfied;
      },
      execution);
  Verdict v = make_verdict(Postulate::A2, d, r);
  if (r.first_violation) {
    const Triple t = decode(*r.first_violation, n);
    const Rational w = *failing_weight(t);
    Certificate c = triple_certificate(Postulate::A2, d, t);
    c.weight = NSReal(w);
    const NSReal left = mixed(w, d.values[t.p], d.values[t.r]);
    const NSReal right = mixed(w, d.values[t.q], d.values[t.r]);
    c.values.emplace_back("u(lambda p + (1-lambda) r)", left);
    c.values.emplace_back("u(lambda q + (1-lambda) r)", right);
    c.claim = "p > q, but the mixtures with r are " +
              std::string(to_string(compare_values(left, right, s.regime)));
    v.counterexample = std::move(c);
  }
  return v;
}

Verdict check_A3(const PrefStructure& s, const Domain& d, Execution execution) {
  const std::size_t n = d.size();
  auto sets = [&](const Triple& t) {
    return std::pair{
        solve_mixture_relation(d.values[t.p], d.values[t.r], d.values[t.q], QOrdering::Greater, s.regime),
        solve_mixture_relation(d.values[t.p], d.values[t.r], d.values[t.q], QOrdering::Less, s.regime)};
  };
  auto chain = [&](const Triple& t) { return d.better(t.p, t.q) && d.better(t.q, t.r); };
  const SweepResult r = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!chain(t)) return CaseOutcome::NotApplicable;
        auto [alpha, beta] = sets(t);
        return alpha.empty() || beta.empty() ? CaseOutcome::Violated : CaseOutcome::Satisfied;
      },
      execution);
  Verdict v = make_verdict(Postulate::A3, d, r);
  if (r.first_violation) {
    const Triple t = decode(*r.first_violation, n);
    auto [alpha, beta] = sets(t);
    Certificate c = triple_certificate(Postulate::A3, d, t);
    c.claim = alpha.empty() ? "p > q > r, but no alpha gives alpha p + (1-alpha) r > q"
                            : "p > q > r, but no beta gives q > beta p + (1-beta) r";
    v.counterexample = std::move(c);
  } else {
    v.witness = first_witness(n * n * n, [&](std::size_t i) -> std::optional<std::string> {
      const Triple t = decode(i, n);
      if (!chain(t)) return std::nullopt;
      auto [alpha, beta] = sets(t);
      return render_witness("alpha", alpha) + " " + render_witness("beta", beta);
    });
  }
  return v;
}

Verdict check_B2(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::NonstandardProbability}, Postulate::B2);
  const NegligibilityOptions options{s.grid_denominator, s.closure_depth};
  std::vector<NSReal> weights;
  for (auto& w : b2_weights(s.grid_denominator))
    if (!is_negligible(w, s.utility, s.generators, options)) weights.push_back(std::move(w));

  const std::size_t n = d.size();
  auto failing_weight = [&](const Triple& t) -> const NSReal* {
    for (const auto& w : weights)
      if (compare_values(mixed(w, d.values[t.p], d.values[t.r]), mixed(w, d.values[t.q], d.values[t.r]),
                         s.regime) != PrefOrdering::Better)
        return &w;
    return nullptr;
  };
  const SweepResult r = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!d.better(t.p, t.q) || weights.empty()) return CaseOutcome::NotApplicable;
        return failing_weight(t) ? CaseOutcome::Violated : CaseOutcome::Satisfied;
      },
      execution);
  Verdict v = make_verdict(Postulate::B2, d, r);
  v.domain += ", " + std::to_string(weights.size()) + " non-negligible weights";
  if (r.first_violation) {
    const Triple t = decode(*r.first_violation, n);
    Certificate c = triple_certificate(Postulate::B2, d, t);
    c.weight = *failing_weight(t);
    c.claim = "p > q and lambda is not negligible, but the mixtures with r are not strictly ordered";
    v.counterexample = std::move(c);
  }
  return v;
}

Verdict check_A2prime(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::NonstandardUtility}, Postulate::A2Prime);
  const std::size_t n = d.size();
  auto better_set = [&](const Triple& t) {
    return solve_relation(AffineValue::mixture(d.values[t.p], d.values[t.r]),
                          AffineValue::mixture(d.values[t.q], d.values[t.r]), PrefOrdering::Better,
                          s.regime);
  };
  const SweepResult r = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!d.better(t.p, t.q) || overrides_value(d.values[t.r], d.values[t.p], s.regime))
          return CaseOutcome::NotApplicable;
        return better_set(t).is_open_unit() ? CaseOutcome::Satisfied : CaseOutcome::Violated;
      },
      execution);
  Verdict v = make_verdict(Postulate::A2Prime, d, r);
  if (r.first_violation) {
    const Triple t = decode(*r.first_violation, n);
    Certificate c = triple_certificate(Postulate::A2Prime, d, t);
    c.weight = NSReal(*better_set(t).complement().witness());
    c.claim = "p > q and r does not override p, but some mixture with r is not strictly ordered";
    v.counterexample = std::move(c);
  }
  return v;
}

// Shared shape of A'3, A''3 and gamma: over chains p > q > r, a solver set must
// be nonempty whenever the antecedent holds.
template <class Antecedent>
Verdict check_existential(Postulate postulate, const PrefStructure& s, const Domain& d,
                          Execution execution, QOrdering relation, std::string_view witness_name,
                          Antecedent&& antecedent, std::string claim) {
  const std::size_t n = d.size();
  auto solve = [&](const Triple& t) {
    return solve_mixture_relation(d.values[t.p], d.values[t.r], d.values[t.q], relation, s.regime);
  };
  auto applies = [&](const Triple& t) {
    return d.better(t.p, t.q) && d.better(t.q, t.r) && antecedent(t);
  };
  const SweepResult r = sweep(
      n * n * n,
      [&](std::size_t i) {
        const Triple t = decode(i, n);
        if (!applies(t)) return CaseOutcome::NotApplicable;
        return solve(t).empty() ? CaseOutcome::Violated : CaseOutcome::Satisfied;
      },
      execution);
  Verdict v = make_verdict(postulate, d, r);
  if (r.first_violation) {
    Certificate c = triple_certificate(postulate, d, decode(*r.first_violation, n));
    c.claim = std::move(claim);
    v.counterexample = std::move(c);
  } else {
    v.witness = first_witness(n * n * n, [&](std::size_t i) -> std::optional<std::string> {
      const Triple t = decode(i, n);
      if (!applies(t)) return std::nullopt;
      return render_witness(witness_name, solve(t));
    });
  }
  return v;
}

Verdict check_A3prime(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::NonstandardUtility}, Postulate::A3Prime);
  return check_existential(Postulate::A3Prime, s, d, execution, QOrdering::Greater, "alpha",
                           [](const Triple&) { return true; },
                           "p > q > r, but no alpha gives alpha p + (1-alpha) r > q");
}

Verdict check_A3doubleprime(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::NonstandardUtility}, Postulate::A3DoublePrime);
  return check_existential(
      Postulate::A3DoublePrime, s, d, execution, QOrdering::Less, "beta",
      [&](const Triple& t) { return !overrides_value(d.values[t.p], d.values[t.q], s.regime); },
      "p > q > r and p does not override q, but no beta gives q > beta p + (1-beta) r");
}

Verdict check_gamma(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::Standard, Regime::NonstandardUtility}, Postulate::Gamma);
  return check_existential(
      Postulate::Gamma, s, d, execution, QOrdering::Equivalent, "gamma",
      [&](const Triple& t) {
        return !solve_mixture_relation(d.values[t.p], d.values[t.r], d.values[t.q], QOrdering::Less,
                                       s.regime)
                    .empty();
      },
      "p > q > r and some beta gives q > beta p + (1-beta) r, but no gamma gives q ~ gamma p + "
      "(1-gamma) r");
}

Verdict check_A4(const PrefStructure& s, const Domain& d, Execution execution) {
  const AAModel& m = require_model(s);
  const auto& acts = s.generator_acts;
  const auto& states = m.states.states();
  const std::size_t g = acts.size(), ns = states.size();
  auto decode_case = [&](std::size_t i) {
    return std::tuple{i / (g * ns), (i / ns) % g, i % ns};
  };
  auto violates = [&](const Act& a, const Act& b, const StateId& st) {
    if (act_prefers(a, b, m) != PrefOrdering::Better) return CaseOutcome::NotApplicable;
    return act_prefers(constant_act(a.at(st), m.states), constant_act(b.at(st), m.states), m) ==
                   PrefOrdering::Better
               ? CaseOutcome::Satisfied
               : CaseOutcome::Violated;
  };
  const SweepResult r = sweep(
      g * g * ns,
      [&](std::size_t i) {
        auto [ai, bi, si] = decode_case(i);
        const Act b = acts[ai].with(states[si], acts[bi].at(states[si]));
        return violates(acts[ai], b, states[si]);
      },
      execution);
  Verdict v = make_verdict(Postulate::A4, d, r);
  v.domain = std::to_string(g) + " generator acts, " + std::to_string(ns) + " states";
  if (r.first_violation) {
    auto [ai, bi, si] = decode_case(*r.first_violation);
    Certificate c;
    c.postulate = Postulate::A4;
    c.acts = {{"a", acts[ai]}, {"b", acts[ai].with(states[si], acts[bi].at(states[si]))}};
    c.state = states[si];
    c.values = {{"U(a)", act_utility(c.acts[0].second, m)}, {"U(b)", act_utility(c.acts[1].second, m)}};
    c.claim = "a and b agree off the state and a > b, but a(state) is not preferred to b(state)";
    v.counterexample = std::move(c);
  }
  return v;
}

Verdict check_A5prime(const PrefStructure& s, const Domain& d, Execution execution) {
  require_regime(s, {Regime::NonstandardUtility}, Postulate::A5Prime);
  const AAModel& m = require_model(s);
  const auto& acts = s.generator_acts;
  const auto& states = m.states.states();
  std::vector<char> null_state;
  for (const auto& t : states) null_state.push_back(is_null(t, m, acts) ? 1 : 0);

  const std::size_t g = acts.size();
  auto overriding = [&](std::size_t ti, std::size_t ai) {
    const Act& a = acts[ai];
    return overrides_value(act_utility(constant_act(a.at(states[ti]), m.states), m), act_utility(a, m),
                           m.regime);
  };
  const SweepResult r = sweep(
      states.size() * g,
      [&](std::size_t i) {
        const std::size_t ti = i / g, ai = i % g;
        if (!overriding(ti, ai)) return CaseOutcome::NotApplicable;
        return null_state[ti] ? CaseOutcome::Satisfied : CaseOutcome::Violated;
      },
      execution);
  Verdict v = make_verdict(Postulate::A5Prime, d, r);
  v.domain = std::to_string(g) + " generator acts, " + std::to_string(states.size()) + " states";
  if (r.first_violation) {
    const std::size_t ti = *r.first_violation / g, ai = *r.first_violation % g;
    Certificate c;
    c.postulate = Postulate::A5Prime;
    c.acts = {{"a", acts[ai]}};
    c.state = states[ti];
    c.values = {{"U(a(t))", act_utility(constant_act(acts[ai].at(states[ti]), m.states), m)},
                {"U(a)", act_utility(acts[ai], m)}};
    c.claim = "a(t) overrides a, but t is not null";
    v.counterexample = std::move(c);
  }
  return v;
}

Verdict dispatch(Postulate p, const PrefStructure& s, const Domain& d, Execution e) {
  switch (p) {
    case Postulate::A1: return check_A1(s, d, e);
    case Postulate::A2: return check_A2(s, d, e);
    case Postulate::A3: return check_A3(s, d, e);
    case Postulate::B2: return check_B2(s, d, e);
    case Postulate::A2Prime: return check_A2prime(s, d, e);
    case Postulate::A3Prime: return check_A3prime(s, d, e);
    case Postulate::A3DoublePrime: return check_A3doubleprime(s, d, e);
    case Postulate::Gamma: return check_gamma(s, d, e);
    case Postulate::A4: return check_A4(s, d, e);
    case Postulate::A5Prime: return check_A5prime(s, d, e);
  }
  throw Error(ErrorCode::PreconditionViolated, "unknown postulate");
}

}  // namespace

Verdict check(Postulate p, const PrefStructure& s, Execution execution) {
  return dispatch(p, s, make_domain(s), execution);
}

Verdict check_A1(const PrefStructure& s, Execution e) { return check(Postulate::A1, s, e); }
Verdict check_A2(const PrefStructure& s, Execution e) { return check(Postulate::A2, s, e); }
Verdict check_A3(const PrefStructure& s, Execution e) { return check(Postulate::A3, s, e); }
Verdict check_B2(const PrefStructure& s, Execution e) { return check(Postulate::B2, s, e); }
Verdict check_A2prime(const PrefStructure& s, Execution e) { return check(Postulate::A2Prime, s, e); }
Verdict check_A3prime(const PrefStructure& s, Execution e) { return check(Postulate::A3Prime, s, e); }
Verdict check_A3doubleprime(const PrefStructure& s, Execution e) {
  return check(Postulate::A3DoublePrime, s, e);
}
Verdict check_gamma_property(const PrefStructure& s, Execution e) { return check(Postulate::Gamma, s, e); }
Verdict check_A4(const PrefStructure& s, Execution e) { return check(Postulate::A4, s, e); }
Verdict check_A5prime(const PrefStructure& s, Execution e) { return check(Postulate::A5Prime, s, e); }

std::vector<Postulate> default_postulates(const PrefStructure& s) {
  std::vector<Postulate> out{Postulate::A1, Postulate::A2, Postulate::A3};
  const bool qualitative = s.regime == Regime::NonstandardUtility && !s.utility.is_signed();
  if (s.regime == Regime::NonstandardProbability) out.push_back(Postulate::B2);
  if (qualitative) {
    out.insert(out.end(), {Postulate::A2Prime, Postulate::A3Prime, Postulate::A3DoublePrime});
  }
  if (s.regime == Regime::Standard || qualitative) out.push_back(Postulate::Gamma);
  if (s.model && !s.generator_acts.empty()) {
    out.push_back(Postulate::A4);
    if (qualitative) out.push_back(Postulate::A5Prime);
  }
  return out;
}

AuditReport run_audit(const PrefStructure& s, const std::vector<Postulate>& postulates,
                      Execution execution) {
  const Domain d = make_domain(s);
  AuditReport report;
  report.regime = s.regime;
  report.domain = d.description;
  for (auto p : postulates) report.verdicts.push_back(dispatch(p, s, d, execution));
  return report;
}

AuditReport run_audit(const PrefStructure& s, Execution execution) {
  return run_audit(s, default_postulates(s), execution);
}

bool replay(const Certificate& c, const PrefStructure& s) {
  const auto& u = s.utility;
  const Regime reg = s.regime;
  auto pref = [&](const Lottery& a, const Lottery& b) { return prefers(a, b, u, reg); };
  auto chain = [&] {
    return pref(c.lottery("p"), c.lottery("q")) == PrefOrdering::Better &&
           pref(c.lottery("q"), c.lottery("r")) == PrefOrdering::Better;
  };
  auto eu = [&](std::string_view role) { return expected_utility(c.lottery(role), u); };
  auto mixtures_not_ordered = [&] {
    const Lottery& r = c.lottery("r");
    return pref(mix(*c.weight, c.lottery("p"), r, reg), mix(*c.weight, c.lottery("q"), r, reg)) !=
           PrefOrdering::Better;
  };

  switch (c.postulate) {
    case Postulate::A1:
      if (c.lotteries.size() == 2)
        return pref(c.lottery("p"), c.lottery("q")) == PrefOrdering::Better &&
               pref(c.lottery("q"), c.lottery("p")) == PrefOrdering::Better;
      return pref(c.lottery("p"), c.lottery("r")) == PrefOrdering::Better &&
             pref(c.lottery("p"), c.lottery("q")) != PrefOrdering::Better &&
             pref(c.lottery("q"), c.lottery("r")) != PrefOrdering::Better;
    case Postulate::A2:
      return pref(c.lottery("p"), c.lottery("q")) == PrefOrdering::Better && mixtures_not_ordered();
    case Postulate::B2:
      return !is_negligible(*c.weight, u, s.generators, {s.grid_denominator, s.closure_depth}) &&
             pref(c.lottery("p"), c.lottery("q")) == PrefOrdering::Better && mixtures_not_ordered();
    case Postulate::A2Prime:
      return pref(c.lottery("p"), c.lottery("q")) == PrefOrdering::Better &&
             !overrides(c.lottery("r"), c.lottery("p"), u, reg) && mixtures_not_ordered();
    case Postulate::A3:
      return chain() &&
             (solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Greater, reg).empty() ||
              solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Less, reg).empty());
    case Postulate::A3Prime:
      return chain() &&
             solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Greater, reg).empty();
    case Postulate::A3DoublePrime:
      return chain() && !overrides(c.lottery("p"), c.lottery("q"), u, reg) &&
             solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Less, reg).empty();
    case Postulate::Gamma:
      return chain() &&
             !solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Less, reg).empty() &&
             solve_mixture_relation(eu("p"), eu("r"), eu("q"), QOrdering::Equivalent, reg).empty();
    case Postulate::A4: {
      const AAModel& m = require_model(s);
      const Act& a = c.act("a");
      const Act& b = c.act("b");
      for (const auto& st : m.states.states())
        if (st != *c.state && !(a.at(st) == b.at(st))) return false;
      return act_prefers(a, b, m) == PrefOrdering::Better &&
             act_prefers(constant_act(a.at(*c.state), m.states), constant_act(b.at(*c.state), m.states),
                         m) != PrefOrdering::Better;
    }
    case Postulate::A5Prime: {
      const AAModel& m = require_model(s);
      const Act& a = c.act("a");
      return overrides_value(act_utility(constant_act(a.at(*c.state), m.states), m), act_utility(a, m),
                             m.regime) &&
             !is_null(*c.state, m, s.generator_acts);
    }
  }
  return false;
}

PrefOrdering lexicographic_compare(const LexPair& v, const LexPair& w) {
  if (v.first != w.first) return v.first > w.first ? PrefOrdering::Better : PrefOrdering::Worse;
  if (v.second != w.second) return v.second > w.second ? PrefOrdering::Better : PrefOrdering::Worse;
  return PrefOrdering::Indifferent;
}

LexPair lexicographic_mix(const Rational& lambda, const LexPair& v, const LexPair& w) {
  const Rational rest = 1 - lambda;
  return {lambda * v.first + rest * w.first, lambda * v.second + rest * w.second};
}

RationalIntervalSet lexicographic_solve(const LexPair& p, const LexPair& r, const LexPair& q,
                                        PrefOrdering relation) {
  // Each component of alpha p + (1 - alpha) r - q is affine in alpha.
  std::vector<Rational> roots;
  const std::pair<Rational, Rational> components[] = {{p.first - r.first, r.first - q.first},
                                                      {p.second - r.second, r.second - q.second}};
  for (const auto& [a, b] : components) {
    if (a == 0) continue;
    Rational root = -b / a;
    if (root > 0 && root < 1) roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  auto holds_at = [&](const Rational& alpha) {
    return lexicographic_compare(lexicographic_mix(alpha, p, r), q) == relation;
  };
  RationalIntervalSet out;
  Rational left = 0;
  for (std::size_t k = 0; k <= roots.size(); ++k) {
    const Rational right = k < roots.size() ? roots[k] : Rational(1);
    if (holds_at(Rational((left + right) / 2))) out.append({left, right, false, false});
    if (k < roots.size() && holds_at(right)) out.append({right, right, true, true});
    left = right;
  }
  return out;
}

}  // namespace equm
