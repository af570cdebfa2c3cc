#include <gtest/gtest.h>

#include "equm/error.hpp"
#include "equm/formats.hpp"
#include "equm/prefcore.hpp"
#include "equm/solver.hpp"
#include "support/oracles.hpp"

namespace equm {
namespace {

NSReal eps(int k = 1) { return NSReal::eps(k); }
NSReal q(long n, long d = 1) { return NSReal(make_rational(n, d)); }
Lottery delta(const std::string& o) { return Lottery::degenerate(o); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvariantViolation;
}

UtilityAssignment utilities(std::initializer_list<std::pair<const OutcomeId, NSReal>> list) {
  return UtilityAssignment(UtilityAssignment::Map(list));
}

TEST(Lottery, Validation) {
  EXPECT_EQ(code_of([] { Lottery({{"a", q(1, 2)}, {"b", q(1, 3)}}); }), ErrorCode::InvalidLottery);
  EXPECT_EQ(code_of([] { Lottery({{"a", q(3, 2)}, {"b", q(-1, 2)}}); }), ErrorCode::InvalidLottery);
  const Lottery p({{"a", q(1)}, {"b", NSReal{}}});
  EXPECT_EQ(p.probabilities().size(), 1u);
  EXPECT_EQ(p, delta("a"));
}

TEST(Mix, Cases) {
  const Lottery p({{"a", q(1, 3)}, {"b", q(2, 3)}});
  EXPECT_EQ(mix(q(1, 2), p, p), p);
  EXPECT_EQ(mix(q(1, 4), delta("x0"), delta("x2"), Regime::Standard),
            Lottery({{"x0", q(1, 4)}, {"x2", q(3, 4)}}));
  EXPECT_EQ(mix(eps(), delta("win"), delta("lose"), Regime::NonstandardProbability),
            Lottery({{"win", eps()}, {"lose", q(1) - eps()}}));
  EXPECT_EQ(code_of([&] { mix(eps(), p, p, Regime::NonstandardUtility); }), ErrorCode::InvalidWeight);
  EXPECT_EQ(code_of([&] { mix(q(1), p, p); }), ErrorCode::InvalidWeight);
  EXPECT_EQ(code_of([&] { mix(q(0), p, p); }), ErrorCode::InvalidWeight);
}

TEST(ExpectedUtility, WorkedValues) {
  const auto u = utilities({{"hawaii", q(1)}, {"magazine", eps()}, {"nothing", q(0)}});
  EXPECT_EQ(expected_utility(Lottery({{"hawaii", q(1, 2)}, {"magazine", q(1, 2)}}), u),
            q(1, 2) + q(1, 2) * eps());
  EXPECT_EQ(expected_utility(delta("magazine"), u), eps());
  EXPECT_EQ(code_of([&] { expected_utility(delta("paris"), u); }), ErrorCode::MissingUtility);

  const auto win = utilities({{"win", q(1)}, {"lose", q(0)}});
  const NSReal face = q(1, 6) - q(1, 6) * eps();
  EXPECT_EQ(case1_functional(Lottery({{"win", face}, {"lose", q(1) - face}}), win), make_rational(1, 6));
  EXPECT_EQ(case1_functional(Lottery({{"win", face + eps()}, {"lose", q(1) - face - eps()}}), win),
            make_rational(1, 6));
}

TEST(ExpectedUtility, IsLinearInMixtures) {
  testing::Gen g(21);
  const auto outcomes = testing::outcome_ids(3);
  for (int i = 0; i < 300; ++i) {
    UtilityAssignment::Map m;
    for (const auto& o : outcomes) m[o] = g.nonnegative_nsreal();
    const UtilityAssignment u(m);
    const Lottery p = g.perturbed_lottery(outcomes), r = g.perturbed_lottery(outcomes);
    const NSReal lambda = g.coin() ? q(g.integer(1, 7), 8) : NSReal::monomial(g.positive_rational(1, 3), 1);
    ASSERT_EQ(expected_utility(mix(lambda, p, r, Regime::General), u),
              lambda * expected_utility(p, u) + (q(1) - lambda) * expected_utility(r, u));
  }
}

TEST(Prefers, WorkedCases) {
  const auto dice = utilities({{"win", q(1)}, {"lose", q(0)}});
  const Lottery e({{"win", eps()}, {"lose", q(1) - eps()}});
  const Lottery f({{"win", q(1, 12) * eps()}, {"lose", q(1) - q(1, 12) * eps()}});
  EXPECT_EQ(prefers(e, f, dice, Regime::General), PrefOrdering::Better);
  EXPECT_EQ(prefers(e, f, dice, Regime::NonstandardProbability), PrefOrdering::Indifferent);

  const auto cons = utilities({{"hawaii", q(1)}, {"magazine", eps()}, {"nothing", q(0)}});
  for (long k = 1; k <= 3; ++k) {
    const Lottery one({{"hawaii", q(k, 4)}, {"nothing", q(4 - k, 4)}});
    const Lottery two({{"hawaii", q(k, 4)}, {"magazine", q(4 - k, 4)}});
    EXPECT_EQ(prefers(two, one, cons, Regime::NonstandardUtility), PrefOrdering::Indifferent);
  }

  const auto surgery = utilities({{"life", eps(-1)}, {"weeks", q(1)}, {"death", q(0)}});
  for (long k : {1L, 10L, 500L, 999L}) {
    const Lottery m({{"life", q(k, 1000)}, {"death", q(1000 - k, 1000)}});
    EXPECT_EQ(prefers(m, delta("weeks"), surgery, Regime::NonstandardUtility), PrefOrdering::Better);
  }
}

TEST(Prefers, StandardRegimeIsClassicalExpectedUtility) {
  testing::Gen g(22);
  const auto outcomes = testing::outcome_ids(4);
  for (int i = 0; i < 300; ++i) {
    UtilityAssignment::Map m;
    std::map<OutcomeId, Rational> raw;
    for (const auto& o : outcomes) {
      raw[o] = make_rational(g.integer(0, 20), g.integer(1, 5));
      m[o] = NSReal(raw[o]);
    }
    const UtilityAssignment u(m);
    const Lottery a = g.standard_lottery(outcomes), b = g.standard_lottery(outcomes);
    Rational ea = 0, eb = 0;
    for (const auto& o : outcomes) {
      ea += standard_part(a.probability(o)) * raw[o];
      eb += standard_part(b.probability(o)) * raw[o];
    }
    const auto expected = ea > eb ? PrefOrdering::Better : ea < eb ? PrefOrdering::Worse : PrefOrdering::Indifferent;
    ASSERT_EQ(prefers(a, b, u, Regime::Standard), expected);
  }
}

TEST(Prefers, WeakOrderOnRandomTriples) {
  testing::Gen g(23);
  const auto outcomes = testing::outcome_ids(3);
  for (Regime regime : {Regime::Standard, Regime::NonstandardUtility, Regime::NonstandardProbability}) {
    for (int i = 0; i < 300; ++i) {
      UtilityAssignment::Map m;
      for (const auto& o : outcomes)
        m[o] = nonstandard_utilities(regime) ? g.nonnegative_nsreal() : q(g.integer(0, 6), 3);
      const UtilityAssignment u(m);
      auto draw = [&] {
        return nonstandard_probabilities(regime) ? g.perturbed_lottery(outcomes) : g.standard_lottery(outcomes);
      };
      const Lottery a = draw(), b = draw(), c = draw();
      const auto ab = prefers(a, b, u, regime), bc = prefers(b, c, u, regime), ac = prefers(a, c, u, regime);
      ASSERT_EQ(ab, reverse(prefers(b, a, u, regime)));
      if (ac == PrefOrdering::Better)
        ASSERT_TRUE(ab == PrefOrdering::Better || bc == PrefOrdering::Better);
      if (ab == PrefOrdering::Indifferent && bc == PrefOrdering::Indifferent)
        ASSERT_EQ(ac, PrefOrdering::Indifferent);
    }
  }
}

TEST(Overrides, WorkedCases) {
  EXPECT_TRUE(overrides_value(q(1), eps()));
  EXPECT_FALSE(overrides_value(q(1), q(1, 2)));
  EXPECT_TRUE(overrides_value(q(1), q(0)));
  EXPECT_TRUE(testing::overrides_definition(q(1), eps()));
  EXPECT_FALSE(testing::overrides_definition(q(1), q(1, 2)));
  EXPECT_TRUE(testing::overrides_definition(q(1), q(0)));
  EXPECT_EQ(code_of([] { overrides_value(q(1), q(-1)); }), ErrorCode::PreconditionViolated);
}

TEST(Overrides, LeadingExponentRuleMatchesDefinition) {
  testing::Gen g(24);
  for (int i = 0; i < 500; ++i) {
    const NSReal a = g.nonnegative_nsreal(), b = g.nonnegative_nsreal();
    const std::vector<NSReal> extra{g.nonnegative_nsreal(), g.nonnegative_nsreal(), b * q(1, 2)};
    ASSERT_EQ(overrides_value(a, b), testing::overrides_definition(a, b, extra))
        << render_nsreal(a) << " over " << render_nsreal(b);
  }
}

TEST(Overrides, AsymmetricAndIrreflexive) {
  testing::Gen g(25);
  for (int i = 0; i < 500; ++i) {
    const NSReal a = g.nonnegative_nsreal(), b = g.nonnegative_nsreal();
    ASSERT_FALSE(overrides_value(a, a));
    ASSERT_FALSE(overrides_value(a, b) && overrides_value(b, a));
  }
}

TEST(Closure, SizeAndContents) {
  const std::vector<Lottery> gens{delta("a"), delta("b")};
  EXPECT_EQ(mixture_closure(gens, 8, 0), gens);
  const auto half = mixture_closure(gens, 2, 1);
  ASSERT_EQ(half.size(), 3u);
  EXPECT_EQ(half[2], Lottery({{"a", q(1, 2)}, {"b", q(1, 2)}}));
  const auto three = mixture_closure({delta("a"), delta("b"), delta("c")}, 4, 1);
  EXPECT_LE(three.size(), 3u + 9u * 3u);
  EXPECT_EQ(three.size(), 3u + 3u * 3u);
}

TEST(Negligible, Cases) {
  const auto u = utilities({{"win", q(1)}, {"lose", q(0)}});
  const std::vector<Lottery> gens{delta("win"), delta("lose")};
  EXPECT_TRUE(is_negligible(eps(), u, gens));
  EXPECT_FALSE(is_negligible(q(1, 2), u, gens));
  const auto flat = utilities({{"a", q(1)}, {"b", q(1)}});
  EXPECT_TRUE(is_negligible(q(1, 3), flat, {delta("a"), delta("b")}));
  EXPECT_EQ(code_of([&] { is_negligible(q(2), u, gens); }), ErrorCode::InvalidWeight);
}

TEST(CaseOne, PseudoLinearity) {
  testing::Gen g(26);
  const auto outcomes = testing::outcome_ids(3);
  for (int i = 0; i < 100; ++i) {
    UtilityAssignment::Map m;
    for (const auto& o : outcomes) m[o] = q(g.integer(0, 12), g.integer(1, 4));
    const UtilityAssignment u(m);
    const Lottery p = g.perturbed_lottery(outcomes), r = g.perturbed_lottery(outcomes);
    const NSReal lambda = g.coin() ? q(g.integer(1, 7), 8) : q(g.integer(1, 7), 8) + NSReal::monomial(g.rational(1, 3), 1);
    const Rational mixed = case1_functional(mix(lambda, p, r), u);
    const NSReal combined = lambda * NSReal(case1_functional(p, u)) +
                            (q(1) - lambda) * NSReal(case1_functional(r, u));
    ASSERT_TRUE(is_infinitesimal(NSReal(mixed) - combined));
    ASSERT_EQ(mixed, standard_part(combined));
  }
}

TEST(PropertyP, Cases) {
  const auto std_u = utilities({{"l", q(1)}, {"p", q(1, 2)}, {"d", q(0)}});
  const auto ok = check_property_P(delta("p"), delta("l"), delta("d"), std_u, Regime::Standard);
  EXPECT_TRUE(ok.holds);
  ASSERT_TRUE(ok.threshold.has_value());
  EXPECT_EQ(*ok.threshold, make_rational(1, 2));

  const auto surgery = utilities({{"l", eps(-1)}, {"p", q(1)}, {"d", q(0)}});
  const auto fail = check_property_P(delta("p"), delta("l"), delta("d"), surgery, Regime::NonstandardUtility);
  EXPECT_FALSE(fail.holds);
  EXPECT_TRUE(fail.indifferent.empty());
  EXPECT_TRUE(fail.better.is_open_unit());

  const auto small = utilities({{"l", q(1)}, {"p", eps()}, {"d", q(0)}});
  const auto fail2 = check_property_P(delta("p"), delta("l"), delta("d"), small, Regime::NonstandardUtility);
  EXPECT_FALSE(fail2.holds);
  EXPECT_TRUE(fail2.better.is_open_unit());

  EXPECT_EQ(code_of([&] { check_property_P(delta("l"), delta("p"), delta("d"), std_u, Regime::Standard); }),
            ErrorCode::PreconditionViolated);
}

TEST(Solver, WorkedCases) {
  EXPECT_EQ(solve_mixture_relation(q(1), q(0), q(1, 2), QOrdering::Equivalent, Regime::Standard).render(),
            "{1/2}");
  EXPECT_TRUE(solve_mixture_relation(q(1), q(0), eps(), QOrdering::Greater, Regime::NonstandardUtility)
                  .is_open_unit());
  EXPECT_TRUE(
      solve_mixture_relation(eps(-1), q(0), q(1), QOrdering::Less, Regime::NonstandardUtility).empty());
  EXPECT_EQ(solve_mixture_relation(q(1), q(0), q(1, 2), QOrdering::Greater, Regime::Standard).render(),
            "(1/2, 1)");
}

TEST(Solver, AgreesWithPointwiseEvaluation) {
  testing::Gen g(27);
  for (Regime regime : {Regime::Standard, Regime::NonstandardUtility, Regime::NonstandardProbability}) {
    for (int i = 0; i < 300; ++i) {
      auto value = [&] {
        if (regime == Regime::Standard) return NSReal(g.rational());
        if (regime == Regime::NonstandardProbability) return g.nsreal(3, 0, 2);
        return g.nsreal();
      };
      const NSReal up = value(), ur = value(), uq = value();
      for (QOrdering rel : {QOrdering::Less, QOrdering::Equivalent, QOrdering::Greater}) {
        const auto set = solve_mixture_relation(up, ur, uq, rel, regime);
        Rational bad;
        const bool ok = testing::set_matches(
            set,
            [&](const Rational& a) {
              return compare_values(testing::mix_values(a, up, ur), uq, regime) == to_preference(rel);
            },
            g, &bad);
        ASSERT_TRUE(ok) << render_nsreal(up) << ", " << render_nsreal(ur) << ", " << render_nsreal(uq)
                        << " rel " << to_string(rel) << " set " << set.render() << " at " << bad;
      }
    }
  }
}

TEST(Solver, SetsPartitionTheUnitInterval) {
  testing::Gen g(28);
  for (int i = 0; i < 200; ++i) {
    const NSReal up = g.nsreal(), ur = g.nsreal(), uq = g.nsreal();
    const auto less = solve_mixture_relation(up, ur, uq, QOrdering::Less, Regime::NonstandardUtility);
    const auto eq = solve_mixture_relation(up, ur, uq, QOrdering::Equivalent, Regime::NonstandardUtility);
    const auto more = solve_mixture_relation(up, ur, uq, QOrdering::Greater, Regime::NonstandardUtility);
    for (const auto& a : testing::probe_points(eq, g))
      ASSERT_EQ(less.contains(a) + eq.contains(a) + more.contains(a), 1);
  }
}

TEST(IntervalSet, RenderAndComplement) {
  RationalIntervalSet s;
  s.append({0, make_rational(1, 2), false, true});
  EXPECT_EQ(s.render(), "(0, 1/2]");
  EXPECT_EQ(s.complement().render(), "(1/2, 1)");
  EXPECT_EQ(RationalIntervalSet{}.render(), "{}");
  EXPECT_EQ(RationalIntervalSet{}.complement(), RationalIntervalSet::open_unit());
  RationalIntervalSet merged;
  merged.append({0, make_rational(1, 3), false, false});
  merged.append({make_rational(1, 3), make_rational(1, 3), true, true});
  merged.append({make_rational(1, 3), 1, false, false});
  EXPECT_TRUE(merged.is_open_unit());
  RationalIntervalSet bad;
  bad.append({make_rational(1, 2), 1, false, false});
  EXPECT_EQ(code_of([&] { bad.append({0, make_rational(1, 4), false, false}); }),
            ErrorCode::InvariantViolation);
}

}  // namespace
}  // namespace equm
