#include <gtest/gtest.h>

#include "equm/acts.hpp"
#include "equm/error.hpp"
#include "support/random_models.hpp"

namespace equm {
namespace {

NSReal eps(int k = 1) { return NSReal::eps(k); }
NSReal q(long n, long d = 1) { return NSReal(make_rational(n, d)); }
Lottery delta(const std::string& o) { return Lottery::degenerate(o); }

AAModel two_states(NSReal b0, NSReal b1, UtilityAssignment::Map u, Regime regime) {
  return AAModel{StateSpace({"s0", "s1"}), Belief{{"s0", b0}, {"s1", b1}}, UtilityAssignment(std::move(u)),
                 regime};
}

Act act(const std::string& o0, const std::string& o1) {
  return Act({{"s0", delta(o0)}, {"s1", delta(o1)}});
}

TEST(StateSpace, Validation) {
  EXPECT_THROW(StateSpace({}), Error);
  EXPECT_THROW(StateSpace({"a", "a"}), Error);
  EXPECT_EQ(StateSpace({"a", "b"}).size(), 2u);
}

TEST(ActUtility, Cases) {
  const auto m = two_states(q(1, 2), q(1, 2), {{"one", q(1)}, {"tiny", eps()}}, Regime::NonstandardUtility);
  EXPECT_EQ(act_utility(act("one", "tiny"), m), q(1, 2) + q(1, 2) * eps());
  const Lottery p({{"one", q(1, 3)}, {"tiny", q(2, 3)}});
  EXPECT_EQ(act_utility(constant_act(p, m.states), m), q(1, 3) + q(2, 3) * eps());
  const auto concentrated = two_states(q(1), q(0), {{"one", q(1)}, {"tiny", eps()}}, Regime::NonstandardUtility);
  EXPECT_EQ(act_utility(act("tiny", "one"), concentrated), eps());
  EXPECT_EQ(constant_act(p, StateSpace({"only"})).lotteries().size(), 1u);
}

TEST(ActPrefers, Cases) {
  const auto m = two_states(q(1, 2), q(1, 2), {{"hi", q(1)}, {"lo", q(0)}}, Regime::Standard);
  EXPECT_EQ(act_prefers(act("hi", "lo"), act("hi", "lo"), m), PrefOrdering::Indifferent);
  EXPECT_EQ(act_prefers(act("hi", "lo"), act("lo", "lo"), m), PrefOrdering::Better);
  const auto zero = two_states(q(1), q(0), {{"hi", q(1)}, {"lo", q(0)}}, Regime::Standard);
  EXPECT_EQ(act_prefers(act("lo", "hi"), act("lo", "lo"), zero), PrefOrdering::Indifferent);
}

TEST(Validation, BeliefsAndActs) {
  const auto bad_sum = two_states(q(1, 2), q(1, 3), {{"hi", q(1)}}, Regime::Standard);
  EXPECT_THROW(validate_model(bad_sum, true), Error);
  const auto infinitesimal = two_states(q(1) - eps(), eps(), {{"hi", q(1)}}, Regime::General);
  EXPECT_NO_THROW(validate_model(infinitesimal, false));
  EXPECT_THROW(validate_model(infinitesimal, true), Error);
  const auto m = two_states(q(1, 2), q(1, 2), {{"hi", q(1)}}, Regime::Standard);
  EXPECT_THROW(validate_act(Act({{"s0", delta("hi")}}), m), Error);
  try {
    (void)Act({{"s0", delta("hi")}}).at("s9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownState);
  }
}

TEST(NullState, Cases) {
  const UtilityAssignment::Map u{{"hi", q(1)}, {"lo", q(0)}};
  const auto zero = two_states(q(1), q(0), u, Regime::Standard);
  const std::vector<Act> gens{act("hi", "lo"), act("lo", "hi")};
  EXPECT_TRUE(is_null("s1", zero, gens));
  EXPECT_FALSE(is_null("s0", zero, gens));
  const auto half = two_states(q(1, 2), q(1, 2), u, Regime::Standard);
  EXPECT_FALSE(is_null("s1", half, gens));
  const auto flat = two_states(q(1, 2), q(1, 2), {{"hi", q(1)}, {"lo", q(1)}}, Regime::Standard);
  EXPECT_TRUE(is_null("s1", flat, gens));
  // An infinitesimal belief is null once standard parts decide.
  const auto tiny = two_states(q(1) - eps(), eps(), u, Regime::NonstandardProbability);
  EXPECT_TRUE(is_null("s1", tiny, gens));
  const auto tiny_q = two_states(q(1) - eps(), eps(), u, Regime::General);
  EXPECT_FALSE(is_null("s1", tiny_q, gens));
}

TEST(NullState, RulesAgreeOnRandomModels) {
  testing::Gen g(31);
  for (Regime regime : {Regime::Standard, Regime::NonstandardUtility, Regime::NonstandardProbability,
                        Regime::General}) {
    for (int i = 0; i < 60; ++i) {
      const auto s = testing::random_act_structure(g, regime);
      for (const auto& t : s.model->states.states())
        ASSERT_EQ(is_null_definitional(t, *s.model, s.generator_acts), is_null_analytic(t, *s.model))
            << "regime " << to_string(regime) << " case " << i << " state " << t;
    }
  }
}

}  // namespace
}  // namespace equm
