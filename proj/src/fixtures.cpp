#include "equm/fixtures.hpp"

#include <sstream>

#include "equm/criteria.hpp"
#include "equm/error.hpp"
#include "equm/solver.hpp"

namespace equm {

ModelDocument fixture_model(std::string_view name) {
  for (const auto& [key, text] : embedded_fixtures())
    if (key == name) return parse_model(text);
  throw Error(ErrorCode::UnknownId, "no fixture '" + std::string(name) + "'");
}

namespace {

class Recorder {
 public:
  void expect(const std::string& name, bool ok, const std::string& detail) {
    checks_.push_back({name, ok, ok ? std::string{} : detail});
  }
  std::vector<FixtureCheck> take() { return std::move(checks_); }

 private:
  std::vector<FixtureCheck> checks_;
};

NSReal act_value(const ModelDocument& doc, std::string_view id) {
  return act_utility(*doc.find_act(id), *doc.model());
}

PrefOrdering act_order(const ModelDocument& doc, std::string_view a, std::string_view b) {
  return act_prefers(*doc.find_act(a), *doc.find_act(b), *doc.model());
}

void dice(Recorder& rec) {
  const auto doc = fixture_model("dice");
  rec.expect("dice: b6 ~ b4", act_order(doc, "b6", "b4") == PrefOrdering::Indifferent,
             "b6 and b4 are not indifferent");
  rec.expect("dice: e6 ~ b6", act_order(doc, "e6", "b6") == PrefOrdering::Indifferent,
             "e6 and b6 are not indifferent");
  rec.expect("dice: e > f", act_order(doc, "e", "f") == PrefOrdering::Better,
             "e is not preferred to f");
  const auto ue = render_nsreal(act_value(doc, "e"));
  const auto uf = render_nsreal(act_value(doc, "f"));
  rec.expect("dice: u(e) = eps", ue == "eps", "u(e) = " + ue);
  rec.expect("dice: u(f) = 1/12*eps", uf == "1/12*eps", "u(f) = " + uf);
}

void consolation(Recorder& rec) {
  const auto doc = fixture_model("consolation");
  for (const char* tag : {"q1", "q2", "q3"}) {
    const auto one = doc.resolve_lottery(std::string("one_") + tag);
    const auto two = doc.resolve_lottery(std::string("two_") + tag);
    const auto three = doc.resolve_lottery(std::string("three_") + tag);
    const bool ok = prefers(two, one, doc.utility, doc.regime) == PrefOrdering::Indifferent &&
                    prefers(one, three, doc.utility, doc.regime) == PrefOrdering::Indifferent &&
                    prefers(two, three, doc.utility, doc.regime) == PrefOrdering::Indifferent;
    rec.expect(std::string("consolation: two ~ one ~ three (") + tag + ")", ok,
               "indifference fails for " + std::string(tag));
  }
  rec.expect("consolation: magazine > nothing",
             prefers(doc.resolve_lottery("magazine"), doc.resolve_lottery("nothing"), doc.utility,
                     doc.regime) == PrefOrdering::Better,
             "magazine is not preferred to nothing");
}

void surgery(Recorder& rec) {
  const auto doc = fixture_model("surgery");
  const auto weeks = doc.resolve_lottery("weeks");
  for (const char* id : {"m1000", "m100", "m2", "m999"}) {
    rec.expect(std::string("surgery: ") + id + " > weeks",
               prefers(doc.resolve_lottery(id), weeks, doc.utility, doc.regime) ==
                   PrefOrdering::Better,
               std::string(id) + " is not preferred to weeks");
  }
  const auto report = check_property_P(weeks, doc.resolve_lottery("life"),
                                       doc.resolve_lottery("death"), doc.utility, doc.regime);
  rec.expect("surgery: property P fails with no indifference weight",
             !report.holds && report.indifferent.empty(),
             "indifference set " + report.indifferent.render());
}

void maximin(Recorder& rec) {
  std::size_t disagreements = 0;
  std::string first;
  for (int n = 2; n <= 5; ++n) {
    const auto u = maximin_utilities({n});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int i2 = 0; i2 < n; ++i2)
          for (int j2 = i2 + 1; j2 < n; ++j2)
            for (int k = 1; k < 8; ++k)
              for (int m = 1; m < 8; ++m) {
                const Rational lambda = make_rational(k, 8), mu = make_rational(m, 8);
                const auto got = prefers(maximin_mixture(i, lambda, j), maximin_mixture(i2, mu, j2),
                                         u, Regime::NonstandardUtility);
                if (got != maximin_compare_oracle(i, lambda, j, i2, mu, j2) && disagreements++ == 0) {
                  std::ostringstream out;
                  out << "n=" << n << " (" << i << "," << lambda << "," << j << ") vs (" << i2
                      << "," << mu << "," << j2 << ")";
                  first = out.str();
                }
              }
  }
  rec.expect("maximin: agrees with the direct rule for n <= 5", disagreements == 0,
             std::to_string(disagreements) + " disagreements, first " + first);

  const auto doc = fixture_model("maximin3");
  const auto s = doc.structure();
  const auto verdict = check_A2(s, Execution::Serial);
  rec.expect("maximin: A2 fails with a replayable certificate",
             !verdict.holds && verdict.counterexample && replay(*verdict.counterexample, s),
             verdict.holds ? "A2 holds" : "certificate does not replay");
}

void lexicographic(Recorder& rec) {
  const LexPair p{2, 0}, q{1, 10}, r{0, 0};
  rec.expect("lexicographic: (0,0) < (1,10) < (2,0)",
             lexicographic_compare(r, q) == PrefOrdering::Worse &&
                 lexicographic_compare(q, p) == PrefOrdering::Worse,
             "order differs");
  rec.expect("lexicographic: beta = 2/5 satisfies the antecedent",
             lexicographic_compare(q, lexicographic_mix(make_rational(2, 5), p, r)) ==
                 PrefOrdering::Better,
             "(1,10) is not preferred to (4/5,0)");
  const auto gamma = lexicographic_solve(p, r, q, PrefOrdering::Indifferent);
  rec.expect("lexicographic: no gamma exists", gamma.empty(), "gamma set " + gamma.render());
}

void witness(Recorder& rec) {
  const auto set = solve_mixture_relation(NSReal(1), NSReal(0), NSReal(make_rational(1, 2)),
                                          QOrdering::Equivalent, Regime::Standard);
  rec.expect("witness: {1, 1/2, 0} indifference at {1/2}", set.render() == "{1/2}", set.render());
}

}  // namespace

std::vector<FixtureCheck> run_fixture_checks() {
  Recorder rec;
  for (auto* step : {dice, consolation, surgery, maximin, lexicographic, witness}) {
    try {
      step(rec);
    } catch (const std::exception& e) {
      rec.expect("fixture error", false, e.what());
    }
  }
  return rec.take();
}

}  // namespace equm
