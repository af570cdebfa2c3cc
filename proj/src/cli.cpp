#include "equm/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equm/criteria.hpp"
#include "equm/error.hpp"
#include "equm/fixtures.hpp"
#include "equm/formats.hpp"

namespace equm {

namespace {

struct Options {
  std::string model;
  std::string regime;
  std::optional<int> grid_denominator;
  std::optional<int> closure_depth;
  std::string output = "human";
  bool serial = false;
  std::vector<std::string> ids;
  std::string relation = "indifferent";
  std::vector<std::string> postulates;
  int n = 3;
  std::vector<std::string> comparisons;
};

OutputMode output_mode(const Options& o) {
  return o.output == "machine" ? OutputMode::Machine : OutputMode::Human;
}

ModelDocument load(const Options& o) {
  ModelDocument doc = load_model(o.model);
  if (!o.regime.empty()) {
    doc.regime = parse_regime(o.regime);
    validate(doc);
  }
  if (o.grid_denominator) doc.grid_denominator = *o.grid_denominator;
  if (o.closure_depth) doc.closure_depth = *o.closure_depth;
  return doc;
}

// Acts take precedence over lotteries and outcomes with the same id.
NSReal value_of(const ModelDocument& doc, const std::string& id) {
  if (const Act* a = doc.find_act(id)) return act_utility(*a, *doc.model());
  return expected_utility(doc.resolve_lottery(id), doc.utility);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  const NSReal v = value_of(doc, o.ids.at(0));
  const bool with_standard = nonstandard_probabilities(doc.regime);
  if (output_mode(o) == OutputMode::Machine) {
    out << "UTILITY " << o.ids[0] << " \"" << render_nsreal(v) << "\"\n";
    if (with_standard) out << "STANDARD " << o.ids[0] << " \"" << standard_part(v).get_str() << "\"\n";
  } else {
    out << "u(" << o.ids[0] << ") = " << render_nsreal(v) << '\n';
    if (with_standard) out << "st(u(" << o.ids[0] << ")) = " << standard_part(v).get_str() << '\n';
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  const NSReal a = value_of(doc, o.ids.at(0));
  const NSReal b = value_of(doc, o.ids.at(1));
  const auto ordering = compare_values(a, b, doc.regime);
  if (output_mode(o) == OutputMode::Machine) {
    out << to_string(ordering) << '\n';
  } else {
    out << o.ids[0] << " vs " << o.ids[1] << ": " << to_string(ordering) << '\n'
        << "  u(" << o.ids[0] << ") = " << render_nsreal(a) << '\n'
        << "  u(" << o.ids[1] << ") = " << render_nsreal(b) << '\n';
  }
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  const auto s = doc.structure();
  std::vector<Postulate> postulates;
  for (const auto& p : o.postulates) postulates.push_back(parse_postulate(p));
  if (postulates.empty()) postulates = default_postulates(s);
  const auto report = run_audit(s, postulates, o.serial ? Execution::Serial : Execution::Parallel);
  out << render_report(report, output_mode(o));
  return report.all_hold() ? kExitOk : kExitCheckFailed;
}

QOrdering parse_relation(const std::string& text) {
  if (text == "better") return QOrdering::Greater;
  if (text == "worse") return QOrdering::Less;
  return QOrdering::Equivalent;
}

// alpha p + (1 - alpha) r  `relation`  q
int cmd_witness(const Options& o, std::ostream& out) {
  const auto doc = load(o);
  const NSReal p = value_of(doc, o.ids.at(0));
  const NSReal q = value_of(doc, o.ids.at(1));
  const NSReal r = value_of(doc, o.ids.at(2));
  const auto set = solve_mixture_relation(p, r, q, parse_relation(o.relation), doc.regime);
  if (output_mode(o) == OutputMode::Machine) {
    out << "WITNESS " << o.relation << " \"" << set.render() << "\"\n";
  } else {
    out << "alpha with alpha " << o.ids[0] << " + (1 - alpha) " << o.ids[2] << " " << o.relation
        << " " << o.ids[1] << ": " << set.render() << '\n';
    if (!set.empty()) out << "  e.g. alpha = " << set.witness()->get_str() << '\n';
  }
  return set.empty() ? kExitCheckFailed : kExitOk;
}

struct MaximinQuery {
  int i, j, i2, j2;
  Rational lambda, mu;
};

// "i,lambda,j:i2,mu,j2"
MaximinQuery parse_query(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',' || c == ':') c = ' ';
  std::istringstream in(normalized);
  MaximinQuery q{};
  std::string lambda, mu;
  if (!(in >> q.i >> lambda >> q.j >> q.i2 >> mu >> q.j2))
    throw Error(ErrorCode::SyntaxError, "comparison '" + text + "' is not i,lambda,j:i2,mu,j2");
  const NSReal l = parse_nsreal(lambda), m = parse_nsreal(mu);
  if (!l.is_standard() || !m.is_standard())
    throw Error(ErrorCode::InvalidWeight, "maximin weights must be standard");
  q.lambda = standard_part(l);
  q.mu = standard_part(m);
  return q;
}

int cmd_maximin(const Options& o, std::ostream& out) {
  const MaximinSpec spec{o.n};
  const auto u = maximin_utilities(spec);
  const bool machine = output_mode(o) == OutputMode::Machine;
  std::size_t disagreements = 0;

  auto compare = [&](const MaximinQuery& q, bool print) {
    const auto oracle = maximin_compare_oracle(q.i, q.lambda, q.j, q.i2, q.mu, q.j2);
    const auto got = prefers(maximin_mixture(q.i, q.lambda, q.j), maximin_mixture(q.i2, q.mu, q.j2),
                             u, Regime::NonstandardUtility);
    if (got != oracle) ++disagreements;
    if (!print) return;
    const std::string lhs = q.lambda.get_str() + " x" + std::to_string(q.i) + " + " +
                            Rational(1 - q.lambda).get_str() + " x" + std::to_string(q.j);
    const std::string rhs = q.mu.get_str() + " x" + std::to_string(q.i2) + " + " +
                            Rational(1 - q.mu).get_str() + " x" + std::to_string(q.j2);
    if (machine) {
      out << "MAXIMIN \"" << lhs << "\" \"" << rhs << "\" " << to_string(got)
          << (got == oracle ? " AGREE" : " DISAGREE") << '\n';
    } else {
      out << "  " << lhs << "  vs  " << rhs << ": " << to_string(got)
          << (got == oracle ? "" : "  (rule says " + std::string(to_string(oracle)) + ")") << '\n';
    }
  };

  if (!o.comparisons.empty()) {
    if (!machine) out << "maximin, n = " << o.n << '\n';
    for (const auto& c : o.comparisons) compare(parse_query(c), true);
  } else {
    std::size_t total = 0;
    for (int i = 0; i < o.n; ++i)
      for (int j = i + 1; j < o.n; ++j)
        for (int i2 = 0; i2 < o.n; ++i2)
          for (int j2 = i2 + 1; j2 < o.n; ++j2)
            for (int k = 1; k < 8; ++k)
              for (int m = 1; m < 8; ++m, ++total)
                compare({i, j, i2, j2, make_rational(k, 8), make_rational(m, 8)}, false);
    if (machine) {
      out << "MAXIMIN n=" << o.n << " pairs=" << total << " disagreements=" << disagreements << '\n';
    } else {
      out << "maximin, n = " << o.n << ": " << total << " grid comparisons, " << disagreements
          << " disagreement(s) with the worst-outcome rule\n";
    }
  }
  return disagreements == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_examples(const Options& o, std::ostream& out) {
  const auto checks = run_fixture_checks();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failed;
    if (output_mode(o) == OutputMode::Machine) {
      out << "EXAMPLE " << (c.passed ? "PASS" : "FAIL") << " \"" << c.name << '"';
      if (!c.passed) out << " detail=\"" << c.detail << '"';
      out << '\n';
    } else {
      out << (c.passed ? "pass  " : "FAIL  ") << c.name;
      if (!c.passed) out << ": " << c.detail;
      out << '\n';
    }
  }
  if (output_mode(o) == OutputMode::Machine)
    out << "RESULT " << (failed == 0 ? "PASS" : "FAIL") << '\n';
  else
    out << checks.size() - failed << " of " << checks.size() << " example checks pass\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownId:
    case ErrorCode::UnknownState:
    case ErrorCode::MissingUtility: return kExitUnknownId;
    default: return kExitLoadError;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected qualitative utility: evaluation, comparison and postulate audits"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
  };
  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", o.model, "model file")->required();
    cmd->add_option("--regime", o.regime, "override: std, ns-util, ns-prob, ns-both")
        ->check(CLI::IsMember({"std", "ns-util", "ns-prob", "ns-both"}));
    cmd->add_option("--grid-denominator", o.grid_denominator, "mixture grid k/D")
        ->check(CLI::Range(2, 64));
    cmd->add_option("--closure-depth", o.closure_depth, "mixture closure depth")
        ->check(CLI::Range(0, 3));
    add_output(cmd);
  };

  auto* eval = app.add_subcommand("eval", "exact utility of a lottery, outcome or act");
  add_model(eval);
  eval->add_option("id", o.ids, "lottery, outcome or act id")->required()->expected(1);

  auto* compare = app.add_subcommand("compare", "preference between two ids");
  add_model(compare);
  compare->add_option("ids", o.ids, "two ids")->required()->expected(2);

  auto* audit = app.add_subcommand("audit", "check the postulates on the model's structure");
  add_model(audit);
  audit->add_option("--postulates", o.postulates, "subset, e.g. A1,A'2,gamma")->delimiter(',');
  audit->add_flag("--serial", o.serial, "use the serial reference sweep");

  auto* witness = app.add_subcommand("witness", "weights alpha with alpha p + (1-alpha) r REL q");
  add_model(witness);
  witness->add_option("ids", o.ids, "p q r")->required()->expected(3);
  witness->add_option("--relation", o.relation, "better, indifferent or worse")
      ->check(CLI::IsMember({"better", "indifferent", "worse"}));

  auto* maximin = app.add_subcommand("maximin", "maximin mixtures against the worst-outcome rule");
  maximin->add_option("--n", o.n, "number of outcomes")->check(CLI::Range(2, 8));
  maximin->add_option("comparisons", o.comparisons, "i,lambda,j:i2,mu,j2");
  add_output(maximin);

  auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
  add_output(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*audit) return cmd_audit(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*maximin) return cmd_maximin(o, out);
    return cmd_examples(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitLoadError;
  }
}

}  // namespace equm
