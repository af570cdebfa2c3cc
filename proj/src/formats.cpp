#include "equm/formats.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "equm/error.hpp"

namespace equm {
namespace {

// ---------------------------------------------------------------------------
// Literal grammar

struct Token {
  enum Kind { Number, Eps, Plus, Minus, Star, Slash, Caret, End } kind;
  std::string text;
  std::size_t column;  // 1-based
};

[[noreturn]] void syntax_error(std::string_view text, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what + " at column " + std::to_string(column) + " in '" +
                                          std::string(text) + "'");
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (text.substr(i, 3) == "eps") {
      out.push_back({Token::Eps, "eps", col});
      i += 3;
    } else {
      Token::Kind kind;
      switch (c) {
        case '+': kind = Token::Plus; break;
        case '-': kind = Token::Minus; break;
        case '*': kind = Token::Star; break;
        case '/': kind = Token::Slash; break;
        case '^': kind = Token::Caret; break;
        default: syntax_error(text, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Token::End, "", text.size() + 1});
  return out;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  NSReal parse() {
    std::vector<NSReal::Term> terms;
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) sign = next().kind == Token::Minus ? -1 : 1;
    terms.push_back(term(sign));
    while (peek().kind != Token::End) {
      const Token& op = next();
      if (op.kind != Token::Plus && op.kind != Token::Minus)
        syntax_error(text_, op.column, "expected '+' or '-'");
      terms.push_back(term(op.kind == Token::Minus ? -1 : 1));
    }
    return NSReal::from_terms(std::move(terms));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) syntax_error(text_, peek().column, std::string("expected ") + what);
    return next();
  }

  NSReal::Term term(int sign) {
    if (peek().kind == Token::Eps) return {eps_power(), Rational(sign)};
    const Token& num = expect(Token::Number, "a number or 'eps'");
    mpz_class numerator(num.text);
    mpz_class denominator = 1;
    if (peek().kind == Token::Slash) {
      next();
      const Token& den = expect(Token::Number, "a denominator");
      denominator = mpz_class(den.text);
      if (denominator == 0)
        throw Error(ErrorCode::ZeroDenominator, "zero denominator at column " +
                                                    std::to_string(den.column) + " in '" +
                                                    std::string(text_) + "'");
    }
    const mpz_class signed_numerator = numerator * sign;
    Rational coefficient(signed_numerator, denominator);
    coefficient.canonicalize();
    int exponent = 0;
    if (peek().kind == Token::Star) {
      next();
      exponent = eps_power();
    }
    return {exponent, coefficient};
  }

  int eps_power() {
    expect(Token::Eps, "'eps'");
    if (peek().kind != Token::Caret) return 1;
    next();
    int sign = 1;
    if (peek().kind == Token::Plus || peek().kind == Token::Minus) sign = next().kind == Token::Minus ? -1 : 1;
    const Token& num = expect(Token::Number, "an integer exponent");
    int value = 0;
    auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
    if (ec != std::errc()) syntax_error(text_, num.column, "exponent out of range");
    return sign * value;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Model documents

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto piece = trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
    if (!piece.empty()) out.push_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& path, std::size_t line, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what + " (line " + std::to_string(line) + ")");
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line;
  std::vector<Entry> entries;

  std::string path() const { return name.empty() ? kind : kind + " " + name; }
};

std::vector<Section> read_sections(std::string_view text) {
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') schema_error("document", line_no, "unterminated section header");
      std::istringstream header(line.substr(1, line.size() - 2));
      Section s;
      header >> s.kind >> s.name;
      std::string extra;
      if (s.kind.empty() || (header >> extra)) schema_error("document", line_no, "malformed section header");
      s.line = line_no;
      sections.push_back(std::move(s));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) schema_error("document", line_no, "expected 'key = value'");
    if (sections.empty()) schema_error("document", line_no, "entry outside any section");
    Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
    if (e.key.empty()) schema_error(sections.back().path(), line_no, "empty key");
    sections.back().entries.push_back(std::move(e));
  }
  return sections;
}

NSReal literal(const Section& s, const Entry& e) {
  try {
    return parse_nsreal(e.value);
  } catch (const Error& err) {
    throw Error(err.code(), s.path() + "." + e.key + ": " + err.what() + " (line " +
                                std::to_string(e.line) + ")");
  }
}

int positive_int(const Section& s, const Entry& e, int minimum) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), value);
  if (ec != std::errc() || ptr != e.value.data() + e.value.size() || value < minimum)
    schema_error(s.path() + "." + e.key, e.line, "expected an integer >= " + std::to_string(minimum));
  return value;
}

void require_name(const Section& s, bool named) {
  if (named && s.name.empty()) schema_error(s.path(), s.line, "section needs an id");
  if (!named && !s.name.empty()) schema_error(s.path(), s.line, "section takes no id");
}

void add_unique(std::set<std::string>& ids, const std::string& id, const std::string& path, std::size_t line) {
  if (!ids.insert(id).second) schema_error(path, line, "duplicate id '" + id + "'");
}

}  // namespace

NSReal parse_nsreal(std::string_view text) { return LiteralParser(text).parse(); }

std::string render_nsreal(const NSReal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = abs(t.coefficient);
    if (t.exponent == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "eps";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

std::string render_lottery(const Lottery& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& [outcome, prob] : p.probabilities()) {
    if (!first) out += ", ";
    first = false;
    out += outcome + ": " + render_nsreal(prob);
  }
  return out + "}";
}

const Lottery* ModelDocument::find_lottery(std::string_view id) const {
  for (const auto& [name, p] : lotteries)
    if (name == id) return &p;
  return nullptr;
}

const Act* ModelDocument::find_act(std::string_view id) const {
  for (const auto& [name, a] : acts)
    if (name == id) return &a;
  return nullptr;
}

Lottery ModelDocument::resolve_lottery(std::string_view id) const {
  if (const Lottery* p = find_lottery(id)) return *p;
  if (utility.contains(std::string(id))) return Lottery::degenerate(std::string(id));
  throw Error(ErrorCode::UnknownId, "no lottery or outcome '" + std::string(id) + "'");
}

std::optional<AAModel> ModelDocument::model() const {
  if (!states) return std::nullopt;
  return AAModel{*states, belief, utility, regime};
}

PrefStructure ModelDocument::structure() const {
  PrefStructure s;
  s.regime = regime;
  s.utility = utility;
  s.grid_denominator = grid_denominator;
  s.closure_depth = closure_depth;
  if (generator_ids.empty()) {
    for (const auto& [_, p] : lotteries) s.generators.push_back(p);
    for (const auto& o : outcomes) s.generators.push_back(Lottery::degenerate(o));
  } else {
    for (const auto& id : generator_ids) s.generators.push_back(resolve_lottery(id));
  }
  s.model = model();
  if (s.model) {
    if (generator_act_ids.empty()) {
      for (const auto& [_, a] : acts) s.generator_acts.push_back(a);
    } else {
      for (const auto& id : generator_act_ids) {
        const Act* a = find_act(id);
        if (!a) throw Error(ErrorCode::UnknownId, "no act '" + id + "'");
        s.generator_acts.push_back(*a);
      }
    }
  }
  return s;
}

void validate(const ModelDocument& doc) {
  const std::string regime(to_string(doc.regime));
  for (const auto& [outcome, value] : doc.utility.utilities()) {
    if (!nonstandard_utilities(doc.regime) && !value.is_standard())
      throw Error(ErrorCode::RegimeViolation, "outcomes." + outcome + ": utility '" +
                                                  render_nsreal(value) + "' is not standard in regime " +
                                                  regime);
    if (!doc.utility.is_signed() && sign(value) < 0)
      throw Error(ErrorCode::SchemaError, "outcomes." + outcome + ": negative utility '" +
                                              render_nsreal(value) + "' needs 'signed = true'");
  }
  auto check_lottery = [&](const std::string& path, const Lottery& p) {
    for (const auto& [outcome, prob] : p.probabilities()) {
      if (!doc.utility.contains(outcome))
        throw Error(ErrorCode::SchemaError, path + "." + outcome + ": outcome has no utility");
      if (!nonstandard_probabilities(doc.regime) && !prob.is_standard())
        throw Error(ErrorCode::RegimeViolation, path + "." + outcome + ": probability '" +
                                                    render_nsreal(prob) + "' is not standard in regime " +
                                                    regime);
    }
  };
  for (const auto& [id, p] : doc.lotteries) check_lottery("lottery " + id, p);
  if (doc.states) {
    const AAModel m = *doc.model();
    try {
      validate_model(m, !nonstandard_probabilities(doc.regime));
    } catch (const Error& e) {
      std::string detail;
      for (const auto& [s, b] : doc.belief)
        if (!nonstandard_probabilities(doc.regime) && !b.is_standard())
          detail = " (offending literal belief." + s + " = '" + render_nsreal(b) + "')";
      throw Error(e.code(), std::string("belief: ") + e.what() + detail);
    }
    for (const auto& [id, a] : doc.acts) {
      validate_act(a, m);
      for (const auto& [s, p] : a.lotteries()) check_lottery("act " + id + "." + s, p);
    }
  } else if (!doc.acts.empty()) {
    throw Error(ErrorCode::SchemaError, "acts need a [belief] section");
  }
  for (const auto& id : doc.generator_ids) doc.resolve_lottery(id);
  for (const auto& id : doc.generator_act_ids)
    if (!doc.find_act(id)) throw Error(ErrorCode::SchemaError, "audit.acts: no act '" + id + "'");
}

ModelDocument parse_model(std::string_view text) {
  const auto sections = read_sections(text);
  ModelDocument doc;
  bool have_regime = false;
  bool is_signed = false;
  UtilityAssignment::Map utilities;
  std::vector<StateId> state_ids;
  std::set<std::string> lottery_ids, act_ids;
  const Section* outcomes_section = nullptr;
  std::vector<const Section*> act_sections;

  for (const auto& s : sections) {
    if (s.kind == "model") {
      require_name(s, false);
      for (const auto& e : s.entries) {
        if (e.key == "regime") {
          try {
            doc.regime = parse_regime(e.value);
          } catch (const Error&) {
            schema_error("model.regime", e.line, "unknown regime '" + e.value + "'");
          }
          have_regime = true;
        } else if (e.key == "signed") {
          if (e.value != "true" && e.value != "false")
            schema_error("model.signed", e.line, "expected true or false");
          is_signed = e.value == "true";
        } else if (e.key == "grid_denominator") {
          doc.grid_denominator = positive_int(s, e, 2);
        } else if (e.key == "closure_depth") {
          doc.closure_depth = positive_int(s, e, 0);
        } else {
          schema_error("model." + e.key, e.line, "unknown key");
        }
      }
    } else if (s.kind == "outcomes") {
      require_name(s, false);
      if (outcomes_section) schema_error("outcomes", s.line, "duplicate section");
      outcomes_section = &s;
      for (const auto& e : s.entries) {
        if (!utilities.emplace(e.key, literal(s, e)).second)
          schema_error("outcomes." + e.key, e.line, "duplicate outcome");
        doc.outcomes.push_back(e.key);
      }
    } else if (s.kind == "lottery") {
      require_name(s, true);
      add_unique(lottery_ids, s.name, s.path(), s.line);
      Lottery::Map probs;
      for (const auto& e : s.entries)
        if (!probs.emplace(e.key, literal(s, e)).second)
          schema_error(s.path() + "." + e.key, e.line, "duplicate outcome");
      try {
        doc.lotteries.emplace_back(s.name, Lottery(std::move(probs)));
      } catch (const Error& err) {
        schema_error(s.path(), s.line, err.what());
      }
    } else if (s.kind == "belief") {
      require_name(s, false);
      for (const auto& e : s.entries) {
        if (doc.belief.contains(e.key)) schema_error("belief." + e.key, e.line, "duplicate state");
        state_ids.push_back(e.key);
        doc.belief.emplace(e.key, literal(s, e));
      }
    } else if (s.kind == "act") {
      require_name(s, true);
      add_unique(act_ids, s.name, s.path(), s.line);
      act_sections.push_back(&s);
    } else if (s.kind == "audit") {
      require_name(s, false);
      for (const auto& e : s.entries) {
        if (e.key == "generators") {
          doc.generator_ids = split_list(e.value);
        } else if (e.key == "acts") {
          doc.generator_act_ids = split_list(e.value);
        } else {
          schema_error("audit." + e.key, e.line, "unknown key");
        }
      }
    } else {
      schema_error(s.path(), s.line, "unknown section");
    }
  }
  if (!have_regime) throw Error(ErrorCode::SchemaError, "model.regime: missing");
  if (!outcomes_section) throw Error(ErrorCode::SchemaError, "outcomes: missing section");
  for (const auto& id : doc.outcomes)
    if (lottery_ids.contains(id))
      throw Error(ErrorCode::SchemaError, "lottery " + id + ": id clashes with an outcome");

  if (!is_signed)
    for (const auto& [outcome, value] : utilities)
      if (sign(value) < 0)
        throw Error(ErrorCode::SchemaError, "outcomes." + outcome + ": negative utility '" +
                                                render_nsreal(value) + "' needs 'signed = true'");
  doc.utility = UtilityAssignment(std::move(utilities), is_signed);
  if (!state_ids.empty()) doc.states = StateSpace(state_ids);

  for (const Section* s : act_sections) {
    if (!doc.states) schema_error(s->path(), s->line, "acts need a [belief] section");
    std::optional<Lottery> fallback;
    Act::Map map;
    for (const auto& e : s->entries) {
      Lottery p = [&] {
        try {
          return doc.resolve_lottery(e.value);
        } catch (const Error& err) {
          schema_error(s->path() + "." + e.key, e.line, err.what());
        }
      }();
      if (e.key == "*") {
        fallback = std::move(p);
      } else {
        if (!doc.states->contains(e.key)) schema_error(s->path() + "." + e.key, e.line, "unknown state");
        map.insert_or_assign(e.key, std::move(p));
      }
    }
    for (const auto& st : doc.states->states()) {
      if (map.contains(st)) continue;
      if (!fallback) schema_error(s->path(), s->line, "no lottery for state '" + st + "' and no '*' default");
      map.emplace(st, *fallback);
    }
    doc.acts.emplace_back(s->name, Act(std::move(map)));
  }

  validate(doc);
  return doc;
}

ModelDocument load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read model file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

// ---------------------------------------------------------------------------
// Reports

std::string render_certificate(const Certificate& c, OutputMode mode) {
  std::ostringstream out;
  if (mode == OutputMode::Machine) {
    for (const auto& [role, p] : c.lotteries) out << ' ' << role << "=\"" << render_lottery(p) << '"';
    for (const auto& [role, a] : c.acts) {
      out << ' ' << role << "=\"";
      bool first = true;
      for (const auto& [s, p] : a.lotteries()) {
        out << (first ? "" : "; ") << s << " -> " << render_lottery(p);
        first = false;
      }
      out << '"';
    }
    if (c.state) out << " state=" << *c.state;
    if (c.weight) out << " lambda=\"" << render_nsreal(*c.weight) << '"';
    for (const auto& [name, v] : c.values) out << ' ' << name << "=\"" << render_nsreal(v) << '"';
    return out.str();
  }
  out << "    " << c.claim << '\n';
  for (const auto& [role, p] : c.lotteries) out << "    " << role << " = " << render_lottery(p) << '\n';
  for (const auto& [role, a] : c.acts) {
    out << "    " << role << " =";
    for (const auto& [s, p] : a.lotteries()) out << ' ' << s << " -> " << render_lottery(p) << ';';
    out << '\n';
  }
  if (c.state) out << "    state = " << *c.state << '\n';
  if (c.weight) out << "    lambda = " << render_nsreal(*c.weight) << '\n';
  for (const auto& [name, v] : c.values) out << "    " << name << " = " << render_nsreal(v) << '\n';
  return out.str();
}

std::string render_report(const AuditReport& report, OutputMode mode) {
  std::ostringstream out;
  std::size_t failures = 0;
  if (mode == OutputMode::Machine) {
    out << "AUDIT regime=" << to_string(report.regime) << '\n';
    for (const auto& v : report.verdicts) {
      out << "VERDICT " << to_string(v.postulate) << (v.holds ? " HOLD" : " FAIL");
      if (v.holds) {
        out << " cases=" << v.cases << " applicable=" << v.applicable;
        if (v.witness) out << " witness=\"" << *v.witness << '"';
      } else {
        ++failures;
        out << render_certificate(*v.counterexample, mode);
      }
      out << '\n';
    }
    out << "RESULT " << (failures == 0 ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

  out << "audit (regime " << to_string(report.regime) << "; " << report.domain << ")\n";
  for (const auto& v : report.verdicts) {
    std::string name(to_string(v.postulate));
    name.resize(6, ' ');
    out << "  " << name << (v.holds ? "holds" : "FAILS");
    if (v.holds) {
      out << "  (" << v.applicable << " applicable of " << v.cases << " cases";
      if (v.witness) out << "; e.g. " << *v.witness;
      out << ")\n";
    } else {
      ++failures;
      out << '\n' << render_certificate(*v.counterexample, mode);
    }
  }
  out << (failures == 0 ? "all postulates hold on the checked domain\n"
                        : std::to_string(failures) + " postulate(s) violated\n");
  return out.str();
}

}  // namespace equm
