#include "anacon/restricted_english.hpp"

#include <array>
#include <cctype>
#include <vector>

#include "anacon/error.hpp"

namespace anacon {

namespace {

constexpr std::string_view kObligationTemplate =
    "( It is mandatory to ( ACT ) [if not ( ACT ) then CL] )";
constexpr std::string_view kProhibitionTemplate =
    "( It is prohibited to ( ACT ) [if ( ACT ) then CL] )";
constexpr std::string_view kPermissionTemplate =
    "( It is permitted to ( ACT ) )";
constexpr std::string_view kConditionalTemplate = "( If ( ACT ) then CL )";
constexpr std::string_view kTemporalTemplate = "( ( Always ) CL )";
constexpr std::string_view kGroupTemplate = "( CL and CL ... ) / ( CL xor CL )";

constexpr std::array<std::string_view, 4> kTemporalWords = {
    "Always", "After", "When", "Before"};

bool is_temporal(std::string_view w) {
  for (auto t : kTemporalWords) {
    if (t == w) return true;
  }
  return false;
}

struct Word {
  std::string text;
  SourcePosition pos;
  bool is(std::string_view s) const { return text == s; }
};

std::vector<Word> tokenize(std::string_view src, std::size_t first_line) {
  std::vector<Word> out;
  std::size_t line = first_line;
  std::size_t col = 1;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      ++i;
      continue;
    }
    SourcePosition pos{line, col};
    if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), pos});
      bump(c);
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < src.size() && src[i] != '(' && src[i] != ')' &&
           !std::isspace(static_cast<unsigned char>(src[i]))) {
      bump(src[i]);
      ++i;
    }
    out.push_back({std::string(src.substr(start, i - start)), pos});
  }
  out.push_back({"", SourcePosition{line, col}});  // end marker
  return out;
}

class EnglishParser {
 public:
  EnglishParser(std::vector<Word> words, const std::set<std::string>* lexicon)
      : words_(std::move(words)), lexicon_(lexicon) {}

  Clause input() {
    Clause c = clause();
    if (!at_end()) {
      fail(peek(), "unexpected text after the clause: '" + peek().text + "'");
    }
    return c;
  }

 private:
  Clause clause() {
    expect("(", "a clause must start with '('");
    const Word& head = peek();
    if (head.is("It")) return deontic();
    if (head.is("If")) return conditional();
    if (head.is("trivially")) {
      next();
      expect("satisfied", "in '( trivially satisfied )'");
      expect(")", "to close '( trivially satisfied )'");
      return Clause::top();
    }
    if (head.is("contract")) {
      next();
      expect("violated", "in '( contract violated )'");
      expect(")", "to close '( contract violated )'");
      return Clause::bottom();
    }
    if (head.is("(")) {
      if (is_temporal(peek(1).text) && peek(2).is(")")) return temporal();
      return group();
    }
    if (at_end()) fail(head, "unexpected end of text inside a clause");
    fail(head, "unknown keyword '" + head.text +
                   "'; expected 'It', 'If', a temporal word in '( ... )', "
                   "'trivially', 'contract' or a nested clause");
  }

  Clause deontic() {
    next();  // It
    expect("is", "in a deontic template");
    Word modal = next();
    std::string_view tmpl;
    if (modal.is("mandatory")) {
      tmpl = kObligationTemplate;
    } else if (modal.is("prohibited")) {
      tmpl = kProhibitionTemplate;
    } else if (modal.is("permitted")) {
      tmpl = kPermissionTemplate;
    } else {
      fail(modal, "expected 'mandatory', 'prohibited' or 'permitted' after "
                  "'It is' but found '" + modal.text + "'");
    }
    expect("to", tmpl);
    SourcePosition act_pos = peek().pos;
    ActionExpr a = bracketed_action(tmpl);
    if (a.contains_star()) {
      throw ParseError(act_pos,
                       "repetition is not allowed under a deontic modality");
    }
    if (modal.is("permitted")) {
      expect(")", tmpl);
      return Clause::permission(std::move(a));
    }
    if (peek().is(")")) {
      next();
      return modal.is("mandatory") ? Clause::obligation(std::move(a))
                                   : Clause::prohibition(std::move(a));
    }
    expect("if", tmpl);
    if (modal.is("mandatory")) expect("not", tmpl);
    Word repeat_at = peek();
    ActionExpr repeated = bracketed_action(tmpl);
    if (repeated != a) {
      fail(repeat_at, std::string("the action repeated after '") +
                          (modal.is("mandatory") ? "if not" : "if") +
                          "' must be the same as the " +
                          (modal.is("mandatory") ? "obligatory" : "prohibited") +
                          " action");
    }
    expect("then", tmpl);
    Clause rep = clause();
    expect(")", tmpl);
    return modal.is("mandatory")
               ? Clause::obligation(std::move(a), std::move(rep))
               : Clause::prohibition(std::move(a), std::move(rep));
  }

  Clause conditional() {
    next();  // If
    ActionExpr g = bracketed_action(kConditionalTemplate);
    expect("then", kConditionalTemplate);
    Clause body = clause();
    expect(")", kConditionalTemplate);
    return Clause::box(std::move(g), std::move(body));
  }

  Clause temporal() {
    next();  // (
    next();  // Always | After | When | Before
    next();  // )
    Clause body = clause();
    expect(")", kTemporalTemplate);
    return Clause::box(ActionExpr::star(ActionExpr::skip()), std::move(body));
  }

  Clause group() {
    std::vector<Clause> ops;
    ops.push_back(clause());
    if (peek().is(")")) {
      next();
      return ops.front();
    }
    Word op = peek();
    if (!op.is("and") && !op.is("xor")) {
      fail(op, "expected 'and', 'xor' or ')' after a clause in " +
                   std::string(kGroupTemplate) + " but found '" + op.text + "'");
    }
    Clause acc = ops.front();
    while (peek().is(op.text)) {
      next();
      Clause rhs = clause();
      if (op.is("and")) {
        ops.push_back(std::move(rhs));
      } else {
        try {
          acc = Clause::xchoice(acc, rhs);
        } catch (const std::invalid_argument& e) {
          fail(op, e.what());
        }
      }
    }
    if (peek().is("and") || peek().is("xor")) {
      fail(peek(), "cannot mix 'and' and 'xor' in one group; add parentheses");
    }
    expect(")", kGroupTemplate);
    return op.is("and") ? Clause::conjunction(std::move(ops)) : acc;
  }

  // ----- actions -----

  ActionExpr bracketed_action(std::string_view tmpl) {
    expect("(", tmpl);
    if (peek().is(")")) fail(peek(), "empty action in " + std::string(tmpl));
    ActionExpr a = act_choice();
    expect(")", tmpl);
    return a;
  }

  ActionExpr act_choice() {
    ActionExpr lhs = act_sequence();
    while (peek().is("or")) {
      next();
      lhs = ActionExpr::choice(lhs, act_sequence());
    }
    return lhs;
  }

  ActionExpr act_sequence() {
    ActionExpr lhs = act_concurrent();
    while (peek().is("followed-by")) {
      next();
      lhs = ActionExpr::sequence(lhs, act_concurrent());
    }
    return lhs;
  }

  ActionExpr act_concurrent() {
    ActionExpr lhs = act_negated();
    while (peek().is("and")) {
      next();
      lhs = ActionExpr::concurrent(lhs, act_negated());
    }
    return lhs;
  }

  ActionExpr act_negated() {
    if (peek().is("not")) {
      Word w = next();
      try {
        return ActionExpr::negation(act_negated());
      } catch (const std::invalid_argument& e) {
        fail(w, e.what());
      }
    }
    ActionExpr e = act_primary();
    while (peek().is("any-number-of-times")) {
      next();
      e = ActionExpr::star(std::move(e));
    }
    return e;
  }

  ActionExpr act_primary() {
    Word w = next();
    if (w.is("(")) {
      ActionExpr e = act_choice();
      expect(")", "to close a grouped action");
      return e;
    }
    if (w.is("1")) return ActionExpr::skip();
    if (w.is("0")) return ActionExpr::impossible();
    if (w.text.empty()) fail(w, "unexpected end of text inside an action");
    return name(w);
  }

  ActionExpr name(const Word& w) {
    if (lexicon_ && lexicon_->count(w.text)) return ActionExpr::atom(w.text);
    // Split at _and_ / _or_ markers, left to right.
    std::vector<std::string> pieces;
    std::vector<ActionExpr::Kind> ops;
    const std::string& s = w.text;
    std::size_t start = 0;
    std::size_t i = 1;
    while (i < s.size()) {
      std::size_t len = 0;
      ActionExpr::Kind op{};
      if (s.compare(i, 5, "_and_") == 0) {
        len = 5;
        op = ActionExpr::Kind::Concurrent;
      } else if (s.compare(i, 4, "_or_") == 0) {
        len = 4;
        op = ActionExpr::Kind::Choice;
      }
      if (len != 0 && i + len < s.size()) {
        pieces.push_back(s.substr(start, i - start));
        ops.push_back(op);
        start = i + len;
        i = start + 1;
      } else {
        ++i;
      }
    }
    pieces.push_back(s.substr(start));
    for (const auto& p : pieces) {
      if (!AtomicAction::is_valid_name(p)) {
        fail(w, "'" + p + "' is not a valid action name");
      }
    }
    ActionExpr acc = ActionExpr::atom(pieces[0]);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      ActionExpr rhs = ActionExpr::atom(pieces[k + 1]);
      acc = ops[k] == ActionExpr::Kind::Concurrent
                ? ActionExpr::concurrent(acc, rhs)
                : ActionExpr::choice(acc, rhs);
    }
    return acc;
  }

  // ----- token helpers -----

  bool at_end() const { return pos_ + 1 >= words_.size(); }
  const Word& peek(std::size_t ahead = 0) const {
    return words_[std::min(pos_ + ahead, words_.size() - 1)];
  }
  Word next() {
    Word w = words_[pos_];
    if (!at_end()) ++pos_;
    return w;
  }

  void expect(std::string_view word, std::string_view context) {
    const Word& w = peek();
    if (!w.is(word) || (word.empty() != w.text.empty())) {
      std::string found = w.text.empty() && at_end() ? "end of text"
                                                     : "'" + w.text + "'";
      fail(w, "expected '" + std::string(word) + "' but found " + found +
                  " (" + std::string(context) + ")");
    }
    next();
  }

  [[noreturn]] void fail(const Word& w, const std::string& msg) const {
    throw ParseError(w.pos, msg);
  }

  std::vector<Word> words_;
  const std::set<std::string>* lexicon_;
  std::size_t pos_ = 0;
};

// ----- linearization -----

enum Prec { kChoice = 1, kSequence, kConcurrent, kNegation, kStar, kPrimary };

int precedence(const ActionExpr& e) {
  switch (e.kind()) {
    case ActionExpr::Kind::Choice: return kChoice;
    case ActionExpr::Kind::Sequence: return kSequence;
    case ActionExpr::Kind::Concurrent: return kConcurrent;
    case ActionExpr::Kind::Negation: return kNegation;
    case ActionExpr::Kind::Star: return kStar;
    default: return kPrimary;
  }
}

void write_act(const ActionExpr& e, int min_prec, std::string& out) {
  const int p = precedence(e);
  const bool parens = p < min_prec;
  if (parens) out += "( ";
  switch (e.kind()) {
    case ActionExpr::Kind::Impossible:
      out += "0";
      break;
    case ActionExpr::Kind::Skip:
      out += "1";
      break;
    case ActionExpr::Kind::Atom:
      out += e.action().name();
      break;
    case ActionExpr::Kind::Negation:
      out += "not ";
      write_act(e.operand(), kNegation, out);
      break;
    case ActionExpr::Kind::Star:
      write_act(e.operand(), kStar, out);
      out += " any-number-of-times";
      break;
    default: {
      const char* op = e.kind() == ActionExpr::Kind::Choice     ? " or "
                       : e.kind() == ActionExpr::Kind::Sequence ? " followed-by "
                                                                : " and ";
      write_act(e.left(), p, out);
      out += op;
      write_act(e.right(), p + 1, out);
      break;
    }
  }
  if (parens) out += " )";
}

void write_clause(const Clause& c, std::string& out) {
  using Kind = Clause::Kind;
  switch (c.kind()) {
    case Kind::Top:
      out += "( trivially satisfied )";
      return;
    case Kind::Bottom:
      out += "( contract violated )";
      return;
    case Kind::Obligation:
    case Kind::Prohibition:
    case Kind::Permission: {
      out += c.kind() == Kind::Obligation    ? "( It is mandatory to ( "
             : c.kind() == Kind::Prohibition ? "( It is prohibited to ( "
                                             : "( It is permitted to ( ";
      write_act(c.action(), kChoice, out);
      out += " )";
      if (c.kind() != Kind::Permission) {
        if (const Clause* rep = c.reparation()) {
          out += c.kind() == Kind::Obligation ? " if not ( " : " if ( ";
          write_act(c.action(), kChoice, out);
          out += " ) then ";
          write_clause(*rep, out);
        }
      }
      out += " )";
      return;
    }
    case Kind::Box:
      if (c.is_always_box()) {
        out += "( ( Always ) ";
      } else {
        out += "( If ( ";
        write_act(c.guard(), kChoice, out);
        out += " ) then ";
      }
      write_clause(c.body(), out);
      out += " )";
      return;
    case Kind::And:
    case Kind::XChoice: {
      const char* sep = c.kind() == Kind::And ? " and " : " xor ";
      out += "( ";
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += sep;
        first = false;
        write_clause(op, out);
      }
      out += " )";
      return;
    }
  }
}

}  // namespace

Clause parse_re(std::string_view text, const EnglishParseOptions& options) {
  return EnglishParser(tokenize(text, options.first_line), options.lexicon)
      .input();
}

std::string linearize_re(const Clause& c) {
  std::string out;
  write_clause(c, out);
  return out;
}

std::string linearize_re_action(const ActionExpr& e) {
  std::string out;
  write_act(e, kChoice, out);
  return out;
}

}  // namespace anacon
