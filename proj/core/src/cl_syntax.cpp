#include "anacon/cl_syntax.hpp"

#include <cctype>
#include <vector>

#include "anacon/error.hpp"

namespace anacon {

namespace {

enum class Tok {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Obligation,
  Prohibition,
  Permission,
  Top,
  Bottom,
  Reparation,
  Conj,
  XChoice,
  Amp,
  Dot,
  Plus,
  Bang,
  Star,
  Zero,
  One,
  Name,
  End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Obligation: return "'O'";
    case Tok::Prohibition: return "'F'";
    case Tok::Permission: return "'P'";
    case Tok::Top: return "'T'";
    case Tok::Bottom: return "'_|_'";
    case Tok::Reparation: return "'_'";
    case Tok::Conj: return "'^'";
    case Tok::XChoice: return "'(+)'";
    case Tok::Amp: return "'&'";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Bang: return "'!'";
    case Tok::Star: return "'*'";
    case Tok::Zero: return "'0'";
    case Tok::One: return "'1'";
    case Tok::Name: return "action name";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePosition pos;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePosition pos{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", pos});
        return out;
      }
      char c = src_[i_];
      if (c == '(' && src_.substr(i_, 3) == "(+)") {
        advance(3);
        out.push_back({Tok::XChoice, "(+)", pos});
      } else if (c == '/' && src_.substr(i_, 2) == "/\\") {
        advance(2);
        out.push_back({Tok::Conj, "^", pos});
      } else if (src_.substr(i_, 3) == "\xE2\x88\xA7") {  // U+2227
        i_ += 3;
        ++col_;
        out.push_back({Tok::Conj, "^", pos});
      } else if (is_word_char(c)) {
        out.push_back(word(pos));
      } else {
        Tok t;
        switch (c) {
          case '(': t = Tok::LParen; break;
          case ')': t = Tok::RParen; break;
          case '[': t = Tok::LBracket; break;
          case ']': t = Tok::RBracket; break;
          case '^': t = Tok::Conj; break;
          case '&': t = Tok::Amp; break;
          case '.': t = Tok::Dot; break;
          case '+': t = Tok::Plus; break;
          case '!': t = Tok::Bang; break;
          case '*': t = Tok::Star; break;
          default:
            throw LexicalError(pos, std::string("unexpected character '") + c +
                                        "'");
        }
        advance(1);
        out.push_back({t, std::string(1, c), pos});
      }
    }
  }

 private:
  Token word(SourcePosition pos) {
    std::size_t start = i_;
    while (i_ < src_.size() && is_word_char(src_[i_])) advance(1);
    std::string w(src_.substr(start, i_ - start));
    if (w == "_") {
      if (src_.substr(i_, 2) == "|_") {
        advance(2);
        return {Tok::Bottom, "_|_", pos};
      }
      return {Tok::Reparation, w, pos};
    }
    if (w == "O") return {Tok::Obligation, w, pos};
    if (w == "F") return {Tok::Prohibition, w, pos};
    if (w == "P") return {Tok::Permission, w, pos};
    if (w == "T") return {Tok::Top, w, pos};
    if (w == "0") return {Tok::Zero, w, pos};
    if (w == "1") return {Tok::One, w, pos};
    return {Tok::Name, w, pos};
  }

  void skip_space() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_]))) {
      advance(1);
    }
  }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < src_.size(); ++k, ++i_) {
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Clause clause_input() {
    Clause c = clause();
    expect(Tok::End, "after the clause");
    return c;
  }

  ActionExpr action_input() {
    ActionExpr a = act();
    expect(Tok::End, "after the action");
    return a;
  }

 private:
  // clause := xchain ('^' xchain)*
  Clause clause() {
    std::vector<Clause> ops;
    ops.push_back(xchain());
    while (peek().kind == Tok::Conj) {
      next();
      ops.push_back(xchain());
    }
    return Clause::conjoin(std::move(ops));
  }

  // xchain := unary ('(+)' unary)*
  Clause xchain() {
    Clause lhs = unary();
    while (peek().kind == Tok::XChoice) {
      Token op = next();
      Clause rhs = unary();
      try {
        lhs = Clause::xchoice(lhs, rhs);
      } catch (const std::invalid_argument& e) {
        throw ParseError(op.pos, e.what());
      }
    }
    return lhs;
  }

  Clause unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        next();
        Clause c = clause();
        expect(Tok::RParen, "to close the clause");
        return c;
      }
      case Tok::Obligation:
      case Tok::Prohibition:
      case Tok::Permission:
        return deontic();
      case Tok::LBracket: {
        next();
        ActionExpr g = act();
        expect(Tok::RBracket, "to close the box guard");
        return Clause::box(std::move(g), unary());
      }
      case Tok::Top:
        next();
        return Clause::top();
      case Tok::Bottom:
        next();
        return Clause::bottom();
      default:
        throw ParseError(t.pos, std::string("expected a clause ('(', 'O', 'F', "
                                            "'P', '[', 'T' or '_|_') but found ") +
                                    found(t));
    }
  }

  Clause deontic() {
    Token head = next();
    expect(Tok::LParen, std::string("after ") + describe(head.kind));
    SourcePosition act_pos = peek().pos;
    ActionExpr a = act();
    expect(Tok::RParen, "to close the deontic action");
    if (a.contains_star()) {
      throw ParseError(act_pos,
                       "Kleene star is not allowed under a deontic modality");
    }
    if (head.kind == Tok::Permission) {
      return Clause::permission(std::move(a));
    }
    if (peek().kind == Tok::Reparation) {
      next();
      Clause rep = unary();
      return head.kind == Tok::Obligation
                 ? Clause::obligation(std::move(a), std::move(rep))
                 : Clause::prohibition(std::move(a), std::move(rep));
    }
    return head.kind == Tok::Obligation ? Clause::obligation(std::move(a))
                                        : Clause::prohibition(std::move(a));
  }

  // act := seq ('+' seq)*
  ActionExpr act() {
    ActionExpr lhs = seq();
    while (peek().kind == Tok::Plus) {
      next();
      lhs = ActionExpr::choice(lhs, seq());
    }
    return lhs;
  }

  ActionExpr seq() {
    ActionExpr lhs = conc();
    while (peek().kind == Tok::Dot) {
      next();
      lhs = ActionExpr::sequence(lhs, conc());
    }
    return lhs;
  }

  ActionExpr conc() {
    ActionExpr lhs = negated();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = ActionExpr::concurrent(lhs, negated());
    }
    return lhs;
  }

  ActionExpr negated() {
    if (peek().kind == Tok::Bang) {
      Token bang = next();
      ActionExpr operand = negated();
      try {
        return ActionExpr::negation(std::move(operand));
      } catch (const std::invalid_argument& e) {
        throw ParseError(bang.pos, e.what());
      }
    }
    return starred();
  }

  ActionExpr starred() {
    ActionExpr e = primary();
    while (peek().kind == Tok::Star) {
      next();
      e = ActionExpr::star(std::move(e));
    }
    return e;
  }

  ActionExpr primary() {
    Token t = next();
    switch (t.kind) {
      case Tok::Zero:
        return ActionExpr::impossible();
      case Tok::One:
        return ActionExpr::skip();
      case Tok::Name:
        if (!AtomicAction::is_valid_name(t.text)) {
          throw ParseError(t.pos, "'" + t.text +
                                      "' is a reserved word, not an action");
        }
        return ActionExpr::atom(t.text);
      case Tok::LParen: {
        ActionExpr e = act();
        expect(Tok::RParen, "to close the action");
        return e;
      }
      default:
        throw ParseError(t.pos, std::string("expected an action ('0', '1', a "
                                            "name, '!' or '(') but found ") +
                                    found(t));
    }
  }

  static std::string found(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  const Token& peek() const { return toks_[pos_]; }

  Token next() {
    Token t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  void expect(Tok kind, const std::string& context) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(t.pos, std::string("expected ") + describe(kind) + " " +
                                  context + " but found " + found(t));
    }
    next();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Precedence levels, loosest first.
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

void print_act(const ActionExpr& e, int min_prec, std::string& out) {
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
      out += "! ";
      print_act(e.operand(), kNegation, out);
      break;
    case ActionExpr::Kind::Star:
      print_act(e.operand(), kStar, out);
      out += " *";
      break;
    default: {
      const char* op = e.kind() == ActionExpr::Kind::Choice     ? " + "
                       : e.kind() == ActionExpr::Kind::Sequence ? " . "
                                                                : " & ";
      print_act(e.left(), p, out);
      out += op;
      print_act(e.right(), p + 1, out);
      break;
    }
  }
  if (parens) out += " )";
}

void print_clause(const Clause& c, std::string& out) {
  using Kind = Clause::Kind;
  switch (c.kind()) {
    case Kind::Top:
      out += "T";
      return;
    case Kind::Bottom:
      out += "_|_";
      return;
    case Kind::Obligation:
    case Kind::Prohibition:
    case Kind::Permission: {
      out += c.kind() == Kind::Obligation    ? "( O ( "
             : c.kind() == Kind::Prohibition ? "( F ( "
                                             : "( P ( ";
      print_act(c.action(), kChoice, out);
      out += " )";
      if (c.kind() != Kind::Permission) {
        if (const Clause* rep = c.reparation()) {
          out += " _ ";
          print_clause(*rep, out);
        }
      }
      out += " )";
      return;
    }
    case Kind::Box:
      out += "( [ ";
      if (c.is_always_box()) {
        out += "1 *";
      } else {
        out += "( ";
        print_act(c.guard(), kChoice, out);
        out += " )";
      }
      out += " ] ";
      print_clause(c.body(), out);
      out += " )";
      return;
    case Kind::And:
    case Kind::XChoice: {
      const char* sep = c.kind() == Kind::And ? " ^ " : " (+) ";
      out += "( ";
      bool first = true;
      for (const auto& op : c.operands()) {
        if (!first) out += sep;
        first = false;
        print_clause(op, out);
      }
      out += " )";
      return;
    }
  }
}

}  // namespace

Clause parse_cl(std::string_view text) {
  return Parser(Lexer(text).run()).clause_input();
}

ActionExpr parse_cl_action(std::string_view text) {
  return Parser(Lexer(text).run()).action_input();
}

std::string print_cl(const Clause& c) {
  std::string out;
  print_clause(c, out);
  return out;
}

std::string print_cl_action(const ActionExpr& e) {
  std::string out;
  print_act(e, kChoice, out);
  return out;
}

}  // namespace anacon
