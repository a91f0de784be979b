#include "anacon/contract_file.hpp"

#include <array>

#include "anacon/error.hpp"
#include "anacon/restricted_english.hpp"

namespace anacon {

namespace {

constexpr std::array<std::string_view, 3> kHeaders = {"DICTIONARY", "CONTRACT",
                                                      "CONTRADICTION"};

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct Line {
  std::string_view text;  // trimmed
  std::string_view raw;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    lines.push_back({trim(raw), raw, number++});
    start = nl + 1;
  }
  return lines;
}

bool is_comment(const Line& l) { return !l.text.empty() && l.text[0] == '%'; }

void check_name(std::string_view name, std::size_t line, std::size_t column) {
  if (!name.empty() && !AtomicAction::is_valid_name(name)) {
    throw ParseError({line, column},
                     "'" + std::string(name) + "' is not a valid action name");
  }
}

std::size_t column_of(const Line& l, std::string_view part) {
  return static_cast<std::size_t>(part.data() - l.raw.data()) + 1;
}

DictionaryEntry parse_dictionary_line(const Line& l) {
  auto colon = l.text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError({l.number, 1},
                     "malformed dictionary line; expected 'name : description'");
  }
  std::string_view name = trim(l.text.substr(0, colon));
  std::string_view desc = trim(l.text.substr(colon + 1));
  check_name(name, l.number, name.empty() ? 1 : column_of(l, name));
  return {std::string(name), std::string(desc), l.number};
}

ContradictionEntry parse_contradiction_line(const Line& l) {
  auto hash = l.text.find('#');
  if (hash == std::string_view::npos ||
      l.text.find('#', hash + 1) != std::string_view::npos) {
    throw ParseError({l.number, 1},
                     "malformed contradiction line; expected 'name # name'");
  }
  std::string_view a = trim(l.text.substr(0, hash));
  std::string_view b = trim(l.text.substr(hash + 1));
  check_name(a, l.number, a.empty() ? 1 : column_of(l, a));
  check_name(b, l.number, b.empty() ? 1 : column_of(l, b));
  if (!a.empty() && a == b) {
    throw ParseError({l.number, 1}, "action '" + std::string(a) +
                                        "' cannot contradict itself");
  }
  return {std::string(a), std::string(b), l.number};
}

}  // namespace

MutexRelation ContractDocument::mutex() const {
  MutexRelation m;
  for (const auto& c : contradictions) {
    if (c.left.empty() || c.right.empty()) continue;
    m.add(AtomicAction(c.left), AtomicAction(c.right));
  }
  return m;
}

std::vector<AtomicAction> ContractDocument::alphabet() const {
  std::vector<AtomicAction> out;
  std::set<std::string> seen;
  for (const auto& e : dictionary) {
    if (e.name.empty() || !seen.insert(e.name).second) continue;
    out.emplace_back(e.name);
  }
  return out;
}

std::set<std::string> ContractDocument::lexicon() const {
  std::set<std::string> out;
  for (const auto& e : dictionary) {
    if (!e.name.empty()) out.insert(e.name);
  }
  return out;
}

Clause ContractDocument::contract() const { return Clause::conjoin(clauses); }

ContractDocument parse_contract_file(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);

  // Locate the three headers, in order.
  std::array<std::size_t, 3> header_at{};
  std::size_t next = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.text.empty() || is_comment(l)) continue;
    bool is_header = false;
    for (std::size_t h = 0; h < kHeaders.size(); ++h) {
      if (l.text != kHeaders[h]) continue;
      is_header = true;
      if (h != next) {
        std::string expected =
            next < kHeaders.size() ? std::string(kHeaders[next]) : "no header";
        throw ParseError({l.number, 1}, "section header " +
                                            std::string(kHeaders[h]) +
                                            " out of order; expected " +
                                            expected);
      }
      header_at[next++] = i;
    }
    if (!is_header && next == 0) {
      throw ParseError({l.number, 1}, "expected section header DICTIONARY");
    }
  }
  if (next < kHeaders.size()) {
    throw ParseError({lines.back().number, 1},
                     "missing section header " + std::string(kHeaders[next]));
  }

  ContractDocument doc;
  for (std::size_t i = header_at[0] + 1; i < header_at[1]; ++i) {
    if (lines[i].text.empty() || is_comment(lines[i])) continue;
    doc.dictionary.push_back(parse_dictionary_line(lines[i]));
  }

  const std::set<std::string> lex = doc.lexicon();
  std::string block;
  std::size_t block_first = 0;
  std::size_t block_last = 0;
  auto flush = [&] {
    if (block_first == 0) return;
    EnglishParseOptions opts;
    opts.lexicon = &lex;
    opts.first_line = block_first;
    doc.clauses.push_back(parse_re(block, opts));
    doc.source_spans.push_back({block_first, block_last});
    block.clear();
    block_first = 0;
  };
  for (std::size_t i = header_at[1] + 1; i < header_at[2]; ++i) {
    const Line& l = lines[i];
    if (l.text.empty()) {
      flush();
      continue;
    }
    if (is_comment(l)) {
      if (block_first != 0) block += '\n';
      continue;
    }
    if (block_first == 0) block_first = l.number;
    block += l.raw;
    block += '\n';
    block_last = l.number;
  }
  flush();

  for (std::size_t i = header_at[2] + 1; i < lines.size(); ++i) {
    if (lines[i].text.empty() || is_comment(lines[i])) continue;
    doc.contradictions.push_back(parse_contradiction_line(lines[i]));
  }
  return doc;
}

const char* to_string(Diagnostic::Kind kind) {
  switch (kind) {
    case Diagnostic::Kind::UndeclaredActionInContract:
      return "UndeclaredActionInContract";
    case Diagnostic::Kind::UndeclaredActionInContradiction:
      return "UndeclaredActionInContradiction";
    case Diagnostic::Kind::DuplicateDictionaryEntry:
      return "DuplicateDictionaryEntry";
    case Diagnostic::Kind::EmptyString:
      return "EmptyString";
  }
  return "?";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = "line " + std::to_string(d.line) + ": " + to_string(d.kind);
  if (!d.action.empty()) out += " " + d.action;
  return out;
}

std::vector<Diagnostic> validate(const ContractDocument& doc) {
  using K = Diagnostic::Kind;
  std::vector<Diagnostic> out;
  std::set<std::string> declared;
  for (const auto& e : doc.dictionary) {
    if (e.name.empty() || e.description.empty()) {
      out.push_back({K::EmptyString, e.name, e.line});
    }
    if (!e.name.empty() && !declared.insert(e.name).second) {
      out.push_back({K::DuplicateDictionaryEntry, e.name, e.line});
    }
  }
  for (std::size_t i = 0; i < doc.clauses.size(); ++i) {
    std::size_t line = i < doc.source_spans.size() ? doc.source_spans[i].first : 0;
    for (const auto& a : atoms_of(doc.clauses[i])) {
      if (!declared.count(a.name())) {
        out.push_back({K::UndeclaredActionInContract, a.name(), line});
      }
    }
  }
  for (const auto& c : doc.contradictions) {
    for (const std::string* side : {&c.left, &c.right}) {
      if (side->empty()) {
        out.push_back({K::EmptyString, "", c.line});
      } else if (!declared.count(*side)) {
        out.push_back({K::UndeclaredActionInContradiction, *side, c.line});
      }
    }
  }
  return out;
}

std::string serialize_contract(const ContractDocument& doc) {
  std::string out = "DICTIONARY\n";
  for (const auto& e : doc.dictionary) {
    out += e.name + " : " + e.description + "\n";
  }
  out += "CONTRACT\n";
  for (std::size_t i = 0; i < doc.clauses.size(); ++i) {
    if (i > 0) out += "\n";
    out += linearize_re(doc.clauses[i]) + "\n";
  }
  out += "CONTRADICTION\n";
  for (const auto& c : doc.contradictions) {
    out += c.left + " # " + c.right + "\n";
  }
  return out;
}

}  // namespace anacon
