#include "anacon/xml_export.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace anacon {

namespace {

void escape_into(std::string_view s, std::string& out) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
}

void write_action(const ActionExpr& e, std::string& out) {
  using K = ActionExpr::Kind;
  switch (e.kind()) {
    case K::Impossible: out += "<impossible/>"; return;
    case K::Skip: out += "<skip/>"; return;
    case K::Atom:
      out += "<atom name=\"";
      escape_into(e.action().name(), out);
      out += "\"/>";
      return;
    case K::Negation:
    case K::Star: {
      const char* tag = e.kind() == K::Star ? "star" : "not";
      out += std::string("<") + tag + ">";
      write_action(e.operand(), out);
      out += std::string("</") + tag + ">";
      return;
    }
    case K::Concurrent:
    case K::Sequence:
    case K::Choice: {
      const char* tag = e.kind() == K::Concurrent ? "concurrent"
                        : e.kind() == K::Sequence ? "sequence"
                                                  : "choice";
      out += std::string("<") + tag + ">";
      write_action(e.left(), out);
      write_action(e.right(), out);
      out += std::string("</") + tag + ">";
      return;
    }
  }
}

void write_clause(const Clause& c, std::string& out) {
  using K = Clause::Kind;
  switch (c.kind()) {
    case K::Top: out += "<top/>"; return;
    case K::Bottom: out += "<bottom/>"; return;
    case K::Obligation:
    case K::Prohibition:
    case K::Permission: {
      const char* tag = c.kind() == K::Obligation    ? "obligation"
                        : c.kind() == K::Prohibition ? "prohibition"
                                                     : "permission";
      out += std::string("<") + tag + ">";
      write_action(c.action(), out);
      if (c.kind() != K::Permission && c.reparation()) {
        out += "<reparation>";
        write_clause(*c.reparation(), out);
        out += "</reparation>";
      }
      out += std::string("</") + tag + ">";
      return;
    }
    case K::Box:
      out += "<box><guard>";
      write_action(c.guard(), out);
      out += "</guard>";
      write_clause(c.body(), out);
      out += "</box>";
      return;
    case K::And:
    case K::XChoice: {
      const char* tag = c.kind() == K::And ? "and" : "xchoice";
      out += std::string("<") + tag + ">";
      for (const auto& op : c.operands()) write_clause(op, out);
      out += std::string("</") + tag + ">";
      return;
    }
  }
}

// ----- reading -----

struct Element {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<Element> children;
};

class XmlReader {
 public:
  explicit XmlReader(std::string_view src) : src_(src) {}

  Element document() {
    skip_misc();
    if (!starts_with("<")) fail("/", "expected a root element");
    Element root = element("");
    skip_misc();
    if (pos_ != src_.size()) fail("/", "unexpected content after the root element");
    return root;
  }

 private:
  Element element(const std::string& parent_path) {
    ++pos_;  // '<'
    Element e;
    e.name = name_token();
    const std::string path = parent_path + "/" + e.name;
    if (e.name.empty()) fail(path, "expected an element name");
    for (;;) {
      skip_space();
      if (starts_with("/>")) {
        pos_ += 2;
        return e;
      }
      if (starts_with(">")) {
        ++pos_;
        break;
      }
      std::string attr = name_token();
      if (attr.empty()) fail(path, "malformed attribute");
      skip_space();
      if (!starts_with("=")) fail(path, "expected '=' after attribute " + attr);
      ++pos_;
      skip_space();
      if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\'')) {
        fail(path, "expected a quoted attribute value");
      }
      char quote = src_[pos_++];
      auto end = src_.find(quote, pos_);
      if (end == std::string_view::npos) fail(path, "unterminated attribute value");
      e.attributes[attr] = unescape(src_.substr(pos_, end - pos_), path);
      pos_ = end + 1;
    }
    for (;;) {
      skip_misc();
      if (pos_ >= src_.size()) fail(path, "missing closing tag");
      if (starts_with("</")) {
        pos_ += 2;
        std::string closing = name_token();
        skip_space();
        if (closing != e.name || !starts_with(">")) {
          fail(path, "mismatched closing tag </" + closing + ">");
        }
        ++pos_;
        return e;
      }
      if (starts_with("<")) {
        e.children.push_back(element(path));
        continue;
      }
      fail(path, "unexpected text content");
    }
  }

  std::string unescape(std::string_view s, const std::string& path) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '&') {
        out += s[i];
        continue;
      }
      auto semi = s.find(';', i);
      if (semi == std::string_view::npos) fail(path, "unterminated entity");
      std::string_view ent = s.substr(i + 1, semi - i - 1);
      if (ent == "amp") out += '&';
      else if (ent == "lt") out += '<';
      else if (ent == "gt") out += '>';
      else if (ent == "quot") out += '"';
      else if (ent == "apos") out += '\'';
      else fail(path, "unknown entity &" + std::string(ent) + ";");
      i = semi;
    }
    return out;
  }

  std::string name_token() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '_' || src_[pos_] == '-' || src_[pos_] == ':' ||
            src_[pos_] == '.')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  // Whitespace, the XML declaration and comments.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        auto end = src_.find("?>", pos_);
        if (end == std::string_view::npos) fail("/", "unterminated declaration");
        pos_ = end + 2;
      } else if (starts_with("<!--")) {
        auto end = src_.find("-->", pos_);
        if (end == std::string_view::npos) fail("/", "unterminated comment");
        pos_ = end + 3;
      } else {
        return;
      }
    }
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw XmlSchemaError(path, msg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  throw XmlSchemaError(path, msg);
}

void expect_children(const Element& e, const std::string& path, std::size_t n) {
  if (e.children.size() != n) {
    schema_fail(path, "<" + e.name + "> expects " + std::to_string(n) +
                          " child element(s), found " +
                          std::to_string(e.children.size()));
  }
}

void expect_no_attributes(const Element& e, const std::string& path) {
  if (!e.attributes.empty()) {
    schema_fail(path, "unexpected attribute '" + e.attributes.begin()->first + "'");
  }
}

ActionExpr read_action(const Element& e, const std::string& parent) {
  const std::string path = parent + "/" + e.name;
  if (e.name == "atom") {
    expect_children(e, path, 0);
    auto it = e.attributes.find("name");
    if (it == e.attributes.end() || e.attributes.size() != 1) {
      schema_fail(path, "<atom> takes exactly the attribute 'name'");
    }
    if (!AtomicAction::is_valid_name(it->second)) {
      schema_fail(path, "invalid action name '" + it->second + "'");
    }
    return ActionExpr::atom(it->second);
  }
  expect_no_attributes(e, path);
  if (e.name == "skip" || e.name == "impossible") {
    expect_children(e, path, 0);
    return e.name == "skip" ? ActionExpr::skip() : ActionExpr::impossible();
  }
  if (e.name == "star" || e.name == "not") {
    expect_children(e, path, 1);
    ActionExpr inner = read_action(e.children[0], path);
    if (e.name == "star") return ActionExpr::star(std::move(inner));
    try {
      return ActionExpr::negation(std::move(inner));
    } catch (const std::invalid_argument& ex) {
      schema_fail(path, ex.what());
    }
  }
  if (e.name == "concurrent" || e.name == "sequence" || e.name == "choice") {
    expect_children(e, path, 2);
    ActionExpr l = read_action(e.children[0], path);
    ActionExpr r = read_action(e.children[1], path);
    if (e.name == "concurrent") return ActionExpr::concurrent(l, r);
    if (e.name == "sequence") return ActionExpr::sequence(l, r);
    return ActionExpr::choice(l, r);
  }
  schema_fail(path, "unexpected element <" + e.name + "> where an action was expected");
}

Clause read_clause(const Element& e, const std::string& parent) {
  const std::string path = parent + "/" + e.name;
  expect_no_attributes(e, path);
  try {
    if (e.name == "top" || e.name == "bottom") {
      expect_children(e, path, 0);
      return e.name == "top" ? Clause::top() : Clause::bottom();
    }
    if (e.name == "obligation" || e.name == "prohibition") {
      if (e.children.empty() || e.children.size() > 2) {
        schema_fail(path, "<" + e.name + "> expects an action and an optional <reparation>");
      }
      ActionExpr a = read_action(e.children[0], path);
      const bool obl = e.name == "obligation";
      if (e.children.size() == 1) {
        return obl ? Clause::obligation(std::move(a)) : Clause::prohibition(std::move(a));
      }
      const Element& rep = e.children[1];
      const std::string rep_path = path + "/" + rep.name;
      if (rep.name != "reparation") {
        schema_fail(rep_path, "expected <reparation>");
      }
      expect_no_attributes(rep, rep_path);
      expect_children(rep, rep_path, 1);
      Clause r = read_clause(rep.children[0], rep_path);
      return obl ? Clause::obligation(std::move(a), std::move(r))
                 : Clause::prohibition(std::move(a), std::move(r));
    }
    if (e.name == "permission") {
      expect_children(e, path, 1);
      return Clause::permission(read_action(e.children[0], path));
    }
    if (e.name == "box") {
      expect_children(e, path, 2);
      const Element& guard = e.children[0];
      const std::string guard_path = path + "/" + guard.name;
      if (guard.name != "guard") schema_fail(guard_path, "expected <guard>");
      expect_no_attributes(guard, guard_path);
      expect_children(guard, guard_path, 1);
      ActionExpr g = read_action(guard.children[0], guard_path);
      return Clause::box(std::move(g), read_clause(e.children[1], path));
    }
    if (e.name == "and") {
      if (e.children.size() < 2) schema_fail(path, "<and> expects at least 2 clauses");
      std::vector<Clause> ops;
      for (const auto& child : e.children) ops.push_back(read_clause(child, path));
      return Clause::conjunction(std::move(ops));
    }
    if (e.name == "xchoice") {
      expect_children(e, path, 2);
      return Clause::xchoice(read_clause(e.children[0], path),
                             read_clause(e.children[1], path));
    }
  } catch (const std::invalid_argument& ex) {
    schema_fail(path, ex.what());
  }
  schema_fail(path, "unexpected element <" + e.name + "> where a clause was expected");
}

}  // namespace

std::string to_xml(const Clause& c) {
  std::string out = "<contract>";
  write_clause(c, out);
  out += "</contract>";
  return out;
}

Clause from_xml(std::string_view xml) {
  Element root = XmlReader(xml).document();
  const std::string path = "/" + root.name;
  if (root.name != "contract") {
    schema_fail(path, "root element must be <contract>");
  }
  expect_no_attributes(root, path);
  expect_children(root, path, 1);
  return read_clause(root.children[0], path);
}

}  // namespace anacon
