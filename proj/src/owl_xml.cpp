#include "essence/owl_xml.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace essence {

namespace {

struct RawElement {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<RawElement> children;
  int line = 0;
  int col = 0;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         c == ':' || c == '.';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  int line() const { return line_; }
  int col() const { return col_; }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }

  bool starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  // Whitespace, comments and processing instructions between tags.
  void skip_inter_element() {
    for (;;) {
      while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      }
      if (starts_with("<!--")) {
        while (!eof() && !starts_with("-->")) advance();
        if (eof()) fail("unterminated comment");
        advance();
        advance();
        advance();
        continue;
      }
      if (starts_with("<?")) {
        while (!eof() && !starts_with("?>")) advance();
        if (eof()) fail("unterminated processing instruction");
        advance();
        advance();
        continue;
      }
      break;
    }
  }

  std::string read_name() {
    if (eof() || !is_name_char(peek())) fail("expected a name");
    std::string name;
    while (!eof() && is_name_char(peek())) name.push_back(advance());
    return name;
  }

  std::string read_attr_value() {
    expect('"');
    std::string value;
    while (!eof() && peek() != '"') {
      char c = advance();
      if (c == '&') {
        value.push_back(read_entity());
      } else {
        value.push_back(c);
      }
    }
    expect('"');
    return value;
  }

 private:
  char read_entity() {
    std::string name;
    while (!eof() && peek() != ';') name.push_back(advance());
    if (eof()) fail("unterminated entity reference");
    advance();  // ';'
    if (name == "amp") return '&';
    if (name == "lt") return '<';
    if (name == "gt") return '>';
    if (name == "quot") return '"';
    if (name == "apos") return '\'';
    fail("unknown entity &" + name + ";");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Reads one element starting at '<'. Children are recursed; only
// whitespace/comments may appear between tags.
RawElement parse_element(Lexer& lex) {
  RawElement element;
  element.line = lex.line();
  element.col = lex.col();
  lex.expect('<');
  element.name = lex.read_name();
  for (;;) {
    while (!lex.eof() && std::isspace(static_cast<unsigned char>(lex.peek()))) {
      lex.advance();
    }
    if (lex.eof()) lex.fail("unterminated tag <" + element.name);
    if (lex.peek() == '/') {
      lex.advance();
      lex.expect('>');
      return element;  // self-closing
    }
    if (lex.peek() == '>') {
      lex.advance();
      break;
    }
    std::string attr = lex.read_name();
    while (!lex.eof() && std::isspace(static_cast<unsigned char>(lex.peek()))) {
      lex.advance();
    }
    lex.expect('=');
    while (!lex.eof() && std::isspace(static_cast<unsigned char>(lex.peek()))) {
      lex.advance();
    }
    element.attrs[attr] = lex.read_attr_value();
  }
  // Content: child elements until the matching close tag.
  for (;;) {
    lex.skip_inter_element();
    if (lex.eof()) lex.fail("missing </" + element.name + ">");
    if (lex.peek() != '<') lex.fail("unexpected text content");
    if (lex.starts_with("</")) {
      lex.advance();
      lex.advance();
      std::string closing = lex.read_name();
      if (closing != element.name) {
        lex.fail("mismatched close tag </" + closing + "> for <" +
                 element.name + ">");
      }
      while (!lex.eof() &&
             std::isspace(static_cast<unsigned char>(lex.peek()))) {
        lex.advance();
      }
      lex.expect('>');
      return element;
    }
    element.children.push_back(parse_element(lex));
  }
}

std::vector<RawElement> parse_raw_document(std::string_view text) {
  Lexer lex(text);
  std::vector<RawElement> elements;
  lex.skip_inter_element();
  while (!lex.eof()) {
    if (lex.peek() != '<') lex.fail("unexpected text content");
    elements.push_back(parse_element(lex));
    lex.skip_inter_element();
  }
  // A document-level <Ontology> envelope carries no semantics.
  if (elements.size() == 1 && elements[0].name == "Ontology") {
    return std::move(elements[0].children);
  }
  return elements;
}

// Element-level mapping failure; recoverable in lenient mode.
struct ElementProblem {
  std::string element;
  std::string message;
  int line;
  int col;
};

Iri require_iri(const RawElement& e) {
  auto it = e.attrs.find("IRI");
  if (it == e.attrs.end()) {
    throw ElementProblem{e.name, "missing IRI attribute on <" + e.name + ">",
                         e.line, e.col};
  }
  try {
    return Iri(it->second);
  } catch (const std::invalid_argument& err) {
    throw ElementProblem{e.name, err.what(), e.line, e.col};
  }
}

Iri child_iri(const RawElement& parent, std::size_t index,
              std::string_view expected_name) {
  if (index >= parent.children.size()) {
    throw ElementProblem{parent.name,
                         "<" + parent.name + "> needs a <" +
                             std::string(expected_name) + "> child",
                         parent.line, parent.col};
  }
  const RawElement& child = parent.children[index];
  if (child.name != expected_name) {
    throw ElementProblem{parent.name,
                         "expected <" + std::string(expected_name) +
                             "> child, found <" + child.name + ">",
                         child.line, child.col};
  }
  return require_iri(child);
}

void expect_child_count(const RawElement& e, std::size_t n) {
  if (e.children.size() != n) {
    throw ElementProblem{e.name,
                         "<" + e.name + "> expects " + std::to_string(n) +
                             " children, found " +
                             std::to_string(e.children.size()),
                         e.line, e.col};
  }
}

class DocumentBuilder {
 public:
  void add_individual(const Iri& iri) {
    if (individual_set_.insert(iri).second) {
      doc_.individuals.push_back(iri);
    }
  }

  void map_element(const RawElement& e) {
    if (e.name == "Declaration") {
      expect_child_count(e, 1);
      const RawElement& decl = e.children[0];
      if (decl.name == "Class") {
        doc_.ontology.declare_class(require_iri(decl));
      } else if (decl.name == "ObjectProperty") {
        doc_.ontology.declare_property(require_iri(decl));
      } else if (decl.name == "NamedIndividual") {
        add_individual(require_iri(decl));
      } else {
        throw ElementProblem{e.name, "unsupported declaration <" + decl.name + ">",
                             decl.line, decl.col};
      }
    } else if (e.name == "SubClassOf") {
      expect_child_count(e, 2);
      Iri sub = child_iri(e, 0, "Class");
      Iri super = child_iri(e, 1, "Class");
      doc_.ontology.add_axiom_unchecked(SubClassOfAxiom{sub, super});
    } else if (e.name == "FunctionalObjectProperty") {
      expect_child_count(e, 1);
      doc_.ontology.add_axiom_unchecked(
          FunctionalPropertyAxiom{child_iri(e, 0, "ObjectProperty")});
    } else if (e.name == "ObjectPropertyDomain") {
      expect_child_count(e, 2);
      doc_.ontology.add_axiom_unchecked(PropertyDomainAxiom{
          child_iri(e, 0, "ObjectProperty"), child_iri(e, 1, "Class")});
    } else if (e.name == "ObjectPropertyRange") {
      expect_child_count(e, 2);
      doc_.ontology.add_axiom_unchecked(PropertyRangeAxiom{
          child_iri(e, 0, "ObjectProperty"), child_iri(e, 1, "Class")});
    } else if (e.name == "DisjointClasses") {
      if (e.children.size() < 2) {
        throw ElementProblem{
            e.name, "<DisjointClasses> expects at least 2 children", e.line,
            e.col};
      }
      std::vector<Iri> classes;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        classes.push_back(child_iri(e, i, "Class"));
      }
      try {
        doc_.ontology.add_axiom_unchecked(
            DisjointClassesAxiom(std::move(classes)));
      } catch (const std::invalid_argument& err) {
        throw ElementProblem{e.name, err.what(), e.line, e.col};
      }
    } else if (e.name == "ClassAssertion") {
      expect_child_count(e, 2);
      Iri cls = child_iri(e, 0, "Class");
      Iri individual = child_iri(e, 1, "NamedIndividual");
      doc_.abox.assert_class(individual, cls);
    } else if (e.name == "ObjectPropertyAssertion") {
      expect_child_count(e, 3);
      Iri property = child_iri(e, 0, "ObjectProperty");
      Iri subject = child_iri(e, 1, "NamedIndividual");
      Iri target = child_iri(e, 2, "NamedIndividual");
      doc_.abox.assert_property(subject, property, target);
    } else if (e.name == "NamedIndividual") {
      // Bare individual declaration, tolerated outside <Declaration>.
      add_individual(require_iri(e));
    } else {
      throw ElementProblem{e.name, "unsupported element <" + e.name + ">",
                           e.line, e.col};
    }
  }

  OwlDocument take() { return std::move(doc_); }

 private:
  OwlDocument doc_;
  std::set<Iri> individual_set_;
};

void append_escaped(std::string& out, const std::string& value) {
  for (char c : value) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
}

class Writer {
 public:
  void open(std::string_view name) {
    indent();
    out_ += "<";
    out_ += name;
    out_ += ">\n";
    ++depth_;
  }

  void close(std::string_view name) {
    --depth_;
    indent();
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void leaf(std::string_view name, const Iri& iri) {
    indent();
    out_ += "<";
    out_ += name;
    out_ += " IRI=\"";
    append_escaped(out_, iri.str());
    out_ += "\"/>\n";
  }

  void wrapped_leaf(std::string_view wrapper, std::string_view name,
                    const Iri& iri) {
    open(wrapper);
    leaf(name, iri);
    close(wrapper);
  }

  std::string take() { return std::move(out_); }

 private:
  void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

  std::string out_;
  int depth_ = 0;
};

}  // namespace

ParsedOwl parse_owl_xml(std::string_view text, ParseMode mode) {
  std::vector<RawElement> elements = parse_raw_document(text);
  ParsedOwl result;
  DocumentBuilder builder;
  for (const RawElement& e : elements) {
    try {
      builder.map_element(e);
    } catch (const ElementProblem& problem) {
      if (mode == ParseMode::Strict) {
        throw ParseError(problem.message, problem.line, problem.col);
      }
      result.warnings.push_back(
          {problem.element, problem.message, problem.line, problem.col});
    }
  }
  result.document = builder.take();
  return result;
}

std::string serialize_owl_xml(const OwlDocument& doc) {
  Writer w;
  w.open("Ontology");
  for (const Iri& cls : doc.ontology.classes()) {
    w.wrapped_leaf("Declaration", "Class", cls);
  }
  for (const Iri& property : doc.ontology.properties()) {
    w.wrapped_leaf("Declaration", "ObjectProperty", property);
  }
  for (const Iri& individual : doc.individuals) {
    w.wrapped_leaf("Declaration", "NamedIndividual", individual);
  }
  for (const Axiom& axiom : doc.ontology.axioms()) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
            w.open("SubClassOf");
            w.leaf("Class", a.sub);
            w.leaf("Class", a.super);
            w.close("SubClassOf");
          } else if constexpr (std::is_same_v<T, FunctionalPropertyAxiom>) {
            w.open("FunctionalObjectProperty");
            w.leaf("ObjectProperty", a.property);
            w.close("FunctionalObjectProperty");
          } else if constexpr (std::is_same_v<T, PropertyDomainAxiom>) {
            w.open("ObjectPropertyDomain");
            w.leaf("ObjectProperty", a.property);
            w.leaf("Class", a.domain);
            w.close("ObjectPropertyDomain");
          } else if constexpr (std::is_same_v<T, PropertyRangeAxiom>) {
            w.open("ObjectPropertyRange");
            w.leaf("ObjectProperty", a.property);
            w.leaf("Class", a.range);
            w.close("ObjectPropertyRange");
          } else {
            w.open("DisjointClasses");
            for (const Iri& c : a.classes) w.leaf("Class", c);
            w.close("DisjointClasses");
          }
        },
        axiom);
  }
  for (const ClassAssertion& ca : doc.abox.class_assertions) {
    w.open("ClassAssertion");
    w.leaf("Class", ca.cls);
    w.leaf("NamedIndividual", ca.individual);
    w.close("ClassAssertion");
  }
  for (const PropertyAssertion& pa : doc.abox.property_assertions) {
    w.open("ObjectPropertyAssertion");
    w.leaf("ObjectProperty", pa.property);
    w.leaf("NamedIndividual", pa.subject);
    w.leaf("NamedIndividual", pa.target);
    w.close("ObjectPropertyAssertion");
  }
  w.close("Ontology");
  return w.take();
}

}  // namespace essence
