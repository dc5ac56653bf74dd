#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "essence/abox.hpp"
#include "essence/ontology.hpp"

namespace essence {

/// Terminological axioms plus assertional statements, as read from or
/// written to an .owx file.
struct OwlDocument {
  Ontology ontology;
  std::vector<Iri> individuals;  // declared NamedIndividuals, stored order
  AssertionSet abox;

  bool operator==(const OwlDocument&) const = default;
};

enum class ParseMode { Strict, Lenient };

struct ParseWarning {
  std::string element;
  std::string message;
  int line = 0;
  int col = 0;
};

struct ParsedOwl {
  OwlDocument document;
  std::vector<ParseWarning> warnings;  // lenient mode only
};

/// Recursive-descent parse of the supported element vocabulary:
/// Ontology (envelope, ignored), Declaration, SubClassOf,
/// FunctionalObjectProperty, ObjectPropertyDomain, ObjectPropertyRange,
/// DisjointClasses, ClassAssertion, ObjectPropertyAssertion,
/// NamedIndividual, Class, ObjectProperty.
///
/// Markup-level breakage always throws ParseError. Element-level
/// problems (unsupported name, missing IRI attribute, wrong children)
/// throw in strict mode and become per-element warnings in lenient
/// mode, leaving neighboring elements untouched.
ParsedOwl parse_owl_xml(std::string_view text,
                        ParseMode mode = ParseMode::Strict);

/// Canonical form: two-space indentation, one tag per line, '\n' line
/// endings, declarations before axioms, assertions last, all wrapped in
/// an <Ontology> envelope.
std::string serialize_owl_xml(const OwlDocument& doc);

}  // namespace essence
