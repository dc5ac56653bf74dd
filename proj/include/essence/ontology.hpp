#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "essence/errors.hpp"
#include "essence/iri.hpp"

namespace essence {

struct SubClassOfAxiom {
  Iri sub;
  Iri super;
  auto operator<=>(const SubClassOfAxiom&) const = default;
};

struct FunctionalPropertyAxiom {
  Iri property;
  auto operator<=>(const FunctionalPropertyAxiom&) const = default;
};

struct PropertyDomainAxiom {
  Iri property;
  Iri domain;
  auto operator<=>(const PropertyDomainAxiom&) const = default;
};

struct PropertyRangeAxiom {
  Iri property;
  Iri range;
  auto operator<=>(const PropertyRangeAxiom&) const = default;
};

/// Pairwise disjointness over >= 2 classes. Member order is not
/// significant; the list is kept sorted so structural equality holds.
struct DisjointClassesAxiom {
  std::vector<Iri> classes;

  DisjointClassesAxiom() = default;
  explicit DisjointClassesAxiom(std::vector<Iri> cs);

  auto operator<=>(const DisjointClassesAxiom&) const = default;
};

using Axiom = std::variant<SubClassOfAxiom, FunctionalPropertyAxiom,
                           PropertyDomainAxiom, PropertyRangeAxiom,
                           DisjointClassesAxiom>;

/// Canonical one-line rendering, e.g. "SubClassOf(#team, #tangible)".
/// Used in findings and explanations.
std::string to_string(const Axiom& axiom);

/// Functional/domain/range knowledge about one object property,
/// aggregated from the axiom list.
struct PropertyProfile {
  bool functional = false;
  std::optional<Iri> domain;
  std::optional<Iri> range;
};

enum class DeclarationMode { Strict, Lenient };

struct SignatureFinding {
  enum class Kind { UndeclaredEntity, SubclassCycle };
  Kind kind;
  std::vector<Iri> entities;  // the undeclared IRI, or the cycle members
  std::string message;

  bool operator==(const SignatureFinding&) const = default;
};

/// Terminological content: class/property declarations plus an ordered,
/// duplicate-free axiom list. Value type; copy freely.
class Ontology {
 public:
  explicit Ontology(DeclarationMode mode = DeclarationMode::Strict)
      : mode_(mode) {}

  DeclarationMode mode() const { return mode_; }

  /// Idempotent. Returns true when newly declared.
  bool declare_class(const Iri& iri);
  bool declare_property(const Iri& iri);

  bool has_class(const Iri& iri) const { return class_set_.contains(iri); }
  bool has_property(const Iri& iri) const {
    return property_set_.contains(iri);
  }

  /// Validating insertion. Reflexive SubClassOf is silently dropped.
  /// Throws UndeclaredEntityError (strict mode, unknown IRI) or
  /// CycleError (the edge would close a nontrivial subclass cycle).
  /// Duplicates are ignored. In lenient mode unknown IRIs are declared
  /// on first use.
  void add_axiom(const Axiom& axiom);

  /// Insertion without declaration or cycle checks; used by parsers,
  /// whose output is validated afterwards via validate_signature().
  /// Still drops reflexive SubClassOf and structural duplicates.
  void add_axiom_unchecked(const Axiom& axiom);

  /// Declaration order is preserved; serialization relies on it.
  const std::vector<Iri>& classes() const { return classes_; }
  const std::vector<Iri>& properties() const { return properties_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }

  PropertyProfile property_profile(const Iri& property) const;

  std::vector<SubClassOfAxiom> subclass_axioms() const;
  std::vector<DisjointClassesAxiom> disjoint_axioms() const;

  /// All undeclared-reference and subclass-cycle findings; empty means
  /// well-formed.
  std::vector<SignatureFinding> validate_signature() const;

  /// Structural content equality (declarations and axiom sequence);
  /// the declaration mode is configuration, not content.
  bool operator==(const Ontology& other) const {
    return classes_ == other.classes_ && properties_ == other.properties_ &&
           axioms_ == other.axioms_;
  }

 private:
  bool contains_axiom(const Axiom& axiom) const;
  /// True when `to` is reachable from `from` over asserted subclass edges.
  bool subclass_reaches(const Iri& from, const Iri& to) const;
  void require_declared(const Axiom& axiom);

  DeclarationMode mode_;
  std::vector<Iri> classes_;
  std::vector<Iri> properties_;
  std::set<Iri> class_set_;
  std::set<Iri> property_set_;
  std::vector<Axiom> axioms_;
};

Ontology new_ontology(DeclarationMode mode = DeclarationMode::Strict);

}  // namespace essence
