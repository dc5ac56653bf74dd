#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "essence/abox.hpp"
#include "essence/ontology.hpp"

namespace essence {

/// Reflexive-transitive closure of the asserted SubClassOf edges.
/// Reflexive pairs exist for every declared class.
class SubsumptionClosure {
 public:
  bool is_subclass_of(const Iri& sub, const Iri& super) const;

  /// All pairs, lexicographic by (sub, super).
  std::vector<std::pair<Iri, Iri>> pairs() const;

  std::size_t size() const;

  /// types plus every strict superclass reachable from them.
  std::set<Iri> expand(const std::set<Iri>& types) const;

  /// Strict superclasses of one class.
  const std::set<Iri>& supers(const Iri& cls) const;

 private:
  friend SubsumptionClosure subclass_closure(const Ontology& ontology);

  std::map<Iri, std::set<Iri>> supers_;  // strict supers per node
  std::set<Iri> reflexive_;              // declared classes
};

SubsumptionClosure subclass_closure(const Ontology& ontology);

inline bool is_subclass_of(const SubsumptionClosure& closure, const Iri& sub,
                           const Iri& super) {
  return closure.is_subclass_of(sub, super);
}

enum class CheckMode { Strict, Infer };

struct Finding {
  enum class Kind {
    DomainViolation,
    RangeViolation,
    FunctionalViolation,
    DisjointnessViolation,
  };

  Kind kind;
  Iri subject;   // the individual at fault
  Iri property;  // involved property; empty for disjointness findings
  /// Kind-specific entities: the missing domain/range class, the two
  /// clashing targets, or the two clashing disjoint classes.
  std::vector<Iri> entities;
  /// The axioms and assertions that jointly produce the finding,
  /// rendered canonically; every cited item exists in the input.
  std::vector<std::string> explanation;

  std::string render() const;

  bool operator==(const Finding&) const = default;
};

std::string to_string(Finding::Kind kind);

/// Domain/range classes propagate onto subjects/targets of property
/// assertions, then every type propagates to its superclasses.
/// Monotone; applying twice equals applying once.
AssertionSet infer_types(const Ontology& ontology, const AssertionSet& abox);

/// Strict mode: domain/range mismatches are violations. Infer mode:
/// domain/range types are inferred instead, so only functional and
/// disjointness findings remain possible. Unique-name assumption
/// throughout. Output order is canonical and deterministic.
std::vector<Finding> detect_violations(const Ontology& ontology,
                                       const AssertionSet& abox,
                                       CheckMode mode);

}  // namespace essence
