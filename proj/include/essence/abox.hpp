#pragma once

#include <set>

#include "essence/iri.hpp"

namespace essence {

struct ClassAssertion {
  Iri individual;
  Iri cls;
  auto operator<=>(const ClassAssertion&) const = default;
};

struct PropertyAssertion {
  Iri subject;
  Iri property;
  Iri target;
  auto operator<=>(const PropertyAssertion&) const = default;
};

/// Assertional statements about individuals. Sets, so duplicates collapse
/// and iteration order is canonical (lexicographic).
struct AssertionSet {
  std::set<ClassAssertion> class_assertions;
  std::set<PropertyAssertion> property_assertions;

  void assert_class(const Iri& individual, const Iri& cls) {
    class_assertions.insert({individual, cls});
  }
  void assert_property(const Iri& subject, const Iri& property,
                       const Iri& target) {
    property_assertions.insert({subject, property, target});
  }

  bool empty() const {
    return class_assertions.empty() && property_assertions.empty();
  }

  bool operator==(const AssertionSet&) const = default;
};

}  // namespace essence
