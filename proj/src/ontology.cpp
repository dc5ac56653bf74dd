#include "essence/ontology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace essence {

DisjointClassesAxiom::DisjointClassesAxiom(std::vector<Iri> cs)
    : classes(std::move(cs)) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.size() < 2) {
    throw std::invalid_argument(
        "DisjointClasses needs at least two distinct classes");
  }
}

std::string to_string(const Axiom& axiom) {
  std::ostringstream out;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
          out << "SubClassOf(" << a.sub.str() << ", " << a.super.str() << ")";
        } else if constexpr (std::is_same_v<T, FunctionalPropertyAxiom>) {
          out << "FunctionalObjectProperty(" << a.property.str() << ")";
        } else if constexpr (std::is_same_v<T, PropertyDomainAxiom>) {
          out << "ObjectPropertyDomain(" << a.property.str() << ", "
              << a.domain.str() << ")";
        } else if constexpr (std::is_same_v<T, PropertyRangeAxiom>) {
          out << "ObjectPropertyRange(" << a.property.str() << ", "
              << a.range.str() << ")";
        } else {
          out << "DisjointClasses(";
          for (std::size_t i = 0; i < a.classes.size(); ++i) {
            if (i) out << ", ";
            out << a.classes[i].str();
          }
          out << ")";
        }
      },
      axiom);
  return out.str();
}

bool Ontology::declare_class(const Iri& iri) {
  if (class_set_.contains(iri)) return false;
  class_set_.insert(iri);
  classes_.push_back(iri);
  return true;
}

bool Ontology::declare_property(const Iri& iri) {
  if (property_set_.contains(iri)) return false;
  property_set_.insert(iri);
  properties_.push_back(iri);
  return true;
}

bool Ontology::contains_axiom(const Axiom& axiom) const {
  return std::find(axioms_.begin(), axioms_.end(), axiom) != axioms_.end();
}

bool Ontology::subclass_reaches(const Iri& from, const Iri& to) const {
  if (from == to) return true;
  std::map<Iri, std::vector<Iri>> parents;
  for (const auto& axiom : axioms_) {
    if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom)) {
      parents[sc->sub].push_back(sc->super);
    }
  }
  std::set<Iri> seen{from};
  std::vector<Iri> stack{from};
  while (!stack.empty()) {
    Iri node = stack.back();
    stack.pop_back();
    auto it = parents.find(node);
    if (it == parents.end()) continue;
    for (const auto& next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

void Ontology::require_declared(const Axiom& axiom) {
  auto check_class = [&](const Iri& iri) {
    if (has_class(iri)) return;
    if (mode_ == DeclarationMode::Lenient) {
      declare_class(iri);
      return;
    }
    throw UndeclaredEntityError(iri.str());
  };
  auto check_property = [&](const Iri& iri) {
    if (has_property(iri)) return;
    if (mode_ == DeclarationMode::Lenient) {
      declare_property(iri);
      return;
    }
    throw UndeclaredEntityError(iri.str());
  };
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
          check_class(a.sub);
          check_class(a.super);
        } else if constexpr (std::is_same_v<T, FunctionalPropertyAxiom>) {
          check_property(a.property);
        } else if constexpr (std::is_same_v<T, PropertyDomainAxiom>) {
          check_property(a.property);
          check_class(a.domain);
        } else if constexpr (std::is_same_v<T, PropertyRangeAxiom>) {
          check_property(a.property);
          check_class(a.range);
        } else {
          for (const auto& c : a.classes) check_class(c);
        }
      },
      axiom);
}

void Ontology::add_axiom(const Axiom& axiom) {
  if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom)) {
    if (sc->sub == sc->super) return;  // harmless tautology
  }
  require_declared(axiom);
  if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom)) {
    // The new edge sub -> super closes a cycle iff super already
    // reaches sub over asserted edges.
    if (subclass_reaches(sc->super, sc->sub)) {
      throw CycleError(sc->sub.str(), sc->super.str());
    }
  }
  if (contains_axiom(axiom)) return;
  axioms_.push_back(axiom);
}

void Ontology::add_axiom_unchecked(const Axiom& axiom) {
  if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom)) {
    if (sc->sub == sc->super) return;
  }
  if (contains_axiom(axiom)) return;
  axioms_.push_back(axiom);
}

PropertyProfile Ontology::property_profile(const Iri& property) const {
  PropertyProfile profile;
  for (const auto& axiom : axioms_) {
    if (const auto* f = std::get_if<FunctionalPropertyAxiom>(&axiom)) {
      if (f->property == property) profile.functional = true;
    } else if (const auto* d = std::get_if<PropertyDomainAxiom>(&axiom)) {
      if (d->property == property) profile.domain = d->domain;
    } else if (const auto* r = std::get_if<PropertyRangeAxiom>(&axiom)) {
      if (r->property == property) profile.range = r->range;
    }
  }
  return profile;
}

std::vector<SubClassOfAxiom> Ontology::subclass_axioms() const {
  std::vector<SubClassOfAxiom> out;
  for (const auto& axiom : axioms_) {
    if (const auto* sc = std::get_if<SubClassOfAxiom>(&axiom)) {
      out.push_back(*sc);
    }
  }
  return out;
}

std::vector<DisjointClassesAxiom> Ontology::disjoint_axioms() const {
  std::vector<DisjointClassesAxiom> out;
  for (const auto& axiom : axioms_) {
    if (const auto* dj = std::get_if<DisjointClassesAxiom>(&axiom)) {
      out.push_back(*dj);
    }
  }
  return out;
}

std::vector<SignatureFinding> Ontology::validate_signature() const {
  std::vector<SignatureFinding> findings;
  std::set<Iri> reported;

  auto undeclared_class = [&](const Iri& iri) {
    if (!has_class(iri) && reported.insert(iri).second) {
      findings.push_back({SignatureFinding::Kind::UndeclaredEntity,
                          {iri},
                          "undeclared entity " + iri.str()});
    }
  };
  auto undeclared_property = [&](const Iri& iri) {
    if (!has_property(iri) && reported.insert(iri).second) {
      findings.push_back({SignatureFinding::Kind::UndeclaredEntity,
                          {iri},
                          "undeclared entity " + iri.str()});
    }
  };

  for (const auto& axiom : axioms_) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, SubClassOfAxiom>) {
            undeclared_class(a.sub);
            undeclared_class(a.super);
          } else if constexpr (std::is_same_v<T, FunctionalPropertyAxiom>) {
            undeclared_property(a.property);
          } else if constexpr (std::is_same_v<T, PropertyDomainAxiom>) {
            undeclared_property(a.property);
            undeclared_class(a.domain);
          } else if constexpr (std::is_same_v<T, PropertyRangeAxiom>) {
            undeclared_property(a.property);
            undeclared_class(a.range);
          } else {
            for (const auto& c : a.classes) undeclared_class(c);
          }
        },
        axiom);
  }

  // Cycle detection: nodes a != b with a ->* b and b ->* a form an
  // equivalence group; one finding per group.
  std::map<Iri, std::set<Iri>> reach;
  std::vector<SubClassOfAxiom> edges = subclass_axioms();
  std::set<Iri> nodes;
  for (const auto& e : edges) {
    nodes.insert(e.sub);
    nodes.insert(e.super);
  }
  std::map<Iri, std::vector<Iri>> adj;
  for (const auto& e : edges) adj[e.sub].push_back(e.super);
  for (const auto& node : nodes) {
    std::set<Iri>& r = reach[node];
    std::vector<Iri> stack{node};
    while (!stack.empty()) {
      Iri cur = stack.back();
      stack.pop_back();
      auto it = adj.find(cur);
      if (it == adj.end()) continue;
      for (const auto& next : it->second) {
        if (r.insert(next).second) stack.push_back(next);
      }
    }
  }
  std::set<Iri> in_cycle_reported;
  for (const auto& node : nodes) {
    if (in_cycle_reported.contains(node)) continue;
    if (!reach[node].contains(node)) continue;
    std::vector<Iri> members;
    for (const auto& other : nodes) {
      if (reach[node].contains(other) && reach[other].contains(node)) {
        members.push_back(other);
        in_cycle_reported.insert(other);
      }
    }
    std::string msg = "subclass cycle through";
    for (const auto& m : members) msg += " " + m.str();
    findings.push_back(
        {SignatureFinding::Kind::SubclassCycle, members, msg});
  }
  return findings;
}

Ontology new_ontology(DeclarationMode mode) { return Ontology(mode); }

}  // namespace essence
