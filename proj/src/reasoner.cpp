#include "essence/reasoner.hpp"

#include <algorithm>
#include <sstream>

namespace essence {

bool SubsumptionClosure::is_subclass_of(const Iri& sub,
                                        const Iri& super) const {
  if (sub == super) return reflexive_.contains(sub);
  auto it = supers_.find(sub);
  return it != supers_.end() && it->second.contains(super);
}

std::vector<std::pair<Iri, Iri>> SubsumptionClosure::pairs() const {
  std::vector<std::pair<Iri, Iri>> out;
  for (const Iri& cls : reflexive_) out.emplace_back(cls, cls);
  for (const auto& [sub, supers] : supers_) {
    for (const Iri& super : supers) out.emplace_back(sub, super);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SubsumptionClosure::size() const {
  std::size_t n = reflexive_.size();
  for (const auto& [sub, supers] : supers_) n += supers.size();
  return n;
}

std::set<Iri> SubsumptionClosure::expand(const std::set<Iri>& types) const {
  std::set<Iri> out = types;
  for (const Iri& t : types) {
    auto it = supers_.find(t);
    if (it == supers_.end()) continue;
    out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

const std::set<Iri>& SubsumptionClosure::supers(const Iri& cls) const {
  static const std::set<Iri> kEmpty;
  auto it = supers_.find(cls);
  return it == supers_.end() ? kEmpty : it->second;
}

SubsumptionClosure subclass_closure(const Ontology& ontology) {
  SubsumptionClosure closure;
  for (const Iri& cls : ontology.classes()) closure.reflexive_.insert(cls);

  std::map<Iri, std::vector<Iri>> adj;
  std::set<Iri> nodes;
  for (const SubClassOfAxiom& edge : ontology.subclass_axioms()) {
    adj[edge.sub].push_back(edge.super);
    nodes.insert(edge.sub);
    nodes.insert(edge.super);
  }
  // Reachability per node; the class graphs here are tiny.
  for (const Iri& node : nodes) {
    std::set<Iri>& reached = closure.supers_[node];
    std::vector<Iri> stack{node};
    while (!stack.empty()) {
      Iri cur = stack.back();
      stack.pop_back();
      auto it = adj.find(cur);
      if (it == adj.end()) continue;
      for (const Iri& next : it->second) {
        if (next != node && reached.insert(next).second) {
          stack.push_back(next);
        }
      }
    }
    if (reached.empty()) closure.supers_.erase(node);
  }
  return closure;
}

std::string to_string(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::DomainViolation:
      return "domain-violation";
    case Finding::Kind::RangeViolation:
      return "range-violation";
    case Finding::Kind::FunctionalViolation:
      return "functional-violation";
    case Finding::Kind::DisjointnessViolation:
      return "disjointness-violation";
  }
  return "unknown";
}

std::string Finding::render() const {
  std::ostringstream out;
  out << to_string(kind) << " subject=" << subject.str();
  if (!property.empty()) out << " property=" << property.str();
  for (const Iri& e : entities) out << " " << e.str();
  return out.str();
}

namespace {

std::string render_class_assertion(const ClassAssertion& ca) {
  return "ClassAssertion(" + ca.cls.str() + ", " + ca.individual.str() + ")";
}

std::string render_property_assertion(const PropertyAssertion& pa) {
  return pa.property.local_name() + "(" + pa.subject.str() + ", " +
         pa.target.str() + ")";
}

// Expanded type set per individual plus, per (individual, type), the
// input statements that entail it. Citations always point at items
// present in the input abox/ontology.
struct TypeMap {
  std::map<Iri, std::set<Iri>> types;
  std::map<std::pair<Iri, Iri>, std::vector<std::string>> sources;

  void add(const Iri& individual, const Iri& type,
           std::vector<std::string> source) {
    if (types[individual].insert(type).second) {
      sources.emplace(std::make_pair(individual, type), std::move(source));
    }
  }
};

TypeMap expanded_types(const Ontology& ontology, const AssertionSet& abox,
                       const SubsumptionClosure& closure, CheckMode mode) {
  TypeMap map;
  for (const ClassAssertion& ca : abox.class_assertions) {
    std::string cite = render_class_assertion(ca);
    map.add(ca.individual, ca.cls, {cite});
    for (const Iri& super : closure.supers(ca.cls)) {
      map.add(ca.individual, super, {cite});
    }
  }
  if (mode == CheckMode::Infer) {
    for (const PropertyAssertion& pa : abox.property_assertions) {
      PropertyProfile profile = ontology.property_profile(pa.property);
      std::string cite = render_property_assertion(pa);
      if (profile.domain) {
        std::string axiom = to_string(
            Axiom(PropertyDomainAxiom{pa.property, *profile.domain}));
        map.add(pa.subject, *profile.domain, {axiom, cite});
        for (const Iri& super : closure.supers(*profile.domain)) {
          map.add(pa.subject, super, {axiom, cite});
        }
      }
      if (profile.range) {
        std::string axiom =
            to_string(Axiom(PropertyRangeAxiom{pa.property, *profile.range}));
        map.add(pa.target, *profile.range, {axiom, cite});
        for (const Iri& super : closure.supers(*profile.range)) {
          map.add(pa.target, super, {axiom, cite});
        }
      }
    }
  }
  return map;
}

bool finding_less(const Finding& a, const Finding& b) {
  auto key = [](const Finding& f) {
    return std::tie(f.kind, f.subject, f.property, f.entities);
  };
  return key(a) < key(b);
}

}  // namespace

AssertionSet infer_types(const Ontology& ontology, const AssertionSet& abox) {
  SubsumptionClosure closure = subclass_closure(ontology);
  AssertionSet out = abox;
  for (const PropertyAssertion& pa : abox.property_assertions) {
    PropertyProfile profile = ontology.property_profile(pa.property);
    if (profile.domain) out.assert_class(pa.subject, *profile.domain);
    if (profile.range) out.assert_class(pa.target, *profile.range);
  }
  // Superclass propagation; domain/range additions spawn no new
  // property assertions, so one pass reaches the fixpoint.
  AssertionSet expanded = out;
  for (const ClassAssertion& ca : out.class_assertions) {
    for (const Iri& super : subclass_closure(ontology).supers(ca.cls)) {
      expanded.assert_class(ca.individual, super);
    }
  }
  (void)closure;
  return expanded;
}

std::vector<Finding> detect_violations(const Ontology& ontology,
                                       const AssertionSet& abox,
                                       CheckMode mode) {
  SubsumptionClosure closure = subclass_closure(ontology);
  TypeMap types = expanded_types(ontology, abox, closure, mode);
  std::vector<Finding> findings;

  if (mode == CheckMode::Strict) {
    for (const PropertyAssertion& pa : abox.property_assertions) {
      PropertyProfile profile = ontology.property_profile(pa.property);
      if (profile.domain &&
          !types.types[pa.subject].contains(*profile.domain)) {
        findings.push_back(
            {Finding::Kind::DomainViolation,
             pa.subject,
             pa.property,
             {*profile.domain},
             {to_string(Axiom(PropertyDomainAxiom{pa.property, *profile.domain})),
              render_property_assertion(pa)}});
      }
      if (profile.range && !types.types[pa.target].contains(*profile.range)) {
        findings.push_back(
            {Finding::Kind::RangeViolation,
             pa.target,
             pa.property,
             {*profile.range},
             {to_string(Axiom(PropertyRangeAxiom{pa.property, *profile.range})),
              render_property_assertion(pa)}});
      }
    }
  }

  // Functional: one subject with >= 2 distinct targets. One finding per
  // (property, subject), citing the two lexicographically-first targets.
  std::map<std::pair<Iri, Iri>, std::vector<PropertyAssertion>> by_subject;
  for (const PropertyAssertion& pa : abox.property_assertions) {
    if (ontology.property_profile(pa.property).functional) {
      by_subject[{pa.property, pa.subject}].push_back(pa);
    }
  }
  for (const auto& [key, assertions] : by_subject) {
    if (assertions.size() < 2) continue;
    const auto& [property, subject] = key;
    findings.push_back(
        {Finding::Kind::FunctionalViolation,
         subject,
         property,
         {assertions[0].target, assertions[1].target},
         {to_string(Axiom(FunctionalPropertyAxiom{property})),
          render_property_assertion(assertions[0]),
          render_property_assertion(assertions[1])}});
  }

  // Disjointness: one finding per (individual, clashing class pair).
  for (const DisjointClassesAxiom& axiom : ontology.disjoint_axioms()) {
    std::string axiom_cite = to_string(Axiom(axiom));
    for (const auto& [individual, individual_types] : types.types) {
      for (std::size_t i = 0; i < axiom.classes.size(); ++i) {
        if (!individual_types.contains(axiom.classes[i])) continue;
        for (std::size_t j = i + 1; j < axiom.classes.size(); ++j) {
          if (!individual_types.contains(axiom.classes[j])) continue;
          std::vector<std::string> explanation{axiom_cite};
          for (const Iri& cls : {axiom.classes[i], axiom.classes[j]}) {
            for (const std::string& cite :
                 types.sources[{individual, cls}]) {
              if (std::find(explanation.begin(), explanation.end(), cite) ==
                  explanation.end()) {
                explanation.push_back(cite);
              }
            }
          }
          findings.push_back({Finding::Kind::DisjointnessViolation,
                              individual,
                              Iri{},
                              {axiom.classes[i], axiom.classes[j]},
                              std::move(explanation)});
        }
      }
    }
  }

  std::sort(findings.begin(), findings.end(), finding_less);
  return findings;
}

}  // namespace essence
