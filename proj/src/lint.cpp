#include "dlverb/lint.hpp"

#include <optional>

#include "dlverb/parser.hpp"

namespace dlverb {

namespace {

void collect_cardinality_roles(const ConceptExpr& e, std::vector<RoleExpr>& out) {
  if (e.kind() == ConceptExpr::Kind::AtLeast || e.kind() == ConceptExpr::Kind::AtMost) {
    out.push_back(e.role());
  }
  for (const auto& op : e.operands()) collect_cardinality_roles(op, out);
}

std::vector<RoleExpr> cardinality_roles(const Axiom& axiom) {
  std::vector<RoleExpr> roles;
  if (const auto* a = std::get_if<SubConcept>(&axiom)) {
    collect_cardinality_roles(a->sub, roles);
    collect_cardinality_roles(a->super, roles);
  } else if (const auto* e = std::get_if<EquivConcept>(&axiom)) {
    collect_cardinality_roles(e->left, roles);
    collect_cardinality_roles(e->right, roles);
  } else if (const auto* ca = std::get_if<ConceptAssertion>(&axiom)) {
    collect_cardinality_roles(ca->expr, roles);
  }
  return roles;
}

}  // namespace

std::vector<SimplicityViolation> check_simplicity(const OntologyIndex& index,
                                                  const Ontology& ontology) {
  std::vector<SimplicityViolation> out;
  const auto& axioms = ontology.axioms();
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    std::optional<SimplicityViolation> found;
    for (const auto& role : cardinality_roles(axioms[i])) {
      for (const auto& sub : index.sub_roles(role)) {
        if (!index.is_transitive(sub)) continue;
        found = SimplicityViolation{
            i, role, sub,
            "axiom " + std::to_string(i + 1) + " '" + to_string(axioms[i]) +
                "' restricts the cardinality of non-simple role " + to_string(role) +
                " (transitive sub-role " + to_string(sub) + ")"};
        break;
      }
      if (found) break;
    }
    if (found) out.push_back(std::move(*found));
  }
  return out;
}

std::vector<DisjointnessWarning> lint_inconsistency(const OntologyIndex& index,
                                                    const DescriptionSet& ds) {
  std::vector<ConceptName> named;
  for (const auto& c : ds) {
    if (c.is_named()) named.push_back(c.filler());
  }
  std::vector<DisjointnessWarning> out;
  for (std::size_t i = 0; i < named.size(); ++i) {
    for (std::size_t j = i + 1; j < named.size(); ++j) {
      for (const auto& [a, b] : index.disjoint_pairs()) {
        bool hit = (index.is_subsumed(named[i], a) && index.is_subsumed(named[j], b)) ||
                   (index.is_subsumed(named[i], b) && index.is_subsumed(named[j], a));
        if (!hit) continue;
        out.push_back({ds.subject(), named[i], named[j], a, b,
                       ds.subject() + " is both " + named[i].id + " and " + named[j].id +
                           ", but " + a.id + " and " + b.id + " are disjoint"});
        break;
      }
    }
  }
  return out;
}

}  // namespace dlverb
