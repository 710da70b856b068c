// Ontology and description-set checks that report rather than reject.

#ifndef DLVERB_LINT_HPP
#define DLVERB_LINT_HPP

#include <string>
#include <vector>

#include "dlverb/descriptions.hpp"
#include "dlverb/index.hpp"

namespace dlverb {

/// A cardinality restriction over a role that has a transitive sub-role.
struct SimplicityViolation {
  std::size_t axiom;            // position in Ontology::axioms()
  RoleExpr restricted_role;     // role S of the first offending >=n S.C / <=m S.C
  RoleExpr transitive_subrole;  // some transitive R with R ⊑ S
  std::string message;
};

/// One violation per offending axiom.
std::vector<SimplicityViolation> check_simplicity(const OntologyIndex& index,
                                                  const Ontology& ontology);

/// Two members of a description-set fall under an asserted disjoint pair.
struct DisjointnessWarning {
  std::string subject;
  ConceptName first, second;                    // the members, first < second
  ConceptName disjoint_first, disjoint_second;  // the asserted pair
  std::string message;
};

std::vector<DisjointnessWarning> lint_inconsistency(const OntologyIndex& index,
                                                    const DescriptionSet& ds);

}  // namespace dlverb

#endif  // DLVERB_LINT_HPP
