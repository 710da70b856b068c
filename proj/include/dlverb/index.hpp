// Subsumption index over named concepts and roles.
//
// The index is a sound but deliberately incomplete stand-in for a DL
// reasoner. Concept subsumption comes from asserted inclusions between names,
// equivalences between names, and named conjuncts on the right of SUBCLASSOF
// or EQUIV. Disjunctions and negations contribute nothing. Role subsumption
// is the reflexive-transitive closure of SUBROLEOF with inverse mirroring.

#ifndef DLVERB_INDEX_HPP
#define DLVERB_INDEX_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlverb/model.hpp"

namespace dlverb {

class OntologyIndex {
 public:
  /// Saturates the closure rules to a fixpoint.
  static OntologyIndex build(const Ontology& ontology);

  // Queries below throw Error for undeclared names. The reserved Thing and
  // Nothing markers are accepted and behave as top and bottom.

  bool is_subsumed(const ConceptName& sub, const ConceptName& super) const;
  bool is_strictly_subsumed(const ConceptName& sub, const ConceptName& super) const;
  bool is_equivalent(const ConceptName& a, const ConceptName& b) const;

  bool is_subrole(const RoleExpr& sub, const RoleExpr& super) const;
  bool is_strict_subrole(const RoleExpr& sub, const RoleExpr& super) const;
  bool is_equiv_role(const RoleExpr& a, const RoleExpr& b) const;
  /// Tran(R) or Tran(Inv(R)) is asserted.
  bool is_transitive(const RoleExpr& role) const;

  /// Every declared concept D with c ⊑ D, reflexive; in declaration order.
  /// Thing has no declared supers; Nothing is below everything.
  std::vector<ConceptName> supers(const ConceptName& c) const;
  /// Every declared concept D with D ⊑ c, reflexive; in declaration order.
  std::vector<ConceptName> subs(const ConceptName& c) const;
  std::vector<RoleExpr> super_roles(const RoleExpr& r) const;
  std::vector<RoleExpr> sub_roles(const RoleExpr& r) const;

  /// Restriction conjuncts unfolded from EQUIV and SUBCLASSOF right sides
  /// whose left side is this name.
  const std::vector<Constraint>& definition(const ConceptName& c) const;

  /// Groups of mutually subsumed concepts / roles, each sorted, with
  /// singleton groups included.
  std::vector<std::vector<ConceptName>> concept_equivalence_classes() const;
  std::vector<std::vector<RoleExpr>> role_equivalence_classes() const;

  /// Pairs (a, b) with a < b asserted disjoint via "a and b SUBCLASSOF Nothing".
  const std::set<std::pair<ConceptName, ConceptName>>& disjoint_pairs() const { return disjoint_; }
  /// Cardinalities appearing anywhere in the ontology, plus 1.
  const std::set<unsigned>& numerals() const { return numerals_; }

  const std::vector<ConceptName>& concepts() const { return concepts_; }
  /// Every role and its inverse.
  const std::vector<RoleExpr>& role_nodes() const { return role_nodes_; }

  bool has_concept(const ConceptName& c) const;
  bool has_role(const RoleExpr& r) const;

 private:
  std::size_t concept_slot(const ConceptName& c) const;
  std::size_t role_slot(const RoleExpr& r) const;

  std::vector<ConceptName> concepts_;
  std::vector<RoleExpr> role_nodes_;  // base role i at 2i, its inverse at 2i+1
  std::vector<std::vector<bool>> concept_leq_;
  std::vector<std::vector<bool>> role_leq_;
  std::vector<bool> transitive_;
  std::vector<std::vector<Constraint>> definitions_;
  std::set<std::pair<ConceptName, ConceptName>> disjoint_;
  std::set<unsigned> numerals_;
  std::map<std::string, std::size_t, std::less<>> concept_lookup_;
  std::map<std::string, std::size_t, std::less<>> role_lookup_;  // base role -> slot of the base node
};

/// Reflexive-transitive closure of a square boolean relation, in place.
void close_transitively(std::vector<std::vector<bool>>& relation);

}  // namespace dlverb

#endif  // DLVERB_INDEX_HPP
