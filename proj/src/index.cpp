#include "dlverb/index.hpp"

#include <algorithm>

namespace dlverb {

void close_transitively(std::vector<std::vector<bool>>& relation) {
  const std::size_t n = relation.size();
  for (std::size_t i = 0; i < n; ++i) relation[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!relation[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (relation[k][j]) relation[i][j] = true;
      }
    }
  }
}

namespace {

void collect_numerals(const ConceptExpr& e, std::set<unsigned>& out) {
  if (e.kind() == ConceptExpr::Kind::AtLeast || e.kind() == ConceptExpr::Kind::AtMost) {
    out.insert(e.cardinality());
  }
  for (const auto& op : e.operands()) collect_numerals(op, out);
}

}  // namespace

OntologyIndex OntologyIndex::build(const Ontology& ontology) {
  OntologyIndex ix;
  ix.concepts_ = ontology.concepts();
  for (std::size_t i = 0; i < ix.concepts_.size(); ++i) ix.concept_lookup_[ix.concepts_[i].id] = i;
  for (const auto& role : ontology.roles()) {
    ix.role_lookup_[role] = ix.role_nodes_.size();
    ix.role_nodes_.push_back(RoleExpr{role, false});
    ix.role_nodes_.push_back(RoleExpr{role, true});
  }

  const std::size_t nc = ix.concepts_.size();
  const std::size_t nr = ix.role_nodes_.size();
  ix.concept_leq_.assign(nc, std::vector<bool>(nc, false));
  ix.role_leq_.assign(nr, std::vector<bool>(nr, false));
  ix.transitive_.assign(nr, false);
  ix.definitions_.assign(nc, {});
  ix.numerals_.insert(1);

  // A named left side picks up every named conjunct of the right side as a
  // super-concept and every description-set-form restriction as a definition.
  auto contribute = [&](const ConceptName& sub, const ConceptExpr& rhs) {
    const std::size_t s = ix.concept_slot(sub);
    std::vector<ConceptExpr> conjuncts;
    if (rhs.kind() == ConceptExpr::Kind::And) {
      conjuncts.assign(rhs.operands().begin(), rhs.operands().end());
    } else {
      conjuncts.push_back(rhs);
    }
    for (const auto& conjunct : conjuncts) {
      if (conjunct.kind() == ConceptExpr::Kind::Named) {
        ix.concept_leq_[s][ix.concept_slot(conjunct.name())] = true;
      } else if (conjunct.is_restriction()) {
        if (auto c = as_constraint(conjunct)) {
          auto& def = ix.definitions_[s];
          if (std::find(def.begin(), def.end(), *c) == def.end()) def.push_back(*c);
        }
      }
    }
  };

  for (const auto& axiom : ontology.axioms()) {
    if (const auto* a = std::get_if<SubConcept>(&axiom)) {
      ConceptExpr sub = normalize(a->sub);
      ConceptExpr super = normalize(a->super);
      collect_numerals(sub, ix.numerals_);
      collect_numerals(super, ix.numerals_);
      if (sub.kind() == ConceptExpr::Kind::Named) {
        contribute(sub.name(), super);
      } else if (sub.kind() == ConceptExpr::Kind::And && super.kind() == ConceptExpr::Kind::Bottom &&
                 sub.operands().size() == 2 &&
                 sub.operands()[0].kind() == ConceptExpr::Kind::Named &&
                 sub.operands()[1].kind() == ConceptExpr::Kind::Named) {
        ix.disjoint_.emplace(std::min(sub.operands()[0].name(), sub.operands()[1].name()),
                             std::max(sub.operands()[0].name(), sub.operands()[1].name()));
      }
    } else if (const auto* e = std::get_if<EquivConcept>(&axiom)) {
      ConceptExpr left = normalize(e->left);
      ConceptExpr right = normalize(e->right);
      collect_numerals(left, ix.numerals_);
      collect_numerals(right, ix.numerals_);
      if (left.kind() == ConceptExpr::Kind::Named) contribute(left.name(), right);
      if (right.kind() == ConceptExpr::Kind::Named) contribute(right.name(), left);
    } else if (const auto* r = std::get_if<SubRole>(&axiom)) {
      const std::size_t sub = ix.role_slot(r->sub);
      const std::size_t super = ix.role_slot(r->super);
      ix.role_leq_[sub][super] = true;
      ix.role_leq_[sub ^ 1U][super ^ 1U] = true;
    } else if (const auto* t = std::get_if<Transitive>(&axiom)) {
      const std::size_t slot = ix.role_slot(RoleExpr::named(t->role));
      ix.transitive_[slot] = true;
      ix.transitive_[slot ^ 1U] = true;
    } else if (const auto* ca = std::get_if<ConceptAssertion>(&axiom)) {
      collect_numerals(ca->expr, ix.numerals_);
    }
  }

  close_transitively(ix.concept_leq_);
  close_transitively(ix.role_leq_);
  return ix;
}

std::size_t OntologyIndex::concept_slot(const ConceptName& c) const {
  auto it = concept_lookup_.find(c.id);
  if (it == concept_lookup_.end()) throw Error("undeclared concept '" + c.id + "'");
  return it->second;
}

std::size_t OntologyIndex::role_slot(const RoleExpr& r) const {
  auto it = role_lookup_.find(r.base);
  if (it == role_lookup_.end()) throw Error("undeclared role '" + r.base + "'");
  return it->second + (r.inverted ? 1 : 0);
}

bool OntologyIndex::has_concept(const ConceptName& c) const {
  return c.is_reserved() || concept_lookup_.contains(c.id);
}

bool OntologyIndex::has_role(const RoleExpr& r) const { return role_lookup_.contains(r.base); }

bool OntologyIndex::is_subsumed(const ConceptName& sub, const ConceptName& super) const {
  if (!sub.is_reserved()) concept_slot(sub);
  if (!super.is_reserved()) concept_slot(super);
  if (super.is_top() || sub.is_bottom()) return true;
  if (sub.is_top() || super.is_bottom()) return false;
  return concept_leq_[concept_slot(sub)][concept_slot(super)];
}

bool OntologyIndex::is_strictly_subsumed(const ConceptName& sub, const ConceptName& super) const {
  return is_subsumed(sub, super) && !is_subsumed(super, sub);
}

bool OntologyIndex::is_equivalent(const ConceptName& a, const ConceptName& b) const {
  return is_subsumed(a, b) && is_subsumed(b, a);
}

bool OntologyIndex::is_subrole(const RoleExpr& sub, const RoleExpr& super) const {
  return role_leq_[role_slot(sub)][role_slot(super)];
}

bool OntologyIndex::is_strict_subrole(const RoleExpr& sub, const RoleExpr& super) const {
  return is_subrole(sub, super) && !is_subrole(super, sub);
}

bool OntologyIndex::is_equiv_role(const RoleExpr& a, const RoleExpr& b) const {
  return is_subrole(a, b) && is_subrole(b, a);
}

bool OntologyIndex::is_transitive(const RoleExpr& role) const { return transitive_[role_slot(role)]; }

std::vector<ConceptName> OntologyIndex::supers(const ConceptName& c) const {
  if (c.is_top()) return {c};
  if (c.is_bottom()) {
    std::vector<ConceptName> all = concepts_;
    all.push_back(c);
    return all;
  }
  const std::size_t s = concept_slot(c);
  std::vector<ConceptName> out;
  for (std::size_t j = 0; j < concepts_.size(); ++j) {
    if (concept_leq_[s][j]) out.push_back(concepts_[j]);
  }
  return out;
}

std::vector<ConceptName> OntologyIndex::subs(const ConceptName& c) const {
  if (c.is_bottom()) return {c};
  if (c.is_top()) {
    std::vector<ConceptName> all = concepts_;
    all.push_back(c);
    return all;
  }
  const std::size_t s = concept_slot(c);
  std::vector<ConceptName> out;
  for (std::size_t j = 0; j < concepts_.size(); ++j) {
    if (concept_leq_[j][s]) out.push_back(concepts_[j]);
  }
  return out;
}

std::vector<RoleExpr> OntologyIndex::super_roles(const RoleExpr& r) const {
  const std::size_t s = role_slot(r);
  std::vector<RoleExpr> out;
  for (std::size_t j = 0; j < role_nodes_.size(); ++j) {
    if (role_leq_[s][j]) out.push_back(role_nodes_[j]);
  }
  return out;
}

std::vector<RoleExpr> OntologyIndex::sub_roles(const RoleExpr& r) const {
  const std::size_t s = role_slot(r);
  std::vector<RoleExpr> out;
  for (std::size_t j = 0; j < role_nodes_.size(); ++j) {
    if (role_leq_[j][s]) out.push_back(role_nodes_[j]);
  }
  return out;
}

const std::vector<Constraint>& OntologyIndex::definition(const ConceptName& c) const {
  static const std::vector<Constraint> kNone;
  if (c.is_reserved()) return kNone;
  return definitions_[concept_slot(c)];
}

std::vector<std::vector<ConceptName>> OntologyIndex::concept_equivalence_classes() const {
  std::vector<std::vector<ConceptName>> classes;
  std::vector<bool> placed(concepts_.size(), false);
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (placed[i]) continue;
    std::vector<ConceptName> group;
    for (std::size_t j = i; j < concepts_.size(); ++j) {
      if (concept_leq_[i][j] && concept_leq_[j][i]) {
        placed[j] = true;
        group.push_back(concepts_[j]);
      }
    }
    std::sort(group.begin(), group.end());
    classes.push_back(std::move(group));
  }
  return classes;
}

std::vector<std::vector<RoleExpr>> OntologyIndex::role_equivalence_classes() const {
  std::vector<std::vector<RoleExpr>> classes;
  std::vector<bool> placed(role_nodes_.size(), false);
  for (std::size_t i = 0; i < role_nodes_.size(); ++i) {
    if (placed[i]) continue;
    std::vector<RoleExpr> group;
    for (std::size_t j = i; j < role_nodes_.size(); ++j) {
      if (role_leq_[i][j] && role_leq_[j][i]) {
        placed[j] = true;
        group.push_back(role_nodes_[j]);
      }
    }
    std::sort(group.begin(), group.end());
    classes.push_back(std::move(group));
  }
  return classes;
}

}  // namespace dlverb
