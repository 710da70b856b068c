#include "dlverb/descriptions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace dlverb {

DescriptionSet::DescriptionSet(std::string subject, std::initializer_list<Constraint> members)
    : subject_(std::move(subject)) {
  for (const auto& c : members) insert(c);
}

DescriptionSet::DescriptionSet(std::string subject, const std::set<Constraint>& members)
    : subject_(std::move(subject)) {
  for (const auto& c : members) insert(c);
}

bool DescriptionSet::insert(const Constraint& c) {
  if (c.has_reserved_filler()) return false;
  return members_.insert(c).second;
}

std::string to_string(const DescriptionSet& ds) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : ds) {
    out += first ? " " : ", ";
    out += to_string(c);
    first = false;
  }
  out += first ? "}" : " }";
  return out;
}

namespace {

void collect_restrictions(const ConceptExpr& e, std::set<Constraint>& out) {
  if (e.is_restriction()) {
    if (auto c = as_constraint(e)) out.insert(*c);
  }
  for (const auto& op : e.operands()) collect_restrictions(op, out);
}

struct Edge {
  std::size_t subject;
  RoleExpr role;
  std::size_t object;
  auto operator<=>(const Edge&) const = default;
};

// Role assertions closed under inverses, the role hierarchy and transitivity.
std::set<Edge> closed_edges(const OntologyIndex& index, const Ontology& ontology,
                            const std::map<std::string, std::size_t>& slot) {
  std::set<Edge> edges;
  for (const auto& axiom : ontology.axioms()) {
    if (const auto* ra = std::get_if<RoleAssertion>(&axiom)) {
      edges.insert({slot.at(ra->subject), RoleExpr::named(ra->role), slot.at(ra->object)});
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Edge> fresh;
    for (const auto& e : edges) {
      fresh.push_back({e.object, e.role.inverse(), e.subject});
      for (const auto& s : index.super_roles(e.role)) fresh.push_back({e.subject, s, e.object});
      if (index.is_transitive(e.role)) {
        auto lo = edges.lower_bound({e.object, RoleExpr{}, 0});
        for (auto it = lo; it != edges.end() && it->subject == e.object; ++it) {
          if (it->role == e.role) fresh.push_back({e.subject, e.role, it->object});
        }
      }
    }
    for (auto& e : fresh) changed |= edges.insert(std::move(e)).second;
  }
  return edges;
}

}  // namespace

std::set<Constraint> restriction_vocabulary(const Ontology& ontology) {
  std::set<Constraint> vocab;
  for (const auto& axiom : ontology.axioms()) {
    if (const auto* a = std::get_if<SubConcept>(&axiom)) {
      collect_restrictions(normalize(a->sub), vocab);
      collect_restrictions(normalize(a->super), vocab);
    } else if (const auto* e = std::get_if<EquivConcept>(&axiom)) {
      collect_restrictions(normalize(e->left), vocab);
      collect_restrictions(normalize(e->right), vocab);
    } else if (const auto* ca = std::get_if<ConceptAssertion>(&axiom)) {
      collect_restrictions(normalize(ca->expr), vocab);
    }
  }
  return vocab;
}

std::vector<std::set<Constraint>> saturate_all(const OntologyIndex& index, const Ontology& ontology) {
  const auto& individuals = ontology.individuals();
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < individuals.size(); ++i) slot[individuals[i]] = i;

  std::vector<std::vector<std::pair<RoleExpr, std::size_t>>> outgoing(individuals.size());
  std::vector<std::vector<std::pair<RoleExpr, std::size_t>>> incoming(individuals.size());
  for (const auto& e : closed_edges(index, ontology, slot)) {
    outgoing[e.subject].emplace_back(e.role, e.object);
    incoming[e.object].emplace_back(e.role, e.subject);
  }

  std::vector<std::set<Constraint>> facts(individuals.size());
  std::deque<std::pair<std::size_t, Constraint>> queue;
  auto add = [&](std::size_t who, const Constraint& c) {
    if (c.is_named() && c.filler().is_top()) return;
    if (facts[who].insert(c).second) queue.emplace_back(who, c);
  };

  for (const auto& axiom : ontology.axioms()) {
    const auto* ca = std::get_if<ConceptAssertion>(&axiom);
    if (ca == nullptr) continue;
    ConceptExpr expr = normalize(ca->expr);
    std::vector<ConceptExpr> parts;
    if (expr.kind() == ConceptExpr::Kind::And) {
      parts.assign(expr.operands().begin(), expr.operands().end());
    } else {
      parts.push_back(expr);
    }
    for (const auto& part : parts) {
      if (auto c = as_constraint(part)) add(slot.at(ca->individual), *c);
    }
  }

  const auto& numerals = index.numerals();
  while (!queue.empty()) {
    auto [who, c] = queue.front();
    queue.pop_front();
    const ConceptName& filler = c.filler();
    switch (c.kind()) {
      case ConstraintKind::Named:
        for (const auto& d : index.supers(filler)) add(who, Constraint::named(d));
        for (const auto& def : index.definition(filler)) add(who, def);
        for (const auto& [role, from] : incoming[who]) add(from, Constraint::exists(role, filler));
        break;
      case ConstraintKind::Exists:
        for (const auto& d : index.supers(filler)) add(who, c.with_filler(d));
        for (const auto& s : index.super_roles(c.role())) add(who, c.with_role(s));
        break;
      case ConstraintKind::Forall:
        for (const auto& d : index.supers(filler)) add(who, c.with_filler(d));
        for (const auto& s : index.sub_roles(c.role())) add(who, c.with_role(s));
        for (const auto& [role, to] : outgoing[who]) {
          if (role == c.role()) add(to, Constraint::named(filler));
        }
        break;
      case ConstraintKind::AtLeast:
        for (const auto& d : index.supers(filler)) add(who, c.with_filler(d));
        for (const auto& s : index.super_roles(c.role())) add(who, c.with_role(s));
        for (unsigned m : numerals) {
          if (m < c.number()) add(who, Constraint::at_least(m, c.role(), filler));
        }
        break;
      case ConstraintKind::AtMost:
        for (const auto& d : index.subs(filler)) add(who, c.with_filler(d));
        for (const auto& s : index.sub_roles(c.role())) add(who, c.with_role(s));
        break;
      case ConstraintKind::NonVacuous:
      case ConstraintKind::ExactlyOne:
        break;
    }
  }
  return facts;
}

std::vector<DescriptionSet> describe_all(const OntologyIndex& index, const Ontology& ontology) {
  const std::set<Constraint> vocab = restriction_vocabulary(ontology);
  auto facts = saturate_all(index, ontology);
  std::vector<DescriptionSet> out;
  out.reserve(facts.size());
  for (std::size_t i = 0; i < facts.size(); ++i) {
    DescriptionSet ds(ontology.individuals()[i]);
    for (const auto& c : facts[i]) {
      if (c.is_named() || vocab.contains(c)) ds.insert(c);
    }
    out.push_back(std::move(ds));
  }
  return out;
}

DescriptionSet description_set(const OntologyIndex& index, const Ontology& ontology,
                               std::string_view individual) {
  const auto& individuals = ontology.individuals();
  auto it = std::find(individuals.begin(), individuals.end(), individual);
  if (it == individuals.end()) throw Error("undeclared individual '" + std::string(individual) + "'");
  auto all = describe_all(index, ontology);
  return all[static_cast<std::size_t>(it - individuals.begin())];
}

}  // namespace dlverb
