#include <random>

#include "dlverb/lint.hpp"
#include "dlverb/oracle.hpp"

namespace dlverb {

namespace {

// Draws go through the raw engine output so sequences do not depend on the
// standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

class Generator {
 public:
  explicit Generator(const GenParams& p) : p_(p), draw_(p.seed) {}

  Ontology run() {
    const std::size_t n_concepts = draw_.between((p_.max_concepts + 1) / 2, p_.max_concepts);
    const std::size_t n_roles = p_.max_roles == 0 ? 0 : draw_.between(1, p_.max_roles);
    const std::size_t n_individuals = draw_.between(1, p_.max_individuals);
    for (std::size_t i = 0; i < n_concepts; ++i) concepts_.push_back("A" + std::to_string(i));
    for (std::size_t i = 0; i < n_roles; ++i) roles_.push_back("r" + std::to_string(i));
    for (std::size_t i = 0; i < n_individuals; ++i) individuals_.push_back("i" + std::to_string(i));

    for (std::size_t i = 1; i < n_concepts; ++i) {
      if (draw_.chance(0.6)) push(SubConcept{named(i), named(draw_.below(i))});
    }
    for (std::size_t i = 1; i < n_roles; ++i) {
      if (draw_.chance(0.4)) {
        RoleExpr sub = RoleExpr::named(roles_[i]);
        if (draw_.chance(0.2)) sub = sub.inverse();
        RoleExpr super = RoleExpr::named(roles_[draw_.below(i)]);
        push(SubRole{sub, super});
        if (draw_.chance(0.25)) push(SubRole{super, sub});
      }
    }
    for (std::size_t i = 1; i < n_concepts; ++i) {
      if (n_roles > 0 && draw_.chance(p_.restriction_probability * 0.6)) {
        std::vector<ConceptExpr> parts{named(draw_.below(i)), restriction()};
        if (draw_.chance(0.3)) parts.push_back(restriction());
        push(EquivConcept{named(i), ConceptExpr::conjunction(std::move(parts))});
      } else if (n_roles > 0 && draw_.chance(p_.restriction_probability * 0.3)) {
        push(SubConcept{named(i), restriction()});
      }
    }
    if (n_concepts > 1 && draw_.chance(0.3)) {
      std::size_t a = draw_.below(n_concepts - 1) + 1;
      push(EquivConcept{named(a), named(draw_.below(a))});
    }
    if (n_concepts > 1 && draw_.chance(0.3)) {
      std::size_t a = draw_.below(n_concepts);
      std::size_t b = draw_.below(n_concepts);
      if (a != b) {
        push(SubConcept{ConceptExpr::conjunction({named(a), named(b)}), ConceptExpr::bottom()});
      }
    }

    for (std::size_t i = 0; i < n_individuals; ++i) {
      const std::size_t n = draw_.between(1, 2);
      for (std::size_t k = 0; k < n; ++k) {
        ConceptExpr e = n_roles > 0 && draw_.chance(p_.restriction_probability * 0.5)
                            ? restriction()
                            : named(draw_.below(n_concepts));
        push(ConceptAssertion{std::move(e), individuals_[i]});
      }
    }
    if (n_roles > 0) {
      const std::size_t n_edges = draw_.below(n_individuals * 2 + 1);
      for (std::size_t k = 0; k < n_edges; ++k) {
        push(RoleAssertion{roles_[draw_.below(n_roles)], individuals_[draw_.below(n_individuals)],
                           individuals_[draw_.below(n_individuals)]});
      }
    }

    Ontology onto = assemble(axioms_);
    if (n_roles > 0 && draw_.chance(0.5)) {
      // A transitive role is kept only when no cardinality restriction sits above it.
      std::vector<Axiom> trial = axioms_;
      trial.emplace_back(Transitive{roles_[draw_.below(n_roles)]});
      Ontology candidate = assemble(trial);
      if (trial.size() <= p_.max_axioms &&
          check_simplicity(OntologyIndex::build(candidate), candidate).empty()) {
        onto = std::move(candidate);
      }
    }
    return onto;
  }

 private:
  ConceptExpr named(std::size_t i) const { return ConceptExpr::named(ConceptName{concepts_[i]}); }

  ConceptExpr restriction() {
    RoleExpr r = RoleExpr::named(roles_[draw_.below(roles_.size())]);
    if (draw_.chance(0.15)) r = r.inverse();
    ConceptExpr filler = named(draw_.below(concepts_.size()));
    switch (draw_.below(4)) {
      case 0: return ConceptExpr::exists(r, filler);
      case 1: return ConceptExpr::forall(r, filler);
      case 2: return ConceptExpr::at_least(static_cast<unsigned>(draw_.between(1, 3)), r, filler);
      default: return ConceptExpr::at_most(static_cast<unsigned>(draw_.between(1, 3)), r, filler);
    }
  }

  void push(Axiom axiom) {
    if (axioms_.size() < p_.max_axioms) axioms_.push_back(std::move(axiom));
  }

  Ontology assemble(const std::vector<Axiom>& axioms) const {
    Ontology onto;
    for (const auto& c : concepts_) onto.declare_concept(c);
    for (const auto& r : roles_) onto.declare_role(r);
    for (const auto& i : individuals_) onto.declare_individual(i);
    for (const auto& a : axioms) onto.add_axiom(a);
    return onto;
  }

  GenParams p_;
  Draw draw_;
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
  std::vector<Axiom> axioms_;
};

}  // namespace

Ontology random_ontology(const GenParams& params) {
  if (params.max_concepts == 0) throw Error("max_concepts must be positive");
  if (params.max_individuals == 0) throw Error("max_individuals must be positive");
  if (!(params.restriction_probability >= 0.0 && params.restriction_probability <= 1.0)) {
    throw Error("restriction_probability must lie in [0, 1]");
  }
  return Generator(params).run();
}

}  // namespace dlverb
