#include <doctest.h>

#include <functional>
#include <map>

#include "dlverb/index.hpp"
#include "dlverb/oracle.hpp"
#include "support.hpp"

using namespace dlverb;

namespace {

// Naive reachability over the contribution edges, written without the
// index's matrix machinery.
std::map<std::string, std::set<std::string>> reachable_supers(const Ontology& o) {
  std::map<std::string, std::set<std::string>> edges;
  auto named_conjuncts = [](const ConceptExpr& e) {
    std::vector<std::string> out;
    ConceptExpr n = normalize(e);
    if (n.kind() == ConceptExpr::Kind::Named) out.push_back(n.name().id);
    if (n.kind() == ConceptExpr::Kind::And) {
      for (const auto& op : n.operands()) {
        if (op.kind() == ConceptExpr::Kind::Named) out.push_back(op.name().id);
      }
    }
    return out;
  };
  for (const auto& axiom : o.axioms()) {
    if (const auto* s = std::get_if<SubConcept>(&axiom)) {
      if (s->sub.kind() == ConceptExpr::Kind::Named) {
        for (const auto& d : named_conjuncts(s->super)) edges[s->sub.name().id].insert(d);
      }
    } else if (const auto* e = std::get_if<EquivConcept>(&axiom)) {
      if (e->left.kind() == ConceptExpr::Kind::Named) {
        for (const auto& d : named_conjuncts(e->right)) edges[e->left.name().id].insert(d);
      }
      if (e->right.kind() == ConceptExpr::Kind::Named) {
        for (const auto& d : named_conjuncts(e->left)) edges[e->right.name().id].insert(d);
      }
    }
  }
  std::map<std::string, std::set<std::string>> out;
  for (const auto& c : o.concepts()) {
    std::set<std::string>& seen = out[c.id];
    std::function<void(const std::string&)> visit = [&](const std::string& n) {
      if (!seen.insert(n).second) return;
      for (const auto& m : edges[n]) visit(m);
    };
    visit(c.id);
  }
  return out;
}

}  // namespace

TEST_CASE("HP concept hierarchy") {
  const auto& ix = test::hp_index();
  CHECK(ix.is_subsumed({"HogwartsStudent"}, {"Student"}));
  CHECK(ix.is_subsumed({"HogwartsStudent"}, {"Human"}));
  CHECK(ix.is_subsumed({"Owl"}, {"Creature"}));
  CHECK(ix.is_subsumed({"Cat"}, {"Pet"}));
  CHECK(ix.is_subsumed({"Muggle"}, {"Human"}));
  CHECK_FALSE(ix.is_subsumed({"Human"}, {"Student"}));
  CHECK_FALSE(ix.is_subsumed({"HogwartsStudent"}, {"Gryffindor"}));
  CHECK_FALSE(ix.is_subsumed({"Owl"}, {"Cat"}));
  CHECK(ix.is_strictly_subsumed({"Owl"}, {"Pet"}));
  CHECK_FALSE(ix.is_strictly_subsumed({"Pet"}, {"Pet"}));
  CHECK(ix.is_equivalent({"Pet"}, {"Pet"}));
  CHECK(ix.supers({"Owl"}) == std::vector<ConceptName>{{"Creature"}, {"Pet"}, {"Owl"}});
  CHECK(ix.subs({"Pet"}) == std::vector<ConceptName>{{"Pet"}, {"Owl"}, {"Cat"}});
}

TEST_CASE("HP definitions, disjointness and numerals") {
  const auto& ix = test::hp_index();
  using test::C;
  const auto& def = ix.definition({"HogwartsStudent"});
  CHECK(std::set<Constraint>(def.begin(), def.end()) ==
        test::S({"only hasPet.Creature", "some hasPet.Pet", "max 1 hasPet.Creature"}));
  CHECK(ix.definition({"Pet"}).size() == 2);
  CHECK(ix.definition({"Owl"}).empty());
  CHECK(ix.disjoint_pairs().size() == 4);
  CHECK(ix.disjoint_pairs().contains({{"Muggle"}, {"Wizard"}}));
  CHECK(ix.disjoint_pairs().contains({{"Pet"}, {"Student"}}));
  CHECK(ix.numerals() == std::set<unsigned>{1});
}

TEST_CASE("Thing and Nothing") {
  const auto& ix = test::hp_index();
  CHECK(ix.is_subsumed({"Owl"}, ConceptName::top()));
  CHECK(ix.is_subsumed(ConceptName::bottom(), {"Owl"}));
  CHECK_FALSE(ix.is_subsumed(ConceptName::top(), {"Owl"}));
  CHECK(ix.supers(ConceptName::top()) == std::vector<ConceptName>{ConceptName::top()});
  CHECK(ix.supers(ConceptName::bottom()).size() == 13);
}

TEST_CASE("undeclared names throw") {
  const auto& ix = test::hp_index();
  CHECK_THROWS_AS((void)ix.is_subsumed({"Dragon"}, {"Pet"}), Error);
  CHECK_THROWS_AS((void)ix.is_subrole(RoleExpr::named("rides"), RoleExpr::named("hasPet")), Error);
  CHECK_FALSE(ix.has_concept({"Dragon"}));
  CHECK(ix.has_role(RoleExpr::named("hasPet").inverse()));
}

TEST_CASE("role hierarchy with inverses and transitivity") {
  Ontology o = parse_ontology(
      "role r\nrole s\nrole t\nrole u\n"
      "r SUBROLEOF s\ns SUBROLEOF inv(t)\nt SUBROLEOF u\nu SUBROLEOF t\ntransitive t\n");
  auto ix = OntologyIndex::build(o);
  RoleExpr r = RoleExpr::named("r"), s = RoleExpr::named("s"), t = RoleExpr::named("t"),
           u = RoleExpr::named("u");
  CHECK(ix.is_subrole(r, s));
  CHECK(ix.is_subrole(r, t.inverse()));
  CHECK(ix.is_subrole(r.inverse(), t));
  CHECK_FALSE(ix.is_subrole(r, t));
  CHECK(ix.is_strict_subrole(r, s));
  CHECK(ix.is_equiv_role(t, u));
  CHECK(ix.is_equiv_role(t.inverse(), u.inverse()));
  CHECK(ix.is_transitive(t));
  CHECK(ix.is_transitive(t.inverse()));
  CHECK_FALSE(ix.is_transitive(u));
  CHECK(ix.role_nodes().size() == 8);
  auto classes = ix.role_equivalence_classes();
  CHECK(classes.size() == 6);
}

TEST_CASE("close_transitively") {
  std::vector<std::vector<bool>> rel = {{false, true, false}, {false, false, true}, {false, false, false}};
  close_transitively(rel);
  CHECK(rel[0][2]);
  CHECK(rel[1][1]);
  CHECK_FALSE(rel[2][0]);
}

TEST_CASE("concept closure matches naive reachability on random ontologies") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    Ontology o = random_ontology({.seed = seed, .max_concepts = 8, .max_roles = 3, .max_individuals = 3});
    auto ix = OntologyIndex::build(o);
    auto expected = reachable_supers(o);
    for (const auto& a : o.concepts()) {
      for (const auto& b : o.concepts()) {
        CHECK(ix.is_subsumed(a, b) == expected[a.id].contains(b.id));
      }
    }
  }
}

TEST_CASE("role closure respects the inverse mirror on random ontologies") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    CAPTURE(seed);
    auto ix = OntologyIndex::build(random_ontology({.seed = seed}));
    for (const auto& r : ix.role_nodes()) {
      CHECK(ix.is_subrole(r, r));
      for (const auto& s : ix.role_nodes()) {
        CHECK(ix.is_subrole(r, s) == ix.is_subrole(r.inverse(), s.inverse()));
      }
    }
  }
}

TEST_CASE("equivalence classes partition the concepts") {
  Ontology o = parse_ontology("concept A\nconcept B\nconcept C\nA EQUIV B\nC SUBCLASSOF A\n");
  auto ix = OntologyIndex::build(o);
  auto classes = ix.concept_equivalence_classes();
  REQUIRE(classes.size() == 2);
  std::size_t total = 0;
  for (const auto& cls : classes) total += cls.size();
  CHECK(total == 3);
  CHECK(ix.is_equivalent({"A"}, {"B"}));
  CHECK(ix.is_strictly_subsumed({"C"}, {"B"}));
}
