#include <doctest.h>

#include "dlverb/lint.hpp"
#include "dlverb/oracle.hpp"
#include "support.hpp"

using namespace dlverb;
using test::C;
using test::S;

TEST_CASE("exactly-one expands to its parts") {
  const auto& ix = test::hp_index();
  auto base = S({"exactlyone hasPet.Owl"});
  CHECK(entails_constraint(ix, base, C("some hasPet.Pet")));
  CHECK(entails_constraint(ix, base, C("max 1 hasPet.Creature")));
  CHECK(entails_constraint(ix, base, C("max 1 hasPet.Cat")));
  CHECK(entails_constraint(ix, base, C("only hasPet.Creature")));
  CHECK(entails_constraint(ix, base, C("exactlyone hasPet.Owl")));
  CHECK(entails_constraint(ix, base, C("nonvacuous hasPet.Pet")));
  CHECK_FALSE(entails_constraint(ix, base, C("some hasPet.Cat")));
  CHECK_FALSE(entails_constraint(ix, base, C("some isPetOf.Owl")));
}

TEST_CASE("nonvacuous expands to some and only") {
  const auto& ix = test::hp_index();
  auto base = S({"nonvacuous isPetOf.HogwartsStudent"});
  CHECK(entails_constraint(ix, base, C("some isPetOf.Student")));
  CHECK(entails_constraint(ix, base, C("only isPetOf.Human")));
  CHECK_FALSE(entails_constraint(ix, base, C("exactlyone isPetOf.HogwartsStudent")));
}

TEST_CASE("named members bring supers and definitions") {
  const auto& ix = test::hp_index();
  auto base = S({"HogwartsStudent"});
  CHECK(entails_constraint(ix, base, C("Human")));
  CHECK(entails_constraint(ix, base, C("max 1 hasPet.Owl")));
  CHECK(entails_constraint(ix, base, C("some hasPet.Creature")));
  CHECK_FALSE(entails_constraint(ix, base, C("Gryffindor")));
}

TEST_CASE("empty base entails nothing") {
  CHECK_FALSE(entails_constraint(test::hp_index(), {}, C("Owl")));
  CHECK_FALSE(entails_constraint(test::hp_index(), {}, C("some hasPet.Owl")));
}

TEST_CASE("numerals move in both directions") {
  Ontology o = parse_ontology("concept A\nrole r\nA SUBCLASSOF min 3 r.A and max 5 r.A\n");
  auto ix = OntologyIndex::build(o);
  CHECK(entails_constraint(ix, S({"min 3 r.A"}), C("some r.A")));
  CHECK(entails_constraint(ix, S({"max 1 r.A"}), C("max 5 r.A")));
  CHECK(entails_constraint(ix, S({"max 1 r.A"}), C("max 3 r.A")));
  CHECK_FALSE(entails_constraint(ix, S({"max 5 r.A"}), C("max 3 r.A")));
}

TEST_CASE("closure is monotone in the base") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CAPTURE(seed);
    Ontology o = random_ontology({.seed = seed});
    auto ix = OntologyIndex::build(o);
    for (const auto& ds : describe_all(ix, o)) {
      if (ds.size() < 2) continue;
      std::set<Constraint> half;
      std::size_t i = 0;
      for (const auto& c : ds) {
        if (i++ % 2 == 0) half.insert(c);
      }
      auto small = entailment_closure(ix, half);
      auto large = entailment_closure(ix, ds.members());
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST_CASE("verify_reduction on HP") {
  const auto& ix = test::hp_index();
  DescriptionSet ds = test::hp_set("harrypotter");
  Reduction r = reduce(ix, ds);
  VerificationReport rep = verify_reduction(ix, ds, r.result, r.trace);
  CHECK(rep.ok());
  CHECK(rep.subject == "harrypotter");
  CHECK(rep.dropped_checked == 6);
  CHECK(rep.dropped_checked == rep.justified_by_entailment + rep.justified_by_trace + rep.failures.size());

  SUBCASE("a tampered result no longer matches the trace") {
    DescriptionSet tampered = r.result;
    tampered.erase(C("Wizard"));
    CHECK_THROWS_AS(verify_reduction(ix, ds, tampered, r.trace), Error);
  }
  SUBCASE("trace for another set") {
    CHECK_THROWS_AS(verify_reduction(ix, test::hp_set("hedwig"), r.result, r.trace), Error);
  }
  SUBCASE("nothing dropped") {
    ReductionTrace empty{ds, ds, {}};
    VerificationReport none = verify_reduction(ix, ds, ds, empty);
    CHECK(none.dropped_checked == 0);
    CHECK(none.ok());
  }
}

TEST_CASE("generator parameters") {
  CHECK_THROWS_AS(random_ontology({.max_concepts = 0}), Error);
  CHECK_THROWS_AS(random_ontology({.max_individuals = 0}), Error);
  CHECK_THROWS_AS(random_ontology({.restriction_probability = 1.5}), Error);
  CHECK_NOTHROW(random_ontology({.max_roles = 0}));
}

TEST_CASE("generator is deterministic and respects bounds") {
  GenParams p{.seed = 1};
  CHECK(print_ontology(random_ontology(p)) == print_ontology(random_ontology(p)));
  CHECK(print_ontology(random_ontology({.seed = 1})) != print_ontology(random_ontology({.seed = 2})));
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    CAPTURE(seed);
    GenParams q{.seed = seed, .max_concepts = 6, .max_roles = 2, .max_individuals = 4, .max_axioms = 25};
    Ontology o = random_ontology(q);
    CHECK(o.concepts().size() <= 6);
    CHECK(o.concepts().size() >= 1);
    CHECK(o.roles().size() <= 2);
    CHECK(o.individuals().size() <= 4);
    CHECK(o.axioms().size() <= 25);
    CHECK(check_simplicity(OntologyIndex::build(o), o).empty());
  }
}

TEST_CASE("named subsumptions in generated ontologies point downwards") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Ontology o = random_ontology({.seed = seed});
    for (const auto& axiom : o.axioms()) {
      const auto* s = std::get_if<SubConcept>(&axiom);
      if (s == nullptr || s->super.kind() != ConceptExpr::Kind::Named) continue;
      CHECK(o.declaration_rank(s->sub.name().id) > o.declaration_rank(s->super.name().id));
    }
  }
}

TEST_CASE("verify_reduction finds no failures on random ontologies") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    Ontology o = random_ontology({.seed = seed});
    auto ix = OntologyIndex::build(o);
    for (const auto& ds : describe_all(ix, o)) {
      Reduction r = reduce(ix, ds);
      CHECK(verify_reduction(ix, ds, r.result, r.trace).ok());
    }
  }
}
