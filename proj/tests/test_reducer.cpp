#include <doctest.h>

#include <algorithm>
#include <random>

#include "dlverb/oracle.hpp"
#include "dlverb/reducer.hpp"
#include "support.hpp"

using namespace dlverb;
using test::C;
using test::S;

namespace {

const Ontology& small() {
  static const Ontology o = parse_ontology(
      "concept A\nconcept B\nconcept E\nrole r\nrole s\nrole q\n"
      "A SUBCLASSOF B\nE EQUIV B\nr SUBROLEOF s\nq SUBROLEOF r\nr SUBROLEOF q\n");
  return o;
}

const OntologyIndex& small_index() {
  static const OntologyIndex ix = OntologyIndex::build(small());
  return ix;
}

void check_rule(RuleId rule, const char* first, const char* second,
                std::vector<const char*> productions, std::vector<const char*> targets) {
  CAPTURE(to_string(rule));
  CAPTURE(first);
  CAPTURE(second);
  auto effect = match_rule(rule, C(first), C(second), small_index());
  REQUIRE(effect.has_value());
  std::set<Constraint> p(effect->productions.begin(), effect->productions.end());
  std::set<Constraint> t(effect->targets.begin(), effect->targets.end());
  std::set<Constraint> ep, et;
  for (auto x : productions) ep.insert(C(x));
  for (auto x : targets) et.insert(C(x));
  CHECK(p == ep);
  CHECK(t == et);
}

void check_no_rule(RuleId rule, const char* first, const char* second) {
  CAPTURE(to_string(rule));
  CAPTURE(first);
  CAPTURE(second);
  CHECK_FALSE(match_rule(rule, C(first), C(second), small_index()).has_value());
}

std::vector<std::string> rule_names(const ReductionTrace& trace) {
  std::vector<std::string> out;
  for (auto r : trace.rules()) out.emplace_back(to_string(r));
  return out;
}

}  // namespace

TEST_CASE("rule ids") {
  CHECK(to_string(RuleId::R4b) == "4b");
  CHECK(parse_rule_id("Rule-6d") == RuleId::R6d);
  CHECK(parse_rule_id("7a") == RuleId::R7a);
  CHECK_FALSE(parse_rule_id("8a").has_value());
  CHECK(rule_set_of(RuleId::R1a) == 1);
  CHECK(rule_set_of(RuleId::R5d) == 5);
  CHECK(kAllRules.size() == 19);
}

TEST_CASE("rule table") {
  check_rule(RuleId::R1a, "A", "B", {}, {"B"});
  check_no_rule(RuleId::R1a, "B", "A");
  check_rule(RuleId::R2a, "some r.A", "some s.B", {}, {"some s.B"});
  check_no_rule(RuleId::R2a, "some s.A", "some r.B");
  check_rule(RuleId::R3a, "only s.A", "only r.B", {}, {"only r.B"});
  check_no_rule(RuleId::R3a, "only r.A", "only s.B");
  check_rule(RuleId::R3b, "only r.B", "only q.A", {"only r.A"}, {"only q.A"});
  check_rule(RuleId::R3c, "only r.B", "only s.A", {"only r.A", "only s.A"}, {});
  check_no_rule(RuleId::R3c, "only r.B", "only q.A");
  check_rule(RuleId::R4a, "some r.B", "only q.E", {"nonvacuous r.B"}, {"some r.B", "only q.E"});
  check_no_rule(RuleId::R4a, "some r.A", "only q.B");
  check_rule(RuleId::R4b, "only r.B", "some s.A", {"nonvacuous r.B", "some s.A"}, {"only r.B"});
  check_no_rule(RuleId::R4b, "only r.B", "some s.E");
  check_rule(RuleId::R4c, "only s.A", "some r.B", {"nonvacuous s.A", "nonvacuous r.A"},
             {"only s.A", "only r.B"});
  check_rule(RuleId::R4d, "only r.A", "some s.B", {"only r.A", "some s.B"}, {});
  check_rule(RuleId::R5a, "some s.B", "min 2 r.A", {}, {"some s.B"});
  check_no_rule(RuleId::R5a, "some r.A", "min 2 s.B");
  check_rule(RuleId::R5b, "some r.A", "max 1 s.B", {"exactlyone r.A"}, {"some r.A", "max 1 s.B"});
  check_no_rule(RuleId::R5b, "some r.A", "max 2 s.B");
  check_rule(RuleId::R5c, "min 3 r.A", "min 2 s.B", {}, {"min 2 s.B"});
  check_no_rule(RuleId::R5c, "min 2 r.A", "min 3 s.B");
  check_rule(RuleId::R6a, "some r.A", "exactlyone s.B", {"exactlyone r.A"}, {"some r.A"});
  check_rule(RuleId::R6b, "nonvacuous r.A", "exactlyone s.B", {"exactlyone r.A"}, {"nonvacuous r.A"});
  check_rule(RuleId::R6c, "some r.B", "exactlyone s.A", {"exactlyone r.A"}, {"some r.B"});
  check_rule(RuleId::R6d, "nonvacuous r.B", "exactlyone s.A", {"exactlyone r.A"}, {"nonvacuous r.B"});
  check_rule(RuleId::R7a, "exactlyone r.A", "exactlyone s.B", {"exactlyone r.A", "exactlyone s.A"},
             {"exactlyone s.B"});
  check_rule(RuleId::R7b, "exactlyone r.B", "exactlyone s.A", {"exactlyone r.A", "exactlyone s.A"},
             {"exactlyone r.B"});
  check_no_rule(RuleId::R1a, "A", "A");
}

TEST_CASE("harrypotter reduces along the published narration") {
  Reduction r = reduce(test::hp_index(), test::hp_set("harrypotter"));
  CHECK(r.result.members() == S({"HogwartsStudent", "Wizard", "HalfBlood", "Gryffindor", "exactlyone hasPet.Owl"}));
  CHECK(rule_names(r.trace) == std::vector<std::string>{"1a", "1a", "2a", "4b", "5b", "6d"});
  const auto& steps = r.trace.steps;
  REQUIRE(steps.size() == 6);
  CHECK(steps[2].removed == S({"some hasPet.Pet"}));
  CHECK(steps[3].added == S({"nonvacuous hasPet.Creature"}));
  CHECK(steps[3].removed == S({"only hasPet.Creature"}));
  CHECK(steps[4].added == S({"exactlyone hasPet.Owl"}));
  CHECK(steps[4].removed == S({"some hasPet.Owl", "max 1 hasPet.Creature"}));
  CHECK(steps[5].removed == S({"nonvacuous hasPet.Creature"}));
  CHECK(std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.pass == 1; }));
  CHECK(r.trace.final_set == r.result);
}

TEST_CASE("hermionegranger and hedwig") {
  Reduction h = reduce(test::hp_index(), test::hp_set("hermionegranger"));
  CHECK(h.result.members() == S({"HogwartsStudent", "Muggle", "Gryffindor", "exactlyone hasPet.Cat"}));
  Reduction w = reduce(test::hp_index(), test::hp_set("hedwig"));
  CHECK(w.result.members() == S({"Owl", "nonvacuous isPetOf.HogwartsStudent"}));
  CHECK(rule_names(w.trace) == std::vector<std::string>{"1a", "1a", "4a"});
}

TEST_CASE("equivalent names keep exactly one representative") {
  Ontology o = parse_ontology("concept A\nconcept B\nindividual x\nA EQUIV B\nx : A\n");
  auto ix = OntologyIndex::build(o);
  auto ds = description_set(ix, o, "x");
  REQUIRE(ds.size() == 2);
  Reduction r = reduce(ix, ds);
  CHECK(r.result.size() == 1);
  CHECK(r.trace.steps.size() == 1);
}

TEST_CASE("an empty set reduces to itself") {
  Reduction r = reduce(test::hp_index(), DescriptionSet("nobody"));
  CHECK(r.result.empty());
  CHECK(r.trace.steps.empty());
}

TEST_CASE("replay reproduces the result and rejects tampering") {
  const auto& ix = test::hp_index();
  Reduction r = reduce(ix, test::hp_set("harrypotter"));
  CHECK(replay(ix, r.trace) == r.result);

  SUBCASE("wrong rule") {
    ReductionTrace t = r.trace;
    t.steps[2].rule = RuleId::R3a;
    CHECK_THROWS_AS(replay(ix, t), ReplayError);
  }
  SUBCASE("wrong recorded effect") {
    ReductionTrace t = r.trace;
    t.steps[0].removed.clear();
    CHECK_THROWS_AS(replay(ix, t), ReplayError);
  }
  SUBCASE("steps out of rule-set order") {
    ReductionTrace t = r.trace;
    std::swap(t.steps[2], t.steps[3]);
    try {
      replay(ix, t);
      FAIL("no error");
    } catch (const ReplayError& e) {
      CHECK(e.step() == 3);
    }
  }
  SUBCASE("matched constraint already gone") {
    ReductionTrace t = r.trace;
    t.steps.push_back(t.steps[0]);
    t.steps.back().rule = RuleId::R7a;
    CHECK_THROWS_AS(replay(ix, t), ReplayError);
  }
}

TEST_CASE("no rule applies to a reduced HP set") {
  for (const char* who : {"harrypotter", "hermionegranger", "hedwig"}) {
    Reduction r = reduce(test::hp_index(), test::hp_set(who));
    CHECK_FALSE(find_applicable_rule(test::hp_index(), r.result).has_value());
  }
  CHECK(find_applicable_rule(test::hp_index(), test::hp_set("hedwig")).has_value());
}

TEST_CASE("reduction properties on random ontologies") {
  std::mt19937_64 shuffle_rng(99);
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    CAPTURE(seed);
    Ontology o = random_ontology({.seed = seed});
    auto ix = OntologyIndex::build(o);
    for (const auto& ds : describe_all(ix, o)) {
      CAPTURE(to_string(ds));
      Reduction r = reduce(ix, ds);
      CHECK(replay(ix, r.trace) == r.result);
      Reduction again = reduce(ix, r.result);
      CHECK(again.result == r.result);
      CHECK(again.trace.steps.empty());
      CHECK_FALSE(find_applicable_rule(ix, r.result).has_value());

      std::vector<Constraint> members(ds.begin(), ds.end());
      std::shuffle(members.begin(), members.end(), shuffle_rng);
      DescriptionSet shuffled(ds.subject());
      for (const auto& c : members) shuffled.insert(c);
      Reduction p = reduce(ix, shuffled);
      CHECK(p.result == r.result);
      auto a = r.trace.rules(), b = p.trace.rules();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}
