#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dlverb/cli.hpp"
#include "support.hpp"

using namespace dlverb;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dlverb");
  std::ostringstream out, err;
  int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verbalize, reduced") {
  auto r = run_cli({"verbalize", test::hp_path()});
  CHECK(r.code == 0);
  CHECK(contains(r.out,
                 "Harry Potter: is a hogwarts student, a wizard, a half blood, a gryffindor and having "
                 "exactly one owl as pet\n"));
  CHECK(contains(r.out, "Hedwig: is an owl"));
}

TEST_CASE("verbalize, traditional") {
  auto r = run_cli({"verbalize", "--mode", "traditional", test::hp_path()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Harry Potter: is a hogwarts student, a student, a human"));
  CHECK(contains(r.out, "having only creature as pet"));
  CHECK(contains(r.out, "having at most 1 creature as pet"));
}

TEST_CASE("verbalize with trace and structured output") {
  auto r = run_cli({"verbalize", test::hp_path(), "--format", "json", "--trace"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 3);
  bool seen = false;
  for (const auto& rec : doc) {
    CHECK(rec["mode"] == "reduced");
    if (rec["subjects"][0] != "harrypotter") continue;
    seen = true;
    CHECK(rec["constraints"].size() == 5);
    REQUIRE(rec["trace"].size() == 1);
    CHECK(rec["trace"][0]["steps"].size() == 6);
    CHECK(rec["trace"][0]["steps"][5]["rule"] == "6d");
  }
  CHECK(seen);

  auto text = run_cli({"verbalize", "--trace", test::hp_path()});
  CHECK(contains(text.out, "Rule-5b on (some hasPet.Owl, max 1 hasPet.Creature)"));
}

TEST_CASE("describe in both formats lists the same constraints") {
  auto text = run_cli({"describe", test::hp_path()});
  auto json = run_cli({"describe", test::hp_path(), "--format", "structured"});
  REQUIRE(text.code == 0);
  REQUIRE(json.code == 0);
  auto doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.size() == 3);
  for (const auto& rec : doc) {
    std::string line = rec["subjects"][0].get<std::string>() + ": {";
    bool first = true;
    for (const auto& c : rec["constraints"]) {
      line += first ? " " : ", ";
      line += c.get<std::string>();
      first = false;
    }
    line += " }\n";
    CHECK(contains(text.out, line));
  }
}

TEST_CASE("describe on an empty ontology prints nothing") {
  auto path = write_temp("dlverb_empty.onto", "");
  auto r = run_cli({"describe", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("trace lists steps in order") {
  auto r = run_cli({"trace", test::hp_path()});
  CHECK(r.code == 0);
  auto first = r.out.find("Rule-1a");
  auto last = r.out.find("Rule-6d");
  CHECK(first < last);
  CHECK(contains(r.out, "RD = { Gryffindor, HalfBlood, HogwartsStudent, Wizard, exactlyone hasPet.Owl }"));
}

TEST_CASE("lint") {
  CHECK(run_cli({"lint", test::hp_path()}).code == 0);
  auto path = write_temp("dlverb_lint.onto",
                         "concept A\nrole r\nrole t\nt SUBROLEOF r\ntransitive t\nA SUBCLASSOF max 1 r.A\n");
  auto r = run_cli({"lint", path.string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "error: axiom 3"));
  auto j = run_cli({"lint", path.string(), "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["simplicity"].size() == 1);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", test::hp_path()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "harrypotter: 6 dropped, 6 entailed, 0 by trace, 0 failures"));
}

TEST_CASE("generate is deterministic") {
  auto a = run_cli({"generate", "--seed", "42"});
  auto b = run_cli({"generate", "--seed", "42", "--max-concepts", "15"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "concept A0\n"));
  CHECK(run_cli({"generate", "--max-concepts", "0"}).code == 2);
}

TEST_CASE("outputs are byte-deterministic") {
  for (const char* cmd : {"verbalize", "describe", "trace"}) {
    CHECK(run_cli({cmd, test::hp_path(), "--format", "json"}).out ==
          run_cli({cmd, test::hp_path(), "--format", "json"}).out);
  }
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"verbalize", "--bogus", test::hp_path()}).code == 2);
  CHECK(run_cli({"verbalize", "--mode", "fancy", test::hp_path()}).code == 2);
  CHECK(run_cli({"verbalize"}).code == 2);
  CHECK(run_cli({"describe", "/nonexistent.onto"}).code == 2);
  auto path = write_temp("dlverb_bad.onto", "concept A\nA SUBCLASSOF B\n");
  auto r = run_cli({"describe", path.string()});
  CHECK(r.code == 2);
  CHECK(contains(r.err, ":2:14: "));
  CHECK(run_cli({"verbalize", "--lexicon", "/nonexistent", test::hp_path()}).code == 2);
}

TEST_CASE("help exits 0") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verbalize"));
}

TEST_CASE("grouping flag") {
  auto path = write_temp("dlverb_group.onto",
                         "concept Owl\nindividual a\nindividual b\na : Owl\nb : Owl\n");
  CHECK(run_cli({"verbalize", path.string()}).out == "a and b: is an owl\n");
  CHECK(run_cli({"verbalize", "--no-group", path.string()}).out == "a: is an owl\nb: is an owl\n");
}
