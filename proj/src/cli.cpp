#include "dlverb/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlverb/corpus.hpp"
#include "dlverb/lint.hpp"
#include "dlverb/parser.hpp"

namespace dlverb {

namespace {

using Json = nlohmann::ordered_json;

struct Loaded {
  Ontology ontology;
  OntologyIndex index;
  std::vector<DescriptionSet> sets;
};

Loaded load(const std::filesystem::path& input) {
  Ontology onto = parse_ontology(read_text_file(input));
  OntologyIndex ix = OntologyIndex::build(onto);
  auto sets = describe_all(ix, onto);
  return {std::move(onto), std::move(ix), std::move(sets)};
}

Json constraint_list(const DescriptionSet& ds) {
  Json list = Json::array();
  for (const auto& c : ds) list.push_back(to_string(c));
  return list;
}

Json steps_json(const ReductionTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json added = Json::array();
    Json removed = Json::array();
    for (const auto& c : s.added) added.push_back(to_string(c));
    for (const auto& c : s.removed) removed.push_back(to_string(c));
    steps.push_back({{"rule", std::string(to_string(s.rule))},
                     {"pass", s.pass},
                     {"matched", {to_string(s.matched.first), to_string(s.matched.second)}},
                     {"added", added},
                     {"removed", removed}});
  }
  return steps;
}

std::string step_text(std::size_t n, const ReductionStep& s) {
  std::string line = std::to_string(n) + ". Rule-" + std::string(to_string(s.rule)) + " on (" +
                     to_string(s.matched.first) + ", " + to_string(s.matched.second) + ")";
  for (const auto& c : s.added) line += " +" + to_string(c);
  for (const auto& c : s.removed) line += " -" + to_string(c);
  if (s.pass > 1) line += " [pass " + std::to_string(s.pass) + "]";
  return line;
}

const char* mode_name(RenderMode mode) {
  return mode == RenderMode::Reduced ? "reduced" : "traditional";
}

int cmd_verbalize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Loaded in = load(cfg.input);
  const Lexicon lexicon = cfg.lexicon ? Lexicon::load(*cfg.lexicon) : Lexicon::builtin();
  Verbalizer verbalizer(in.ontology, lexicon, {cfg.mode, cfg.grouping, ArticleStyle::AAn});

  std::vector<DescriptionSet> shown;
  std::map<std::string, ReductionTrace> traces;
  for (const auto& ds : in.sets) {
    if (ds.empty()) {
      err << "note: nothing to say about " << ds.subject() << '\n';
      continue;
    }
    if (cfg.mode == RenderMode::Reduced) {
      Reduction r = reduce(in.index, ds);
      traces.emplace(ds.subject(), std::move(r.trace));
      shown.push_back(std::move(r.result));
    } else {
      shown.push_back(ds);
    }
  }

  Json records = Json::array();
  for (const auto& g : verbalizer.group_and_render(shown)) {
    if (cfg.format == OutputFormat::Text) {
      out << g.sentence << '\n';
      if (cfg.trace && cfg.mode == RenderMode::Reduced) {
        for (const auto& who : g.individuals) {
          const auto& trace = traces.at(who);
          out << "  trace " << who << ":\n";
          for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            out << "    " << step_text(i + 1, trace.steps[i]) << '\n';
          }
        }
      }
      continue;
    }
    Json rec = {{"subjects", g.individuals},
                {"mode", mode_name(cfg.mode)},
                {"constraints", constraint_list(g.set)},
                {"sentence", g.sentence}};
    if (cfg.trace && cfg.mode == RenderMode::Reduced) {
      Json per = Json::array();
      for (const auto& who : g.individuals) {
        per.push_back({{"subject", who}, {"steps", steps_json(traces.at(who))}});
      }
      rec["trace"] = per;
    }
    records.push_back(rec);
  }
  if (cfg.format == OutputFormat::Structured) out << records.dump(2) << '\n';
  return kExitOk;
}

int cmd_describe(const RunConfig& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  Json records = Json::array();
  for (const auto& ds : in.sets) {
    if (cfg.format == OutputFormat::Text) {
      out << ds.subject() << ": " << to_string(ds) << '\n';
    } else {
      records.push_back({{"subjects", {ds.subject()}}, {"constraints", constraint_list(ds)}});
    }
  }
  if (cfg.format == OutputFormat::Structured && !in.sets.empty()) out << records.dump(2) << '\n';
  return kExitOk;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  Json records = Json::array();
  for (const auto& ds : in.sets) {
    Reduction r = reduce(in.index, ds);
    if (cfg.format == OutputFormat::Structured) {
      records.push_back({{"subjects", {ds.subject()}},
                         {"mode", "reduced"},
                         {"constraints", constraint_list(r.result)},
                         {"trace", steps_json(r.trace)}});
      continue;
    }
    out << ds.subject() << '\n';
    out << "  D  = " << to_string(ds) << '\n';
    for (std::size_t i = 0; i < r.trace.steps.size(); ++i) {
      out << "  " << step_text(i + 1, r.trace.steps[i]) << '\n';
    }
    out << "  RD = " << to_string(r.result) << '\n';
  }
  if (cfg.format == OutputFormat::Structured && !in.sets.empty()) out << records.dump(2) << '\n';
  return kExitOk;
}

int cmd_lint(const RunConfig& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  const auto violations = check_simplicity(in.index, in.ontology);
  std::vector<DisjointnessWarning> warnings;
  for (const auto& ds : in.sets) {
    auto w = lint_inconsistency(in.index, ds);
    warnings.insert(warnings.end(), w.begin(), w.end());
  }
  if (cfg.format == OutputFormat::Text) {
    for (const auto& v : violations) out << "error: " << v.message << '\n';
    for (const auto& w : warnings) out << "warning: " << w.message << '\n';
  } else {
    Json doc = {{"simplicity", Json::array()}, {"disjointness", Json::array()}};
    for (const auto& v : violations) {
      doc["simplicity"].push_back({{"axiom", v.axiom + 1},
                                   {"role", to_string(v.restricted_role)},
                                   {"transitive_subrole", to_string(v.transitive_subrole)},
                                   {"message", v.message}});
    }
    for (const auto& w : warnings) {
      doc["disjointness"].push_back({{"subject", w.subject},
                                     {"members", {w.first.id, w.second.id}},
                                     {"disjoint", {w.disjoint_first.id, w.disjoint_second.id}},
                                     {"message", w.message}});
    }
    out << doc.dump(2) << '\n';
  }
  return violations.empty() && warnings.empty() ? kExitOk : kExitFindings;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Loaded in = load(cfg.input);
  bool clean = true;
  Json records = Json::array();
  for (const auto& ds : in.sets) {
    Reduction r = reduce(in.index, ds);
    VerificationReport rep = verify_reduction(in.index, ds, r.result, r.trace);
    clean = clean && rep.ok();
    if (cfg.format == OutputFormat::Text) {
      out << rep.subject << ": " << rep.dropped_checked << " dropped, " << rep.justified_by_entailment
          << " entailed, " << rep.justified_by_trace << " by trace, " << rep.failures.size()
          << " failures\n";
      for (const auto& [c, why] : rep.failures) out << "  " << to_string(c) << ": " << why << '\n';
      continue;
    }
    Json failures = Json::array();
    for (const auto& [c, why] : rep.failures) failures.push_back({{"constraint", to_string(c)}, {"reason", why}});
    records.push_back({{"subject", rep.subject},
                       {"dropped_checked", rep.dropped_checked},
                       {"justified_by_entailment", rep.justified_by_entailment},
                       {"justified_by_trace", rep.justified_by_trace},
                       {"failures", failures}});
  }
  if (cfg.format == OutputFormat::Structured) out << records.dump(2) << '\n';
  return clean ? kExitOk : kExitFindings;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Verbalize: return cmd_verbalize(config, out, err);
      case Command::Describe: return cmd_describe(config, out);
      case Command::Trace: return cmd_trace(config, out);
      case Command::Lint: return cmd_lint(config, out);
      case Command::Verify: return cmd_verify(config, out);
      case Command::Generate: out << print_ontology(random_ontology(config.gen)); return kExitOk;
    }
  } catch (const ParseError& e) {
    err << config.input.string() << ':' << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Describe ontology individuals in controlled English", "dlverb"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string mode = "reduced";
  std::string format = "text";
  std::string lexicon;

  app.add_option("--mode", mode, "reduced or traditional")
      ->check(CLI::IsMember({"reduced", "traditional"}));
  app.add_flag("--group,!--no-group", cfg.grouping, "merge individuals with equal sets");
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json", "structured"}));
  app.add_option("--lexicon", lexicon, "verb list replacing the built-in one");
  app.add_flag("--trace", cfg.trace, "include reduction steps");

  const std::vector<std::pair<std::string, Command>> file_commands = {
      {"verbalize", Command::Verbalize}, {"describe", Command::Describe}, {"trace", Command::Trace},
      {"lint", Command::Lint},           {"verify", Command::Verify},
  };
  const std::map<std::string, std::string> help = {
      {"verbalize", "one sentence per individual or group"},
      {"describe", "list D(x) for every individual"},
      {"trace", "show the rule applications for every individual"},
      {"lint", "simplicity violations and disjointness warnings"},
      {"verify", "check every reduction against the oracle"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, command] : file_commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", cfg.input, "ontology file")->required();
    subs.emplace_back(sub, command);
  }
  CLI::App* gen = app.add_subcommand("generate", "print a random ontology");
  gen->add_option("--seed", cfg.gen.seed);
  gen->add_option("--max-concepts", cfg.gen.max_concepts);
  gen->add_option("--max-roles", cfg.gen.max_roles);
  gen->add_option("--max-individuals", cfg.gen.max_individuals);
  gen->add_option("--max-axioms", cfg.gen.max_axioms);
  gen->add_option("--restriction-probability", cfg.gen.restriction_probability)
      ->check(CLI::Range(0.0, 1.0));
  subs.emplace_back(gen, Command::Generate);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.mode = mode == "traditional" ? RenderMode::Traditional : RenderMode::Reduced;
  cfg.format = format == "text" ? OutputFormat::Text : OutputFormat::Structured;
  if (!lexicon.empty()) cfg.lexicon = lexicon;
  return run(cfg, out, err);
}

}  // namespace dlverb
