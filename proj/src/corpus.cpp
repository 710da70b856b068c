#include "dlverb/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dlverb {

std::filesystem::path default_corpus_dir() { return DLVERB_CORPUS_DIR; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::vector<Constraint> constraints(const nlohmann::json& list) {
  std::vector<Constraint> out;
  for (const auto& item : list) out.push_back(parse_constraint(item.get<std::string>()));
  return out;
}

}  // namespace

std::vector<GoldenCase> load_golden(const std::filesystem::path& dir) {
  const auto file = dir / "expected.json";
  std::vector<GoldenCase> cases;
  try {
    const auto doc = nlohmann::json::parse(read_text_file(file));
    for (const auto& entry : doc.at("cases")) {
      GoldenCase g;
      g.ontology = std::filesystem::absolute(dir / entry.at("ontology").get<std::string>());
      if (!std::filesystem::exists(g.ontology)) throw Error("missing ontology " + g.ontology.string());
      g.individual = entry.at("individual").get<std::string>();
      g.description_set = constraints(entry.at("description_set"));
      g.reduced_set = constraints(entry.at("reduced_set"));
      g.rules = entry.at("rules").get<std::vector<std::string>>();
      g.sentence = entry.at("sentence").get<std::string>();
      cases.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(file.string() + ": " + e.what());
  }
  return cases;
}

std::string normalize_sentence(std::string_view sentence) {
  std::string out;
  for (char ch : sentence) {
    auto u = static_cast<unsigned char>(ch);
    if (!std::isspace(u)) out.push_back(static_cast<char>(std::tolower(u)));
  }
  return out;
}

}  // namespace dlverb
