#include "dlverb/verbalizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace dlverb {

namespace {

constexpr std::string_view kBuiltinVerbs =
#include "verbs_data.inc"
    ;

constexpr std::array<std::string_view, 8> kCopulas = {"is", "are", "am", "was", "were", "be", "been", "of"};

constexpr std::array<std::string_view, 20> kNounStopwords = {
    "is", "are", "am", "was", "were", "be", "been", "of", "a", "an",
    "the", "to", "by", "as", "in", "on", "at", "for", "with", "from",
};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& words, std::string_view w) {
  return std::find(words.begin(), words.end(), w) != words.end();
}

bool is_vowel(char ch) { return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u'; }

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

bool ends_with_any(std::string_view w, std::initializer_list<std::string_view> suffixes) {
  return std::any_of(suffixes.begin(), suffixes.end(), [&](std::string_view s) { return w.ends_with(s); });
}

// Third-person singular to base form.
std::string base_form(std::string_view w) {
  if (w.size() > 3 && w.ends_with("ies")) return std::string(w.substr(0, w.size() - 3)) + "y";
  if (w.size() > 3 && ends_with_any(w, {"sses", "shes", "ches", "xes", "zes", "oes"})) {
    return std::string(w.substr(0, w.size() - 2));
  }
  if (w.size() > 2 && w.ends_with('s') && !ends_with_any(w, {"ss", "us", "is"})) {
    return std::string(w.substr(0, w.size() - 1));
  }
  return std::string(w);
}

const std::map<std::string_view, std::string_view>& irregular_gerunds() {
  static const std::map<std::string_view, std::string_view> table = {
      {"has", "having"}, {"have", "having"}, {"is", "being"},  {"are", "being"},
      {"am", "being"},   {"was", "being"},   {"be", "being"},  {"does", "doing"},
      {"do", "doing"},   {"goes", "going"},  {"go", "going"},  {"dies", "dying"},
      {"die", "dying"},  {"lies", "lying"},  {"lie", "lying"}, {"ties", "tying"},
      {"tie", "tying"},  {"sees", "seeing"}, {"see", "seeing"},
  };
  return table;
}

std::size_t vowel_groups(std::string_view w) {
  std::size_t groups = 0;
  bool in_group = false;
  for (char ch : w) {
    bool v = is_vowel(ch);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

}  // namespace

// ── Lexicon ────────────────────────────────────────────────────────────────

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      word = lower(word);
      lex.verbs_.insert(word);
      if (word.ends_with('s')) lex.verbs_.insert(base_form(word));
    }
  }
  return lex;
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = parse(kBuiltinVerbs);
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read lexicon '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool Lexicon::is_verb(std::string_view token) const {
  if (contains(kCopulas, token)) return false;
  return verbs_.contains(token) || (token.ends_with('s') && verbs_.contains(base_form(token)));
}

// ── Tokens and morphology ──────────────────────────────────────────────────

std::vector<std::string> tokenize_identifier(std::string_view id) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(lower(current));
    current.clear();
  };
  for (std::size_t i = 0; i < id.size(); ++i) {
    const auto ch = static_cast<unsigned char>(id[i]);
    if (!std::isalnum(ch)) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const auto prev = static_cast<unsigned char>(current.back());
      const bool next_lower = i + 1 < id.size() && std::islower(static_cast<unsigned char>(id[i + 1]));
      const bool boundary = (std::islower(prev) && std::isupper(ch)) ||
                            (std::isupper(prev) && std::isupper(ch) && next_lower) ||
                            (std::isalpha(prev) && std::isdigit(ch)) ||
                            (std::isdigit(prev) && std::isalpha(ch));
      if (boundary) flush();
    }
    current.push_back(static_cast<char>(ch));
  }
  flush();
  return tokens;
}

std::string gerund(std::string_view verb) {
  const std::string word = lower(verb);
  const auto& irregular = irregular_gerunds();
  if (auto it = irregular.find(word); it != irregular.end()) return std::string(it->second);
  std::string base = base_form(word);
  if (auto it = irregular.find(base); it != irregular.end()) return std::string(it->second);

  if (base.ends_with("ie")) return base.substr(0, base.size() - 2) + "ying";
  if (ends_with_any(base, {"ee", "ye", "oe"})) return base + "ing";
  if (base.size() > 2 && base.ends_with('e')) return base.substr(0, base.size() - 1) + "ing";
  const std::size_t n = base.size();
  if (n >= 3 && !is_vowel(base[n - 3]) && is_vowel(base[n - 2]) && !is_vowel(base[n - 1]) &&
      std::string_view("wxy").find(base[n - 1]) == std::string_view::npos && vowel_groups(base) == 1) {
    return base + base.back() + "ing";
  }
  return base + "ing";
}

RolePhrase split_role_phrase(std::span<const std::string> tokens, const Lexicon& lexicon) {
  RolePhrase phrase;
  std::size_t verb_at = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (lexicon.is_verb(tokens[i])) {
      verb_at = i;
      break;
    }
  }
  phrase.verb = verb_at < tokens.size() ? gerund(tokens[verb_at]) : "related to";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i == verb_at || contains(kNounStopwords, tokens[i])) continue;
    if (!phrase.noun.empty()) phrase.noun += ' ';
    phrase.noun += tokens[i];
  }
  if (phrase.noun.empty()) phrase.noun = "thing";
  return phrase;
}

// ── Rendering ──────────────────────────────────────────────────────────────

std::string resolve_label(const Ontology& ontology, std::string_view id) {
  if (!ontology.kind_of(id)) throw Error("undeclared identifier '" + std::string(id) + "'");
  if (const std::string* text = ontology.label(id)) return *text;
  std::string out;
  for (const auto& tok : tokenize_identifier(id)) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

std::string_view indefinite_article(std::string_view noun_phrase) {
  if (noun_phrase.empty()) return "a";
  return is_vowel(static_cast<char>(std::tolower(static_cast<unsigned char>(noun_phrase.front())))) ? "an"
                                                                                                  : "a";
}

std::string join_with_and(std::span<const std::string> items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += (i + 1 == items.size()) ? " and " : ", ";
    out += items[i];
  }
  return out;
}

Verbalizer::Verbalizer(const Ontology& ontology, const Lexicon& lexicon, RenderOptions options)
    : ontology_(ontology), lexicon_(lexicon), options_(options) {}

std::string Verbalizer::render_constraint(const Constraint& c) const {
  if (c.has_reserved_filler()) {
    throw Error("cannot verbalize '" + to_string(c) + "': Thing/Nothing fillers are not rendered");
  }
  const std::string filler = resolve_label(ontology_, c.filler().id);
  if (c.is_named()) {
    if (options_.article_style == ArticleStyle::None) return filler;
    return std::string(indefinite_article(filler)) + " " + filler;
  }

  std::string role_text = resolve_label(ontology_, c.role().base);
  std::vector<std::string> tokens;
  if (ontology_.label(c.role().base) != nullptr) {
    tokens = tokenize_identifier(role_text);
  } else {
    tokens = tokenize_identifier(c.role().base);
  }
  RolePhrase phrase = split_role_phrase(tokens, lexicon_);
  // An inverse reads as the base role seen from the other end.
  if (c.role().inverted) phrase.verb = "related to";

  const std::string as = " as " + phrase.noun;
  switch (c.kind()) {
    case ConstraintKind::Exists: return phrase.verb + " at least one " + filler + as;
    case ConstraintKind::Forall: return phrase.verb + " only " + filler + as;
    case ConstraintKind::AtLeast:
      return phrase.verb + " at least " + std::to_string(c.number()) + " " + filler + as;
    case ConstraintKind::AtMost:
      return phrase.verb + " at most " + std::to_string(c.number()) + " " + filler + as;
    case ConstraintKind::NonVacuous:
      return phrase.verb + " at least one " + filler + " and only " + filler + as;
    case ConstraintKind::ExactlyOne: return phrase.verb + " exactly one " + filler + as;
    case ConstraintKind::Named: break;
  }
  return filler;
}

std::vector<Constraint> Verbalizer::display_order(const DescriptionSet& ds) const {
  std::vector<Constraint> items;
  for (const auto& c : ds) {
    if (!c.has_reserved_filler()) items.push_back(c);
  }
  auto rank = [&](const Constraint& c) {
    return std::tuple{!c.is_named(), c.is_named() ? 0 : ontology_.declaration_rank(c.role().base),
                      c.role().inverted, static_cast<int>(c.kind()),
                      ontology_.declaration_rank(c.filler().id), c.number()};
  };
  std::stable_sort(items.begin(), items.end(),
                   [&](const Constraint& a, const Constraint& b) { return rank(a) < rank(b); });
  return items;
}

std::string Verbalizer::render_sentence(std::string_view subject, const DescriptionSet& ds) const {
  std::vector<std::string> phrases;
  for (const auto& c : display_order(ds)) phrases.push_back(render_constraint(c));
  if (phrases.empty()) throw Error("nothing to say about '" + std::string(subject) + "'");
  return std::string(subject) + ": is " + join_with_and(phrases);
}

std::string Verbalizer::render_individual(const DescriptionSet& ds) const {
  return render_sentence(resolve_label(ontology_, ds.subject()), ds);
}

std::vector<Verbalizer::Group> Verbalizer::group_and_render(std::span<const DescriptionSet> sets) const {
  std::vector<Group> groups;
  if (!options_.grouping) {
    for (const auto& ds : sets) {
      if (ds.empty()) continue;
      groups.push_back({{ds.subject()}, ds, render_individual(ds)});
    }
    return groups;
  }
  std::map<std::set<Constraint>, std::vector<const DescriptionSet*>> by_set;
  for (const auto& ds : sets) {
    if (!ds.empty()) by_set[ds.members()].push_back(&ds);
  }
  for (const auto& [members, entries] : by_set) {
    Group g;
    std::vector<std::string> names;
    for (const auto* ds : entries) {
      g.individuals.push_back(ds->subject());
      names.push_back(resolve_label(ontology_, ds->subject()));
    }
    g.set = *entries.front();
    g.sentence = render_sentence(join_with_and(names), g.set);
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace dlverb
