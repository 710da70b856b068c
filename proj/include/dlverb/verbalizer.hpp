// Controlled-English rendering of description-sets.

#ifndef DLVERB_VERBALIZER_HPP
#define DLVERB_VERBALIZER_HPP

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlverb/descriptions.hpp"
#include "dlverb/model.hpp"

namespace dlverb {

/// Known verb forms, one lowercase word per entry.
class Lexicon {
 public:
  /// The lexicon compiled in from data/verbs.txt.
  static const Lexicon& builtin();
  /// One verb per line; blank lines and "#" comments are skipped.
  static Lexicon parse(std::string_view text);
  /// Throws Error if the file cannot be read.
  static Lexicon load(const std::filesystem::path& path);

  /// Copulas and particles never count. Third-person forms also match their
  /// base form and vice versa.
  bool is_verb(std::string_view token) const;
  /// Stored forms; third-person entries also store their base form.
  std::size_t size() const { return verbs_.size(); }

 private:
  std::set<std::string, std::less<>> verbs_;
};

/// Lowercase word tokens; splits on case changes, underscores, hyphens,
/// spaces, punctuation and letter/digit boundaries. "HTMLParser" gives
/// ["html", "parser"].
std::vector<std::string> tokenize_identifier(std::string_view id);

/// "has" -> "having", "owns" -> "owning", "runs" -> "running".
std::string gerund(std::string_view verb);

struct RolePhrase {
  std::string verb;  // gerund, or "related to"
  std::string noun;  // never empty; "thing" when nothing is left
};

RolePhrase split_role_phrase(std::span<const std::string> tokens, const Lexicon& lexicon);

enum class RenderMode { Reduced, Traditional };
enum class ArticleStyle { AAn, None };

struct RenderOptions {
  RenderMode mode = RenderMode::Reduced;
  bool grouping = true;
  ArticleStyle article_style = ArticleStyle::AAn;
};

/// Label if present, else the tokenized identifier joined by spaces.
/// Throws Error for undeclared identifiers.
std::string resolve_label(const Ontology& ontology, std::string_view id);

/// "a" or "an" by the first letter of the display string.
std::string_view indefinite_article(std::string_view noun_phrase);

class Verbalizer {
 public:
  Verbalizer(const Ontology& ontology, const Lexicon& lexicon, RenderOptions options = {});

  /// Template phrase for one restriction, e.g. "having exactly one owl as pet".
  /// Named constraints render as "a owl"/"an owl" (or bare with ArticleStyle::None).
  /// Throws Error for Thing/Nothing fillers.
  std::string render_constraint(const Constraint& c) const;

  /// Members in display order: named concepts first, then restrictions;
  /// within each, by declaration order of role and filler. Reserved-filler
  /// members are skipped.
  std::vector<Constraint> display_order(const DescriptionSet& ds) const;

  /// "<subject>: is <item>, <item> and <item>". Throws Error on an empty set.
  std::string render_sentence(std::string_view subject, const DescriptionSet& ds) const;
  /// Uses the individual's label as subject.
  std::string render_individual(const DescriptionSet& ds) const;

  struct Group {
    std::vector<std::string> individuals;  // input order
    DescriptionSet set;
    std::string sentence;
  };
  /// Individuals with equal sets share one sentence; subjects are joined
  /// with ", " and a final " and ". Groups are ordered by their sets.
  /// Empty sets are skipped. With grouping off, one group per individual
  /// in input order.
  std::vector<Group> group_and_render(std::span<const DescriptionSet> sets) const;

  const RenderOptions& options() const { return options_; }

 private:
  const Ontology& ontology_;
  const Lexicon& lexicon_;
  RenderOptions options_;
};

/// Joins names as "a", "a and b", "a, b and c".
std::string join_with_and(std::span<const std::string> items);

}  // namespace dlverb

#endif  // DLVERB_VERBALIZER_HPP
