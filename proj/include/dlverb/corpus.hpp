// Bundled golden cases for regression tests.

#ifndef DLVERB_CORPUS_HPP
#define DLVERB_CORPUS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dlverb/model.hpp"

namespace dlverb {

struct GoldenCase {
  std::filesystem::path ontology;  // absolute
  std::string individual;
  std::vector<Constraint> description_set;
  std::vector<Constraint> reduced_set;
  std::vector<std::string> rules;  // "1a", "4b", ...
  std::string sentence;
};

/// Directory of the bundled corpus in the source tree.
std::filesystem::path default_corpus_dir();

/// Reads <dir>/expected.json. Throws Error when the file is missing or
/// malformed, or a referenced ontology file does not exist.
std::vector<GoldenCase> load_golden(const std::filesystem::path& dir = default_corpus_dir());

/// Lowercase with all whitespace removed, so "Halfblood" and "half blood"
/// compare equal.
std::string normalize_sentence(std::string_view sentence);

/// Whole file as text; throws Error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dlverb

#endif  // DLVERB_CORPUS_HPP
