#ifndef DLVERB_TESTS_SUPPORT_HPP
#define DLVERB_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "dlverb/corpus.hpp"
#include "dlverb/descriptions.hpp"
#include "dlverb/index.hpp"
#include "dlverb/parser.hpp"

namespace dlverb::test {

inline std::string hp_path() { return (default_corpus_dir() / "hp.onto").string(); }

inline const Ontology& hp() {
  static const Ontology onto = parse_ontology(read_text_file(hp_path()));
  return onto;
}

inline const OntologyIndex& hp_index() {
  static const OntologyIndex ix = OntologyIndex::build(hp());
  return ix;
}

inline DescriptionSet hp_set(std::string_view individual) {
  return description_set(hp_index(), hp(), individual);
}

inline Constraint C(std::string_view text) { return parse_constraint(text); }

inline std::set<Constraint> S(std::initializer_list<std::string_view> items) {
  std::set<Constraint> out;
  for (auto item : items) out.insert(parse_constraint(item));
  return out;
}

}  // namespace dlverb::test

#endif
