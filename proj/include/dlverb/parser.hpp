// Line-oriented ontology text format.
//
//   concept Cat                         declarations
//   role hasPet
//   individual tom
//   label tom "Tom"                     display label for any identifier
//   Cat SUBCLASSOF Pet and some eats.Mouse
//   Pet EQUIV Animal and some isPetOf.Person
//   hasCat SUBROLEOF hasPet
//   transitive partOf
//   tom : Cat                           concept assertion
//   rel hasPet(jon, tom)                role assertion
//   diff jon tom                        inequality
//   # comment
//
// Concept syntax, loosest to tightest: "or", "and", then the unary forms
// "not C", "(C)", "Thing", "Nothing", "some R.C", "only R.C", "min n R.C",
// "max n R.C" and atomic names. A role is a name or "inv(name)".

#ifndef DLVERB_PARSER_HPP
#define DLVERB_PARSER_HPP

#include <string>
#include <string_view>

#include "dlverb/model.hpp"

namespace dlverb {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message, std::string snippet);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& snippet() const { return snippet_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string snippet_;
};

/// Parses a whole file. Identifiers may be used before their declaration;
/// anything still undeclared at end of input is reported at its first use.
Ontology parse_ontology(std::string_view source);

/// Canonical text form; parse_ontology(print_ontology(o)) == o.
std::string print_ontology(const Ontology& ontology);

std::string to_string(const ConceptExpr& expr);
std::string to_string(const Axiom& axiom);

}  // namespace dlverb

#endif  // DLVERB_PARSER_HPP
