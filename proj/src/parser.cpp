#include "dlverb/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace dlverb {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::string snippet)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
            (snippet.empty() ? std::string() : " near '" + snippet + "'")),
      line_(line),
      column_(column),
      message_(std::move(message)),
      snippet_(std::move(snippet)) {}

namespace {

constexpr std::array kKeywords = {
    "concept", "role", "individual", "label", "SUBCLASSOF", "EQUIV", "SUBROLEOF",
    "transitive", "rel", "diff", "and", "or", "not", "some", "only", "min", "max",
    "Thing", "Nothing", "inv",
};

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

enum class Tok { Word, Int, String, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

struct PendingRef {
  std::string id;
  std::optional<SymbolKind> expected;  // nullopt: any kind (labels)
  std::size_t line;
  std::size_t column;
};

const char* kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::Concept: return "concept";
    case SymbolKind::Role: return "role";
    case SymbolKind::Individual: return "individual";
  }
  return "symbol";
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line_no, Ontology& onto,
             std::vector<PendingRef>& refs)
      : line_no_(line_no), onto_(onto), refs_(refs) {
    lex(text);
  }

  void parse_line() {
    if (at_end()) return;
    const Token& head = peek();
    if (head.kind == Tok::Word) {
      if (head.text == "concept" || head.text == "role" || head.text == "individual") {
        parse_declaration();
        return;
      }
      if (head.text == "label") return parse_label();
      if (head.text == "transitive") return parse_transitive();
      if (head.text == "rel") return parse_role_assertion();
      if (head.text == "diff") return parse_inequality();
      if (!is_keyword(head.text) && tokens_.size() > 1 && tokens_[1].kind == Tok::Punct &&
          tokens_[1].text == ":") {
        return parse_concept_assertion();
      }
      if (head.text == "inv" || (!is_keyword(head.text) && tokens_.size() > 1 &&
                                 tokens_[1].kind == Tok::Word && tokens_[1].text == "SUBROLEOF")) {
        return parse_subrole();
      }
    }
    parse_concept_axiom();
  }

 private:
  // ── lexing ──

  void lex(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      char ch = text[i];
      auto uch = static_cast<unsigned char>(ch);
      if (std::isspace(uch)) {
        ++i;
      } else if (ch == '#') {
        break;
      } else if (std::isalpha(uch) || ch == '_') {
        std::size_t start = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
          ++i;
        }
        tokens_.push_back({Tok::Word, std::string(text.substr(start, i - start)), start + 1});
      } else if (std::isdigit(uch)) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
          fail(start + 1, "identifiers cannot start with a digit", std::string(text.substr(start, i + 1 - start)));
        }
        tokens_.push_back({Tok::Int, std::string(text.substr(start, i - start)), start + 1});
      } else if (ch == '"') {
        std::size_t start = i++;
        std::string value;
        bool closed = false;
        while (i < text.size()) {
          if (text[i] == '\\' && i + 1 < text.size()) {
            value.push_back(text[i + 1]);
            i += 2;
          } else if (text[i] == '"') {
            ++i;
            closed = true;
            break;
          } else {
            value.push_back(text[i++]);
          }
        }
        if (!closed) fail(start + 1, "unterminated string", std::string(text.substr(start)));
        tokens_.push_back({Tok::String, std::move(value), start + 1});
      } else if (ch == '(' || ch == ')' || ch == ',' || ch == '.' || ch == ':') {
        tokens_.push_back({Tok::Punct, std::string(1, ch), i + 1});
        ++i;
      } else {
        fail(i + 1, "unexpected character", std::string(1, ch));
      }
    }
    end_column_ = text.size() + 1;
  }

  // ── token helpers ──

  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(std::size_t column, const std::string& message,
                         const std::string& snippet) const {
    throw ParseError(line_no_, column, message, snippet);
  }

  // Errors at end of line point at the last consumed token.
  [[noreturn]] void fail_here(const std::string& message) const {
    if (!at_end()) fail(peek().column, message, peek().text);
    if (!tokens_.empty()) {
      const Token& last = tokens_.back();
      fail(last.column, message + " at end of line", last.text);
    }
    fail(end_column_, message, "");
  }

  bool accept_punct(char ch) {
    if (!at_end() && peek().kind == Tok::Punct && peek().text[0] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(char ch) {
    if (!accept_punct(ch)) fail_here(std::string("expected '") + ch + "'");
  }

  bool accept_word(std::string_view word) {
    if (!at_end() && peek().kind == Tok::Word && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (!at_end()) fail(peek().column, "unexpected trailing input", peek().text);
  }

  // An identifier that is not a keyword, recorded for end-of-file resolution.
  std::string expect_identifier(std::optional<SymbolKind> expected, const char* what) {
    if (at_end() || peek().kind != Tok::Word || is_keyword(peek().text)) {
      fail_here(std::string("expected ") + what);
    }
    const Token& tok = tokens_[pos_++];
    refs_.push_back({tok.text, expected, line_no_, tok.column});
    return tok.text;
  }

  // ── statements ──

  void parse_declaration() {
    const Token& head = tokens_[pos_++];
    if (at_end() || peek().kind != Tok::Word || is_keyword(peek().text)) {
      fail_here("expected identifier after '" + head.text + "'");
    }
    const Token& name = tokens_[pos_++];
    expect_end();
    try {
      if (head.text == "concept") onto_.declare_concept(name.text);
      else if (head.text == "role") onto_.declare_role(name.text);
      else onto_.declare_individual(name.text);
    } catch (const Error& e) {
      fail(name.column, e.what(), name.text);
    }
  }

  void parse_label() {
    ++pos_;
    std::string id = expect_identifier(std::nullopt, "identifier after 'label'");
    if (at_end() || peek().kind != Tok::String) fail_here("expected quoted label text");
    std::string text = tokens_[pos_++].text;
    expect_end();
    onto_.set_label(id, std::move(text));
  }

  void parse_transitive() {
    ++pos_;
    std::string role = expect_identifier(SymbolKind::Role, "role name");
    expect_end();
    onto_.add_axiom(Transitive{role});
  }

  void parse_role_assertion() {
    ++pos_;
    std::string role = expect_identifier(SymbolKind::Role, "role name");
    expect_punct('(');
    std::string a = expect_identifier(SymbolKind::Individual, "individual");
    expect_punct(',');
    std::string b = expect_identifier(SymbolKind::Individual, "individual");
    expect_punct(')');
    expect_end();
    onto_.add_axiom(RoleAssertion{role, a, b});
  }

  void parse_inequality() {
    ++pos_;
    std::string a = expect_identifier(SymbolKind::Individual, "individual");
    std::size_t second_column = at_end() ? end_column_ : peek().column;
    std::string b = expect_identifier(SymbolKind::Individual, "individual");
    expect_end();
    if (a == b) fail(second_column, "an individual cannot differ from itself", b);
    onto_.add_axiom(Inequality{a, b});
  }

  void parse_concept_assertion() {
    std::string individual = expect_identifier(SymbolKind::Individual, "individual");
    expect_punct(':');
    std::size_t column = at_end() ? end_column_ : peek().column;
    std::string snippet = at_end() ? "" : peek().text;
    ConceptExpr expr = parse_concept();
    expect_end();
    if (!is_assertable(expr)) {
      fail(column,
           "assertions take named concepts, restrictions with named fillers, or conjunctions of "
           "these",
           snippet);
    }
    onto_.add_axiom(ConceptAssertion{std::move(expr), individual});
  }

  void parse_subrole() {
    RoleExpr sub = parse_role();
    if (!accept_word("SUBROLEOF")) fail_here("expected SUBROLEOF");
    RoleExpr super = parse_role();
    expect_end();
    onto_.add_axiom(SubRole{sub, super});
  }

  void parse_concept_axiom() {
    ConceptExpr left = parse_concept();
    if (accept_word("SUBCLASSOF")) {
      ConceptExpr right = parse_concept();
      expect_end();
      onto_.add_axiom(SubConcept{std::move(left), std::move(right)});
    } else if (accept_word("EQUIV")) {
      ConceptExpr right = parse_concept();
      expect_end();
      onto_.add_axiom(EquivConcept{std::move(left), std::move(right)});
    } else {
      fail_here("expected SUBCLASSOF or EQUIV");
    }
  }

  static bool is_assertable(const ConceptExpr& e) {
    if (e.kind() == ConceptExpr::Kind::And) {
      return std::all_of(e.operands().begin(), e.operands().end(), is_assertable);
    }
    return as_constraint(e).has_value();
  }

  // ── expressions ──

  ConceptExpr parse_concept() {
    std::vector<ConceptExpr> parts{parse_conjunction()};
    while (accept_word("or")) parts.push_back(parse_conjunction());
    if (parts.size() == 1) return std::move(parts.front());
    return ConceptExpr::disjunction(std::move(parts));
  }

  ConceptExpr parse_conjunction() {
    std::vector<ConceptExpr> parts{parse_unary()};
    while (accept_word("and")) parts.push_back(parse_unary());
    if (parts.size() == 1) return std::move(parts.front());
    return ConceptExpr::conjunction(std::move(parts));
  }

  ConceptExpr parse_unary() {
    if (at_end()) fail_here("expected a concept");
    const Token& tok = peek();
    if (tok.kind == Tok::Punct && tok.text == "(") {
      ++pos_;
      ConceptExpr inner = parse_concept();
      expect_punct(')');
      return inner;
    }
    if (tok.kind != Tok::Word) fail(tok.column, "expected a concept", tok.text);
    if (tok.text == "not") {
      ++pos_;
      return ConceptExpr::negation(parse_unary());
    }
    if (tok.text == "Thing") {
      ++pos_;
      return ConceptExpr::top();
    }
    if (tok.text == "Nothing") {
      ++pos_;
      return ConceptExpr::bottom();
    }
    if (tok.text == "some" || tok.text == "only") {
      bool some = tok.text == "some";
      ++pos_;
      RoleExpr role = parse_role();
      expect_punct('.');
      ConceptExpr filler = parse_unary();
      return some ? ConceptExpr::exists(role, std::move(filler))
                  : ConceptExpr::forall(role, std::move(filler));
    }
    if (tok.text == "min" || tok.text == "max") {
      bool min = tok.text == "min";
      ++pos_;
      unsigned n = parse_cardinality();
      RoleExpr role = parse_role();
      expect_punct('.');
      ConceptExpr filler = parse_unary();
      return min ? ConceptExpr::at_least(n, role, std::move(filler))
                 : ConceptExpr::at_most(n, role, std::move(filler));
    }
    if (is_keyword(tok.text)) fail(tok.column, "unexpected keyword", tok.text);
    return ConceptExpr::named(ConceptName{expect_identifier(SymbolKind::Concept, "concept name")});
  }

  unsigned parse_cardinality() {
    if (at_end() || peek().kind != Tok::Int) fail_here("expected a cardinality");
    const Token& tok = tokens_[pos_++];
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
      fail(tok.column, "cardinality out of range", tok.text);
    }
    if (value == 0) fail(tok.column, "cardinality must be a positive integer", tok.text);
    return value;
  }

  RoleExpr parse_role() {
    if (accept_word("inv")) {
      expect_punct('(');
      std::string base = expect_identifier(SymbolKind::Role, "role name");
      expect_punct(')');
      return RoleExpr{base, true};
    }
    return RoleExpr::named(expect_identifier(SymbolKind::Role, "role name"));
  }

  std::size_t line_no_;
  Ontology& onto_;
  std::vector<PendingRef>& refs_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_column_ = 1;
};

}  // namespace

Ontology parse_ontology(std::string_view source) {
  Ontology onto;
  std::vector<PendingRef> refs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    LineParser(line, line_no, onto, refs).parse_line();
    if (end == source.size()) break;
    start = end + 1;
  }
  for (const auto& ref : refs) {
    auto kind = onto.kind_of(ref.id);
    if (!kind) {
      std::string what = ref.expected ? kind_name(*ref.expected) : "identifier";
      throw ParseError(ref.line, ref.column, "undeclared " + what + " '" + ref.id + "'", ref.id);
    }
    if (ref.expected && *kind != *ref.expected) {
      throw ParseError(ref.line, ref.column,
                       "'" + ref.id + "' is declared as a " + kind_name(*kind) + ", expected a " +
                           kind_name(*ref.expected),
                       ref.id);
    }
  }
  return onto;
}

// ── printing ───────────────────────────────────────────────────────────────

namespace {

// Binding contexts: 0 anywhere, 1 operand of "and", 2 operand of a unary form.
void print_expr(std::ostream& out, const ConceptExpr& e, int context) {
  using Kind = ConceptExpr::Kind;
  auto print_list = [&](const char* sep, int inner) {
    bool first = true;
    for (const auto& op : e.operands()) {
      if (!first) out << sep;
      print_expr(out, op, inner);
      first = false;
    }
  };
  switch (e.kind()) {
    case Kind::Top: out << "Thing"; return;
    case Kind::Bottom: out << "Nothing"; return;
    case Kind::Named: out << e.name().id; return;
    case Kind::Not:
      out << "not ";
      print_expr(out, e.filler(), 2);
      return;
    case Kind::And:
      if (context > 1) out << '(';
      print_list(" and ", 2);
      if (context > 1) out << ')';
      return;
    case Kind::Or:
      if (context > 0) out << '(';
      print_list(" or ", 1);
      if (context > 0) out << ')';
      return;
    case Kind::Exists: out << "some "; break;
    case Kind::Forall: out << "only "; break;
    case Kind::AtLeast: out << "min " << e.cardinality() << ' '; break;
    case Kind::AtMost: out << "max " << e.cardinality() << ' '; break;
  }
  out << to_string(e.role()) << '.';
  print_expr(out, e.filler(), 2);
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

}  // namespace

std::string to_string(const ConceptExpr& expr) {
  std::ostringstream out;
  print_expr(out, expr, 0);
  return out.str();
}

std::string to_string(const Axiom& axiom) {
  return std::visit(
      Overloaded{
          [](const SubConcept& a) { return to_string(a.sub) + " SUBCLASSOF " + to_string(a.super); },
          [](const EquivConcept& a) { return to_string(a.left) + " EQUIV " + to_string(a.right); },
          [](const SubRole& a) { return to_string(a.sub) + " SUBROLEOF " + to_string(a.super); },
          [](const Transitive& a) { return "transitive " + a.role; },
          [](const ConceptAssertion& a) { return a.individual + " : " + to_string(a.expr); },
          [](const RoleAssertion& a) {
            return "rel " + a.role + "(" + a.subject + ", " + a.object + ")";
          },
          [](const Inequality& a) { return "diff " + a.first + " " + a.second; },
      },
      axiom);
}

std::string print_ontology(const Ontology& ontology) {
  std::ostringstream out;
  for (const auto& c : ontology.concepts()) out << "concept " << c.id << '\n';
  for (const auto& r : ontology.roles()) out << "role " << r << '\n';
  for (const auto& i : ontology.individuals()) out << "individual " << i << '\n';
  for (const auto& [id, text] : ontology.labels()) out << "label " << id << ' ' << quote(text) << '\n';
  for (const auto& axiom : ontology.axioms()) out << to_string(axiom) << '\n';
  return out.str();
}

}  // namespace dlverb
