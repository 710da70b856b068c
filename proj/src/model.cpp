#include "dlverb/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace dlverb {

std::string to_string(const RoleExpr& role) {
  return role.inverted ? "inv(" + role.base + ")" : role.base;
}

// ── ConceptExpr ────────────────────────────────────────────────────────────

ConceptExpr ConceptExpr::top() { return ConceptExpr(Kind::Top); }
ConceptExpr ConceptExpr::bottom() { return ConceptExpr(Kind::Bottom); }

ConceptExpr ConceptExpr::named(ConceptName name) {
  if (name.is_top()) return top();
  if (name.is_bottom()) return bottom();
  ConceptExpr e(Kind::Named);
  e.name_ = std::move(name);
  return e;
}

ConceptExpr ConceptExpr::negation(ConceptExpr operand) {
  ConceptExpr e(Kind::Not);
  e.children_.push_back(std::move(operand));
  return e;
}

ConceptExpr ConceptExpr::conjunction(std::vector<ConceptExpr> operands) {
  if (operands.size() < 2) throw Error("conjunction needs at least two operands");
  ConceptExpr e(Kind::And);
  e.children_ = std::move(operands);
  return e;
}

ConceptExpr ConceptExpr::disjunction(std::vector<ConceptExpr> operands) {
  if (operands.size() < 2) throw Error("disjunction needs at least two operands");
  ConceptExpr e(Kind::Or);
  e.children_ = std::move(operands);
  return e;
}

ConceptExpr ConceptExpr::exists(RoleExpr role, ConceptExpr filler) {
  ConceptExpr e(Kind::Exists);
  e.role_ = std::move(role);
  e.children_.push_back(std::move(filler));
  return e;
}

ConceptExpr ConceptExpr::forall(RoleExpr role, ConceptExpr filler) {
  ConceptExpr e(Kind::Forall);
  e.role_ = std::move(role);
  e.children_.push_back(std::move(filler));
  return e;
}

ConceptExpr ConceptExpr::at_least(unsigned n, RoleExpr role, ConceptExpr filler) {
  if (n == 0) throw Error("cardinality must be a positive integer");
  ConceptExpr e(Kind::AtLeast);
  e.cardinality_ = n;
  e.role_ = std::move(role);
  e.children_.push_back(std::move(filler));
  return e;
}

ConceptExpr ConceptExpr::at_most(unsigned m, RoleExpr role, ConceptExpr filler) {
  if (m == 0) throw Error("cardinality must be a positive integer");
  ConceptExpr e(Kind::AtMost);
  e.cardinality_ = m;
  e.role_ = std::move(role);
  e.children_.push_back(std::move(filler));
  return e;
}

std::optional<ConceptName> ConceptExpr::atomic_name() const {
  switch (kind_) {
    case Kind::Named: return name_;
    case Kind::Top: return ConceptName::top();
    case Kind::Bottom: return ConceptName::bottom();
    default: return std::nullopt;
  }
}

std::strong_ordering compare(const ConceptExpr& a, const ConceptExpr& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.role() <=> b.role(); c != 0) return c;
  if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
  auto lhs = a.operands();
  auto rhs = b.operands();
  for (std::size_t i = 0; i < std::min(lhs.size(), rhs.size()); ++i) {
    if (auto c = compare(lhs[i], rhs[i]); c != 0) return c;
  }
  return lhs.size() <=> rhs.size();
}

ConceptExpr normalize(const ConceptExpr& expr) {
  using Kind = ConceptExpr::Kind;
  switch (expr.kind()) {
    case Kind::Top:
    case Kind::Bottom:
    case Kind::Named:
      return expr;
    case Kind::Not:
      return ConceptExpr::negation(normalize(expr.filler()));
    case Kind::Exists:
    case Kind::Forall:
    case Kind::AtMost: {
      ConceptExpr out = expr;
      out.children_[0] = normalize(expr.filler());
      return out;
    }
    case Kind::AtLeast: {
      if (expr.cardinality() == 1) return ConceptExpr::exists(expr.role(), normalize(expr.filler()));
      ConceptExpr out = expr;
      out.children_[0] = normalize(expr.filler());
      return out;
    }
    case Kind::And:
    case Kind::Or: {
      std::vector<ConceptExpr> flat;
      for (const auto& op : expr.operands()) {
        ConceptExpr n = normalize(op);
        if (n.kind() == expr.kind()) {
          for (const auto& inner : n.operands()) flat.push_back(inner);
        } else {
          flat.push_back(std::move(n));
        }
      }
      std::sort(flat.begin(), flat.end(),
                [](const ConceptExpr& x, const ConceptExpr& y) { return compare(x, y) < 0; });
      flat.erase(std::unique(flat.begin(), flat.end(),
                             [](const ConceptExpr& x, const ConceptExpr& y) {
                               return compare(x, y) == 0;
                             }),
                 flat.end());
      if (flat.size() == 1) return flat.front();
      ConceptExpr out(expr.kind());
      out.children_ = std::move(flat);
      return out;
    }
  }
  return expr;
}

bool operator==(const ConceptExpr& a, const ConceptExpr& b) {
  return compare(normalize(a), normalize(b)) == 0;
}

// ── Constraint ─────────────────────────────────────────────────────────────

Constraint Constraint::named(ConceptName c) {
  return Constraint(ConstraintKind::Named, RoleExpr{}, std::move(c), 0);
}
Constraint Constraint::exists(RoleExpr r, ConceptName c) {
  return Constraint(ConstraintKind::Exists, std::move(r), std::move(c), 1);
}
Constraint Constraint::forall(RoleExpr r, ConceptName c) {
  return Constraint(ConstraintKind::Forall, std::move(r), std::move(c), 0);
}
Constraint Constraint::at_least(unsigned n, RoleExpr r, ConceptName c) {
  if (n == 0) throw Error("cardinality must be a positive integer");
  if (n == 1) return exists(std::move(r), std::move(c));
  return Constraint(ConstraintKind::AtLeast, std::move(r), std::move(c), n);
}
Constraint Constraint::at_most(unsigned m, RoleExpr r, ConceptName c) {
  if (m == 0) throw Error("cardinality must be a positive integer");
  return Constraint(ConstraintKind::AtMost, std::move(r), std::move(c), m);
}
Constraint Constraint::non_vacuous(RoleExpr r, ConceptName c) {
  return Constraint(ConstraintKind::NonVacuous, std::move(r), std::move(c), 0);
}
Constraint Constraint::exactly_one(RoleExpr r, ConceptName c) {
  return Constraint(ConstraintKind::ExactlyOne, std::move(r), std::move(c), 1);
}

Constraint Constraint::with_filler(ConceptName c) const {
  Constraint out = *this;
  out.filler_ = std::move(c);
  return out;
}

Constraint Constraint::with_role(RoleExpr r) const {
  if (kind_ == ConstraintKind::Named) return *this;
  Constraint out = *this;
  out.role_ = std::move(r);
  return out;
}

std::string to_string(const Constraint& c) {
  const std::string tail = to_string(c.role()) + "." + c.filler().id;
  switch (c.kind()) {
    case ConstraintKind::Named: return c.filler().id;
    case ConstraintKind::Exists: return "some " + tail;
    case ConstraintKind::Forall: return "only " + tail;
    case ConstraintKind::AtLeast: return "min " + std::to_string(c.number()) + " " + tail;
    case ConstraintKind::AtMost: return "max " + std::to_string(c.number()) + " " + tail;
    case ConstraintKind::NonVacuous: return "nonvacuous " + tail;
    case ConstraintKind::ExactlyOne: return "exactlyone " + tail;
  }
  return tail;
}

namespace {

std::vector<std::string_view> split_words(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return std::isalnum(u) || u == '_';
  });
}

std::pair<RoleExpr, ConceptName> parse_role_filler(std::string_view text, std::string_view whole) {
  auto dot = text.rfind('.');
  if (dot == std::string_view::npos) throw Error("malformed constraint '" + std::string(whole) + "'");
  std::string_view role = text.substr(0, dot);
  std::string_view filler = text.substr(dot + 1);
  RoleExpr r;
  if (role.starts_with("inv(") && role.ends_with(")")) {
    r = RoleExpr{std::string(role.substr(4, role.size() - 5)), true};
  } else {
    r = RoleExpr::named(std::string(role));
  }
  if (!is_identifier(r.base) || !is_identifier(filler)) {
    throw Error("malformed constraint '" + std::string(whole) + "'");
  }
  return {std::move(r), ConceptName{std::string(filler)}};
}

unsigned parse_number(std::string_view text, std::string_view whole) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw Error("bad cardinality in constraint '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Constraint parse_constraint(std::string_view text) {
  auto words = split_words(text);
  if (words.size() == 1) {
    if (!is_identifier(words[0])) throw Error("malformed constraint '" + std::string(text) + "'");
    return Constraint::named(ConceptName{std::string(words[0])});
  }
  if (words.size() == 2) {
    auto [role, filler] = parse_role_filler(words[1], text);
    if (words[0] == "some") return Constraint::exists(role, filler);
    if (words[0] == "only") return Constraint::forall(role, filler);
    if (words[0] == "nonvacuous") return Constraint::non_vacuous(role, filler);
    if (words[0] == "exactlyone") return Constraint::exactly_one(role, filler);
  }
  if (words.size() == 3) {
    unsigned n = parse_number(words[1], text);
    auto [role, filler] = parse_role_filler(words[2], text);
    if (words[0] == "min") return Constraint::at_least(n, role, filler);
    if (words[0] == "max") return Constraint::at_most(n, role, filler);
  }
  throw Error("malformed constraint '" + std::string(text) + "'");
}

ConceptExpr to_expr(const Constraint& c) {
  auto filler = ConceptExpr::named(c.filler());
  switch (c.kind()) {
    case ConstraintKind::Named: return filler;
    case ConstraintKind::Exists: return ConceptExpr::exists(c.role(), filler);
    case ConstraintKind::Forall: return ConceptExpr::forall(c.role(), filler);
    case ConstraintKind::AtLeast: return ConceptExpr::at_least(c.number(), c.role(), filler);
    case ConstraintKind::AtMost: return ConceptExpr::at_most(c.number(), c.role(), filler);
    case ConstraintKind::NonVacuous:
    case ConstraintKind::ExactlyOne:
      break;
  }
  throw Error("derived constraint '" + to_string(c) + "' has no concept expression form");
}

std::optional<Constraint> as_constraint(const ConceptExpr& expr) {
  using Kind = ConceptExpr::Kind;
  if (expr.is_atomic()) return Constraint::named(*expr.atomic_name());
  if (!expr.is_restriction()) return std::nullopt;
  auto filler = expr.filler().atomic_name();
  if (!filler) return std::nullopt;
  switch (expr.kind()) {
    case Kind::Exists: return Constraint::exists(expr.role(), *filler);
    case Kind::Forall: return Constraint::forall(expr.role(), *filler);
    case Kind::AtLeast: return Constraint::at_least(expr.cardinality(), expr.role(), *filler);
    case Kind::AtMost: return Constraint::at_most(expr.cardinality(), expr.role(), *filler);
    default: return std::nullopt;
  }
}

// ── Axioms and ontology ────────────────────────────────────────────────────

bool is_tbox(const Axiom& axiom) {
  return std::holds_alternative<SubConcept>(axiom) || std::holds_alternative<EquivConcept>(axiom) ||
         std::holds_alternative<SubRole>(axiom) || std::holds_alternative<Transitive>(axiom);
}

void Ontology::declare(const std::string& id, SymbolKind kind) {
  if (id == "Thing" || id == "Nothing") throw Error("'" + id + "' is reserved");
  if (auto it = symbols_.find(id); it != symbols_.end()) {
    if (it->second.first != kind) throw Error("identifier '" + id + "' already declared with another kind");
    return;
  }
  symbols_.emplace(id, std::pair{kind, symbols_.size()});
  switch (kind) {
    case SymbolKind::Concept: concepts_.push_back(ConceptName{id}); break;
    case SymbolKind::Role: roles_.push_back(id); break;
    case SymbolKind::Individual: individuals_.push_back(id); break;
  }
}

void Ontology::declare_concept(const std::string& id) { declare(id, SymbolKind::Concept); }
void Ontology::declare_role(const std::string& id) { declare(id, SymbolKind::Role); }
void Ontology::declare_individual(const std::string& id) { declare(id, SymbolKind::Individual); }

std::optional<SymbolKind> Ontology::kind_of(std::string_view id) const {
  auto it = symbols_.find(id);
  if (it == symbols_.end()) return std::nullopt;
  return it->second.first;
}

const std::string* Ontology::label(std::string_view id) const {
  auto it = labels_.find(std::string(id));
  return it == labels_.end() ? nullptr : &it->second;
}

std::size_t Ontology::declaration_rank(std::string_view id) const {
  auto it = symbols_.find(id);
  return it == symbols_.end() ? std::numeric_limits<std::size_t>::max() : it->second.second;
}

std::size_t Ontology::tbox_size() const {
  return static_cast<std::size_t>(std::count_if(axioms_.begin(), axioms_.end(), is_tbox));
}

bool operator==(const Ontology& a, const Ontology& b) {
  return a.concepts_ == b.concepts_ && a.roles_ == b.roles_ && a.individuals_ == b.individuals_ &&
         a.axioms_ == b.axioms_ && a.labels_ == b.labels_;
}

}  // namespace dlverb
