// Abstract syntax for SHIQ ontologies and description-set constraints.
//
// Everything here is a plain value type. Concept expressions form a tree of
// owned children; constraints are the flat, atomic-filler restrictions that
// populate description-sets.

#ifndef DLVERB_MODEL_HPP
#define DLVERB_MODEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace dlverb {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ── Names ──────────────────────────────────────────────────────────────────

/// An atomic concept. The spellings "Thing" and "Nothing" are reserved for
/// the top and bottom markers; they can never be declared by a user because
/// the parser treats them as keywords.
struct ConceptName {
  std::string id;

  static ConceptName top() { return {"Thing"}; }
  static ConceptName bottom() { return {"Nothing"}; }
  bool is_top() const { return id == "Thing"; }
  bool is_bottom() const { return id == "Nothing"; }
  bool is_reserved() const { return is_top() || is_bottom(); }

  auto operator<=>(const ConceptName&) const = default;
};

/// A role or its inverse. Inversion is a flag, so Inv(Inv(R)) == R holds by
/// construction.
struct RoleExpr {
  std::string base;
  bool inverted = false;

  static RoleExpr named(std::string base) { return {std::move(base), false}; }
  RoleExpr inverse() const { return {base, !inverted}; }

  auto operator<=>(const RoleExpr&) const = default;
};

std::string to_string(const RoleExpr& role);

// ── Concept expressions ────────────────────────────────────────────────────

class ConceptExpr {
 public:
  enum class Kind : std::uint8_t {
    Top,
    Bottom,
    Named,
    Not,
    And,
    Or,
    Exists,
    Forall,
    AtLeast,
    AtMost,
  };

  static ConceptExpr top();
  static ConceptExpr bottom();
  static ConceptExpr named(ConceptName name);
  static ConceptExpr negation(ConceptExpr operand);
  /// Throws Error when fewer than two operands are given.
  static ConceptExpr conjunction(std::vector<ConceptExpr> operands);
  static ConceptExpr disjunction(std::vector<ConceptExpr> operands);
  static ConceptExpr exists(RoleExpr role, ConceptExpr filler);
  static ConceptExpr forall(RoleExpr role, ConceptExpr filler);
  /// Throws Error when n == 0.
  static ConceptExpr at_least(unsigned n, RoleExpr role, ConceptExpr filler);
  static ConceptExpr at_most(unsigned m, RoleExpr role, ConceptExpr filler);

  Kind kind() const { return kind_; }
  const ConceptName& name() const { return name_; }
  const RoleExpr& role() const { return role_; }
  unsigned cardinality() const { return cardinality_; }
  std::span<const ConceptExpr> operands() const { return children_; }
  /// Filler of a restriction, operand of a negation.
  const ConceptExpr& filler() const { return children_.front(); }

  bool is_restriction() const {
    return kind_ == Kind::Exists || kind_ == Kind::Forall || kind_ == Kind::AtLeast ||
           kind_ == Kind::AtMost;
  }
  /// Named, Top or Bottom.
  bool is_atomic() const {
    return kind_ == Kind::Named || kind_ == Kind::Top || kind_ == Kind::Bottom;
  }
  /// The atomic concept as a ConceptName, mapping Top/Bottom to the reserved markers.
  std::optional<ConceptName> atomic_name() const;

  /// Equality up to normalization (operand order, flattening, >=1 vs some).
  friend bool operator==(const ConceptExpr& a, const ConceptExpr& b);

 private:
  ConceptExpr(Kind kind) : kind_(kind) {}

  Kind kind_;
  ConceptName name_;
  RoleExpr role_;
  unsigned cardinality_ = 0;
  std::vector<ConceptExpr> children_;

  friend ConceptExpr normalize(const ConceptExpr& expr);
};

/// Raw structural three-way comparison, no normalization.
std::strong_ordering compare(const ConceptExpr& a, const ConceptExpr& b);

/// Canonical form: And/Or flattened, deduplicated and sorted, singleton
/// conjunctions collapsed, >=1 R.C rewritten to some R.C. Idempotent.
ConceptExpr normalize(const ConceptExpr& expr);

// ── Constraints ────────────────────────────────────────────────────────────

enum class ConstraintKind : std::uint8_t {
  Named = 0,
  Exists,
  Forall,
  AtLeast,
  AtMost,
  NonVacuous,  // at least one successor, and only fillers of C
  ExactlyOne,  // a successor in C and at most one successor overall
};

/// One element of a description-set. Fillers are concept names (or the
/// reserved markers during saturation; those never survive into a
/// DescriptionSet).
class Constraint {
 public:
  static Constraint named(ConceptName c);
  static Constraint exists(RoleExpr r, ConceptName c);
  static Constraint forall(RoleExpr r, ConceptName c);
  /// at_least(1, ...) yields the existential form.
  static Constraint at_least(unsigned n, RoleExpr r, ConceptName c);
  static Constraint at_most(unsigned m, RoleExpr r, ConceptName c);
  static Constraint non_vacuous(RoleExpr r, ConceptName c);
  static Constraint exactly_one(RoleExpr r, ConceptName c);

  ConstraintKind kind() const { return kind_; }
  const RoleExpr& role() const { return role_; }
  const ConceptName& filler() const { return filler_; }
  unsigned number() const { return number_; }

  bool is_named() const { return kind_ == ConstraintKind::Named; }
  bool has_reserved_filler() const { return filler_.is_reserved(); }

  /// Same kind/role/number, different filler.
  Constraint with_filler(ConceptName c) const;
  Constraint with_role(RoleExpr r) const;

  using Key = std::tuple<int, const std::string&, bool, const std::string&, unsigned>;
  /// Variant rank, then role, then filler, then number.
  Key key() const {
    return {static_cast<int>(kind_), role_.base, role_.inverted, filler_.id, number_};
  }

  friend bool operator==(const Constraint& a, const Constraint& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
    return a.key() <=> b.key();
  }

 private:
  Constraint(ConstraintKind kind, RoleExpr role, ConceptName filler, unsigned number)
      : kind_(kind), role_(std::move(role)), filler_(std::move(filler)), number_(number) {}

  ConstraintKind kind_;
  RoleExpr role_;
  ConceptName filler_;
  unsigned number_;
};

/// Total ordering key; equal constraints give equal keys.
inline Constraint::Key constraint_key(const Constraint& c) { return c.key(); }

/// ASCII form used in traces, structured output and golden files:
/// "Owl", "some hasPet.Owl", "only inv(hasPet).Pet", "min 2 r.C", "max 1 r.C",
/// "nonvacuous r.C", "exactlyone r.C".
std::string to_string(const Constraint& c);

/// Inverse of to_string(const Constraint&). Throws Error on malformed text.
Constraint parse_constraint(std::string_view text);

/// The restriction a constraint denotes, as a concept expression.
/// NonVacuous and ExactlyOne have no expression form and throw Error.
ConceptExpr to_expr(const Constraint& c);

/// Maps a restriction or atomic expression in description-set form to a
/// constraint; nullopt for anything else (complex fillers, Or, Not, ...).
std::optional<Constraint> as_constraint(const ConceptExpr& expr);

// ── Axioms ─────────────────────────────────────────────────────────────────

struct SubConcept {
  ConceptExpr sub, super;
  friend bool operator==(const SubConcept&, const SubConcept&) = default;
};
struct EquivConcept {
  ConceptExpr left, right;
  friend bool operator==(const EquivConcept&, const EquivConcept&) = default;
};
struct SubRole {
  RoleExpr sub, super;
  friend bool operator==(const SubRole&, const SubRole&) = default;
};
struct Transitive {
  std::string role;
  friend bool operator==(const Transitive&, const Transitive&) = default;
};
struct ConceptAssertion {
  ConceptExpr expr;
  std::string individual;
  friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};
struct RoleAssertion {
  std::string role, subject, object;
  friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};
struct Inequality {
  std::string first, second;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

using Axiom = std::variant<SubConcept, EquivConcept, SubRole, Transitive, ConceptAssertion,
                           RoleAssertion, Inequality>;

bool is_tbox(const Axiom& axiom);

// ── Ontology ───────────────────────────────────────────────────────────────

enum class SymbolKind : std::uint8_t { Concept, Role, Individual };

/// Declarations (kept in declaration order), axioms and display labels.
class Ontology {
 public:
  /// Declares a symbol. Redeclaring with the same kind is a no-op; a clash
  /// with another kind throws Error.
  void declare_concept(const std::string& id);
  void declare_role(const std::string& id);
  void declare_individual(const std::string& id);

  void add_axiom(Axiom axiom) { axioms_.push_back(std::move(axiom)); }
  void set_label(const std::string& id, std::string text) { labels_[id] = std::move(text); }

  const std::vector<ConceptName>& concepts() const { return concepts_; }
  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& individuals() const { return individuals_; }
  const std::vector<Axiom>& axioms() const { return axioms_; }
  const std::map<std::string, std::string>& labels() const { return labels_; }

  std::optional<SymbolKind> kind_of(std::string_view id) const;
  bool has_concept(std::string_view id) const { return kind_of(id) == SymbolKind::Concept; }
  bool has_role(std::string_view id) const { return kind_of(id) == SymbolKind::Role; }
  bool has_individual(std::string_view id) const {
    return kind_of(id) == SymbolKind::Individual;
  }
  const std::string* label(std::string_view id) const;

  /// Position of a declaration, used for display ordering.
  std::size_t declaration_rank(std::string_view id) const;

  std::size_t tbox_size() const;
  std::size_t abox_size() const { return axioms_.size() - tbox_size(); }
  bool empty() const { return symbols_.empty() && axioms_.empty() && labels_.empty(); }

  friend bool operator==(const Ontology& a, const Ontology& b);

 private:
  void declare(const std::string& id, SymbolKind kind);

  std::vector<ConceptName> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
  std::map<std::string, std::pair<SymbolKind, std::size_t>, std::less<>> symbols_;
  std::vector<Axiom> axioms_;
  std::map<std::string, std::string> labels_;
};

}  // namespace dlverb

#endif  // DLVERB_MODEL_HPP
