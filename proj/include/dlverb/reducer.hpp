// Redundancy elimination over description-sets.
//
// Seven rule-sets run in order. Each rule looks at an ordered pair of
// distinct constraints and, when its side conditions hold under the index,
// adds productions and removes targets from the result set RD. Pairs come
// from a working set W that starts as the input and also receives every
// production; both matched constraints must still be in RD. W is cut back
// to RD whenever a rule-set finishes. A rule-set repeats its rules (each to
// a fixpoint, in listed order) until a sweep changes nothing, and the whole
// 1..7 pipeline repeats until a full pass applies no rule.
//
// Rule table (first = R.U with number n, second = S.V with number m):
//
//   1a  U, V                 U ⊑ V                keep U, drop V
//   2a  ∃R.U, ∃S.V           U ⊑ V, R ⊑ S         keep ∃R.U, drop ∃S.V
//   3a  ∀R.U, ∀S.V           U ⊑ V, S ⊑ R         keep ∀R.U, drop ∀S.V
//   3b  ∀R.U, ∀S.V           V ⊑ U, S ≡ R         add ∀R.V, drop ∀S.V
//   3c  ∀R.U, ∀S.V           V ⊑ U, R ⊏ S         add ∀R.V, ∀S.V
//   4a  ∃R.U, ∀S.V           U ≡ V, S ≡ R         add ℑR.U, drop ∃R.U, ∀S.V
//   4b  ∀R.U, ∃S.V           V ⊏ U, R ⊑ S         add ℑR.U, ∃S.V, drop ∀R.U
//   4c  ∀R.U, ∃S.V           U ⊑ V, S ⊑ R         add ℑR.U, ℑS.U, drop ∀R.U, ∀S.V
//   4d  ∀R.U, ∃S.V           U ⊑ V, R ⊏ S         retain both
//   5a  ∃R.U, ≥mS.V          V ⊑ U, S ⊑ R         keep ≥mS.V, drop ∃R.U
//   5b  ∃R.U, ≤1S.V          U ⊑ V, R ⊑ S         add ∃!R.U, drop ∃R.U, ≤1S.V
//   5c  ≥nR.U, ≥mS.V         U ⊑ V, R ⊑ S, n ≥ m  keep ≥nR.U, drop ≥mS.V
//   5d  ≥1R.U, ≤1S.V         U ⊑ V, R ⊑ S         add ∃!R.U, drop both
//   6a  ∃R.U, ∃!S.V          U ⊑ V, R ⊑ S         add ∃!R.U, drop ∃R.U
//   6b  ℑR.U, ∃!S.V          U ⊑ V, R ⊑ S         add ∃!R.U, drop ℑR.U
//   6c  ∃R.U, ∃!S.V          V ⊑ U, R ⊑ S         add ∃!R.V, drop ∃R.U
//   6d  ℑR.U, ∃!S.V          V ⊑ U, R ⊑ S         add ∃!R.V, drop ℑR.U
//   7a  ∃!R.U, ∃!S.V         U ⊑ V, R ⊑ S         add ∃!R.U, ∃!S.U, drop ∃!S.V
//   7b  ∃!R.U, ∃!S.V         V ⊑ U, R ⊑ S         add ∃!R.V, ∃!S.V, drop ∃!R.U
//
// ≥1 is the existential form, so 5d matches existentials (and is always
// pre-empted by 5b).

#ifndef DLVERB_REDUCER_HPP
#define DLVERB_REDUCER_HPP

#include <array>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "dlverb/descriptions.hpp"
#include "dlverb/index.hpp"

namespace dlverb {

enum class RuleId : std::uint8_t {
  R1a, R2a, R3a, R3b, R3c, R4a, R4b, R4c, R4d,
  R5a, R5b, R5c, R5d, R6a, R6b, R6c, R6d, R7a, R7b,
};

inline constexpr std::array kAllRules = {
    RuleId::R1a, RuleId::R2a, RuleId::R3a, RuleId::R3b, RuleId::R3c, RuleId::R4a, RuleId::R4b,
    RuleId::R4c, RuleId::R4d, RuleId::R5a, RuleId::R5b, RuleId::R5c, RuleId::R5d, RuleId::R6a,
    RuleId::R6b, RuleId::R6c, RuleId::R6d, RuleId::R7a, RuleId::R7b,
};

/// "1a", "4b", ...
std::string_view to_string(RuleId rule);
std::optional<RuleId> parse_rule_id(std::string_view text);
/// 1..7
int rule_set_of(RuleId rule);

/// What a rule would do to a pair, if its pattern and side conditions hold.
struct RuleEffect {
  std::vector<Constraint> productions;
  std::vector<Constraint> targets;
};

/// Pattern plus side-condition check for one ordered pair.
std::optional<RuleEffect> match_rule(RuleId rule, const Constraint& first, const Constraint& second,
                                     const OntologyIndex& index);

struct ReductionStep {
  RuleId rule;
  int pass = 1;  // pipeline pass the step belongs to
  std::pair<Constraint, Constraint> matched;
  std::set<Constraint> added;    // newly inserted into RD
  std::set<Constraint> removed;  // taken out of RD

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  DescriptionSet initial;
  DescriptionSet final_set;
  std::vector<ReductionStep> steps;

  std::vector<RuleId> rules() const;
};

struct Reduction {
  DescriptionSet result;
  ReductionTrace trace;
};

Reduction reduce(const OntologyIndex& index, const DescriptionSet& ds);

/// Thrown by replay when a step does not hold.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& message);
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Re-executes the trace from its initial set, re-checking each step's
/// pattern, side conditions, working-set membership and recorded effect.
DescriptionSet replay(const OntologyIndex& index, const ReductionTrace& trace);

/// A rule application that would still change the given set (with the
/// working set equal to the set). Empty means the set is irredundant.
struct Applicable {
  RuleId rule;
  std::pair<Constraint, Constraint> matched;
};
std::optional<Applicable> find_applicable_rule(const OntologyIndex& index, const DescriptionSet& rd);

}  // namespace dlverb

#endif  // DLVERB_REDUCER_HPP
