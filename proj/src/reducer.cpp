#include "dlverb/reducer.hpp"

#include <algorithm>
#include <map>

namespace dlverb {

namespace {

constexpr std::array<std::string_view, kAllRules.size()> kRuleNames = {
    "1a", "2a", "3a", "3b", "3c", "4a", "4b", "4c", "4d", "5a",
    "5b", "5c", "5d", "6a", "6b", "6c", "6d", "7a", "7b",
};

// Upper bound on pipeline passes; each pass must strictly change RD, and the
// constraint vocabulary is finite, so real inputs stop far earlier.
constexpr int kMaxPasses = 256;

using K = ConstraintKind;

RuleEffect keep_first_drop_second(const Constraint& second) { return {{}, {second}}; }

}  // namespace

std::string_view to_string(RuleId rule) { return kRuleNames[static_cast<std::size_t>(rule)]; }

std::optional<RuleId> parse_rule_id(std::string_view text) {
  if (text.starts_with("Rule-")) text.remove_prefix(5);
  for (std::size_t i = 0; i < kRuleNames.size(); ++i) {
    if (kRuleNames[i] == text) return kAllRules[i];
  }
  return std::nullopt;
}

int rule_set_of(RuleId rule) { return kRuleNames[static_cast<std::size_t>(rule)][0] - '0'; }

std::vector<RuleId> ReductionTrace::rules() const {
  std::vector<RuleId> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rule);
  return out;
}

std::optional<RuleEffect> match_rule(RuleId rule, const Constraint& first, const Constraint& second,
                                     const OntologyIndex& ix) {
  if (first == second) return std::nullopt;
  const K k1 = first.kind();
  const K k2 = second.kind();
  const RoleExpr& r = first.role();
  const RoleExpr& s = second.role();
  const ConceptName& u = first.filler();
  const ConceptName& v = second.filler();
  auto kinds = [&](K a, K b) { return k1 == a && k2 == b; };
  auto leq = [&](const ConceptName& a, const ConceptName& b) { return ix.is_subsumed(a, b); };
  auto sub = [&](const RoleExpr& a, const RoleExpr& b) { return ix.is_subrole(a, b); };

  switch (rule) {
    case RuleId::R1a:
      if (kinds(K::Named, K::Named) && leq(u, v)) return keep_first_drop_second(second);
      break;
    case RuleId::R2a:
      if (kinds(K::Exists, K::Exists) && leq(u, v) && sub(r, s)) return keep_first_drop_second(second);
      break;
    case RuleId::R3a:
      if (kinds(K::Forall, K::Forall) && leq(u, v) && sub(s, r)) return keep_first_drop_second(second);
      break;
    case RuleId::R3b:
      if (kinds(K::Forall, K::Forall) && leq(v, u) && ix.is_equiv_role(s, r)) {
        return RuleEffect{{Constraint::forall(r, v)}, {second}};
      }
      break;
    case RuleId::R3c:
      if (kinds(K::Forall, K::Forall) && leq(v, u) && ix.is_strict_subrole(r, s)) {
        return RuleEffect{{Constraint::forall(r, v), second}, {}};
      }
      break;
    case RuleId::R4a:
      if (kinds(K::Exists, K::Forall) && ix.is_equivalent(u, v) && ix.is_equiv_role(s, r)) {
        return RuleEffect{{Constraint::non_vacuous(r, u)}, {first, second}};
      }
      break;
    case RuleId::R4b:
      if (kinds(K::Forall, K::Exists) && ix.is_strictly_subsumed(v, u) && sub(r, s)) {
        return RuleEffect{{Constraint::non_vacuous(r, u), second}, {first}};
      }
      break;
    case RuleId::R4c:
      if (kinds(K::Forall, K::Exists) && leq(u, v) && sub(s, r)) {
        return RuleEffect{{Constraint::non_vacuous(r, u), Constraint::non_vacuous(s, u)},
                          {first, Constraint::forall(s, v)}};
      }
      break;
    case RuleId::R4d:
      if (kinds(K::Forall, K::Exists) && leq(u, v) && ix.is_strict_subrole(r, s)) {
        return RuleEffect{{first, second}, {}};
      }
      break;
    case RuleId::R5a:
      if (kinds(K::Exists, K::AtLeast) && leq(v, u) && sub(s, r)) return RuleEffect{{}, {first}};
      break;
    case RuleId::R5b:
    case RuleId::R5d:
      if (kinds(K::Exists, K::AtMost) && second.number() == 1 && leq(u, v) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, u)}, {first, second}};
      }
      break;
    case RuleId::R5c:
      if (kinds(K::AtLeast, K::AtLeast) && first.number() >= second.number() && leq(u, v) &&
          sub(r, s)) {
        return keep_first_drop_second(second);
      }
      break;
    case RuleId::R6a:
      if (kinds(K::Exists, K::ExactlyOne) && leq(u, v) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, u)}, {first}};
      }
      break;
    case RuleId::R6b:
      if (kinds(K::NonVacuous, K::ExactlyOne) && leq(u, v) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, u)}, {first}};
      }
      break;
    case RuleId::R6c:
      if (kinds(K::Exists, K::ExactlyOne) && leq(v, u) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, v)}, {first}};
      }
      break;
    case RuleId::R6d:
      if (kinds(K::NonVacuous, K::ExactlyOne) && leq(v, u) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, v)}, {first}};
      }
      break;
    case RuleId::R7a:
      if (kinds(K::ExactlyOne, K::ExactlyOne) && leq(u, v) && sub(r, s)) {
        return RuleEffect{{first, Constraint::exactly_one(s, u)}, {second}};
      }
      break;
    case RuleId::R7b:
      if (kinds(K::ExactlyOne, K::ExactlyOne) && leq(v, u) && sub(r, s)) {
        return RuleEffect{{Constraint::exactly_one(r, v), second}, {first}};
      }
      break;
  }
  return std::nullopt;
}

namespace {

struct Change {
  std::set<Constraint> added;
  std::set<Constraint> removed;
  bool empty() const { return added.empty() && removed.empty(); }
};

// Productions already in W are not re-inserted; a target that is also a
// production stays.
Change effective_change(const RuleEffect& effect, const std::set<Constraint>& rd,
                        const std::set<Constraint>& w) {
  Change change;
  for (const auto& p : effect.productions) {
    if (!w.contains(p)) change.added.insert(p);
  }
  for (const auto& t : effect.targets) {
    bool produced = std::find(effect.productions.begin(), effect.productions.end(), t) !=
                    effect.productions.end();
    if (!produced && rd.contains(t)) change.removed.insert(t);
  }
  return change;
}

void apply(const Change& change, std::set<Constraint>& rd, std::set<Constraint>& w) {
  for (const auto& c : change.removed) rd.erase(c);
  for (const auto& c : change.added) {
    rd.insert(c);
    w.insert(c);
  }
}

bool live(const Constraint& c, const std::set<Constraint>& rd, const std::set<Constraint>& w) {
  return rd.contains(c) && w.contains(c);
}

class Reducer {
 public:
  Reducer(const OntologyIndex& ix, const DescriptionSet& ds)
      : ix_(ix), rd_(ds.members()), w_(ds.members()) {}

  std::vector<ReductionStep> run() {
    std::set<std::set<Constraint>> seen{rd_};
    for (pass_ = 1; pass_ <= kMaxPasses; ++pass_) {
      const std::size_t before = steps_.size();
      for (int set = 1; set <= 7; ++set) run_rule_set(set);
      if (steps_.size() == before) return std::move(steps_);
      if (!seen.insert(rd_).second) {
        throw Error("reduction cycles: pass " + std::to_string(pass_) + " revisits an earlier set");
      }
    }
    throw Error("reduction did not converge");
  }

  const std::set<Constraint>& result() const { return rd_; }

 private:
  void run_rule_set(int set) {
    bool sweep_changed = true;
    while (sweep_changed) {
      sweep_changed = false;
      for (RuleId rule : kAllRules) {
        if (rule_set_of(rule) != set) continue;
        while (run_rule_once(rule)) sweep_changed = true;
      }
    }
    w_ = rd_;
  }

  // One scan over the ordered pairs of W; true when anything was applied.
  bool run_rule_once(RuleId rule) {
    bool any = false;
    const std::vector<Constraint> snapshot(w_.begin(), w_.end());
    for (const auto& first : snapshot) {
      for (const auto& second : snapshot) {
        if (first == second || !live(first, rd_, w_) || !live(second, rd_, w_)) continue;
        auto effect = match_rule(rule, first, second, ix_);
        if (!effect) continue;
        Change change = effective_change(*effect, rd_, w_);
        if (change.empty()) continue;
        apply(change, rd_, w_);
        steps_.push_back({rule, pass_, {first, second}, change.added, change.removed});
        any = true;
      }
    }
    return any;
  }

  const OntologyIndex& ix_;
  std::set<Constraint> rd_;
  std::set<Constraint> w_;
  std::vector<ReductionStep> steps_;
  int pass_ = 1;
};

}  // namespace

Reduction reduce(const OntologyIndex& index, const DescriptionSet& ds) {
  Reducer reducer(index, ds);
  auto steps = reducer.run();
  DescriptionSet result(ds.subject(), reducer.result());
  return {result, ReductionTrace{ds, result, std::move(steps)}};
}

ReplayError::ReplayError(std::size_t step, const std::string& message)
    : Error("step " + std::to_string(step + 1) + ": " + message), step_(step) {}

DescriptionSet replay(const OntologyIndex& index, const ReductionTrace& trace) {
  std::set<Constraint> rd = trace.initial.members();
  std::set<Constraint> w = rd;
  std::optional<std::pair<int, int>> phase;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& step = trace.steps[i];
    const auto& [first, second] = step.matched;
    const std::string label = "Rule-" + std::string(to_string(step.rule)) + " on (" +
                              to_string(first) + ", " + to_string(second) + ")";
    std::pair<int, int> current{step.pass, rule_set_of(step.rule)};
    if (phase && current < *phase) throw ReplayError(i, label + " is out of order");
    if (phase && current != *phase) w = rd;
    phase = current;

    if (!live(first, rd, w) || !live(second, rd, w)) {
      throw ReplayError(i, label + ": matched constraint is not in the working set");
    }
    auto effect = match_rule(step.rule, first, second, index);
    if (!effect) throw ReplayError(i, label + ": side conditions do not hold");
    Change change = effective_change(*effect, rd, w);
    if (change.added != step.added || change.removed != step.removed) {
      throw ReplayError(i, label + ": recorded effect differs from the rule's effect");
    }
    if (change.empty()) throw ReplayError(i, label + ": step changes nothing");
    apply(change, rd, w);
  }
  return DescriptionSet(trace.initial.subject(), rd);
}

std::optional<Applicable> find_applicable_rule(const OntologyIndex& index, const DescriptionSet& rd) {
  const std::set<Constraint>& members = rd.members();
  for (RuleId rule : kAllRules) {
    for (const auto& first : members) {
      for (const auto& second : members) {
        if (first == second) continue;
        auto effect = match_rule(rule, first, second, index);
        if (effect && !effective_change(*effect, members, members).empty()) {
          return Applicable{rule, {first, second}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dlverb
