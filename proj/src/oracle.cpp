#include "dlverb/oracle.hpp"

#include <algorithm>
#include <deque>

namespace dlverb {

std::set<Constraint> entailment_closure(const OntologyIndex& index, const std::set<Constraint>& base) {
  std::set<unsigned> numerals = index.numerals();
  for (const auto& c : base) {
    if (c.kind() == ConstraintKind::AtLeast || c.kind() == ConstraintKind::AtMost) numerals.insert(c.number());
  }

  std::set<Constraint> closure;
  std::deque<Constraint> queue;
  auto add = [&](const Constraint& c) {
    if (closure.insert(c).second) queue.push_back(c);
  };
  for (const auto& c : base) add(c);

  while (!queue.empty()) {
    const Constraint c = queue.front();
    queue.pop_front();
    const ConceptName& u = c.filler();
    const RoleExpr& r = c.role();
    switch (c.kind()) {
      case ConstraintKind::Named:
        for (const auto& d : index.supers(u)) add(Constraint::named(d));
        for (const auto& def : index.definition(u)) add(def);
        break;
      case ConstraintKind::Exists:
      case ConstraintKind::AtLeast:
        for (const auto& d : index.supers(u)) add(c.with_filler(d));
        for (const auto& s : index.super_roles(r)) add(c.with_role(s));
        for (unsigned m : numerals) {
          if (m < c.number()) add(Constraint::at_least(m, r, u));
        }
        break;
      case ConstraintKind::Forall:
        for (const auto& d : index.supers(u)) add(c.with_filler(d));
        for (const auto& s : index.sub_roles(r)) add(c.with_role(s));
        break;
      case ConstraintKind::AtMost:
        for (const auto& d : index.subs(u)) add(c.with_filler(d));
        for (const auto& s : index.sub_roles(r)) add(c.with_role(s));
        for (unsigned m : numerals) {
          if (m > c.number()) add(Constraint::at_most(m, r, u));
        }
        break;
      case ConstraintKind::NonVacuous:
        add(Constraint::exists(r, u));
        add(Constraint::forall(r, u));
        break;
      case ConstraintKind::ExactlyOne:
        add(Constraint::exists(r, u));
        add(Constraint::forall(r, u));
        add(Constraint::at_most(1, r, ConceptName::top()));
        break;
    }
  }
  return closure;
}

bool entails_constraint(const OntologyIndex& index, const std::set<Constraint>& base,
                        const Constraint& c) {
  if (base.empty()) return false;
  const auto closure = entailment_closure(index, base);
  const RoleExpr& r = c.role();
  const ConceptName& u = c.filler();
  switch (c.kind()) {
    case ConstraintKind::NonVacuous:
      return closure.contains(Constraint::exists(r, u)) && closure.contains(Constraint::forall(r, u));
    case ConstraintKind::ExactlyOne:
      return closure.contains(Constraint::exists(r, u)) &&
             closure.contains(Constraint::at_most(1, r, ConceptName::top()));
    default:
      return closure.contains(c);
  }
}

VerificationReport verify_reduction(const OntologyIndex& index, const DescriptionSet& ds,
                                    const DescriptionSet& rds, const ReductionTrace& trace) {
  if (trace.initial.members() != ds.members()) {
    throw Error("trace for " + ds.subject() + " does not start at the given description-set");
  }
  if (replay(index, trace).members() != rds.members()) {
    throw Error("reduced set for " + ds.subject() + " does not match the replayed trace");
  }

  VerificationReport report;
  report.subject = ds.subject();
  const auto closure = entailment_closure(index, rds.members());
  for (const auto& c : ds) {
    if (rds.contains(c)) continue;
    ++report.dropped_checked;
    bool entailed = c.kind() == ConstraintKind::NonVacuous || c.kind() == ConstraintKind::ExactlyOne
                        ? entails_constraint(index, rds.members(), c)
                        : closure.contains(c);
    if (entailed) {
      ++report.justified_by_entailment;
      continue;
    }
    bool removed = std::any_of(trace.steps.begin(), trace.steps.end(),
                               [&](const ReductionStep& s) { return s.removed.contains(c); });
    if (removed) {
      ++report.justified_by_trace;
    } else {
      report.failures.emplace_back(c, "not entailed by the reduced set and never removed by a rule");
    }
  }
  return report;
}

}  // namespace dlverb
