// Independent checks on reductions, and a seeded ontology generator.

#ifndef DLVERB_ORACLE_HPP
#define DLVERB_ORACLE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlverb/descriptions.hpp"
#include "dlverb/index.hpp"
#include "dlverb/reducer.hpp"

namespace dlverb {

/// Everything the constraint calculus derives from base. Besides the
/// upward/downward lifting of fillers, roles and numerals:
///   nonvacuous R.C  =>  some R.C, only R.C
///   exactlyone R.C  =>  some R.C, only R.C, max 1 R.D for every D (Thing included)
/// Named members also bring their supers and definitions. The result may
/// contain Thing/Nothing fillers.
std::set<Constraint> entailment_closure(const OntologyIndex& index, const std::set<Constraint>& base);

/// Membership in the closure. Derived forms are entailed through their
/// parts: nonvacuous R.C needs some R.C and only R.C; exactlyone R.C needs
/// some R.C and max 1 R.Thing.
bool entails_constraint(const OntologyIndex& index, const std::set<Constraint>& base,
                        const Constraint& c);

struct VerificationReport {
  std::string subject;
  std::size_t dropped_checked = 0;
  std::size_t justified_by_entailment = 0;
  std::size_t justified_by_trace = 0;
  std::vector<std::pair<Constraint, std::string>> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks every member of ds missing from rds: first against the closure of
/// rds, then against a replayed trace step that removed it. Throws Error
/// when the trace does not start at ds or does not replay to rds.
VerificationReport verify_reduction(const OntologyIndex& index, const DescriptionSet& ds,
                                    const DescriptionSet& rds, const ReductionTrace& trace);

struct GenParams {
  std::uint64_t seed = 1;
  unsigned max_concepts = 15;
  unsigned max_roles = 5;
  unsigned max_individuals = 10;
  unsigned max_axioms = 60;
  double restriction_probability = 0.5;
};

/// Deterministic in the parameters. Concepts are named A0.., roles r0..,
/// individuals i0... Named subsumptions only point from a higher index to a
/// lower one. Transitive roles are added only while the simplicity check
/// stays clean. Throws Error for max_concepts == 0, max_individuals == 0 or
/// a probability outside [0, 1].
Ontology random_ontology(const GenParams& params);

}  // namespace dlverb

#endif  // DLVERB_ORACLE_HPP
