// Description-sets: the constraints each individual is entailed to satisfy.

#ifndef DLVERB_DESCRIPTIONS_HPP
#define DLVERB_DESCRIPTIONS_HPP

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlverb/index.hpp"
#include "dlverb/model.hpp"

namespace dlverb {

/// A canonically ordered constraint set for one individual. Members never
/// carry the Thing/Nothing markers.
class DescriptionSet {
 public:
  DescriptionSet() = default;
  explicit DescriptionSet(std::string subject) : subject_(std::move(subject)) {}
  DescriptionSet(std::string subject, std::initializer_list<Constraint> members);
  /// Members with reserved fillers are dropped.
  DescriptionSet(std::string subject, const std::set<Constraint>& members);

  const std::string& subject() const { return subject_; }
  const std::set<Constraint>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Constraint& c) const { return members_.contains(c); }

  /// Returns false (and ignores c) when c has a reserved filler.
  bool insert(const Constraint& c);
  bool erase(const Constraint& c) { return members_.erase(c) > 0; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const DescriptionSet&, const DescriptionSet&) = default;

 private:
  std::string subject_;
  std::set<Constraint> members_;
};

std::string to_string(const DescriptionSet& ds);

/// Restriction forms (normalized, atomic fillers) occurring anywhere in the
/// ontology's axioms. Description-sets report entailed restrictions only
/// from this vocabulary; named concepts are always reported.
std::set<Constraint> restriction_vocabulary(const Ontology& ontology);

/// Saturates the ABox through the index for every individual at once and
/// returns one set per individual in declaration order.
std::vector<DescriptionSet> describe_all(const OntologyIndex& index, const Ontology& ontology);

/// The full saturation, before vocabulary filtering and reserved-filler
/// removal; exposed for closure tests.
std::vector<std::set<Constraint>> saturate_all(const OntologyIndex& index, const Ontology& ontology);

/// Throws Error when the individual is not declared.
DescriptionSet description_set(const OntologyIndex& index, const Ontology& ontology,
                               std::string_view individual);

}  // namespace dlverb

#endif  // DLVERB_DESCRIPTIONS_HPP
