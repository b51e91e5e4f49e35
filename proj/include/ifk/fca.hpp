#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ifk/bitset.hpp"
#include "ifk/classification.hpp"

namespace ifk {

/// A fixed pair of the derivation Galois connection.
struct FormalConcept {
  Bitset extent;  // over instances
  Bitset intent;  // over types
  bool operator==(const FormalConcept&) const = default;
};

/// Types shared by every instance in `instances`.
Bitset common_types(const Classification& c, const Bitset& instances);
/// Instances classified by every type in `types`.
Bitset common_instances(const Classification& c, const Bitset& types);

enum class Side { instances, types };
/// Name-level derivation: from a set on `side` to the other side.
/// Throws UnknownElement for undeclared names.
std::vector<std::string> derive(const Classification& c, Side side, const std::vector<std::string>& s);

inline constexpr std::size_t kMaxConceptTypes = 20;

/// All concepts, by lectic next-closure over type subsets, sorted by extent
/// size then lexicographic extent. Throws CapExceeded when the classification
/// has more than `max_types` types.
std::vector<FormalConcept> concepts(const Classification& c, std::size_t max_types = kMaxConceptTypes);

class ConceptLattice {
 public:
  explicit ConceptLattice(std::vector<FormalConcept> concepts);

  const std::vector<FormalConcept>& concepts() const { return concepts_; }
  std::size_t size() const { return concepts_.size(); }
  const FormalConcept& operator[](std::size_t i) const { return concepts_.at(i); }

  /// Extent inclusion. Throws std::out_of_range for unknown indices.
  bool leq(std::size_t i, std::size_t j) const;
  /// All (i, j) with concept i <= concept j, reflexive pairs included.
  std::vector<std::pair<std::size_t, std::size_t>> order() const;
  /// Covering pairs only (Hasse diagram edges), lower first.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  std::size_t top() const;
  std::size_t bottom() const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  /// Index of the concept with this extent; throws std::out_of_range.
  std::size_t index_of_extent(const Bitset& extent) const;
  std::size_t index_of_intent(const Bitset& intent) const;

 private:
  std::vector<FormalConcept> concepts_;
};

ConceptLattice lattice(const Classification& c, std::size_t max_types = kMaxConceptTypes);

/// (instance'', instance')
FormalConcept object_concept(const Classification& c, std::string_view instance);
/// (type', type'')
FormalConcept attribute_concept(const Classification& c, std::string_view type);

/// Graphviz Hasse diagram: covers only, bottom at the bottom, node label
/// `{extent} | {intent}`.
std::string lattice_to_dot(const ConceptLattice& l, const Classification& c);

}  // namespace ifk
