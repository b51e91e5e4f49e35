#include "ifk/fca.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ifk/error.hpp"

namespace ifk {

Bitset common_types(const Classification& c, const Bitset& instances) {
  Bitset out = c.types().all();
  instances.for_each([&](std::size_t i) { out &= c.intent(i); });
  return out;
}

Bitset common_instances(const Classification& c, const Bitset& types) {
  Bitset out = c.instances().all();
  types.for_each([&](std::size_t t) { out &= c.type_extent(t); });
  return out;
}

std::vector<std::string> derive(const Classification& c, Side side, const std::vector<std::string>& s) {
  if (side == Side::instances) return c.types().names_of(common_types(c, c.instances().subset(s)));
  return c.instances().names_of(common_instances(c, c.types().subset(s)));
}

namespace {

bool canonical_less(const FormalConcept& a, const FormalConcept& b) {
  const auto na = a.extent.count(), nb = b.extent.count();
  if (na != nb) return na < nb;
  return a.extent < b.extent;
}

}  // namespace

std::vector<FormalConcept> concepts(const Classification& c, std::size_t max_types) {
  const std::size_t n = c.types().size();
  if (n > max_types) throw CapExceeded("concepts", static_cast<double>(n), max_types);

  auto closure = [&](const Bitset& types) { return common_types(c, common_instances(c, types)); };

  // Next closure: closed intents in lectic order, type 0 most significant.
  std::vector<FormalConcept> out;
  Bitset current = closure(c.types().none());
  while (true) {
    out.push_back({common_instances(c, current), current});
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      if (current.test(i)) {
        current.reset(i);
        continue;
      }
      Bitset candidate = closure(Bitset(current).set(i));
      // Accept when the closure adds nothing below i.
      Bitset added = candidate - current;
      if (added.first() >= i) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

ConceptLattice::ConceptLattice(std::vector<FormalConcept> concepts) : concepts_(std::move(concepts)) {
  if (concepts_.empty()) throw Error("a concept lattice has at least one concept");
}

bool ConceptLattice::leq(std::size_t i, std::size_t j) const {
  return concepts_.at(i).extent.is_subset_of(concepts_.at(j).extent);
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::order() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < size() && direct; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) direct = false;
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

std::size_t ConceptLattice::index_of_extent(const Bitset& extent) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (concepts_[i].extent == extent) return i;
  throw std::out_of_range("no concept with this extent");
}

std::size_t ConceptLattice::index_of_intent(const Bitset& intent) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (concepts_[i].intent == intent) return i;
  throw std::out_of_range("no concept with this intent");
}

// Canonical order puts the smallest extent first and the largest last.
std::size_t ConceptLattice::bottom() const { return 0; }
std::size_t ConceptLattice::top() const { return size() - 1; }

std::size_t ConceptLattice::meet(std::size_t i, std::size_t j) const {
  // The intersection of two extents is an extent.
  return index_of_extent(concepts_.at(i).extent & concepts_.at(j).extent);
}

std::size_t ConceptLattice::join(std::size_t i, std::size_t j) const {
  return index_of_intent(concepts_.at(i).intent & concepts_.at(j).intent);
}

ConceptLattice lattice(const Classification& c, std::size_t max_types) {
  return ConceptLattice(concepts(c, max_types));
}

FormalConcept object_concept(const Classification& c, std::string_view instance) {
  Bitset intent = c.intent(c.instances().index(instance));
  return {common_instances(c, intent), intent};
}

FormalConcept attribute_concept(const Classification& c, std::string_view type) {
  Bitset extent = c.type_extent(c.types().index(type));
  return {extent, common_types(c, extent)};
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string lattice_to_dot(const ConceptLattice& l, const Classification& c) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto label = brace_list(c.instances().names_of(l[i].extent)) + " | " +
                       brace_list(c.types().names_of(l[i].intent));
    out << "  c" << i << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  for (const auto& [lo, hi] : l.covers()) out << "  c" << lo << " -> c" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ifk
