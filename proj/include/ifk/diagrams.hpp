#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ifk/classification.hpp"
#include "ifk/validation.hpp"

namespace ifk {

struct ShapeEdge {
  std::string id;
  std::string src;
  std::string dst;
  bool operator==(const ShapeEdge&) const = default;
};

/// A free shape: nodes and directed edges, no path equations.
struct ShapeGraph {
  std::vector<std::string> nodes;
  std::vector<ShapeEdge> edges;

  ValidationResult validate() const;
  bool operator==(const ShapeGraph&) const = default;
};

struct LanguageDiagram {
  ShapeGraph shape;
  std::map<std::string, Language> node_language;
  std::map<std::string, TypeMap> edge_map;

  ValidationResult validate() const;
};

struct ClsDiagram {
  ShapeGraph shape;
  std::map<std::string, ClassificationPtr> node_cls;
  std::map<std::string, Infomorphism> edge_info;

  /// Structure plus invariance of every edge infomorphism.
  ValidationResult validate() const;
  LanguageDiagram language_diagram() const;
};

/// The sum of a language diagram: classes of node types under the
/// identifications made by the edges, and the cocone into them.
struct Colimit {
  Language sum;
  std::map<std::string, TypeMap> cocone;
  /// Members (node, type) of each class, indexed like `sum`, each sorted.
  std::vector<std::vector<std::pair<std::string, std::string>>> members;
};

/// Class names are `sum:<node>.<type>` for the least (node, type) member.
/// Throws ValidationError on invalid diagrams.
Colimit colimit_language(const LanguageDiagram& d);

/// A classification with one covering leg per node.
struct Channel {
  ClassificationPtr core;
  std::map<std::string, Infomorphism> legs;
};

inline constexpr std::size_t kDefaultInstanceCap = 65536;

/// The sum channel: types are the language colimit, instances the
/// edge-compatible tuples of node instances, named `(x_1,...,x_k)` in node
/// order. Throws CapExceeded when the product of node instance counts
/// exceeds `instance_cap`, ValidationError on invalid diagrams.
Channel sum_classification(const ClsDiagram& d, std::size_t instance_cap = kDefaultInstanceCap);

/// Every leg is an infomorphism and every edge commutes on both sides.
/// Defects are localized to (edge, element) or (node, ...). Throws Mismatch
/// when the channel's legs do not match the diagram's nodes.
ValidationResult verify_channel_covers(const Channel& ch, const ClsDiagram& d);

/// The unique infomorphism m: sum.core -> other.core with leg_n ; m equal to
/// other.leg_n for every node. Throws ValidationError when `other` does not
/// cover `d`.
Infomorphism mediating_morphism(const Channel& sum, const Channel& other, const ClsDiagram& d);

}  // namespace ifk
