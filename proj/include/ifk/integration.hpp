#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ifk/diagrams.hpp"
#include "ifk/flow.hpp"
#include "ifk/theories.hpp"

namespace ifk {

struct SystemEdge {
  std::string id;
  std::string src;
  std::string dst;
  TypeMap type_map;
  /// dst instance -> src instance; only meaningful when both nodes carry
  /// classifications.
  std::optional<std::map<std::string, std::string>> instance_map;

  bool operator==(const SystemEdge&) const = default;
};

/// An alignment diagram of theories: a shape, a theory per node, optionally
/// a classification per node, and a type function per edge that must be a
/// theory morphism.
struct InformationSystem {
  std::vector<std::string> nodes;
  std::map<std::string, SequentTheory> node_theory;
  std::map<std::string, ClassificationPtr> node_cls;  // absent or null: unpopulated
  std::vector<SystemEdge> edges;

  ShapeGraph shape() const;
  const ClassificationPtr* classification(const std::string& node) const;
  /// Every node has a classification and every edge an instance map.
  bool populated() const;
  LanguageDiagram language_diagram() const;
  /// Throws ValidationError unless populated and valid.
  ClsDiagram cls_diagram() const;

  bool operator==(const InformationSystem& o) const;
};

/// Defects list the failing edge and axiom.
ValidationResult validate_system(const InformationSystem& s);

struct IntegrationCaps {
  /// Maximum number of types in the sum language.
  std::size_t sum_types = 4096;
  /// Maximum candidate sequents examined per node while collecting deltas.
  std::size_t delta_queries = std::size_t{1} << 20;
  /// Instance cap for the sum channel of populated systems.
  std::size_t instances = kDefaultInstanceCap;
};

enum class Verdict { monocosmic, polycosmic, pointwise_inconsistent };
std::string to_string(Verdict v);

/// The unification phases: sum language, and the direct flow of every node
/// theory into it. The union of the images presents the sum theory.
struct SystemSum {
  Colimit language;
  std::map<std::string, SequentTheory> images;
  std::shared_ptr<const SequentTheory> theory;
};

/// Throws ValidationError on invalid systems, CapExceeded when the sum
/// language exceeds caps.sum_types.
SystemSum unify(const InformationSystem& s, const IntegrationCaps& caps = {});

struct Cosmology {
  bool pointwise_consistent = false;
  bool monocosmic = false;
  Verdict verdict = Verdict::pointwise_inconsistent;
};
/// Pointwise inconsistency is decided first; polycosmic only applies to
/// pointwise consistent systems.
Cosmology cosmology(const SystemSum& sum);

struct IntegrationResult {
  SystemSum sum;
  /// Node -> inverse flow of the sum theory along the node's cocone map.
  std::map<std::string, std::shared_ptr<const InverseFlowTheory>> closure_handles;
  Cosmology cosmology;
  /// Node -> sequents with both sides of size <= delta_bound entailed by the
  /// closure handle but not by the node's own theory, canonically ordered.
  std::map<std::string, std::vector<Sequent>> deltas;
  /// Populated systems only: the sum channel and, per node, the normal
  /// instances of the inverse image of the normalized sum logic.
  std::optional<Channel> channel;
  std::map<std::string, Bitset> closure_normal;
};

inline constexpr std::size_t kDefaultDeltaBound = 2;

/// Direct flow to the sum, meet expansion (union of images), inverse flow
/// back; then per-node deltas and the cosmological verdict.
IntegrationResult integrate(const InformationSystem& s, const IntegrationCaps& caps = {},
                            std::size_t delta_bound = kDefaultDeltaBound);

/// Sequents over n types with |ant|, |con| <= bound, canonically ordered.
/// Throws CapExceeded when there are more than `cap`.
std::vector<Sequent> bounded_sequents(std::size_t n, std::size_t bound, std::size_t cap);

/// The sum theory entails the image of q along the node's cocone map.
/// Throws UnknownElement for unknown nodes, Mismatch for out-of-language q.
bool system_entails_at(const InformationSystem& s, const std::string& node, const Sequent& q);
bool system_entails_at(const SystemSum& sum, const std::string& node, const Sequent& q);

bool is_pointwise_consistent(const InformationSystem& s);
bool is_monocosmic(const InformationSystem& s);
bool is_polycosmic(const InformationSystem& s);

/// Pointwise theory_leq. Throws Mismatch unless shapes, node languages and
/// edge maps agree.
bool system_leq(const InformationSystem& s1, const InformationSystem& s2);
/// Every axiom of s2 at every node is entailed by s1's system closure there.
bool system_entails(const InformationSystem& s1, const InformationSystem& s2);

/// The absolute system closure with every node theory materialized (cap per
/// node as in `close`).
InformationSystem closed_system(const InformationSystem& s, std::size_t cap = kDefaultClosureCap);

}  // namespace ifk
