#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ifk/bitset.hpp"
#include "ifk/universe.hpp"
#include "ifk/validation.hpp"

namespace ifk {

/// Unvalidated classification description, as read from a bundle.
struct ClassificationData {
  std::string name;
  std::vector<std::string> instances;
  std::vector<std::string> types;
  std::vector<std::pair<std::string, std::string>> incidence;
};

/// Defects name the offending element or (instance, type) pair.
ValidationResult validate_classification(const ClassificationData& data);

/// A finite classification: instances, types and the incidence relation
/// between them. Instance and type identifiers live in separate namespaces.
/// Immutable once constructed.
class Classification {
 public:
  Classification() = default;
  /// Throws ValidationError carrying the defects of `validate_classification`.
  explicit Classification(const ClassificationData& data);
  /// Incidence given as one type row per instance, over the given universes.
  Classification(std::string name, Universe instances, Universe types, std::vector<Bitset> rows);

  const std::string& name() const { return name_; }
  const Universe& instances() const { return instances_; }
  const Universe& types() const { return types_; }

  bool incident(std::size_t instance, std::size_t type) const { return rows_[instance].test(type); }
  bool incident(std::string_view instance, std::string_view type) const {
    return incident(instances_.index(instance), types_.index(type));
  }

  /// Types classifying the instance.
  const Bitset& intent(std::size_t instance) const { return rows_[instance]; }
  /// Instances classified by the type.
  const Bitset& type_extent(std::size_t type) const { return cols_[type]; }

  ClassificationData data() const;

  bool operator==(const Classification& o) const {
    return name_ == o.name_ && instances_ == o.instances_ && types_ == o.types_ && rows_ == o.rows_;
  }

 private:
  void build_columns();

  std::string name_;
  Universe instances_;
  Universe types_;
  std::vector<Bitset> rows_;
  std::vector<Bitset> cols_;
};

using ClassificationPtr = std::shared_ptr<const Classification>;

/// Types classifying `instance`. Throws UnknownElement.
std::vector<std::string> intent(const Classification& c, std::string_view instance);
/// Instances classified by every type in `types` (all instances when empty).
Bitset extent(const Classification& c, const Bitset& types);
std::vector<std::string> extent(const Classification& c, const std::vector<std::string>& types);

/// i1 <= i2 iff intent(i1) contains intent(i2).
bool instance_leq(const Classification& c, std::string_view i1, std::string_view i2);

inline constexpr std::size_t kDefaultLiftCap = 4096;

/// Same instances; one type per flat theory (type subset) of `c`, named by its
/// brace list, with (i, T) incident iff T is contained in intent(i).
/// Throws CapExceeded when 2^|types| > cap.
Classification lift_to_theory_classification(const Classification& c,
                                             std::size_t cap = kDefaultLiftCap);

/// A total type function between two languages.
class TypeMap {
 public:
  TypeMap() = default;
  /// Throws InvalidMap if `image` is not total or points outside `target`.
  TypeMap(Language source, Language target, std::vector<std::size_t> image);
  /// Throws InvalidMap on non-total maps, UnknownElement on undeclared names.
  static TypeMap from_names(Language source, Language target,
                            const std::map<std::string, std::string>& names);
  static TypeMap identity(const Language& l);

  const Language& source() const { return source_; }
  const Language& target() const { return target_; }
  std::size_t operator()(std::size_t t) const { return image_[t]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Bitset image_of(const Bitset& s) const;
  Bitset preimage_of(const Bitset& s) const;
  bool is_bijective() const;
  std::map<std::string, std::string> to_names() const;

  /// Apply `this` first, then `next`.
  TypeMap then(const TypeMap& next) const;

  bool operator==(const TypeMap&) const = default;

 private:
  Language source_;
  Language target_;
  std::vector<std::size_t> image_;
};

/// Types forward, instances backward, with the invariance law
/// (instance_map(b) |= t) <=> (b |= type_map(t)).
class Infomorphism {
 public:
  Infomorphism() = default;
  /// Checks totality and endpoint agreement only; invariance is checked by
  /// `check_infomorphism` so violations can be reported as data.
  Infomorphism(std::string name, ClassificationPtr source, ClassificationPtr target,
               TypeMap type_map, std::vector<std::size_t> instance_map);
  static Infomorphism from_names(std::string name, ClassificationPtr source,
                                 ClassificationPtr target,
                                 const std::map<std::string, std::string>& type_map,
                                 const std::map<std::string, std::string>& instance_map);
  static Infomorphism identity(ClassificationPtr c);

  const std::string& name() const { return name_; }
  const Classification& source() const { return *source_; }
  const Classification& target() const { return *target_; }
  const ClassificationPtr& source_ptr() const { return source_; }
  const ClassificationPtr& target_ptr() const { return target_; }
  const TypeMap& type_map() const { return type_map_; }
  /// Target instance -> source instance.
  const std::vector<std::size_t>& instance_map() const { return instance_map_; }
  std::map<std::string, std::string> instance_map_names() const;

  /// Instances b of the target with instance_map(b) in `s`.
  Bitset instance_preimage(const Bitset& source_instances) const;
  /// Image of a set of target instances in the source.
  Bitset instance_image(const Bitset& target_instances) const;
  bool instance_map_surjective() const;

  bool operator==(const Infomorphism& o) const;

 private:
  std::string name_;
  ClassificationPtr source_;
  ClassificationPtr target_;
  TypeMap type_map_;
  std::vector<std::size_t> instance_map_;
};

/// Every violating (target instance, source type) pair, subject
/// {instance, type, side}; side is "source-only" when only the source pair is
/// incident and "target-only" otherwise.
ValidationResult check_infomorphism(const Infomorphism& f);

/// `f` then `g`: types go through f then g, instances come back through g then f.
/// Throws Mismatch unless f.target == g.source.
Infomorphism compose_infomorphisms(const Infomorphism& f, const Infomorphism& g);

}  // namespace ifk
