#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ifk/bitset.hpp"

namespace ifk {

/// Identifiers are case-sensitive, non-empty and whitespace-free.
bool is_identifier(std::string_view s);

/// A finite, duplicate-free set of identifiers kept in sorted order; element
/// i of a Bitset over this universe is `name(i)`.
class Universe {
 public:
  Universe() = default;
  /// Sorts the identifiers. Throws InvalidMap on duplicates and Error on
  /// malformed identifiers; use `Universe::check` to get defects instead.
  explicit Universe(std::vector<std::string> ids, std::string_view kind = "element");

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id).has_value(); }
  /// Throws UnknownElement{kind_, id}.
  std::size_t index(std::string_view id) const;

  Bitset none() const { return Bitset(size()); }
  Bitset all() const { return Bitset::full(size()); }
  /// Throws UnknownElement for undeclared ids.
  Bitset subset(std::span<const std::string> ids) const;
  Bitset subset(std::initializer_list<std::string_view> ids) const;
  std::vector<std::string> names_of(const Bitset& s) const;

  const std::string& kind() const { return kind_; }

  bool operator==(const Universe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::string kind_ = "element";
};

/// Languages are plain type sets.
using Language = Universe;

/// "{a,b,c}" over sorted names; "{}" for the empty set.
std::string brace_list(const std::vector<std::string>& names);

}  // namespace ifk
