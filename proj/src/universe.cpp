#include "ifk/universe.hpp"

#include <algorithm>
#include <cctype>

#include "ifk/error.hpp"

namespace ifk {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(),
                      [](unsigned char c) { return std::isspace(c) || c < 0x20; });
}

Universe::Universe(std::vector<std::string> ids, std::string_view kind)
    : names_(std::move(ids)), kind_(kind) {
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i])) throw Error("malformed " + kind_ + " identifier '" + names_[i] + "'");
    if (i > 0 && names_[i] == names_[i - 1])
      throw InvalidMap("duplicate " + kind_ + " '" + names_[i] + "'");
    index_.emplace(names_[i], i);
  }
}

std::optional<std::size_t> Universe::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownElement(kind_, std::string(id));
}

Bitset Universe::subset(std::span<const std::string> ids) const {
  Bitset b = none();
  for (const auto& id : ids) b.set(index(id));
  return b;
}

Bitset Universe::subset(std::initializer_list<std::string_view> ids) const {
  Bitset b = none();
  for (auto id : ids) b.set(index(id));
  return b;
}

std::vector<std::string> Universe::names_of(const Bitset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(names_[i]); });
  return out;
}

std::string brace_list(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

}  // namespace ifk
