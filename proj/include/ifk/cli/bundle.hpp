#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifk/classification.hpp"
#include "ifk/error.hpp"
#include "ifk/integration.hpp"
#include "ifk/theories.hpp"

namespace ifk::cli {

/// A system as written in a bundle: nodes refer to theories and
/// classifications by name.
struct SystemNodeRef {
  std::string theory;
  std::optional<std::string> classification;
  bool operator==(const SystemNodeRef&) const = default;
};

struct SystemEdgeRef {
  std::string id;
  std::string src;
  std::string dst;
  std::map<std::string, std::string> type_map;
  std::optional<std::map<std::string, std::string>> instance_map;
  bool operator==(const SystemEdgeRef&) const = default;
};

struct SystemDescription {
  std::map<std::string, SystemNodeRef> nodes;
  std::vector<SystemEdgeRef> edges;
  bool operator==(const SystemDescription&) const = default;
};

/// A resolved, validated analysis document.
struct Bundle {
  std::map<std::string, ClassificationPtr> classifications;
  std::map<std::string, SequentTheory> theories;
  std::map<std::string, Infomorphism> infomorphisms;
  std::map<std::string, SystemDescription> system_descriptions;
  std::map<std::string, InformationSystem> systems;

  bool operator==(const Bundle& o) const;
};

class BundleError : public Error {
 public:
  enum class Kind { syntax, schema, dangling_reference, invalid };

  BundleError(Kind kind, std::string message, std::string location, std::string token = {},
              std::size_t line = 0, std::size_t column = 0, ValidationResult defects = {})
      : Error(message), kind_(kind), location_(std::move(location)), token_(std::move(token)), line_(line),
        column_(column), defects_(std::move(defects)) {}

  Kind kind() const { return kind_; }
  /// JSON pointer to the offending value; empty for syntax errors.
  const std::string& location() const { return location_; }
  const std::string& token() const { return token_; }
  /// 1-based; 0 when unknown (non-syntax errors).
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const ValidationResult& defects() const { return defects_; }

 private:
  Kind kind_;
  std::string location_;
  std::string token_;
  std::size_t line_;
  std::size_t column_;
  ValidationResult defects_;
};

std::string to_string(BundleError::Kind k);

/// Parses, resolves and validates a bundle. Throws BundleError.
Bundle parse_bundle(std::string_view text);
/// Canonical JSON text (sorted keys and sets, two-space indent, trailing newline).
std::string serialize_bundle(const Bundle& b);

}  // namespace ifk::cli
