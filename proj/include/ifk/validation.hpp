#pragma once

#include <string>
#include <vector>

namespace ifk {

/// One localized problem found by a checker. `subject` lists the offending
/// elements, outermost first (e.g. edge id, then axiom literal).
struct Defect {
  std::string kind;
  std::vector<std::string> subject;
  std::string message;

  bool operator==(const Defect&) const = default;
};

/// Defects are data, not failures: checkers always return one of these.
struct ValidationResult {
  std::vector<Defect> defects;

  bool ok() const { return defects.empty(); }
  void add(std::string kind, std::vector<std::string> subject, std::string message) {
    defects.push_back({std::move(kind), std::move(subject), std::move(message)});
  }
  void append(const ValidationResult& other, const std::string& prefix = {});
  std::string summary() const;
};

}  // namespace ifk
