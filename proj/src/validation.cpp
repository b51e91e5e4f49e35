#include "ifk/validation.hpp"

namespace ifk {

void ValidationResult::append(const ValidationResult& other, const std::string& prefix) {
  for (auto d : other.defects) {
    if (!prefix.empty()) d.subject.insert(d.subject.begin(), prefix);
    defects.push_back(std::move(d));
  }
}

std::string ValidationResult::summary() const {
  if (ok()) return "ok";
  std::string out = std::to_string(defects.size()) + " defect(s)";
  for (const auto& d : defects) {
    out += "\n  " + d.kind + " [";
    for (std::size_t i = 0; i < d.subject.size(); ++i) out += (i ? ", " : "") + d.subject[i];
    out += "]: " + d.message;
  }
  return out;
}

}  // namespace ifk
