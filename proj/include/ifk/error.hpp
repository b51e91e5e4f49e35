#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifk/validation.hpp"

namespace ifk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identifier that is not declared where it is looked up.
class UnknownElement : public Error {
 public:
  UnknownElement(std::string kind, std::string id)
      : Error("unknown " + kind + " '" + id + "'"), kind_(std::move(kind)), id_(std::move(id)) {}
  const std::string& kind() const { return kind_; }
  const std::string& id() const { return id_; }

 private:
  std::string kind_;
  std::string id_;
};

/// Endpoints or languages of two objects do not line up.
class Mismatch : public Error {
 public:
  using Error::Error;
};

/// A map that must be total (or bijective) is not.
class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// A materialization or enumeration would exceed its cap. Never a silent truncation.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string phase, double required, std::size_t cap)
      : Error(phase + ": required size " + format_required(required) + " exceeds cap " +
              std::to_string(cap)),
        phase_(std::move(phase)),
        required_(required),
        cap_(cap) {}
  const std::string& phase() const { return phase_; }
  /// Required size; may exceed the range of size_t, hence double.
  double required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  static std::string format_required(double r) {
    if (r < 1e18) return std::to_string(static_cast<unsigned long long>(r));
    return std::to_string(r);
  }
  std::string phase_;
  double required_;
  std::size_t cap_;
};

/// Construction of a validated value failed; carries the defect list.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationResult result)
      : Error(result.summary()), result_(std::move(result)) {}
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

}  // namespace ifk
