#pragma once

#include <cstddef>
#include <memory>

#include "ifk/classification.hpp"
#include "ifk/flow.hpp"
#include "ifk/theories.hpp"

namespace ifk {

/// A classification, a theory over its types, and the normal instances,
/// whose intents satisfy the theory.
class LocalLogic {
 public:
  /// Throws Mismatch when the theory's language differs from the
  /// classification's types, ValidationError when a normal instance
  /// violates the theory.
  LocalLogic(ClassificationPtr classification, TheoryPtr theory, Bitset normal);

  const Classification& classification() const { return *classification_; }
  const ClassificationPtr& classification_ptr() const { return classification_; }
  const TheoryView& theory() const { return *theory_; }
  const TheoryPtr& theory_ptr() const { return theory_; }
  const Bitset& normal() const { return normal_; }

 private:
  ClassificationPtr classification_;
  TheoryPtr theory_;
  Bitset normal_;
};

/// The theory of everything a classification's instances jointly satisfy,
/// kept virtual: its models are exactly the instance intents.
class NaturalTheory : public TheoryView {
 public:
  explicit NaturalTheory(ClassificationPtr c);
  const Language& language() const override { return c_->types(); }
  std::optional<State> find_model(std::span<const Sequent> extra) const override;

 private:
  ClassificationPtr c_;
};

/// Theory materialized as every sequent satisfied by all instances; all
/// instances normal. Throws CapExceeded when 4^|types| > cap.
LocalLogic natural_logic(ClassificationPtr c, std::size_t cap = kDefaultClosureCap);
/// Same logic with the theory left virtual.
LocalLogic natural_logic_virtual(ClassificationPtr c);

/// Every instance, normal or not, satisfies the theory.
bool is_sound(const LocalLogic& l);
/// Every sequent satisfied by all normal instances is entailed.
bool is_complete(const LocalLogic& l);

/// Sequents satisfied by every instance and entailed by the theory; all
/// instances normal. Throws CapExceeded when 4^|types| > cap.
LocalLogic restriction(const LocalLogic& l, std::size_t cap = kDefaultClosureCap);

/// Same theory; normal = every instance whose intent satisfies it.
LocalLogic normalize(const LocalLogic& l);

/// Along f, on a logic over f.source: direct flow of the theory, normal =
/// target instances mapped into the normal set.
LocalLogic logic_direct_image(const Infomorphism& f, const LocalLogic& l, std::size_t cap = kDefaultClosureCap);
/// Along f, on a logic over f.target: inverse flow of the theory, normal =
/// image of the normal set.
LocalLogic logic_inverse_image(const Infomorphism& f, const LocalLogic& l);

/// Theories ordered by entailment, normal sets by reverse containment.
/// Throws Mismatch when the classifications differ.
bool logic_leq(const LocalLogic& l1, const LocalLogic& l2, std::size_t cap = kDefaultClosureCap);

}  // namespace ifk
