#pragma once

#include <cstddef>
#include <memory>

#include "ifk/classification.hpp"
#include "ifk/theories.hpp"

namespace ifk {

/// Direct flow: the image of the theory's axioms (as presented under `cap`)
/// along `f`. Throws Mismatch unless f starts at t's language.
SequentTheory direct_flow(const TypeMap& f, const TheoryView& t, std::size_t cap = kDefaultClosureCap);

/// Inverse flow of a target theory: closure, then inverse image. Virtual:
/// it entails <G, D> iff the target entails <f(G), f(D)>, and its models are
/// the inverse images of the target's models.
class InverseFlowTheory : public TheoryView {
 public:
  /// Throws Mismatch unless f ends at the target theory's language.
  InverseFlowTheory(TypeMap f, TheoryPtr target);

  const Language& language() const override { return f_.source(); }
  std::optional<State> find_model(std::span<const Sequent> extra) const override;

  const TypeMap& map() const { return f_; }
  const TheoryView& target() const { return *target_; }

 private:
  TypeMap f_;
  TheoryPtr target_;
};

std::shared_ptr<const InverseFlowTheory> inverse_flow(const TypeMap& f, TheoryPtr target);

FlatTheory flat_direct_flow(const TypeMap& f, const FlatTheory& ft);
/// f^-1 of the flat closure of `ft` in the target classification.
FlatTheory flat_inverse_flow(const Classification& target, const TypeMap& f, const FlatTheory& ft);

/// Whether `ft` entails `type` at the source exactly when the direct flow of
/// `ft` entails its image at the target. Always true when the instance map is
/// surjective.
bool borrowing_holds(const Infomorphism& f, const FlatTheory& ft, std::size_t type);

}  // namespace ifk
