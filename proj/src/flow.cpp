#include "ifk/flow.hpp"

#include <vector>

#include "ifk/error.hpp"

namespace ifk {

SequentTheory direct_flow(const TypeMap& f, const TheoryView& t, std::size_t cap) {
  if (!(f.source() == t.language())) throw Mismatch("type map does not start at the theory's language");
  std::vector<Sequent> image;
  for (const auto& axiom : t.presentation(cap)) image.push_back(translate(f, axiom));
  return SequentTheory(f.target(), std::move(image));
}

InverseFlowTheory::InverseFlowTheory(TypeMap f, TheoryPtr target) : f_(std::move(f)), target_(std::move(target)) {
  if (!target_ || !(f_.target() == target_->language()))
    throw Mismatch("type map does not end at the theory's language");
}

std::optional<State> InverseFlowTheory::find_model(std::span<const Sequent> extra) const {
  // A source state f^-1(y) satisfies <G, D> iff y satisfies <f(G), f(D)>.
  std::vector<Sequent> image;
  image.reserve(extra.size());
  for (const auto& s : extra) {
    check_language(s);
    image.push_back(translate(f_, s));
  }
  auto y = target_->find_model(image);
  if (!y) return std::nullopt;
  return f_.preimage_of(*y);
}

std::shared_ptr<const InverseFlowTheory> inverse_flow(const TypeMap& f, TheoryPtr target) {
  return std::make_shared<const InverseFlowTheory>(f, std::move(target));
}

FlatTheory flat_direct_flow(const TypeMap& f, const FlatTheory& ft) {
  if (!(ft.types == f.source())) throw Mismatch("flat theory is not over the map's source");
  return {f.target(), f.image_of(ft.members)};
}

FlatTheory flat_inverse_flow(const Classification& target, const TypeMap& f, const FlatTheory& ft) {
  if (!(f.target() == target.types()) || !(ft.types == target.types()))
    throw Mismatch("flat inverse flow needs the map and theory over the target classification");
  return {f.source(), f.preimage_of(flat_closure(target, ft).members)};
}

bool borrowing_holds(const Infomorphism& f, const FlatTheory& ft, std::size_t type) {
  if (!(ft.types == f.source().types())) throw Mismatch("flat theory is not over the source types");
  if (type >= ft.types.size()) throw UnknownElement("type", std::to_string(type));
  const bool at_source = flat_entails(f.source(), ft, type);
  const bool at_target = flat_entails(f.target(), flat_direct_flow(f.type_map(), ft), f.type_map()(type));
  return at_source == at_target;
}

}  // namespace ifk
