#include "ifk/logics.hpp"

#include <vector>

#include "ifk/error.hpp"

namespace ifk {

LocalLogic::LocalLogic(ClassificationPtr classification, TheoryPtr theory, Bitset normal)
    : classification_(std::move(classification)), theory_(std::move(theory)), normal_(std::move(normal)) {
  if (!classification_ || !theory_) throw Mismatch("logic needs a classification and a theory");
  if (!(theory_->language() == classification_->types()))
    throw Mismatch("logic theory is not over the classification's types");
  if (normal_.size() != classification_->instances().size())
    throw Mismatch("normal set is not over the classification's instances");
  ValidationResult r;
  normal_.for_each([&](std::size_t i) {
    if (!theory_->admits(classification_->intent(i)))
      r.add("abnormal-instance", {classification_->instances().name(i)},
            "normal instance does not satisfy the theory");
  });
  if (!r.ok()) throw ValidationError(std::move(r));
}

NaturalTheory::NaturalTheory(ClassificationPtr c) : c_(std::move(c)) {
  if (!c_) throw Mismatch("natural theory needs a classification");
}

std::optional<State> NaturalTheory::find_model(std::span<const Sequent> extra) const {
  for (std::size_t i = 0; i < c_->instances().size(); ++i) {
    const State& x = c_->intent(i);
    bool ok = true;
    for (const auto& s : extra) {
      check_language(s);
      if (!state_satisfies(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

LocalLogic natural_logic(ClassificationPtr c, std::size_t cap) {
  const NaturalTheory natural(c);
  auto theory = std::make_shared<const SequentTheory>(close(natural, cap));
  Bitset all = c->instances().all();
  return LocalLogic(std::move(c), std::move(theory), std::move(all));
}

LocalLogic natural_logic_virtual(ClassificationPtr c) {
  auto theory = std::make_shared<const NaturalTheory>(c);
  Bitset all = c->instances().all();
  return LocalLogic(std::move(c), std::move(theory), std::move(all));
}

bool is_sound(const LocalLogic& l) {
  const auto& c = l.classification();
  for (std::size_t i = 0; i < c.instances().size(); ++i)
    if (!l.theory().admits(c.intent(i))) return false;
  return true;
}

bool is_complete(const LocalLogic& l) {
  // Complete iff every model of the theory is the intent of a normal instance.
  std::vector<Sequent> excluded;
  l.normal().for_each([&](std::size_t i) { excluded.push_back(state_exclusion(l.classification().intent(i))); });
  return !l.theory().find_model(excluded).has_value();
}

LocalLogic restriction(const LocalLogic& l, std::size_t cap) {
  const auto& c = l.classification();
  const std::size_t n = c.types().size();
  if (sequent_space_size(n) > static_cast<double>(cap)) throw CapExceeded("restriction", sequent_space_size(n), cap);
  std::vector<Sequent> kept;
  for (auto& s : all_sequents(n)) {
    bool everywhere = true;
    for (std::size_t i = 0; i < c.instances().size() && everywhere; ++i) everywhere = state_satisfies(s, c.intent(i));
    if (everywhere && l.theory().entails(s)) kept.push_back(std::move(s));
  }
  auto theory = std::make_shared<const SequentTheory>(c.types(), std::move(kept));
  return LocalLogic(l.classification_ptr(), std::move(theory), c.instances().all());
}

LocalLogic normalize(const LocalLogic& l) {
  const auto& c = l.classification();
  Bitset normal = c.instances().none();
  for (std::size_t i = 0; i < c.instances().size(); ++i)
    if (l.theory().admits(c.intent(i))) normal.set(i);
  return LocalLogic(l.classification_ptr(), l.theory_ptr(), std::move(normal));
}

LocalLogic logic_direct_image(const Infomorphism& f, const LocalLogic& l, std::size_t cap) {
  if (!(l.classification() == f.source())) throw Mismatch("logic is not on the infomorphism's source");
  auto theory = std::make_shared<const SequentTheory>(direct_flow(f.type_map(), l.theory(), cap));
  return LocalLogic(f.target_ptr(), std::move(theory), f.instance_preimage(l.normal()));
}

LocalLogic logic_inverse_image(const Infomorphism& f, const LocalLogic& l) {
  if (!(l.classification() == f.target())) throw Mismatch("logic is not on the infomorphism's target");
  return LocalLogic(f.source_ptr(), inverse_flow(f.type_map(), l.theory_ptr()), f.instance_image(l.normal()));
}

bool logic_leq(const LocalLogic& l1, const LocalLogic& l2, std::size_t cap) {
  if (!(l1.classification() == l2.classification())) throw Mismatch("logics are on different classifications");
  return l2.normal().is_subset_of(l1.normal()) && theory_leq(l1.theory(), l2.theory(), cap);
}

}  // namespace ifk
