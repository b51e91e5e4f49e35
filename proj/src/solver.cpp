#include "ifk/solver.hpp"

#include <vector>

#include "ifk/error.hpp"

namespace ifk {

namespace {

struct Assignment {
  Bitset holds;     // subset of `assigned`
  Bitset assigned;
};

class Search {
 public:
  Search(std::size_t n, std::vector<const Sequent*> clauses) : n_(n), clauses_(std::move(clauses)) {}

  std::optional<State> run() { return solve({Bitset(n_), Bitset(n_)}); }

 private:
  bool satisfied(const Sequent& c, const Assignment& a) const {
    return c.con.intersects(a.holds) || (c.ant & a.assigned).intersects(a.holds.complement());
  }

  // Assigns forced literals until fixpoint. False on conflict.
  bool propagate(Assignment& a) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Sequent* c : clauses_) {
        if (satisfied(*c, a)) continue;
        Bitset free_pos = c->con - a.assigned;
        Bitset free_neg = c->ant - a.assigned;
        const std::size_t open = free_pos.count() + free_neg.count();
        if (open == 0) return false;
        if (open == 1) {
          if (free_pos.any()) {
            const auto v = free_pos.first();
            a.assigned.set(v);
            a.holds.set(v);
          } else {
            a.assigned.set(free_neg.first());
          }
          changed = true;
        }
      }
    }
    return true;
  }

  std::optional<State> solve(Assignment a) const {
    if (!propagate(a)) return std::nullopt;
    const Sequent* open = nullptr;
    for (const Sequent* c : clauses_)
      if (!satisfied(*c, a)) {
        open = c;
        break;
      }
    if (!open) return a.holds;

    // Branch on the first free variable of the first open clause, trying the
    // polarity that satisfies that clause first.
    Bitset free_pos = open->con - a.assigned;
    Bitset free_neg = open->ant - a.assigned;
    const bool positive = free_pos.any() && (free_neg.none() || free_pos.first() < free_neg.first());
    const std::size_t v = positive ? free_pos.first() : free_neg.first();
    for (bool value : {positive, !positive}) {
      Assignment next = a;
      next.assigned.set(v);
      next.holds.set(v, value);
      if (auto model = solve(std::move(next))) return model;
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::vector<const Sequent*> clauses_;
};

}  // namespace

std::optional<State> find_satisfying_state(std::size_t num_types, std::span<const Sequent> clauses,
                                           std::span<const Sequent> more) {
  std::vector<const Sequent*> all;
  all.reserve(clauses.size() + more.size());
  for (auto span : {clauses, more})
    for (const auto& c : span) {
      if (c.ant.size() != num_types || c.con.size() != num_types)
        throw Mismatch("sequent is not over the solver's language");
      all.push_back(&c);
    }
  return Search(num_types, std::move(all)).run();
}

}  // namespace ifk
