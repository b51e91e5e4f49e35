#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifk/bitset.hpp"
#include "ifk/classification.hpp"
#include "ifk/universe.hpp"
#include "ifk/validation.hpp"

namespace ifk {

/// A possible instance intent: the set of types that hold.
using State = Bitset;

/// <antecedent, consequent> over some language: "if every antecedent type
/// holds, some consequent type holds". Both sides are bitsets over the same
/// language, which makes a sequent canonical by construction.
struct Sequent {
  Bitset ant;
  Bitset con;

  std::size_t language_size() const { return ant.size(); }
  auto operator<=>(const Sequent&) const = default;
  bool operator==(const Sequent&) const = default;
};

/// Throws UnknownElement for types outside `l`.
Sequent make_sequent(const Language& l, const std::vector<std::string>& ant,
                     const std::vector<std::string>& con);
/// The sequent refuted by exactly one state, `x`: <x, complement of x>.
Sequent state_exclusion(const State& x);

/// `ant_1, ..., ant_m |- con_1, ..., con_n`, either side possibly empty.
std::string format_sequent(const Language& l, const Sequent& s);
/// Throws SyntaxError on malformed literals and UnknownElement on types
/// outside `l`.
Sequent parse_sequent(std::string_view literal, const Language& l);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string message, std::size_t position, std::string token)
      : std::runtime_error(message + " at position " + std::to_string(position) + " near '" + token + "'"),
        position_(position), token_(std::move(token)) {}
  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

/// True iff NOT (ant within x AND con disjoint from x). Throws Mismatch when
/// the sequent and state are over different languages.
bool state_satisfies(const Sequent& s, const State& x);

inline constexpr std::size_t kDefaultClosureCap = 65536;

/// Anything that answers entailment queries over a fixed language. The single
/// primitive is `find_model`; entailment, consistency and admission of states
/// are refutation queries on top of it. Closed theories over a finite
/// language correspond one-to-one to their sets of models, which is what
/// makes this sufficient.
class TheoryView {
 public:
  virtual ~TheoryView() = default;

  virtual const Language& language() const = 0;

  /// Some state satisfying every sequent of the theory and every sequent in
  /// `extra`, or nullopt if none exists. Deterministic.
  virtual std::optional<State> find_model(std::span<const Sequent> extra) const = 0;

  /// Sequents whose closure is this theory's closure. Concrete theories
  /// return their axioms; virtual ones return the exclusion of every
  /// non-model state. Throws CapExceeded when 2^|language| > cap.
  virtual std::vector<Sequent> presentation(std::size_t cap = kDefaultClosureCap) const;

  bool entails(const Sequent& s) const;
  bool is_consistent() const { return find_model({}).has_value(); }
  /// Whether `x` satisfies every sequent the theory entails.
  bool admits(const State& x) const;
  /// All models, sorted. Throws CapExceeded when there are more than `cap`.
  std::vector<State> models(std::size_t cap = kDefaultClosureCap) const;

 protected:
  void check_language(const Sequent& s) const;
};

using TheoryPtr = std::shared_ptr<const TheoryView>;

/// A finite axiom set over a type set. Axioms are kept sorted and unique, so
/// equal theories have equal representations.
class SequentTheory : public TheoryView {
 public:
  SequentTheory() = default;
  /// Throws Mismatch if an axiom is over a different-sized language.
  SequentTheory(Language types, std::vector<Sequent> axioms);

  const Language& language() const override { return types_; }
  const Language& types() const { return types_; }
  const std::vector<Sequent>& axioms() const { return axioms_; }
  bool has_axiom(const Sequent& s) const;

  std::optional<State> find_model(std::span<const Sequent> extra) const override;
  std::vector<Sequent> presentation(std::size_t) const override { return axioms_; }

  bool operator==(const SequentTheory& o) const { return types_ == o.types_ && axioms_ == o.axioms_; }

 private:
  Language types_;
  std::vector<Sequent> axioms_;
};

/// Free functions mirroring the member queries.
inline bool entails(const TheoryView& t, const Sequent& s) { return t.entails(s); }
inline bool is_consistent(const TheoryView& t) { return t.is_consistent(); }

/// Empty axiom set: its closure is exactly the tautologies.
SequentTheory top_theory(const Language& types);
/// Single axiom <{}, {}>: inconsistent, its closure is every sequent.
SequentTheory bottom_theory(const Language& types);

/// Every sequent over the language entailed by `t`. Throws CapExceeded
/// (the closure stays virtual) when 4^|language| > cap.
SequentTheory close(const TheoryView& t, std::size_t cap = kDefaultClosureCap);

/// t1 <= t2 iff every axiom of t2 is a theorem of t1 (t1 is more
/// specialized). Virtual right-hand sides are presented under `cap`.
/// Throws Mismatch on different languages.
bool theory_leq(const TheoryView& t1, const TheoryView& t2, std::size_t cap = kDefaultClosureCap);

/// Number of sequents over a language of n types, 4^n, as a double so the
/// cap error can report sizes beyond size_t.
double sequent_space_size(std::size_t n);
/// All 4^n sequents over n types in canonical order. Caller enforces caps.
std::vector<Sequent> all_sequents(std::size_t n);

// Lattice-of-theories navigation.

struct Contract {
  std::vector<Sequent> axioms;
};
struct Expand {
  std::vector<Sequent> axioms;
};
/// Contraction by `remove`, then expansion by `add`.
struct Revise {
  std::vector<Sequent> remove;
  std::vector<Sequent> add;
};
/// Systematic renaming along a bijection of type sets.
struct Analogy {
  TypeMap renaming;
};
using LotMove = std::variant<Contract, Expand, Revise, Analogy>;

/// Throws UnknownElement for contracted axioms not in `t`, Mismatch for
/// out-of-language expansions, InvalidMap for non-bijective analogies.
SequentTheory lot_navigate(const SequentTheory& t, const LotMove& move);

/// Image of a sequent: direct image on both sides.
Sequent translate(const TypeMap& f, const Sequent& s);

/// Ok iff `t2` entails the image of every axiom of `t1` (as presented under
/// `cap`); one defect per failing axiom.
ValidationResult check_theory_morphism(const TypeMap& f, const TheoryView& t1, const TheoryView& t2,
                                       std::size_t cap = kDefaultClosureCap);

/// A flat theory: a plain subset of the types of a classification.
struct FlatTheory {
  Language types;
  Bitset members;

  static FlatTheory of(const Language& types, const std::vector<std::string>& members) {
    return {types, types.subset(members)};
  }
  bool operator==(const FlatTheory&) const = default;
};

/// extent(members) is contained in extent({type}). Throws Mismatch when the
/// flat theory is not over c's types.
bool flat_entails(const Classification& c, const FlatTheory& ft, std::size_t type);
bool flat_entails(const Classification& c, const FlatTheory& ft, std::string_view type);
/// All types entailed by `ft`.
FlatTheory flat_closure(const Classification& c, const FlatTheory& ft);

}  // namespace ifk
