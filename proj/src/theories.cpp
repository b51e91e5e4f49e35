#include "ifk/theories.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "ifk/error.hpp"
#include "ifk/solver.hpp"

namespace ifk {

Sequent make_sequent(const Language& l, const std::vector<std::string>& ant,
                     const std::vector<std::string>& con) {
  return {l.subset(ant), l.subset(con)};
}

Sequent state_exclusion(const State& x) { return {x, x.complement()}; }

std::string format_sequent(const Language& l, const Sequent& s) {
  auto side = [&](const Bitset& b) {
    std::string out;
    b.for_each([&](std::size_t t) {
      if (!out.empty()) out += ", ";
      out += l.name(t);
    });
    return out;
  };
  std::string ant = side(s.ant), con = side(s.con);
  return (ant.empty() ? "" : ant + " ") + "|-" + (con.empty() ? "" : " " + con);
}

Sequent parse_sequent(std::string_view literal, const Language& l) {
  const auto turnstile = literal.find("|-");
  if (turnstile == std::string_view::npos) throw SyntaxError("missing '|-'", literal.size(), std::string(literal));
  if (literal.find("|-", turnstile + 2) != std::string_view::npos)
    throw SyntaxError("more than one '|-'", literal.find("|-", turnstile + 2), "|-");

  auto side = [&](std::size_t begin, std::size_t end) {
    std::vector<std::string> ids;
    std::string_view text = literal.substr(begin, end - begin);
    auto trim = [](std::string_view v) {
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
      while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
      return v;
    };
    if (trim(text).empty()) return ids;
    std::size_t pos = 0;
    while (true) {
      const auto comma = text.find(',', pos);
      const auto piece = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
      if (piece.empty()) {
        // Point at whatever follows the missing identifier.
        if (comma != std::string_view::npos) throw SyntaxError("empty identifier", begin + comma, ",");
        throw SyntaxError("empty identifier", end, end < literal.size() ? "|-" : "<end>");
      }
      if (!is_identifier(piece)) throw SyntaxError("malformed identifier", begin + pos, std::string(piece));
      ids.emplace_back(piece);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return ids;
  };
  return make_sequent(l, side(0, turnstile), side(turnstile + 2, literal.size()));
}

bool state_satisfies(const Sequent& s, const State& x) {
  if (s.ant.size() != x.size() || s.con.size() != x.size())
    throw Mismatch("sequent and state are over different languages");
  return !(s.ant.is_subset_of(x) && !s.con.intersects(x));
}

// TheoryView

void TheoryView::check_language(const Sequent& s) const {
  if (s.ant.size() != language().size() || s.con.size() != language().size())
    throw Mismatch("sequent is not over the theory's language");
}

bool TheoryView::entails(const Sequent& s) const {
  check_language(s);
  // Refutation: a model where all of ant holds and none of con holds.
  const std::size_t n = language().size();
  std::vector<Sequent> units;
  s.ant.for_each([&](std::size_t t) { units.push_back({Bitset(n), Bitset(n).set(t)}); });
  s.con.for_each([&](std::size_t t) { units.push_back({Bitset(n).set(t), Bitset(n)}); });
  return !find_model(units).has_value();
}

bool TheoryView::admits(const State& x) const {
  if (x.size() != language().size()) throw Mismatch("state is not over the theory's language");
  return !entails(state_exclusion(x));
}

std::vector<State> TheoryView::models(std::size_t cap) const {
  std::vector<State> found;
  std::vector<Sequent> blocked;
  while (auto m = find_model(blocked)) {
    if (found.size() == cap) throw CapExceeded("models", std::ldexp(1.0, int(language().size())), cap);
    blocked.push_back(state_exclusion(*m));
    found.push_back(std::move(*m));
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Sequent> TheoryView::presentation(std::size_t cap) const {
  const std::size_t n = language().size();
  if (n >= 63 || (std::size_t{1} << n) > cap) throw CapExceeded("presentation", std::ldexp(1.0, int(n)), cap);
  const auto ms = models(cap);
  std::vector<Sequent> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    State x = Bitset::from_mask(n, m);
    if (!std::binary_search(ms.begin(), ms.end(), x)) out.push_back(state_exclusion(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// SequentTheory

SequentTheory::SequentTheory(Language types, std::vector<Sequent> axioms)
    : types_(std::move(types)), axioms_(std::move(axioms)) {
  for (const auto& a : axioms_) check_language(a);
  std::sort(axioms_.begin(), axioms_.end());
  axioms_.erase(std::unique(axioms_.begin(), axioms_.end()), axioms_.end());
}

bool SequentTheory::has_axiom(const Sequent& s) const {
  return std::binary_search(axioms_.begin(), axioms_.end(), s);
}

std::optional<State> SequentTheory::find_model(std::span<const Sequent> extra) const {
  return find_satisfying_state(types_.size(), axioms_, extra);
}

SequentTheory top_theory(const Language& types) { return SequentTheory(types, {}); }

SequentTheory bottom_theory(const Language& types) {
  return SequentTheory(types, {Sequent{types.none(), types.none()}});
}

double sequent_space_size(std::size_t n) { return std::ldexp(1.0, static_cast<int>(2 * n)); }

std::vector<Sequent> all_sequents(std::size_t n) {
  if (2 * n >= 63) throw CapExceeded("all_sequents", sequent_space_size(n), std::size_t(-1));
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<Sequent> out;
  out.reserve(side * side);
  for (std::uint64_t a = 0; a < side; ++a)
    for (std::uint64_t c = 0; c < side; ++c) out.push_back({Bitset::from_mask(n, a), Bitset::from_mask(n, c)});
  std::sort(out.begin(), out.end());
  return out;
}

SequentTheory close(const TheoryView& t, std::size_t cap) {
  const std::size_t n = t.language().size();
  if (sequent_space_size(n) > static_cast<double>(cap)) throw CapExceeded("close", sequent_space_size(n), cap);
  std::vector<Sequent> closed;
  for (auto& s : all_sequents(n))
    if (t.entails(s)) closed.push_back(std::move(s));
  return SequentTheory(t.language(), std::move(closed));
}

bool theory_leq(const TheoryView& t1, const TheoryView& t2, std::size_t cap) {
  if (!(t1.language() == t2.language())) throw Mismatch("theories are over different languages");
  for (const auto& axiom : t2.presentation(cap))
    if (!t1.entails(axiom)) return false;
  return true;
}

Sequent translate(const TypeMap& f, const Sequent& s) {
  if (s.ant.size() != f.source().size()) throw Mismatch("sequent is not over the map's source language");
  return {f.image_of(s.ant), f.image_of(s.con)};
}

SequentTheory lot_navigate(const SequentTheory& t, const LotMove& move) {
  const Language& l = t.types();
  auto contract = [&](std::vector<Sequent> axioms, const std::vector<Sequent>& remove) {
    for (const auto& r : remove) {
      auto it = std::find(axioms.begin(), axioms.end(), r);
      if (r.ant.size() != l.size() || r.con.size() != l.size())
        throw Mismatch("contracted axiom is not over the theory's language");
      if (it == axioms.end()) throw UnknownElement("axiom", format_sequent(l, r));
      axioms.erase(it);
    }
    return axioms;
  };
  auto expand = [&](std::vector<Sequent> axioms, const std::vector<Sequent>& add) {
    for (const auto& a : add) {
      if (a.ant.size() != l.size() || a.con.size() != l.size())
        throw Mismatch("expansion axiom is not over the theory's language");
      axioms.push_back(a);
    }
    return axioms;
  };

  return std::visit(
      [&](const auto& m) -> SequentTheory {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Contract>) {
          return SequentTheory(l, contract(t.axioms(), m.axioms));
        } else if constexpr (std::is_same_v<M, Expand>) {
          return SequentTheory(l, expand(t.axioms(), m.axioms));
        } else if constexpr (std::is_same_v<M, Revise>) {
          return SequentTheory(l, expand(contract(t.axioms(), m.remove), m.add));
        } else {
          if (!(m.renaming.source() == l)) throw Mismatch("analogy map does not start at the theory's types");
          if (!m.renaming.is_bijective()) throw InvalidMap("analogy map is not a bijection");
          std::vector<Sequent> renamed;
          for (const auto& a : t.axioms()) renamed.push_back(translate(m.renaming, a));
          return SequentTheory(m.renaming.target(), std::move(renamed));
        }
      },
      move);
}

ValidationResult check_theory_morphism(const TypeMap& f, const TheoryView& t1, const TheoryView& t2,
                                       std::size_t cap) {
  if (!(f.source() == t1.language()) || !(f.target() == t2.language()))
    throw Mismatch("type map does not run between the theories' languages");
  ValidationResult r;
  for (const auto& axiom : t1.presentation(cap)) {
    const Sequent image = translate(f, axiom);
    if (!t2.entails(image))
      r.add("axiom-not-preserved", {format_sequent(t1.language(), axiom)},
            "image '" + format_sequent(t2.language(), image) + "' is not entailed by the target theory");
  }
  return r;
}

bool flat_entails(const Classification& c, const FlatTheory& ft, std::size_t type) {
  if (!(ft.types == c.types())) throw Mismatch("flat theory is not over the classification's types");
  return extent(c, ft.members).is_subset_of(c.type_extent(type));
}

bool flat_entails(const Classification& c, const FlatTheory& ft, std::string_view type) {
  return flat_entails(c, ft, c.types().index(type));
}

FlatTheory flat_closure(const Classification& c, const FlatTheory& ft) {
  if (!(ft.types == c.types())) throw Mismatch("flat theory is not over the classification's types");
  const Bitset ext = extent(c, ft.members);
  FlatTheory out{ft.types, ft.types.none()};
  for (std::size_t t = 0; t < c.types().size(); ++t)
    if (ext.is_subset_of(c.type_extent(t))) out.members.set(t);
  return out;
}

}  // namespace ifk
