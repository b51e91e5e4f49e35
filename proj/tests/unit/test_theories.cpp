#include "doctest.h"

#include "ifk/error.hpp"
#include "ifk/theories.hpp"
#include "../support/examples.hpp"
#include "../support/oracles.hpp"

using namespace ifk;
using oracle::Mask;
using oracle::Seq;

TEST_CASE("state_satisfies") {
  auto l = ex::language({"h", "p"});
  CHECK_FALSE(state_satisfies(ex::seq(l, {"h"}, {"p"}), l.subset({"h"})));
  CHECK_FALSE(state_satisfies(ex::seq(l, {}, {}), l.none()));
  for (unsigned n = 1; n <= 4; ++n)
    for (Mask a = 0; a < (1u << n); ++a)
      for (Mask c = 0; c < (1u << n); ++c) {
        if (!(a & c)) continue;
        for (Mask x = 0; x < (1u << n); ++x)
          CHECK(state_satisfies(oracle::to(n, {a, c}), Bitset::from_mask(n, x)));
      }
  CHECK_THROWS_AS(state_satisfies(ex::seq(l, {"h"}, {}), Bitset(3)), Mismatch);
}

TEST_CASE("sequent literals") {
  auto l = ex::language({"human", "mortal", "philosopher"});
  CHECK(parse_sequent("philosopher |- human", l) == ex::seq(l, {"philosopher"}, {"human"}));
  CHECK(parse_sequent("|-", l) == ex::seq(l, {}, {}));
  CHECK(parse_sequent("  human ,mortal|-  ", l) == ex::seq(l, {"human", "mortal"}, {}));
  CHECK(parse_sequent("|- mortal, human", l) == ex::seq(l, {}, {"human", "mortal"}));
  CHECK(format_sequent(l, ex::seq(l, {"philosopher", "human"}, {"mortal"})) == "human, philosopher |- mortal");
  CHECK(format_sequent(l, ex::seq(l, {}, {})) == "|-");
  CHECK_THROWS_AS(parse_sequent("human mortal", l), SyntaxError);
  CHECK_THROWS_AS(parse_sequent("human, |- mortal", l), SyntaxError);
  CHECK_THROWS_AS(parse_sequent("human |- mortal |- x", l), SyntaxError);
  CHECK_THROWS_AS(parse_sequent("robot |- human", l), UnknownElement);
  try {
    parse_sequent("human |- , mortal", l);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.token() == ",");
    CHECK(e.position() == 9);
  }
}

TEST_CASE("is_consistent") {
  auto l = ex::language({"h", "p"});
  CHECK(SequentTheory(l, {}).is_consistent());
  CHECK_FALSE(bottom_theory(l).is_consistent());
  CHECK_FALSE(ex::theory(l, {{{"h"}, {"p"}}, {{"p"}, {}}, {{}, {"h"}}}).is_consistent());
  CHECK(ex::theory(l, {{{"h"}, {"p"}}, {{}, {"h"}}}).is_consistent());
}

TEST_CASE("entails") {
  auto l = ex::language({"h", "p", "q"});
  auto t = ex::theory(l, {{{"h"}, {"p"}}});
  CHECK(t.entails(ex::seq(l, {"h"}, {"h"})));
  CHECK(t.entails(ex::seq(l, {"h", "q"}, {"p", "q"})));
  CHECK_FALSE(t.entails(ex::seq(l, {"p"}, {"h"})));
  CHECK(bottom_theory(l).entails(ex::seq(l, {}, {})));
  CHECK_THROWS_AS(t.entails(oracle::to(2, {1, 2})), Mismatch);
}

TEST_CASE("entailment matches the enumeration oracle up to ten types") {
  oracle::Rng rng(1);
  for (int round = 0; round < 500; ++round) {
    const unsigned n = oracle::pick(rng, 1, 10);
    auto ax = oracle::random_axioms(rng, n, 6);
    Seq q{oracle::random_mask(rng, n), oracle::random_mask(rng, n)};
    auto t = oracle::theory(oracle::lang(n), ax);
    REQUIRE(t.entails(oracle::to(n, q)) == oracle::entails(n, ax, q));
  }
}

TEST_CASE("close") {
  auto h = ex::language({"h"});
  auto c = close(SequentTheory(h, {}));
  REQUIRE(c.axioms().size() == 1);
  CHECK(c.axioms()[0] == ex::seq(h, {"h"}, {"h"}));
  CHECK(close(bottom_theory(ex::language({"a", "b"}))).axioms().size() == 16);
  CHECK_THROWS_AS(close(SequentTheory(oracle::lang(9), {})), CapExceeded);
  CHECK_NOTHROW(close(SequentTheory(oracle::lang(2), {}), 16));
  try {
    close(SequentTheory(oracle::lang(3), {}), 63);
  } catch (const CapExceeded& e) {
    CHECK(e.required() == 64.0);
  }
}

TEST_CASE("closure equals the oracle closure and is a closure operator") {
  for (unsigned n = 0; n <= 3; ++n) {
    auto l = oracle::lang(n);
    const Mask m = 1u << n;
    // every theory of at most two axioms
    std::vector<std::vector<Seq>> family{{}};
    for (Mask a = 0; a < m; ++a)
      for (Mask c = 0; c < m; ++c) family.push_back({{a, c}});
    if (n <= 2) {
      const auto singles = family.size();
      for (std::size_t i = 1; i < singles; ++i)
        for (std::size_t j = i + 1; j < singles; ++j) family.push_back({family[i][0], family[j][0]});
    }
    for (const auto& ax : family) {
      auto t = oracle::theory(l, ax);
      auto cl = close(t);
      auto expect = oracle::closure(n, ax);
      REQUIRE(oracle::set_of(cl.axioms()) == expect);
      for (auto s : ax) CHECK(expect.count(s));               // increasing
      CHECK(close(cl).axioms() == cl.axioms());               // idempotent
      // identity and weakening
      for (Mask t0 = 0; t0 < n; ++t0) CHECK(expect.count({1u << t0, 1u << t0}));
      for (auto s : expect)
        for (Mask g = 0; g < m; ++g) CHECK(expect.count({s.ant | g, s.con | (m - 1 - g)}));
    }
  }
}

TEST_CASE("theory_leq") {
  oracle::Rng rng(3);
  for (int round = 0; round < 200; ++round) {
    const unsigned n = oracle::pick(rng, 1, 3);
    auto l = oracle::lang(n);
    auto a1 = oracle::random_axioms(rng, n, 3), a2 = oracle::random_axioms(rng, n, 3);
    auto t1 = oracle::theory(l, a1), t2 = oracle::theory(l, a2);
    auto c1 = oracle::closure(n, a1), c2 = oracle::closure(n, a2);
    bool contains = std::includes(c1.begin(), c1.end(), c2.begin(), c2.end());
    CHECK(theory_leq(t1, t2) == contains);
    CHECK(theory_leq(t1, t1));
    CHECK(theory_leq(bottom_theory(l), t1));
    CHECK(theory_leq(t1, top_theory(l)));
  }
  CHECK(theory_leq(bottom_theory(oracle::lang(2)), top_theory(oracle::lang(2))));
  CHECK_THROWS_AS(theory_leq(top_theory(oracle::lang(2)), top_theory(oracle::lang(3))), Mismatch);
}

TEST_CASE("top theory entails exactly the tautologies") {
  auto h = ex::language({"h"});
  int entailed = 0;
  for (const auto& s : all_sequents(1)) entailed += top_theory(h).entails(s);
  CHECK(entailed == 1);
  for (unsigned n = 0; n <= 4; ++n) {
    auto cl = close(top_theory(oracle::lang(n)));
    std::set<Seq> expect;
    for (Mask a = 0; a < (1u << n); ++a)
      for (Mask c = 0; c < (1u << n); ++c)
        if (a & c) expect.insert({a, c});
    CHECK(oracle::set_of(cl.axioms()) == expect);
  }
}

TEST_CASE("lot_navigate") {
  auto l = ex::language({"h", "p", "q"});
  auto t = ex::theory(l, {{{"h"}, {"p"}}});
  std::vector<Sequent> A{ex::seq(l, {"p"}, {"q"}), ex::seq(l, {}, {"h"})};
  auto expanded = lot_navigate(t, Expand{A});
  CHECK(expanded.axioms().size() == 3);
  CHECK(lot_navigate(expanded, Contract{A}) == t);
  CHECK(theory_leq(expanded, t));
  auto revised = lot_navigate(t, Revise{{ex::seq(l, {"h"}, {"p"})}, {ex::seq(l, {"q"}, {})}});
  CHECK(revised == ex::theory(l, {{{"q"}, {}}}));
  CHECK_THROWS_AS(lot_navigate(t, Contract{{ex::seq(l, {"q"}, {})}}), UnknownElement);
  CHECK_THROWS_AS(lot_navigate(t, Expand{{oracle::to(2, {1, 2})}}), Mismatch);

  auto hp = ex::language({"h", "p"});
  auto pm = ex::language({"mortal", "person"});
  auto ren = TypeMap::from_names(hp, pm, {{"h", "person"}, {"p", "mortal"}});
  auto renamed = lot_navigate(ex::theory(hp, {{{"h"}, {"p"}}}), Analogy{ren});
  CHECK(renamed == ex::theory(pm, {{{"person"}, {"mortal"}}}));
  auto collapse = TypeMap::from_names(hp, pm, {{"h", "person"}, {"p", "person"}});
  CHECK_THROWS_AS(lot_navigate(ex::theory(hp, {}), Analogy{collapse}), InvalidMap);
}

TEST_CASE("check_theory_morphism") {
  auto l = ex::language({"h", "p"});
  auto t = ex::theory(l, {{{"h"}, {"p"}}});
  CHECK(check_theory_morphism(TypeMap::identity(l), t, t).ok());

  auto x = ex::language({"x"});
  auto fx = TypeMap::from_names(x, l, {{"x", "h"}});
  CHECK(check_theory_morphism(fx, ex::theory(x, {{{"x"}, {"x"}}}), SequentTheory(l, {})).ok());

  auto xy = ex::language({"x", "y"});
  auto f = TypeMap::from_names(xy, l, {{"x", "h"}, {"y", "p"}});
  auto r = check_theory_morphism(f, ex::theory(xy, {{{"x"}, {"y"}}}), SequentTheory(l, {}));
  REQUIRE(r.defects.size() == 1);
  CHECK(r.defects[0].kind == "axiom-not-preserved");
  CHECK(r.defects[0].subject == std::vector<std::string>{"x |- y"});
}

TEST_CASE("flat theories") {
  auto c = ex::clf_a();
  auto cl = flat_closure(*c, FlatTheory::of(c->types(), {"human"}));
  CHECK(c->types().names_of(cl.members) == std::vector<std::string>{"human", "philosopher"});
  CHECK(flat_closure(*c, FlatTheory::of(c->types(), {})).members.none());
  CHECK(flat_entails(*c, FlatTheory::of(c->types(), {"car"}), "car"));
  CHECK_THROWS_AS(flat_entails(*c, FlatTheory::of(ex::language({"car"}), {"car"}), "car"), Mismatch);

  oracle::Rng rng(8);
  for (int round = 0; round < 40; ++round) {
    auto r = oracle::random_classification(rng, oracle::pick(rng, 0, 4), oracle::pick(rng, 1, 5));
    const auto n = r->types().size();
    for (Mask a = 0; a < (1u << n); ++a) {
      FlatTheory A{r->types(), Bitset::from_mask(n, a)};
      auto ca = flat_closure(*r, A);
      CHECK(A.members.is_subset_of(ca.members));
      CHECK(flat_closure(*r, ca) == ca);
      for (Mask b = a; b; b = (b - 1) & a) {  // every subset of a
        FlatTheory B{r->types(), Bitset::from_mask(n, b)};
        CHECK(flat_closure(*r, B).members.is_subset_of(ca.members));
      }
    }
  }
}
