// Acceptance run: one PASS or FAIL line per criterion. Exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ifk/cli/bundle.hpp"
#include "ifk/cli/run.hpp"
#include "ifk/error.hpp"
#include "ifk/fca.hpp"
#include "ifk/flow.hpp"
#include "ifk/integration.hpp"
#include "ifk/logics.hpp"
#include "../support/oracles.hpp"

using namespace ifk;
using oracle::Mask;
using oracle::Seq;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kFixtures = IFK_FIXTURES;

TypeMap random_type_map(oracle::Rng& rng, const Language& from, const Language& to) {
  std::vector<std::size_t> m(from.size());
  for (auto& x : m) x = oracle::pick(rng, 0, static_cast<unsigned>(to.size()) - 1);
  return TypeMap(from, to, m);
}

std::string counted(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

Outcome entailment_oracle() {
  oracle::Rng rng(1);
  std::size_t mismatches = 0;
  for (int k = 0; k < 500; ++k) {
    const unsigned n = oracle::pick(rng, 1, 10);
    const auto axioms = oracle::random_axioms(rng, n, 6);
    const Seq q{oracle::random_mask(rng, n), oracle::random_mask(rng, n)};
    const auto t = oracle::theory(oracle::lang(n), axioms);
    mismatches += t.entails(oracle::to(n, q)) != oracle::entails(n, axioms, q);
  }
  return {mismatches == 0, "500 pairs, " + counted(mismatches, "mismatches")};
}

Outcome closure_laws() {
  std::size_t theories = 0, violations = 0;
  for (unsigned n = 0; n <= 3; ++n) {
    const auto l = oracle::lang(n);
    const Mask side = Mask{1} << n;
    std::vector<Seq> all;
    for (Mask a = 0; a < side; ++a)
      for (Mask c = 0; c < side; ++c) all.push_back({a, c});

    auto closed = [&](const std::vector<Seq>& ax) { return oracle::set_of(close(oracle::theory(l, ax)).axioms()); };
    auto check = [&](const std::vector<Seq>& ax, const std::set<Seq>& cl) {
      ++theories;
      for (auto s : ax) violations += !cl.count(s);
      const auto again = oracle::set_of(close(oracle::theory(l, std::vector<Seq>(cl.begin(), cl.end()))).axioms());
      violations += again != cl;
      violations += cl != oracle::closure(n, ax);
    };
    auto subset = [](const std::set<Seq>& a, const std::set<Seq>& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };

    const auto empty = closed({});
    check({}, empty);
    std::vector<std::set<Seq>> single;
    for (auto s : all) {
      single.push_back(closed({s}));
      check({s}, single.back());
      violations += !subset(empty, single.back());
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        const auto both = closed({all[i], all[j]});
        check({all[i], all[j]}, both);
        violations += !subset(single[i], both) || !subset(single[j], both);
      }
  }
  return {violations == 0, counted(theories, "theories") + ", " + counted(violations, "violations")};
}

Outcome tautologies() {
  std::size_t mismatched = 0;
  for (unsigned n = 0; n <= 4; ++n) {
    std::set<Seq> expected;
    for (Mask a = 0; a < (Mask{1} << n); ++a)
      for (Mask c = 0; c < (Mask{1} << n); ++c)
        if (a & c) expected.insert({a, c});
    mismatched += oracle::set_of(close(top_theory(oracle::lang(n))).axioms()) != expected;
  }
  return {mismatched == 0, "sizes 0..4, " + counted(mismatched, "mismatched languages")};
}

struct AdjunctionCounts {
  std::size_t literal = 0, corrected = 0;
};

AdjunctionCounts adjunction_counts() {
  oracle::Rng rng(4);
  AdjunctionCounts v;
  for (int k = 0; k < 200; ++k) {
    const unsigned ns = oracle::pick(rng, 1, 4), nt = oracle::pick(rng, 1, 4);
    const auto ls = oracle::lang(ns), lt = oracle::lang(nt, "u");
    const auto f = random_type_map(rng, ls, lt);
    const auto t = oracle::theory(ls, oracle::random_axioms(rng, ns, 3));
    const auto tp = std::make_shared<const SequentTheory>(oracle::theory(lt, oracle::random_axioms(rng, nt, 3)));
    const auto d = direct_flow(f, t);
    const auto i = inverse_flow(f, tp);
    v.literal += theory_leq(d, *tp) != theory_leq(t, *i);
    v.corrected += theory_leq(*tp, d) != theory_leq(*i, t);
  }
  return v;
}

Outcome flow_adjunction() {
  const auto v = adjunction_counts();
  return {v.literal == 0, "200 triples, " + counted(v.literal, "violations")};
}

Outcome borrowing() {
  oracle::Rng rng(5);
  std::size_t failures = 0;
  for (int k = 0; k < 200; ++k) {
    const auto f = oracle::random_infomorphism(rng, 3, true);
    const auto n = f.source().types().size();
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      for (std::size_t t = 0; t < n; ++t)
        failures += !borrowing_holds(f, {f.source().types(), Bitset::from_mask(n, m)}, t);
  }
  int tries = 0;
  bool found = false;
  while (!found && tries < 10000) {
    ++tries;
    const auto f = oracle::random_infomorphism(rng, 3, false);
    const auto n = f.source().types().size();
    for (Mask m = 0; m < (Mask{1} << n) && !found; ++m)
      for (std::size_t t = 0; t < n && !found; ++t)
        found = !borrowing_holds(f, {f.source().types(), Bitset::from_mask(n, m)}, t);
  }
  return {failures == 0 && found, "200 surjective cases, " + counted(failures, "failures") + ", counterexample " +
                                      (found ? "found after " + counted(static_cast<std::size_t>(tries), "tries") : "not found")};
}

Outcome logic_transport() {
  oracle::Rng rng(6);
  std::size_t violations = 0;
  auto ptr = [](SequentTheory t) { return std::make_shared<const SequentTheory>(std::move(t)); };
  for (int k = 0; k < 200; ++k) {
    const auto f = oracle::random_infomorphism(rng, 3);
    const auto& src = f.source();
    LocalLogic sound(f.source_ptr(),
                     ptr(oracle::theory(src.types(), oracle::axioms_satisfied_by(rng, src, src.instances().all(), 4))),
                     oracle::random_subset(rng, src.instances().size()));
    violations += !is_sound(sound) || !is_sound(logic_direct_image(f, sound));

    const auto& tgt = f.target();
    const auto normal = oracle::random_subset(rng, tgt.instances().size());
    LocalLogic complete(f.target_ptr(), ptr(oracle::theory(tgt.types(), oracle::complete_axioms(tgt, normal))),
                        normal);
    violations += !is_complete(complete) || !is_complete(logic_inverse_image(f, complete));
  }
  return {violations == 0, "200 pairs, " + counted(violations, "violations")};
}

Outcome colimit_universal() {
  oracle::Rng rng(7);
  std::size_t failures = 0;
  for (int k = 0; k < 100; ++k) {
    const auto d = oracle::random_cls_diagram(rng);
    const auto sum = sum_classification(d);
    const auto other = oracle::random_channel_over(rng, sum);
    bool ok = verify_channel_covers(sum, d).ok();
    try {
      const auto m = mediating_morphism(sum, other, d);
      ok = ok && check_infomorphism(m).ok();
      for (const auto& [n, leg] : sum.legs) {
        const auto composite = compose_infomorphisms(leg, m);
        ok = ok && composite.type_map() == other.legs.at(n).type_map() &&
             composite.instance_map() == other.legs.at(n).instance_map();
      }
    } catch (const Error&) {
      ok = false;
    }
    ok = ok && oracle::count_factorizations(sum, other) == std::pair<std::size_t, std::size_t>{1, 1};
    failures += !ok;
  }
  return {failures == 0, "100 diagrams, " + counted(failures, "failures")};
}

Outcome vee_integration() {
  std::ostringstream out, err;
  const int status = cli::run({"integrate", "--system", "vee", "--delta-bound", "1", kFixtures + "/bundle.json"},
                              out, err);
  const bool exact = status == 0 && out.str() == slurp(kFixtures + "/vee_integrate_bound1.json");
  const auto report = json::parse(out.str());
  const json target = {{"ant", {"philosopher"}}, {"con", {"mortal_gr"}}};
  const auto& o2 = report["deltas"]["O2"];
  const bool has = std::find(o2.begin(), o2.end(), target) != o2.end();
  const bool o1_empty = report["deltas"]["O1"].empty();
  std::string detail = "O2 deltas " + std::to_string(o2.size()) + (has ? " including" : " without") +
                       " philosopher |- mortal_gr, O1 deltas " + std::to_string(report["deltas"]["O1"].size()) +
                       ", report " + (exact ? "byte-exact" : "differs from fixture");
  return {has && o1_empty && exact, detail};
}

Outcome polycosmic() {
  const auto bundle = cli::parse_bundle(slurp(kFixtures + "/bundle.json"));
  const auto c = cosmology(unify(bundle.systems.at("clash")));
  const bool fixture = c.pointwise_consistent && !c.monocosmic && c.verdict == ifk::Verdict::polycosmic;
  oracle::Rng rng(9);
  std::size_t violations = 0, mono = 0;
  for (int k = 0; k < 200; ++k) {
    const auto r = cosmology(unify(oracle::random_system(rng)));
    mono += r.monocosmic;
    violations += r.monocosmic && !r.pointwise_consistent;
  }
  return {fixture && violations == 0, std::string("clash ") + to_string(c.verdict) + ", 200 systems (" +
                                          counted(mono, "monocosmic") + "), " + counted(violations, "violations")};
}

Outcome system_closure() {
  oracle::Rng rng(10);
  std::size_t violations = 0, queries = 0;
  for (int k = 0; k < 200; ++k) {
    const auto s = oracle::random_system(rng);
    auto below = s;
    for (auto& [n, t] : below.node_theory) {
      auto ax = t.axioms();
      const auto size = static_cast<unsigned>(t.types().size());
      for (auto a : oracle::random_axioms(rng, size, 1)) ax.push_back(oracle::to(size, a));
      t = SequentTheory(t.types(), ax);
    }
    oracle::propagate_axioms(below);
    if (!system_leq(below, s)) {
      ++violations;
      continue;
    }
    const auto sum = unify(s), sum_below = unify(below), sum_closed = unify(closed_system(s));
    for (const auto& n : s.nodes) {
      const auto& own = s.node_theory.at(n);
      for (const auto& q : bounded_sequents(own.types().size(), 2, std::size_t{1} << 20)) {
        ++queries;
        const bool cl = system_entails_at(sum, n, q);
        violations += own.entails(q) && !cl;                     // increasing
        violations += cl && !system_entails_at(sum_below, n, q);  // monotone
        violations += system_entails_at(sum_closed, n, q) != cl;  // idempotent
      }
    }
  }
  return {violations == 0, "200 systems, " + counted(queries, "queries") + ", " + counted(violations, "violations")};
}

Outcome fca() {
  oracle::Rng rng(11);
  std::size_t mismatches = 0, generator_failures = 0;
  std::vector<ClassificationPtr> cases;
  for (int k = 0; k < 100; ++k)
    cases.push_back(oracle::random_classification(rng, oracle::pick(rng, 0, 5), oracle::pick(rng, 0, 5)));
  const auto clf_a = std::make_shared<const Classification>(
      ClassificationData{"CLF-A",
                         {"aristotle", "civic87"},
                         {"human", "philosopher", "car"},
                         {{"aristotle", "human"}, {"aristotle", "philosopher"}, {"civic87", "car"}}});
  const std::size_t clf_a_count = concepts(*clf_a).size();
  cases.push_back(clf_a);

  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& c = *cases[k];
    if (k < 100) mismatches += oracle::as_masks(concepts(c)) != oracle::brute_concepts(c);
    const auto l = lattice(c);
    for (std::size_t x = 0; x < l.size(); ++x) {
      std::size_t j = l.bottom(), m = l.top();
      l[x].extent.for_each([&](std::size_t i) {
        j = l.join(j, l.index_of_extent(object_concept(c, c.instances().name(i)).extent));
      });
      l[x].intent.for_each([&](std::size_t t) {
        m = l.meet(m, l.index_of_intent(attribute_concept(c, c.types().name(t)).intent));
      });
      generator_failures += j != x || m != x;
    }
  }
  return {mismatches == 0 && clf_a_count == 4 && generator_failures == 0,
          "100 contexts, " + counted(mismatches, "mismatches") + ", CLF-A " + counted(clf_a_count, "concepts") + ", " +
              counted(generator_failures, "generator failures")};
}

Outcome natural_uniqueness() {
  // Theories are enumerated by their model sets, which covers every theory
  // up to closure; soundness and completeness depend on nothing else.
  std::size_t logics = 0, violations = 0;
  for (unsigned ni = 0; ni <= 3; ++ni)
    for (unsigned nt = 0; nt <= 3; ++nt) {
      const Mask states = Mask{1} << nt;
      for (Mask rows = 0; rows < (Mask{1} << (ni * nt)); ++rows) {
        ClassificationData d{"c", {}, {}, {}};
        for (unsigned t = 0; t < nt; ++t) d.types.push_back("t" + std::to_string(t));
        for (unsigned i = 0; i < ni; ++i) {
          d.instances.push_back("i" + std::to_string(i));
          for (unsigned t = 0; t < nt; ++t)
            if (rows >> (i * nt + t) & 1) d.incidence.emplace_back(d.instances.back(), d.types[t]);
        }
        const auto c = std::make_shared<const Classification>(d);
        const auto natural = close(natural_logic(c).theory());
        for (std::uint64_t model_set = 0; model_set < (std::uint64_t{1} << states); ++model_set) {
          std::vector<Seq> ax;
          for (Mask x = 0; x < states; ++x)
            if (!(model_set >> x & 1)) ax.push_back({x, states - 1 - x});
          const auto t = std::make_shared<const SequentTheory>(oracle::theory(c->types(), ax));
          if (!is_sound(LocalLogic(c, t, c->instances().none()))) continue;
          for (Mask nm = 0; nm < (Mask{1} << ni); ++nm) {
            const LocalLogic l(c, t, Bitset::from_mask(ni, nm));
            if (!is_complete(l)) continue;
            ++logics;
            violations += !(close(*t) == natural);
          }
        }
      }
    }
  return {violations == 0 && logics > 0,
          counted(logics, "sound and complete logics") + ", " + counted(violations, "violations")};
}

struct Criterion {
  int id;
  const char* name;
  double seconds_limit;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "entailment oracle equivalence", 30, entailment_oracle},
      {2, "closure laws", 60, closure_laws},
      {3, "tautology characterization", 0, tautologies},
      {4, "flow adjunction", 0, flow_adjunction},
      {5, "borrowing", 0, borrowing},
      {6, "logic transport", 0, logic_transport},
      {7, "colimit universal property", 60, colimit_universal},
      {8, "vee integration", 0, vee_integration},
      {9, "polycosmic detection", 0, polycosmic},
      {10, "system closure laws", 120, system_closure},
      {11, "concept enumeration", 0, fca},
      {12, "natural logic uniqueness", 0, natural_uniqueness},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.seconds_limit == 0 || secs < c.seconds_limit;
    const bool pass = v.pass && in_time;
    failed += !pass;
    char timing[64];
    if (c.seconds_limit > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.seconds_limit);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("%s %2d %s: %s (%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), timing);
    std::fflush(stdout);
    if (c.id == 4) {
      const auto counts = adjunction_counts();
      std::printf("INFO  4 flow adjunction with the target-side order reversed: same 200 triples, %zu violations\n",
                  counts.corrected);
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
