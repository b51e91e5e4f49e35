#include "ifk/integration.hpp"

#include <algorithm>
#include <cmath>

#include "ifk/error.hpp"
#include "ifk/logics.hpp"

namespace ifk {

ShapeGraph InformationSystem::shape() const {
  ShapeGraph g{nodes, {}};
  for (const auto& e : edges) g.edges.push_back({e.id, e.src, e.dst});
  return g;
}

const ClassificationPtr* InformationSystem::classification(const std::string& node) const {
  auto it = node_cls.find(node);
  return it == node_cls.end() || !it->second ? nullptr : &it->second;
}

bool InformationSystem::populated() const {
  for (const auto& n : nodes)
    if (!classification(n)) return false;
  return std::all_of(edges.begin(), edges.end(), [](const SystemEdge& e) { return e.instance_map.has_value(); });
}

LanguageDiagram InformationSystem::language_diagram() const {
  LanguageDiagram d{shape(), {}, {}};
  for (const auto& [n, t] : node_theory) d.node_language.emplace(n, t.types());
  for (const auto& e : edges) d.edge_map.emplace(e.id, e.type_map);
  return d;
}

ClsDiagram InformationSystem::cls_diagram() const {
  if (!populated()) {
    ValidationResult r;
    r.add("unpopulated", {}, "every node needs a classification and every edge an instance map");
    throw ValidationError(std::move(r));
  }
  ClsDiagram d{shape(), {}, {}};
  for (const auto& n : nodes) d.node_cls.emplace(n, *classification(n));
  for (const auto& e : edges)
    d.edge_info.emplace(e.id, Infomorphism::from_names(e.id, *classification(e.src), *classification(e.dst),
                                                       e.type_map.to_names(), *e.instance_map));
  if (auto r = d.validate(); !r.ok()) throw ValidationError(std::move(r));
  return d;
}

bool InformationSystem::operator==(const InformationSystem& o) const {
  if (nodes != o.nodes || node_theory != o.node_theory || edges != o.edges) return false;
  for (const auto& n : nodes) {
    auto a = classification(n), b = o.classification(n);
    if (!a != !b) return false;
    if (a && !(**a == **b)) return false;
  }
  return true;
}

ValidationResult validate_system(const InformationSystem& s) {
  ValidationResult r = s.shape().validate();
  if (!r.ok()) return r;
  for (const auto& n : s.nodes) {
    auto t = s.node_theory.find(n);
    if (t == s.node_theory.end()) {
      r.add("missing-theory", {n}, "node has no theory");
      continue;
    }
    if (auto c = s.classification(n); c && !((*c)->types() == t->second.types()))
      r.add("classification-language-mismatch", {n}, "classification types differ from the theory's types");
  }
  if (!r.ok()) return r;

  for (const auto& e : s.edges) {
    const auto& src = s.node_theory.at(e.src);
    const auto& dst = s.node_theory.at(e.dst);
    if (!(e.type_map.source() == src.types()) || !(e.type_map.target() == dst.types())) {
      r.add("edge-endpoint-mismatch", {e.id}, "type map does not run between the endpoint theories' types");
      continue;
    }
    r.append(check_theory_morphism(e.type_map, src, dst), e.id);

    if (!e.instance_map) continue;
    auto cs = s.classification(e.src), cd = s.classification(e.dst);
    if (!cs || !cd) {
      r.add("instance-map-without-classifications", {e.id}, "instance map given but an endpoint is unpopulated");
      continue;
    }
    try {
      auto f = Infomorphism::from_names(e.id, *cs, *cd, e.type_map.to_names(), *e.instance_map);
      r.append(check_infomorphism(f), e.id);
    } catch (const Error& err) {
      r.add("bad-instance-map", {e.id}, err.what());
    }
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::monocosmic: return "monocosmic";
    case Verdict::polycosmic: return "polycosmic";
    case Verdict::pointwise_inconsistent: return "pointwise-inconsistent";
  }
  return "?";
}

SystemSum unify(const InformationSystem& s, const IntegrationCaps& caps) {
  if (auto r = validate_system(s); !r.ok()) throw ValidationError(std::move(r));
  SystemSum sum;
  sum.language = colimit_language(s.language_diagram());
  if (sum.language.sum.size() > caps.sum_types)
    throw CapExceeded("sum language", static_cast<double>(sum.language.sum.size()), caps.sum_types);

  std::vector<Sequent> all;
  for (const auto& n : s.nodes) {
    auto image = direct_flow(sum.language.cocone.at(n), s.node_theory.at(n));
    all.insert(all.end(), image.axioms().begin(), image.axioms().end());
    sum.images.emplace(n, std::move(image));
  }
  sum.theory = std::make_shared<const SequentTheory>(sum.language.sum, std::move(all));
  return sum;
}

std::vector<Sequent> bounded_sequents(std::size_t n, std::size_t bound, std::size_t cap) {
  double sides_count = 0, binom = 1;
  for (std::size_t i = 0; i <= std::min(bound, n); ++i) {
    sides_count += binom;
    binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  if (sides_count * sides_count > static_cast<double>(cap))
    throw CapExceeded("delta enumeration", sides_count * sides_count, cap);

  // Subsets of size <= bound, each generated once by extending with a
  // larger index than its current maximum.
  std::vector<Bitset> sides{Bitset(n)};
  std::vector<std::size_t> next_from{0};
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (sides[k].count() == bound) continue;
    for (std::size_t t = next_from[k]; t < n; ++t) {
      sides.push_back(Bitset(sides[k]).set(t));
      next_from.push_back(t + 1);
    }
  }
  std::vector<Sequent> out;
  out.reserve(sides.size() * sides.size());
  for (const auto& a : sides)
    for (const auto& c : sides) out.push_back({a, c});
  std::sort(out.begin(), out.end());
  return out;
}

Cosmology cosmology(const SystemSum& sum) {
  Cosmology c;
  c.pointwise_consistent = std::all_of(sum.images.begin(), sum.images.end(),
                                       [](const auto& kv) { return kv.second.is_consistent(); });
  c.monocosmic = sum.theory->is_consistent();
  c.verdict = !c.pointwise_consistent ? Verdict::pointwise_inconsistent
              : c.monocosmic          ? Verdict::monocosmic
                                      : Verdict::polycosmic;
  return c;
}

IntegrationResult integrate(const InformationSystem& s, const IntegrationCaps& caps, std::size_t delta_bound) {
  IntegrationResult out;
  out.sum = unify(s, caps);

  out.cosmology = cosmology(out.sum);

  for (const auto& n : s.nodes) {
    auto handle = inverse_flow(out.sum.language.cocone.at(n), out.sum.theory);
    const auto& own = s.node_theory.at(n);
    std::vector<Sequent> delta;
    for (auto& q : bounded_sequents(own.types().size(), delta_bound, caps.delta_queries))
      if (handle->entails(q) && !own.entails(q)) delta.push_back(std::move(q));
    out.deltas.emplace(n, std::move(delta));
    out.closure_handles.emplace(n, std::move(handle));
  }

  if (s.populated()) {
    out.channel = sum_classification(s.cls_diagram(), caps.instances);
    const LocalLogic sum_logic =
        normalize(LocalLogic(out.channel->core, out.sum.theory, out.channel->core->instances().none()));
    for (const auto& n : s.nodes)
      out.closure_normal.emplace(n, logic_inverse_image(out.channel->legs.at(n), sum_logic).normal());
  }
  return out;
}

bool system_entails_at(const SystemSum& sum, const std::string& node, const Sequent& q) {
  auto it = sum.language.cocone.find(node);
  if (it == sum.language.cocone.end()) throw UnknownElement("node", node);
  return sum.theory->entails(translate(it->second, q));
}

bool system_entails_at(const InformationSystem& s, const std::string& node, const Sequent& q) {
  if (!s.node_theory.count(node)) throw UnknownElement("node", node);
  return system_entails_at(unify(s), node, q);
}

bool is_pointwise_consistent(const InformationSystem& s) { return cosmology(unify(s)).pointwise_consistent; }

bool is_monocosmic(const InformationSystem& s) { return unify(s).theory->is_consistent(); }

bool is_polycosmic(const InformationSystem& s) { return cosmology(unify(s)).verdict == Verdict::polycosmic; }

namespace {

void require_same_frame(const InformationSystem& a, const InformationSystem& b) {
  if (a.nodes != b.nodes) throw Mismatch("systems have different nodes");
  for (const auto& n : a.nodes) {
    auto x = a.node_theory.find(n), y = b.node_theory.find(n);
    if (x == a.node_theory.end() || y == b.node_theory.end() || !(x->second.types() == y->second.types()))
      throw Mismatch("systems disagree on the language of node '" + n + "'");
  }
  if (a.edges.size() != b.edges.size()) throw Mismatch("systems have different edges");
  for (std::size_t k = 0; k < a.edges.size(); ++k) {
    const auto &e = a.edges[k], &f = b.edges[k];
    if (e.id != f.id || e.src != f.src || e.dst != f.dst || !(e.type_map == f.type_map))
      throw Mismatch("systems disagree on edge '" + e.id + "'");
  }
}

}  // namespace

bool system_leq(const InformationSystem& s1, const InformationSystem& s2) {
  require_same_frame(s1, s2);
  for (const auto& n : s1.nodes)
    if (!theory_leq(s1.node_theory.at(n), s2.node_theory.at(n))) return false;
  return true;
}

bool system_entails(const InformationSystem& s1, const InformationSystem& s2) {
  require_same_frame(s1, s2);
  const auto sum = unify(s1);
  for (const auto& n : s2.nodes)
    for (const auto& q : s2.node_theory.at(n).axioms())
      if (!system_entails_at(sum, n, q)) return false;
  return true;
}

InformationSystem closed_system(const InformationSystem& s, std::size_t cap) {
  const auto sum = unify(s);
  InformationSystem out = s;
  for (const auto& n : s.nodes) {
    InverseFlowTheory handle(sum.language.cocone.at(n), sum.theory);
    out.node_theory[n] = close(handle, cap);
  }
  return out;
}

}  // namespace ifk
