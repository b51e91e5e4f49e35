#include "ifk/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ifk/error.hpp"

namespace ifk {

ValidationResult ShapeGraph::validate() const {
  ValidationResult r;
  std::set<std::string> declared;
  for (const auto& n : nodes) {
    if (!is_identifier(n)) r.add("malformed-node", {n}, "malformed node identifier");
    else if (!declared.insert(n).second) r.add("duplicate-node", {n}, "duplicate node");
  }
  std::set<std::string> ids;
  for (const auto& e : edges) {
    if (!is_identifier(e.id)) r.add("malformed-edge", {e.id}, "malformed edge identifier");
    else if (!ids.insert(e.id).second) r.add("duplicate-edge", {e.id}, "duplicate edge");
    for (const auto* end : {&e.src, &e.dst})
      if (!declared.count(*end)) r.add("dangling-edge", {e.id, *end}, "edge endpoint is not a declared node");
  }
  return r;
}

ValidationResult LanguageDiagram::validate() const {
  ValidationResult r = shape.validate();
  for (const auto& n : shape.nodes)
    if (!node_language.count(n)) r.add("missing-language", {n}, "node has no language");
  for (const auto& e : shape.edges) {
    auto it = edge_map.find(e.id);
    if (it == edge_map.end()) {
      r.add("missing-edge-map", {e.id}, "edge has no type map");
      continue;
    }
    auto s = node_language.find(e.src), t = node_language.find(e.dst);
    if (s == node_language.end() || t == node_language.end()) continue;
    if (!(it->second.source() == s->second) || !(it->second.target() == t->second))
      r.add("edge-endpoint-mismatch", {e.id}, "type map does not run between the endpoint languages");
  }
  return r;
}

ValidationResult ClsDiagram::validate() const {
  ValidationResult r = shape.validate();
  for (const auto& n : shape.nodes)
    if (!node_cls.count(n) || !node_cls.at(n)) r.add("missing-classification", {n}, "node has no classification");
  for (const auto& e : shape.edges) {
    auto it = edge_info.find(e.id);
    if (it == edge_info.end()) {
      r.add("missing-edge-infomorphism", {e.id}, "edge has no infomorphism");
      continue;
    }
    auto s = node_cls.find(e.src), t = node_cls.find(e.dst);
    if (s == node_cls.end() || t == node_cls.end() || !s->second || !t->second) continue;
    if (!(it->second.source() == *s->second) || !(it->second.target() == *t->second)) {
      r.add("edge-endpoint-mismatch", {e.id}, "infomorphism does not run between the endpoint classifications");
      continue;
    }
    r.append(check_infomorphism(it->second), e.id);
  }
  return r;
}

LanguageDiagram ClsDiagram::language_diagram() const {
  LanguageDiagram d{shape, {}, {}};
  for (const auto& [n, c] : node_cls)
    if (c) d.node_language.emplace(n, c->types());
  for (const auto& [e, f] : edge_info) d.edge_map.emplace(e, f.type_map());
  return d;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller index stays the root, so roots are least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::string> sorted_nodes(const ShapeGraph& g) {
  std::vector<std::string> nodes = g.nodes;
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

Colimit colimit_language(const LanguageDiagram& d) {
  if (auto r = d.validate(); !r.ok()) throw ValidationError(std::move(r));

  // Disjoint union laid out in (node, type) order, so index order is the
  // lexicographic order used for class representatives.
  const auto nodes = sorted_nodes(d.shape);
  std::map<std::string, std::size_t> offset;
  std::size_t total = 0;
  for (const auto& n : nodes) {
    offset[n] = total;
    total += d.node_language.at(n).size();
  }
  UnionFind uf(total);
  for (const auto& e : d.shape.edges) {
    const auto& f = d.edge_map.at(e.id);
    for (std::size_t t = 0; t < f.source().size(); ++t) uf.unite(offset[e.src] + t, offset[e.dst] + f(t));
  }

  std::map<std::size_t, std::vector<std::pair<std::string, std::string>>> by_root;
  for (const auto& n : nodes) {
    const auto& l = d.node_language.at(n);
    for (std::size_t t = 0; t < l.size(); ++t) by_root[uf.find(offset[n] + t)].emplace_back(n, l.name(t));
  }
  std::vector<std::string> class_names;
  std::map<std::size_t, std::string> root_name;
  for (const auto& [root, members] : by_root) {
    const auto& [n, t] = members.front();
    root_name[root] = "sum:" + n + "." + t;
    class_names.push_back(root_name[root]);
  }
  {
    auto sorted = class_names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("colimit class names collide; node or type identifiers contain '.' ambiguously");
  }

  Colimit out;
  out.sum = Language(class_names, "type");
  out.members.resize(out.sum.size());
  for (auto& [root, members] : by_root) out.members[out.sum.index(root_name[root])] = std::move(members);
  for (const auto& n : nodes) {
    const auto& l = d.node_language.at(n);
    std::vector<std::size_t> image(l.size());
    for (std::size_t t = 0; t < l.size(); ++t) image[t] = out.sum.index(root_name[uf.find(offset[n] + t)]);
    out.cocone.emplace(n, TypeMap(l, out.sum, std::move(image)));
  }
  return out;
}

Channel sum_classification(const ClsDiagram& d, std::size_t instance_cap) {
  if (auto r = d.validate(); !r.ok()) throw ValidationError(std::move(r));
  const auto nodes = sorted_nodes(d.shape);

  double product = 1;
  for (const auto& n : nodes) product *= static_cast<double>(d.node_cls.at(n)->instances().size());
  if (product > static_cast<double>(instance_cap)) throw CapExceeded("sum_classification", product, instance_cap);

  const Colimit colimit = colimit_language(d.language_diagram());
  std::map<std::string, std::size_t> position;
  for (std::size_t k = 0; k < nodes.size(); ++k) position[nodes[k]] = k;

  // Edges whose constraint can be checked once node k is assigned: both
  // endpoints at positions <= k.
  std::vector<std::vector<const ShapeEdge*>> ready(nodes.size());
  for (const auto& e : d.shape.edges) ready[std::max(position[e.src], position[e.dst])].push_back(&e);

  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> tuple(nodes.size());
  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == nodes.size()) {
      tuples.push_back(tuple);
      return;
    }
    for (std::size_t x = 0; x < d.node_cls.at(nodes[k])->instances().size(); ++x) {
      tuple[k] = x;
      bool ok = true;
      for (const ShapeEdge* e : ready[k]) {
        const auto& f = d.edge_info.at(e->id);
        if (f.instance_map()[tuple[position[e->dst]]] != tuple[position[e->src]]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, k + 1);
    }
  };
  extend(extend, 0);

  std::vector<std::string> names;
  for (const auto& tup : tuples) {
    std::string name = "(";
    for (std::size_t k = 0; k < nodes.size(); ++k)
      name += (k ? "," : "") + d.node_cls.at(nodes[k])->instances().name(tup[k]);
    names.push_back(name + ")");
  }
  Universe core_instances(names, "instance");

  std::vector<Bitset> rows(core_instances.size(), colimit.sum.none());
  for (std::size_t j = 0; j < tuples.size(); ++j) {
    auto& row = rows[core_instances.index(names[j])];
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto& c = *d.node_cls.at(nodes[k]);
      const auto& cocone = colimit.cocone.at(nodes[k]);
      c.intent(tuples[j][k]).for_each([&](std::size_t t) { row.set(cocone(t)); });
    }
  }
  Channel ch;
  ch.core = std::make_shared<const Classification>("sum", core_instances, colimit.sum, std::move(rows));

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    std::vector<std::size_t> projection(core_instances.size());
    for (std::size_t j = 0; j < tuples.size(); ++j) projection[core_instances.index(names[j])] = tuples[j][k];
    ch.legs.emplace(nodes[k], Infomorphism("leg_" + nodes[k], d.node_cls.at(nodes[k]), ch.core,
                                           colimit.cocone.at(nodes[k]), std::move(projection)));
  }
  return ch;
}

ValidationResult verify_channel_covers(const Channel& ch, const ClsDiagram& d) {
  std::set<std::string> leg_nodes, diagram_nodes(d.shape.nodes.begin(), d.shape.nodes.end());
  for (const auto& [n, _] : ch.legs) leg_nodes.insert(n);
  if (leg_nodes != diagram_nodes) throw Mismatch("channel legs do not match the diagram's nodes");

  ValidationResult r;
  for (const auto& [n, leg] : ch.legs) {
    if (!(leg.source() == *d.node_cls.at(n)) || !(leg.target() == *ch.core)) {
      r.add("leg-endpoint-mismatch", {n}, "leg does not run from the node to the core");
      continue;
    }
    r.append(check_infomorphism(leg), n);
  }
  if (!r.ok()) return r;

  for (const auto& e : d.shape.edges) {
    const auto& f = d.edge_info.at(e.id);
    const auto& from = ch.legs.at(e.src);
    const auto& to = ch.legs.at(e.dst);
    for (std::size_t t = 0; t < f.source().types().size(); ++t)
      if (to.type_map()(f.type_map()(t)) != from.type_map()(t))
        r.add("type-square", {e.id, f.source().types().name(t)}, "edge does not commute on this type");
    for (std::size_t c = 0; c < ch.core->instances().size(); ++c)
      if (f.instance_map()[to.instance_map()[c]] != from.instance_map()[c])
        r.add("instance-square", {e.id, ch.core->instances().name(c)}, "edge does not commute on this core instance");
  }
  return r;
}

Infomorphism mediating_morphism(const Channel& sum, const Channel& other, const ClsDiagram& d) {
  if (auto r = verify_channel_covers(other, d); !r.ok()) throw ValidationError(std::move(r));
  const auto& core = *sum.core;
  const auto& dst = *other.core;

  // Types: every class has a member (n, t); send it where other's leg sends t.
  std::vector<std::size_t> type_image(core.types().size(), dst.types().size());
  for (const auto& [n, leg] : sum.legs)
    for (std::size_t t = 0; t < leg.source().types().size(); ++t)
      type_image[leg.type_map()(t)] = other.legs.at(n).type_map()(t);

  // Instances: other's core instance goes to the tuple of its projections.
  std::map<std::vector<std::size_t>, std::size_t> tuple_index;
  for (std::size_t j = 0; j < core.instances().size(); ++j) {
    std::vector<std::size_t> key;
    for (const auto& [n, leg] : sum.legs) key.push_back(leg.instance_map()[j]);
    tuple_index.emplace(std::move(key), j);
  }
  std::vector<std::size_t> instance_image(dst.instances().size());
  for (std::size_t c = 0; c < dst.instances().size(); ++c) {
    std::vector<std::size_t> key;
    for (const auto& [n, leg] : other.legs) key.push_back(leg.instance_map()[c]);
    auto it = tuple_index.find(key);
    if (it == tuple_index.end()) throw Error("mediating morphism: projection tuple is not a sum instance");
    instance_image[c] = it->second;
  }
  return Infomorphism("mediator", sum.core, other.core, TypeMap(core.types(), dst.types(), std::move(type_image)),
                      std::move(instance_image));
}

}  // namespace ifk
