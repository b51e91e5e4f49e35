#include "ifk/cli/report.hpp"

namespace ifk::cli {

json sequent_json(const Language& l, const Sequent& s) {
  return {{"ant", l.names_of(s.ant)}, {"con", l.names_of(s.con)}};
}

json sequents_json(const Language& l, const std::vector<Sequent>& s) {
  json out = json::array();
  for (const auto& q : s) out.push_back(sequent_json(l, q));
  return out;
}

json classification_json(const Classification& c) {
  const auto data = c.data();
  json inc = json::array();
  for (const auto& [i, t] : data.incidence) inc.push_back({i, t});
  return {{"instances", data.instances}, {"types", data.types}, {"incidence", inc}};
}

json colimit_json(const Colimit& c) {
  json cocone = json::object();
  for (const auto& [node, f] : c.cocone) cocone[node] = f.to_names();
  json classes = json::object();
  for (std::size_t k = 0; k < c.sum.size(); ++k) {
    json members = json::array();
    for (const auto& [n, t] : c.members[k]) members.push_back({n, t});
    classes[c.sum.name(k)] = members;
  }
  return {{"types", c.sum.names()}, {"cocone", cocone}, {"classes", classes}};
}

json closure_report(const std::string& name, const SequentTheory& closure) {
  return {{"theory", name},
          {"types", closure.types().names()},
          {"size", closure.axioms().size()},
          {"closure", sequents_json(closure.types(), closure.axioms())}};
}

json entails_report(const std::string& name, const Language& l, const Sequent& s, bool entailed) {
  return {{"theory", name}, {"sequent", sequent_json(l, s)}, {"literal", format_sequent(l, s)}, {"entails", entailed}};
}

json lattice_report(const std::string& name, const ConceptLattice& l, const Classification& c) {
  json concepts = json::array();
  for (const auto& k : l.concepts())
    concepts.push_back({{"extent", c.instances().names_of(k.extent)}, {"intent", c.types().names_of(k.intent)}});
  json order = json::array(), covers = json::array();
  for (const auto& [i, j] : l.order()) order.push_back({i, j});
  for (const auto& [i, j] : l.covers()) covers.push_back({i, j});
  return {{"classification", name}, {"concepts", concepts}, {"order", order},
          {"covers", covers},       {"top", l.top()},         {"bottom", l.bottom()}};
}

json sum_report(const std::string& name, const InformationSystem& s, const std::optional<Channel>& channel) {
  json out = {{"system", name}, {"sum_language", colimit_json(colimit_language(s.language_diagram()))}};
  if (channel) {
    json legs = json::object();
    for (const auto& [node, leg] : channel->legs)
      legs[node] = {{"type_map", leg.type_map().to_names()}, {"instance_map", leg.instance_map_names()}};
    out["core"] = classification_json(*channel->core);
    out["legs"] = legs;
  }
  return out;
}

json integration_report(const std::string& name, const InformationSystem& s, const IntegrationResult& r,
                        std::size_t delta_bound) {
  json deltas = json::object();
  for (const auto& [node, list] : r.deltas) deltas[node] = sequents_json(s.node_theory.at(node).types(), list);
  json out = {{"system", name},
              {"delta_bound", delta_bound},
              {"sum_language", colimit_json(r.sum.language)},
              {"sum_axioms", sequents_json(r.sum.theory->types(), r.sum.theory->axioms())},
              {"pointwise", r.cosmology.pointwise_consistent},
              {"monocosmic", r.cosmology.monocosmic},
              {"verdict", to_string(r.cosmology.verdict)},
              {"deltas", deltas}};
  if (r.channel) {
    json normal = json::object();
    for (const auto& [node, set] : r.closure_normal)
      normal[node] = (*s.classification(node))->instances().names_of(set);
    out["closure_normal"] = normal;
  }
  return out;
}

json consistency_report(const Cosmology& c) {
  return {{"pointwise", c.pointwise_consistent}, {"monocosmic", c.monocosmic}, {"verdict", to_string(c.verdict)}};
}

json defects_json(const ValidationResult& r) {
  json out = json::array();
  for (const auto& d : r.defects) out.push_back({{"kind", d.kind}, {"subject", d.subject}, {"message", d.message}});
  return out;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ifk::cli
