#include "ifk/cli/bundle.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ifk::cli {

using nlohmann::json;

std::string to_string(BundleError::Kind k) {
  switch (k) {
    case BundleError::Kind::syntax: return "syntax";
    case BundleError::Kind::schema: return "schema";
    case BundleError::Kind::dangling_reference: return "dangling-reference";
    case BundleError::Kind::invalid: return "invalid";
  }
  return "?";
}

bool Bundle::operator==(const Bundle& o) const {
  auto same_cls = [](const auto& a, const auto& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) {
             return x.first == y.first && *x.second == *y.second;
           });
  };
  return same_cls(classifications, o.classifications) && theories == o.theories &&
         infomorphisms == o.infomorphisms && system_descriptions == o.system_descriptions && systems == o.systems;
}

namespace {

std::string pointer_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string excerpt(const json& j) {
  std::string s = j.dump();
  return s.size() > 60 ? s.substr(0, 57) + "..." : s;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what, const json& value) {
  throw BundleError(BundleError::Kind::schema, what + " at " + (path.empty() ? "/" : path), path, excerpt(value));
}

const json& object_at(const json& j, const std::string& path, std::initializer_list<std::string_view> required,
                      std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) schema_error(path, "expected an object", j);
  for (auto key : required)
    if (!j.contains(key)) schema_error(path, "missing key '" + std::string(key) + "'", j);
  for (const auto& [key, _] : j.items()) {
    auto known = [&](auto list) { return std::find(list.begin(), list.end(), key) != list.end(); };
    if (!known(required) && !known(optional)) schema_error(path + "/" + pointer_token(key), "unknown key '" + key + "'", j);
  }
  return j;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string", j);
  return j.get<std::string>();
}

std::vector<std::string> strings_at(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings", j);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(string_at(j[k], path + "/" + std::to_string(k)));
  return out;
}

std::map<std::string, std::string> string_map_at(const json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object of strings", j);
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, string_at(v, path + "/" + pointer_token(k)));
  return out;
}

[[noreturn]] void dangling(const std::string& path, const std::string& kind, const std::string& name) {
  throw BundleError(BundleError::Kind::dangling_reference, "reference to undeclared " + kind + " '" + name + "'",
                    path, name);
}

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

// nlohmann names the offending input as "last read: '...'" for lexer errors
// and "unexpected '...'" for parser errors; failing both, use the byte.
std::string offending_token(const std::string& message, std::string_view text, std::size_t byte) {
  for (const std::string marker : {"last read: '", "unexpected '"}) {
    auto start = message.find(marker);
    if (start == std::string::npos) continue;
    start += marker.size();
    auto end = message.find('\'', start);
    auto token = message.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!token.empty()) return token;
  }
  if (byte >= 1 && byte <= text.size()) return std::string(1, text[byte - 1]);
  return "<end of input>";
}

SequentTheory read_theory(const std::string& name, const json& j, const std::string& path, ValidationResult& defects) {
  object_at(j, path, {"types", "axioms"});
  const auto types = strings_at(j["types"], path + "/types");
  Language language;
  try {
    language = Language(types, "type");
  } catch (const Error& e) {
    defects.add("bad-language", {"theories", name}, e.what());
    return {};
  }
  const json& axioms = j["axioms"];
  if (!axioms.is_array()) schema_error(path + "/axioms", "expected an array", axioms);
  std::vector<Sequent> parsed;
  for (std::size_t k = 0; k < axioms.size(); ++k) {
    const std::string ap = path + "/axioms/" + std::to_string(k);
    object_at(axioms[k], ap, {"ant", "con"});
    const auto ant = strings_at(axioms[k]["ant"], ap + "/ant");
    const auto con = strings_at(axioms[k]["con"], ap + "/con");
    try {
      parsed.push_back(make_sequent(language, ant, con));
    } catch (const UnknownElement& e) {
      defects.add("out-of-language-axiom", {"theories", name, std::to_string(k)}, e.what());
    }
  }
  return SequentTheory(std::move(language), std::move(parsed));
}

}  // namespace

Bundle parse_bundle(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 0, column = 0;
    position_of(text, e.byte, line, column);
    throw BundleError(BundleError::Kind::syntax, e.what(), "", offending_token(e.what(), text, e.byte), line, column);
  }

  object_at(doc, "", {}, {"classifications", "theories", "infomorphisms", "systems"});
  static const json empty_section = json::object();
  auto section = [&](const char* key) -> const json& {
    if (!doc.contains(key)) return empty_section;
    if (!doc[key].is_object()) schema_error(std::string("/") + key, "expected an object", doc[key]);
    return doc[key];
  };

  Bundle b;
  ValidationResult defects;
  // Declared objects that failed validation: references to them are not
  // dangling, but anything built on them is skipped.
  std::set<std::string> broken_cls, broken_theories;
  for (const auto& [name, _] : section("classifications").items()) broken_cls.insert(name);

  for (const auto& [name, j] : section("classifications").items()) {
    const std::string path = "/classifications/" + pointer_token(name);
    object_at(j, path, {"instances", "types", "incidence"});
    ClassificationData data{name, strings_at(j["instances"], path + "/instances"),
                            strings_at(j["types"], path + "/types"), {}};
    const json& inc = j["incidence"];
    if (!inc.is_array()) schema_error(path + "/incidence", "expected an array of pairs", inc);
    for (std::size_t k = 0; k < inc.size(); ++k) {
      const auto pair = strings_at(inc[k], path + "/incidence/" + std::to_string(k));
      if (pair.size() != 2) schema_error(path + "/incidence/" + std::to_string(k), "expected [instance, type]", inc[k]);
      data.incidence.emplace_back(pair[0], pair[1]);
    }
    if (auto r = validate_classification(data); !r.ok()) {
      defects.append(r, name);
      continue;
    }
    broken_cls.erase(name);
    b.classifications.emplace(name, std::make_shared<const Classification>(data));
  }

  for (const auto& [name, j] : section("theories").items()) {
    const std::size_t before = defects.defects.size();
    auto t = read_theory(name, j, "/theories/" + pointer_token(name), defects);
    if (defects.defects.size() != before) broken_theories.insert(name);
    else b.theories.emplace(name, std::move(t));
  }

  for (const auto& [name, j] : section("infomorphisms").items()) {
    const std::string path = "/infomorphisms/" + pointer_token(name);
    object_at(j, path, {"source", "target", "type_map", "instance_map"});
    const auto src = string_at(j["source"], path + "/source");
    const auto dst = string_at(j["target"], path + "/target");
    if (!b.classifications.count(src) && !broken_cls.count(src)) dangling(path + "/source", "classification", src);
    if (!b.classifications.count(dst) && !broken_cls.count(dst)) dangling(path + "/target", "classification", dst);
    auto s = b.classifications.find(src), t = b.classifications.find(dst);
    if (s == b.classifications.end() || t == b.classifications.end()) continue;
    try {
      auto f = Infomorphism::from_names(name, s->second, t->second, string_map_at(j["type_map"], path + "/type_map"),
                                        string_map_at(j["instance_map"], path + "/instance_map"));
      if (auto r = check_infomorphism(f); !r.ok()) defects.append(r, name);
      b.infomorphisms.emplace(name, std::move(f));
    } catch (const BundleError&) {
      throw;
    } catch (const Error& e) {
      defects.add("bad-infomorphism", {name}, e.what());
    }
  }

  for (const auto& [name, j] : section("systems").items()) {
    const std::string path = "/systems/" + pointer_token(name);
    object_at(j, path, {"nodes", "edges"});
    SystemDescription desc;
    const json& nodes = j["nodes"];
    if (!nodes.is_object()) schema_error(path + "/nodes", "expected an object", nodes);
    for (const auto& [node, nj] : nodes.items()) {
      const std::string np = path + "/nodes/" + pointer_token(node);
      object_at(nj, np, {"theory"}, {"classification"});
      SystemNodeRef ref{string_at(nj["theory"], np + "/theory"), std::nullopt};
      if (nj.contains("classification") && !nj["classification"].is_null())
        ref.classification = string_at(nj["classification"], np + "/classification");
      desc.nodes.emplace(node, std::move(ref));
    }
    const json& edges = j["edges"];
    if (!edges.is_array()) schema_error(path + "/edges", "expected an array", edges);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string ep = path + "/edges/" + std::to_string(k);
      const json& ej = object_at(edges[k], ep, {"id", "src", "dst", "type_map"}, {"instance_map"});
      SystemEdgeRef e{string_at(ej["id"], ep + "/id"), string_at(ej["src"], ep + "/src"),
                      string_at(ej["dst"], ep + "/dst"), string_map_at(ej["type_map"], ep + "/type_map"),
                      std::nullopt};
      if (ej.contains("instance_map") && !ej["instance_map"].is_null())
        e.instance_map = string_map_at(ej["instance_map"], ep + "/instance_map");
      desc.edges.push_back(std::move(e));
    }
    std::sort(desc.edges.begin(), desc.edges.end(), [](const auto& a, const auto& c) { return a.id < c.id; });

    InformationSystem sys;
    bool resolvable = true;
    for (const auto& [node, ref] : desc.nodes) {
      const std::string np = path + "/nodes/" + pointer_token(node);
      sys.nodes.push_back(node);
      auto t = b.theories.find(ref.theory);
      if (t == b.theories.end()) {
        if (!broken_theories.count(ref.theory)) dangling(np + "/theory", "theory", ref.theory);
        resolvable = false;
      } else {
        sys.node_theory.emplace(node, t->second);
      }
      if (ref.classification) {
        auto c = b.classifications.find(*ref.classification);
        if (c == b.classifications.end()) {
          if (!broken_cls.count(*ref.classification))
            dangling(np + "/classification", "classification", *ref.classification);
          resolvable = false;
          continue;
        }
        sys.node_cls.emplace(node, c->second);
      }
    }
    for (std::size_t k = 0; k < desc.edges.size(); ++k) {
      const auto& e = desc.edges[k];
      for (const auto* end : {&e.src, &e.dst})
        if (!desc.nodes.count(*end)) dangling(path + "/edges", "node", *end);
      auto s = sys.node_theory.find(e.src), t = sys.node_theory.find(e.dst);
      if (s == sys.node_theory.end() || t == sys.node_theory.end()) continue;
      try {
        sys.edges.push_back({e.id, e.src, e.dst, TypeMap::from_names(s->second.types(), t->second.types(), e.type_map),
                             e.instance_map});
      } catch (const Error& err) {
        defects.add("bad-edge-map", {name, e.id}, err.what());
        resolvable = false;
      }
    }
    if (resolvable) {
      if (auto r = validate_system(sys); !r.ok()) defects.append(r, name);
    }
    b.system_descriptions.emplace(name, std::move(desc));
    b.systems.emplace(name, std::move(sys));
  }

  if (!defects.ok())
    throw BundleError(BundleError::Kind::invalid, defects.summary(), "", "", 0, 0, std::move(defects));
  return b;
}

std::string serialize_bundle(const Bundle& b) {
  json doc = {{"classifications", json::object()},
              {"theories", json::object()},
              {"infomorphisms", json::object()},
              {"systems", json::object()}};
  for (const auto& [name, c] : b.classifications) {
    const auto data = c->data();
    json inc = json::array();
    for (const auto& [i, t] : data.incidence) inc.push_back({i, t});
    doc["classifications"][name] = {{"instances", data.instances}, {"types", data.types}, {"incidence", inc}};
  }
  for (const auto& [name, t] : b.theories) {
    json axioms = json::array();
    for (const auto& a : t.axioms())
      axioms.push_back({{"ant", t.types().names_of(a.ant)}, {"con", t.types().names_of(a.con)}});
    doc["theories"][name] = {{"types", t.types().names()}, {"axioms", axioms}};
  }
  for (const auto& [name, f] : b.infomorphisms)
    doc["infomorphisms"][name] = {{"source", f.source().name()},
                                  {"target", f.target().name()},
                                  {"type_map", f.type_map().to_names()},
                                  {"instance_map", f.instance_map_names()}};
  for (const auto& [name, d] : b.system_descriptions) {
    json nodes = json::object();
    for (const auto& [node, ref] : d.nodes)
      nodes[node] = {{"theory", ref.theory},
                     {"classification", ref.classification ? json(*ref.classification) : json(nullptr)}};
    json edges = json::array();
    for (const auto& e : d.edges)
      edges.push_back({{"id", e.id},
                       {"src", e.src},
                       {"dst", e.dst},
                       {"type_map", e.type_map},
                       {"instance_map", e.instance_map ? json(*e.instance_map) : json(nullptr)}});
    doc["systems"][name] = {{"nodes", nodes}, {"edges", edges}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace ifk::cli
