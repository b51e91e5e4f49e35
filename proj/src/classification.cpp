#include "ifk/classification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ifk/error.hpp"

namespace ifk {

namespace {

void check_ids(const std::vector<std::string>& ids, const std::string& kind, ValidationResult& r) {
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!is_identifier(id)) r.add("malformed-" + kind, {id}, "malformed " + kind + " identifier");
    else if (!seen.insert(id).second) r.add("duplicate-" + kind, {id}, "duplicate " + kind);
  }
}

}  // namespace

ValidationResult validate_classification(const ClassificationData& data) {
  ValidationResult r;
  check_ids(data.instances, "instance", r);
  check_ids(data.types, "type", r);
  std::set<std::string> inst(data.instances.begin(), data.instances.end());
  std::set<std::string> types(data.types.begin(), data.types.end());
  for (const auto& [i, t] : data.incidence) {
    bool bad_i = !inst.count(i), bad_t = !types.count(t);
    if (bad_i || bad_t) {
      std::string what = bad_i && bad_t ? "instance and type" : bad_i ? "instance" : "type";
      r.add("dangling-incidence", {i, t}, "incidence pair references undeclared " + what);
    }
  }
  return r;
}

Classification::Classification(const ClassificationData& data) : name_(data.name) {
  if (auto r = validate_classification(data); !r.ok()) throw ValidationError(std::move(r));
  instances_ = Universe(data.instances, "instance");
  types_ = Universe(data.types, "type");
  rows_.assign(instances_.size(), types_.none());
  for (const auto& [i, t] : data.incidence) rows_[instances_.index(i)].set(types_.index(t));
  build_columns();
}

Classification::Classification(std::string name, Universe instances, Universe types,
                               std::vector<Bitset> rows)
    : name_(std::move(name)), instances_(std::move(instances)), types_(std::move(types)),
      rows_(std::move(rows)) {
  if (rows_.size() != instances_.size()) throw Mismatch("incidence rows do not match instances");
  for (const auto& r : rows_)
    if (r.size() != types_.size()) throw Mismatch("incidence row does not match types");
  build_columns();
}

void Classification::build_columns() {
  cols_.assign(types_.size(), instances_.none());
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i].for_each([&](std::size_t t) { cols_[t].set(i); });
}

ClassificationData Classification::data() const {
  ClassificationData d{name_, instances_.names(), types_.names(), {}};
  for (std::size_t i = 0; i < rows_.size(); ++i)
    rows_[i].for_each([&](std::size_t t) { d.incidence.emplace_back(instances_.name(i), types_.name(t)); });
  return d;
}

std::vector<std::string> intent(const Classification& c, std::string_view instance) {
  return c.types().names_of(c.intent(c.instances().index(instance)));
}

Bitset extent(const Classification& c, const Bitset& types) {
  if (types.size() != c.types().size()) throw Mismatch("type set is not over the classification's types");
  Bitset out = c.instances().all();
  types.for_each([&](std::size_t t) { out &= c.type_extent(t); });
  return out;
}

std::vector<std::string> extent(const Classification& c, const std::vector<std::string>& types) {
  return c.instances().names_of(extent(c, c.types().subset(types)));
}

bool instance_leq(const Classification& c, std::string_view i1, std::string_view i2) {
  const auto a = c.instances().index(i1);
  const auto b = c.instances().index(i2);
  return c.intent(b).is_subset_of(c.intent(a));
}

Classification lift_to_theory_classification(const Classification& c, std::size_t cap) {
  const std::size_t n = c.types().size();
  if (n >= 63 || (std::size_t{1} << n) > cap)
    throw CapExceeded("lift_to_theory_classification", std::ldexp(1.0, static_cast<int>(n)), cap);

  const std::size_t count = std::size_t{1} << n;
  std::vector<Bitset> subsets;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < count; ++m) {
    subsets.push_back(Bitset::from_mask(n, m));
    names.push_back(brace_list(c.types().names_of(subsets.back())));
  }
  Universe theory_types(names, "type");
  std::vector<Bitset> rows(c.instances().size(), theory_types.none());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t m = 0; m < count; ++m)
      if (subsets[m].is_subset_of(c.intent(i))) rows[i].set(theory_types.index(names[m]));
  return Classification(c.name() + "^theories", c.instances(), std::move(theory_types), std::move(rows));
}

// TypeMap

TypeMap::TypeMap(Language source, Language target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) throw InvalidMap("type map is not total over its source");
  for (auto t : image_)
    if (t >= target_.size()) throw InvalidMap("type map points outside its target");
}

TypeMap TypeMap::from_names(Language source, Language target,
                            const std::map<std::string, std::string>& names) {
  std::vector<std::size_t> image(source.size());
  for (const auto& [from, to] : names) image[source.index(from)] = target.index(to);
  for (std::size_t t = 0; t < source.size(); ++t)
    if (!names.count(source.name(t)))
      throw InvalidMap("type map is not total: no image for '" + source.name(t) + "'");
  return TypeMap(std::move(source), std::move(target), std::move(image));
}

TypeMap TypeMap::identity(const Language& l) {
  std::vector<std::size_t> image(l.size());
  for (std::size_t t = 0; t < image.size(); ++t) image[t] = t;
  return TypeMap(l, l, std::move(image));
}

Bitset TypeMap::image_of(const Bitset& s) const {
  Bitset out = target_.none();
  s.for_each([&](std::size_t t) { out.set(image_[t]); });
  return out;
}

Bitset TypeMap::preimage_of(const Bitset& s) const {
  Bitset out = source_.none();
  for (std::size_t t = 0; t < image_.size(); ++t)
    if (s.test(image_[t])) out.set(t);
  return out;
}

bool TypeMap::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  Bitset hit = target_.none();
  for (auto t : image_) hit.set(t);
  return hit.count() == target_.size();
}

std::map<std::string, std::string> TypeMap::to_names() const {
  std::map<std::string, std::string> out;
  for (std::size_t t = 0; t < image_.size(); ++t) out.emplace(source_.name(t), target_.name(image_[t]));
  return out;
}

TypeMap TypeMap::then(const TypeMap& next) const {
  if (!(target_ == next.source_)) throw Mismatch("type maps are not composable");
  std::vector<std::size_t> image(image_.size());
  for (std::size_t t = 0; t < image.size(); ++t) image[t] = next.image_[image_[t]];
  return TypeMap(source_, next.target_, std::move(image));
}

// Infomorphism

Infomorphism::Infomorphism(std::string name, ClassificationPtr source, ClassificationPtr target,
                           TypeMap type_map, std::vector<std::size_t> instance_map)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)),
      type_map_(std::move(type_map)), instance_map_(std::move(instance_map)) {
  if (!source_ || !target_) throw Mismatch("infomorphism endpoints must be set");
  if (!(type_map_.source() == source_->types()) || !(type_map_.target() == target_->types()))
    throw Mismatch("type map does not run between the endpoint type sets");
  if (instance_map_.size() != target_->instances().size())
    throw InvalidMap("instance map is not total over the target instances");
  for (auto i : instance_map_)
    if (i >= source_->instances().size()) throw InvalidMap("instance map points outside the source instances");
}

Infomorphism Infomorphism::from_names(std::string name, ClassificationPtr source,
                                      ClassificationPtr target,
                                      const std::map<std::string, std::string>& type_map,
                                      const std::map<std::string, std::string>& instance_map) {
  auto tm = TypeMap::from_names(source->types(), target->types(), type_map);
  std::vector<std::size_t> im(target->instances().size());
  for (const auto& [b, a] : instance_map) im[target->instances().index(b)] = source->instances().index(a);
  for (const auto& b : target->instances().names())
    if (!instance_map.count(b)) throw InvalidMap("instance map is not total: no image for '" + b + "'");
  return Infomorphism(std::move(name), std::move(source), std::move(target), std::move(tm), std::move(im));
}

Infomorphism Infomorphism::identity(ClassificationPtr c) {
  std::vector<std::size_t> im(c->instances().size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = i;
  auto tm = TypeMap::identity(c->types());
  return Infomorphism("id_" + c->name(), c, c, std::move(tm), std::move(im));
}

std::map<std::string, std::string> Infomorphism::instance_map_names() const {
  std::map<std::string, std::string> out;
  for (std::size_t b = 0; b < instance_map_.size(); ++b)
    out.emplace(target_->instances().name(b), source_->instances().name(instance_map_[b]));
  return out;
}

Bitset Infomorphism::instance_preimage(const Bitset& source_instances) const {
  Bitset out = target_->instances().none();
  for (std::size_t b = 0; b < instance_map_.size(); ++b)
    if (source_instances.test(instance_map_[b])) out.set(b);
  return out;
}

Bitset Infomorphism::instance_image(const Bitset& target_instances) const {
  Bitset out = source_->instances().none();
  target_instances.for_each([&](std::size_t b) { out.set(instance_map_[b]); });
  return out;
}

bool Infomorphism::instance_map_surjective() const {
  return instance_image(target_->instances().all()).count() == source_->instances().size();
}

bool Infomorphism::operator==(const Infomorphism& o) const {
  return name_ == o.name_ && *source_ == *o.source_ && *target_ == *o.target_ &&
         type_map_ == o.type_map_ && instance_map_ == o.instance_map_;
}

ValidationResult check_infomorphism(const Infomorphism& f) {
  ValidationResult r;
  const auto& src = f.source();
  const auto& dst = f.target();
  for (std::size_t b = 0; b < dst.instances().size(); ++b) {
    const std::size_t a = f.instance_map()[b];
    for (std::size_t t = 0; t < src.types().size(); ++t) {
      const bool at_source = src.incident(a, t);
      const bool at_target = dst.incident(b, f.type_map()(t));
      if (at_source == at_target) continue;
      r.add("invariance", {dst.instances().name(b), src.types().name(t), at_source ? "source-only" : "target-only"},
            "'" + src.instances().name(a) + "' |= '" + src.types().name(t) + "' is " + (at_source ? "true" : "false") +
                " but '" + dst.instances().name(b) + "' |= '" + dst.types().name(f.type_map()(t)) + "' is " +
                (at_target ? "true" : "false"));
    }
  }
  return r;
}

Infomorphism compose_infomorphisms(const Infomorphism& f, const Infomorphism& g) {
  if (!(f.target() == g.source())) throw Mismatch("cannot compose '" + f.name() + "' with '" + g.name() + "': endpoint mismatch");
  std::vector<std::size_t> im(g.target().instances().size());
  for (std::size_t c = 0; c < im.size(); ++c) im[c] = f.instance_map()[g.instance_map()[c]];
  return Infomorphism(f.name() + ";" + g.name(), f.source_ptr(), g.target_ptr(), f.type_map().then(g.type_map()),
                      std::move(im));
}

}  // namespace ifk
