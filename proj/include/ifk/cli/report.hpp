#pragma once

#include <string>

#include "json.hpp"

#include "ifk/diagrams.hpp"
#include "ifk/fca.hpp"
#include "ifk/integration.hpp"
#include "ifk/theories.hpp"

namespace ifk::cli {

using nlohmann::json;

json sequent_json(const Language& l, const Sequent& s);
json sequents_json(const Language& l, const std::vector<Sequent>& s);
json classification_json(const Classification& c);
json colimit_json(const Colimit& c);

json closure_report(const std::string& name, const SequentTheory& closure);
json entails_report(const std::string& name, const Language& l, const Sequent& s, bool entailed);
json lattice_report(const std::string& name, const ConceptLattice& l, const Classification& c);
json sum_report(const std::string& name, const InformationSystem& s, const std::optional<Channel>& channel);
json integration_report(const std::string& name, const InformationSystem& s, const IntegrationResult& r,
                        std::size_t delta_bound);
json consistency_report(const Cosmology& c);
json defects_json(const ValidationResult& r);

/// Two-space indented, trailing newline; keys are sorted by the json type.
std::string render(const json& j);

}  // namespace ifk::cli
