#pragma once

#include <string>

#include "json.hpp"
#include "uqwb/bgg.hpp"
#include "uqwb/filtration.hpp"
#include "uqwb/module.hpp"
#include "uqwb/report.hpp"

namespace uqwb {

using json = nlohmann::ordered_json;

json session_to_json(const Session& s);
Session session_from_json(const json& j);

/// Dense matrices of scalar strings; K is not stored.
json module_to_json(const ModuleRep& m);
/// Throws InvalidInput on malformed input; relations are not checked here.
ModuleRep module_from_json(const json& j);

/// Self-contained: carries the module it certifies.
json certificate_to_json(const ModuleRep& m, const FiltrationCertificate& c);
std::pair<ModuleRep, FiltrationCertificate> certificate_from_json(const json& j);

json report_to_json(const Report& r);
json bgg_to_json(const BggTable& t);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace uqwb
