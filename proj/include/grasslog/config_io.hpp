#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "grasslog/configuration.hpp"

namespace grasslog {

using Json = nlohmann::ordered_json;

/// Either backend, as selected by the "backend" field of the JSON schema
///   { "dim": n, "backend": "exact"|"float", "vectors": [...] }
/// with exact entries [re_num, re_den, im_num, im_den] (integers, or decimal
/// strings when they exceed 64 bits) and float entries [re, im].
using AnyConfiguration = std::variant<ConfigurationQ, ConfigurationF>;

AnyConfiguration configuration_from_json(const Json& j);
AnyConfiguration load_configuration(const std::string& path);

Json configuration_to_json(const ConfigurationQ& c);
Json configuration_to_json(const ConfigurationF& c);

/// Fixed-format float serialization (%.17g) so reports are byte-stable.
std::string format_double(double x);

} // namespace grasslog
