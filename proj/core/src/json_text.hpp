#pragma once

// Deterministic JSON text: keys sorted (nlohmann's default object map),
// floating point at 17 significant digits, two-space indentation.

#include <string>

#include <nlohmann/json.hpp>

namespace nlsdtn {

struct RunConfig;
nlohmann::json config_json(const RunConfig& c);

namespace detail {

std::string dump_json(const nlohmann::json& j);

}  // namespace detail
}  // namespace nlsdtn
