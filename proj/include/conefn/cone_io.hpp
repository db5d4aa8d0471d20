#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "conefn/lattice_cones.hpp"

namespace conefn {

/// {"dim": 2|3, "normals": [[int, ...], ...]}; an optional "name" is ignored.
/// Structural problems throw ParseError; mathematical ones the usual cone errors.
Cone cone_from_json(const nlohmann::json& j);
Cone load_cone(const std::filesystem::path& path);
nlohmann::json cone_to_json(const Cone& c);

}  // namespace conefn
