#include "conefn/cone_io.hpp"

#include <fstream>
#include <sstream>

#include "conefn/errors.hpp"

namespace conefn {

Cone cone_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("normals"))
    throw ParseError("cone JSON needs the keys \"dim\" and \"normals\"");
  if (!j["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  if (!j["normals"].is_array()) throw ParseError("\"normals\" must be an array");
  std::vector<IntVector> normals;
  for (const auto& row : j["normals"]) {
    if (!row.is_array()) throw ParseError("each normal must be an array of integers");
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("normal entries must be integers");
      v.push_back(x.get<Int>());
    }
    normals.push_back(std::move(v));
  }
  return Cone::make(j["dim"].get<int>(), std::move(normals));
}

Cone load_cone(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cone file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return cone_from_json(j);
}

nlohmann::json cone_to_json(const Cone& c) {
  return {{"dim", c.dim()}, {"normals", c.normals()}};
}

}  // namespace conefn
