#pragma once

// JSON density-matrix files:
//
//   {"dim": 4, "basis": ["gg","eg","ge","ee"],
//    "entries": [[[re, im], [re, im], [re, im], [re, im]], ... 4 rows]}

#include <fstream>
#include <string>

#include <json.hpp>

#include "twoatom/errors.hpp"
#include "twoatom/linalg.hpp"
#include "twoatom/qstate.hpp"

namespace twoatom {

/// Structurally malformed state document (wrong dim, basis or entry shape).
class StateFormatError : public Error {
 public:
  using Error::Error;
};

/// The state file could not be opened or is not JSON.
class StateFileError : public Error {
 public:
  using Error::Error;
};

inline Matrix4 matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw StateFormatError("state document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() != 4)
    throw StateFormatError("state document: \"dim\" must be 4");
  if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].size() != 4)
    throw StateFormatError("state document: \"basis\" must list gg, eg, ge, ee");
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& label = doc["basis"][i];
    if (!label.is_string() || label.get<std::string>() != kBasisLabels[i])
      throw StateFormatError("state document: basis must be [\"gg\",\"eg\",\"ge\",\"ee\"] in that order");
  }
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != 4)
    throw StateFormatError("state document: \"entries\" must have 4 rows");

  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    const auto& row = doc["entries"][r];
    if (!row.is_array() || row.size() != 4)
      throw StateFormatError("state document: row " + std::to_string(r) + " must have 4 entries");
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw StateFormatError("state document: entry (" + std::to_string(r) + "," + std::to_string(c) +
                               ") must be [re, im]");
      m(r, c) = Complex{z[0].get<double>(), z[1].get<double>()};
    }
  }
  return m;
}

inline nlohmann::json matrix_to_json(const Matrix4& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    entries.push_back(row);
  }
  return {{"dim", 4}, {"basis", {"gg", "eg", "ge", "ee"}}, {"entries", entries}};
}

inline Matrix4 read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open state file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFileError("state file is not valid JSON: " + path + ": " + e.what());
  }
  return matrix_from_json(doc);
}

/// Reads and validates; throws StateFileError, StateFormatError or ValidationError.
inline DensityMatrix read_state_file(const std::string& path) { return validate(read_matrix_file(path)); }

}  // namespace twoatom
