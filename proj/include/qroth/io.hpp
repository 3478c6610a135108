#pragma once

// JSON serialization. Rationals are strings "p" or "p/q"; quaternions are
// ["a","b","c","d"]; Gaussian rationals ["re","im"]; matrices
// {"rows": m, "cols": n, "entries": [[...], ...]}.

#include "qroth/criteria.hpp"
#include "qroth/solver.hpp"
#include "qroth/witness.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace qroth {

using json = nlohmann::ordered_json;

/// Malformed or invalid input; the message names the offending field.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

struct InstanceFile {
  int schema_version = kSchemaVersion;
  EquationInstance instance;
  std::optional<QMatrix> known_solution;
  /// Y of a two_sided known solution.
  std::optional<QMatrix> known_solution_y;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

json to_json(const Rational& r);
json to_json(const Gaussian& z);
json to_json(const Quaternion& q);
json to_json(const QMatrix& m);
json to_json(const CMatrix& m);
json to_json(const RMatrix& m);
json to_json(const Poly& p);
json to_json(const SmithForm& s);
json to_json(const EquationInstance& inst);
json to_json(const InstanceFile& file);
json to_json(const SolveOutcome& outcome);
json to_json(const CriterionReport& report);
json to_json(const Witness& w);

// Parsers take the JSON path of the value for error messages.
Rational rational_from_json(const json& j, const std::string& path);
Quaternion quaternion_from_json(const json& j, const std::string& path);
QMatrix qmatrix_from_json(const json& j, const std::string& path);
EquationInstance instance_from_json(const json& j, const std::string& path = "instance");
InstanceFile instance_file_from_json(const json& j);
Witness witness_from_json(const json& j);

/// Parses JSON text; syntax errors report line and column.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::filesystem::path& path);

InstanceFile load_instance_file(const std::filesystem::path& path);
EquationInstance load_instance(const std::filesystem::path& path);

}  // namespace qroth
