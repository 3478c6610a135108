#include "qroth/io.hpp"

#include <fstream>
#include <sstream>

namespace qroth {

namespace {

template <typename T, typename F>
json matrix_to_json(const Matrix<T>& m, F&& entry) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing field '" + key + "'");
  return *it;
}

std::size_t size_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw InputError(path + "." + key + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Gaussian& z) { return json::array({z.re.str(), z.im.str()}); }

json to_json(const Quaternion& q) {
  return json::array({q.a.str(), q.b.str(), q.c.str(), q.d.str()});
}

json to_json(const QMatrix& m) {
  return matrix_to_json(m, [](const Quaternion& q) { return to_json(q); });
}

json to_json(const CMatrix& m) {
  return matrix_to_json(m, [](const Gaussian& z) { return to_json(z); });
}

json to_json(const RMatrix& m) {
  return matrix_to_json(m, [](const Rational& r) { return to_json(r); });
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

json to_json(const SmithForm& s) {
  json factors = json::array();
  for (const auto& f : s.invariant_factors) factors.push_back(to_json(f));
  return json{{"rank", s.rank}, {"invariant_factors", std::move(factors)}};
}

json to_json(const EquationInstance& inst) {
  return json{{"kind", std::string(to_string(inst.kind))},
              {"epsilon", inst.aut.epsilon()},
              {"A", to_json(inst.a)},
              {"B", to_json(inst.b)},
              {"C", to_json(inst.c)}};
}

json to_json(const InstanceFile& file) {
  json out{{"schema_version", file.schema_version}, {"instance", to_json(file.instance)}};
  if (file.known_solution) out["known_solution"] = to_json(*file.known_solution);
  if (file.known_solution_y) out["known_solution_y"] = to_json(*file.known_solution_y);
  return out;
}

json to_json(const SolveOutcome& outcome) {
  json out{{"status", outcome.solvable() ? "solvable" : "unsolvable"},
           {"solution_space_dim", outcome.solution_space_dim}};
  if (outcome.solution) out["solution"] = to_json(*outcome.solution);
  if (outcome.solution_y) out["solution_y"] = to_json(*outcome.solution_y);
  if (!outcome.certificate.empty()) {
    json cert = json::array();
    for (const auto& r : outcome.certificate) cert.push_back(to_json(r));
    out["certificate"] = std::move(cert);
  }
  if (!outcome.complex_certificate.empty()) {
    json cert = json::array();
    for (const auto& z : outcome.complex_certificate) cert.push_back(to_json(z));
    out["complex_certificate"] = std::move(cert);
  }
  return out;
}

json to_json(const CriterionReport& report) {
  json invariants = json::array();
  for (const auto& inv : report.invariants) {
    json item{{"label", inv.label}};
    if (inv.smith) item["smith_form"] = to_json(*inv.smith);
    if (inv.rank) item["rank"] = *inv.rank;
    invariants.push_back(std::move(item));
  }
  return json{{"verdict", report.verdict},
              {"method", report.method},
              {"status", report.status == CriterionStatus::decided ? "decided" : "non_regular_pencil"},
              {"invariants_compared", std::move(invariants)}};
}

json to_json(const Witness& w) {
  json out{{"kind", std::string(to_string(w.kind))}, {"S", to_json(w.s)}};
  if (w.kind != EquationKind::sylvester_hat) out["R"] = to_json(w.r);
  return out;
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(path + ": expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Quaternion quaternion_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4)
    throw InputError(path + ": expected a quaternion [\"a\",\"b\",\"c\",\"d\"]");
  return {rational_from_json(j[0], path + "[0]"), rational_from_json(j[1], path + "[1]"),
          rational_from_json(j[2], path + "[2]"), rational_from_json(j[3], path + "[3]")};
}

QMatrix qmatrix_from_json(const json& j, const std::string& path) {
  const std::size_t rows = size_field(j, "rows", path);
  const std::size_t cols = size_field(j, "cols", path);
  const json& entries = field(j, "entries", path);
  if (!entries.is_array() || entries.size() != rows)
    throw InputError(path + ".entries: expected " + std::to_string(rows) + " rows");
  QMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + ".entries[" + std::to_string(r) + "]";
    if (!entries[r].is_array() || entries[r].size() != cols)
      throw InputError(row_path + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      out(r, c) = quaternion_from_json(entries[r][c], row_path + "[" + std::to_string(c) + "]");
  }
  return out;
}

EquationInstance instance_from_json(const json& j, const std::string& path) {
  const json& kind_j = field(j, "kind", path);
  if (!kind_j.is_string()) throw InputError(path + ".kind: expected a string");
  EquationKind kind;
  try {
    kind = parse_kind(kind_j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ".kind: " + e.what());
  }
  const json& eps_j = field(j, "epsilon", path);
  if (!eps_j.is_number_integer() || (eps_j.get<long>() != 1 && eps_j.get<long>() != -1))
    throw InputError(path + ".epsilon: must be 1 or -1, got " + eps_j.dump());
  QMatrix a = qmatrix_from_json(field(j, "A", path), path + ".A");
  QMatrix b = qmatrix_from_json(field(j, "B", path), path + ".B");
  QMatrix c = qmatrix_from_json(field(j, "C", path), path + ".C");
  if (!a.is_square()) throw InputError(path + ".A: must be square, got " + a.shape());
  if (!b.is_square()) throw InputError(path + ".B: must be square, got " + b.shape());
  if (c.rows() != a.rows() || c.cols() != b.rows())
    throw InputError(path + ".C: must be " + std::to_string(a.rows()) + "x" +
                     std::to_string(b.rows()) + ", got " + c.shape());
  return {kind, std::move(a), std::move(b), std::move(c),
          Automorphism(static_cast<int>(eps_j.get<long>()))};
}

InstanceFile instance_file_from_json(const json& j) {
  const json& ver = field(j, "schema_version", "$");
  if (!ver.is_number_integer() || ver.get<long>() != kSchemaVersion)
    throw InputError("schema_version: unsupported value " + ver.dump() + " (expected " +
                     std::to_string(kSchemaVersion) + ")");
  InstanceFile out{kSchemaVersion, instance_from_json(field(j, "instance", "$")), std::nullopt,
                   std::nullopt};
  const std::size_t m = out.instance.m();
  const std::size_t n = out.instance.n();
  auto read_solution = [&](const char* key) -> std::optional<QMatrix> {
    auto it = j.find(key);
    if (it == j.end()) return std::nullopt;
    QMatrix x = qmatrix_from_json(*it, key);
    if (x.rows() != m || x.cols() != n)
      throw InputError(std::string(key) + ": must be " + std::to_string(m) + "x" +
                       std::to_string(n) + ", got " + x.shape());
    return x;
  };
  out.known_solution = read_solution("known_solution");
  out.known_solution_y = read_solution("known_solution_y");
  if (out.instance.kind == EquationKind::two_sided &&
      out.known_solution.has_value() != out.known_solution_y.has_value())
    throw InputError("two_sided known solution needs both known_solution and known_solution_y");
  return out;
}

Witness witness_from_json(const json& j) {
  const json& kind_j = field(j, "kind", "witness");
  if (!kind_j.is_string()) throw InputError("witness.kind: expected a string");
  Witness w;
  try {
    w.kind = parse_kind(kind_j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("witness.kind: ") + e.what());
  }
  w.s = qmatrix_from_json(field(j, "S", "witness"), "witness.S");
  if (w.kind != EquationKind::sylvester_hat)
    w.r = qmatrix_from_json(field(j, "R", "witness"), "witness.R");
  return w;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    throw InputError(source + ": " + what);
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.string());
}

InstanceFile load_instance_file(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return instance_file_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

EquationInstance load_instance(const std::filesystem::path& path) {
  return load_instance_file(path).instance;
}

}  // namespace qroth
