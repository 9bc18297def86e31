// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#include "qrf/specs.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qrf/errors.hpp"
#include "qrf/qubit_su2.hpp"

namespace qrf {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, sep)) parts.push_back(token);
  return parts;
}

// Splits "key=value"; throws naming `field` when the key does not match.
std::string expect_kv(const std::string& token, const std::string& key,
                      const std::string& field) {
  const auto pos = token.find('=');
  if (pos == std::string::npos || token.substr(0, pos) != key)
    throw SpecParseError(field, "expected '" + key + "=<value>', got '" + token + "'");
  return token.substr(pos + 1);
}

double parse_double(const std::string& text, const std::string& field) {
  if (text.empty()) throw SpecParseError(field, "empty numeric value");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == nullptr || *end != '\0')
    throw SpecParseError(field, "'" + text + "' is not a number");
  if (!std::isfinite(v)) throw SpecParseError(field, "value must be finite");
  return v;
}

long parse_long(const std::string& text, const std::string& field) {
  if (text.empty()) throw SpecParseError(field, "empty integer value");
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0')
    throw SpecParseError(field, "'" + text + "' is not an integer");
  return v;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("file", "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError("file", std::string("JSON parse error: ") + e.what());
  }
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    throw SpecParseError(field, "matrix must be a nonempty array of rows");
  const auto rows = Eigen::Index(j.size());
  const auto cols = Eigen::Index(j.front().is_array() ? j.front().size() : 0);
  if (cols == 0) throw SpecParseError(field, "matrix rows must be nonempty arrays");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[size_t(r)];
    if (!row.is_array() || Eigen::Index(row.size()) != cols)
      throw SpecParseError(field, "matrix rows have inconsistent lengths");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& cell = row[size_t(c)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number())
        throw SpecParseError(field, "matrix entries must be [re, im] pairs");
      m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

}  // namespace

double parse_half_integer(const std::string& text, const std::string& field) {
  double value = 0.0;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const long num = parse_long(text.substr(0, slash), field);
    const long den = parse_long(text.substr(slash + 1), field);
    if (den != 1 && den != 2)
      throw SpecParseError(field, "denominator must be 1 or 2");
    value = double(num) / double(den);
  } else {
    value = parse_double(text, field);
  }
  const double doubled = 2.0 * value;
  if (value < 0.0 || std::abs(doubled - std::llround(doubled)) > 1e-9)
    throw SpecParseError(field, "'" + text + "' is not a nonnegative half-integer");
  return value;
}

Representation parse_representation_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw SpecParseError("representation", "empty spec");
  if (parts[0] == "su2") {
    if (parts.size() != 2)
      throw SpecParseError("representation", "expected su2:<j=...|qubits=...>");
    const auto pos = parts[1].find('=');
    const std::string key = pos == std::string::npos ? parts[1] : parts[1].substr(0, pos);
    if (key == "j")
      return Representation::spin(parse_half_integer(expect_kv(parts[1], "j", "j"), "j"));
    if (key == "qubits") {
      const long n = parse_long(expect_kv(parts[1], "qubits", "qubits"), "qubits");
      if (n < 1) throw SpecParseError("qubits", "qubit count must be >= 1");
      return Representation::qubit_power(int(n));
    }
    throw SpecParseError("representation", "unknown su2 key '" + key + "'");
  }
  if (parts[0] == "u1") {
    if (parts.size() != 2)
      throw SpecParseError("representation", "expected u1:charges=...");
    const std::string list = expect_kv(parts[1], "charges", "charges");
    std::vector<long> charges;
    for (const auto& token : split(list, ','))
      charges.push_back(parse_long(token, "charges"));
    if (charges.empty()) throw SpecParseError("charges", "charge list is empty");
    return Representation::u1(charges);
  }
  throw SpecParseError("representation", "unknown kind '" + parts[0] + "'");
}

QuantumChannel parse_channel_spec(const std::string& spec) {
  const std::string kraus_prefix = "kraus-file:";
  if (spec.rfind(kraus_prefix, 0) == 0) {
    const std::string path = spec.substr(kraus_prefix.size());
    const nlohmann::json j = load_json_file(path);
    if (!j.is_array() || j.empty())
      throw SpecParseError("kraus-file", "expected a nonempty list of matrices");
    std::vector<ComplexMatrix> kraus;
    for (const auto& item : j) kraus.push_back(matrix_from_json(item, "kraus-file"));
    try {
      return QuantumChannel::from_kraus(std::move(kraus));
    } catch (const std::invalid_argument& e) {
      throw SpecParseError("kraus-file", e.what());
    }
  }
  const auto parts = split(spec, ':');
  if (parts.empty()) throw SpecParseError("target", "empty spec");
  if (parts[0] == "unitary") {
    if (parts.size() != 3)
      throw SpecParseError("target", "expected unitary:rot-<axis>:theta=...");
    int axis = -1;
    if (parts[1] == "rot-x") axis = 0;
    if (parts[1] == "rot-y") axis = 1;
    if (parts[1] == "rot-z") axis = 2;
    if (axis < 0)
      throw SpecParseError("target", "unknown rotation '" + parts[1] + "'");
    const double theta = parse_double(expect_kv(parts[2], "theta", "theta"), "theta");
    const Representation qubit = Representation::spin(0.5);
    return QuantumChannel::unitary(qubit.unitary_at(LieDirection::su2_axis(axis), theta));
  }
  if (parts[0] == "depolarizing") {
    if (parts.size() != 2)
      throw SpecParseError("target", "expected depolarizing:p=...");
    const double p = parse_double(expect_kv(parts[1], "p", "p"), "p");
    if (p < 0.0 || p > 1.0) throw SpecParseError("p", "p must lie in [0, 1]");
    return QuantumChannel::depolarizing(p);
  }
  throw SpecParseError("target", "unknown channel kind '" + parts[0] + "'");
}

ComplexMatrix parse_reference_spec(const std::string& spec, Eigen::Index d_r) {
  const std::string file_prefix = "file:";
  if (spec.rfind(file_prefix, 0) == 0) {
    const std::string path = spec.substr(file_prefix.size());
    const ComplexMatrix m = matrix_from_json(load_json_file(path), "file");
    if (m.rows() != m.cols() || m.rows() != d_r)
      throw SpecParseError("file", "state dimension " + std::to_string(m.rows()) +
                                       " does not match reference dimension " +
                                       std::to_string(d_r));
    return m;
  }
  const auto parts = split(spec, ':');
  if (parts.empty()) throw SpecParseError("reference", "empty spec");
  if (parts[0] == "coherent") {
    if (parts.size() < 2 || parts.size() > 3)
      throw SpecParseError("reference", "expected coherent:l=...[:dir=<x|y|z>]");
    const double l = parse_half_integer(expect_kv(parts[1], "l", "l"), "l");
    Eigen::Vector3d dir(0.0, 0.0, 1.0);
    if (parts.size() == 3) {
      const std::string axis = expect_kv(parts[2], "dir", "dir");
      if (axis == "x")
        dir = Eigen::Vector3d(1, 0, 0);
      else if (axis == "y")
        dir = Eigen::Vector3d(0, 1, 0);
      else if (axis == "z")
        dir = Eigen::Vector3d(0, 0, 1);
      else
        throw SpecParseError("dir", "unknown axis '" + axis + "'");
    }
    const auto dim = Eigen::Index(std::llround(2.0 * l)) + 1;
    if (dim != d_r)
      throw SpecParseError("l", "coherent state dimension " + std::to_string(dim) +
                                    " does not match reference dimension " +
                                    std::to_string(d_r));
    return spin_coherent(l, dir);
  }
  if (parts[0] == "mixed") {
    if (parts.size() != 2 || parts[1] != "uniform")
      throw SpecParseError("reference", "expected mixed:uniform");
    return identity_matrix(d_r) / double(d_r);
  }
  throw SpecParseError("reference", "unknown state kind '" + parts[0] + "'");
}

}  // namespace qrf
