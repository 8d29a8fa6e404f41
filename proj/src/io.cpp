#include "deficit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace deficit::io {

namespace {

using nlohmann::json;

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ParseError(where + ": ragged rows at row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = parse_complex(j[r][c], where + "[" + std::to_string(r) + "][" +
                                           std::to_string(c) + "]");
    }
  }
  return m;
}

std::vector<Complex> parse_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected an array");
  std::vector<Complex> v;
  v.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

json parsed(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("document is not valid JSON");
  if (!j.is_object()) throw ParseError("top level must be an object");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DensityMatrix read_state(const std::string& text) {
  const json j = parsed(text);
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2) {
    throw ParseError("state: missing or malformed \"dims\" (expected [dA, dB])");
  }
  Dims dims{j["dims"][0].get<std::size_t>(), j["dims"][1].get<std::size_t>()};
  if (dims.a < 1 || dims.b < 1) throw ParseError("state: dims entries must be positive");

  if (j.contains("pure")) {
    std::vector<Complex> amp = parse_vector(j["pure"], "state.pure");
    if (amp.size() != dims.total()) {
      throw ParseError("state.pure: length must equal dA*dB");
    }
    try {
      return PureState(dims, std::move(amp)).to_density();
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("state.pure: ") + e.what());
    }
  }
  if (!j.contains("matrix")) throw ParseError("state: needs \"matrix\" or \"pure\"");
  ComplexMatrix m = parse_matrix(j["matrix"], "state.matrix");
  if (m.rows() != dims.total() || m.cols() != dims.total()) {
    throw ParseError("state.matrix: shape must be (dA*dB) x (dA*dB)");
  }
  try {
    return DensityMatrix(dims, std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("state.matrix: ") + e.what());
  }
}

DensityMatrix read_state_file(const std::string& path) { return read_state(slurp(path)); }

LoadedMeasurement read_measurement(const std::string& text) {
  const json j = parsed(text);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("measurement: missing \"kind\"");
  }
  const std::string kind = j["kind"].get<std::string>();
  try {
    if (kind == "basis") {
      if (!j.contains("vectors") || !j["vectors"].is_array()) {
        throw ParseError("measurement: kind \"basis\" needs \"vectors\"");
      }
      std::vector<std::vector<Complex>> basis;
      for (std::size_t i = 0; i < j["vectors"].size(); ++i) {
        basis.push_back(
            parse_vector(j["vectors"][i], "measurement.vectors[" + std::to_string(i) + "]"));
      }
      return ProjectiveMeasurement(std::move(basis));
    }
    if (kind == "projectors" || kind == "povm") {
      if (!j.contains("matrices") || !j["matrices"].is_array()) {
        throw ParseError("measurement: kind \"" + kind + "\" needs \"matrices\"");
      }
      std::vector<ComplexMatrix> mats;
      for (std::size_t i = 0; i < j["matrices"].size(); ++i) {
        mats.push_back(
            parse_matrix(j["matrices"][i], "measurement.matrices[" + std::to_string(i) + "]"));
      }
      if (kind == "povm") return Povm(std::move(mats));
      return mats;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("measurement: ") + e.what());
  }
  throw ParseError("measurement: unknown kind \"" + kind +
                   "\" (expected basis, projectors or povm)");
}

LoadedMeasurement read_measurement_file(const std::string& path) {
  return read_measurement(slurp(path));
}

std::string write_state(const DensityMatrix& rho) {
  json j;
  j["dims"] = {rho.dims().a, rho.dims().b};
  j["matrix"] = matrix_json(rho.matrix());
  return j.dump(2);
}

std::string write_measurement(const ProjectiveMeasurement& m) {
  json j;
  j["kind"] = "basis";
  json vectors = json::array();
  for (const auto& v : m.basis()) {
    json vec = json::array();
    for (const auto& z : v) vec.push_back(complex_json(z));
    vectors.push_back(std::move(vec));
  }
  j["vectors"] = std::move(vectors);
  return j.dump(2);
}

}  // namespace deficit::io
