#pragma once

#include "deficit/measurement.hpp"
#include "deficit/state.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace deficit::io {

/// Raised on malformed input files; the message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State file: {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]} or
/// {"dims": [dA, dB], "pure": [[re, im], ...]}.
DensityMatrix read_state(const std::string& text);
DensityMatrix read_state_file(const std::string& path);

/// Measurement file: {"kind": "basis", "vectors": [...]},
/// {"kind": "projectors", "matrices": [...]} or {"kind": "povm", "matrices": [...]}.
/// Projector lists may contain rank > 1 blocks; they are refined against a
/// state before evaluation.
using LoadedMeasurement =
    std::variant<ProjectiveMeasurement, std::vector<ComplexMatrix>, Povm>;
LoadedMeasurement read_measurement(const std::string& text);
LoadedMeasurement read_measurement_file(const std::string& path);

/// Serializations mirroring the input formats ([re, im] pairs throughout).
std::string write_state(const DensityMatrix& rho);
std::string write_measurement(const ProjectiveMeasurement& m);

}  // namespace deficit::io
