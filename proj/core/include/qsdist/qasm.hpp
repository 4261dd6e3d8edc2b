#pragma once

#include <string>

#include "qsdist/circuit.hpp"

namespace qsdist {

/// OpenQASM 2.0 text for a basis circuit: header, qreg/creg of matching
/// width, one line per op (id / x / sx / rz(angle) / cx), then a
/// measure line per qubit.  Angles print with shortest round-trip
/// precision.  Throws std::invalid_argument for non-basis ops.
std::string export_qasm(const Circuit& circuit);

/// Parses text in the dialect emitted by export_qasm back into a
/// circuit (measure lines are validated and dropped).  Angles parse
/// bit-exactly, so parse_qasm(export_qasm(c)) reproduces c's ops.
/// Throws std::invalid_argument on malformed input.
Circuit parse_qasm(const std::string& text);

}  // namespace qsdist
