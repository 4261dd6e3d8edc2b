#include "qsdist/qasm.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "qsdist/transpile.hpp"

namespace qsdist {

namespace {

std::string format_angle(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("angle format failed");
    return std::string(buf, end);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void bad_line(std::string_view line) {
    throw std::invalid_argument("parse_qasm: cannot parse line '" +
                                std::string(line) + "'");
}

/// "q[3]" -> 3, bounds-checked against the declared register.
int parse_qubit_ref(std::string_view tok, int n_qubits) {
    if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
        bad_line(tok);
    }
    int idx = -1;
    const char* first = tok.data() + 2;
    const char* last = tok.data() + tok.size() - 1;
    auto [p, ec] = std::from_chars(first, last, idx);
    if (ec != std::errc{} || p != last || idx < 0 || idx >= n_qubits) bad_line(tok);
    return idx;
}

}  // namespace

std::string export_qasm(const Circuit& circuit) {
    for (const GateOp& op : circuit.ops) {
        if (!is_basis_op(op)) {
            throw std::invalid_argument("export_qasm: non-basis op present");
        }
    }
    const std::string n = std::to_string(circuit.n_qubits);
    std::string text;
    text += "OPENQASM 2.0;\n";
    text += "include \"qelib1.inc\";\n";
    text += "qreg q[" + n + "];\n";
    text += "creg c[" + n + "];\n";
    for (const GateOp& op : circuit.ops) {
        const std::string t = std::to_string(op.target);
        switch (op.kind) {
            case GateKind::Identity:
                text += "id q[" + t + "];\n";
                break;
            case GateKind::PauliX:
                text += "x q[" + t + "];\n";
                break;
            case GateKind::SqrtX:
                text += "sx q[" + t + "];\n";
                break;
            case GateKind::Rz:
                text += "rz(" + format_angle(op.phi) + ") q[" + t + "];\n";
                break;
            case GateKind::Cnot:
                text += "cx q[" + std::to_string(op.control) + "],q[" + t + "];\n";
                break;
            default:
                break;  // unreachable, validated above
        }
    }
    for (int q = 0; q < circuit.n_qubits; ++q) {
        const std::string i = std::to_string(q);
        text += "measure q[" + i + "] -> c[" + i + "];\n";
    }
    return text;
}

Circuit parse_qasm(const std::string& text) {
    bool saw_version = false;
    int n_qubits = 0;
    Circuit out;
    std::string_view rest(text);
    while (!rest.empty()) {
        const std::size_t nl = rest.find('\n');
        std::string_view line = trim(rest.substr(0, nl));
        rest = (nl == std::string_view::npos) ? std::string_view{}
                                              : rest.substr(nl + 1);
        if (line.empty() || line.substr(0, 2) == "//") continue;
        if (line.back() != ';') {
            if (line.substr(0, 7) != "measure") bad_line(line);
        } else {
            line.remove_suffix(1);
            line = trim(line);
        }
        if (line.substr(0, 8) == "OPENQASM") {
            saw_version = true;
            continue;
        }
        if (line.substr(0, 7) == "include") continue;
        if (line.substr(0, 5) == "qreg ") {
            std::string_view tok = trim(line.substr(5));
            if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']') {
                bad_line(line);
            }
            const char* first = tok.data() + 2;
            const char* last = tok.data() + tok.size() - 1;
            auto [p, ec] = std::from_chars(first, last, n_qubits);
            if (ec != std::errc{} || p != last || n_qubits < 1 ||
                n_qubits > kMaxQubits) {
                bad_line(line);
            }
            out.n_qubits = n_qubits;
            continue;
        }
        if (line.substr(0, 5) == "creg ") continue;
        if (line.substr(0, 8) == "measure ") continue;
        if (n_qubits == 0) bad_line(line);
        const std::size_t sp = line.find(' ');
        if (sp == std::string_view::npos) bad_line(line);
        std::string_view head = line.substr(0, sp);
        std::string_view args = trim(line.substr(sp + 1));
        if (head == "id") {
            out.add(GateOp::identity(parse_qubit_ref(args, n_qubits)));
        } else if (head == "x") {
            out.add(GateOp::x(parse_qubit_ref(args, n_qubits)));
        } else if (head == "sx") {
            out.add(GateOp::sqrt_x(parse_qubit_ref(args, n_qubits)));
        } else if (head == "cx") {
            const std::size_t comma = args.find(',');
            if (comma == std::string_view::npos) bad_line(line);
            const int c = parse_qubit_ref(trim(args.substr(0, comma)), n_qubits);
            const int t = parse_qubit_ref(trim(args.substr(comma + 1)), n_qubits);
            out.add(GateOp::cnot(c, t));
        } else if (head.substr(0, 3) == "rz(") {
            if (head.back() != ')') bad_line(line);
            const std::string angle_text(head.substr(3, head.size() - 4));
            char* end = nullptr;
            const double angle = std::strtod(angle_text.c_str(), &end);
            if (end != angle_text.c_str() + angle_text.size()) bad_line(line);
            out.add(GateOp::rz(angle, parse_qubit_ref(args, n_qubits)));
        } else {
            bad_line(line);
        }
    }
    if (!saw_version || n_qubits == 0) {
        throw std::invalid_argument("parse_qasm: missing OPENQASM header or qreg");
    }
    return out;
}

}  // namespace qsdist
