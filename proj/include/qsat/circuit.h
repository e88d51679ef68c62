#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsat {

enum class GateKind : uint8_t { H, S, X, Y, Z, CNOT };

std::string_view gate_name(GateKind kind);

/// A single gate. `control` is present iff `kind == GateKind::CNOT`.
struct Gate {
    GateKind kind;
    uint32_t target;
    std::optional<uint32_t> control;

    static Gate single(GateKind kind, uint32_t target);
    static Gate cnot(uint32_t control, uint32_t target);

    bool operator==(const Gate &other) const = default;
    std::string str() const;
};

/// An ordered gate list over a single register of `num_qubits` qubits.
///
/// Signals are implicit: signal i sits in front of gate i, and the last signal
/// follows the final gate, so a circuit has `gates.size() + 1` signals.
struct Circuit {
    uint32_t num_qubits = 0;
    std::vector<Gate> gates;

    size_t num_signals() const {
        return gates.size() + 1;
    }

    /// Throws std::invalid_argument if any operand is out of range, a CNOT has
    /// equal operands, or the operand shape does not match the kind.
    void validate() const;

    bool operator==(const Circuit &other) const = default;
};

/// Raised by parse_circuit. Line and column are 1-based.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line, size_t column);
    size_t line;
    size_t column;
};

/// Parses the OpenQASM 2 subset: optional `OPENQASM 2.0;` and
/// `include "qelib1.inc";` headers, exactly one `qreg`, gates h/s/x/y/z/cx and
/// `//` comments.
Circuit parse_circuit(std::string_view text);

/// Emits text accepted by parse_circuit, with parse_circuit(emit_circuit(c)) == c.
std::string emit_circuit(const Circuit &circuit);

enum class GateAlphabet {
    /// H, S, X, Y, Z, CNOT.
    full,
    /// H, S, CNOT only.
    generators,
};

/// Draws gate kinds uniformly from the alphabet (CNOT excluded when n == 1);
/// single-qubit operands uniform, CNOT operands uniform over ordered distinct
/// pairs. Deterministic in `seed`.
Circuit random_clifford_circuit(
    uint32_t num_qubits, size_t num_gates, uint64_t seed, GateAlphabet alphabet = GateAlphabet::full);

/// Deletes one uniformly chosen gate. Throws on an empty circuit.
Circuit remove_random_gate(const Circuit &circuit, uint64_t seed);

/// Rewrites X, Y, Z in terms of {H, S}: Z = SS, X = HZH, Y = XZ up to global phase.
Circuit decompose_to_generators(const Circuit &circuit);

}  // namespace qsat
