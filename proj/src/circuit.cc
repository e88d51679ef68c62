#include "qsat/circuit.h"

#include <random>

namespace qsat {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::CNOT:
            return "cx";
    }
    return "?";
}

Gate Gate::single(GateKind kind, uint32_t target) {
    if (kind == GateKind::CNOT) {
        throw std::invalid_argument("CNOT needs a control qubit");
    }
    return Gate{kind, target, std::nullopt};
}

Gate Gate::cnot(uint32_t control, uint32_t target) {
    return Gate{GateKind::CNOT, target, control};
}

std::string Gate::str() const {
    std::string out(gate_name(kind));
    if (control.has_value()) {
        out += " q[" + std::to_string(*control) + "],q[" + std::to_string(target) + "]";
    } else {
        out += " q[" + std::to_string(target) + "]";
    }
    return out;
}

void Circuit::validate() const {
    if (num_qubits == 0) {
        throw std::invalid_argument("circuit must have at least one qubit");
    }
    for (size_t k = 0; k < gates.size(); k++) {
        const Gate &g = gates[k];
        auto where = " (gate " + std::to_string(k) + ": " + g.str() + ")";
        if (g.target >= num_qubits) {
            throw std::invalid_argument("target qubit out of range" + where);
        }
        if ((g.kind == GateKind::CNOT) != g.control.has_value()) {
            throw std::invalid_argument("control operand present iff gate is CNOT" + where);
        }
        if (g.control.has_value()) {
            if (*g.control >= num_qubits) {
                throw std::invalid_argument("control qubit out of range" + where);
            }
            if (*g.control == g.target) {
                throw std::invalid_argument("control equals target" + where);
            }
        }
    }
}

Circuit random_clifford_circuit(uint32_t num_qubits, size_t num_gates, uint64_t seed, GateAlphabet alphabet) {
    if (num_qubits == 0) {
        throw std::invalid_argument("random_clifford_circuit: num_qubits must be positive");
    }
    std::vector<GateKind> kinds;
    if (alphabet == GateAlphabet::full) {
        kinds = {GateKind::H, GateKind::S, GateKind::X, GateKind::Y, GateKind::Z};
    } else {
        kinds = {GateKind::H, GateKind::S};
    }
    if (num_qubits > 1) {
        kinds.push_back(GateKind::CNOT);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick_kind(0, kinds.size() - 1);
    std::uniform_int_distribution<uint32_t> pick_qubit(0, num_qubits - 1);
    std::uniform_int_distribution<uint32_t> pick_other(0, num_qubits >= 2 ? num_qubits - 2 : 0);

    Circuit c{num_qubits, {}};
    c.gates.reserve(num_gates);
    for (size_t k = 0; k < num_gates; k++) {
        GateKind kind = kinds[pick_kind(rng)];
        if (kind == GateKind::CNOT) {
            uint32_t control = pick_qubit(rng);
            uint32_t target = pick_other(rng);
            if (target >= control) {
                target++;
            }
            c.gates.push_back(Gate::cnot(control, target));
        } else {
            c.gates.push_back(Gate::single(kind, pick_qubit(rng)));
        }
    }
    return c;
}

Circuit remove_random_gate(const Circuit &circuit, uint64_t seed) {
    if (circuit.gates.empty()) {
        throw std::invalid_argument("remove_random_gate: circuit has no gates");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, circuit.gates.size() - 1);
    Circuit out = circuit;
    out.gates.erase(out.gates.begin() + static_cast<std::ptrdiff_t>(pick(rng)));
    return out;
}

Circuit decompose_to_generators(const Circuit &circuit) {
    Circuit out{circuit.num_qubits, {}};
    auto h = [&](uint32_t q) {
        out.gates.push_back(Gate::single(GateKind::H, q));
    };
    auto s = [&](uint32_t q) {
        out.gates.push_back(Gate::single(GateKind::S, q));
    };
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::S:
            case GateKind::CNOT:
                out.gates.push_back(g);
                break;
            case GateKind::Z:
                s(g.target);
                s(g.target);
                break;
            case GateKind::X:
                h(g.target);
                s(g.target);
                s(g.target);
                h(g.target);
                break;
            case GateKind::Y:
                // Z first, then X: the product XZ equals Y up to a global phase.
                s(g.target);
                s(g.target);
                h(g.target);
                s(g.target);
                s(g.target);
                h(g.target);
                break;
        }
    }
    return out;
}

}  // namespace qsat
