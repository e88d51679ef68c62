#include "qsat/analysis.h"

#include <algorithm>
#include <stdexcept>

namespace qsat {

std::string_view key_mode_name(KeyMode mode) {
    return mode == KeyMode::canonical ? "canonical" : "raw";
}

KeyMode parse_key_mode(std::string_view text) {
    if (text == "canonical") {
        return KeyMode::canonical;
    }
    if (text == "raw") {
        return KeyMode::raw;
    }
    throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected canonical or raw)");
}

Tableau StateRegistry::normalize(Tableau t) const {
    if (mode_ == KeyMode::canonical) {
        return canonicalize(std::move(t));
    }
    return t;
}

std::pair<StateId, bool> StateRegistry::intern(Tableau t) {
    t = normalize(std::move(t));
    auto [it, inserted] = index_.try_emplace(t.key(), static_cast<StateId>(states_.size()));
    if (inserted) {
        states_.push_back(std::move(t));
    }
    return {it->second, inserted};
}

std::optional<StateId> StateRegistry::find(const Tableau &t) const {
    auto it = index_.find(normalize(t).key());
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

unsigned bits_for_states(size_t num_states) {
    unsigned m = 1;
    while ((size_t{1} << m) < num_states) {
        m++;
    }
    return m;
}

StateId AnalysisResult::final_state(StateId input) const {
    StateId cur = input;
    for (const auto &gate : transitions) {
        auto it = std::lower_bound(gate.begin(), gate.end(), cur, [](const Transition &t, StateId id) {
            return t.from < id;
        });
        if (it == gate.end() || it->from != cur) {
            throw std::out_of_range("final_state: id " + std::to_string(cur) + " is not in the signal domain");
        }
        cur = it->to;
    }
    return cur;
}

namespace {

std::vector<StateId> register_inputs(StateRegistry &registry, std::span<const Tableau> inputs, uint32_t num_qubits) {
    if (inputs.empty()) {
        throw std::invalid_argument("structural analysis needs at least one input state");
    }
    std::vector<StateId> ids;
    for (size_t k = 0; k < inputs.size(); k++) {
        if (inputs[k].num_qubits() != num_qubits) {
            throw std::invalid_argument(
                "input " + std::to_string(k) + " has " + std::to_string(inputs[k].num_qubits()) +
                " qubits, circuit has " + std::to_string(num_qubits));
        }
        auto [id, inserted] = registry.intern(inputs[k]);
        if (!inserted) {
            throw std::invalid_argument(
                "input " + std::to_string(k) + " duplicates input " + std::to_string(id) + " under " +
                std::string(key_mode_name(registry.mode())) + " keys");
        }
        ids.push_back(id);
    }
    return ids;
}

AnalysisResult analyze_into(
    const std::shared_ptr<StateRegistry> &registry, const Circuit &c, const std::vector<StateId> &input_ids) {
    c.validate();
    AnalysisResult result;
    result.registry = registry;
    result.num_inputs = input_ids.size();
    result.transitions.reserve(c.gates.size());
    result.domains.reserve(c.num_signals());

    std::vector<StateId> domain = input_ids;
    std::sort(domain.begin(), domain.end());
    result.domains.push_back(domain);

    for (const Gate &g : c.gates) {
        std::vector<Transition> step;
        step.reserve(domain.size());
        std::vector<StateId> next;
        next.reserve(domain.size());
        for (StateId from : domain) {
            Tableau t = registry->state(from);
            t.apply(g);
            StateId to = registry->intern(std::move(t)).first;
            step.push_back({from, to});
            next.push_back(to);
        }
        std::sort(next.begin(), next.end());
        if (std::adjacent_find(next.begin(), next.end()) != next.end()) {
            throw std::logic_error("structural analysis: gate " + g.str() + " merged two states");
        }
        result.transitions.push_back(std::move(step));
        result.domains.push_back(next);
        domain = std::move(next);
    }
    return result;
}

}  // namespace

AnalysisResult structural_analysis(const Circuit &c, std::span<const Tableau> inputs, KeyMode mode) {
    c.validate();
    auto registry = std::make_shared<StateRegistry>(mode);
    auto ids = register_inputs(*registry, inputs, c.num_qubits);
    AnalysisResult result = analyze_into(registry, c, ids);
    result.bits_per_signal = bits_for_states(registry->size());
    return result;
}

std::pair<AnalysisResult, AnalysisResult> joint_analysis(
    const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, KeyMode mode) {
    a.validate();
    b.validate();
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument(
            "qubit-count mismatch: " + std::to_string(a.num_qubits) + " vs " + std::to_string(b.num_qubits));
    }
    auto registry = std::make_shared<StateRegistry>(mode);
    auto ids = register_inputs(*registry, inputs, a.num_qubits);
    AnalysisResult ra = analyze_into(registry, a, ids);
    AnalysisResult rb = analyze_into(registry, b, ids);
    unsigned m = bits_for_states(registry->size());
    ra.bits_per_signal = m;
    rb.bits_per_signal = m;
    return {std::move(ra), std::move(rb)};
}

size_t unique_state_count(const Circuit &c, std::span<const Tableau> inputs, KeyMode mode) {
    c.validate();
    StateRegistry registry(mode);
    auto ids = register_inputs(registry, inputs, c.num_qubits);
    std::vector<StateId> domain = ids;
    for (const Gate &g : c.gates) {
        for (StateId &id : domain) {
            Tableau t = registry.state(id);
            t.apply(g);
            id = registry.intern(std::move(t)).first;
        }
    }
    return registry.size();
}

std::vector<Tableau> all_zero_input(uint32_t num_qubits) {
    return {Tableau::from_basis_state(std::string(num_qubits, '0'))};
}

std::vector<Tableau> all_basis_inputs(uint32_t num_qubits) {
    if (num_qubits == 0 || num_qubits > 20) {
        throw std::invalid_argument("all_basis_inputs: need 1..20 qubits");
    }
    std::vector<Tableau> out;
    for (uint64_t k = 0; k < (uint64_t{1} << num_qubits); k++) {
        std::string bits(num_qubits, '0');
        for (uint32_t q = 0; q < num_qubits; q++) {
            bits[q] = ((k >> q) & 1) ? '1' : '0';
        }
        out.push_back(Tableau::from_basis_state(bits));
    }
    return out;
}

}  // namespace qsat
