#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsat/circuit.h"
#include "qsat/tableau.h"

namespace qsat {

using StateId = uint32_t;

enum class KeyMode {
    /// States keyed by canonical tableau; one id per physical state.
    canonical,
    /// States keyed by the verbatim tableau bits as evolved from the input.
    /// Counts generator sets, not states. Unsound for equivalence checking.
    raw,
};

std::string_view key_mode_name(KeyMode mode);
KeyMode parse_key_mode(std::string_view text);

/// Unique states in discovery order. Ids are dense from 0.
class StateRegistry {
   public:
    explicit StateRegistry(KeyMode mode) : mode_(mode) {
    }

    KeyMode mode() const {
        return mode_;
    }
    size_t size() const {
        return states_.size();
    }
    const Tableau &state(StateId id) const {
        return states_.at(id);
    }

    /// Normalizes `t` for the registry's mode (canonicalizes in canonical mode),
    /// registers it if new, and returns its id and whether it was inserted.
    std::pair<StateId, bool> intern(Tableau t);

    /// Id of `t` (normalized per mode) if registered.
    std::optional<StateId> find(const Tableau &t) const;

    Tableau normalize(Tableau t) const;

   private:
    KeyMode mode_;
    std::vector<Tableau> states_;
    std::unordered_map<std::string, StateId> index_;
};

struct Transition {
    StateId from;
    StateId to;
    bool operator==(const Transition &other) const = default;
};

/// Result of structural analysis for one circuit.
///
/// domains[s] is the sorted set of ids that can appear at signal s.
/// transitions[i] lists (from, to) for gate i, ordered by ascending from.
struct AnalysisResult {
    std::shared_ptr<const StateRegistry> registry;
    std::vector<std::vector<Transition>> transitions;
    std::vector<std::vector<StateId>> domains;
    size_t num_inputs = 0;
    /// Bits per signal variable group, ceil(log2 |S|) with a minimum of 1. In a
    /// joint analysis this reflects the shared registry.
    unsigned bits_per_signal = 1;

    size_t num_signals() const {
        return domains.size();
    }
    size_t num_states() const {
        return registry->size();
    }

    /// Follows transitions from `input` to the last signal.
    StateId final_state(StateId input) const;
};

/// Smallest m >= 1 with 2^m >= num_states.
unsigned bits_for_states(size_t num_states);

/// Enumerates the unique states reachable at every signal from `inputs`,
/// registering them in discovery order (inputs first as ids 0..v-1, then gate
/// order, then ascending predecessor id).
///
/// Throws std::invalid_argument for empty or duplicate inputs and qubit-count
/// mismatches.
AnalysisResult structural_analysis(const Circuit &c, std::span<const Tableau> inputs, KeyMode mode = KeyMode::canonical);

/// Analyzes two circuits over one shared registry so that equal states get
/// equal ids in both results. Both results carry the joint bits_per_signal.
std::pair<AnalysisResult, AnalysisResult> joint_analysis(
    const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, KeyMode mode = KeyMode::canonical);

/// |S| from structural_analysis without keeping transitions.
size_t unique_state_count(const Circuit &c, std::span<const Tableau> inputs, KeyMode mode = KeyMode::canonical);

/// The single all-zero input.
std::vector<Tableau> all_zero_input(uint32_t num_qubits);

/// All 2^n basis states in ascending integer order (qubit 0 least significant).
/// Only sensible for small n.
std::vector<Tableau> all_basis_inputs(uint32_t num_qubits);

}  // namespace qsat
