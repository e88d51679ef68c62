#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsat/analysis.h"
#include "qsat/encoder.h"
#include "qsat/solver.h"

namespace qsat {

enum class InputKind {
    all_zero,
    random_basis,
    /// Random Clifford prefix applied to |0...0>.
    random_stabilizer,
};

std::string_view input_kind_name(InputKind kind);
/// Accepts all-zero, random-basis, random-stabilizer (or with underscores).
InputKind parse_input_kind(std::string_view text);

/// Derives an independent 64-bit seed for `stream` from `seed` (splitmix64).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// `count` distinct input states (distinct canonical tableaux). Collisions are
/// redrawn up to a bounded number of attempts, after which, or when the kind
/// cannot supply `count` states, std::invalid_argument is thrown.
std::vector<Tableau> generate_inputs(uint32_t num_qubits, size_t count, InputKind kind, uint64_t seed);

struct MiterEncoding {
    Circuit a;
    Circuit b;
    /// symbols[0] and analyses[0] are circuit A, [1] are circuit B.
    Encoding encoding;

    const StateRegistry &registry() const {
        return *encoding.analyses[0].registry;
    }
    const SignalGroup &group_a() const {
        return encoding.symbols[0];
    }
    const SignalGroup &group_b() const {
        return encoding.symbols[1];
    }
};

/// Joint analysis over a shared registry followed by encode_miter. The formula
/// is satisfiable iff some input yields different output states.
///
/// Throws std::invalid_argument for a qubit-count mismatch or KeyMode::raw,
/// which would give one physical state several ids.
MiterEncoding build_miter(
    const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, KeyMode mode = KeyMode::canonical);

struct Counterexample {
    StateId input_id;
    Tableau input_tableau;
    StateId output_id_a;
    StateId output_id_b;
};

/// Reads the input and both output ids from a satisfied miter and replays the
/// input through both circuits. Throws std::logic_error if the replay does not
/// reproduce the decoded ids or the outputs coincide.
Counterexample decode_counterexample(const SolverInterface &solver, const MiterEncoding &miter);

enum class Verdict { equivalent, not_equivalent };
std::string_view verdict_name(Verdict v);

struct CheckStats {
    double t_prep_ms = 0;
    double t_solve_ms = 0;
    uint32_t num_vars = 0;
    size_t num_clauses = 0;
    size_t num_states = 0;
    std::optional<uint64_t> conflicts;
};

/// Equivalent means no tested input distinguishes the circuits.
struct EquivalenceResult {
    Verdict verdict;
    std::optional<Counterexample> counterexample;
    CheckStats stats;
};

struct CheckOptions {
    size_t num_inputs = 16;
    InputKind input_kind = InputKind::random_basis;
    uint64_t seed = 0;
    /// Passed to make_solver.
    std::string solver = "internal";
};

EquivalenceResult check_equivalence(const Circuit &a, const Circuit &b, const CheckOptions &options = {});

/// Same with explicit inputs and solver. The solver must be fresh.
EquivalenceResult check_equivalence(
    const Circuit &a, const Circuit &b, std::span<const Tableau> inputs, SolverInterface &solver);

}  // namespace qsat
