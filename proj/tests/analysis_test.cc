#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "oracles.h"
#include "qsat/analysis.h"
#include "qsat/statevector.h"

using namespace qsat;

namespace {

const Circuit kBell = parse_circuit("qreg q[2]; h q[1]; cx q[1],q[0];");

std::vector<Gate> all_gates(uint32_t n, bool with_paulis) {
    std::vector<Gate> out;
    for (uint32_t q = 0; q < n; q++) {
        out.push_back(Gate::single(GateKind::H, q));
        out.push_back(Gate::single(GateKind::S, q));
        if (with_paulis) {
            out.push_back(Gate::single(GateKind::X, q));
            out.push_back(Gate::single(GateKind::Y, q));
            out.push_back(Gate::single(GateKind::Z, q));
        }
        for (uint32_t t = 0; t < n; t++) {
            if (t != q) {
                out.push_back(Gate::cnot(q, t));
            }
        }
    }
    return out;
}

/// Closure of |0...0> under all gates, keyed by canonical or verbatim tableau.
size_t bfs_tableaux(uint32_t n, bool canonical) {
    std::set<std::string> seen;
    std::deque<Tableau> queue;
    Tableau start = Tableau::from_basis_state(std::string(n, '0'));
    seen.insert((canonical ? canonicalize(start) : start).key());
    queue.push_back(start);
    auto gates = all_gates(n, true);
    while (!queue.empty()) {
        Tableau t = queue.front();
        queue.pop_front();
        for (const Gate &g : gates) {
            Tableau u = apply_gate(t, g);
            if (seen.insert((canonical ? canonicalize(u) : u).key()).second) {
                queue.push_back(u);
            }
        }
    }
    return seen.size();
}

/// Closure of |0...0> under {H, S, CNOT} with dense vectors, up to global phase.
size_t bfs_dense(uint32_t n) {
    std::vector<oracle::Dense> seen{oracle::dense_basis_state(n, 0)};
    std::deque<oracle::Dense> queue{seen.front()};
    auto gates = all_gates(n, false);
    while (!queue.empty()) {
        oracle::Dense psi = queue.front();
        queue.pop_front();
        for (const Gate &g : gates) {
            oracle::Dense phi = psi;
            oracle::dense_apply(phi, n, g);
            bool known = false;
            for (const auto &s : seen) {
                if (oracle::dense_equal_up_to_phase(s, phi, 1e-9)) {
                    known = true;
                    break;
                }
            }
            if (!known) {
                seen.push_back(phi);
                queue.push_back(phi);
            }
        }
    }
    return seen.size();
}

size_t stabilizer_state_count(uint32_t n) {
    size_t count = size_t{1} << n;
    for (uint32_t k = 1; k <= n; k++) {
        count *= (size_t{1} << k) + 1;
    }
    return count;
}

}  // namespace

TEST(analysis, bits_for_states) {
    EXPECT_EQ(bits_for_states(1), 1u);
    EXPECT_EQ(bits_for_states(2), 1u);
    EXPECT_EQ(bits_for_states(3), 2u);
    EXPECT_EQ(bits_for_states(12), 4u);
    EXPECT_EQ(bits_for_states(16), 4u);
    EXPECT_EQ(bits_for_states(17), 5u);
    EXPECT_EQ(bits_for_states(360), 9u);
}

TEST(analysis, bell_all_basis_inputs) {
    AnalysisResult a = structural_analysis(kBell, all_basis_inputs(2));
    EXPECT_EQ(a.num_states(), 12u);
    EXPECT_EQ(a.bits_per_signal, 4u);
    ASSERT_EQ(a.num_signals(), 3u);
    EXPECT_EQ(a.domains[0], (std::vector<StateId>{0, 1, 2, 3}));
    EXPECT_EQ(a.domains[1], (std::vector<StateId>{4, 5, 6, 7}));
    EXPECT_EQ(a.domains[2], (std::vector<StateId>{8, 9, 10, 11}));
    ASSERT_EQ(a.transitions.size(), 2u);
    for (size_t g = 0; g < 2; g++) {
        ASSERT_EQ(a.transitions[g].size(), 4u);
        std::set<StateId> from, to;
        for (const Transition &t : a.transitions[g]) {
            from.insert(t.from);
            to.insert(t.to);
        }
        EXPECT_EQ(from.size(), 4u);
        EXPECT_EQ(to.size(), 4u);
    }
    // Registry ids follow the oracle: the state at every id is what the circuit produces.
    for (StateId in = 0; in < 4; in++) {
        Tableau t = a.registry->state(in);
        t.apply(kBell);
        EXPECT_EQ(canonicalize(t), a.registry->state(a.final_state(in)));
    }
}

TEST(analysis, empty_circuit) {
    Circuit c{2, {}};
    AnalysisResult a = structural_analysis(c, all_basis_inputs(2));
    EXPECT_EQ(a.num_states(), 4u);
    EXPECT_TRUE(a.transitions.empty());
    EXPECT_EQ(a.num_signals(), 1u);
    EXPECT_EQ(a.bits_per_signal, 2u);
    EXPECT_EQ(a.final_state(3), 3u);
}

TEST(analysis, rejects_bad_inputs) {
    std::vector<Tableau> none;
    EXPECT_THROW(structural_analysis(kBell, none), std::invalid_argument);
    auto dup = all_zero_input(2);
    dup.push_back(dup.front());
    EXPECT_THROW(structural_analysis(kBell, dup), std::invalid_argument);
    EXPECT_THROW(structural_analysis(kBell, all_zero_input(3)), std::invalid_argument);
    // Same state written with different generators is a duplicate in canonical mode.
    std::vector<Tableau> same{Tableau::from_labels({"+ZZ", "+XX"}), Tableau::from_labels({"+XX", "-YY"})};
    EXPECT_THROW(structural_analysis(Circuit{2, {}}, same), std::invalid_argument);
    EXPECT_NO_THROW(structural_analysis(Circuit{2, {}}, same, KeyMode::raw));
}

TEST(analysis, single_qubit_bounded_by_six) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        Circuit c = random_clifford_circuit(1, 1000, seed);
        EXPECT_LE(unique_state_count(c, all_zero_input(1)), 6u);
        EXPECT_LE(unique_state_count(c, all_zero_input(1), KeyMode::raw), 6u);
    }
}

TEST(analysis, structural_properties) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        uint32_t n = 1 + seed % 4;
        Circuit c = random_clifford_circuit(n, 40, seed);
        std::vector<Tableau> inputs = all_basis_inputs(n);
        inputs.erase(inputs.begin() + static_cast<std::ptrdiff_t>(std::min<size_t>(inputs.size(), 1 + seed % 4)), inputs.end());
        size_t v = inputs.size();
        AnalysisResult a = structural_analysis(c, inputs);
        AnalysisResult raw = structural_analysis(c, inputs, KeyMode::raw);
        EXPECT_LE(a.num_states(), v * (c.gates.size() + 1));
        EXPECT_LE(a.num_states(), raw.num_states());
        EXPECT_EQ(a.num_signals(), c.gates.size() + 1);
        for (const auto &d : a.domains) {
            EXPECT_EQ(d.size(), v);
            EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
        }
        for (size_t g = 0; g < c.gates.size(); g++) {
            std::set<StateId> from, to;
            for (const Transition &t : a.transitions[g]) {
                from.insert(t.from);
                to.insert(t.to);
                EXPECT_TRUE(std::binary_search(a.domains[g].begin(), a.domains[g].end(), t.from));
                EXPECT_TRUE(std::binary_search(a.domains[g + 1].begin(), a.domains[g + 1].end(), t.to));
                EXPECT_EQ(canonicalize(apply_gate(a.registry->state(t.from), c.gates[g])), a.registry->state(t.to));
            }
            EXPECT_EQ(from.size(), v);
            EXPECT_EQ(to.size(), v);
        }
        // Deterministic.
        AnalysisResult again = structural_analysis(c, inputs);
        EXPECT_EQ(again.transitions, a.transitions);
        EXPECT_EQ(again.domains, a.domains);
        for (StateId id = 0; id < a.num_states(); id++) {
            EXPECT_EQ(again.registry->state(id), a.registry->state(id));
        }
    }
}

TEST(analysis, registry_in_canonical_mode_matches_statevectors) {
    Circuit c = random_clifford_circuit(3, 200, 5);
    AnalysisResult a = structural_analysis(c, all_basis_inputs(3));
    std::vector<Amplitudes> states;
    for (StateId id = 0; id < a.num_states(); id++) {
        states.push_back(to_statevector(a.registry->state(id)));
    }
    for (size_t i = 0; i < states.size(); i++) {
        for (size_t j = i + 1; j < states.size(); j++) {
            ASSERT_FALSE(equal_up_to_global_phase(states[i], states[j])) << i << " " << j;
        }
    }
}

TEST(analysis, state_count_oracles) {
    EXPECT_EQ(stabilizer_state_count(1), 6u);
    EXPECT_EQ(stabilizer_state_count(2), 60u);
    EXPECT_EQ(bfs_tableaux(1, true), 6u);
    EXPECT_EQ(bfs_tableaux(2, true), 60u);
    EXPECT_EQ(bfs_dense(1), 6u);
    EXPECT_EQ(bfs_dense(2), 60u);
    EXPECT_EQ(bfs_tableaux(1, false), 6u);
    EXPECT_EQ(bfs_tableaux(2, false), 360u);
}

TEST(analysis, saturation) {
    Circuit c1 = random_clifford_circuit(1, 5000, 1);
    Circuit c2 = random_clifford_circuit(2, 5000, 1);
    Circuit long2 = random_clifford_circuit(2, 20000, 1);
    EXPECT_EQ(unique_state_count(c1, all_zero_input(1), KeyMode::canonical), 6u);
    EXPECT_EQ(unique_state_count(c1, all_zero_input(1), KeyMode::raw), 6u);
    EXPECT_EQ(unique_state_count(c2, all_zero_input(2), KeyMode::canonical), 60u);
    EXPECT_LE(unique_state_count(c2, all_zero_input(2), KeyMode::raw), 360u);
    EXPECT_EQ(unique_state_count(long2, all_zero_input(2), KeyMode::raw), 360u);
}

TEST(joint_analysis, same_circuit) {
    Circuit c = random_clifford_circuit(3, 30, 2);
    auto [a, b] = joint_analysis(c, c, all_basis_inputs(3));
    EXPECT_EQ(a.transitions, b.transitions);
    EXPECT_EQ(a.registry, b.registry);
}

TEST(joint_analysis, hh_versus_empty) {
    Circuit hh = parse_circuit("qreg q[1]; h q[0]; h q[0];");
    Circuit empty{1, {}};
    auto [a, b] = joint_analysis(hh, empty, all_zero_input(1));
    EXPECT_EQ(a.domains.back(), (std::vector<StateId>{0}));
    EXPECT_EQ(b.domains.back(), (std::vector<StateId>{0}));
    EXPECT_EQ(a.num_states(), 2u);
}

TEST(joint_analysis, bell_versus_truncated) {
    Circuit truncated = parse_circuit("qreg q[2]; h q[1];");
    auto [a, b] = joint_analysis(kBell, truncated, all_basis_inputs(2));
    EXPECT_EQ(a.num_states(), 12u);
    EXPECT_EQ(b.num_states(), 12u);
    EXPECT_EQ(a.bits_per_signal, 4u);
    EXPECT_EQ(b.bits_per_signal, 4u);
    EXPECT_NE(a.domains.back(), b.domains.back());
    EXPECT_EQ(a.domains.front(), b.domains.front());
}

TEST(joint_analysis, joint_bits_cover_both) {
    // A reaches few states, B many; both must use B's width.
    Circuit small{2, {}};
    Circuit large = random_clifford_circuit(2, 200, 3);
    auto [a, b] = joint_analysis(small, large, all_zero_input(2));
    EXPECT_EQ(a.bits_per_signal, b.bits_per_signal);
    EXPECT_EQ(a.bits_per_signal, bits_for_states(b.num_states()));
    EXPECT_THROW(joint_analysis(small, Circuit{3, {}}, all_zero_input(2)), std::invalid_argument);
}

TEST(analysis, key_mode_names) {
    EXPECT_EQ(parse_key_mode("raw"), KeyMode::raw);
    EXPECT_EQ(parse_key_mode("canonical"), KeyMode::canonical);
    EXPECT_THROW(parse_key_mode("other"), std::invalid_argument);
    EXPECT_EQ(key_mode_name(KeyMode::raw), "raw");
}
