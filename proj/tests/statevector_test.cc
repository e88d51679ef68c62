#include <gtest/gtest.h>

#include "oracles.h"
#include "qsat/statevector.h"

using namespace qsat;

TEST(statevector, examples) {
    const double r = 1 / std::sqrt(2.0);
    Amplitudes zero = to_statevector(Tableau::from_labels({"+ZI", "+IZ"}));
    ASSERT_EQ(zero.size(), 4u);
    EXPECT_NEAR(std::abs(zero[0] - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(zero[1]) + std::abs(zero[2]) + std::abs(zero[3]), 0, 1e-12);

    Amplitudes bell = to_statevector(Tableau::from_labels({"+ZZ", "+XX"}));
    EXPECT_TRUE(equal_up_to_global_phase(bell, {r, 0, 0, r}));

    Amplitudes plus = to_statevector(Tableau::from_labels({"+X"}));
    EXPECT_TRUE(equal_up_to_global_phase(plus, {r, r}));
    EXPECT_NEAR(plus[0].imag(), 0, 1e-12);
    EXPECT_GT(plus[0].real(), 0);

    Amplitudes minus = to_statevector(Tableau::from_labels({"-X"}));
    EXPECT_TRUE(equal_up_to_global_phase(minus, {r, -r}));
    EXPECT_FALSE(equal_up_to_global_phase(minus, plus));
}

TEST(statevector, stabilized_by_every_row) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        uint32_t n = 1 + seed % 4;
        Tableau t = Tableau::from_basis_state(std::string(n, '0'));
        t.apply(random_clifford_circuit(n, 40, seed));
        Amplitudes psi = to_statevector(t);
        for (size_t row = 0; row < n; row++) {
            Amplitudes g = apply_pauli_row(t, row, psi);
            for (size_t k = 0; k < psi.size(); k++) {
                ASSERT_NEAR(std::abs(g[k] - psi[k]), 0, 1e-9);
            }
        }
    }
}

TEST(statevector, matches_dense_simulation) {
    for (uint64_t seed = 0; seed < 300; seed++) {
        uint32_t n = 1 + seed % 3;
        Circuit c = random_clifford_circuit(n, 50, seed);
        Tableau t = Tableau::from_basis_state(std::string(n, '0'));
        t.apply(c);
        ASSERT_TRUE(oracle::dense_equal_up_to_phase(to_statevector(t), oracle::dense_run(c, 0), 1e-9))
            << "seed " << seed;
    }
}

TEST(statevector, canonical_equality_iff_same_state) {
    std::vector<Tableau> pool;
    for (uint64_t seed = 0; seed < 200; seed++) {
        uint32_t n = 2;
        Tableau t = Tableau::from_basis_state(std::string(n, '0'));
        t.apply(random_clifford_circuit(n, 3 + seed % 12, seed));
        pool.push_back(t);
    }
    size_t same = 0;
    for (size_t i = 0; i < pool.size(); i++) {
        Amplitudes a = to_statevector(pool[i]);
        Tableau ca = canonicalize(pool[i]);
        for (size_t j = i + 1; j < pool.size(); j++) {
            bool eq_state = equal_up_to_global_phase(a, to_statevector(pool[j]));
            bool eq_canon = ca == canonicalize(pool[j]);
            ASSERT_EQ(eq_state, eq_canon) << i << " vs " << j;
            same += eq_state;
        }
    }
    // The pool is small enough that collisions occur, so both directions are exercised.
    EXPECT_GT(same, 0u);
}

TEST(statevector, global_phase_equality) {
    Amplitudes a{{0.6, 0}, {0, 0.8}};
    Amplitudes b{{0, 0.6}, {-0.8, 0}};
    EXPECT_TRUE(equal_up_to_global_phase(a, b));
    Amplitudes c{{0.6, 0}, {0, -0.8}};
    EXPECT_FALSE(equal_up_to_global_phase(a, c));
    EXPECT_FALSE(equal_up_to_global_phase(a, Amplitudes{{1, 0}}));
}

TEST(statevector, size_limit) {
    EXPECT_THROW(to_statevector(Tableau::from_basis_state(std::string(kMaxStatevectorQubits + 1, '0'))),
                 std::invalid_argument);
}
