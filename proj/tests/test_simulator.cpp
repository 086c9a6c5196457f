// Copyright 2026 The qload Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "helpers.hpp"

#include <algorithm>
#include <cmath>

#include "qload/dense_state.hpp"
#include "qload/diagnostics.hpp"
#include "qload/sparse_state.hpp"

using namespace qload;

namespace {

Circuit single(const Gate& g, std::uint32_t k) {
    Circuit c;
    c.num_qubits = k;
    c.roles.assign(k, QubitRole::Data);
    c.new_slice().gates.push_back(g);
    return c;
}

}  // namespace

TEST_CASE("classically controlled flip executes only on a 1 bit", "[simulator]") {
    // Control bit 0: the flip is not executed.
    auto off = run(single(clx(0, 0), 1), BasisLabel({0}));
    CHECK(off.amplitude(0) == cplx{1.0, 0.0});
    // Control bit 1: the flip is executed.
    auto on = run(single(clx(1, 0), 1), BasisLabel({0}));
    CHECK(on.amplitude(1) == cplx{1.0, 0.0});
    CHECK(on.amplitude(0) == cplx{0.0, 0.0});
}

TEST_CASE("H then CSwap creates the swapped superposition", "[simulator]") {
    // |0 b0 b1> with (b0,b1) = (0,1) -> (|001> + |110>)/sqrt(2)
    Circuit c;
    c.num_qubits = 3;
    c.roles.assign(3, QubitRole::Data);
    c.new_slice().gates.push_back(Gate(GateKind::H, 0));
    c.new_slice().gates.push_back(Gate(GateKind::CSWAP, 0, 1, 2));
    auto sv = run(c, BasisLabel({0, 0, 1}));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(sv.amplitude(0b001) - s) < 1e-15);
    CHECK(std::abs(sv.amplitude(0b110) - s) < 1e-15);
    CHECK(std::abs(sv.norm_sq() - 1.0) < 1e-15);
}

TEST_CASE("phase gate houses the imaginary unit", "[simulator]") {
    auto sv = run(single(Gate(GateKind::S, 0), 1), BasisLabel({1}));
    CHECK(sv.amplitude(1) == cplx{0.0, 1.0});
    auto sdg = run(single(Gate(GateKind::Sdag, 0), 1), BasisLabel({1}));
    CHECK(sdg.amplitude(1) == cplx{0.0, -1.0});
}

TEST_CASE("run rejects dimension mismatch", "[simulator]") {
    auto c = single(Gate(GateKind::H, 0), 2);
    CHECK_THROWS_AS(run(c, BasisLabel({0})), std::invalid_argument);
    CHECK_THROWS_AS(run_sparse(c, BasisLabel({0, 1, 1})), std::invalid_argument);
}

TEST_CASE("norm is preserved after every gate", "[simulator][property]") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        const std::uint32_t k = trial % 2 ? 8 : 12;
        auto c = testing::random_circuit(rng, k, 200);
        StateVector sv(k);
        for (const auto& slice : c.slices)
            for (const auto& g : slice.gates) {
                sv.apply(g);
                REQUIRE(std::abs(sv.norm_sq() - 1.0) < 1e-12);
            }
    }
}

TEST_CASE("gates inside a valid slice commute bit-exactly", "[simulator][property]") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        // Build one slice of disjoint-support gates, then compare two orders.
        const std::uint32_t k = 9;
        std::vector<std::uint32_t> qubits(k);
        for (std::uint32_t i = 0; i < k; ++i) qubits[i] = i;
        std::shuffle(qubits.begin(), qubits.end(), rng);
        std::vector<Gate> gates;
        std::size_t at = 0;
        while (at + 3 <= k) {
            const int pick = static_cast<int>(rng() % 3);
            if (pick == 0)
                gates.push_back(Gate(GateKind::H, qubits[at])), at += 1;
            else if (pick == 1)
                gates.push_back(Gate(GateKind::CNOT, qubits[at], qubits[at + 1])), at += 2;
            else
                gates.push_back(Gate(GateKind::CSWAP, qubits[at], qubits[at + 1], qubits[at + 2])),
                    at += 3;
        }
        auto bits = testing::random_bits(rng, k);
        StateVector a = StateVector::from_basis(BasisLabel(bits.bits));
        for (const auto& g : gates) a.apply(g);
        std::shuffle(gates.begin(), gates.end(), rng);
        StateVector b = StateVector::from_basis(BasisLabel(bits.bits));
        for (const auto& g : gates) b.apply(g);
        REQUIRE(a.amplitudes() == b.amplitudes());
    }
}

TEST_CASE("dense and sparse engines agree on random circuits", "[simulator][property]") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint32_t k = 6;
        auto c = testing::random_circuit(rng, k, 60);
        auto bits = testing::random_bits(rng, k);
        auto dense = run(c, BasisLabel(bits.bits));
        auto sparse = run_sparse(c, BasisLabel(bits.bits));
        double max_diff = 0;
        for (std::uint64_t l = 0; l < dense.dim(); ++l)
            max_diff = std::max(max_diff, std::abs(dense.amplitude(l) - sparse.amplitude(l)));
        CHECK(max_diff < 1e-12);
    }
}

TEST_CASE("unitary_of identity and guard", "[simulator]") {
    Circuit empty;
    empty.num_qubits = 3;
    empty.roles.assign(3, QubitRole::Data);
    CHECK(unitary_of(empty).max_abs_diff(Matrix::identity(8)) == 0.0);

    Circuit big;
    big.num_qubits = 13;
    big.roles.assign(13, QubitRole::Data);
    CHECK_THROWS_AS(unitary_of(big), std::invalid_argument);
}

TEST_CASE("sparse support stays small on loader-style circuits", "[simulator]") {
    Circuit c;
    c.num_qubits = 24;
    c.roles.assign(24, QubitRole::Data);
    for (std::uint32_t q = 0; q < 8; ++q) c.new_slice().gates.push_back(Gate(GateKind::H, q));
    for (std::uint32_t q = 0; q < 8; ++q)
        c.new_slice().gates.push_back(Gate(GateKind::CNOT, q, 8 + q));
    auto s = run_sparse(c);
    CHECK(s.support_size() == 256);
    CHECK(std::abs(s.norm_sq() - 1.0) < 1e-12);
}

TEST_CASE("interfering Hadamards cancel exactly in the sparse engine", "[simulator]") {
    // H twice is the identity; the merge step must cancel the cross terms.
    Circuit c;
    c.num_qubits = 2;
    c.roles.assign(2, QubitRole::Data);
    c.new_slice().gates.push_back(Gate(GateKind::H, 0));
    c.new_slice().gates.push_back(Gate(GateKind::H, 0));
    auto s = run_sparse(c, BasisLabel({1, 0}));
    REQUIRE(s.support_size() == 1);
    CHECK(s.terms()[0].label == 0b10);
}
