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

#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qload/bitvector.hpp"
#include "qload/circuit.hpp"
#include "qload/dense_state.hpp"

namespace qload::testing {

inline BitVector random_bits(std::mt19937& rng, std::size_t n) {
    std::vector<int> b(n);
    for (auto& v : b) v = static_cast<int>(rng() & 1u);
    return BitVector(std::move(b));
}

/// Independent oracle for the address-data target state: amplitude
/// 2^(-n/2) on every label <address bits><data bit>, written directly from
/// the state format definition rather than through the library builder.
inline std::vector<cplx> expected_target(const BitVector& bits) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < bits.size()) ++n;
    REQUIRE((std::size_t{1} << n) == bits.size());
    std::vector<cplx> t(std::size_t{1} << (n + 1), cplx{0, 0});
    for (std::size_t addr = 0; addr < bits.size(); ++addr) {
        std::uint64_t label = 0;
        for (std::size_t k = 0; k < n; ++k)
            label = (label << 1) | ((addr >> (n - 1 - k)) & 1u);
        label = (label << 1) | static_cast<std::uint64_t>(bits[addr]);
        t[label] = std::pow(0.5, 0.5 * static_cast<double>(n));
    }
    return t;
}

/// Valid random circuit: every gate in its own slice, operands distinct.
inline Circuit random_circuit(std::mt19937& rng, std::uint32_t num_qubits, std::size_t num_gates,
                              bool permutation_only = false) {
    Circuit c;
    c.num_qubits = num_qubits;
    c.roles.assign(num_qubits, QubitRole::Data);
    std::uniform_int_distribution<std::uint32_t> pick_q(0, num_qubits - 1);
    const std::vector<GateKind> all = {GateKind::X,    GateKind::H,     GateKind::S,
                                       GateKind::Sdag, GateKind::CNOT,  GateKind::CCNOT,
                                       GateKind::SWAP, GateKind::CSWAP, GateKind::CLX,
                                       GateKind::CS,   GateKind::CSDG};
    const std::vector<GateKind> perm = {GateKind::X, GateKind::CNOT, GateKind::CCNOT,
                                        GateKind::SWAP, GateKind::CSWAP, GateKind::CLX};
    const auto& kinds = permutation_only ? perm : all;
    for (std::size_t i = 0; i < num_gates; ++i) {
        const GateKind k = kinds[rng() % kinds.size()];
        Gate g;
        g.kind = k;
        std::vector<std::uint32_t> ops;
        while (ops.size() < static_cast<std::size_t>(arity(k))) {
            const auto q = pick_q(rng);
            bool dup = false;
            for (auto o : ops) dup |= (o == q);
            if (!dup) ops.push_back(q);
        }
        for (std::size_t j = 0; j < ops.size(); ++j) g.operands[j] = ops[j];
        if (k == GateKind::CLX) g.classical_bit = static_cast<std::int8_t>(rng() & 1u);
        c.new_slice().gates.push_back(g);
    }
    return c;
}

}  // namespace qload::testing
