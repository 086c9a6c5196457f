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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qload {

/// Gate vocabulary of the IR. CLX is the classically controlled bit flip
/// (double-wire control in the diagrams): it applies X iff its classical
/// control bit is 1. CS/CSDG are the controlled phase gates needed by the
/// two-qubit Toffoli decomposition.
enum class GateKind : std::uint8_t {
    X,
    H,
    S,
    Sdag,
    CNOT,
    CCNOT,
    SWAP,
    CSWAP,
    CLX,
    CS,
    CSDG,
};

constexpr int arity(GateKind k) {
    switch (k) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdag:
    case GateKind::CLX:
        return 1;
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CS:
    case GateKind::CSDG:
        return 2;
    case GateKind::CCNOT:
    case GateKind::CSWAP:
        return 3;
    }
    return 0;
}

constexpr const char* mnemonic(GateKind k) {
    switch (k) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdag: return "SDG";
    case GateKind::CNOT: return "CX";
    case GateKind::CCNOT: return "CCX";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CSWAP: return "CSWAP";
    case GateKind::CLX: return "CLX";
    case GateKind::CS: return "CS";
    case GateKind::CSDG: return "CSDG";
    }
    return "?";
}

/// One gate instance. Operand order conventions:
///   CNOT/CX:   control, target
///   CCNOT/CCX: control, control, target
///   CSWAP:     control, target, target
///   CS/CSDG:   control, target (symmetric anyway)
/// CLX carries its classical control bit in `classical_bit`.
struct Gate {
    GateKind kind{GateKind::X};
    std::array<std::uint32_t, 3> operands{};
    std::int8_t classical_bit = -1;  // 0/1 for CLX, -1 otherwise

    Gate() = default;
    Gate(GateKind k, std::uint32_t a) : kind(k) { operands[0] = a; }
    Gate(GateKind k, std::uint32_t a, std::uint32_t b) : kind(k) {
        operands[0] = a;
        operands[1] = b;
    }
    Gate(GateKind k, std::uint32_t a, std::uint32_t b, std::uint32_t c) : kind(k) {
        operands[0] = a;
        operands[1] = b;
        operands[2] = c;
    }

    int num_operands() const { return arity(kind); }

    bool operator==(const Gate&) const = default;
};

inline Gate clx(int bit, std::uint32_t target) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("CLX control bit must be 0 or 1");
    Gate g(GateKind::CLX, target);
    g.classical_bit = static_cast<std::int8_t>(bit);
    return g;
}

}  // namespace qload
