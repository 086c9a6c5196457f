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

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qload/gate.hpp"

namespace qload {

enum class QubitRole : std::uint8_t { Data, Address, Ancilla, Discarded };

inline const char* role_name(QubitRole r) {
    switch (r) {
    case QubitRole::Data: return "data";
    case QubitRole::Address: return "address";
    case QubitRole::Ancilla: return "ancilla";
    case QubitRole::Discarded: return "discarded";
    }
    return "?";
}

/// Gates inside one slice execute simultaneously; their qubit supports must
/// be pairwise disjoint.
struct TimeSlice {
    std::vector<Gate> gates;
};

/// Gate-level IR: an ordered list of time slices over an indexed qubit set.
/// Circuits are plain values; builders assemble them and afterwards treat
/// them as immutable, so sharing across threads is safe.
struct Circuit {
    std::uint32_t num_qubits = 0;
    std::vector<TimeSlice> slices;
    std::vector<QubitRole> roles;          // size num_qubits once finalized
    std::set<std::uint32_t> free_pool;     // indices returned for reuse

    std::uint32_t add_qubit(QubitRole role) {
        roles.push_back(role);
        return num_qubits++;
    }

    TimeSlice& new_slice() {
        slices.emplace_back();
        return slices.back();
    }

};

struct Violation {
    std::size_t slice = 0;
    std::size_t gate = 0;
    std::string reason;
};

/// Structural validity: operand arity and distinctness, indices in range,
/// CLX bits present, and the simultaneity rule (disjoint supports per slice).
inline std::vector<Violation> validate(const Circuit& c) {
    std::vector<Violation> out;
    for (std::size_t si = 0; si < c.slices.size(); ++si) {
        std::vector<std::uint32_t> used;
        const auto& slice = c.slices[si];
        for (std::size_t gi = 0; gi < slice.gates.size(); ++gi) {
            const Gate& g = slice.gates[gi];
            const int n = g.num_operands();
            bool operands_ok = true;
            for (int i = 0; i < n; ++i) {
                if (g.operands[i] >= c.num_qubits) {
                    out.push_back({si, gi, "operand index " + std::to_string(g.operands[i]) +
                                               " out of range"});
                    operands_ok = false;
                }
                for (int j = i + 1; j < n; ++j)
                    if (g.operands[i] == g.operands[j]) {
                        out.push_back({si, gi, "repeated operand index " +
                                                   std::to_string(g.operands[i])});
                        operands_ok = false;
                    }
            }
            if (g.kind == GateKind::CLX && g.classical_bit != 0 && g.classical_bit != 1)
                out.push_back({si, gi, "CLX without classical control bit"});
            if (!operands_ok) continue;
            for (int i = 0; i < n; ++i) {
                if (std::find(used.begin(), used.end(), g.operands[i]) != used.end())
                    out.push_back({si, gi, "qubit " + std::to_string(g.operands[i]) +
                                               " used twice in one slice"});
                used.push_back(g.operands[i]);
            }
        }
    }
    return out;
}

/// Number of non-empty slices: the structural stage count.
inline std::size_t slice_depth(const Circuit& c) {
    std::size_t d = 0;
    for (const auto& s : c.slices)
        if (!s.gates.empty()) ++d;
    return d;
}

/// ASAP reschedule where any two gates sharing a qubit are ordered
/// sequentially and every gate costs depth 1; returns the critical path.
/// Slice boundaries are kept as stage barriers, so a slice that overpacks
/// conflicting gates is priced at its true serial length and the result is
/// always >= slice_depth.
inline std::size_t serialized_depth(const Circuit& c) {
    std::vector<std::size_t> avail(c.num_qubits, 0);
    std::size_t barrier = 0, depth = 0;
    for (const auto& s : c.slices) {
        std::size_t slice_end = barrier;
        for (const auto& g : s.gates) {
            std::size_t t = barrier;
            const int n = g.num_operands();
            for (int i = 0; i < n; ++i) t = std::max(t, avail[g.operands[i]]);
            ++t;
            for (int i = 0; i < n; ++i) avail[g.operands[i]] = t;
            slice_end = std::max(slice_end, t);
        }
        barrier = slice_end;
        depth = std::max(depth, slice_end);
    }
    return depth;
}

}  // namespace qload
