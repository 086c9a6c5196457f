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

#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qload/bitvector.hpp"
#include "qload/circuit.hpp"
#include "qload/dense_state.hpp"

namespace qload {

// Builders are pure functions of their inputs; building different
// circuits concurrently is safe.

/// A qubit handed back for reuse, recorded with the slice after which it was
/// returned. `reset_verified` marks qubits whose contents were provably a
/// classical bit at return time and were reset to |0> with a CLX; only those
/// are handed out again by the erasure builder.
struct PoolEvent {
    std::uint32_t qubit = 0;
    std::size_t after_slice = 0;
    bool reset_verified = false;
};

/// One parallel-CSwap stage of a family-#3 circuit.
struct Family3Stage {
    std::size_t stage = 0;                 // 1-based, most significant split first
    std::vector<std::uint32_t> cat;        // control qubit followed by fan-out ancillas
    std::size_t cswap_slice = 0;           // absolute slice index of the CSwap slice
};

struct LoadResult {
    Circuit circuit;
    std::vector<std::uint32_t> output_qubits;     // address qubits msb-first, then the data qubit
    std::vector<std::uint32_t> discarded_qubits;  // junk left allocated (possibly entangled)
    std::vector<cplx> target_state;               // on the output register; empty above kTargetCap

    int family = 0;
    bool erasure = false;
    std::size_t total_bits = 0;    // padded bit count
    std::size_t address_bits = 0;  // log2 of total_bits (0 for family #1)
    std::size_t padding = 0;
    std::size_t clx_loads = 0;
    std::size_t clx_resets = 0;
    std::vector<PoolEvent> pool_events;
    std::size_t load_slices = 0;        // leading slices holding the CLX loads
    std::size_t body_slices = 0;        // slices after the loads
    std::size_t construction_slices = 0;  // body slices up to the last non-mirror gate
    std::vector<Family3Stage> stages;   // family #3 only
};

constexpr std::size_t kTargetCap = 20;  // max register size for materialized targets

/// The target state of the address-data format: sum over addresses i of
/// |i> tensor |b_i>, uniform amplitudes 2^(-n/2).
inline std::vector<cplx> loader_target(const BitVector& bits) {
    const std::size_t n = log2_exact(bits.size());
    std::vector<cplx> t(std::size_t{1} << (n + 1), cplx{0, 0});
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    for (std::size_t i = 0; i < bits.size(); ++i)
        t[(i << 1) | static_cast<std::size_t>(bits[i])] = amp;
    return t;
}

/// Family #1: one CLX per bit, one slice, gate depth 1. Output is the basis
/// state |b_1 ... b_N>.
inline LoadResult build_family1(const BitVector& bits) {
    if (bits.empty()) throw std::invalid_argument("family #1 needs at least one bit");
    LoadResult r;
    r.family = 1;
    r.total_bits = bits.size();
    Circuit& c = r.circuit;
    auto& slice = c.new_slice();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const auto q = c.add_qubit(QubitRole::Data);
        slice.gates.push_back(clx(bits[i], q));
        r.output_qubits.push_back(q);
    }
    r.clx_loads = bits.size();
    r.load_slices = 1;
    r.construction_slices = 0;
    if (bits.size() <= kTargetCap) {
        r.target_state.assign(std::size_t{1} << bits.size(), cplx{0, 0});
        std::uint64_t l = 0;
        for (int b : bits.bits) l = (l << 1) | static_cast<std::uint64_t>(b);
        r.target_state[l] = 1.0;
    }
    return r;
}

namespace detail {

/// Tracks which qubits provably hold a classical basis value, so the
/// erasure builder knows when a discarded qubit can be CLX-reset and safely
/// handed out again.
class ClassicalTracker {
  public:
    void grow(std::size_t n) { vals_.resize(n, std::nullopt); }
    std::optional<int>& operator[](std::uint32_t q) { return vals_[q]; }

  private:
    std::vector<std::optional<int>> vals_;
};

}  // namespace detail

/// Family #2: the bottom-up pairwise-merge recursion. Stage k merges pairs
/// of k-qubit subtree registers with one fresh Hadamard control and k
/// CSwaps per merge; the k CSwaps of a merge share the control and occupy k
/// consecutive slices, with merges of the same stage packed side by side.
///
/// With `erasure` set, every swapped-out qubit receives the disentangling
/// block F (CNOT keep->a, CNOT disc->a, CCNOT a,ctrl->disc) immediately
/// after its CSwap, followed by CLX resets when the swapped pair held
/// classical values, and is returned to the pool. F provably factors the
/// pair only in the classical case (first stage, or equal-content swaps);
/// deeper junk stays entangled and is pooled for accounting but never
/// reused. The loaded output register is exact either way.
inline LoadResult build_family2(BitVector bits, bool erasure) {
    if (bits.empty()) throw std::invalid_argument("family #2 needs at least one bit");
    LoadResult r;
    r.family = 2;
    r.erasure = erasure;
    r.padding = pad_to_power_of_two(bits);
    const std::size_t n_bits = bits.size();
    const std::size_t n = log2_exact(n_bits);
    r.total_bits = n_bits;
    r.address_bits = n;

    Circuit& c = r.circuit;
    detail::ClassicalTracker cls;
    std::deque<std::uint32_t> reusable;

    auto fresh = [&](QubitRole role) -> std::uint32_t {
        if (erasure && !reusable.empty()) {
            const auto q = reusable.front();
            reusable.pop_front();
            c.free_pool.erase(q);
            c.roles[q] = role;
            return q;
        }
        const auto q = c.add_qubit(role);
        cls.grow(c.num_qubits);
        cls[q] = 0;
        return q;
    };

    // Load slice.
    std::vector<std::vector<std::uint32_t>> regs;  // [addr msb..lsb, data]
    auto& loads = c.new_slice();
    for (std::size_t i = 0; i < n_bits; ++i) {
        const auto q = c.add_qubit(QubitRole::Data);
        cls.grow(c.num_qubits);
        cls[q] = bits[i];
        loads.gates.push_back(clx(bits[i], q));
        regs.push_back({q});
    }
    r.clx_loads = n_bits;
    r.load_slices = 1;

    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t merges = n_bits >> k;
        std::vector<std::uint32_t> ctrls(merges);
        auto& h_slice = c.new_slice();
        for (std::size_t m = 0; m < merges; ++m) {
            // Controls on the leftmost spine survive as address qubits.
            ctrls[m] = fresh(m == 0 ? QubitRole::Address : QubitRole::Ancilla);
            h_slice.gates.push_back(Gate(GateKind::H, ctrls[m]));
            cls[ctrls[m]] = std::nullopt;
        }
        for (std::size_t j = 0; j < k; ++j) {
            struct PairInfo {
                std::uint32_t keep, disc, ctrl;
                std::optional<int> u, v;
            };
            std::vector<PairInfo> pairs;
            auto& swap_slice = c.new_slice();
            for (std::size_t m = 0; m < merges; ++m) {
                const std::uint32_t keep = regs[2 * m][j];
                const std::uint32_t disc = regs[2 * m + 1][j];
                PairInfo info{keep, disc, ctrls[m], cls[keep], cls[disc]};
                swap_slice.gates.push_back(Gate(GateKind::CSWAP, ctrls[m], keep, disc));
                if (!(info.u && info.v && *info.u == *info.v)) {
                    cls[keep] = std::nullopt;
                    cls[disc] = std::nullopt;
                }
                pairs.push_back(info);
            }
            if (erasure) {
                std::vector<std::uint32_t> ancs(merges);
                auto& f1 = c.new_slice();
                for (std::size_t m = 0; m < merges; ++m) {
                    ancs[m] = fresh(QubitRole::Ancilla);
                    f1.gates.push_back(Gate(GateKind::CNOT, pairs[m].keep, ancs[m]));
                }
                auto& f2 = c.new_slice();
                for (std::size_t m = 0; m < merges; ++m)
                    f2.gates.push_back(Gate(GateKind::CNOT, pairs[m].disc, ancs[m]));
                auto& f3 = c.new_slice();
                for (std::size_t m = 0; m < merges; ++m)
                    f3.gates.push_back(
                        Gate(GateKind::CCNOT, ancs[m], pairs[m].ctrl, pairs[m].disc));
                bool any_classical = false;
                for (const auto& p : pairs)
                    if (p.u.has_value() && p.v.has_value()) any_classical = true;
                if (any_classical) {
                    auto& resets = c.new_slice();
                    for (std::size_t m = 0; m < merges; ++m) {
                        if (!(pairs[m].u.has_value() && pairs[m].v.has_value())) continue;
                        // After F the discarded qubit holds the pre-swap value of
                        // its wire and the ancilla holds the pair parity.
                        resets.gates.push_back(clx(*pairs[m].v, pairs[m].disc));
                        resets.gates.push_back(clx(*pairs[m].u ^ *pairs[m].v, ancs[m]));
                        r.clx_resets += 2;
                    }
                }
                const std::size_t at = c.slices.size() - 1;
                for (std::size_t m = 0; m < merges; ++m) {
                    const bool classical = pairs[m].u.has_value() && pairs[m].v.has_value();
                    if (classical) {
                        cls[pairs[m].disc] = 0;
                        cls[ancs[m]] = 0;
                        reusable.push_back(pairs[m].disc);
                        reusable.push_back(ancs[m]);
                    } else {
                        cls[pairs[m].disc] = std::nullopt;
                        cls[ancs[m]] = std::nullopt;
                    }
                    c.free_pool.insert(pairs[m].disc);
                    c.free_pool.insert(ancs[m]);
                    r.pool_events.push_back({pairs[m].disc, at, classical});
                    r.pool_events.push_back({ancs[m], at, classical});
                }
            } else {
                for (std::size_t m = 0; m < merges; ++m)
                    r.discarded_qubits.push_back(pairs[m].disc);
            }
        }
        std::vector<std::vector<std::uint32_t>> next;
        for (std::size_t m = 0; m < merges; ++m) {
            std::vector<std::uint32_t> merged{ctrls[m]};
            merged.insert(merged.end(), regs[2 * m].begin(), regs[2 * m].end());
            next.push_back(std::move(merged));
        }
        regs = std::move(next);
    }

    r.output_qubits = regs[0];
    for (const auto q : r.discarded_qubits) c.roles[q] = QubitRole::Discarded;
    r.body_slices = c.slices.size() - r.load_slices;
    r.construction_slices = r.body_slices;
    if (n + 1 <= kTargetCap) r.target_state = loader_target(bits);
    return r;
}

/// Family #3: most-significant split first. Stage k swaps the two halves of
/// the live data window in a single slice of parallel CSwaps, controlled by
/// a cat state fanned out from that stage's Hadamard qubit with a CNOT
/// doubling tree; a mirror tree then decouples the fan-out ancillas back to
/// |0>. All stages' Hadamards share the first body slice and the trees are
/// packed onto disjoint qubits, so the body is exactly 2n slices.
inline LoadResult build_family3(BitVector bits) {
    if (bits.empty()) throw std::invalid_argument("family #3 needs at least one bit");
    LoadResult r;
    r.family = 3;
    r.padding = pad_to_power_of_two(bits);
    const std::size_t n_bits = bits.size();
    const std::size_t n = log2_exact(n_bits);
    r.total_bits = n_bits;
    r.address_bits = n;

    Circuit& c = r.circuit;
    std::vector<std::uint32_t> data;
    auto& loads = c.new_slice();
    for (std::size_t i = 0; i < n_bits; ++i) {
        const auto q = c.add_qubit(QubitRole::Data);
        loads.gates.push_back(clx(bits[i], q));
        data.push_back(q);
    }
    r.clx_loads = n_bits;
    r.load_slices = 1;

    struct StagePlan {
        std::size_t k;
        std::size_t block;  // CSwaps in the stage = cat size
        std::vector<std::uint32_t> cat;
        std::vector<std::vector<Gate>> fanout_layers;
    };
    std::vector<StagePlan> plans;
    for (std::size_t k = 1; k <= n; ++k) {
        StagePlan p;
        p.k = k;
        p.block = n_bits >> k;
        p.cat.push_back(c.add_qubit(QubitRole::Address));
        for (std::size_t i = 1; i < p.block; ++i) p.cat.push_back(c.add_qubit(QubitRole::Ancilla));
        std::size_t copies = 1;
        while (copies < p.block) {
            const std::size_t grow = std::min(copies, p.block - copies);
            std::vector<Gate> layer;
            for (std::size_t i = 0; i < grow; ++i)
                layer.push_back(Gate(GateKind::CNOT, p.cat[i], p.cat[copies + i]));
            p.fanout_layers.push_back(std::move(layer));
            copies += grow;
        }
        plans.push_back(std::move(p));
    }

    const std::size_t body = n == 0 ? 0 : 2 * n;
    std::vector<TimeSlice> slices(body);
    for (auto& p : plans) {
        slices[0].gates.push_back(Gate(GateKind::H, p.cat[0]));
        for (std::size_t j = 0; j < p.fanout_layers.size(); ++j)
            for (const Gate& g : p.fanout_layers[j]) slices[1 + j].gates.push_back(g);
        // CSwap slice for stage k sits right after stage k-1's.
        const std::size_t cs = n + p.k - 1;
        for (std::size_t i = 0; i < p.block; ++i)
            slices[cs].gates.push_back(
                Gate(GateKind::CSWAP, p.cat[i], data[i], data[i + p.block]));
        // Mirror layers, reversed, directly after the stage's CSwap slice.
        for (std::size_t j = 0; j < p.fanout_layers.size(); ++j) {
            const auto& layer = p.fanout_layers[p.fanout_layers.size() - 1 - j];
            for (const Gate& g : layer) slices[cs + 1 + j].gates.push_back(g);
        }
        Family3Stage st;
        st.stage = p.k;
        st.cat = p.cat;
        st.cswap_slice = r.load_slices + cs;
        r.stages.push_back(std::move(st));
    }
    for (auto& s : slices) c.slices.push_back(std::move(s));

    for (const auto& p : plans) r.output_qubits.push_back(p.cat[0]);
    r.output_qubits.push_back(data[0]);
    for (std::size_t i = 1; i < n_bits; ++i) {
        r.discarded_qubits.push_back(data[i]);
        c.roles[data[i]] = QubitRole::Discarded;
    }
    for (const auto& p : plans)
        for (std::size_t i = 1; i < p.cat.size(); ++i) {
            c.free_pool.insert(p.cat[i]);
            // The mirror tree provably restores fan-out ancillas to |0>.
            r.pool_events.push_back({p.cat[i], c.slices.size() - 1, true});
        }
    r.body_slices = body;
    r.construction_slices = body;  // mirror layers share slices with later stages
    if (n + 1 <= kTargetCap) r.target_state = loader_target(bits);
    return r;
}

/// Disentangling block F from the controlled-swap erasure circuit: the
/// parity ancilla reads keep xor disc, then a Toffoli repairs the discarded
/// qubit in the swapped branch. Appends three slices to the circuit.
inline void disentangle_pair(Circuit& c, std::uint32_t q_keep, std::uint32_t q_discard,
                             std::uint32_t address_ctrl, std::uint32_t ancilla) {
    if (q_keep >= c.num_qubits || q_discard >= c.num_qubits || ancilla >= c.num_qubits ||
        address_ctrl >= c.num_qubits)
        throw std::invalid_argument("disentangle_pair: qubit index out of range");
    for (const auto& s : c.slices)
        for (const auto& g : s.gates)
            for (int i = 0; i < g.num_operands(); ++i)
                if (g.operands[i] == ancilla)
                    throw std::invalid_argument("disentangle_pair: ancilla is not fresh");
    c.new_slice().gates.push_back(Gate(GateKind::CNOT, q_keep, ancilla));
    c.new_slice().gates.push_back(Gate(GateKind::CNOT, q_discard, ancilla));
    c.new_slice().gates.push_back(Gate(GateKind::CCNOT, ancilla, address_ctrl, q_discard));
}

inline LoadResult build_family(int family, const BitVector& bits, bool erasure = false) {
    switch (family) {
    case 1: return build_family1(bits);
    case 2: return build_family2(bits, erasure);
    case 3: return build_family3(bits);
    default: throw std::invalid_argument("unknown circuit family");
    }
}

}  // namespace qload
