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
#include <map>
#include <string>
#include <vector>

#include "qload/circuit.hpp"
#include "qload/dense_state.hpp"
#include "qload/netlist.hpp"

namespace qload {

struct GateCounts {
    std::array<std::size_t, 11> by_kind{};

    std::size_t& operator[](GateKind k) { return by_kind[static_cast<std::size_t>(k)]; }
    std::size_t operator[](GateKind k) const { return by_kind[static_cast<std::size_t>(k)]; }
    std::size_t total() const {
        std::size_t t = 0;
        for (auto v : by_kind) t += v;
        return t;
    }
    bool operator==(const GateCounts&) const = default;
};

inline GateCounts count_gates(const Circuit& c) {
    GateCounts gc;
    for (const auto& s : c.slices)
        for (const auto& g : s.gates) ++gc[g.kind];
    return gc;
}

/// How a lowered sub-circuit compares against the reference gate unitary.
enum class EquivalenceKind { Exact, GlobalPhase, Differs };

struct EquivalenceVerdict {
    EquivalenceKind kind = EquivalenceKind::Differs;
    double max_abs_diff = 0;              // entry-wise against the reference
    double max_abs_diff_up_to_phase = 0;  // after dividing out one global phase
    cplx phase{1.0, 0.0};

    std::string describe() const {
        char buf[160];
        switch (kind) {
        case EquivalenceKind::Exact:
            std::snprintf(buf, sizeof buf, "exact (max |delta| = %.3g)", max_abs_diff);
            break;
        case EquivalenceKind::GlobalPhase:
            std::snprintf(buf, sizeof buf,
                          "equal up to global phase (%.6g%+.6gi, residual %.3g)", phase.real(),
                          phase.imag(), max_abs_diff_up_to_phase);
            break;
        case EquivalenceKind::Differs:
            std::snprintf(buf, sizeof buf, "differs (max |delta| = %.3g)", max_abs_diff);
            break;
        }
        return buf;
    }
};

inline EquivalenceVerdict compare_unitaries(const Matrix& u, const Matrix& ref,
                                            double tol = 1e-12) {
    EquivalenceVerdict v;
    v.max_abs_diff = u.max_abs_diff(ref);
    // Divide out the phase on the first non-negligible reference entry.
    cplx phase{1.0, 0.0};
    for (std::size_t i = 0; i < ref.a.size(); ++i)
        if (std::abs(ref.a[i]) > 0.5 / static_cast<double>(ref.n)) {
            phase = u.a[i] / ref.a[i];
            break;
        }
    const double mag = std::abs(phase);
    double resid = 0;
    if (mag > tol) {
        phase /= mag;
        for (std::size_t i = 0; i < ref.a.size(); ++i)
            resid = std::max(resid, std::abs(u.a[i] / phase - ref.a[i]));
    } else {
        resid = v.max_abs_diff;
    }
    v.max_abs_diff_up_to_phase = resid;
    v.phase = phase;
    if (v.max_abs_diff <= tol)
        v.kind = EquivalenceKind::Exact;
    else if (resid <= tol)
        v.kind = EquivalenceKind::GlobalPhase;
    else
        v.kind = EquivalenceKind::Differs;
    return v;
}

struct PassReport {
    std::string pass;
    GateCounts before;
    GateCounts after;
    std::size_t ancillas_added = 0;
    std::size_t gates_rewritten = 0;
    std::string note;  // e.g. the Toffoli phase-decomposition verdict
};

namespace detail {

/// Rewrites every gate through `expand`, preserving slice-level parallelism:
/// the j-th gates of all expansions within one source slice land in the same
/// output sub-slice. Expansions only touch their source gate's support, so
/// disjointness is preserved.
template <typename F>
Circuit rewrite_gates(const Circuit& src, F expand, std::size_t* rewritten = nullptr) {
    Circuit out;
    out.num_qubits = src.num_qubits;
    out.roles = src.roles;
    out.free_pool = src.free_pool;
    for (const auto& slice : src.slices) {
        std::vector<std::vector<Gate>> seqs;
        std::size_t longest = 0;
        for (const Gate& g : slice.gates) {
            std::vector<Gate> seq = expand(g);
            if (rewritten && (seq.size() != 1 || !(seq[0] == g))) ++*rewritten;
            longest = std::max(longest, seq.size());
            seqs.push_back(std::move(seq));
        }
        for (std::size_t j = 0; j < longest; ++j) {
            auto& sub = out.new_slice();
            for (const auto& seq : seqs)
                if (j < seq.size()) sub.gates.push_back(seq[j]);
        }
        if (slice.gates.empty()) out.new_slice();
    }
    return out;
}

}  // namespace detail

/// SWAP -> 3 CNOTs (exact).
inline Circuit lower_swap_to_cnot(const Circuit& c, PassReport* report = nullptr) {
    PassReport rep;
    rep.pass = "lower_swap_to_cnot";
    rep.before = count_gates(c);
    Circuit out = detail::rewrite_gates(
        c,
        [](const Gate& g) -> std::vector<Gate> {
            if (g.kind != GateKind::SWAP) return {g};
            const auto a = g.operands[0], b = g.operands[1];
            return {Gate(GateKind::CNOT, a, b), Gate(GateKind::CNOT, b, a),
                    Gate(GateKind::CNOT, a, b)};
        },
        &rep.gates_rewritten);
    rep.after = count_gates(out);
    if (report) *report = rep;
    return out;
}

enum class CswapLowering {
    ThreeToffoli,     // CSWAP(c;a,b) -> CCNOT(c,a,b) CCNOT(c,b,a) CCNOT(c,a,b)
    ToffoliSandwich,  // CSWAP(c;a,b) -> CNOT(b,a) CCNOT(c,a,b) CNOT(b,a)
};

inline Circuit lower_cswap(const Circuit& c, CswapLowering variant, PassReport* report = nullptr) {
    PassReport rep;
    rep.pass = variant == CswapLowering::ThreeToffoli ? "lower_cswap(three_toffoli)"
                                                      : "lower_cswap(toffoli_sandwich)";
    rep.before = count_gates(c);
    Circuit out = detail::rewrite_gates(
        c,
        [variant](const Gate& g) -> std::vector<Gate> {
            if (g.kind != GateKind::CSWAP) return {g};
            const auto ctl = g.operands[0], a = g.operands[1], b = g.operands[2];
            if (variant == CswapLowering::ThreeToffoli)
                return {Gate(GateKind::CCNOT, ctl, a, b), Gate(GateKind::CCNOT, ctl, b, a),
                        Gate(GateKind::CCNOT, ctl, a, b)};
            return {Gate(GateKind::CNOT, b, a), Gate(GateKind::CCNOT, ctl, a, b),
                    Gate(GateKind::CNOT, b, a)};
        },
        &rep.gates_rewritten);
    rep.after = count_gates(out);
    if (report) *report = rep;
    return out;
}

/// The seven-gate one/two-qubit Toffoli decomposition (Hadamards, controlled
/// phases, CNOTs) applied to CCNOT(a,b,t).
inline std::vector<Gate> toffoli_phase_sequence(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
    return {Gate(GateKind::H, t),        Gate(GateKind::CS, b, t),  Gate(GateKind::CNOT, a, b),
            Gate(GateKind::CSDG, b, t),  Gate(GateKind::CNOT, a, b), Gate(GateKind::CS, a, t),
            Gate(GateKind::H, t)};
}

/// Verdict of the 8x8 brute-force comparison of the sequence against CCNOT.
inline EquivalenceVerdict verify_toffoli_phase() {
    Circuit repl;
    repl.num_qubits = 3;
    repl.roles.assign(3, QubitRole::Data);
    for (const Gate& g : toffoli_phase_sequence(0, 1, 2)) repl.new_slice().gates.push_back(g);
    Circuit ref;
    ref.num_qubits = 3;
    ref.roles.assign(3, QubitRole::Data);
    ref.new_slice().gates.push_back(Gate(GateKind::CCNOT, 0, 1, 2));
    return compare_unitaries(unitary_of(repl), unitary_of(ref));
}

/// Replaces every CCNOT by the phase-gate sequence and records the brute-force
/// equivalence verdict in the report. The claim is under test, not assumed.
inline Circuit lower_toffoli_phase(const Circuit& c, PassReport* report = nullptr) {
    PassReport rep;
    rep.pass = "lower_toffoli_phase";
    rep.before = count_gates(c);
    Circuit out = detail::rewrite_gates(
        c,
        [](const Gate& g) -> std::vector<Gate> {
            if (g.kind != GateKind::CCNOT) return {g};
            return toffoli_phase_sequence(g.operands[0], g.operands[1], g.operands[2]);
        },
        &rep.gates_rewritten);
    rep.after = count_gates(out);
    rep.note = verify_toffoli_phase().describe();
    if (report) *report = rep;
    return out;
}

struct NetlistLowering {
    std::map<std::string, std::uint32_t> wire_qubit;
    std::vector<std::uint32_t> input_qubits;
    std::vector<std::uint32_t> output_qubits;
    PassReport report;
};

/// Appends the reversible form of `nl` to `c`. Each non-NOT gate computes
/// out-of-place onto a fresh |0> ancilla (AND -> CCNOT, NAND -> CCNOT+X,
/// XOR -> two CNOTs, OR -> De Morgan with the inputs restored). NOT flips
/// its input qubit in place when that wire has no later readers, otherwise
/// it copies onto an ancilla first. Garbage is left allocated: the inputs
/// are classical basis states, so stray copies never create entanglement.
inline NetlistLowering append_netlist_reversible(
    Circuit& c, const Netlist& nl, const std::map<std::string, std::uint32_t>& input_binding) {
    nl.check();
    NetlistLowering low;
    low.report.pass = "lower_netlist_reversible";
    low.report.before = count_gates(c);

    for (const auto& w : nl.inputs) {
        auto it = input_binding.find(w);
        if (it == input_binding.end())
            throw std::invalid_argument("input wire '" + w + "' has no qubit binding");
        low.wire_qubit[w] = it->second;
        low.input_qubits.push_back(it->second);
    }

    // A wire is live after gate i if some later gate or an output reads it.
    std::map<std::string, std::size_t> last_read;
    for (std::size_t i = 0; i < nl.gates.size(); ++i)
        for (const auto& w : nl.gates[i].ins) last_read[w] = i + 1;
    for (const auto& w : nl.outputs) last_read[w] = nl.gates.size() + 1;

    auto fresh = [&]() {
        ++low.report.ancillas_added;
        return c.add_qubit(QubitRole::Ancilla);
    };

    for (std::size_t i = 0; i < nl.gates.size(); ++i) {
        const NetGate& g = nl.gates[i];
        const auto qa = low.wire_qubit.at(g.ins[0]);
        switch (g.op) {
        case NetOp::NOT: {
            if (last_read[g.ins[0]] > i + 1) {
                const auto w = fresh();
                c.new_slice().gates.push_back(Gate(GateKind::CNOT, qa, w));
                c.new_slice().gates.push_back(Gate(GateKind::X, w));
                low.wire_qubit[g.out] = w;
            } else {
                c.new_slice().gates.push_back(Gate(GateKind::X, qa));
                low.wire_qubit[g.out] = qa;
            }
            break;
        }
        case NetOp::AND: {
            const auto qb = low.wire_qubit.at(g.ins[1]);
            const auto w = fresh();
            c.new_slice().gates.push_back(Gate(GateKind::CCNOT, qa, qb, w));
            low.wire_qubit[g.out] = w;
            break;
        }
        case NetOp::NAND: {
            const auto qb = low.wire_qubit.at(g.ins[1]);
            const auto w = fresh();
            c.new_slice().gates.push_back(Gate(GateKind::CCNOT, qa, qb, w));
            c.new_slice().gates.push_back(Gate(GateKind::X, w));
            low.wire_qubit[g.out] = w;
            break;
        }
        case NetOp::XOR: {
            const auto qb = low.wire_qubit.at(g.ins[1]);
            const auto w = fresh();
            c.new_slice().gates.push_back(Gate(GateKind::CNOT, qa, w));
            c.new_slice().gates.push_back(Gate(GateKind::CNOT, qb, w));
            low.wire_qubit[g.out] = w;
            break;
        }
        case NetOp::OR: {
            const auto qb = low.wire_qubit.at(g.ins[1]);
            const auto w = fresh();
            auto& pre = c.new_slice();
            pre.gates.push_back(Gate(GateKind::X, qa));
            pre.gates.push_back(Gate(GateKind::X, qb));
            c.new_slice().gates.push_back(Gate(GateKind::CCNOT, qa, qb, w));
            auto& post = c.new_slice();
            post.gates.push_back(Gate(GateKind::X, w));
            post.gates.push_back(Gate(GateKind::X, qa));
            post.gates.push_back(Gate(GateKind::X, qb));
            low.wire_qubit[g.out] = w;
            break;
        }
        }
    }
    for (const auto& w : nl.outputs) low.output_qubits.push_back(low.wire_qubit.at(w));
    low.report.after = count_gates(c);
    return low;
}

/// Standalone lowering: one qubit per input wire, in declaration order.
inline std::pair<Circuit, NetlistLowering> lower_netlist_reversible(const Netlist& nl) {
    Circuit c;
    std::map<std::string, std::uint32_t> binding;
    for (const auto& w : nl.inputs) binding[w] = c.add_qubit(QubitRole::Data);
    NetlistLowering low = append_netlist_reversible(c, nl, binding);
    return {std::move(c), std::move(low)};
}

}  // namespace qload
