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

// End-to-end compressed load: classical enumerative encode, a depth-1 load
// of the M codeword bits, then the reversible-lowered classical decoder run
// inside the circuit. The decoder inputs are basis states, so the simulated
// output wires are deterministic bit values.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qload/codec.hpp"
#include "qload/families.hpp"
#include "qload/passes.hpp"
#include "qload/resources.hpp"
#include "qload/sparse_state.hpp"

namespace qload {

struct PipelineReport {
    BitVector original;
    BitVector codeword;
    BitVector recovered;
    bool ok = false;
    std::size_t data_qubits_loaded = 0;   // M
    std::size_t uncompressed_qubits = 0;  // N
    std::size_t ancillas_added = 0;
    std::size_t total_qubits = 0;
    std::size_t decoder_serialized_depth = 0;
    GateCounts decoder_counts;
    CompressionPlan plan;  // entropy-model context for (p, N)
    Circuit circuit;
};

inline PipelineReport run_pipeline(const BitVector& bits, const CodecSpec& spec) {
    PipelineReport rep;
    rep.original = bits;
    rep.codeword = encode(bits, spec);  // rejects inadmissible inputs
    rep.uncompressed_qubits = spec.block_len;
    rep.data_qubits_loaded = rep.codeword.size();
    rep.plan = savings(spec.p, spec.block_len);

    LoadResult load = build_family1(rep.codeword);
    Circuit c = load.circuit;
    const std::size_t decoder_start = c.slices.size();

    const Netlist nl = decode_netlist(spec);
    std::map<std::string, std::uint32_t> binding;
    for (std::size_t i = 0; i < nl.inputs.size(); ++i)
        binding[nl.inputs[i]] = load.output_qubits[i];
    NetlistLowering low = append_netlist_reversible(c, nl, binding);
    rep.ancillas_added = low.report.ancillas_added;
    rep.total_qubits = c.num_qubits;

    // The decompression stage is a permutation-plus-copy network: no gate in
    // it may create superposition.
    Circuit decoder_only;
    decoder_only.num_qubits = c.num_qubits;
    decoder_only.roles = c.roles;
    for (std::size_t s = decoder_start; s < c.slices.size(); ++s) {
        decoder_only.slices.push_back(c.slices[s]);
        for (const Gate& g : c.slices[s].gates)
            if (g.kind == GateKind::H)
                throw std::logic_error("decompressor emitted a Hadamard");
    }
    rep.decoder_counts = count_gates(decoder_only);
    rep.decoder_serialized_depth = serialized_depth(decoder_only);

    SparseState state = run_sparse(c);
    if (state.support_size() != 1)
        throw std::logic_error("pipeline state is not a basis state");
    const std::uint64_t label = state.terms()[0].label;
    std::vector<int> rec;
    rec.reserve(low.output_qubits.size());
    for (const auto q : low.output_qubits) rec.push_back(state.bit_of(label, q));
    rep.recovered = BitVector(std::move(rec));
    rep.ok = rep.recovered.bits == bits.bits;
    rep.circuit = std::move(c);
    return rep;
}

}  // namespace qload
