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

// Compresses a sparse block classically, loads the codeword qubits with the
// depth-1 family, and decompresses inside the circuit with the reversible
// decoder netlist.

#include <iostream>

#include "qload/pipeline.hpp"

int main() {
    using namespace qload;
    const auto spec = enum_weight_spec(10, 1, 0.03);
    const auto bits = BitVector::parse("0000010000");
    const auto rep = run_pipeline(bits, spec);

    std::cout << "input      " << rep.original.to_string() << "\n";
    std::cout << "codeword   " << rep.codeword.to_string() << " (" << rep.data_qubits_loaded
              << " qubits loaded instead of " << rep.uncompressed_qubits << ")\n";
    std::cout << "recovered  " << rep.recovered.to_string() << (rep.ok ? "  [ok]" : "  [BROKEN]")
              << "\n";
    std::cout << "decoder depth " << rep.decoder_serialized_depth << ", ancillas "
              << rep.ancillas_added << "\n";
    std::cout << "entropy model at p=" << rep.plan.p << ": L=" << rep.plan.L
              << ", M=" << rep.plan.M << ", saved=" << rep.plan.saved << "\n";
    return rep.ok ? 0 : 1;
}
