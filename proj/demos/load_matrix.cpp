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

// Loads the 2x2 bit matrix [[0,1],[1,0]] with families #2 and #3 and shows
// that both reach the same address-data state on the output register.

#include <iostream>

#include "qload/circuit_text.hpp"
#include "qload/diagnostics.hpp"
#include "qload/families.hpp"
#include "qload/sparse_state.hpp"

int main() {
    using namespace qload;
    const BitVector bits = BitVector::parse("0110");
    const auto target = loader_target(bits);

    for (int family : {2, 3}) {
        LoadResult lr = build_family(family, bits);
        std::cout << "--- family #" << family << " ---\n";
        write_circuit(std::cout, lr.circuit);
        SparseState s = run_sparse(lr.circuit);
        std::cout << "output register fidelity vs the address-data target: "
                  << marginal_fidelity(s, lr.output_qubits, target) << "\n";
        std::cout << "output register distribution:\n";
        const auto mass = register_distribution(s.terms(), s.num_qubits(), lr.output_qubits);
        for (std::size_t label = 0; label < mass.size(); ++label)
            if (mass[label] > 1e-15) {
                for (std::size_t b = lr.output_qubits.size(); b-- > 0;)
                    std::cout << ((label >> b) & 1);
                std::cout << "  " << mass[label] << "\n";
            }
    }
    return 0;
}
