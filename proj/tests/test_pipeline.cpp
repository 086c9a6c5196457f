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

#include "qload/pipeline.hpp"

using namespace qload;

TEST_CASE("pipeline recovers a sparse block through the quantum decoder", "[pipeline]") {
    auto spec = enum_weight_spec(4, 1, 0.03);
    auto rep = run_pipeline(BitVector::parse("0010"), spec);
    CHECK(rep.ok);
    CHECK(rep.recovered.to_string() == "0010");
    CHECK(rep.data_qubits_loaded == 3);   // M codeword qubits
    CHECK(rep.uncompressed_qubits == 4);  // vs N for the raw load
    CHECK(rep.decoder_counts[GateKind::H] == 0);
}

TEST_CASE("pipeline handles the all-zeros block", "[pipeline]") {
    auto spec = enum_weight_spec(6, 1);
    auto rep = run_pipeline(BitVector::parse("000000"), spec);
    CHECK(rep.ok);
    CHECK(rep.recovered.to_string() == "000000");
}

TEST_CASE("pipeline rejects inadmissible input at encode time", "[pipeline]") {
    auto spec = enum_weight_spec(4, 1);
    CHECK_THROWS_AS(run_pipeline(BitVector::parse("0111"), spec), CodecError);
}

TEST_CASE("pipeline is exact for every admissible word", "[pipeline]") {
    auto spec = enum_weight_spec(6, 1, 0.05);
    for (std::uint64_t r = 0; r < spec.admissible_count(); ++r) {
        const auto word = codec_unrank(r, spec);
        auto rep = run_pipeline(word, spec);
        CHECK(rep.ok);
        CHECK(rep.recovered.bits == word.bits);
    }
}

TEST_CASE("pipeline circuit validates and stays superposition-free", "[pipeline]") {
    auto spec = enum_weight_spec(5, 1);
    auto rep = run_pipeline(BitVector::parse("00100"), spec);
    CHECK(validate(rep.circuit).empty());
    CHECK(count_gates(rep.circuit)[GateKind::H] == 0);
    CHECK(rep.total_qubits == rep.data_qubits_loaded + rep.ancillas_added);
}
