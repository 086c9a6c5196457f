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

#include <sstream>

#include "qload/netlist.hpp"

using namespace qload;

TEST_CASE("netlist text round-trips", "[netlist]") {
    const std::string text =
        "in a b c\n"
        "gate NAND a b -> w1\n"
        "gate NOT w1 -> w2\n"
        "gate XOR w2 c -> w3\n"
        "out w3 w1\n";
    Netlist nl = parse_netlist(text);
    std::ostringstream oss;
    write_netlist(oss, nl);
    CHECK(oss.str() == text);
    Netlist again = parse_netlist(oss.str());
    CHECK(again.inputs == nl.inputs);
    CHECK(again.outputs == nl.outputs);
    REQUIRE(again.gates.size() == nl.gates.size());
}

TEST_CASE("netlist evaluation covers every op", "[netlist]") {
    Netlist nl = parse_netlist(
        "in a b\n"
        "gate AND a b -> and_\n"
        "gate OR a b -> or_\n"
        "gate XOR a b -> xor_\n"
        "gate NAND a b -> nand_\n"
        "gate NOT and_ -> not_\n"
        "out and_ or_ xor_ nand_ not_\n");
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const auto out = nl.eval({a, b});
            CHECK(out[0] == (a & b));
            CHECK(out[1] == (a | b));
            CHECK(out[2] == (a ^ b));
            CHECK(out[3] == 1 - (a & b));
            CHECK(out[4] == 1 - (a & b));
        }
}

TEST_CASE("netlist parser rejects malformed lines", "[netlist]") {
    CHECK_THROWS(parse_netlist("in a\ngate FROB a -> w\nout w\n"));
    CHECK_THROWS(parse_netlist("in a\ngate NOT a w\nout w\n"));
    CHECK_THROWS(parse_netlist("in a\nwhatever\n"));
    CHECK_THROWS(parse_netlist("in a\ngate NOT b -> w\nout w\n"));
}
