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

// Line-oriented circuit format. One gate per line, slices separated by a line
// containing only `---`, comments from `#` to end of line.
//
//   qubits K
//   H q | X q | S q | SDG q
//   CX c t | CCX c1 c2 t | SWAP a b | CSWAP c a b
//   CS c t | CSDG c t
//   CLX bit q          (classically controlled X, literal bit 0/1)
//
// write_circuit / parse_circuit round-trip bit-exactly.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qload/circuit.hpp"

namespace qload {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

inline void write_circuit(std::ostream& os, const Circuit& c) {
    os << "qubits " << c.num_qubits << "\n";
    for (std::size_t si = 0; si < c.slices.size(); ++si) {
        if (si != 0) os << "---\n";
        for (const Gate& g : c.slices[si].gates) {
            os << mnemonic(g.kind);
            if (g.kind == GateKind::CLX) os << ' ' << int(g.classical_bit);
            for (int i = 0; i < g.num_operands(); ++i) os << ' ' << g.operands[i];
            os << "\n";
        }
    }
}

inline std::string to_text(const Circuit& c) {
    std::ostringstream oss;
    write_circuit(oss, c);
    return oss.str();
}

namespace detail {

inline bool parse_kind(const std::string& word, GateKind& out) {
    static const std::pair<const char*, GateKind> table[] = {
        {"X", GateKind::X},         {"H", GateKind::H},       {"S", GateKind::S},
        {"SDG", GateKind::Sdag},    {"CX", GateKind::CNOT},   {"CCX", GateKind::CCNOT},
        {"SWAP", GateKind::SWAP},   {"CSWAP", GateKind::CSWAP}, {"CLX", GateKind::CLX},
        {"CS", GateKind::CS},       {"CSDG", GateKind::CSDG},
    };
    for (const auto& [name, kind] : table)
        if (word == name) {
            out = kind;
            return true;
        }
    return false;
}

}  // namespace detail

inline Circuit parse_circuit(std::istream& is) {
    Circuit c;
    std::string line;
    std::size_t ln = 0;
    bool have_header = false;
    bool slice_open = false;
    while (std::getline(is, line)) {
        ++ln;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;  // blank line
        if (word == "---") {
            if (!have_header) throw ParseError(ln, "slice separator before qubits header");
            if (!slice_open) c.new_slice();  // the slice the separator terminates
            c.new_slice();
            slice_open = true;
            continue;
        }
        if (word == "qubits") {
            if (have_header) throw ParseError(ln, "duplicate qubits header");
            long k = -1;
            if (!(ss >> k) || k < 0) throw ParseError(ln, "expected qubit count");
            c.num_qubits = static_cast<std::uint32_t>(k);
            c.roles.assign(c.num_qubits, QubitRole::Data);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(ln, "gate before qubits header");
        GateKind kind;
        if (!detail::parse_kind(word, kind)) throw ParseError(ln, "unknown gate '" + word + "'");
        Gate g;
        g.kind = kind;
        if (kind == GateKind::CLX) {
            int bit = -1;
            if (!(ss >> bit) || (bit != 0 && bit != 1))
                throw ParseError(ln, "CLX expects a literal control bit 0/1");
            g.classical_bit = static_cast<std::int8_t>(bit);
        }
        for (int i = 0; i < arity(kind); ++i) {
            long q = -1;
            if (!(ss >> q) || q < 0) throw ParseError(ln, "expected qubit operand");
            if (static_cast<std::uint32_t>(q) >= c.num_qubits)
                throw ParseError(ln, "qubit index " + std::to_string(q) + " out of range");
            g.operands[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(q);
        }
        std::string extra;
        if (ss >> extra) throw ParseError(ln, "trailing token '" + extra + "'");
        if (!slice_open) {
            c.new_slice();
            slice_open = true;
        }
        c.slices.back().gates.push_back(g);
    }
    if (!have_header) throw ParseError(ln, "missing qubits header");
    return c;
}

inline Circuit parse_circuit(const std::string& text) {
    std::istringstream iss(text);
    return parse_circuit(iss);
}

}  // namespace qload
