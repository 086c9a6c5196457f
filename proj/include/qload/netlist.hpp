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

// Classical combinational netlist, SSA-style: every wire is written exactly
// once (by an input declaration or one gate) before it is read.
//
// File format, line oriented, comments from `#`:
//   in a b c
//   gate NAND a b -> w1
//   gate NOT w1 -> w2
//   out w2 b

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qload {

enum class NetOp { NOT, AND, OR, XOR, NAND };

inline const char* net_op_name(NetOp op) {
    switch (op) {
    case NetOp::NOT: return "NOT";
    case NetOp::AND: return "AND";
    case NetOp::OR: return "OR";
    case NetOp::XOR: return "XOR";
    case NetOp::NAND: return "NAND";
    }
    return "?";
}

inline int net_op_arity(NetOp op) { return op == NetOp::NOT ? 1 : 2; }

struct NetGate {
    NetOp op{NetOp::NOT};
    std::vector<std::string> ins;
    std::string out;
};

struct Netlist {
    std::vector<std::string> inputs;
    std::vector<NetGate> gates;
    std::vector<std::string> outputs;

    /// Single-write / defined-before-read discipline; throws on violation.
    void check() const {
        std::map<std::string, bool> defined;
        for (const auto& w : inputs) {
            if (defined.count(w)) throw std::invalid_argument("wire '" + w + "' declared twice");
            defined[w] = true;
        }
        for (const auto& g : gates) {
            if (static_cast<int>(g.ins.size()) != net_op_arity(g.op))
                throw std::invalid_argument(std::string(net_op_name(g.op)) + " arity mismatch");
            for (const auto& w : g.ins)
                if (!defined.count(w))
                    throw std::invalid_argument("wire '" + w + "' read before written");
            if (defined.count(g.out))
                throw std::invalid_argument("wire '" + g.out + "' written twice");
            defined[g.out] = true;
        }
        for (const auto& w : outputs)
            if (!defined.count(w)) throw std::invalid_argument("output wire '" + w + "' undefined");
    }

    /// Classical evaluation: the truth-table oracle for the reversible lowering.
    std::vector<int> eval(const std::vector<int>& input_bits) const {
        if (input_bits.size() != inputs.size())
            throw std::invalid_argument("input assignment length mismatch");
        std::map<std::string, int> v;
        for (std::size_t i = 0; i < inputs.size(); ++i) v[inputs[i]] = input_bits[i];
        for (const auto& g : gates) {
            const int a = v.at(g.ins[0]);
            const int b = g.ins.size() > 1 ? v.at(g.ins[1]) : 0;
            int y = 0;
            switch (g.op) {
            case NetOp::NOT: y = 1 - a; break;
            case NetOp::AND: y = a & b; break;
            case NetOp::OR: y = a | b; break;
            case NetOp::XOR: y = a ^ b; break;
            case NetOp::NAND: y = 1 - (a & b); break;
            }
            v[g.out] = y;
        }
        std::vector<int> out;
        out.reserve(outputs.size());
        for (const auto& w : outputs) out.push_back(v.at(w));
        return out;
    }
};

inline void write_netlist(std::ostream& os, const Netlist& nl) {
    os << "in";
    for (const auto& w : nl.inputs) os << ' ' << w;
    os << "\n";
    for (const auto& g : nl.gates) {
        os << "gate " << net_op_name(g.op);
        for (const auto& w : g.ins) os << ' ' << w;
        os << " -> " << g.out << "\n";
    }
    os << "out";
    for (const auto& w : nl.outputs) os << ' ' << w;
    os << "\n";
}

inline Netlist parse_netlist(std::istream& is) {
    Netlist nl;
    std::string line;
    std::size_t ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("netlist line " + std::to_string(ln) + ": " + msg);
        };
        if (word == "in") {
            std::string w;
            while (ss >> w) nl.inputs.push_back(w);
        } else if (word == "out") {
            std::string w;
            while (ss >> w) nl.outputs.push_back(w);
        } else if (word == "gate") {
            std::string opname;
            if (!(ss >> opname)) fail("missing gate op");
            NetGate g;
            if (opname == "NOT")
                g.op = NetOp::NOT;
            else if (opname == "AND")
                g.op = NetOp::AND;
            else if (opname == "OR")
                g.op = NetOp::OR;
            else if (opname == "XOR")
                g.op = NetOp::XOR;
            else if (opname == "NAND")
                g.op = NetOp::NAND;
            else
                fail("unknown gate op '" + opname + "'");
            std::vector<std::string> words;
            std::string w;
            while (ss >> w) words.push_back(w);
            if (words.size() != static_cast<std::size_t>(net_op_arity(g.op)) + 2 ||
                words[words.size() - 2] != "->")
                fail("expected '<ins...> -> <out>'");
            g.out = words.back();
            words.pop_back();
            words.pop_back();
            g.ins = words;
            nl.gates.push_back(std::move(g));
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    nl.check();
    return nl;
}

inline Netlist parse_netlist(const std::string& text) {
    std::istringstream iss(text);
    return parse_netlist(iss);
}

}  // namespace qload
