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

// Fixed-block enumerative coding of bounded-weight words: admissible inputs
// are the N-bit words with at most `weight_max` ones, indexed by
// (weight class, then numeric value) and transmitted as the ceil(log2 #words)
// bit rank. Exactly invertible, no probability model at run time; the source
// parameter p only picks the block design.

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qload/bitvector.hpp"
#include "qload/netlist.hpp"

namespace qload {

struct CodecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

struct CodecSpec {
    std::string scheme = "enum-weight";  // or "identity"
    std::size_t block_len = 0;           // N
    std::size_t weight_max = 0;
    std::size_t code_len = 0;            // M
    double p = 0.0;                      // source parameter, informational

    std::uint64_t admissible_count() const {
        if (scheme == "identity") return std::uint64_t{1} << block_len;
        std::uint64_t c = 0;
        for (std::size_t w = 0; w <= weight_max; ++w) c += binomial(block_len, w);
        return c;
    }
};

inline CodecSpec enum_weight_spec(std::size_t block_len, std::size_t weight_max, double p = 0.0) {
    if (block_len == 0 || block_len > 63) throw CodecError("block length must be in 1..63");
    if (weight_max > block_len) throw CodecError("weight bound exceeds block length");
    CodecSpec s;
    s.scheme = "enum-weight";
    s.block_len = block_len;
    s.weight_max = weight_max;
    s.p = p;
    s.code_len = std::max<std::size_t>(std::size_t{1}, ceil_log2(s.admissible_count()));
    return s;
}

inline CodecSpec identity_spec(std::size_t block_len) {
    CodecSpec s;
    s.scheme = "identity";
    s.block_len = block_len;
    s.weight_max = block_len;
    s.code_len = block_len;
    return s;
}

namespace detail {

/// Rank of `bits` among same-weight words ordered by numeric value.
inline std::uint64_t rank_in_weight_class(const BitVector& bits, std::size_t weight) {
    std::uint64_t rank = 0;
    std::size_t remaining = weight;
    const std::size_t n = bits.size();
    for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        if (bits[i] == 1) {
            rank += binomial(n - 1 - i, remaining);
            --remaining;
        }
    }
    return rank;
}

inline BitVector unrank_in_weight_class(std::uint64_t rank, std::size_t n, std::size_t weight) {
    std::vector<int> bits(n, 0);
    std::size_t remaining = weight;
    for (std::size_t i = 0; i < n && remaining > 0; ++i) {
        const std::uint64_t below = binomial(n - 1 - i, remaining);
        if (rank >= below) {
            bits[i] = 1;
            rank -= below;
            --remaining;
        }
    }
    return BitVector(std::move(bits));
}

}  // namespace detail

inline std::uint64_t codec_rank(const BitVector& bits, const CodecSpec& spec) {
    if (bits.size() != spec.block_len) throw CodecError("input length mismatch");
    if (spec.scheme == "identity") {
        std::uint64_t v = 0;
        for (int b : bits.bits) v = (v << 1) | static_cast<std::uint64_t>(b);
        return v;
    }
    const std::size_t w = bits.weight();
    if (w > spec.weight_max)
        throw CodecError("inadmissible input: weight " + std::to_string(w) + " exceeds bound " +
                         std::to_string(spec.weight_max));
    std::uint64_t rank = 0;
    for (std::size_t k = 0; k < w; ++k) rank += binomial(spec.block_len, k);
    return rank + detail::rank_in_weight_class(bits, w);
}

inline BitVector codec_unrank(std::uint64_t rank, const CodecSpec& spec) {
    if (spec.scheme == "identity") {
        std::vector<int> bits(spec.block_len);
        for (std::size_t i = 0; i < spec.block_len; ++i)
            bits[i] = static_cast<int>((rank >> (spec.block_len - 1 - i)) & 1u);
        return BitVector(std::move(bits));
    }
    if (rank >= spec.admissible_count()) throw CodecError("rank out of range");
    std::size_t w = 0;
    while (rank >= binomial(spec.block_len, w)) {
        rank -= binomial(spec.block_len, w);
        ++w;
    }
    return detail::unrank_in_weight_class(rank, spec.block_len, w);
}

/// Bijective map of admissible words onto M-bit codewords (msb first).
inline BitVector encode(const BitVector& bits, const CodecSpec& spec) {
    const std::uint64_t rank = codec_rank(bits, spec);
    std::vector<int> code(spec.code_len);
    for (std::size_t i = 0; i < spec.code_len; ++i)
        code[i] = static_cast<int>((rank >> (spec.code_len - 1 - i)) & 1u);
    return BitVector(std::move(code));
}

inline BitVector decode(const BitVector& codeword, const CodecSpec& spec) {
    if (codeword.size() != spec.code_len) throw CodecError("codeword length mismatch");
    std::uint64_t rank = 0;
    for (int b : codeword.bits) rank = (rank << 1) | static_cast<std::uint64_t>(b);
    return codec_unrank(rank, spec);
}

/// Combinational decoder netlist: M codeword wires in, N data wires out,
/// classically equal to decode() on every admissible codeword. Emitted for
/// the identity scheme (pass-through) and the weight<=1 enumerative code
/// (one equality comparator per output bit).
inline Netlist decode_netlist(const CodecSpec& spec) {
    Netlist nl;
    for (std::size_t i = 0; i < spec.code_len; ++i) nl.inputs.push_back("c" + std::to_string(i));
    if (spec.scheme == "identity") {
        nl.outputs = nl.inputs;
        nl.check();
        return nl;
    }
    if (spec.weight_max > 1)
        throw CodecError("decoder netlist generation supports weight bounds 0 and 1");
    const std::size_t m = spec.code_len;
    // Negated copies of the codeword bits, shared by the comparators and
    // emitted only where some comparator needs the negative literal.
    std::vector<bool> need_neg(m, false);
    for (std::size_t j = 0; j < spec.block_len; ++j) {
        BitVector word(std::vector<int>(spec.block_len, 0));
        word.bits[j] = 1;
        const std::uint64_t rank = codec_rank(word, spec);
        for (std::size_t i = 0; i < m; ++i)
            if (!((rank >> (m - 1 - i)) & 1u)) need_neg[i] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (need_neg[i])
            nl.gates.push_back({NetOp::NOT, {"c" + std::to_string(i)}, "nc" + std::to_string(i)});
    for (std::size_t j = 0; j < spec.block_len; ++j) {
        BitVector word(std::vector<int>(spec.block_len, 0));
        word.bits[j] = 1;
        const std::uint64_t rank = codec_rank(word, spec);
        std::string acc;
        for (std::size_t i = 0; i < m; ++i) {
            const bool want = (rank >> (m - 1 - i)) & 1u;
            std::string literal = (want ? "c" : "nc") + std::to_string(i);
            if (acc.empty()) {
                acc = literal;
                continue;
            }
            std::string out = "o" + std::to_string(j) + "_" + std::to_string(i);
            nl.gates.push_back({NetOp::AND, {acc, literal}, out});
            acc = out;
        }
        nl.outputs.push_back(acc);
    }
    nl.check();
    return nl;
}

// --- Spec file (small key-value format) --------------------------------------
//
//   scheme enum-weight
//   n 4
//   weight 1
//   p 0.03

inline CodecSpec parse_codec_spec(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        std::string key, value;
        if (!(ss >> key)) continue;
        if (!(ss >> value)) throw CodecError("spec key '" + key + "' has no value");
        kv[key] = value;
    }
    if (!kv.count("scheme")) throw CodecError("spec is missing 'scheme'");
    if (!kv.count("n")) throw CodecError("spec is missing 'n'");
    const std::size_t n = std::stoul(kv.at("n"));
    const double p = kv.count("p") ? std::stod(kv.at("p")) : 0.0;
    CodecSpec s;
    if (kv.at("scheme") == "identity") {
        s = identity_spec(n);
    } else if (kv.at("scheme") == "enum-weight") {
        if (!kv.count("weight")) throw CodecError("enum-weight spec is missing 'weight'");
        s = enum_weight_spec(n, std::stoul(kv.at("weight")), p);
    } else {
        throw CodecError("unknown scheme '" + kv.at("scheme") + "'");
    }
    s.p = p;
    if (kv.count("m") && std::stoul(kv.at("m")) != s.code_len)
        throw CodecError("spec 'm' does not match the derived codeword length");
    return s;
}

inline void write_codec_spec(std::ostream& os, const CodecSpec& s) {
    os << "scheme " << s.scheme << "\n";
    os << "n " << s.block_len << "\n";
    if (s.scheme != "identity") os << "weight " << s.weight_max << "\n";
    os << "m " << s.code_len << "\n";
    os << "p " << s.p << "\n";
}

}  // namespace qload
