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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qload {

/// Classical input bits, most significant first within a word. Words are a
/// labeling convenience only; the loaders consume the flat bit list.
struct BitVector {
    std::vector<int> bits;
    std::size_t word_length = 1;  // P: bits per word; total = N * P

    BitVector() = default;
    explicit BitVector(std::vector<int> b, std::size_t p = 1) : bits(std::move(b)), word_length(p) {
        for (int v : bits)
            if (v != 0 && v != 1) throw std::invalid_argument("bit values must be 0 or 1");
        if (word_length == 0) throw std::invalid_argument("word length must be positive");
    }

    std::size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }
    int operator[](std::size_t i) const { return bits[i]; }

    static BitVector parse(const std::string& s) {
        std::vector<int> b;
        b.reserve(s.size());
        for (char ch : s) {
            if (ch == '0')
                b.push_back(0);
            else if (ch == '1')
                b.push_back(1);
            else
                throw std::invalid_argument(std::string("invalid bit character '") + ch + "'");
        }
        if (b.empty()) throw std::invalid_argument("empty bit string");
        return BitVector(std::move(b));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits.size());
        for (int v : bits) s.push_back(v ? '1' : '0');
        return s;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (int v : bits) w += static_cast<std::size_t>(v);
        return w;
    }
};

/// Zero-pads to the next power of two so the address register stays a plain
/// binary counter; returns the number of padding bits appended.
inline std::size_t pad_to_power_of_two(BitVector& bv) {
    if (bv.empty()) throw std::invalid_argument("cannot pad an empty bit vector");
    std::size_t n = 1;
    while (n < bv.size()) n <<= 1;
    const std::size_t padding = n - bv.size();
    bv.bits.resize(n, 0);
    return padding;
}

inline std::size_t log2_exact(std::size_t n) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    if ((std::size_t{1} << l) != n) throw std::invalid_argument("not a power of two");
    return l;
}

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

}  // namespace qload
