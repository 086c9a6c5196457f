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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qload/circuit.hpp"
#include "qload/dense_state.hpp"

namespace qload {

/// Exact sparse state: the explicit list of nonzero basis amplitudes, sorted
/// by label. The loader circuits apply Hadamards only to fresh |0> qubits
/// and everything else is a basis permutation or a phase, so the support
/// grows to 2^(#H) terms instead of 2^(#qubits). All gates are still handled
/// in full generality (H merges interfering terms), which keeps this engine
/// interchangeable with StateVector on small registers.
class SparseState {
  public:
    static constexpr std::uint32_t kMaxQubits = 64;
    static constexpr double kDropTolerance = 1e-15;

    struct Term {
        std::uint64_t label;
        cplx amp;
    };

    explicit SparseState(std::uint32_t num_qubits) : k_(num_qubits) {
        if (num_qubits > kMaxQubits)
            throw std::invalid_argument("sparse state limited to 64 qubits");
        terms_.push_back({0, cplx{1.0, 0.0}});
    }

    static SparseState from_basis(const BasisLabel& label) {
        SparseState s(static_cast<std::uint32_t>(label.size()));
        s.terms_[0].label = label.packed();
        return s;
    }

    std::uint32_t num_qubits() const { return k_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }

    int bit_of(std::uint64_t label, std::uint32_t q) const {
        return static_cast<int>((label >> (k_ - 1 - q)) & 1u);
    }

    double norm_sq() const {
        double n = 0;
        for (const Term& t : terms_) n += std::norm(t.amp);
        return n;
    }

    cplx amplitude(std::uint64_t label) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), label,
                                   [](const Term& t, std::uint64_t l) { return t.label < l; });
        return (it != terms_.end() && it->label == label) ? it->amp : cplx{0, 0};
    }

    void apply(const Gate& g) {
        switch (g.kind) {
        case GateKind::X: permute([&](std::uint64_t l) { return l ^ mask(g.operands[0]); }); break;
        case GateKind::CLX:
            if (g.classical_bit == 1)
                permute([&](std::uint64_t l) { return l ^ mask(g.operands[0]); });
            break;
        case GateKind::H: apply_h(g.operands[0]); break;
        case GateKind::S: phase_if(mask(g.operands[0]), cplx{0, 1}); break;
        case GateKind::Sdag: phase_if(mask(g.operands[0]), cplx{0, -1}); break;
        case GateKind::CS: phase_if(mask(g.operands[0]) | mask(g.operands[1]), cplx{0, 1}); break;
        case GateKind::CSDG:
            phase_if(mask(g.operands[0]) | mask(g.operands[1]), cplx{0, -1});
            break;
        case GateKind::CNOT: {
            const std::uint64_t mc = mask(g.operands[0]), mt = mask(g.operands[1]);
            permute([&](std::uint64_t l) { return (l & mc) ? l ^ mt : l; });
            break;
        }
        case GateKind::CCNOT: {
            const std::uint64_t mc = mask(g.operands[0]) | mask(g.operands[1]);
            const std::uint64_t mt = mask(g.operands[2]);
            permute([&](std::uint64_t l) { return ((l & mc) == mc) ? l ^ mt : l; });
            break;
        }
        case GateKind::SWAP: {
            const std::uint64_t ma = mask(g.operands[0]), mb = mask(g.operands[1]);
            permute([&](std::uint64_t l) {
                const bool ba = l & ma, bb = l & mb;
                return (ba != bb) ? (l ^ ma ^ mb) : l;
            });
            break;
        }
        case GateKind::CSWAP: {
            const std::uint64_t mc = mask(g.operands[0]);
            const std::uint64_t ma = mask(g.operands[1]), mb = mask(g.operands[2]);
            permute([&](std::uint64_t l) {
                if (!(l & mc)) return l;
                const bool ba = l & ma, bb = l & mb;
                return (ba != bb) ? (l ^ ma ^ mb) : l;
            });
            break;
        }
        }
    }

  private:
    std::uint64_t mask(std::uint32_t q) const { return std::uint64_t{1} << (k_ - 1 - q); }

    template <typename F>
    void permute(F f) {
        // A permutation maps distinct labels to distinct labels; re-sorting
        // restores the canonical order without any merging.
        for (Term& t : terms_) t.label = f(t.label);
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.label < b.label; });
    }

    void phase_if(std::uint64_t m, cplx ph) {
        for (Term& t : terms_)
            if ((t.label & m) == m) t.amp *= ph;
    }

    void apply_h(std::uint32_t q) {
        const std::uint64_t m = mask(q);
        const double s = 1.0 / std::sqrt(2.0);
        std::vector<Term> out;
        out.reserve(terms_.size() * 2);
        for (const Term& t : terms_) {
            if (t.label & m) {
                out.push_back({t.label ^ m, s * t.amp});
                out.push_back({t.label, -s * t.amp});
            } else {
                out.push_back({t.label, s * t.amp});
                out.push_back({t.label ^ m, s * t.amp});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Term& a, const Term& b) { return a.label < b.label; });
        terms_.clear();
        for (const Term& t : out) {
            if (!terms_.empty() && terms_.back().label == t.label)
                terms_.back().amp += t.amp;
            else
                terms_.push_back(t);
        }
        std::erase_if(terms_, [](const Term& t) { return std::abs(t.amp) < kDropTolerance; });
    }

    std::uint32_t k_;
    std::vector<Term> terms_;
};

inline SparseState run_sparse(const Circuit& c, const BasisLabel& initial) {
    if (initial.size() != c.num_qubits)
        throw std::invalid_argument("initial label length does not match circuit qubit count");
    SparseState s = SparseState::from_basis(initial);
    for (const auto& slice : c.slices) {
        for (const Gate& g : slice.gates) s.apply(g);
        if (std::abs(s.norm_sq() - 1.0) > kNormTolerance)
            throw std::runtime_error("state norm drifted beyond tolerance");
    }
    return s;
}

inline SparseState run_sparse(const Circuit& c) {
    return run_sparse(c, BasisLabel::zeros(c.num_qubits));
}

}  // namespace qload
