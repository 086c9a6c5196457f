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

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qload/circuit.hpp"

namespace qload {

using cplx = std::complex<double>;

/// Basis-state label. Qubit 0 is the MOST significant bit, so a ket reads
/// left to right exactly like the qubit index order.
struct BasisLabel {
    std::vector<int> bits;

    BasisLabel() = default;
    explicit BasisLabel(std::vector<int> b) : bits(std::move(b)) {}
    static BasisLabel zeros(std::size_t k) { return BasisLabel(std::vector<int>(k, 0)); }

    std::size_t size() const { return bits.size(); }

    std::uint64_t packed() const {
        std::uint64_t l = 0;
        for (int b : bits) l = (l << 1) | static_cast<std::uint64_t>(b);
        return l;
    }
};

constexpr double kNormTolerance = 1e-12;

/// Dense 2^K state vector. The workhorse for small registers and for
/// unitary extraction; the sparse engine in sparse_state.hpp covers the
/// wide-but-shallow loader circuits. A state is owned by one execution at
/// a time; read-only diagnostics are safe concurrently afterwards.
class StateVector {
  public:
    static constexpr std::uint32_t kMaxQubits = 24;

    explicit StateVector(std::uint32_t num_qubits) : k_(num_qubits) {
        if (num_qubits > kMaxQubits)
            throw std::invalid_argument("dense state limited to 24 qubits");
        amps_.assign(std::size_t{1} << k_, cplx{0.0, 0.0});
        amps_[0] = 1.0;
    }

    static StateVector from_basis(const BasisLabel& label) {
        StateVector sv(static_cast<std::uint32_t>(label.size()));
        sv.amps_[0] = 0.0;
        sv.amps_[label.packed()] = 1.0;
        return sv;
    }

    std::uint32_t num_qubits() const { return k_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t label) const { return amps_[label]; }

    double norm_sq() const {
        double n = 0;
        for (const cplx& a : amps_) n += std::norm(a);
        return n;
    }

    int bit_of(std::uint64_t label, std::uint32_t q) const {
        return static_cast<int>((label >> (k_ - 1 - q)) & 1u);
    }

    void apply(const Gate& g) {
        switch (g.kind) {
        case GateKind::X: apply_x(g.operands[0]); break;
        case GateKind::CLX:
            if (g.classical_bit == 1) apply_x(g.operands[0]);
            break;
        case GateKind::H: apply_h(g.operands[0]); break;
        case GateKind::S: apply_phase(g.operands[0], cplx{0, 1}); break;
        case GateKind::Sdag: apply_phase(g.operands[0], cplx{0, -1}); break;
        case GateKind::CNOT: apply_cnot(g.operands[0], g.operands[1]); break;
        case GateKind::CCNOT: apply_ccnot(g.operands[0], g.operands[1], g.operands[2]); break;
        case GateKind::SWAP: apply_swap(g.operands[0], g.operands[1]); break;
        case GateKind::CSWAP: apply_cswap(g.operands[0], g.operands[1], g.operands[2]); break;
        case GateKind::CS: apply_cphase(g.operands[0], g.operands[1], cplx{0, 1}); break;
        case GateKind::CSDG: apply_cphase(g.operands[0], g.operands[1], cplx{0, -1}); break;
        }
    }

  private:
    std::uint64_t mask(std::uint32_t q) const { return std::uint64_t{1} << (k_ - 1 - q); }

    void apply_x(std::uint32_t q) {
        const std::uint64_t m = mask(q);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if (!(l & m)) std::swap(amps_[l], amps_[l | m]);
    }

    void apply_h(std::uint32_t q) {
        const std::uint64_t m = mask(q);
        const double s = 1.0 / std::sqrt(2.0);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if (!(l & m)) {
                const cplx a0 = amps_[l], a1 = amps_[l | m];
                amps_[l] = s * (a0 + a1);
                amps_[l | m] = s * (a0 - a1);
            }
    }

    void apply_phase(std::uint32_t q, cplx ph) {
        const std::uint64_t m = mask(q);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if (l & m) amps_[l] *= ph;
    }

    void apply_cphase(std::uint32_t c, std::uint32_t t, cplx ph) {
        const std::uint64_t m = mask(c) | mask(t);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if ((l & m) == m) amps_[l] *= ph;
    }

    void apply_cnot(std::uint32_t c, std::uint32_t t) {
        const std::uint64_t mc = mask(c), mt = mask(t);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if ((l & mc) && !(l & mt)) std::swap(amps_[l], amps_[l | mt]);
    }

    void apply_ccnot(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
        const std::uint64_t mc = mask(c1) | mask(c2), mt = mask(t);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if (((l & mc) == mc) && !(l & mt)) std::swap(amps_[l], amps_[l | mt]);
    }

    void apply_swap(std::uint32_t a, std::uint32_t b) {
        const std::uint64_t ma = mask(a), mb = mask(b);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if ((l & ma) && !(l & mb)) std::swap(amps_[l], amps_[(l ^ ma) | mb]);
    }

    void apply_cswap(std::uint32_t c, std::uint32_t a, std::uint32_t b) {
        const std::uint64_t mc = mask(c), ma = mask(a), mb = mask(b);
        for (std::uint64_t l = 0; l < amps_.size(); ++l)
            if ((l & mc) && (l & ma) && !(l & mb)) std::swap(amps_[l], amps_[(l ^ ma) | mb]);
    }

    std::uint32_t k_;
    std::vector<cplx> amps_;
};

/// Executes the circuit slice by slice on the given basis input.
/// Norm is checked after every slice; a violation indicates a broken gate
/// implementation rather than a user error.
inline StateVector run(const Circuit& c, const BasisLabel& initial) {
    if (initial.size() != c.num_qubits)
        throw std::invalid_argument("initial label length does not match circuit qubit count");
    StateVector sv = StateVector::from_basis(initial);
    for (const auto& slice : c.slices) {
        for (const Gate& g : slice.gates) sv.apply(g);
        if (std::abs(sv.norm_sq() - 1.0) > kNormTolerance)
            throw std::runtime_error("state norm drifted beyond tolerance");
    }
    return sv;
}

inline StateVector run(const Circuit& c) { return run(c, BasisLabel::zeros(c.num_qubits)); }

/// Column-major unitary of a small circuit: column j is run(c, e_j).
struct Matrix {
    std::size_t n = 0;
    std::vector<cplx> a;  // row-major n x n

    explicit Matrix(std::size_t dim) : n(dim), a(dim * dim, cplx{0, 0}) {}
    cplx& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * n + c]; }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
        return m;
    }

    double max_abs_diff(const Matrix& other) const {
        double d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - other.a[i]));
        return d;
    }
};

inline Matrix unitary_of(const Circuit& c) {
    if (c.num_qubits > 12) throw std::invalid_argument("unitary_of limited to 12 qubits");
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    Matrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<int> bits(c.num_qubits);
        for (std::uint32_t q = 0; q < c.num_qubits; ++q)
            bits[q] = static_cast<int>((j >> (c.num_qubits - 1 - q)) & 1u);
        StateVector col = run(c, BasisLabel(bits));
        for (std::size_t i = 0; i < dim; ++i) u.at(i, j) = col.amplitude(i);
    }
    return u;
}

}  // namespace qload
