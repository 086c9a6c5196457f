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
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "qload/dense_state.hpp"
#include "qload/sparse_state.hpp"

namespace qload {

constexpr double kPurityTolerance = 1e-10;

/// |<a|b>| for equal-sized states; 1 means equal up to a global phase.
inline double fidelity(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("fidelity requires equal qubit counts");
    cplx ip = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        ip += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::abs(ip);
}

inline double fidelity(const SparseState& a, const SparseState& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("fidelity requires equal qubit counts");
    cplx ip = 0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->label < ib->label)
            ++ia;
        else if (ib->label < ia->label)
            ++ib;
        else {
            ip += std::conj(ia->amp) * ib->amp;
            ++ia;
            ++ib;
        }
    }
    return std::abs(ip);
}

inline std::vector<SparseState::Term> nonzero_terms(const StateVector& sv) {
    std::vector<SparseState::Term> out;
    for (std::uint64_t l = 0; l < sv.dim(); ++l)
        if (std::abs(sv.amplitude(l)) >= SparseState::kDropTolerance)
            out.push_back({l, sv.amplitude(l)});
    return out;
}

namespace detail {

inline std::uint64_t gather_bits(std::uint64_t label, std::uint32_t k,
                                 const std::vector<std::uint32_t>& qubits) {
    std::uint64_t v = 0;
    for (std::uint32_t q : qubits) v = (v << 1) | ((label >> (k - 1 - q)) & 1u);
    return v;
}

/// Reduced density matrix of `subset`, accumulated from the term list.
/// Terms are grouped by the complement bits; each group contributes one
/// outer product.
inline std::vector<cplx> reduced_density(const std::vector<SparseState::Term>& terms,
                                         std::uint32_t k,
                                         const std::vector<std::uint32_t>& subset) {
    if (subset.empty() || subset.size() >= k)
        throw std::invalid_argument("subset must be nonempty and proper");
    if (subset.size() > 12) throw std::invalid_argument("subset too large for a dense density matrix");
    std::vector<std::uint32_t> rest;
    for (std::uint32_t q = 0; q < k; ++q)
        if (std::find(subset.begin(), subset.end(), q) == subset.end()) rest.push_back(q);

    struct Row {
        std::uint64_t rest_label;
        std::uint64_t sub_label;
        cplx amp;
    };
    std::vector<Row> rows;
    rows.reserve(terms.size());
    for (const auto& t : terms)
        rows.push_back({gather_bits(t.label, k, rest), gather_bits(t.label, k, subset), t.amp});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.rest_label != b.rest_label ? a.rest_label < b.rest_label
                                            : a.sub_label < b.sub_label;
    });

    const std::size_t d = std::size_t{1} << subset.size();
    std::vector<cplx> rho(d * d, cplx{0, 0});
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].rest_label == rows[i].rest_label) ++j;
        for (std::size_t p = i; p < j; ++p)
            for (std::size_t q = i; q < j; ++q)
                rho[rows[p].sub_label * d + rows[q].sub_label] +=
                    rows[p].amp * std::conj(rows[q].amp);
        i = j;
    }
    return rho;
}

}  // namespace detail

/// tr(rho^2) of the reduced state on `subset`. Equals 1 (within tolerance)
/// iff the subset is in a tensor product with its complement.
inline double purity_of_subset(const std::vector<SparseState::Term>& terms, std::uint32_t k,
                               const std::vector<std::uint32_t>& subset) {
    const auto rho = detail::reduced_density(terms, k, subset);
    double p = 0;
    for (const cplx& v : rho) p += std::norm(v);
    return p;
}

inline double purity_of_subset(const StateVector& sv, const std::vector<std::uint32_t>& subset) {
    return purity_of_subset(nonzero_terms(sv), sv.num_qubits(), subset);
}

inline double purity_of_subset(const SparseState& s, const std::vector<std::uint32_t>& subset) {
    return purity_of_subset(s.terms(), s.num_qubits(), subset);
}

/// The pure state carried by `subset`, if it is unentangled from the rest
/// (purity 1 within tolerance); nullopt otherwise. Global phase is fixed by
/// making the largest component real positive.
inline std::optional<std::vector<cplx>> state_of_subset(
    const std::vector<SparseState::Term>& terms, std::uint32_t k,
    const std::vector<std::uint32_t>& subset) {
    const auto rho = detail::reduced_density(terms, k, subset);
    const std::size_t d = std::size_t{1} << subset.size();
    double purity = 0;
    for (const cplx& v : rho) purity += std::norm(v);
    if (std::abs(purity - 1.0) > kPurityTolerance) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t j = 1; j < d; ++j)
        if (rho[j * d + j].real() > rho[best * d + best].real()) best = j;
    std::vector<cplx> v(d);
    const double scale = std::sqrt(rho[best * d + best].real());
    for (std::size_t i = 0; i < d; ++i) v[i] = rho[i * d + best] / scale;
    return v;
}

inline std::optional<std::vector<cplx>> state_of_subset(const SparseState& s,
                                                        const std::vector<std::uint32_t>& subset) {
    return state_of_subset(s.terms(), s.num_qubits(), subset);
}

inline double vector_fidelity(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    cplx ip = 0;
    for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
    return std::abs(ip);
}

/// Probability mass of each basis label of the chosen register, junk traced
/// out classically.
inline std::vector<double> register_distribution(const std::vector<SparseState::Term>& terms,
                                                 std::uint32_t k,
                                                 const std::vector<std::uint32_t>& reg) {
    if (reg.size() > 24) throw std::invalid_argument("register too large for a dense marginal");
    std::vector<double> mass(std::size_t{1} << reg.size(), 0.0);
    for (const auto& t : terms) mass[detail::gather_bits(t.label, k, reg)] += std::norm(t.amp);
    return mass;
}

/// Overlap of the register's label distribution with |target|^2
/// (sum of sqrt(mass) * |target|). Equals |<target|psi_reg>| whenever the
/// register is in a product state and the target amplitudes are nonnegative
/// reals, which holds for every loader target here; in general it upper
/// bounds that fidelity. Value 1 iff the distribution matches exactly.
inline double marginal_fidelity(const std::vector<SparseState::Term>& terms, std::uint32_t k,
                                const std::vector<std::uint32_t>& reg,
                                const std::vector<cplx>& target) {
    if (target.size() != (std::size_t{1} << reg.size()))
        throw std::invalid_argument("target dimension does not match register");
    const auto mass = register_distribution(terms, k, reg);
    double f = 0;
    for (std::size_t i = 0; i < mass.size(); ++i) f += std::sqrt(mass[i]) * std::abs(target[i]);
    return f;
}

inline double marginal_fidelity(const SparseState& s, const std::vector<std::uint32_t>& reg,
                                const std::vector<cplx>& target) {
    return marginal_fidelity(s.terms(), s.num_qubits(), reg, target);
}

/// State dump, one line per nonzero amplitude: `bitstring re im`, sorted by
/// bitstring. Used by the CLI's `sim --dump`.
inline void dump_state(std::ostream& os, const std::vector<SparseState::Term>& terms,
                       std::uint32_t k) {
    for (const auto& t : terms) {
        std::string bits(k, '0');
        for (std::uint32_t q = 0; q < k; ++q)
            if ((t.label >> (k - 1 - q)) & 1u) bits[q] = '1';
        char buf[64];
        std::snprintf(buf, sizeof buf, " %.12g %.12g", t.amp.real(), t.amp.imag());
        os << bits << buf << "\n";
    }
}

}  // namespace qload
