// Copyright 2026 The qshare Authors
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

// Brute-force reference computations for the tests. Nothing here calls into
// the library's state engine: operators are dense Kronecker products and Bell
// states come from their textbook definitions.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline Mat identity(std::size_t d) {
    Mat m(d, std::vector<C>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ra = a.size(), rb = b.size();
    Mat out(ra * rb, std::vector<C>(ra * rb, 0.0));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

inline Vec apply(const Mat& m, const Vec& v) {
    Vec out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline C dot(const Vec& a, const Vec& b) {
    C s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// The four encoding matrices written out by hand: I, sigma_x, i*sigma_y, sigma_z.
inline Mat pauli(int k) {
    switch (k) {
        case 0: return {{1, 0}, {0, 1}};
        case 1: return {{0, 1}, {1, 0}};
        case 2: return {{0, 1}, {-1, 0}};
        default: return {{1, 0}, {0, -1}};
    }
}

/// m on qubit q (1-based, qubit 1 leftmost) of an n-qubit register.
inline Mat embed(const Mat& m, int q, int n) {
    Mat out = {{1}};
    for (int k = 1; k <= n; ++k) out = kron(out, k == q ? m : identity(2));
    return out;
}

inline Vec ket(const char* bits) {
    Vec v = {1};
    for (const char* p = bits; *p; ++p) v = kron(v, *p == '0' ? Vec{1, 0} : Vec{0, 1});
    return v;
}

inline Vec ghz3() {
    const double r = 1 / std::sqrt(2.0);
    Vec a = ket("000"), b = ket("111");
    Vec out(8);
    for (int i = 0; i < 8; ++i) out[i] = r * (a[i] + b[i]);
    return out;
}

inline Vec w3() {
    const double r = 1 / std::sqrt(3.0);
    Vec a = ket("001"), b = ket("010"), c = ket("100");
    Vec out(8);
    for (int i = 0; i < 8; ++i) out[i] = r * (a[i] + b[i] + c[i]);
    return out;
}

/// Phi+, Phi-, Psi+, Psi- as 4-vectors over |00>, |01>, |10>, |11>.
inline Vec bell(int k) {
    const double r = 1 / std::sqrt(2.0);
    switch (k) {
        case 0: return {r, 0, 0, r};
        case 1: return {r, 0, 0, -r};
        case 2: return {0, r, r, 0};
        default: return {0, r, -r, 0};
    }
}

/// <Bell_a(1,4) Bell_b(2,5) Bell_c(3,6) | psi> for a 6-qubit psi, by summing
/// over all 64 basis indices.
inline C triple_coefficient(const Vec& psi, int a, int b, int c) {
    const Vec ba = bell(a), bb = bell(b), bc = bell(c);
    C total = 0;
    for (int idx = 0; idx < 64; ++idx) {
        auto bit = [idx](int q) { return (idx >> (6 - q)) & 1; };
        const C amp = ba[bit(1) * 2 + bit(4)] * bb[bit(2) * 2 + bit(5)] * bc[bit(3) * 2 + bit(6)];
        total += std::conj(amp) * psi[idx];
    }
    return total;
}

/// The encoded two-GHZ state, by dense matrices.
inline Vec encoded_two_ghz(int op) { return oracle::apply(embed(pauli(op), 1, 6), kron(ghz3(), ghz3())); }

}  // namespace oracle
