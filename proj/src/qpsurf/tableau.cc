// Copyright 2026 The qpsurf Authors
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

#include "qpsurf/tableau.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qpsurf {

namespace {

size_t words_for(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

// Multiplies (x1, z1) by (x2, z2) in place and returns the log base i of the
// scalar picked up by the product.
unsigned multiply_words(uint64_t *x1, uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t num_words) {
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t k = 0; k < num_words; k++) {
        uint64_t old_x1 = x1[k];
        uint64_t old_z1 = z1[k];
        x1[k] ^= x2[k];
        z1[k] ^= z2[k];
        uint64_t x1z2 = old_x1 & z2[k];
        uint64_t anti_commutes = (x2[k] & old_z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ x1[k] ^ z1[k] ^ x1z2) & anti_commutes;
        cnt1 ^= anti_commutes;
    }
    return (std::popcount(cnt1) + (std::popcount(cnt2) << 1)) & 3;
}

bool symplectic_product(const uint64_t *x1, const uint64_t *z1, const uint64_t *x2, const uint64_t *z2, size_t num_words) {
    uint64_t acc = 0;
    for (size_t k = 0; k < num_words; k++) {
        acc ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.negative_ = negative;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '_':
            case 'I':
                break;
            case 'X':
                result.set(q, true, false);
                break;
            case 'Y':
                result.set(q, true, true);
                break;
            case 'Z':
                result.set(q, false, true);
                break;
            default:
                throw std::invalid_argument("invalid Pauli character in '" + std::string(text) + "'");
        }
    }
    return result;
}

bool PauliString::x(size_t q) const {
    return (xs_[q >> 6] >> (q & 63)) & 1;
}

bool PauliString::z(size_t q) const {
    return (zs_[q >> 6] >> (q & 63)) & 1;
}

void PauliString::set(size_t q, bool x, bool z) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    uint64_t mask = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x ? (xs_[q >> 6] | mask) : (xs_[q >> 6] & ~mask);
    zs_[q >> 6] = z ? (zs_[q >> 6] | mask) : (zs_[q >> 6] & ~mask);
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli strings have different sizes");
    }
    return !symplectic_product(xs_.data(), zs_.data(), other.xs_.data(), other.zs_.data(), xs_.size());
}

std::string PauliString::str() const {
    std::string out(1, negative_ ? '-' : '+');
    for (size_t q = 0; q < num_qubits_; q++) {
        out.push_back("_ZXY"[x(q) * 2 + z(q)]);
    }
    return out;
}

bool PauliString::operator==(const PauliString &other) const {
    return num_qubits_ == other.num_qubits_ && negative_ == other.negative_ && xs_ == other.xs_ && zs_ == other.zs_;
}

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits),
      num_words_(words_for(num_qubits)),
      words_((2 * num_qubits + 1) * 2 * words_for(num_qubits), 0),
      signs_(2 * num_qubits + 1, 0) {
    if (num_qubits == 0) {
        throw std::invalid_argument("a tableau needs at least one qubit");
    }
    for (size_t q = 0; q < n_; q++) {
        row_x(q)[q >> 6] |= uint64_t{1} << (q & 63);
        row_z(q + n_)[q >> 6] |= uint64_t{1} << (q & 63);
    }
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

void Tableau::apply_h(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t &x = row_x(row)[w];
        uint64_t &z = row_z(row)[w];
        bool xb = x & m;
        bool zb = z & m;
        signs_[row] ^= xb & zb;
        if (xb != zb) {
            x ^= m;
            z ^= m;
        }
    }
}

void Tableau::apply_s(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t x = row_x(row)[w] & m;
        uint64_t &z = row_z(row)[w];
        signs_[row] ^= (x & z) != 0;
        z ^= x;
    }
}

void Tableau::apply_x(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        signs_[row] ^= (row_z(row)[w] & m) != 0;
    }
}

void Tableau::apply_z(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        signs_[row] ^= (row_x(row)[w] & m) != 0;
    }
}

void Tableau::apply_sqrt_x(size_t q) {
    check_qubit(q);
    size_t w = q >> 6;
    uint64_t m = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t &x = row_x(row)[w];
        uint64_t z = row_z(row)[w] & m;
        signs_[row] ^= (z & ~x) != 0;
        x ^= z;
    }
}

void Tableau::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    size_t cw = control >> 6;
    size_t tw = target >> 6;
    unsigned cs = control & 63;
    unsigned ts = target & 63;
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t *xs = row_x(row);
        uint64_t *zs = row_z(row);
        uint64_t xc = (xs[cw] >> cs) & 1;
        uint64_t zc = (zs[cw] >> cs) & 1;
        uint64_t xt = (xs[tw] >> ts) & 1;
        uint64_t zt = (zs[tw] >> ts) & 1;
        signs_[row] ^= xc & zt & (xt ^ zc ^ 1);
        xs[tw] ^= xc << ts;
        zs[cw] ^= zt << cs;
    }
}

void Tableau::row_multiply(size_t target, size_t source) {
    unsigned log_i = multiply_words(row_x(target), row_z(target), row_x(source), row_z(source), num_words_);
    signs_[target] ^= signs_[source] ^ (log_i >> 1);
}

void Tableau::row_copy(size_t target, size_t source) {
    std::copy_n(row_x(source), 2 * num_words_, row_x(target));
    signs_[target] = signs_[source];
}

void Tableau::row_set_z(size_t row, size_t q, bool negative) {
    std::fill_n(row_x(row), 2 * num_words_, 0);
    row_z(row)[q >> 6] = uint64_t{1} << (q & 63);
    signs_[row] = negative;
}

PauliString Tableau::row_pauli(size_t row) const {
    PauliString result(n_);
    for (size_t q = 0; q < n_; q++) {
        bool x = (row_x(row)[q >> 6] >> (q & 63)) & 1;
        bool z = (row_z(row)[q >> 6] >> (q & 63)) & 1;
        result.set(q, x, z);
    }
    result.set_negative(signs_[row]);
    return result;
}

PauliString Tableau::stabilizer(size_t i) const {
    check_qubit(i);
    return row_pauli(n_ + i);
}

PauliString Tableau::destabilizer(size_t i) const {
    check_qubit(i);
    return row_pauli(i);
}

size_t Tableau::find_anticommuting_stabilizer(size_t q) const {
    for (size_t row = n_; row < 2 * n_; row++) {
        if (bit_x(row, q)) {
            return row;
        }
    }
    return 2 * n_;
}

void Tableau::collapse(size_t q, size_t pivot, int outcome) {
    for (size_t row = 0; row < 2 * n_; row++) {
        if (row != pivot && bit_x(row, q)) {
            row_multiply(row, pivot);
        }
    }
    row_copy(pivot - n_, pivot);
    row_set_z(pivot, q, outcome < 0);
}

int Tableau::determined_z(size_t q) {
    size_t scratch = 2 * n_;
    std::fill_n(row_x(scratch), 2 * num_words_, 0);
    signs_[scratch] = 0;
    for (size_t i = 0; i < n_; i++) {
        if (bit_x(i, q)) {
            row_multiply(scratch, i + n_);
        }
    }
    return signs_[scratch] ? -1 : +1;
}

MeasureResult Tableau::measure_z(size_t q, Rng &rng) {
    check_qubit(q);
    size_t pivot = find_anticommuting_stabilizer(q);
    if (pivot == 2 * n_) {
        return {determined_z(q), true};
    }
    int outcome = rng.coin() ? -1 : +1;
    collapse(q, pivot, outcome);
    return {outcome, false};
}

bool Tableau::project_z(size_t q, int outcome) {
    check_qubit(q);
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("outcome must be +1 or -1");
    }
    size_t pivot = find_anticommuting_stabilizer(q);
    if (pivot == 2 * n_) {
        if (determined_z(q) != outcome) {
            throw std::invalid_argument("projection onto a zero-probability outcome");
        }
        return true;
    }
    collapse(q, pivot, outcome);
    return false;
}

void Tableau::reset_z(size_t q, Rng &rng) {
    if (measure_z(q, rng).outcome < 0) {
        apply_x(q);
    }
}

int Tableau::expectation(const PauliString &pauli) const {
    if (pauli.num_qubits() != n_) {
        throw std::invalid_argument("Pauli string size does not match tableau");
    }
    const uint64_t *px = pauli.x_words().data();
    const uint64_t *pz = pauli.z_words().data();
    for (size_t row = n_; row < 2 * n_; row++) {
        if (symplectic_product(row_x(row), row_z(row), px, pz, num_words_)) {
            return 0;
        }
    }
    std::vector<uint64_t> acc(2 * num_words_, 0);
    bool negative = false;
    for (size_t i = 0; i < n_; i++) {
        if (symplectic_product(row_x(i), row_z(i), px, pz, num_words_)) {
            unsigned log_i = multiply_words(acc.data(), acc.data() + num_words_, row_x(i + n_), row_z(i + n_), num_words_);
            negative ^= signs_[i + n_] ^ (log_i >> 1);
        }
    }
    return negative == pauli.negative() ? +1 : -1;
}

bool Tableau::is_consistent() const {
    for (size_t a = 0; a < 2 * n_; a++) {
        for (size_t b = a + 1; b < 2 * n_; b++) {
            bool anti = symplectic_product(row_x(a), row_z(a), row_x(b), row_z(b), num_words_);
            bool expected = a < n_ && b == a + n_;
            if (anti != expected) {
                return false;
            }
        }
    }
    return true;
}

bool Tableau::operator==(const Tableau &other) const {
    if (n_ != other.n_) {
        return false;
    }
    size_t used = 2 * n_ * 2 * num_words_;
    return std::equal(words_.begin(), words_.begin() + used, other.words_.begin()) &&
           std::equal(signs_.begin(), signs_.begin() + 2 * n_, other.signs_.begin());
}

}  // namespace qpsurf
