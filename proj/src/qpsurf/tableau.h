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

#ifndef QPSURF_TABLEAU_H
#define QPSURF_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpsurf/rng.h"

namespace qpsurf {

/// A Hermitian Pauli product with a sign of +1 or -1.
///
/// Each qubit holds an (x, z) bit pair: (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z.
/// Bits are packed into 64-bit words; callers only see qubit indices.
class PauliString {
   public:
    explicit PauliString(size_t num_qubits);

    /// Parses text like "+XZ_Y", "-ZZ" or "XIY". '_' and 'I' both mean identity.
    static PauliString from_str(std::string_view text);

    size_t num_qubits() const {
        return num_qubits_;
    }
    bool x(size_t q) const;
    bool z(size_t q) const;
    void set(size_t q, bool x, bool z);
    void set_x(size_t q) {
        set(q, true, false);
    }
    void set_z(size_t q) {
        set(q, false, true);
    }
    bool negative() const {
        return negative_;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    bool commutes(const PauliString &other) const;
    std::string str() const;
    bool operator==(const PauliString &other) const;

    const std::vector<uint64_t> &x_words() const {
        return xs_;
    }
    const std::vector<uint64_t> &z_words() const {
        return zs_;
    }

   private:
    size_t num_qubits_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    bool negative_ = false;
};

struct MeasureResult {
    /// +1 or -1.
    int outcome;
    bool deterministic;
};

/// Stabilizer state in destabilizer/stabilizer form.
///
/// Rows [0, n) are destabilizers and rows [n, 2n) stabilizers. Destabilizer i
/// anticommutes with stabilizer i and commutes with every other row. Row signs
/// are always real.
class Tableau {
   public:
    /// The all-zeros computational basis state on `num_qubits` qubits.
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_x(size_t q);
    void apply_z(size_t q);
    /// Conjugation by exp(-i pi/4 X). Maps Z to -Y and Y to Z.
    void apply_sqrt_x(size_t q);
    void apply_cnot(size_t control, size_t target);

    /// Z-basis measurement. Random outcomes are drawn from `rng` and the state
    /// collapses to the post-measurement state.
    MeasureResult measure_z(size_t q, Rng &rng);

    /// Projects onto the Z_q eigenspace with the requested outcome. Throws if the
    /// outcome has zero probability. Returns whether the outcome was already
    /// determined.
    bool project_z(size_t q, int outcome);

    /// Measures q and flips it back to |0> when the outcome is -1.
    void reset_z(size_t q, Rng &rng);

    /// Returns +1 or -1 when P (or -P) is in the stabilizer group, else 0.
    int expectation(const PauliString &pauli) const;

    PauliString stabilizer(size_t i) const;
    PauliString destabilizer(size_t i) const;

    /// True when every pair of rows has the expected commutation relation.
    bool is_consistent() const;

    bool operator==(const Tableau &other) const;
    bool operator!=(const Tableau &other) const {
        return !(*this == other);
    }

   private:
    uint64_t *row_x(size_t row) {
        return &words_[row * 2 * num_words_];
    }
    uint64_t *row_z(size_t row) {
        return &words_[row * 2 * num_words_ + num_words_];
    }
    const uint64_t *row_x(size_t row) const {
        return &words_[row * 2 * num_words_];
    }
    const uint64_t *row_z(size_t row) const {
        return &words_[row * 2 * num_words_ + num_words_];
    }
    bool bit_x(size_t row, size_t q) const {
        return (row_x(row)[q >> 6] >> (q & 63)) & 1;
    }

    void check_qubit(size_t q) const;
    /// row[target] := row[target] * row[source]. The two rows must commute.
    void row_multiply(size_t target, size_t source);
    void row_copy(size_t target, size_t source);
    void row_set_z(size_t row, size_t q, bool negative);
    PauliString row_pauli(size_t row) const;
    /// Returns the stabilizer row index that anticommutes with Z_q, or 2n if none.
    size_t find_anticommuting_stabilizer(size_t q) const;
    /// Collapses onto Z_q = `outcome` given stabilizer row `pivot` anticommutes with Z_q.
    void collapse(size_t q, size_t pivot, int outcome);
    /// Sign of the stabilizer product equal to +-Z_q (only valid when determined).
    int determined_z(size_t q);

    size_t n_;
    size_t num_words_;
    // 2n rows plus one scratch row, each stored as [x words | z words].
    std::vector<uint64_t> words_;
    std::vector<uint8_t> signs_;
};

}  // namespace qpsurf

#endif
