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

#ifndef QPSURF_CODE_H
#define QPSURF_CODE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpsurf/tableau.h"

namespace qpsurf {

/// Position on the (2d-1) x (2d-1) planar lattice.
struct GridCoord {
    int row;
    int col;
    bool operator==(const GridCoord &other) const = default;
};

struct Check {
    GridCoord coord;
    /// Indices into CodeLayout::data_qubits.
    std::vector<size_t> support;
    /// Position in the check sub-grid: row_idx in [0, d-2], col_idx in [0, d-1].
    int row_idx;
    int col_idx;
};

/// Planar surface code of odd distance d.
///
/// Data qubits sit where row+col is even. Z-checks sit at (odd row, even col)
/// and X-checks at (even row, odd col). Logical Z runs along row 0 and logical
/// X along column 0, so X errors form chains between the top and bottom
/// boundaries.
///
/// X-checks are only used to prepare the encoded |0_L> state; no X-check
/// syndrome is ever extracted.
struct CodeLayout {
    int d;
    std::vector<GridCoord> data_qubits;
    std::vector<Check> z_checks;
    std::vector<Check> x_checks;
    std::vector<size_t> logical_z_support;
    std::vector<size_t> logical_x_support;

    size_t num_data() const {
        return data_qubits.size();
    }
    size_t num_z_checks() const {
        return z_checks.size();
    }
    /// Index of the data qubit at `coord`, or num_data() if there is none.
    size_t data_index(GridCoord coord) const;
    /// Index of the Z-check at sub-grid position (row_idx, col_idx).
    size_t z_check_index(int row_idx, int col_idx) const {
        return static_cast<size_t>(row_idx) * static_cast<size_t>(d) + static_cast<size_t>(col_idx);
    }

    /// Z-check i as a Pauli string over `num_qubits` qubits (data qubits first).
    PauliString z_check_pauli(size_t i, size_t num_qubits) const;
    PauliString x_check_pauli(size_t i, size_t num_qubits) const;
    PauliString logical_z(size_t num_qubits) const;
    PauliString logical_x(size_t num_qubits) const;
};

/// Builds the layout for d in {3, 5, 7, 9, 11, 13}.
CodeLayout build_layout(int d);

/// Parity of every Z-check under the X flips in `flips` (data-qubit indices).
/// Repeated indices cancel.
std::vector<uint8_t> syndrome_of_x_pattern(const CodeLayout &layout, const std::vector<size_t> &flips);

/// Fewest X flips linking Z-check `check` to the top or bottom boundary.
int boundary_distance(const CodeLayout &layout, size_t check);

/// Parity of the overlap between `flips` and the logical Z support. A residual
/// X pattern with trivial syndrome and odd parity is a logical error.
bool flips_logical(const CodeLayout &layout, const std::vector<size_t> &flips);

}  // namespace qpsurf

#endif
