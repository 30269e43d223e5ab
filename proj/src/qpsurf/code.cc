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

#include "qpsurf/code.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qpsurf {

namespace {

Check make_check(const CodeLayout &layout, GridCoord coord) {
    Check check{coord, {}, coord.row / 2, coord.col / 2};
    const GridCoord neighbors[] = {
        {coord.row - 1, coord.col},
        {coord.row + 1, coord.col},
        {coord.row, coord.col - 1},
        {coord.row, coord.col + 1},
    };
    for (const auto &n : neighbors) {
        size_t k = layout.data_index(n);
        if (k != layout.num_data()) {
            check.support.push_back(k);
        }
    }
    return check;
}

}  // namespace

size_t CodeLayout::data_index(GridCoord coord) const {
    int size = 2 * d - 1;
    if (coord.row < 0 || coord.col < 0 || coord.row >= size || coord.col >= size || (coord.row + coord.col) % 2 != 0) {
        return num_data();
    }
    // Even rows hold d data qubits, odd rows d-1.
    size_t before = static_cast<size_t>(coord.row / 2) * static_cast<size_t>(2 * d - 1);
    if (coord.row % 2 == 1) {
        before += static_cast<size_t>(d);
    }
    return before + static_cast<size_t>(coord.col / 2);
}

PauliString CodeLayout::z_check_pauli(size_t i, size_t num_qubits) const {
    PauliString p(num_qubits);
    for (size_t q : z_checks.at(i).support) {
        p.set_z(q);
    }
    return p;
}

PauliString CodeLayout::x_check_pauli(size_t i, size_t num_qubits) const {
    PauliString p(num_qubits);
    for (size_t q : x_checks.at(i).support) {
        p.set_x(q);
    }
    return p;
}

PauliString CodeLayout::logical_z(size_t num_qubits) const {
    PauliString p(num_qubits);
    for (size_t q : logical_z_support) {
        p.set_z(q);
    }
    return p;
}

PauliString CodeLayout::logical_x(size_t num_qubits) const {
    PauliString p(num_qubits);
    for (size_t q : logical_x_support) {
        p.set_x(q);
    }
    return p;
}

CodeLayout build_layout(int d) {
    if (d < 3 || d > 13 || d % 2 == 0) {
        throw std::invalid_argument("code distance must be odd and in [3, 13], got " + std::to_string(d));
    }
    CodeLayout layout;
    layout.d = d;
    int size = 2 * d - 1;
    for (int row = 0; row < size; row++) {
        for (int col = row % 2; col < size; col += 2) {
            layout.data_qubits.push_back({row, col});
        }
    }
    for (int row = 1; row < size; row += 2) {
        for (int col = 0; col < size; col += 2) {
            layout.z_checks.push_back(make_check(layout, {row, col}));
        }
    }
    for (int row = 0; row < size; row += 2) {
        for (int col = 1; col < size; col += 2) {
            layout.x_checks.push_back(make_check(layout, {row, col}));
        }
    }
    for (int col = 0; col < size; col += 2) {
        layout.logical_z_support.push_back(layout.data_index({0, col}));
    }
    for (int row = 0; row < size; row += 2) {
        layout.logical_x_support.push_back(layout.data_index({row, 0}));
    }
    return layout;
}

std::vector<uint8_t> syndrome_of_x_pattern(const CodeLayout &layout, const std::vector<size_t> &flips) {
    std::vector<uint8_t> flipped(layout.num_data(), 0);
    for (size_t q : flips) {
        if (q >= layout.num_data()) {
            throw std::out_of_range("data qubit index out of range");
        }
        flipped[q] ^= 1;
    }
    std::vector<uint8_t> syndrome(layout.num_z_checks(), 0);
    for (size_t c = 0; c < layout.num_z_checks(); c++) {
        for (size_t q : layout.z_checks[c].support) {
            syndrome[c] ^= flipped[q];
        }
    }
    return syndrome;
}

int boundary_distance(const CodeLayout &layout, size_t check) {
    int row_idx = layout.z_checks.at(check).row_idx;
    return std::min(row_idx + 1, (layout.d - 1) - row_idx);
}

bool flips_logical(const CodeLayout &layout, const std::vector<size_t> &flips) {
    std::vector<uint8_t> flipped(layout.num_data(), 0);
    for (size_t q : flips) {
        flipped[q] ^= 1;
    }
    bool parity = false;
    for (size_t q : layout.logical_z_support) {
        parity ^= flipped[q] != 0;
    }
    return parity;
}

}  // namespace qpsurf
