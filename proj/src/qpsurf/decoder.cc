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

#include "qpsurf/decoder.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qpsurf/matching.h"

namespace qpsurf {

SyndromeHistory::SyndromeHistory(int rounds, size_t num_checks)
    : rounds(rounds), num_checks(num_checks), bits(static_cast<size_t>(rounds) * num_checks, 0) {
    if (rounds < 1) {
        throw std::invalid_argument("a syndrome history needs at least one round");
    }
}

std::vector<uint8_t> SyndromeHistory::last_round() const {
    auto begin = bits.begin() + static_cast<std::ptrdiff_t>(static_cast<size_t>(rounds - 1) * num_checks);
    return {begin, begin + static_cast<std::ptrdiff_t>(num_checks)};
}

std::vector<DetectionEvent> detection_events(const SyndromeHistory &history, const CodeLayout &layout) {
    if (history.num_checks != layout.num_z_checks()) {
        throw std::invalid_argument("syndrome history does not match the layout");
    }
    std::vector<DetectionEvent> events;
    for (int t = 1; t <= history.rounds; t++) {
        for (size_t c = 0; c < history.num_checks; c++) {
            if (history.at(t, c) != history.at(t - 1, c)) {
                const auto &check = layout.z_checks[c];
                events.push_back({c, check.row_idx, check.col_idx, t});
            }
        }
    }
    return events;
}

int edge_weight(const DetectionEvent &a, const DetectionEvent &b) {
    return std::abs(a.row_idx - b.row_idx) + std::abs(a.col_idx - b.col_idx) + std::abs(a.round - b.round);
}

int boundary_weight(const DetectionEvent &event, const CodeLayout &layout) {
    return boundary_distance(layout, event.check);
}

MatchingInstance make_instance(std::vector<DetectionEvent> events, const CodeLayout &layout) {
    MatchingInstance instance;
    size_t k = events.size();
    instance.event_weights.resize(k * k);
    instance.boundary_weights.resize(k);
    for (size_t i = 0; i < k; i++) {
        instance.boundary_weights[i] = boundary_weight(events[i], layout);
        for (size_t j = 0; j < k; j++) {
            instance.event_weights[i * k + j] = edge_weight(events[i], events[j]);
        }
    }
    instance.events = std::move(events);
    return instance;
}

int64_t matching_weight(const MatchingInstance &instance, const std::vector<int> &partner) {
    int64_t total = 0;
    for (size_t i = 0; i < partner.size(); i++) {
        if (partner[i] == MatchingResult::kBoundary) {
            total += instance.boundary_weights[i];
        } else if (static_cast<size_t>(partner[i]) > i) {
            total += instance.weight(i, static_cast<size_t>(partner[i]));
        }
    }
    return total;
}

MatchingResult mwpm(const MatchingInstance &instance) {
    size_t k = instance.size();
    MatchingResult result;
    result.partner.assign(k, MatchingResult::kBoundary);
    if (k == 0) {
        return result;
    }
    if (k == 1) {
        result.weight = instance.boundary_weights[0];
        return result;
    }

    // Maximising sum(offset - w) over perfect matchings minimises sum(w).
    int64_t offset = 1;
    for (int w : instance.boundary_weights) {
        offset += w;
    }
    std::vector<WeightedEdge> edges;
    int n = static_cast<int>(k);
    for (int i = 0; i < n; i++) {
        edges.push_back({i, n + i, offset - instance.boundary_weights[i]});
        for (int j = i + 1; j < n; j++) {
            int w = instance.weight(i, j);
            // Pairs no cheaper than both boundary paths are never needed.
            if (w < instance.boundary_weights[i] + instance.boundary_weights[j]) {
                edges.push_back({i, j, offset - w});
            }
            edges.push_back({n + i, n + j, offset});
        }
    }
    std::vector<int> mate = max_weight_matching(2 * n, edges, true);
    for (int i = 0; i < n; i++) {
        if (mate[i] < 0) {
            throw std::logic_error("matching is not perfect");
        }
        result.partner[i] = mate[i] < n ? mate[i] : MatchingResult::kBoundary;
    }
    result.weight = matching_weight(instance, result.partner);
    return result;
}

namespace {

void toggle(std::vector<uint8_t> &flipped, const CodeLayout &layout, GridCoord coord) {
    size_t q = layout.data_index(coord);
    if (q == layout.num_data()) {
        throw std::logic_error("recovery path left the lattice");
    }
    flipped[q] ^= 1;
}

// Z-check (row_idx, col_idx) sits at grid (2 row_idx + 1, 2 col_idx).
void add_pair_path(std::vector<uint8_t> &flipped, const CodeLayout &layout, const DetectionEvent &a, const DetectionEvent &b) {
    int step = a.row_idx < b.row_idx ? 1 : -1;
    for (int r = a.row_idx; r != b.row_idx; r += step) {
        int between = std::min(r, r + step);
        toggle(flipped, layout, {2 * between + 2, 2 * a.col_idx});
    }
    step = a.col_idx < b.col_idx ? 1 : -1;
    for (int c = a.col_idx; c != b.col_idx; c += step) {
        int between = std::min(c, c + step);
        toggle(flipped, layout, {2 * b.row_idx + 1, 2 * between + 1});
    }
}

void add_boundary_path(std::vector<uint8_t> &flipped, const CodeLayout &layout, const DetectionEvent &e) {
    int col = 2 * e.col_idx;
    if (e.row_idx + 1 <= (layout.d - 1) - e.row_idx) {
        for (int row = 0; row <= 2 * e.row_idx; row += 2) {
            toggle(flipped, layout, {row, col});
        }
    } else {
        for (int row = 2 * e.row_idx + 2; row <= 2 * layout.d - 2; row += 2) {
            toggle(flipped, layout, {row, col});
        }
    }
}

}  // namespace

Recovery recovery_from_matching(const MatchingInstance &instance, const MatchingResult &matching, const CodeLayout &layout) {
    std::vector<uint8_t> flipped(layout.num_data(), 0);
    for (size_t i = 0; i < instance.size(); i++) {
        int partner = matching.partner[i];
        if (partner == MatchingResult::kBoundary) {
            add_boundary_path(flipped, layout, instance.events[i]);
        } else if (static_cast<size_t>(partner) > i) {
            add_pair_path(flipped, layout, instance.events[i], instance.events[static_cast<size_t>(partner)]);
        }
    }
    Recovery recovery;
    for (size_t q = 0; q < flipped.size(); q++) {
        if (flipped[q]) {
            recovery.flips.push_back(q);
        }
    }
    return recovery;
}

Recovery decode(const SyndromeHistory &history, const CodeLayout &layout) {
    MatchingInstance instance = make_instance(detection_events(history, layout), layout);
    MatchingResult matching = mwpm(instance);
    return recovery_from_matching(instance, matching, layout);
}

}  // namespace qpsurf
