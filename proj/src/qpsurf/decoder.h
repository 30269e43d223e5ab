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

#ifndef QPSURF_DECODER_H
#define QPSURF_DECODER_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpsurf/code.h"

namespace qpsurf {

/// Recorded Z-check outcomes, one row per round (1 = outcome -1).
struct SyndromeHistory {
    int rounds = 0;
    size_t num_checks = 0;
    std::vector<uint8_t> bits;

    SyndromeHistory() = default;
    SyndromeHistory(int rounds, size_t num_checks);

    /// Round t in [1, rounds]. Round 0 is the implicit all-zeros reference.
    uint8_t at(int t, size_t check) const {
        return t == 0 ? 0 : bits[static_cast<size_t>(t - 1) * num_checks + check];
    }
    uint8_t &at(int t, size_t check) {
        return bits[static_cast<size_t>(t - 1) * num_checks + check];
    }
    /// Final-round syndrome.
    std::vector<uint8_t> last_round() const;
};

struct DetectionEvent {
    size_t check;
    int row_idx;
    int col_idx;
    int round;
    bool operator==(const DetectionEvent &other) const = default;
};

/// Events at (check, t) wherever the outcome differs from round t-1.
std::vector<DetectionEvent> detection_events(const SyndromeHistory &history, const CodeLayout &layout);

/// Space-time Manhattan distance with unit cost per elementary fault.
int edge_weight(const DetectionEvent &a, const DetectionEvent &b);
int boundary_weight(const DetectionEvent &event, const CodeLayout &layout);

/// Events plus one virtual boundary partner each. Vertices [0, k) are events,
/// [k, 2k) their boundary partners.
struct MatchingInstance {
    std::vector<DetectionEvent> events;
    /// event_weights[i * k + j]; boundary_weights[i].
    std::vector<int> event_weights;
    std::vector<int> boundary_weights;

    size_t size() const {
        return events.size();
    }
    int weight(size_t i, size_t j) const {
        return event_weights[i * events.size() + j];
    }
};

MatchingInstance make_instance(std::vector<DetectionEvent> events, const CodeLayout &layout);

struct MatchingResult {
    static constexpr int kBoundary = -1;
    /// partner[i] is another event index or kBoundary.
    std::vector<int> partner;
    int64_t weight = 0;
};

/// Total weight of a matching under the instance's weights.
int64_t matching_weight(const MatchingInstance &instance, const std::vector<int> &partner);

/// Exact minimum-weight perfect matching of events and boundary partners.
MatchingResult mwpm(const MatchingInstance &instance);

struct Recovery {
    /// Sorted data-qubit indices that receive X.
    std::vector<size_t> flips;
};

Recovery recovery_from_matching(const MatchingInstance &instance, const MatchingResult &matching, const CodeLayout &layout);

Recovery decode(const SyndromeHistory &history, const CodeLayout &layout);

}  // namespace qpsurf

#endif
