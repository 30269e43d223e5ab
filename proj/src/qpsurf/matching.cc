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

#include "qpsurf/matching.h"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qpsurf {

namespace {

// Edge endpoints are numbered p = 2k (edge k's first vertex) and 2k+1 (second
// vertex); p ^ 1 is the opposite end. Dual variables are stored doubled so
// integer weights keep every quantity integral.
class BlossomSolver {
   public:
    BlossomSolver(int n, const std::vector<WeightedEdge> &edges, bool max_cardinality)
        : n_(n), edges_(edges), max_cardinality_(max_cardinality) {
        int m = static_cast<int>(edges_.size());
        int64_t max_weight = 0;
        endpoint_.resize(2 * m);
        neighbend_.resize(n_);
        for (int k = 0; k < m; k++) {
            const auto &e = edges_[k];
            if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_ || e.u == e.v) {
                throw std::invalid_argument("invalid matching edge");
            }
            // Double the weights so half-slack steps stay integral.
            edges_[k].weight *= 2;
            max_weight = std::max(max_weight, edges_[k].weight);
            endpoint_[2 * k] = e.u;
            endpoint_[2 * k + 1] = e.v;
            neighbend_[e.u].push_back(2 * k + 1);
            neighbend_[e.v].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; v++) {
            inblossom_[v] = v;
        }
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; v++) {
            blossombase_[v] = v;
        }
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, false);
        for (int b = 2 * n_ - 1; b >= n_; b--) {
            unusedblossoms_.push_back(b);
        }
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; v++) {
            dualvar_[v] = max_weight;
        }
        allowedge_.assign(m, false);
    }

    std::vector<int> solve() {
        for (int stage = 0; stage < n_; stage++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; b++) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < n_; v++) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[k] = true;
                            }
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                                bestedge_[b] = k;
                            }
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                                bestedge_[w] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }

                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (int v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; b++) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        int64_t kslack = slack(bestedge_[b]);
                        assert(kslack % 2 == 0);
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // No further improvement possible; the matching is maximum.
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }

                for (int v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].u;
                    int j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    queue_.push_back(edges_[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }

        std::vector<int> result(n_, -1);
        for (int v = 0; v < n_; v++) {
            if (mate_[v] >= 0) {
                result[v] = endpoint_[mate_[v]];
            }
        }
        return result;
    }

   private:
    int64_t slack(int k) const {
        const auto &e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    void blossom_leaves(int b, std::vector<int> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) {
            blossom_leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        blossom_leaves(b, out);
        return out;
    }

    int wrap(int j, int size) const {
        return ((j % size) + size) % size;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Traces back from v and w to find either a new blossom base or an
    // augmenting path. Returns the base, or -1 for an augmenting path.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label_[b] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u;
        int w = edges_[k].v;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[leaf] = b;
        }

        std::vector<int> bestedgeto(2 * n_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!has_bestedges_[child]) {
                for (int leaf : leaves(child)) {
                    std::vector<int> list;
                    for (int p : neighbend_[leaf]) {
                        list.push_back(p / 2);
                    }
                    nblists.push_back(std::move(list));
                }
            } else {
                nblists.push_back(blossombestedges_[child]);
            }
            for (const auto &nblist : nblists) {
                for (int kk : nblist) {
                    int i = edges_[kk].u;
                    int j = edges_[kk].v;
                    if (inblossom_[j] == b) {
                        std::swap(i, j);
                    }
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = kk;
                    }
                }
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = false;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int kk : bestedgeto) {
            if (kk != -1) {
                blossombestedges_[b].push_back(kk);
            }
        }
        has_bestedges_[b] = true;
        bestedge_[b] = -1;
        for (int kk : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
                bestedge_[b] = kk;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) {
                    inblossom_[leaf] = s;
                }
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto &ch = blossomchilds_[b];
            const auto &ep = blossomendps_[b];
            int size = static_cast<int>(ch.size());
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= size;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[wrap(j - endptrick, size)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[ep[wrap(j - endptrick, size)] / 2] = true;
                j += jstep;
                p = ep[wrap(j - endptrick, size)] ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = ch[wrap(j, size)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, size)] != entrychild) {
                bv = ch[wrap(j, size)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found >= 0) {
                    assert(label_[found] == 2);
                    assert(inblossom_[found] == bv);
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    // Swaps matched and unmatched edges along the even path from v to the
    // base of blossom b, then rotates b so that v becomes its base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) {
            t = blossomparent_[t];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto &ch = blossomchilds_[b];
        auto &ep = blossomendps_[b];
        int size = static_cast<int>(ch.size());
        int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= size;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, size)];
            int p = ep[wrap(j - endptrick, size)] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[p]);
            }
            j += jstep;
            t = ch[wrap(j, size)];
            if (t >= n_) {
                augment_blossom(t, endpoint_[p ^ 1]);
            }
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int k) {
        const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
        for (const auto &start : ends) {
            int s = start[0];
            int p = start[1];
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[s] = p;
                if (labelend_[bs] == -1) {
                    break;
                }
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    std::vector<WeightedEdge> edges_;
    bool max_cardinality_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int> max_weight_matching(int num_vertices, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    if (num_vertices < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    if (num_vertices == 0 || edges.empty()) {
        return std::vector<int>(num_vertices, -1);
    }
    return BlossomSolver(num_vertices, edges, max_cardinality).solve();
}

}  // namespace qpsurf
