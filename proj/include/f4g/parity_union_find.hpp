#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace f4g {

// Union-find over elements carrying a parity bit relative to their root.
// unite(a, b, p) records color(a) ^ color(b) == p and reports whether that is
// consistent with everything recorded so far.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int size() const { return static_cast<int>(parent_.size()); }

    // Returns (root, parity of x relative to root).
    std::pair<int, int> find(int x) {
        int p = 0;
        int root = x;
        while (parent_[root] != root) {
            p ^= parity_[root];
            root = parent_[root];
        }
        // path compression, rewriting parities along the way
        int acc = p;
        while (parent_[x] != root) {
            const int next = parent_[x];
            const int old = parity_[x];
            parent_[x] = root;
            parity_[x] = acc;
            acc ^= old;
            x = next;
        }
        return {root, p};
    }

    bool unite(int a, int b, int parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == parity;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ parity;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }

    bool same(int a, int b) { return find(a).first == find(b).first; }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> parity_;
};

}  // namespace f4g
