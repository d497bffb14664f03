#pragma once

// Brute-force search for connected balanced configurations, written directly against the
// defining equation 2 a_j = sum_{i != j} a_i q(i, j) with q(i, j) in {0, 1, 2}.
// Graphs are grown in breadth-first order: processing vertex v fixes all of its remaining edges
// (to pending vertices and to freshly created children), after which its equation must hold.
// Multiplicities range over 1..cap. Results are deduplicated by pairwise isomorphism testing.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

struct Graph {
    std::vector<std::int64_t> a;                  // multiplicities
    std::vector<std::vector<std::int64_t>> q;     // off-diagonal pairing, q[i][i] = 0

    std::size_t size() const { return a.size(); }
};

inline bool isomorphic(const Graph& x, const Graph& y) {
    const std::size_t n = x.size();
    if (n != y.size()) return false;
    auto signature = [](const Graph& g, std::size_t v) {
        std::vector<std::int64_t> s{g.a[v]};
        for (std::size_t w = 0; w < g.size(); ++w)
            if (g.q[v][w] > 0) s.push_back(g.q[v][w] * 100 + g.a[w]);
        std::sort(s.begin() + 1, s.end());
        return s;
    };
    std::vector<std::vector<std::int64_t>> sx(n), sy(n);
    for (std::size_t v = 0; v < n; ++v) {
        sx[v] = signature(x, v);
        sy[v] = signature(y, v);
    }
    {
        auto a = sx, b = sy;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t v) {
        if (v == n) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (used[w] || sx[v] != sy[w]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = x.q[u][v] == y.q[map[u]][w];
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (extend(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(0);
}

class BalancedSearch {
public:
    BalancedSearch(std::size_t max_vertices, std::int64_t cap) : max_(max_vertices), cap_(cap) {}

    std::vector<Graph> run() {
        for (std::int64_t a0 = 1; a0 <= cap_; ++a0) {
            Graph g;
            g.a = {a0};
            g.q = {{0}};
            process(g, 0);
        }
        return classes_;
    }

private:
    std::size_t max_;
    std::int64_t cap_;
    std::vector<Graph> classes_;

    static std::int64_t partial_sum(const Graph& g, std::size_t v) {
        std::int64_t s = 0;
        for (std::size_t w = 0; w < g.size(); ++w) s += g.a[w] * g.q[v][w];
        return s;
    }

    void record(const Graph& g) {
        if (g.size() < 2) return;
        std::int64_t gcd = 0;
        for (auto x : g.a) gcd = std::gcd(gcd, x);
        if (gcd != 1) return;
        for (const auto& c : classes_)
            if (isomorphic(c, g)) return;
        classes_.push_back(g);
    }

    // Vertex v is being processed; all vertices < v are closed.
    void process(Graph g, std::size_t v) {
        if (v == g.size()) {
            record(g);
            return;
        }
        const std::int64_t need = 2 * g.a[v] - partial_sum(g, v);
        if (need < 0) return;
        // edges to pending vertices w > v, then fresh children
        assign_pending(g, v, v + 1, need);
    }

    void assign_pending(Graph& g, std::size_t v, std::size_t w, std::int64_t need) {
        if (w == g.size()) {
            add_children(g, v, need, 2, cap_);
            return;
        }
        for (std::int64_t e = 0; e <= 2; ++e) {
            if (e * g.a[w] > need) break;
            if (e > 0 && partial_sum(g, w) + e * g.a[v] > 2 * g.a[w]) break;
            g.q[v][w] = g.q[w][v] = e;
            assign_pending(g, v, w + 1, need - e * g.a[w]);
        }
        g.q[v][w] = g.q[w][v] = 0;
    }

    // Children are added in nonincreasing (edge, multiplicity) order to avoid sibling permutations.
    void add_children(Graph& g, std::size_t v, std::int64_t need, std::int64_t max_edge, std::int64_t max_mult) {
        if (need == 0) {
            process(g, v + 1);
            return;
        }
        if (g.size() == max_) return;
        for (std::int64_t e = max_edge; e >= 1; --e) {
            for (std::int64_t b = (e == max_edge ? max_mult : cap_); b >= 1; --b) {
                if (e * b > need) continue;
                // the child's own equation must remain satisfiable: 2b >= e * a_v
                if (e * g.a[v] > 2 * b) continue;
                const std::size_t n = g.size();
                g.a.push_back(b);
                for (auto& row : g.q) row.push_back(0);
                g.q.emplace_back(n + 1, 0);
                g.q[v][n] = g.q[n][v] = e;
                add_children(g, v, need - e * b, e, b);
                g.a.pop_back();
                g.q.pop_back();
                for (auto& row : g.q) row.pop_back();
            }
        }
    }
};

inline std::vector<Graph> balanced_graphs(std::size_t max_vertices, std::int64_t cap) {
    return BalancedSearch(max_vertices, cap).run();
}

}  // namespace oracle
