#pragma once

// Independent cokernel oracle for small integer matrices.
// Structure of Z^n / im(M) from determinantal divisors: d_k = gcd of all k x k minors,
// invariant factors d_k / d_(k-1), free rank n - rank(M). For finite cokernels with a small
// determinant the element count per order is also checked by enumerating residues.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t det_small(Mat a) {
    // Bareiss on int64; entries stay bounded for <= 4 x 4 with |entries| <= 10
    const std::size_t n = a.size();
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

struct Structure {
    std::vector<std::int64_t> factors;  // invariant factors >= 2
    std::size_t free_rank = 0;

    std::string to_string() const {
        std::string s;
        for (auto d : factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
        if (free_rank > 0) s += (s.empty() ? "" : " + ") + std::string(free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        return s.empty() ? "0" : s;
    }
};

inline Structure cokernel(const Mat& m, std::size_t rows, std::size_t cols) {
    std::vector<std::int64_t> d{1};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::int64_t g = 0;
        for (const auto& rs : subsets(rows, k))
            for (const auto& cs : subsets(cols, k)) {
                Mat sub(k, std::vector<std::int64_t>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
                g = std::gcd(g, det_small(sub));
            }
        if (g == 0) break;
        d.push_back(g);
    }
    Structure s;
    const std::size_t rank = d.size() - 1;
    for (std::size_t k = 1; k <= rank; ++k) {
        const std::int64_t f = d[k] / d[k - 1];
        if (f > 1) s.factors.push_back(f);
    }
    s.free_rank = rows - rank;
    return s;
}

// Counts of elements of each order in Z^n / im(M), for square nonsingular M, by testing every
// residue x in [0, D)^n (D = |det M|) for membership of k x in im(M) through the adjugate.
inline std::map<std::int64_t, std::int64_t> order_profile(const Mat& m) {
    const std::size_t n = m.size();
    const std::int64_t det = det_small(m);
    const std::int64_t D = det < 0 ? -det : det;
    Mat adj(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (n == 1) {
                adj[i][j] = 1;
                continue;
            }
            Mat minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                minor.emplace_back();
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) minor.back().push_back(m[r][c]);
            }
            adj[i][j] = ((i + j) % 2 ? -1 : 1) * det_small(minor);
        }
    // x lies in im(M) iff adj * x is divisible by det
    auto in_image = [&](const std::vector<std::int64_t>& x) {
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j) s += adj[i][j] * x[j];
            if (s % D != 0) return false;
        }
        return true;
    };
    // distinct classes: residues modulo the lattice, represented by the canonical minimal vector
    std::map<std::int64_t, std::int64_t> profile;
    std::vector<std::vector<std::int64_t>> reps;
    std::vector<std::int64_t> x(n, 0);
    while (true) {
        bool fresh = true;
        for (const auto& r : reps) {
            std::vector<std::int64_t> diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - r[i];
            if (in_image(diff)) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            reps.push_back(x);
            std::int64_t k = 1;
            while (true) {
                std::vector<std::int64_t> kx(n);
                for (std::size_t i = 0; i < n; ++i) kx[i] = k * x[i];
                if (in_image(kx)) break;
                ++k;
            }
            ++profile[k];
        }
        std::size_t i = 0;
        while (i < n && ++x[i] == D) x[i++] = 0;
        if (i == n) break;
    }
    return profile;
}

// Order profile of a finite abelian group from its invariant factors.
inline std::map<std::int64_t, std::int64_t> order_profile(const std::vector<std::int64_t>& factors) {
    std::map<std::int64_t, std::int64_t> profile;
    std::vector<std::int64_t> x(factors.size(), 0);
    while (true) {
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const std::int64_t o = factors[i] / std::gcd(factors[i], x[i]);
            ord = std::lcm(ord, o);
        }
        ++profile[ord];
        std::size_t i = 0;
        while (i < factors.size() && ++x[i] == factors[i]) x[i++] = 0;
        if (i == factors.size()) break;
    }
    return profile;
}

}  // namespace oracle
