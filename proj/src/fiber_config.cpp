#include "kodaira/fiber_config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace kodaira {

namespace {

std::int64_t entry(const IntMatrix& m, std::size_t i, std::size_t j) {
    return to_int64(m(i, j));
}

}  // namespace

bool KodairaCurveType::is_integral() const {
    return family == CurveFamily::II || (family == CurveFamily::I && r <= 1);
}

std::string KodairaCurveType::name() const {
    switch (family) {
        case CurveFamily::I: return "I" + std::to_string(r);
        case CurveFamily::II: return "II";
        case CurveFamily::III: return "III";
        case CurveFamily::IV: return "IV";
        case CurveFamily::IStar: return "I" + std::to_string(r) + "*";
        case CurveFamily::IVStar: return "IV*";
        case CurveFamily::IIIStar: return "III*";
        case CurveFamily::IIStar: return "II*";
    }
    return "?";
}

KodairaCurveType parse_curve_type(const std::string& text) {
    static const std::map<std::string, KodairaCurveType> fixed = {
        {"II", KodairaCurveType::II()},        {"III", KodairaCurveType::III()},
        {"IV", KodairaCurveType::IV()},        {"IV*", KodairaCurveType::IVStar()},
        {"III*", KodairaCurveType::IIIStar()}, {"II*", KodairaCurveType::IIStar()},
    };
    if (auto it = fixed.find(text); it != fixed.end()) return it->second;
    if (text.size() >= 2 && text[0] == 'I') {
        bool star = text.back() == '*';
        std::string digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && digits.size() <= 9 &&
            std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            std::int64_t r = std::stoll(digits);
            return star ? KodairaCurveType::IStar(r) : KodairaCurveType::I(r);
        }
    }
    throw DomainError("unknown curve type '" + text + "'");
}

std::vector<KodairaCurveType> all_curve_types(std::int64_t max_r) {
    std::vector<KodairaCurveType> out;
    for (std::int64_t r = 0; r <= max_r; ++r) out.push_back(KodairaCurveType::I(r));
    out.push_back(KodairaCurveType::II());
    out.push_back(KodairaCurveType::III());
    out.push_back(KodairaCurveType::IV());
    for (std::int64_t r = 0; r <= max_r; ++r) out.push_back(KodairaCurveType::IStar(r));
    out.push_back(KodairaCurveType::IVStar());
    out.push_back(KodairaCurveType::IIIStar());
    out.push_back(KodairaCurveType::IIStar());
    return out;
}

std::string to_string(Incidence incidence) {
    switch (incidence) {
        case Incidence::transverse: return "transverse";
        case Incidence::concurrent: return "concurrent";
        case Incidence::smooth: return "smooth";
        case Incidence::nodal: return "nodal";
        case Incidence::cuspidal: return "cuspidal";
    }
    return "?";
}

Incidence parse_incidence(const std::string& text) {
    for (Incidence i : {Incidence::transverse, Incidence::concurrent, Incidence::smooth, Incidence::nodal,
                        Incidence::cuspidal})
        if (to_string(i) == text) return i;
    throw DomainError("unknown incidence '" + text + "'");
}

void require_well_formed(const FiberConfiguration& c) {
    const std::size_t n = c.size();
    if (n == 0) throw DomainError("configuration has no components");
    if (c.pairing.rows() != n || c.pairing.cols() != n)
        throw DomainError("pairing size does not match the number of components");
    if (!c.labels.empty() && c.labels.size() != n) throw DomainError("label count does not match components");
    for (std::size_t i = 0; i < n; ++i) {
        if (c.multiplicities[i] < 1) throw DomainError("multiplicities must be positive");
        if (c.pairing(i, i) != -2) throw DomainError("pairing diagonal must be -2");
        for (std::size_t j = 0; j < n; ++j) {
            if (c.pairing(i, j) != c.pairing(j, i)) throw DomainError("pairing must be symmetric");
            if (i != j && c.pairing(i, j) < 0) throw DomainError("off-diagonal pairing must be nonnegative");
        }
    }
}

bool check_balanced(const FiberConfiguration& c) {
    require_well_formed(c);
    const std::size_t n = c.size();
    for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < n; ++i) s += c.multiplicities[i] * c.pairing(i, j);
        if (s != 0) return false;
    }
    return true;
}

bool is_connected(const FiberConfiguration& c) {
    const std::size_t n = c.size();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (w != v && !seen[w] && c.pairing(v, w) > 0) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::int64_t configuration_multiplicity(const FiberConfiguration& c) {
    std::int64_t g = 0;
    for (auto a : c.multiplicities) g = gcd(g, a);
    return g;
}

FgAbelianGroup configuration_discriminant(const FiberConfiguration& c) {
    std::vector<Integer> weights(c.multiplicities.begin(), c.multiplicities.end());
    return discriminant_group(c.pairing, weights);
}

namespace {

struct CanonicalSearch {
    const FiberConfiguration& c;
    std::size_t n;
    std::vector<std::int64_t> best;
    std::vector<std::size_t> best_order;
    std::vector<std::int64_t> current;
    std::vector<std::size_t> order;
    std::vector<bool> used;

    std::vector<std::int64_t> segment(std::size_t v) const {
        std::vector<std::int64_t> s{c.multiplicities[v]};
        for (std::size_t u : order) s.push_back(2 - entry(c.pairing, u, v));
        return s;
    }

    // Only vertices with the least next segment can extend a minimal encoding.
    void run() {
        if (order.size() == n) {
            if (best.empty() || current < best) {
                best = current;
                best_order = order;
            }
            return;
        }
        std::vector<std::int64_t> least;
        std::vector<std::size_t> candidates;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            auto s = segment(v);
            if (candidates.empty() || s < least) {
                least = s;
                candidates = {v};
            } else if (s == least) {
                candidates.push_back(v);
            }
        }
        const std::size_t mark = current.size();
        current.insert(current.end(), least.begin(), least.end());
        const bool pruned = !best.empty() && std::lexicographical_compare(best.begin(), best.begin() + current.size(),
                                                                           current.begin(), current.end());
        if (!pruned) {
            for (std::size_t v : candidates) {
                used[v] = true;
                order.push_back(v);
                run();
                order.pop_back();
                used[v] = false;
            }
        }
        current.resize(mark);
    }
};

}  // namespace

CanonicalForm canonical_form(const FiberConfiguration& c) {
    CanonicalSearch s{c, c.size(), {}, {}, {}, {}, std::vector<bool>(c.size(), false)};
    s.run();
    return {s.best, s.best_order};
}

FiberConfiguration apply_ordering(const FiberConfiguration& c, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    FiberConfiguration out;
    out.pairing = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.multiplicities.push_back(c.multiplicities[order[i]]);
        if (!c.labels.empty()) out.labels.push_back(c.labels[order[i]]);
        for (std::size_t j = 0; j < n; ++j) out.pairing(i, j) = c.pairing(order[i], order[j]);
    }
    out.incidence = c.incidence;
    out.tag = c.tag;
    return out;
}

IntMatrix cycle_matrix(std::int64_t r) {
    if (r < 1) throw DomainError("cycle matrix needs r >= 1");
    const auto n = static_cast<std::size_t>(r);
    IntMatrix m(n, n);
    if (n == 1) return m;
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -2;
        m(i, (i + 1) % n) += 1;
        m((i + 1) % n, i) += 1;
    }
    return m;
}

namespace {

FiberConfiguration from_edges(std::vector<std::int64_t> mult, std::vector<std::string> labels,
                              const std::vector<std::array<std::size_t, 2>>& edges) {
    FiberConfiguration c;
    const std::size_t n = mult.size();
    c.multiplicities = std::move(mult);
    c.labels = std::move(labels);
    c.pairing = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) c.pairing(i, i) = -2;
    for (auto [a, b] : edges) {
        c.pairing(a, b) += 1;
        c.pairing(b, a) += 1;
    }
    return c;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count, std::size_t start = 0) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(start + i));
    return out;
}

}  // namespace

FiberConfiguration shape_configuration(const KodairaCurveType& t) {
    FiberConfiguration c;
    switch (t.family) {
        case CurveFamily::I: {
            if (t.r < 0) throw DomainError("I_r needs r >= 0");
            if (t.r <= 1) {
                c.multiplicities = {1};
                c.pairing = IntMatrix{{-2}};
                c.labels = {"C0"};
                c.incidence = t.r == 0 ? Incidence::smooth : Incidence::nodal;
                break;
            }
            c.multiplicities.assign(static_cast<std::size_t>(t.r), 1);
            c.pairing = cycle_matrix(t.r);
            c.labels = numbered("C", static_cast<std::size_t>(t.r));
            break;
        }
        case CurveFamily::II:
            c.multiplicities = {1};
            c.pairing = IntMatrix{{-2}};
            c.labels = {"C0"};
            c.incidence = Incidence::cuspidal;
            break;
        case CurveFamily::III:
            c.multiplicities = {1, 1};
            c.pairing = IntMatrix{{-2, 2}, {2, -2}};
            c.labels = {"C0", "C1"};
            c.incidence = Incidence::concurrent;
            break;
        case CurveFamily::IV:
            c.multiplicities = {1, 1, 1};
            c.pairing = IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}};
            c.labels = {"C0", "C1", "C2"};
            c.incidence = Incidence::concurrent;
            break;
        case CurveFamily::IStar: {
            if (t.r < 0) throw DomainError("I_r* needs r >= 0");
            const auto r = static_cast<std::size_t>(t.r);
            // E1..E4 are indices 0..3, F_j is index 4 + j
            std::vector<std::int64_t> mult{1, 1, 1, 1};
            mult.resize(5 + r, 2);
            std::vector<std::string> labels{"E1", "E2", "E3", "E4"};
            for (auto& l : numbered("F", r + 1)) labels.push_back(l);
            std::vector<std::array<std::size_t, 2>> edges{{0, 4}, {1, 4}, {2, 4 + r}, {3, 4 + r}};
            for (std::size_t j = 0; j < r; ++j) edges.push_back({4 + j, 5 + j});
            c = from_edges(mult, labels, edges);
            break;
        }
        case CurveFamily::IVStar:
            c = from_edges({3, 2, 2, 2, 1, 1, 1}, {"H", "F1", "F2", "F3", "E1", "E2", "E3"},
                           {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
            break;
        case CurveFamily::IIIStar:
            c = from_edges({1, 2, 3, 4, 3, 2, 1, 2}, numbered("C", 8, 1),
                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}});
            break;
        case CurveFamily::IIStar:
            c = from_edges({1, 2, 3, 4, 5, 6, 4, 2, 3}, numbered("C", 9, 1),
                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}});
            break;
    }
    c.tag = t.name();
    return c;
}

IntMatrix intersection_matrix(const KodairaCurveType& t) {
    if (t.is_integral()) throw DomainError("no reducible matrix for " + t.name());
    return shape_configuration(t).pairing;
}

std::optional<FiberConfiguration> concurrent_variant(const FiberConfiguration& c) {
    const std::size_t n = c.size();
    if (n < 2 || c.incidence != Incidence::transverse) return std::nullopt;
    if (std::any_of(c.multiplicities.begin(), c.multiplicities.end(), [](auto a) { return a != 1; }))
        return std::nullopt;
    // One point through all smooth rational branches: delta = sum of pairwise intersections, and
    // p_a = delta - n + 1 must be 1.
    Integer delta = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.pairing(i, j) == 0) return std::nullopt;
            delta += c.pairing(i, j);
        }
    if (delta - static_cast<long long>(n) + 1 != 1) return std::nullopt;
    FiberConfiguration out = c;
    out.incidence = Incidence::concurrent;
    return out;
}

KodairaCurveType classify_config(const FiberConfiguration& c) {
    require_well_formed(c);
    switch (c.incidence) {
        case Incidence::smooth:
        case Incidence::nodal:
        case Incidence::cuspidal:
            if (c.size() != 1 || c.multiplicities[0] != 1) throw DomainError("unclassifiable: integral mark on a reducible configuration");
            if (c.incidence == Incidence::smooth) return KodairaCurveType::I(0);
            if (c.incidence == Incidence::nodal) return KodairaCurveType::I(1);
            return KodairaCurveType::II();
        default: break;
    }
    if (!is_connected(c) || !check_balanced(c) || configuration_multiplicity(c) != 1)
        throw DomainError("unclassifiable");
    const auto n = static_cast<std::int64_t>(c.size());
    std::int64_t max_mult = *std::max_element(c.multiplicities.begin(), c.multiplicities.end());
    std::optional<KodairaCurveType> candidate;
    if (c.incidence == Incidence::concurrent) {
        if (n == 2) candidate = KodairaCurveType::III();
        if (n == 3) candidate = KodairaCurveType::IV();
    } else if (max_mult == 1 && n >= 2) {
        candidate = KodairaCurveType::I(n);
    } else if (max_mult == 2 && n >= 5) {
        candidate = KodairaCurveType::IStar(n - 5);
    } else if (max_mult == 3 && n == 7) {
        candidate = KodairaCurveType::IVStar();
    } else if (max_mult == 4 && n == 8) {
        candidate = KodairaCurveType::IIIStar();
    } else if (max_mult == 6 && n == 9) {
        candidate = KodairaCurveType::IIStar();
    }
    if (!candidate) throw DomainError("unclassifiable");
    if (canonical_form(c) != canonical_form(shape_configuration(*candidate))) throw DomainError("unclassifiable");
    return *candidate;
}

namespace {

// det(-pairing) by Bareiss elimination; entries stay minors of a small matrix, far inside int64.
std::int64_t cartan_determinant(const std::vector<std::vector<std::int64_t>>& pairing) {
    auto m = pairing;
    const std::size_t n = m.size();
    for (auto& row : m)
        for (auto& x : row) x = -x;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
                m[i][j] = static_cast<std::int64_t>(v / prev);
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::int64_t> positive_null_vector(const IntMatrix& pairing) {
    IntMatrix k = integer_kernel(pairing);
    if (k.cols() != 1) throw DomainError("expected a one-dimensional kernel");
    std::vector<std::int64_t> v;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < k.rows(); ++i) {
        v.push_back(to_int64(k(i, 0)));
        g = gcd(g, v.back());
    }
    if (v[0] < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

}  // namespace

std::vector<FiberConfiguration> enumerate_balanced(int max_components) {
    if (max_components > kMaxEnumeratedComponents)
        throw DomainError("enumeration budget exceeded: max_components <= " + std::to_string(kMaxEnumeratedComponents));
    std::map<std::vector<std::int64_t>, FiberConfiguration> found;
    if (max_components < 2) return {};

    // Connected graphs whose Cartan matrix is positive definite; every balanced configuration is one
    // vertex away from such a graph, and a one-vertex extension of a positive definite graph is
    // positive definite, semidefinite of corank one, or indefinite according to the sign of det.
    std::map<std::vector<std::int64_t>, FiberConfiguration> level;
    {
        FiberConfiguration seed;
        seed.multiplicities = {1};
        seed.pairing = IntMatrix{{-2}};
        level.emplace(canonical_form(seed).encoding, seed);
    }
    for (int n = 1; n < max_components && !level.empty(); ++n) {
        std::map<std::vector<std::int64_t>, FiberConfiguration> next;
        const auto size = static_cast<std::size_t>(n);
        std::map<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>> dense;
        std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> degree;
        for (const auto& [key, parent] : level) {
            auto& rows = dense[key];
            auto& deg = degree[key];
            for (std::size_t a = 0; a < size; ++a) {
                rows.emplace_back();
                std::int64_t d = 0;
                for (std::size_t b = 0; b < size; ++b) {
                    rows.back().push_back(entry(parent.pairing, a, b));
                    if (a != b) d += rows.back().back();
                }
                deg.push_back(d);
            }
        }
        for (const auto& [key, parent] : level) {
            std::vector<int> attach(size, 0);
            while (true) {
                std::size_t i = 0;
                while (i < size && attach[i] == 2) attach[i++] = 0;
                if (i == size) break;
                ++attach[i];
                // spectral radius <= 2 forces degree <= 4 everywhere
                std::int64_t new_degree = 0;
                bool too_dense = false;
                for (std::size_t a = 0; a < size; ++a) {
                    new_degree += attach[a];
                    if (attach[a] > 0 && degree[key][a] + attach[a] > 4) too_dense = true;
                }
                if (too_dense || new_degree > 4) continue;
                auto small = dense[key];
                for (std::size_t a = 0; a < size; ++a) small[a].push_back(attach[a]);
                small.emplace_back(attach.begin(), attach.end());
                small.back().push_back(-2);
                const std::int64_t det = cartan_determinant(small);
                FiberConfiguration child;
                child.pairing = IntMatrix(size + 1, size + 1);
                for (std::size_t a = 0; a <= size; ++a)
                    for (std::size_t b = 0; b <= size; ++b) child.pairing(a, b) = small[a][b];
                if (det < 0) continue;
                if (det > 0) {
                    child.multiplicities.assign(size + 1, 1);
                    auto form = canonical_form(child);
                    next.try_emplace(form.encoding, apply_ordering(child, form.order));
                    continue;
                }
                child.multiplicities = positive_null_vector(child.pairing);
                auto form = canonical_form(child);
                if (found.count(form.encoding)) continue;
                FiberConfiguration canonical = apply_ordering(child, form.order);
                canonical.tag = classify_config(canonical).name();
                found.emplace(form.encoding, canonical);
            }
        }
        level = std::move(next);
    }

    std::vector<FiberConfiguration> out;
    for (const auto& [key, c] : found) {
        out.push_back(c);
        if (auto v = concurrent_variant(c)) {
            v->tag = classify_config(*v).name();
            out.push_back(*v);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const FiberConfiguration& a, const FiberConfiguration& b) {
        return a.size() < b.size();
    });
    for (auto& c : out) {
        if (c.labels.empty()) c.labels = numbered("C", c.size());
    }
    return out;
}

}  // namespace kodaira
