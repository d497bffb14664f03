#include "kodaira/group_actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace kodaira {

// ---------------------------------------------------------------- torsion

TorsionPoint::TorsionPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& x : coords_) x = mod_one(x);
}

TorsionPoint TorsionPoint::basis(std::size_t rank, std::size_t i, std::int64_t n) {
    if (i >= rank) throw DomainError("torsion coordinate out of range");
    if (n < 1) throw DomainError("torsion order must be positive");
    std::vector<Rational> c(rank, 0);
    c[i] = Rational(1, n);
    return TorsionPoint(c);
}

bool TorsionPoint::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

Integer TorsionPoint::order() const {
    Integer n = 1;
    for (const auto& x : coords_) n = lcm(n, denominator_of(x));
    return n;
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& other) const {
    if (other.rank() != rank()) throw DomainError("torsion points of different rank");
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] + other.coords_[i];
    return TorsionPoint(c);
}

TorsionPoint TorsionPoint::operator-() const {
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = -coords_[i];
    return TorsionPoint(c);
}

TorsionPoint TorsionPoint::scaled(std::int64_t k) const {
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = coords_[i] * k;
    return TorsionPoint(c);
}

std::string TorsionPoint::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + kodaira::to_string(coords_[i]);
    return s + ")";
}

FgAbelianGroup torsion_subgroup(const std::vector<TorsionPoint>& points) {
    if (points.empty()) return {};
    const std::size_t g = points.front().rank();
    Integer n = 1;
    for (const auto& p : points) {
        if (p.rank() != g) throw DomainError("torsion points of different rank");
        n = lcm(n, p.order());
    }
    if (n == 1) return {};
    FgAbelianGroup ambient = FgAbelianGroup::from_cyclic_orders(std::vector<Integer>(g, n));
    std::vector<GroupElement> gens;
    for (const auto& p : points) {
        std::vector<Integer> coords;
        for (const auto& x : p.coords()) coords.push_back(numerator_of(x * Rational(n)));
        gens.emplace_back(ambient, coords);
    }
    return subgroup_generated(ambient, gens);
}

// ---------------------------------------------------------------- charts

std::string ChartPoint::to_string() const {
    switch (kind) {
        case Kind::zero: return "0";
        case Kind::infinity: return "inf";
        case Kind::unit: return "zeta^(" + kodaira::to_string(e) + ")";
    }
    return "?";
}

ChartPoint ChartMap::apply(const ChartPoint& p) const {
    switch (p.kind) {
        case ChartPoint::Kind::zero: return inverting ? ChartPoint::infinity() : ChartPoint::zero();
        case ChartPoint::Kind::infinity: return inverting ? ChartPoint::zero() : ChartPoint::infinity();
        case ChartPoint::Kind::unit: return ChartPoint::unit(inverting ? Rational(c - p.e) : Rational(c + p.e));
    }
    return p;
}

std::string ChartMap::to_string() const {
    std::string k = kodaira::to_string(c);
    return inverting ? "zeta^(" + k + ")/z" : "zeta^(" + k + ")*z";
}

ChartMap compose(const ChartMap& a, const ChartMap& b) {
    if (!b.inverting) return a.inverting ? ChartMap::invert(a.c - b.c) : ChartMap::scale(a.c + b.c);
    return a.inverting ? ChartMap::scale(a.c - b.c) : ChartMap::invert(a.c + b.c);
}

// ---------------------------------------------------------------- elliptic

namespace {

Lattice2 lattice_identity() { return {{{1, 0}, {0, 1}}}; }

Lattice2 multiply(const Lattice2& a, const Lattice2& b) {
    Lattice2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

Lattice2 generator_matrix(int aut_order) {
    switch (aut_order) {
        case 1: return lattice_identity();
        case 2: return {{{-1, 0}, {0, -1}}};
        case 4: return {{{0, -1}, {1, 0}}};
        case 6: return {{{0, -1}, {1, 1}}};
        default: throw DomainError("elliptic automorphism group order must be 2, 4 or 6");
    }
}

std::array<Rational, 2> lattice_apply(const Lattice2& m, const std::array<Rational, 2>& x) {
    return {mod_one(m[0][0] * x[0] + m[0][1] * x[1]), mod_one(m[1][0] * x[0] + m[1][1] * x[1])};
}

EllipticMap normalized(int aut_order, EllipticMap f) {
    f.e = floor_mod(f.e, std::int64_t{aut_order});
    f.t = {mod_one(f.t[0]), mod_one(f.t[1])};
    return f;
}

}  // namespace

Lattice2 elliptic_rotation(int aut_order, std::int64_t e) {
    Lattice2 g = generator_matrix(aut_order);
    Lattice2 r = lattice_identity();
    for (std::int64_t i = 0; i < floor_mod(e, std::int64_t{aut_order}); ++i) r = multiply(g, r);
    return r;
}

std::array<Rational, 2> apply(int aut_order, const EllipticMap& f, const std::array<Rational, 2>& x) {
    auto y = lattice_apply(elliptic_rotation(aut_order, f.e), x);
    return {mod_one(y[0] + f.t[0]), mod_one(y[1] + f.t[1])};
}

EllipticMap compose(int aut_order, const EllipticMap& a, const EllipticMap& b) {
    auto moved = lattice_apply(elliptic_rotation(aut_order, a.e), b.t);
    return normalized(aut_order, {a.e + b.e, {moved[0] + a.t[0], moved[1] + a.t[1]}});
}

bool is_identity(int aut_order, const EllipticMap& f) {
    auto n = normalized(aut_order, f);
    return n.e == 0 && n.t[0] == 0 && n.t[1] == 0;
}

std::optional<std::vector<std::array<Rational, 2>>> elliptic_fixed_points(int aut_order, const EllipticMap& f) {
    if (is_identity(aut_order, f)) return std::nullopt;
    Lattice2 m = elliptic_rotation(aut_order, f.e);
    std::vector<std::array<Rational, 2>> out;
    if (m == lattice_identity()) return out;  // nonzero translation
    std::int64_t det = (1 - m[0][0]) * (1 - m[1][1]) - m[0][1] * m[1][0];
    Integer den = lcm(denominator_of(f.t[0]), denominator_of(f.t[1]));
    const std::int64_t n = to_int64(den) * std::abs(det);
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            std::array<Rational, 2> x{Rational(a, n), Rational(b, n)};
            if (apply(aut_order, f, x) == x) out.push_back(x);
        }
    return out;
}

std::vector<std::array<Rational, 2>> rotation_fixed_points(int aut_order, std::int64_t e) {
    auto fixed = elliptic_fixed_points(aut_order, EllipticMap{e, {0, 0}});
    if (!fixed) throw DomainError("the identity rotation fixes every point");
    return *fixed;
}

// ---------------------------------------------------------------- models

std::string to_string(JunctionKind k) {
    switch (k) {
        case JunctionKind::node: return "node";
        case JunctionKind::tacnode: return "tacnode";
        case JunctionKind::triple: return "triple";
        case JunctionKind::cusp: return "cusp";
    }
    return "?";
}

EllipticSymbol elliptic_symbol(const std::string& j_tag) {
    if (j_tag == "0") return {"0", 6};
    if (j_tag == "1728") return {"1728", 4};
    if (j_tag == "generic") return {"generic", 2};
    throw DomainError("j tag must be 0, 1728 or generic");
}

namespace {

void add_junction(CurveModel& c, JunctionKind kind, std::vector<Branch> branches) {
    c.junctions.push_back({kind, std::move(branches)});
}

}  // namespace

CurveModel cycle_model(std::int64_t n, std::size_t torsion_rank) {
    if (n < 1) throw DomainError("a cycle needs at least one component");
    CurveModel c;
    c.shape = KodairaCurveType::I(n);
    c.torsion_rank = torsion_rank;
    for (std::int64_t i = 0; i < n; ++i) c.components.push_back({"C" + std::to_string(i), 1, ComponentKind::rational});
    const auto N = static_cast<std::size_t>(n);
    for (std::size_t j = 0; j < N; ++j)
        add_junction(c, JunctionKind::node, {{j, ChartPoint::infinity()}, {(j + 1) % N, ChartPoint::zero()}});
    return c;
}

CurveModel elliptic_model(const EllipticSymbol& symbol, std::size_t torsion_rank) {
    CurveModel c;
    c.shape = KodairaCurveType::I(0);
    c.torsion_rank = torsion_rank;
    c.components.push_back({"E", 1, ComponentKind::elliptic});
    c.elliptic = symbol;
    return c;
}

CurveModel star_model(std::int64_t r, std::size_t torsion_rank, const std::string& j_tag) {
    if (r < 0) throw DomainError("I_r* needs r >= 0");
    CurveModel c;
    c.shape = KodairaCurveType::IStar(r);
    c.torsion_rank = torsion_rank;
    for (int i = 1; i <= 4; ++i) c.components.push_back({"E" + std::to_string(i), 1, ComponentKind::rational});
    for (std::int64_t j = 0; j <= r; ++j) c.components.push_back({"F" + std::to_string(j), 2, ComponentKind::rational});
    const std::size_t f0 = 4;
    const std::size_t fr = 4 + static_cast<std::size_t>(r);
    if (r == 0) {
        std::array<ChartPoint, 4> at;
        if (j_tag == "0") {
            at = {ChartPoint::unit(0), ChartPoint::unit(Rational(1, 3)), ChartPoint::unit(Rational(2, 3)),
                  ChartPoint::zero()};
        } else {
            at = {ChartPoint::unit(Rational(1, 4)), ChartPoint::unit(Rational(3, 4)), ChartPoint::unit(0),
                  ChartPoint::unit(Rational(1, 2))};
        }
        for (std::size_t e = 0; e < 4; ++e) add_junction(c, JunctionKind::node, {{e, ChartPoint::infinity()}, {f0, at[e]}});
        return c;
    }
    add_junction(c, JunctionKind::node, {{0, ChartPoint::infinity()}, {f0, ChartPoint::unit(0)}});
    add_junction(c, JunctionKind::node, {{1, ChartPoint::infinity()}, {f0, ChartPoint::unit(Rational(1, 2))}});
    for (std::size_t j = f0; j < fr; ++j)
        add_junction(c, JunctionKind::node, {{j, ChartPoint::infinity()}, {j + 1, ChartPoint::zero()}});
    add_junction(c, JunctionKind::node, {{2, ChartPoint::infinity()}, {fr, ChartPoint::unit(0)}});
    add_junction(c, JunctionKind::node, {{3, ChartPoint::infinity()}, {fr, ChartPoint::unit(Rational(1, 2))}});
    return c;
}

namespace {

CurveModel tree_model(KodairaCurveType shape, const std::vector<std::int64_t>& mult,
                      const std::vector<std::string>& labels, std::size_t center, std::size_t branch_from,
                      std::size_t torsion_rank) {
    // chain 0..branch_from-1 plus one extra component attached to `center` at unit 0
    CurveModel c;
    c.shape = shape;
    c.torsion_rank = torsion_rank;
    for (std::size_t i = 0; i < mult.size(); ++i) c.components.push_back({labels[i], mult[i], ComponentKind::rational});
    for (std::size_t i = 0; i + 1 < branch_from; ++i)
        add_junction(c, JunctionKind::node, {{i, ChartPoint::infinity()}, {i + 1, ChartPoint::zero()}});
    add_junction(c, JunctionKind::node, {{center, ChartPoint::unit(0)}, {branch_from, ChartPoint::infinity()}});
    return c;
}

}  // namespace

CurveModel curve_model(const KodairaCurveType& shape, const std::string& j_tag, std::size_t torsion_rank) {
    CurveModel c;
    switch (shape.family) {
        case CurveFamily::I:
            if (shape.r == 0) return elliptic_model(elliptic_symbol(j_tag), torsion_rank);
            return cycle_model(shape.r, torsion_rank);
        case CurveFamily::IStar: return star_model(shape.r, torsion_rank, j_tag);
        case CurveFamily::II:
            c.shape = shape;
            c.torsion_rank = torsion_rank;
            c.components.push_back({"C0", 1, ComponentKind::rational});
            add_junction(c, JunctionKind::cusp, {{0, ChartPoint::zero()}});
            return c;
        case CurveFamily::III:
            c.shape = shape;
            c.torsion_rank = torsion_rank;
            for (int i = 0; i < 2; ++i) c.components.push_back({"C" + std::to_string(i), 1, ComponentKind::rational});
            add_junction(c, JunctionKind::tacnode, {{0, ChartPoint::zero()}, {1, ChartPoint::zero()}});
            return c;
        case CurveFamily::IV:
            c.shape = shape;
            c.torsion_rank = torsion_rank;
            for (int i = 1; i <= 3; ++i) c.components.push_back({"E" + std::to_string(i), 1, ComponentKind::rational});
            add_junction(c, JunctionKind::triple,
                         {{0, ChartPoint::zero()}, {1, ChartPoint::zero()}, {2, ChartPoint::zero()}});
            return c;
        case CurveFamily::IVStar: {
            c.shape = shape;
            c.torsion_rank = torsion_rank;
            c.components.push_back({"H", 3, ComponentKind::rational});
            for (int a = 1; a <= 3; ++a) c.components.push_back({"F" + std::to_string(a), 2, ComponentKind::rational});
            for (int a = 1; a <= 3; ++a) c.components.push_back({"E" + std::to_string(a), 1, ComponentKind::rational});
            for (std::size_t a = 0; a < 3; ++a) {
                add_junction(c, JunctionKind::node,
                             {{0, ChartPoint::unit(Rational(static_cast<long long>(a), 3))}, {1 + a, ChartPoint::infinity()}});
                add_junction(c, JunctionKind::node, {{1 + a, ChartPoint::zero()}, {4 + a, ChartPoint::infinity()}});
            }
            return c;
        }
        case CurveFamily::IIIStar:
            return tree_model(shape, {1, 2, 3, 4, 3, 2, 1, 2}, {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"}, 3, 7,
                              torsion_rank);
        case CurveFamily::IIStar:
            return tree_model(shape, {1, 2, 3, 4, 5, 6, 4, 2, 3},
                              {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"}, 5, 8, torsion_rank);
    }
    throw DomainError("unknown curve type");
}

std::size_t component_index(const CurveModel& c, const std::string& label) {
    for (std::size_t i = 0; i < c.components.size(); ++i)
        if (c.components[i].label == label) return i;
    throw DomainError("no component labelled " + label);
}

// ---------------------------------------------------------------- automorphisms

namespace {

ComponentMap identity_map(const CurveModel& c, std::size_t i) {
    ComponentMap m;
    if (c.components[i].kind == ComponentKind::elliptic) m.elliptic = EllipticMap{};
    return m;
}

bool component_map_identity(const CurveModel& c, const ComponentMap& m) {
    if (m.elliptic) return is_identity(c.aut_order(), *m.elliptic);
    return m.chart.is_identity();
}

}  // namespace

DiagonalAutomorphism identity_automorphism(const CurveModel& c) {
    DiagonalAutomorphism a;
    for (std::size_t i = 0; i < c.size(); ++i) {
        a.curve.perm.push_back(i);
        a.curve.maps.push_back(identity_map(c, i));
    }
    a.translation = TorsionPoint::zero(c.torsion_rank);
    return a;
}

DiagonalAutomorphism translation(const CurveModel& c, const TorsionPoint& t) {
    if (!c.torsion().contains(t)) throw DomainError("translation rank does not match the model");
    DiagonalAutomorphism a = identity_automorphism(c);
    a.translation = t;
    return a;
}

DiagonalAutomorphism compose(const CurveModel& c, const DiagonalAutomorphism& a, const DiagonalAutomorphism& b) {
    const std::size_t n = c.size();
    if (a.curve.perm.size() != n || b.curve.perm.size() != n) throw DomainError("automorphism size does not match the model");
    DiagonalAutomorphism out;
    out.curve.perm.resize(n);
    out.curve.maps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t mid = b.curve.perm[i];
        out.curve.perm[i] = a.curve.perm[mid];
        const ComponentMap& outer = a.curve.maps[mid];
        const ComponentMap& inner = b.curve.maps[i];
        ComponentMap m;
        if (outer.elliptic || inner.elliptic) {
            if (!outer.elliptic || !inner.elliptic) throw DomainError("elliptic and rational charts do not compose");
            m.elliptic = compose(c.aut_order(), *outer.elliptic, *inner.elliptic);
        } else {
            m.chart = compose(outer.chart, inner.chart);
        }
        out.curve.maps[i] = m;
    }
    out.translation = a.translation + b.translation;
    return out;
}

DiagonalAutomorphism power(const CurveModel& c, const DiagonalAutomorphism& a, std::int64_t k) {
    if (k < 0) throw DomainError("negative powers are not supported");
    DiagonalAutomorphism result = identity_automorphism(c);
    DiagonalAutomorphism base = a;
    while (k > 0) {
        if (k & 1) result = compose(c, base, result);
        base = compose(c, base, base);
        k >>= 1;
    }
    return result;
}

bool is_curve_identity(const CurveModel& c, const CurveAutomorphism& a) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (a.perm[i] != i) return false;
        if (!component_map_identity(c, a.maps[i])) return false;
    }
    return true;
}

bool is_identity(const CurveModel& c, const DiagonalAutomorphism& a) {
    return a.translation.is_zero() && is_curve_identity(c, a.curve);
}

namespace {

bool same_branches(const std::vector<Branch>& a, const std::vector<Branch>& b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && b[j] == x) {
                used[j] = true;
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

std::optional<std::size_t> junction_image(const CurveModel& c, const CurveAutomorphism& a, std::size_t j) {
    const Junction& junction = c.junctions[j];
    std::vector<Branch> image;
    for (const auto& b : junction.branches)
        image.push_back({a.perm[b.component], a.maps[b.component].chart.apply(b.point)});
    for (std::size_t k = 0; k < c.junctions.size(); ++k)
        if (c.junctions[k].kind == junction.kind && same_branches(image, c.junctions[k].branches)) return k;
    return std::nullopt;
}

}  // namespace

std::vector<std::size_t> junction_permutation(const CurveModel& c, const CurveAutomorphism& a) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < c.junctions.size(); ++j) {
        auto k = junction_image(c, a, j);
        if (!k) throw DomainError("automorphism does not respect junction " + std::to_string(j));
        out.push_back(*k);
    }
    return out;
}

std::vector<std::string> check_automorphism(const CurveModel& c, const DiagonalAutomorphism& a) {
    std::vector<std::string> v;
    const std::size_t n = c.size();
    if (a.curve.perm.size() != n || a.curve.maps.size() != n) {
        v.push_back("automorphism size does not match the model");
        return v;
    }
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t t = a.curve.perm[i];
        if (t >= n || hit[t]) {
            v.push_back("component map is not a permutation");
            return v;
        }
        hit[t] = true;
        if (c.components[i].multiplicity != c.components[t].multiplicity)
            v.push_back("component " + c.components[i].label + " sent to a component of different multiplicity");
        if (c.components[i].kind != c.components[t].kind)
            v.push_back("component " + c.components[i].label + " sent to a component of different kind");
        if ((c.components[i].kind == ComponentKind::elliptic) != a.curve.maps[i].elliptic.has_value())
            v.push_back("component " + c.components[i].label + " has a map of the wrong kind");
    }
    if (!c.torsion().contains(a.translation)) v.push_back("translation rank does not match the model");
    if (!v.empty()) return v;
    for (std::size_t j = 0; j < c.junctions.size(); ++j)
        if (!junction_image(c, a.curve, j)) v.push_back("junction " + std::to_string(j) + " is not sent to a junction");
    return v;
}

std::int64_t order(const CurveModel& c, const DiagonalAutomorphism& a) {
    if (auto bad = check_automorphism(c, a); !bad.empty()) throw DomainError(bad.front());
    const std::int64_t t = to_int64(a.translation.order());
    DiagonalAutomorphism curve_only = a;
    curve_only.translation = TorsionPoint::zero(c.torsion_rank);
    DiagonalAutomorphism p = curve_only;
    std::int64_t k = 1;
    while (!is_identity(c, p)) {
        p = compose(c, curve_only, p);
        if (++k > 100000) throw DomainError("automorphism order exceeds the search bound");
    }
    return lcm(k, t);
}

std::string FixedMark::to_string(const CurveModel& c) const {
    switch (kind) {
        case Kind::component: return "component " + c.components[index].label;
        case Kind::junction: return kodaira::to_string(c.junctions[index].kind) + " " + std::to_string(index);
        case Kind::point:
            if (elliptic_point)
                return "point (" + kodaira::to_string((*elliptic_point)[0]) + ", " +
                       kodaira::to_string((*elliptic_point)[1]) + ") on " + c.components[index].label;
            return "point z = " + point->to_string() + " on " + c.components[index].label;
    }
    return "?";
}

std::vector<FixedMark> fixed_locus(const CurveModel& c, const DiagonalAutomorphism& a) {
    std::vector<FixedMark> out;
    const auto jperm = junction_permutation(c, a.curve);
    auto on_junction = [&c](std::size_t comp, const ChartPoint& p) {
        for (const auto& j : c.junctions)
            for (const auto& b : j.branches)
                if (b.component == comp && b.point == p) return true;
        return false;
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (a.curve.perm[i] != i) continue;
        const ComponentMap& m = a.curve.maps[i];
        if (m.elliptic) {
            auto pts = elliptic_fixed_points(c.aut_order(), *m.elliptic);
            if (!pts) {
                out.push_back({FixedMark::Kind::component, i, std::nullopt, std::nullopt});
                continue;
            }
            for (const auto& x : *pts) out.push_back({FixedMark::Kind::point, i, std::nullopt, x});
            continue;
        }
        if (m.chart.is_identity()) {
            out.push_back({FixedMark::Kind::component, i, std::nullopt, std::nullopt});
            continue;
        }
        std::vector<ChartPoint> pts;
        if (m.chart.inverting) {
            pts = {ChartPoint::unit(m.chart.c / 2), ChartPoint::unit(m.chart.c / 2 + Rational(1, 2))};
        } else {
            pts = {ChartPoint::zero(), ChartPoint::infinity()};
        }
        for (const auto& p : pts)
            if (!on_junction(i, p)) out.push_back({FixedMark::Kind::point, i, p, std::nullopt});
    }
    for (std::size_t j = 0; j < jperm.size(); ++j)
        if (jperm[j] == j) out.push_back({FixedMark::Kind::junction, j, std::nullopt, std::nullopt});
    return out;
}

FreeCheck is_free(const CurveModel& c, const DiagonalAutomorphism& a) {
    const std::int64_t n = order(c, a);
    DiagonalAutomorphism p = a;
    for (std::int64_t k = 1; k < n; ++k) {
        if (p.translation.is_zero() && !fixed_locus(c, p).empty()) return {false, k, {}};
        p = compose(c, a, p);
    }
    return {};
}

FreeCheck is_free_group(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators) {
    std::vector<std::int64_t> orders;
    for (const auto& g : generators) orders.push_back(order(c, g));
    std::vector<std::int64_t> e(generators.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < e.size() && e[i] + 1 == orders[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
        DiagonalAutomorphism x = identity_automorphism(c);
        for (std::size_t g = 0; g < generators.size(); ++g) x = compose(c, power(c, generators[g], e[g]), x);
        if (is_identity(c, x) || !x.translation.is_zero()) continue;
        if (!fixed_locus(c, x).empty()) return {false, std::nullopt, e};
    }
    return {};
}

std::vector<DiagonalAutomorphism> group_elements(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators) {
    std::vector<DiagonalAutomorphism> out{identity_automorphism(c)};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : generators) {
            DiagonalAutomorphism x = compose(c, g, out[k]);
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
            if (out.size() > 100000) throw DomainError("group exceeds the enumeration bound");
        }
    }
    return out;
}

// ---------------------------------------------------------------- chart realization

std::optional<ChartMap> realize_center_map(const CurveModel& c, std::size_t center,
                                           const std::vector<std::size_t>& perm) {
    std::vector<std::pair<ChartPoint, ChartPoint>> wanted;
    for (const auto& j : c.junctions) {
        for (const auto& b : j.branches) {
            if (b.component != center) continue;
            for (const auto& other : j.branches) {
                if (other.component == center) continue;
                // the branch toward `other` must land on the branch toward perm[other]
                for (const auto& k : c.junctions) {
                    bool has_center = false, has_target = false;
                    ChartPoint at;
                    for (const auto& bb : k.branches) {
                        if (bb.component == center) {
                            has_center = true;
                            at = bb.point;
                        }
                        if (bb.component == perm[other.component]) has_target = true;
                    }
                    if (has_center && has_target) wanted.emplace_back(b.point, at);
                }
            }
        }
    }
    for (int inv = 0; inv < 2; ++inv)
        for (int k = 0; k < 12; ++k) {
            ChartMap f{inv == 1, Rational(k, 12)};
            if (std::all_of(wanted.begin(), wanted.end(), [&f](const auto& w) { return f.apply(w.first) == w.second; }))
                return f;
        }
    return std::nullopt;
}

CurveAutomorphism realize_permutation(const CurveModel& c, const std::vector<std::size_t>& perm) {
    const std::size_t n = c.size();
    if (perm.size() != n) throw DomainError("permutation size does not match the model");
    for (const auto& comp : c.components)
        if (comp.kind == ComponentKind::elliptic) throw DomainError("permutation form needs rational components");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&c](std::size_t a, std::size_t b) {
        return c.components[a].multiplicity > c.components[b].multiplicity;
    });
    std::vector<ChartMap> candidates;
    for (int inv = 0; inv < 2; ++inv)
        for (int k = 0; k < 12; ++k) candidates.push_back({inv == 1, Rational(k, 12)});

    CurveAutomorphism a;
    a.perm = perm;
    a.maps.assign(n, ComponentMap{});
    std::vector<bool> assigned(n, false);

    auto consistent = [&](std::size_t comp) {
        for (std::size_t j = 0; j < c.junctions.size(); ++j) {
            const auto& junction = c.junctions[j];
            bool touches = false, complete = true;
            for (const auto& b : junction.branches) {
                if (b.component == comp) touches = true;
                if (!assigned[b.component]) complete = false;
            }
            if (!touches) continue;
            // partial check: each assigned branch must land on a branch of some junction of the same kind
            std::vector<Branch> image;
            for (const auto& b : junction.branches)
                if (assigned[b.component]) image.push_back({perm[b.component], a.maps[b.component].chart.apply(b.point)});
            bool found = false;
            for (const auto& k : c.junctions) {
                if (k.kind != junction.kind) continue;
                if (complete) {
                    if (same_branches(image, k.branches)) found = true;
                } else {
                    found = std::all_of(image.begin(), image.end(), [&k](const Branch& x) {
                        return std::find(k.branches.begin(), k.branches.end(), x) != k.branches.end();
                    });
                }
                if (found) break;
            }
            if (!found) return false;
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t pos) {
        if (pos == n) return true;
        const std::size_t comp = order[pos];
        for (const auto& f : candidates) {
            a.maps[comp].chart = f;
            assigned[comp] = true;
            if (consistent(comp) && search(pos + 1)) return true;
            assigned[comp] = false;
        }
        return false;
    };
    if (!search(0)) throw DomainError("no chart maps realize the permutation");
    return a;
}

// ---------------------------------------------------------------- stabilizer decorations

namespace {

CurveAutomorphism chart_automorphism(const CurveModel& c, std::vector<std::size_t> perm, std::vector<ChartMap> charts) {
    CurveAutomorphism a;
    a.perm = std::move(perm);
    for (auto& f : charts) a.maps.push_back(ComponentMap{f, std::nullopt, std::nullopt});
    DiagonalAutomorphism probe{a, TorsionPoint::zero(c.torsion_rank)};
    if (auto bad = check_automorphism(c, probe); !bad.empty()) throw DomainError(bad.front());
    return a;
}

// The standard generators of pi0 acting on C, one per invariant factor of G.
std::vector<CurveAutomorphism> standard_actions(const CurveModel& c, const FgAbelianGroup& g) {
    if (g.is_trivial()) return {};
    const auto& shape = c.shape;
    const std::size_t n = c.size();
    std::vector<ChartMap> ids(n);
    switch (shape.family) {
        case CurveFamily::III: return {chart_automorphism(c, {1, 0}, ids)};
        case CurveFamily::IV: return {chart_automorphism(c, {1, 2, 0}, ids)};
        case CurveFamily::IIIStar: {
            std::vector<std::size_t> perm{6, 5, 4, 3, 2, 1, 0, 7};
            std::vector<ChartMap> charts(n, ChartMap::invert(0));
            charts[7] = ChartMap{};
            return {chart_automorphism(c, perm, charts)};
        }
        case CurveFamily::IVStar: {
            std::vector<ChartMap> charts(n);
            charts[0] = ChartMap::scale(Rational(1, 3));
            return {chart_automorphism(c, {0, 2, 3, 1, 5, 6, 4}, charts)};
        }
        case CurveFamily::IStar: {
            const std::int64_t r = shape.r;
            const std::size_t f0 = 4;
            if (r == 0) {
                if (c.junctions[3].branches[1].point == ChartPoint::zero())
                    throw DomainError("stabilizer decorations need the square I0* layout");
                std::vector<ChartMap> swap_pairs(n), cross(n);
                swap_pairs[f0] = ChartMap::scale(Rational(1, 2));
                cross[f0] = ChartMap::invert(Rational(1, 4));
                auto g1 = chart_automorphism(c, {1, 0, 3, 2, 4}, swap_pairs);
                if (g.invariant_factors().size() == 1) return {g1};
                return {g1, chart_automorphism(c, {2, 3, 0, 1, 4}, cross)};
            }
            std::vector<std::size_t> ends_perm(n), reversal_perm(n);
            std::vector<ChartMap> ends(n), reversal(n), twisted(n);
            std::iota(ends_perm.begin(), ends_perm.end(), 0);
            ends_perm[0] = 1, ends_perm[1] = 0, ends_perm[2] = 3, ends_perm[3] = 2;
            for (std::int64_t j = 0; j <= r; ++j) {
                const auto idx = f0 + static_cast<std::size_t>(j);
                ends[idx] = ChartMap::scale(Rational(1, 2));
                reversal_perm[idx] = f0 + static_cast<std::size_t>(r - j);
                reversal[idx] = ChartMap::invert(0);
                twisted[idx] = ChartMap::invert(2 * j <= r ? Rational(0) : Rational(1, 2));
            }
            if (g == FgAbelianGroup::cyclic(2)) return {chart_automorphism(c, ends_perm, ends)};
            if (r % 2 == 0) {
                reversal_perm[0] = 2, reversal_perm[1] = 3, reversal_perm[2] = 0, reversal_perm[3] = 1;
                return {chart_automorphism(c, ends_perm, ends), chart_automorphism(c, reversal_perm, reversal)};
            }
            reversal_perm[0] = 2, reversal_perm[2] = 1, reversal_perm[1] = 3, reversal_perm[3] = 0;
            return {chart_automorphism(c, reversal_perm, twisted)};
        }
        default: break;
    }
    throw DomainError(shape.name() + " admits only trivial stabilizer");
}

}  // namespace

CurveModel stabilizer_quotient(const CurveModel& c, const FgAbelianGroup& g, const std::vector<CurveAutomorphism>& tau,
                               const std::vector<TorsionPoint>& sigma) {
    if (!c.shape.is_unstable()) throw DomainError("stabilizers decorate unstable curves only");
    if (!is_admissible_stabilizer(c.shape, g))
        throw DomainError(c.shape.name() + " does not admit stabilizer " + g.to_string());
    const auto& factors = g.invariant_factors();
    if (tau.size() != factors.size() || sigma.size() != factors.size())
        throw DomainError("need one curve map and one torsion point per invariant factor");
    StabilizerDecoration d;
    d.group = g;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::int64_t di = to_int64(factors[i]);
        if (!c.torsion().contains(sigma[i])) throw DomainError("torsion point rank does not match the model");
        if (di % to_int64(sigma[i].order()) != 0) throw DomainError("sigma is not a homomorphism");
        DiagonalAutomorphism x{tau[i], sigma[i]};
        if (auto bad = check_automorphism(c, x); !bad.empty()) throw DomainError(bad.front());
        DiagonalAutomorphism curve_only{tau[i], TorsionPoint::zero(c.torsion_rank)};
        if (!is_identity(c, power(c, curve_only, di))) throw DomainError("tau is not a homomorphism");
        d.generators.push_back(x);
    }
    if (torsion_subgroup(sigma) != g) throw DomainError("sigma must be injective");
    CurveModel out = c;
    out.stabilizer = d;
    return out;
}

CurveModel decorate(const CurveModel& c, const FgAbelianGroup& g) {
    if (!c.shape.is_unstable()) throw DomainError("stabilizers decorate unstable curves only");
    if (!is_admissible_stabilizer(c.shape, g))
        throw DomainError(c.shape.name() + " does not admit stabilizer " + g.to_string());
    const auto& factors = g.invariant_factors();
    if (factors.size() > c.torsion_rank) throw DomainError("torsion rank too small for the stabilizer");
    std::vector<TorsionPoint> sigma;
    for (std::size_t i = 0; i < factors.size(); ++i)
        sigma.push_back(TorsionPoint::basis(c.torsion_rank, i, to_int64(factors[i])));
    return stabilizer_quotient(c, g, standard_actions(c, g), sigma);
}

// ---------------------------------------------------------------- quotient classification

namespace {

[[noreturn]] void unclassified(const std::string& why) {
    throw DomainError("unclassified action: " + why);
}

std::vector<std::size_t> tail_cycle_lengths(const std::vector<std::size_t>& perm, const std::vector<std::size_t>& tails) {
    std::vector<std::size_t> lengths;
    std::set<std::size_t> seen;
    for (std::size_t t : tails) {
        if (seen.count(t)) continue;
        std::size_t len = 0, x = t;
        do {
            seen.insert(x);
            x = perm[x];
            ++len;
        } while (x != t && len <= perm.size());
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

KodairaType classify_cycle(const CurveModel& c, const DiagonalAutomorphism& phi, std::int64_t phi_order,
                           const FgAbelianGroup& g, std::int64_t m) {
    const auto N = static_cast<std::int64_t>(c.size());
    const bool reversing = phi.curve.maps[0].chart.inverting;
    for (const auto& f : phi.curve.maps)
        if (f.chart.inverting != reversing) unclassified("mixed orientation on a cycle");
    if (N % m != 0) unclassified("the cycle length must be a multiple of m");
    if (!reversing) {
        if (!g.is_trivial()) unclassified("semistable-like quotients carry no stabilizer");
        if (phi_order != m) unclassified("inertia generator must have order m");
        const std::int64_t s = static_cast<std::int64_t>(phi.curve.perm[0]);
        for (std::int64_t i = 0; i < N; ++i)
            if (static_cast<std::int64_t>(phi.curve.perm[static_cast<std::size_t>(i)]) != (i + s) % N)
                unclassified("component map is not a rotation");
        const std::int64_t R = gcd(N, s);
        const std::int64_t l = N / R;
        DiagonalAutomorphism pl = power(c, phi, l);
        const Rational slope = mod_one(N > 1 ? pl.curve.maps[1].chart.c - pl.curve.maps[0].chart.c : Rational(0));
        for (std::int64_t i = 0; i < N; ++i) {
            const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>((i + 1) % N);
            if (mod_one(pl.curve.maps[b].chart.c - pl.curve.maps[a].chart.c) != (b == 0 ? mod_one(-slope * (N - 1)) : slope))
                unclassified("twist of the l-th power is not of the form zeta^i");
        }
        const std::int64_t k = to_int64(order_mod_one(slope));
        if (k * l != m) unclassified("twist order and rotation length do not multiply to m");
        return KodairaType::multiple(m, sub::IRk{k, R});
    }
    if (N % 2 != 0) unclassified("orientation reversal needs an even cycle");
    const std::int64_t t = static_cast<std::int64_t>(phi.curve.perm[0]);
    for (std::int64_t i = 0; i < N; ++i)
        if (static_cast<std::int64_t>(phi.curve.perm[static_cast<std::size_t>(i)]) != floor_mod(t - i, N))
            unclassified("component map is not a reflection");
    const std::int64_t R = N / 2;
    const bool plus = t % 2 == 0;
    if (phi_order != (plus ? m : 2 * m)) unclassified(plus ? "inertia generator must have order m" : "inertia generator must have order 2m");
    Rational slope = N > 1 ? mod_one(phi.curve.maps[1].chart.c - phi.curve.maps[0].chart.c) : Rational(0);
    if (to_int64(order_mod_one(slope)) != m) unclassified("twist zeta must have order m");
    if (plus) return KodairaType::multiple(m, sub::IRPlus{R, g});
    return KodairaType::multiple(m, sub::IRMinus{R, g});
}

KodairaType classify_elliptic(const CurveModel& c, const DiagonalAutomorphism& phi, std::int64_t phi_order, std::int64_t m) {
    if (phi_order != m) unclassified("inertia generator must have order m");
    const int n = c.aut_order();
    const std::int64_t e = floor_mod(phi.curve.maps[0].elliptic->e, std::int64_t{n});
    const std::int64_t d = e == 0 ? 1 : n / gcd(e, std::int64_t{n});
    if (phi.curve.maps[0].elliptic->t != std::array<Rational, 2>{0, 0}) unclassified("inertia must fix the origin of E");
    if (d == 1) return KodairaType::multiple(m, sub::I0{});
    if (m % d != 0) unclassified("rotation order must divide m");
    return KodairaType::multiple(m, sub::I0Plus{d});
}

}  // namespace

KodairaType quotient_type(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators, std::int64_t m) {
    if (m < 1) throw DomainError("multiplicity must be positive");
    DiagonalAutomorphism phi = generators.empty() ? identity_automorphism(c) : generators.front();
    std::vector<DiagonalAutomorphism> extra;
    if (c.stabilizer) extra = c.stabilizer->generators;
    for (std::size_t i = 1; i < generators.size(); ++i) extra.push_back(generators[i]);
    for (const auto& x : generators)
        if (auto bad = check_automorphism(c, x); !bad.empty()) unclassified(bad.front());

    std::vector<DiagonalAutomorphism> all{phi};
    all.insert(all.end(), extra.begin(), extra.end());
    if (!is_free_group(c, all).free) throw DomainError("not a multiple-fiber model");

    std::vector<TorsionPoint> sigma;
    for (const auto& x : extra) sigma.push_back(x.translation);
    const FgAbelianGroup g = torsion_subgroup(sigma);
    auto order_g = g.order();
    if (static_cast<std::size_t>(to_int64(*order_g)) != group_elements(c, extra).size())
        throw DomainError("stabilizer translations must be injective");

    KodairaType result;
    const std::int64_t phi_order = order(c, phi);
    if (m == 1) {
        if (!is_identity(c, phi)) unclassified("m = 1 needs a trivial inertia generator");
        if (c.elliptic) result = KodairaType::semistable(0);
        else if (c.shape.is_semistable()) {
            if (!g.is_trivial()) unclassified("semistable curves carry no stabilizer");
            result = KodairaType::semistable(static_cast<std::int64_t>(c.size()));
        } else {
            result = KodairaType::unstable(c.shape, g);
        }
    } else if (c.elliptic) {
        result = classify_elliptic(c, phi, phi_order, m);
    } else if (c.shape.is_semistable()) {
        result = classify_cycle(c, phi, phi_order, g, m);
    } else {
        const auto& perm = phi.curve.perm;
        const bool trivial_perm = std::is_sorted(perm.begin(), perm.end()) && perm.front() == 0 && perm.back() + 1 == perm.size();
        const auto& shape = c.shape;
        if (shape.family == CurveFamily::IStar && shape.r >= 1) {
            if (!trivial_perm) unclassified("the inertia generator must preserve every component of I_R*");
            if (phi_order != m) unclassified("inertia generator must have order m");
            const std::size_t f0 = 4;
            const Rational w = mod_one(phi.curve.maps[f0 + 1].chart.c - phi.curve.maps[f0].chart.c);
            for (std::int64_t j = 0; j < shape.r; ++j) {
                const auto a = f0 + static_cast<std::size_t>(j);
                if (phi.curve.maps[a].chart.inverting || mod_one(phi.curve.maps[a + 1].chart.c - phi.curve.maps[a].chart.c) != w)
                    unclassified("chain twist is not of the form u^j");
            }
            if (w == 0) unclassified("the chain twist must be nontrivial");
            result = KodairaType::multiple(m, sub::UnstableLike{shape, g});
        } else if (trivial_perm) {
            if (phi_order != m) unclassified("inertia generator must have order m");
            result = KodairaType::multiple(m, sub::UnstableLike{shape, g});
        } else if (shape.family == CurveFamily::IStar) {
            const auto lengths = tail_cycle_lengths(perm, {0, 1, 2, 3});
            if (lengths == std::vector<std::size_t>{2, 1, 1}) {
                if (phi_order != m) unclassified("inertia generator must have order m");
                if (g.is_trivial()) {
                    result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::I0StarA});
                } else {
                    if (g != FgAbelianGroup::cyclic(2) || extra.size() != 1) unclassified("I0*-a admits G = Z/2 only");
                    const auto& beta = extra.front().curve.perm;
                    for (std::size_t t = 0; t < 4; ++t) {
                        const bool moved_by_alpha = perm[t] != t;
                        if (moved_by_alpha == (beta[t] != t)) unclassified("beta must swap the complementary tails");
                    }
                    result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::I0StarA2});
                }
            } else if (lengths == std::vector<std::size_t>{4} && g.is_trivial()) {
                if (phi_order != 2 * m) unclassified("inertia generator must have order 2m");
                result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::I0StarB});
            } else if (lengths == std::vector<std::size_t>{3, 1} && g.is_trivial()) {
                if (phi_order != m) unclassified("inertia generator must have order m");
                result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::I0StarC});
            } else {
                unclassified("tail permutation outside the catalog");
            }
        } else if (shape.family == CurveFamily::IV && g.is_trivial() &&
                   tail_cycle_lengths(perm, {0, 1, 2}) == std::vector<std::size_t>{2, 1}) {
            if (phi_order != m) unclassified("inertia generator must have order m");
            result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::IVA});
        } else if (shape.family == CurveFamily::IVStar && g.is_trivial() &&
                   tail_cycle_lengths(perm, {1, 2, 3}) == std::vector<std::size_t>{2, 1}) {
            if (phi_order != m) unclassified("inertia generator must have order m");
            result = KodairaType::multiple(m, sub::Exceptional{ExceptionalTag::IVStarA});
        } else {
            unclassified("curve permutation outside the catalog");
        }
    }
    if (auto bad = validate(result); !bad.empty()) throw DomainError("quotient violates " + bad.front());
    return result;
}

}  // namespace kodaira
