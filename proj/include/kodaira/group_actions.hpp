#pragma once

#include "kodaira/fiber_type.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

// Element of (Q/Z)^g with coordinates reduced into [0, 1).
class TorsionPoint {
public:
    TorsionPoint() = default;
    explicit TorsionPoint(std::vector<Rational> coords);
    static TorsionPoint zero(std::size_t rank) { return TorsionPoint(std::vector<Rational>(rank, 0)); }
    // 1/n in coordinate i.
    static TorsionPoint basis(std::size_t rank, std::size_t i, std::int64_t n);

    std::size_t rank() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_zero() const;
    Integer order() const;

    TorsionPoint operator+(const TorsionPoint& other) const;
    TorsionPoint operator-() const;
    TorsionPoint scaled(std::int64_t k) const;
    bool operator==(const TorsionPoint&) const = default;
    std::string to_string() const;  // "(1/2, 0)"

private:
    std::vector<Rational> coords_;
};

struct TorsionModule {
    std::size_t rank = 2;
    bool contains(const TorsionPoint& p) const { return p.rank() == rank; }
    TorsionPoint zero() const { return TorsionPoint::zero(rank); }
};

// Isomorphism type of the subgroup of (Q/Z)^g generated by the points.
FgAbelianGroup torsion_subgroup(const std::vector<TorsionPoint>& points);

// Points of P^1 that the models mark: 0, infinity, or a root of unity exp(2 pi i e).
struct ChartPoint {
    enum class Kind { zero, infinity, unit };
    Kind kind = Kind::zero;
    Rational e = 0;

    static ChartPoint zero() { return {Kind::zero, 0}; }
    static ChartPoint infinity() { return {Kind::infinity, 0}; }
    static ChartPoint unit(const Rational& e) { return {Kind::unit, mod_one(e)}; }
    bool operator==(const ChartPoint&) const = default;
    std::string to_string() const;
};

// z -> zeta^c z, or z -> zeta^c / z when inverting; c is an exponent in Q/Z.
struct ChartMap {
    bool inverting = false;
    Rational c = 0;

    static ChartMap scale(const Rational& c) { return {false, mod_one(c)}; }
    static ChartMap invert(const Rational& c) { return {true, mod_one(c)}; }
    ChartPoint apply(const ChartPoint& p) const;
    bool is_identity() const { return !inverting && c == 0; }
    bool operator==(const ChartMap&) const = default;
    std::string to_string() const;
};

// a o b
ChartMap compose(const ChartMap& a, const ChartMap& b);

// x -> w^e x + t on an elliptic curve whose automorphism group fixing 0 is generated by w of order n.
// Points are coordinates in (Q/Z)^2 with respect to a lattice basis adapted to w.
struct EllipticMap {
    std::int64_t e = 0;
    std::array<Rational, 2> t{0, 0};
    bool operator==(const EllipticMap&) const = default;
};

using Lattice2 = std::array<std::array<std::int64_t, 2>, 2>;
Lattice2 elliptic_rotation(int aut_order, std::int64_t e);
std::array<Rational, 2> apply(int aut_order, const EllipticMap& f, const std::array<Rational, 2>& x);
EllipticMap compose(int aut_order, const EllipticMap& a, const EllipticMap& b);
bool is_identity(int aut_order, const EllipticMap& f);
// Every fixed point, or nullopt when f is the identity.
std::optional<std::vector<std::array<Rational, 2>>> elliptic_fixed_points(int aut_order, const EllipticMap& f);
// Fixed points of the order-d subgroup generated by w^(n/d): the arms of the curve of that inertia.
std::vector<std::array<Rational, 2>> rotation_fixed_points(int aut_order, std::int64_t e);

struct ComponentMap {
    ChartMap chart;
    std::optional<EllipticMap> elliptic;
    // Action on the normal direction of a doubled component; carried as an annotation only.
    std::optional<Rational> normal_twist;

    bool operator==(const ComponentMap& other) const {
        return chart == other.chart && elliptic == other.elliptic;
    }
};

struct CurveAutomorphism {
    std::vector<std::size_t> perm;  // component i goes to perm[i]
    std::vector<ComponentMap> maps;  // chart of i to chart of perm[i]
    bool operator==(const CurveAutomorphism&) const = default;
};

struct DiagonalAutomorphism {
    CurveAutomorphism curve;
    TorsionPoint translation;
    bool operator==(const DiagonalAutomorphism&) const = default;
};

enum class ComponentKind { rational, elliptic };
enum class JunctionKind { node, tacnode, triple, cusp };
std::string to_string(JunctionKind k);

struct Component {
    std::string label;
    std::int64_t multiplicity = 1;
    ComponentKind kind = ComponentKind::rational;
};

struct Branch {
    std::size_t component = 0;
    ChartPoint point;
    bool operator==(const Branch&) const = default;
};

struct Junction {
    JunctionKind kind = JunctionKind::node;
    std::vector<Branch> branches;
};

struct EllipticSymbol {
    std::string j_tag = "generic";  // "0", "1728" or "generic"
    int aut_order = 2;
};

EllipticSymbol elliptic_symbol(const std::string& j_tag);

struct StabilizerDecoration {
    FgAbelianGroup group;
    std::vector<DiagonalAutomorphism> generators;
};

struct CurveModel {
    KodairaCurveType shape;
    std::vector<Component> components;
    std::vector<Junction> junctions;
    std::optional<EllipticSymbol> elliptic;
    std::optional<StabilizerDecoration> stabilizer;
    std::size_t torsion_rank = 2;

    int aut_order() const { return elliptic ? elliptic->aut_order : 1; }
    TorsionModule torsion() const { return {torsion_rank}; }
    std::size_t size() const { return components.size(); }
    bool is_cycle() const { return shape.is_semistable() && !elliptic; }
};

CurveModel cycle_model(std::int64_t n, std::size_t torsion_rank = 2);
CurveModel elliptic_model(const EllipticSymbol& symbol, std::size_t torsion_rank = 2);
// I_R^*; for R = 0 the j tag picks the layout of the four tails on the center.
CurveModel star_model(std::int64_t r, std::size_t torsion_rank = 2, const std::string& j_tag = "generic");
CurveModel curve_model(const KodairaCurveType& shape, const std::string& j_tag = "generic",
                       std::size_t torsion_rank = 2);

std::size_t component_index(const CurveModel& c, const std::string& label);

DiagonalAutomorphism identity_automorphism(const CurveModel& c);
DiagonalAutomorphism translation(const CurveModel& c, const TorsionPoint& a);
// a o b
DiagonalAutomorphism compose(const CurveModel& c, const DiagonalAutomorphism& a, const DiagonalAutomorphism& b);
DiagonalAutomorphism power(const CurveModel& c, const DiagonalAutomorphism& a, std::int64_t k);
bool is_identity(const CurveModel& c, const DiagonalAutomorphism& a);
bool is_curve_identity(const CurveModel& c, const CurveAutomorphism& a);

// Empty when the automorphism respects the configuration (multiplicities, kinds, junctions).
std::vector<std::string> check_automorphism(const CurveModel& c, const DiagonalAutomorphism& a);
// The permutation a induces on junctions; throws if a does not respect them.
std::vector<std::size_t> junction_permutation(const CurveModel& c, const CurveAutomorphism& a);

std::int64_t order(const CurveModel& c, const DiagonalAutomorphism& a);

struct FixedMark {
    enum class Kind { component, point, junction };
    Kind kind = Kind::component;
    std::size_t index = 0;  // component or junction index
    std::optional<ChartPoint> point;
    std::optional<std::array<Rational, 2>> elliptic_point;
    std::string to_string(const CurveModel& c) const;
};

std::vector<FixedMark> fixed_locus(const CurveModel& c, const DiagonalAutomorphism& a);

struct FreeCheck {
    bool free = true;
    std::optional<std::int64_t> offending_power;        // single automorphism
    std::vector<std::int64_t> offending_exponents;      // group: exponents of the generators
};

FreeCheck is_free(const CurveModel& c, const DiagonalAutomorphism& a);
// Every nontrivial element of the group generated acts freely.
FreeCheck is_free_group(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators);
// Distinct elements of the group generated.
std::vector<DiagonalAutomorphism> group_elements(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators);

// The standard action of G on C for the untangled structure; G must be admissible for the shape.
CurveModel decorate(const CurveModel& c, const FgAbelianGroup& g);
// Records a G-decoration from explicit curve-side maps tau and torsion-side maps sigma.
CurveModel stabilizer_quotient(const CurveModel& c, const FgAbelianGroup& g, const std::vector<CurveAutomorphism>& tau,
                               const std::vector<TorsionPoint>& sigma);

// generators[0] is the inertia generator; further generators join the stabilizer decoration.
KodairaType quotient_type(const CurveModel& c, const std::vector<DiagonalAutomorphism>& generators, std::int64_t m);

// Searches chart maps on `center` (both forms, exponents in (1/12)Z) sending the branch toward
// neighbor i to the branch toward target[i]; neighbors are components meeting the center.
std::optional<ChartMap> realize_center_map(const CurveModel& c, std::size_t center,
                                           const std::vector<std::size_t>& neighbor_perm);
// Curve automorphism induced by a permutation of components: charts found by search, starting from
// components of highest multiplicity. Throws if no chart assignment respects the configuration.
CurveAutomorphism realize_permutation(const CurveModel& c, const std::vector<std::size_t>& perm);

}  // namespace kodaira
