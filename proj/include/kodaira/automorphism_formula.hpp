#pragma once

#include "kodaira/group_actions.hpp"

#include <string>
#include <vector>

namespace kodaira {

// Coordinate notation for the restricted diagonal automorphisms of C x A.
//
//   cycle:       (i,z,y) -> (-i, z^-1 * zeta^i * eps, y+a) ; zeta=1/2, eps=1/4, a=(1/4, 0)
//   elliptic:    (x,y) -> (w^1 * x + t, y+a) ; t=(1/2, 0), a=(1/6, 0)
//   star:        (j,z,y) -> (j, u^j * z, y+a) ; u=2/3, a=(1/3, 0)
//   permutation: (x,y) -> (sigma(x), y+a) ; sigma=[1,0,2,3,4], a=(1/2, 0)
//
// zeta, eps, u are exponents in Q/Z; zeta and eps are listed only when nonzero, t only when nonzero.
struct AutomorphismFormula {
    enum class Form { cycle, elliptic, star, permutation };
    Form form = Form::cycle;

    // cycle: i -> sign*i + shift, z -> zeta^i * eps * z^(+-1)
    int sign = 1;
    std::int64_t shift = 0;
    bool inverting = false;
    Rational zeta = 0;
    Rational eps = 0;

    // elliptic: x -> w^e x + t
    std::int64_t e = 0;
    std::array<Rational, 2> t{0, 0};

    // star: F_j -> u^j z, tails fixed
    Rational u = 0;

    // permutation: components permuted, charts found by search
    std::vector<std::size_t> sigma;

    TorsionPoint a = TorsionPoint::zero(2);

    bool operator==(const AutomorphismFormula&) const = default;
};

std::string to_string(const AutomorphismFormula& f);
AutomorphismFormula parse_automorphism(const std::string& text);

// Builds the automorphism on a model of matching shape.
DiagonalAutomorphism realize(const AutomorphismFormula& f, const CurveModel& c);

}  // namespace kodaira
