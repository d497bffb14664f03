#pragma once

#include "kodaira/fiber_type.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

enum class PullbackCaseId { i, ii, iii, iv, v };
std::string to_string(PullbackCaseId c);

struct PullbackCase {
    PullbackCaseId id = PullbackCaseId::i;
    LinearPart p_linear = LinearPart::zero;
    LinearPart q_linear = LinearPart::zero;
};

// P is the fibration's t-automorphism scheme, Q its pullback along a base change.
PullbackCase classify_pullback(LinearPart p_linear, LinearPart q_linear);

struct BaseChangeResult {
    KodairaType type;
    std::int64_t inertia_order = 1;
    FgAbelianGroup stabilizer;  // carried along from a tangled input
    std::vector<std::string> notes;
};

BaseChangeResult base_change(const KodairaType& t, std::int64_t d);

// Order of the inertia automorphism on the minimal semistable base change (2, 3, 4 or 6 for
// the elliptic families, 2 for I_r* with r >= 1).
std::int64_t reduction_degree(const KodairaCurveType& base);

struct SemistableReduction {
    std::int64_t degree = 1;
    KodairaType reduced;
    std::string inertia_formula;
    FgAbelianGroup stabilizer;
    bool twisted = false;  // central fiber of the reduction is a nontrivial G-quotient
};

SemistableReduction semistable_reduction(const KodairaType& t);

struct MultipleCandidate {
    KodairaType type;
    std::string constraint;
};

// Every multiple type with t-automorphism type p and multiplicity m, with the congruence that admits it.
// The j tag ("0", "1728", "generic") filters the exceptional rows, which need j = 1728 (I0*-a, I0*-a/2,
// I0*-b) or j = 0 (I0*-c, IV-a, IV*-a).
std::vector<MultipleCandidate> multiple_fiber_candidates(const KodairaType& p, std::int64_t m,
                                                         const std::optional<std::string>& j_tag = std::nullopt);
std::vector<KodairaType> multiple_fiber_types(const KodairaType& p, std::int64_t m,
                                              const std::optional<std::string>& j_tag = std::nullopt);

// The t-automorphism types P for which the exceptional tag occurs.
std::vector<KodairaType> exceptional_p_types(ExceptionalTag tag);
std::string exceptional_j_tag(ExceptionalTag tag);

// Multiplicity check for a multiple subtype; true for subtypes that carry no congruence.
bool multiplicity_allowed(const MultipleSubtype& s, std::int64_t m);

}  // namespace kodaira
