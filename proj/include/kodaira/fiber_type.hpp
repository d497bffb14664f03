#pragma once

#include "kodaira/abelian_group.hpp"
#include "kodaira/fiber_config.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kodaira {

// nullopt stands for infinite order.
using ShearOrder = std::optional<std::int64_t>;

struct Semistable {
    std::int64_t r = 0;
    ShearOrder shear_order = 1;

    // Shear is carried along but is not part of the type.
    bool operator==(const Semistable& other) const { return r == other.r; }
};

struct Unstable {
    KodairaCurveType base;
    FgAbelianGroup stabilizer;
    bool operator==(const Unstable&) const = default;
};

enum class ExceptionalTag { I0StarA, I0StarA2, I0StarB, I0StarC, IVA, IVStarA };

std::string to_string(ExceptionalTag tag);
std::optional<ExceptionalTag> parse_exceptional_tag(const std::string& text);
const std::vector<ExceptionalTag>& all_exceptional_tags();

namespace sub {
struct I0 {
    bool operator==(const I0&) const = default;
};
struct I0Plus {
    std::int64_t d = 2;
    bool operator==(const I0Plus&) const = default;
};
struct IRk {
    std::int64_t k = 1;
    std::int64_t R = 1;
    bool operator==(const IRk&) const = default;
};
struct IRPlus {
    std::int64_t R = 1;
    FgAbelianGroup stabilizer;
    bool operator==(const IRPlus&) const = default;
};
struct IRMinus {
    std::int64_t R = 1;
    FgAbelianGroup stabilizer;
    bool operator==(const IRMinus&) const = default;
};
struct UnstableLike {
    KodairaCurveType base;
    FgAbelianGroup stabilizer;
    bool operator==(const UnstableLike&) const = default;
};
struct Exceptional {
    ExceptionalTag tag = ExceptionalTag::I0StarA;
    bool operator==(const Exceptional&) const = default;
};
}  // namespace sub

using MultipleSubtype =
    std::variant<sub::I0, sub::I0Plus, sub::IRk, sub::IRPlus, sub::IRMinus, sub::UnstableLike, sub::Exceptional>;

struct Multiple {
    std::int64_t m = 2;
    MultipleSubtype subtype;
    bool operator==(const Multiple&) const = default;
};

struct KodairaType {
    std::variant<Semistable, Unstable, Multiple> value;

    KodairaType() : value(Semistable{}) {}
    KodairaType(Semistable s) : value(s) {}
    KodairaType(Unstable u) : value(std::move(u)) {}
    KodairaType(Multiple m) : value(std::move(m)) {}

    static KodairaType semistable(std::int64_t r, ShearOrder shear = 1) { return Semistable{r, shear}; }
    static KodairaType unstable(KodairaCurveType base, FgAbelianGroup g = {}) { return Unstable{base, std::move(g)}; }
    static KodairaType multiple(std::int64_t m, MultipleSubtype s) { return Multiple{m, std::move(s)}; }

    bool is_semistable() const { return std::holds_alternative<Semistable>(value); }
    bool is_unstable() const { return std::holds_alternative<Unstable>(value); }
    bool is_multiple() const { return std::holds_alternative<Multiple>(value); }
    const Semistable& as_semistable() const { return std::get<Semistable>(value); }
    const Unstable& as_unstable() const { return std::get<Unstable>(value); }
    const Multiple& as_multiple() const { return std::get<Multiple>(value); }

    bool operator==(const KodairaType&) const = default;
};

// Canonical string grammar, see docs/type-grammar.md.
std::string to_string(const KodairaType& t);
std::string subtype_string(std::int64_t m, const MultipleSubtype& s);
KodairaType parse_kodaira_type(const std::string& text);

// Stabilizer of order n attached to a base curve type, as written after the slash.
FgAbelianGroup stabilizer_from_order(const KodairaCurveType& base, std::int64_t order);
// For I_R^+ with m = 2k the relevant star type is I_r* with r = R/k.
FgAbelianGroup plus_stabilizer_from_order(std::int64_t m, std::int64_t R, std::int64_t order);

// Neron component group of the untangled fiber with curve C of the given type.
FgAbelianGroup untangled_component_group(const KodairaCurveType& base);
// Stabilizers G allowed for an unstable curve type: the subgroups of the untangled component group.
std::vector<FgAbelianGroup> admissible_stabilizers(const KodairaCurveType& base);
bool is_admissible_stabilizer(const KodairaCurveType& base, const FgAbelianGroup& g);

// Congruence on the multiplicity for unstable-like and exceptional multiple fibers.
bool multiplicity_allowed(const KodairaCurveType& base, std::int64_t m);
bool multiplicity_allowed(ExceptionalTag tag, std::int64_t m);
std::string multiplicity_condition(const KodairaCurveType& base);
std::string multiplicity_condition(ExceptionalTag tag);

std::vector<std::string> validate(const KodairaType& t);
inline bool is_valid(const KodairaType& t) { return validate(t).empty(); }

FgAbelianGroup neron_component_group(const KodairaType& t);

KodairaCurveType conjugate(const KodairaCurveType& base);
KodairaType conjugate(const KodairaType& t);
bool is_isogenous(const KodairaType& a, const KodairaType& b);

struct UntangleResult {
    KodairaType untangled;
    FgAbelianGroup stabilizer;      // G
    FgAbelianGroup pi0_untangled;   // pi0 of the untangled fiber
    FgAbelianGroup pi0;             // pi0 of the original fiber
};

UntangleResult untangle(const KodairaType& t);

std::vector<std::pair<KodairaType, KodairaType>> dual_pairs(std::int64_t max_r);
// The stated dual of t, if any.
std::optional<KodairaType> dual_of(const KodairaType& t);
bool dual_component_check(const KodairaType& t);

enum class LinearPart { zero, Gm, Ga };
std::string to_string(LinearPart l);

struct NeronFiberData {
    LinearPart linear_part = LinearPart::zero;
    std::int64_t abelian_dim = 0;
    FgAbelianGroup pi0;
    ShearOrder shear_order;  // only for Gm
    bool split = false;      // Ga case: neutral component is Ga x A
};

// Central fiber data of P for a fibration of relative dimension n.
NeronFiberData neron_fiber_data(const KodairaType& t, std::int64_t relative_dimension);

// Every unstable type with admissible stabilizer, stars with r <= max_r.
std::vector<KodairaType> all_unstable_types(std::int64_t max_r);

}  // namespace kodaira
