#pragma once

#include "kodaira/abelian_group.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

enum class CurveFamily { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

struct KodairaCurveType {
    CurveFamily family = CurveFamily::I;
    std::int64_t r = 0;  // only meaningful for I and IStar

    static KodairaCurveType I(std::int64_t r) { return {CurveFamily::I, r}; }
    static KodairaCurveType IStar(std::int64_t r) { return {CurveFamily::IStar, r}; }
    static KodairaCurveType II() { return {CurveFamily::II, 0}; }
    static KodairaCurveType III() { return {CurveFamily::III, 0}; }
    static KodairaCurveType IV() { return {CurveFamily::IV, 0}; }
    static KodairaCurveType IVStar() { return {CurveFamily::IVStar, 0}; }
    static KodairaCurveType IIIStar() { return {CurveFamily::IIIStar, 0}; }
    static KodairaCurveType IIStar() { return {CurveFamily::IIStar, 0}; }

    bool is_semistable() const { return family == CurveFamily::I; }
    bool is_unstable() const { return family != CurveFamily::I; }
    bool is_integral() const;  // I0, I1, II
    bool is_star_chain() const { return family == CurveFamily::IStar; }
    std::string name() const;  // "I5", "I3*", "IV*"

    auto operator<=>(const KodairaCurveType&) const = default;
    bool operator==(const KodairaCurveType&) const = default;
};

// Parses "I5", "II", "I3*", "IV*", ...; throws DomainError.
KodairaCurveType parse_curve_type(const std::string& text);
// Every curve type, semistable ones with 0 <= r <= max_r and stars with 0 <= r <= max_r.
std::vector<KodairaCurveType> all_curve_types(std::int64_t max_r);

// How the components meet. Transverse: distinct transverse intersection points, one per unit of
// pairing. Concurrent: every component passes through a single common point. The three integral
// marks stand for the one-component shapes outside the reducible calculus.
enum class Incidence { transverse, concurrent, smooth, nodal, cuspidal };

std::string to_string(Incidence incidence);
Incidence parse_incidence(const std::string& text);

struct FiberConfiguration {
    std::vector<std::int64_t> multiplicities;
    IntMatrix pairing;
    std::vector<std::string> labels;
    Incidence incidence = Incidence::transverse;
    std::optional<std::string> tag;

    std::size_t size() const { return multiplicities.size(); }
};

// Throws DomainError if the pairing is not symmetric with diagonal -2 and nonnegative off-diagonal
// entries, or if multiplicities are missing or nonpositive.
void require_well_formed(const FiberConfiguration& c);

bool check_balanced(const FiberConfiguration& c);
bool is_connected(const FiberConfiguration& c);
std::int64_t configuration_multiplicity(const FiberConfiguration& c);

// ker(sum a_i x_i) / im(q): the component-group shadow of a balanced configuration.
FgAbelianGroup configuration_discriminant(const FiberConfiguration& c);

struct CanonicalForm {
    std::vector<std::int64_t> encoding;
    std::vector<std::size_t> order;  // order[k] = original index placed at position k

    bool operator==(const CanonicalForm& other) const { return encoding == other.encoding; }
};

// Lexicographically least encoding over all vertex orderings; position k contributes
// (a_k, 2 - q(0,k), ..., 2 - q(k-1,k)).
CanonicalForm canonical_form(const FiberConfiguration& c);
FiberConfiguration apply_ordering(const FiberConfiguration& c, const std::vector<std::size_t>& order);

constexpr int kMaxEnumeratedComponents = 12;

// All connected balanced configurations up to isomorphism with at most max_components components,
// including the concurrent variants. Each result carries its Kodaira tag.
std::vector<FiberConfiguration> enumerate_balanced(int max_components);

// The single-point variant of a reduced configuration when its arithmetic genus is 1.
std::optional<FiberConfiguration> concurrent_variant(const FiberConfiguration& c);

KodairaCurveType classify_config(const FiberConfiguration& c);
FiberConfiguration shape_configuration(const KodairaCurveType& t);
IntMatrix intersection_matrix(const KodairaCurveType& t);
// The cycle matrix of Ã_{r-1}; r = 1 gives [[0]].
IntMatrix cycle_matrix(std::int64_t r);

}  // namespace kodaira
