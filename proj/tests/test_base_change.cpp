#include "doctest.h"

#include "kodaira/base_change.hpp"
#include "kodaira/catalog.hpp"

#include <numeric>
#include <set>

using namespace kodaira;

namespace {

KodairaType T(const std::string& s) { return parse_kodaira_type(s); }

std::set<std::string> strings(const std::vector<KodairaType>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(to_string(t));
    return out;
}

// Inertia order of the minimal reduction, per shape family.
std::int64_t inertia_of(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return 6;
        case CurveFamily::III:
        case CurveFamily::IIIStar: return 4;
        case CurveFamily::IV:
        case CurveFamily::IVStar: return 3;
        default: return 2;
    }
}

// Exceptional rows as printed: P types (by base name and stabilizer order) and the residue condition.
struct ExceptionalRow {
    std::string name;
    std::set<std::string> p;
    std::int64_t modulus, residue_a, residue_b;
};

const std::vector<ExceptionalRow>& exceptional_rows() {
    static const std::vector<ExceptionalRow> rows{
        {"I0*-a", {"III", "III*"}, 4, 2, 2},   {"I0*-a/2", {"III/2", "III*/2"}, 4, 2, 2},
        {"I0*-b", {"III/2", "III*/2"}, 4, 2, 2}, {"I0*-c", {"II", "II*"}, 6, 3, 3},
        {"IV-a", {"II", "II*"}, 6, 2, 4},      {"IV*-a", {"II", "II*"}, 6, 2, 4},
    };
    return rows;
}

}  // namespace

TEST_CASE("classify_pullback") {
    CHECK(classify_pullback(LinearPart::zero, LinearPart::zero).id == PullbackCaseId::i);
    CHECK(classify_pullback(LinearPart::Ga, LinearPart::zero).id == PullbackCaseId::ii);
    CHECK(classify_pullback(LinearPart::Gm, LinearPart::Gm).id == PullbackCaseId::iii);
    CHECK(classify_pullback(LinearPart::Ga, LinearPart::Gm).id == PullbackCaseId::iv);
    CHECK(classify_pullback(LinearPart::Ga, LinearPart::Ga).id == PullbackCaseId::v);
    for (auto [p, q] : std::vector<std::pair<LinearPart, LinearPart>>{{LinearPart::Gm, LinearPart::Ga},
                                                                     {LinearPart::zero, LinearPart::Gm},
                                                                     {LinearPart::zero, LinearPart::Ga},
                                                                     {LinearPart::Gm, LinearPart::zero}})
        CHECK_THROWS_WITH_AS(classify_pullback(p, q), doctest::Contains("Edixhoven monotonicity"), DomainError);
}

TEST_CASE("base_change examples") {
    auto r = base_change(T("I3"), 2);
    CHECK(r.type == T("I6"));
    CHECK(r.inertia_order == 2);
    r = base_change(T("II"), 6);
    CHECK(r.type == T("I0"));
    CHECK(r.inertia_order == 6);
    r = base_change(T("I2*"), 2);
    CHECK(r.type == T("I4"));
    CHECK(r.inertia_order == 2);
    CHECK(base_change(T("I2*"), 4).type == T("I8"));
    CHECK(base_change(T("I0*"), 4).inertia_order == 2);
    CHECK(base_change(T("I0"), 5).type == T("I0"));

    r = base_change(T("III/2"), 4);
    CHECK(r.type == T("I0"));
    CHECK(r.stabilizer == FgAbelianGroup::cyclic(2));
    CHECK_FALSE(r.notes.empty());

    CHECK_THROWS_WITH_AS(base_change(T("II"), 5), doctest::Contains("reduction degree not covered"), DomainError);
    CHECK_THROWS_AS(base_change(T("I1*"), 3), DomainError);
    CHECK_THROWS_AS(base_change(T("I3"), 0), DomainError);
    CHECK_THROWS_AS(base_change(T("2*I0"), 2), DomainError);
}

TEST_CASE("semistable_reduction examples") {
    auto s = semistable_reduction(T("III*"));
    CHECK(s.degree == 4);
    CHECK(s.reduced == T("I0"));
    s = semistable_reduction(T("I0*"));
    CHECK(s.degree == 2);
    CHECK(s.reduced == T("I0"));
    CHECK_FALSE(s.twisted);
    s = semistable_reduction(T("I3*/2"));
    CHECK(s.degree == 2);
    CHECK(s.reduced == T("I6"));
    CHECK(s.twisted);
    CHECK_THROWS_WITH_AS(semistable_reduction(T("I4")), doctest::Contains("already semistable"), DomainError);
}

TEST_CASE("multiple_fiber_types examples") {
    CHECK(strings(multiple_fiber_types(T("I1"), 2)) == std::set<std::string>{"2*I1^1", "2*I2^2"});
    CHECK(strings(multiple_fiber_types(T("II"), 5)) == std::set<std::string>{"5*II"});
    CHECK(strings(multiple_fiber_types(T("II"), 2)) == std::set<std::string>{"2*IV-a", "2*IV*-a"});
    CHECK(strings(multiple_fiber_types(T("III"), 2)) == std::set<std::string>{"2*I0*-a"});
    CHECK(strings(multiple_fiber_types(T("I0"), 7)) == std::set<std::string>{"7*I0"});
    CHECK(strings(multiple_fiber_types(T("II"), 2, "generic")).empty());
    CHECK(strings(multiple_fiber_types(T("II"), 2, "0")) == std::set<std::string>{"2*IV-a", "2*IV*-a"});
    CHECK_THROWS_WITH_AS(multiple_fiber_types(T("I1"), 1), doctest::Contains("not multiple"), DomainError);
}

TEST_CASE("multiplicity_allowed examples") {
    CHECK(multiplicity_allowed(sub::UnstableLike{KodairaCurveType::II(), {}}, 7));
    CHECK_FALSE(multiplicity_allowed(sub::UnstableLike{KodairaCurveType::IV(), {}}, 3));
    CHECK(multiplicity_allowed(sub::Exceptional{ExceptionalTag::I0StarC}, 9));
    CHECK(multiplicity_allowed(sub::I0{}, 9));
}

TEST_CASE("property: semistable base change composes") {
    for (std::int64_t r = 0; r <= 6; ++r)
        for (std::int64_t d1 = 1; d1 <= 6; ++d1)
            for (std::int64_t d2 = 1; d2 <= 6; ++d2) {
                const auto once = base_change(T("I" + std::to_string(r)), d1 * d2).type;
                CHECK(base_change(base_change(T("I" + std::to_string(r)), d1).type, d2).type == once);
                CHECK(once == KodairaType::semistable(r * d1 * d2));
            }
}

TEST_CASE("property: component groups grow by the degree under semistable base change") {
    for (std::int64_t r = 1; r <= 8; ++r)
        for (std::int64_t d = 1; d <= 6; ++d) {
            const auto q = base_change(KodairaType::semistable(r), d);
            CHECK(*neron_component_group(q.type).order() == d * r);
            CHECK(q.inertia_order == d);
        }
}

TEST_CASE("property: minimal reductions match the inertia order of the shape") {
    for (const auto& t : all_unstable_types(6)) {
        const auto& u = t.as_unstable();
        const auto s = semistable_reduction(t);
        CHECK(s.degree == inertia_of(u.base));
        CHECK(s.stabilizer == u.stabilizer);
        CHECK(s.twisted == !u.stabilizer.is_trivial());
        const auto b = base_change(t, s.degree);
        CHECK(b.type == s.reduced);
        CHECK(b.inertia_order % s.degree == 0);
        CHECK(s.reduced == KodairaType::semistable(u.base.family == CurveFamily::IStar ? 2 * u.base.r : 0));
    }
}

TEST_CASE("property: every multiple candidate validates and the exceptional rows match their table") {
    std::vector<KodairaType> ps;
    for (std::int64_t r = 0; r <= 4; ++r) ps.push_back(KodairaType::semistable(r));
    for (const auto& t : all_unstable_types(4)) ps.push_back(t);
    for (const auto& p : ps)
        for (std::int64_t m = 2; m <= 12; ++m) {
            const auto got = multiple_fiber_types(p, m);
            std::set<std::string> exceptional_got, exceptional_want;
            for (const auto& t : got) {
                INFO(to_string(p) << " m=" << m << " -> " << to_string(t));
                CHECK(validate(t).empty());
                CHECK(t.as_multiple().m == m);
                if (std::holds_alternative<sub::Exceptional>(t.as_multiple().subtype)) exceptional_got.insert(to_string(t));
                if (const auto* ul = std::get_if<sub::UnstableLike>(&t.as_multiple().subtype); ul && ul->base.family != CurveFamily::IStar)
                    CHECK(std::gcd(inertia_of(ul->base), m) == 1);
            }
            for (const auto& row : exceptional_rows()) {
                const auto residue = m % row.modulus;
                if (row.p.count(to_string(p)) && (residue == row.residue_a || residue == row.residue_b))
                    exceptional_want.insert(std::to_string(m) + "*" + row.name);
            }
            INFO(to_string(p) << " m=" << m);
            CHECK(exceptional_got == exceptional_want);
        }
}

TEST_CASE("property: recipe quotients are admissible multiple types") {
    for (const auto& r : standard_recipes()) {
        const auto run = run_recipe(r);
        const auto allowed = multiple_fiber_types(r.p_type, r.m, r.j_tag);
        INFO(r.id);
        CHECK(std::find(allowed.begin(), allowed.end(), run.computed) != allowed.end());
    }
}
