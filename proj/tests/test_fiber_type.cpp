#include "doctest.h"

#include "generators.hpp"

#include "kodaira/fiber_config.hpp"
#include "kodaira/fiber_type.hpp"

using namespace kodaira;

namespace {

KodairaType T(const std::string& s) { return parse_kodaira_type(s); }
FgAbelianGroup G(const std::string& s) { return FgAbelianGroup::parse(s); }

bool has_violation(const KodairaType& t, const std::string& needle) {
    for (const auto& v : validate(t))
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("component group examples") {
    CHECK(neron_component_group(T("I5")) == G("Z/5"));
    CHECK(neron_component_group(T("I3*")) == G("Z/4"));
    CHECK(neron_component_group(T("III*/2")).is_trivial());
    CHECK(neron_component_group(T("I0")).is_trivial());
    CHECK_THROWS_AS(neron_component_group(T("3*I0")), DomainError);
}

TEST_CASE("component group table") {
    const std::vector<std::pair<std::string, std::string>> cells{
        {"I1", "0"},           {"I7", "Z/7"},       {"II", "0"},         {"III", "Z/2"},   {"III/2", "0"},
        {"IV", "Z/3"},         {"IV/3", "0"},       {"II*", "0"},        {"III*", "Z/2"},  {"III*/2", "0"},
        {"IV*", "Z/3"},        {"IV*/3", "0"},      {"I4*", "(Z/2)^2"},  {"I4*/2", "Z/2"}, {"I4*/4", "0"},
        {"I5*", "Z/4"},        {"I5*/2", "Z/2"},    {"I5*/4", "0"},      {"I0*", "(Z/2)^2"}};
    for (const auto& [t, g] : cells) {
        INFO(t);
        CHECK(neron_component_group(T(t)) == G(g));
    }
}

TEST_CASE("conjugate and isogeny") {
    CHECK(conjugate(T("III/2")) == T("III*/2"));
    CHECK(conjugate(T("II")) == T("II*"));
    CHECK(conjugate(T("I4*")) == T("I4*"));
    CHECK_THROWS_AS(conjugate(T("I3")), DomainError);
    CHECK(is_isogenous(T("I2*/2"), T("I2*/4")));
    CHECK_FALSE(is_isogenous(T("III"), T("III*")));
    CHECK(is_isogenous(T("IV"), T("IV/3")));
    CHECK_THROWS_AS(is_isogenous(T("I2"), T("I2")), DomainError);
}

TEST_CASE("untangle examples") {
    auto u = untangle(T("IV/3"));
    CHECK(u.untangled == T("IV"));
    CHECK(u.stabilizer == G("Z/3"));
    CHECK(u.pi0_untangled == G("Z/3"));
    CHECK(u.pi0.is_trivial());

    u = untangle(T("I2*/2"));
    CHECK(u.untangled == T("I2*"));
    CHECK(u.pi0_untangled == G("(Z/2)^2"));
    CHECK(u.pi0 == G("Z/2"));

    u = untangle(T("II"));
    CHECK(u.stabilizer.is_trivial());
    CHECK(u.pi0.is_trivial());
    CHECK_THROWS_AS(untangle(T("I4")), DomainError);
}

TEST_CASE("dual pairs") {
    const auto pairs = dual_pairs(7);
    auto has = [&](const std::string& a, const std::string& b) {
        for (const auto& [x, y] : pairs)
            if (x == T(a) && y == T(b)) return true;
        return false;
    };
    CHECK(has("I7", "I7"));
    CHECK(has("I3*/2", "I6*/2"));
    CHECK_FALSE(has("I2*/2", "I4*/2"));
    for (const auto& [a, b] : pairs) CHECK(neron_component_group(a) == neron_component_group(b));
    for (const auto& [a, b] : pairs) CHECK(dual_component_check(a));
}

TEST_CASE("validate examples") {
    CHECK(has_violation(KodairaType::unstable(KodairaCurveType::II(), G("Z/2")), "II admits only trivial stabilizer"));
    CHECK(has_violation(KodairaType::multiple(6, sub::I0Plus{4}), "∤"));
    CHECK(validate(KodairaType::multiple(4, sub::IRk{2, 6})).empty());
    CHECK_FALSE(validate(KodairaType::multiple(3, sub::IRPlus{3, {}})).empty());
    CHECK_FALSE(validate(KodairaType::multiple(4, sub::IRMinus{2, G("Z/4")})).empty());
    CHECK_FALSE(validate(KodairaType::multiple(2, sub::UnstableLike{KodairaCurveType::IStar(2), {}})).empty());
    CHECK(validate(KodairaType::multiple(3, sub::UnstableLike{KodairaCurveType::IStar(3), {}})).empty());
    CHECK_FALSE(validate(KodairaType::multiple(4, sub::Exceptional{ExceptionalTag::I0StarA})).empty());
    CHECK_FALSE(validate(KodairaType::multiple(1, sub::I0{})).empty());
}

TEST_CASE("canonical string examples") {
    for (const std::string s : {"I5", "I3*", "IV*/3", "6*I0+", "4*I2^2", "2*I3+/2", "2*I0*-b", "4*I0+(d=2)", "2*I1-/2",
                                "5*II", "3*I3*/4", "6*I0*-a/2", "2*IV*-a", "I0"})
        CHECK(to_string(T(s)) == s);
    CHECK_THROWS_AS(T("I-1"), DomainError);
    CHECK_THROWS_AS(T("I2/2"), DomainError);
    CHECK_THROWS_AS(T("2*"), DomainError);
    // well-formed but inadmissible strings parse, and validate rejects them
    CHECK_FALSE(validate(T("1*I0")).empty());
    CHECK_FALSE(validate(T("II/2")).empty());
}

TEST_CASE("Neron fiber data") {
    const auto d = neron_fiber_data(T("III/2"), 2);
    CHECK(d.linear_part == LinearPart::Ga);
    CHECK(d.split);
    CHECK(d.abelian_dim == 1);
    CHECK(neron_fiber_data(T("I4"), 3).linear_part == LinearPart::Gm);
    CHECK(neron_fiber_data(T("I0"), 3).linear_part == LinearPart::zero);
}

TEST_CASE("property: parse(serialize(t)) = t for 200 random types") {
    gen::Source src(2718);
    for (int trial = 0; trial < 200; ++trial) {
        const auto t = src.kodaira_type();
        INFO(to_string(t));
        REQUIRE(validate(t).empty());
        CHECK(parse_kodaira_type(to_string(t)) == t);
    }
}

TEST_CASE("property: conjugate is an involution") {
    for (const auto& t : all_unstable_types(6)) CHECK(conjugate(conjugate(t)) == t);
}

TEST_CASE("property: untangle multiplies the component group order by |G|") {
    for (const auto& t : all_unstable_types(10)) {
        const auto u = untangle(t);
        CHECK(*u.pi0_untangled.order() == *u.stabilizer.order() * *u.pi0.order());
        CHECK(neron_component_group(u.untangled) == u.pi0_untangled);
    }
}

TEST_CASE("property: untangled component groups equal discriminant groups") {
    for (const auto& base : all_curve_types(10)) {
        if (base.is_integral()) continue;
        const auto g = base.is_semistable() ? neron_component_group(KodairaType::semistable(base.r))
                                            : neron_component_group(KodairaType::unstable(base));
        CHECK(g == configuration_discriminant(shape_configuration(base)));
    }
}

TEST_CASE("property: admissible stabilizers are exactly the listed ones") {
    const std::vector<FgAbelianGroup> small{G("0"), G("Z/2"), G("Z/3"), G("Z/4"), G("(Z/2)^2")};
    for (const auto& base : all_curve_types(8)) {
        if (base.is_semistable()) continue;
        std::vector<std::string> want;
        switch (base.family) {
            case CurveFamily::II:
            case CurveFamily::IIStar: want = {"0"}; break;
            case CurveFamily::III:
            case CurveFamily::IIIStar: want = {"0", "Z/2"}; break;
            case CurveFamily::IV:
            case CurveFamily::IVStar: want = {"0", "Z/3"}; break;
            default: want = base.r % 2 == 0 ? std::vector<std::string>{"0", "Z/2", "Z/2 + Z/2"} : std::vector<std::string>{"0", "Z/2", "Z/4"};
        }
        for (const auto& g : small) {
            const bool listed = std::find(want.begin(), want.end(), g.to_string()) != want.end();
            CHECK(is_admissible_stabilizer(base, g) == listed);
            CHECK(validate(KodairaType::unstable(base, g)).empty() == listed);
        }
    }
}
