#include "doctest.h"

#include "kodaira/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

using namespace kodaira;

namespace {

Json table_json(const std::string& id) {
    Json rows = Json::array();
    for (const auto& e : emit_table(id)) rows.push_back(e.row);
    return Json{{"table", id}, {"rows", rows}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("table ids") {
    CHECK(table_ids() == std::vector<std::string>{"T1-nonmultiple", "T2-multiple", "T3-pi0", "T4-exceptional",
                                                  "TG-stabilizers", "T-reduction"});
    CHECK_THROWS_AS(emit_table("T9"), DomainError);
}

TEST_CASE("tables are deterministic and match the golden files") {
    for (const auto& id : table_ids()) {
        INFO(id);
        const auto once = table_json(id);
        CHECK(once == table_json(id));
        const auto golden = read_file(std::string(KODAIRA_GOLDEN_DIR) + "/" + id + ".json");
        REQUIRE_FALSE(golden.empty());
        CHECK(Json::parse(golden) == once);
        for (const auto& e : emit_table(id)) CHECK(e.table_id == id);
    }
}

TEST_CASE("component group table cells") {
    const std::map<std::string, std::string> want{
        {"I_r", "Z/r"},      {"II", "0"},          {"III", "Z/2"},      {"III/2", "0"},          {"IV", "Z/3"},
        {"IV/3", "0"},       {"II*", "0"},         {"III*", "Z/2"},     {"III*/2", "0"},         {"IV*", "Z/3"},
        {"IV*/3", "0"},      {"I_ev*", "Z/2 + Z/2"}, {"I_ev*/2", "Z/2"}, {"I_ev*/4", "0"},       {"I_odd*", "Z/4"},
        {"I_odd*/2", "Z/2"}, {"I_odd*/4", "0"}};
    const auto rows = emit_table("T3-pi0");
    CHECK(rows.size() == want.size());
    for (const auto& e : rows) {
        const auto type = e.row["type"].get<std::string>();
        INFO(type);
        REQUIRE(want.count(type));
        CHECK(e.row["pi0"] == want.at(type));
        for (const auto& c : e.row["checked"])
            CHECK(neron_component_group(parse_kodaira_type(c["type"].get<std::string>())).to_string() == c["pi0"].get<std::string>());
    }
}

TEST_CASE("stabilizer table") {
    const std::map<std::string, std::vector<std::string>> want{
        {"II", {"0"}},          {"III", {"0", "Z/2"}},  {"IV", {"0", "Z/3"}},   {"I_r* (even r)", {"0", "Z/2", "Z/2 + Z/2"}},
        {"II*", {"0"}},         {"III*", {"0", "Z/2"}}, {"IV*", {"0", "Z/3"}}, {"I_r* (odd r)", {"0", "Z/2", "Z/4"}}};
    const auto rows = emit_table("TG-stabilizers");
    CHECK(rows.size() == want.size());
    for (const auto& e : rows) CHECK(e.row["stabilizers"].get<std::vector<std::string>>() == want.at(e.row["curve"].get<std::string>()));
}

TEST_CASE("reduction table") {
    const std::map<std::string, std::int64_t> ord{{"II", 6}, {"II*", 6}, {"III", 4}, {"III*", 4}, {"IV", 3}, {"IV*", 3}, {"I0*", 2}};
    for (const auto& e : emit_table("T-reduction")) {
        const auto type = e.row["type"].get<std::string>();
        INFO(type);
        if (ord.count(type)) {
            CHECK(e.row["ord_psi"] == ord.at(type));
            CHECK(e.row["reduced"] == "I0");
        } else {
            const auto t = parse_kodaira_type(type);
            const std::int64_t d = e.row["degree"].get<std::int64_t>();
            CHECK(e.row["ord_psi"] == d);
            CHECK(e.row["reduced"] == "I" + std::to_string(d * t.as_unstable().base.r));
        }
    }
}

TEST_CASE("multiple fiber table rows are witnessed") {
    for (const auto& e : emit_table("T2-multiple")) {
        INFO(e.row.dump());
        CHECK(e.row["m_values"].size() >= 2);
        CHECK(e.row["witnesses"].size() >= 2);
    }
    for (const auto& e : emit_table("T4-exceptional")) {
        INFO(e.row.dump());
        CHECK(e.row["m_values"].size() >= 2);
        CHECK(e.row["recipe"]["pass"] == true);
    }
}

TEST_CASE("recipes") {
    const auto recipes = standard_recipes();
    CHECK(recipes.size() >= 9);
    for (const auto& r : recipes) {
        INFO(r.id);
        const auto run = run_recipe(r);
        CHECK(run.pass);
        CHECK(run.computed == r.expected);
        CHECK(to_json(r)["id"] == r.id);
    }
    CHECK_THROWS_AS(find_recipe("nope"), DomainError);
    CHECK_THROWS_AS(recipe_m_irk(1, 1, 1), DomainError);
    CHECK_THROWS_AS(recipe_ir_star(2, 1), DomainError);
}

TEST_CASE("recipes reject non-free inertia") {
    auto r = find_recipe("IRplus");
    r.generators.front().a = TorsionPoint::zero(r.torsion_rank);
    CHECK_THROWS_WITH_AS(run_recipe(r), doctest::Contains("fixed point"), DomainError);
}
