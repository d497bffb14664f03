#pragma once

#include "kodaira/automorphism_formula.hpp"
#include "kodaira/base_change.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- recipes

struct Recipe {
    std::string id;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> parameters;  // name, exact value
    KodairaCurveType shape;
    std::string j_tag = "generic";
    std::size_t torsion_rank = 2;
    FgAbelianGroup stabilizer;                   // decoration of the curve before the inertia acts
    std::vector<AutomorphismFormula> generators;  // inertia generator first
    std::int64_t m = 1;
    KodairaType expected;
    KodairaType p_type;  // t-automorphism type of the quotient
};

struct RecipeRun {
    KodairaType computed;
    bool pass = false;
    std::int64_t inertia_order = 1;
};

// Parameterized constructions. Each checks the congruences its parameters must satisfy.
Recipe recipe_m_i0(std::int64_t m);
Recipe recipe_m_i0_plus(std::int64_t d, std::int64_t k);
Recipe recipe_m_irk(std::int64_t k, std::int64_t l, std::int64_t r);
Recipe recipe_ir_plus(std::int64_t k, std::int64_t r);
Recipe recipe_ir_minus(std::int64_t k, std::int64_t r, const Rational& eps = 0);
Recipe recipe_ir_star(std::int64_t m, std::int64_t r);
Recipe recipe_unstable_like(const KodairaType& p, std::int64_t m);
Recipe recipe_exceptional(ExceptionalTag tag, std::int64_t m);

// The standard suite, one or more per multiple family and every exceptional tag.
std::vector<Recipe> standard_recipes();
Recipe find_recipe(const std::string& id);

// Builds the model and automorphisms, checks freeness of the generated group, classifies the quotient.
// Throws DomainError naming the offending power when the inertia generator does not act freely.
RecipeRun run_recipe(const Recipe& r);

// ---------------------------------------------------------------- tables

struct CatalogEntry {
    std::string table_id;
    Json row;
};

const std::vector<std::string>& table_ids();
std::vector<CatalogEntry> emit_table(const std::string& table_id);

// Label of the family a type belongs to, as printed in the multiple-fiber tables.
std::string family_label(const KodairaType& t);

// ---------------------------------------------------------------- JSON helpers

Json to_json(const Recipe& r);
Json to_json(const CatalogEntry& e);

}  // namespace kodaira
