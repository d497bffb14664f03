#include "kodaira/catalog.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace kodaira;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error&) {
        throw UsageError(what + " is not valid JSON: " + text);
    }
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string inline_text(const Json& v) {
    if (!v.is_object()) return scalar_text(v);
    std::string out;
    for (const auto& [k, x] : v.items()) out += (out.empty() ? "" : "  ") + k + "=" + scalar_text(x);
    return out;
}

void print_text(const Json& j) {
    for (const auto& [k, v] : j.items()) {
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::cout << k << ":\n";
            for (const auto& row : v) std::cout << "  " << inline_text(row) << "\n";
        } else if (v.is_array()) {
            std::string line;
            for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar_text(x);
            std::cout << k << ": " << line << "\n";
        } else {
            std::cout << k << ": " << inline_text(v) << "\n";
        }
    }
}

Json config_json(const FiberConfiguration& c) {
    Json j;
    j["type"] = c.tag ? *c.tag : classify_config(c).name();
    j["multiplicities"] = c.multiplicities;
    Json rows = Json::array();
    for (const auto& row : c.pairing.to_rows()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_int64(x));
        rows.push_back(r);
    }
    j["pairing"] = rows;
    j["incidence"] = to_string(c.incidence);
    return j;
}

FiberConfiguration config_from_args(const std::string& pairing, const std::string& mults, const std::string& incidence) {
    const Json p = parse_json_arg(pairing, "pairing");
    const Json a = parse_json_arg(mults, "multiplicities");
    FiberConfiguration c;
    try {
        c.multiplicities = a.get<std::vector<std::int64_t>>();
        std::vector<std::vector<Integer>> rows;
        for (const auto& row : p) {
            std::vector<Integer> r;
            for (const auto& x : row) r.emplace_back(x.get<std::int64_t>());
            rows.push_back(std::move(r));
        }
        c.pairing = IntMatrix::from_rows(rows);
    } catch (const Json::exception&) {
        throw UsageError("pairing must be a list of integer lists and multiplicities a list of integers");
    }
    c.incidence = parse_incidence(incidence);
    require_well_formed(c);
    return c;
}

struct ActionArgs {
    std::string shape;
    std::vector<std::string> formulas;
    std::string j_tag = "generic";
    std::string stabilizer = "0";
};

struct BuiltAction {
    CurveModel model;
    std::vector<DiagonalAutomorphism> generators;
};

BuiltAction build_action(const ActionArgs& args) {
    BuiltAction b{curve_model(parse_curve_type(args.shape), args.j_tag), {}};
    const auto g = FgAbelianGroup::parse(args.stabilizer);
    if (!g.is_trivial()) b.model = decorate(b.model, g);
    for (const auto& f : args.formulas) b.generators.push_back(realize(parse_automorphism(f), b.model));
    if (b.generators.empty()) throw UsageError("at least one --formula is required");
    return b;
}

void add_action_options(CLI::App* cmd, ActionArgs& a) {
    cmd->add_option("shape", a.shape, "curve shape, e.g. I4, IV, I0*")->required();
    cmd->add_option("--formula", a.formulas, "automorphism formula, repeat for more generators; the first one is the inertia generator")->required()->allow_extra_args(false);
    cmd->add_option("--j", a.j_tag, "j-invariant tag of the elliptic curve: 0, 1728 or generic");
    cmd->add_option("--stabilizer", a.stabilizer, "Albanese stabilizer decorating the curve, e.g. Z/2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kodaira type calculus for abelian fibrations"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    Json out;
    std::function<void()> action;
    auto on = [&action](CLI::App* cmd, std::function<void()> f) { cmd->callback([&action, f] { action = f; }); };

    std::string pairing, mults, incidence = "transverse";
    auto* classify = app.add_subcommand("classify", "classify a fiber configuration");
    classify->add_option("pairing", pairing, "intersection pairing as a JSON matrix")->required();
    classify->add_option("multiplicities", mults, "multiplicities as a JSON list")->required();
    classify->add_option("--incidence", incidence, "transverse, concurrent, smooth, nodal or cuspidal");
    on(classify, [&] {
        const auto c = config_from_args(pairing, mults, incidence);
        out["type"] = classify_config(c).name();
        out["balanced"] = check_balanced(c);
        out["multiplicity"] = configuration_multiplicity(c);
        if (c.size() > 1) out["discriminant"] = configuration_discriminant(c).to_string();
    });

    int max_components = 5;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate balanced configurations");
    enumerate->add_option("max", max_components, "maximal number of components")->required();
    on(enumerate, [&] {
        const auto configs = enumerate_balanced(max_components);
        out["count"] = configs.size();
        Json list = Json::array();
        for (const auto& c : configs) list.push_back(config_json(c));
        out["configurations"] = list;
    });

    std::string type_text;
    auto* pi0 = app.add_subcommand("pi0", "Neron component group of a type");
    pi0->add_option("type", type_text)->required();
    on(pi0, [&] { out["group"] = neron_component_group(parse_kodaira_type(type_text)).to_string(); });

    std::int64_t max_r = 5;
    auto* dual = app.add_subcommand("dual-pairs", "dual type pairs with their component groups");
    dual->add_option("max_r", max_r)->required();
    on(dual, [&] {
        Json pairs = Json::array();
        for (const auto& [a, b] : dual_pairs(max_r))
            pairs.push_back({{"left", to_string(a)}, {"right", to_string(b)}, {"pi0_left", neron_component_group(a).to_string()},
                             {"pi0_right", neron_component_group(b).to_string()}});
        out["pairs"] = pairs;
    });

    auto* untangle_cmd = app.add_subcommand("untangle", "untangled cover of an unstable type");
    untangle_cmd->add_option("type", type_text)->required();
    on(untangle_cmd, [&] {
        const auto u = untangle(parse_kodaira_type(type_text));
        out["untangled"] = to_string(u.untangled);
        out["stabilizer"] = u.stabilizer.to_string();
        out["pi0_untangled"] = u.pi0_untangled.to_string();
        out["pi0"] = u.pi0.to_string();
    });

    std::int64_t degree = 1;
    auto* bc = app.add_subcommand("base-change", "base change of degree d");
    bc->add_option("type", type_text)->required();
    bc->add_option("d", degree)->required();
    on(bc, [&] {
        const auto r = base_change(parse_kodaira_type(type_text), degree);
        out["type"] = to_string(r.type);
        out["inertia_order"] = r.inertia_order;
        if (!r.stabilizer.is_trivial()) out["stabilizer"] = r.stabilizer.to_string();
        if (!r.notes.empty()) out["notes"] = r.notes;
    });

    auto* reduce = app.add_subcommand("reduce", "minimal semistable reduction of an unstable type");
    reduce->add_option("type", type_text)->required();
    on(reduce, [&] {
        const auto r = semistable_reduction(parse_kodaira_type(type_text));
        out["degree"] = r.degree;
        out["reduced"] = to_string(r.reduced);
        out["inertia"] = r.inertia_formula;
        out["stabilizer"] = r.stabilizer.to_string();
        out["twisted"] = r.twisted;
    });

    std::int64_t m = 2;
    std::optional<std::string> j_filter;
    auto* mt = app.add_subcommand("multiple-types", "multiple fiber types over a t-automorphism type");
    mt->add_option("p", type_text)->required();
    mt->add_option("m", m)->required();
    mt->add_option("--j", j_filter, "j-invariant tag filtering the exceptional types");
    on(mt, [&] {
        Json types = Json::array(), constraints = Json::array();
        for (const auto& c : multiple_fiber_candidates(parse_kodaira_type(type_text), m, j_filter)) {
            types.push_back(to_string(c.type));
            constraints.push_back(c.constraint);
        }
        out["types"] = types;
        out["constraints"] = constraints;
    });

    ActionArgs qargs;
    auto* quotient = app.add_subcommand("quotient", "classify the quotient of C x A by a free action");
    add_action_options(quotient, qargs);
    quotient->add_option("m", m, "multiplicity, the order of the inertia generator")->required();
    on(quotient, [&] {
        const auto b = build_action(qargs);
        out["type"] = to_string(quotient_type(b.model, b.generators, m));
        out["order"] = order(b.model, b.generators.front());
    });

    ActionArgs fargs;
    auto* free_check = app.add_subcommand("free-check", "freeness of the generated action");
    add_action_options(free_check, fargs);
    on(free_check, [&] {
        const auto b = build_action(fargs);
        const auto single = is_free(b.model, b.generators.front());
        out["order"] = order(b.model, b.generators.front());
        if (b.generators.size() == 1) {
            out["free"] = single.free;
            out["offending_power"] = single.offending_power ? Json(*single.offending_power) : Json(nullptr);
        } else {
            const auto group = is_free_group(b.model, b.generators);
            out["free"] = group.free;
            out["offending_exponents"] = group.offending_exponents;
        }
        Json fixed = Json::array();
        if (single.offending_power)
            for (const auto& f : fixed_locus(b.model, power(b.model, b.generators.front(), *single.offending_power)))
                fixed.push_back(f.to_string(b.model));
        if (!fixed.empty()) out["fixed_locus"] = fixed;
    });

    std::string table_id;
    auto* table = app.add_subcommand("table", "emit a classification table");
    table->add_option("id", table_id)->required()->check(CLI::IsMember(table_ids()));
    on(table, [&] {
        out["table"] = table_id;
        Json rows = Json::array();
        for (const auto& e : emit_table(table_id)) rows.push_back(e.row);
        out["rows"] = rows;
    });

    std::string recipe_id;
    bool describe = false;
    auto* recipe = app.add_subcommand("recipe", "run an example construction");
    recipe->add_option("id", recipe_id, "recipe id or 'all'")->required();
    recipe->add_flag("--describe", describe, "include parameters and generators");
    on(recipe, [&] {
        std::vector<Recipe> list;
        if (recipe_id == "all") list = standard_recipes();
        else list.push_back(find_recipe(recipe_id));
        Json results = Json::array();
        bool all = true;
        for (const auto& r : list) {
            const auto run = run_recipe(r);
            all = all && run.pass;
            Json j = describe ? to_json(r) : Json{{"id", r.id}, {"expected", to_string(r.expected)}};
            j["computed"] = to_string(run.computed);
            j["inertia_order"] = run.inertia_order;
            j["pass"] = run.pass;
            results.push_back(j);
        }
        out["recipes"] = results;
        out["all_pass"] = all;
    });

    std::string automorphism;
    auto* parse = app.add_subcommand("parse", "parse and re-serialize a type or an automorphism formula");
    auto* parse_type = parse->add_option("type", type_text);
    auto* parse_aut = parse->add_option("--automorphism", automorphism);
    parse_type->excludes(parse_aut);
    parse->require_option(1);
    on(parse, [&] {
        if (!automorphism.empty()) {
            out["automorphism"] = to_string(parse_automorphism(automorphism));
            return;
        }
        const auto t = parse_kodaira_type(type_text);
        out["type"] = to_string(t);
        out["stability"] = t.is_semistable() ? "semistable" : t.is_unstable() ? "unstable" : "multiple";
        if (auto bad = validate(t); !bad.empty()) out["invalid"] = bad;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    if (format == "text") print_text(out);
    else std::cout << out.dump() << "\n";
    return 0;
}
