#include "kodaira/catalog.hpp"

#include <algorithm>
#include <set>

namespace kodaira {

namespace {

std::string str(std::int64_t n) { return std::to_string(n); }

AutomorphismFormula translation_only(const KodairaCurveType& shape, std::size_t size, const TorsionPoint& a) {
    AutomorphismFormula f;
    if (shape.is_semistable() && shape.r == 0) {
        f.form = AutomorphismFormula::Form::elliptic;
    } else {
        f.form = AutomorphismFormula::Form::permutation;
        for (std::size_t i = 0; i < size; ++i) f.sigma.push_back(i);
    }
    f.a = a;
    return f;
}

AutomorphismFormula permutation_formula(std::vector<std::size_t> sigma, const TorsionPoint& a) {
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::permutation;
    f.sigma = std::move(sigma);
    f.a = a;
    return f;
}

std::string j_tag_for(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar:
        case CurveFamily::IV:
        case CurveFamily::IVStar: return "0";
        case CurveFamily::III:
        case CurveFamily::IIIStar: return "1728";
        default: return "generic";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError("recipe parameters violate " + what);
}

}  // namespace

Recipe recipe_m_i0(std::int64_t m) {
    require(m >= 2, "m >= 2");
    Recipe r;
    r.id = "mI0";
    r.summary = "translation of order m on the abelian factor";
    r.parameters = {{"m", str(m)}, {"ord b", str(m)}, {"ord zeta", str(m)}};
    r.shape = KodairaCurveType::I(0);
    r.generators = {translation_only(r.shape, 1, TorsionPoint::basis(2, 0, m))};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::I0{});
    r.p_type = KodairaType::semistable(0);
    return r;
}

Recipe recipe_m_i0_plus(std::int64_t d, std::int64_t k) {
    require(d == 2 || d == 3 || d == 4 || d == 6, "d in {2, 3, 4, 6}");
    require(k >= 1, "k >= 1");
    const std::int64_t m = d * k;
    Recipe r;
    r.id = "mI0plus";
    r.summary = "rotation of order d on E with a translation of order dk";
    r.parameters = {{"d", str(d)}, {"k", str(k)}, {"m", str(m)}, {"ord a", str(m)}};
    r.shape = KodairaCurveType::I(0);
    r.j_tag = d == 4 ? "1728" : (d == 2 ? "generic" : "0");
    const std::int64_t aut = elliptic_symbol(r.j_tag).aut_order;
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::elliptic;
    f.e = aut / d;
    f.a = TorsionPoint::basis(2, 0, m);
    r.generators = {f};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::I0Plus{d});
    const KodairaCurveType p = d == 6 ? KodairaCurveType::II()
                             : d == 4 ? KodairaCurveType::III()
                             : d == 3 ? KodairaCurveType::IV()
                                      : KodairaCurveType::IStar(0);
    r.p_type = KodairaType::unstable(p);
    return r;
}

Recipe recipe_m_irk(std::int64_t k, std::int64_t l, std::int64_t rr) {
    require(k >= 1 && l >= 1 && rr >= 1, "k, l, r >= 1");
    require(k * l >= 2, "m = kl >= 2");
    const std::int64_t m = k * l;
    Recipe r;
    r.id = "mIrk";
    r.summary = "rotation by kr on I_klr with twist zeta^i, zeta of order kl";
    r.parameters = {{"k", str(k)}, {"l", str(l)}, {"r", str(rr)}, {"zeta", to_string(Rational(1, m))}, {"ord a", str(m)}};
    r.shape = KodairaCurveType::I(k * l * rr);
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::cycle;
    f.shift = k * rr;
    f.zeta = mod_one(Rational(1, m));
    // phi^l scales every component by zeta^(li) * (-1)^(r(l-1)) * eps^l; eps cancels the sign
    if (rr * (l - 1) % 2 != 0) {
        f.eps = Rational(1, 2 * l);
        r.parameters.emplace_back("eps", to_string(f.eps));
    }
    f.a = TorsionPoint::basis(2, 0, m);
    r.generators = {f};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::IRk{k, k * rr});
    r.p_type = KodairaType::semistable(rr);
    return r;
}

Recipe recipe_ir_plus(std::int64_t k, std::int64_t rr) {
    require(k >= 1 && rr >= 1, "k, r >= 1");
    const std::int64_t m = 2 * k;
    Recipe r;
    r.id = "IRplus";
    r.summary = "reflection (-i, zeta^i/z) on I_2kr with a translation of order 2k";
    r.parameters = {{"k", str(k)}, {"r", str(rr)}, {"zeta", to_string(Rational(1, m))}, {"ord a", str(m)}};
    r.shape = KodairaCurveType::I(2 * k * rr);
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::cycle;
    f.sign = -1;
    f.inverting = true;
    f.zeta = mod_one(Rational(1, m));
    f.a = TorsionPoint::basis(2, 0, m);
    r.generators = {f};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::IRPlus{k * rr, {}});
    r.p_type = KodairaType::unstable(KodairaCurveType::IStar(rr));
    return r;
}

Recipe recipe_ir_minus(std::int64_t k, std::int64_t rr, const Rational& eps) {
    require(k >= 1 && rr >= 1, "k, r >= 1");
    const std::int64_t m = 2 * k;
    Recipe r;
    r.id = "IRminus";
    r.summary = "reflection (1-i, eps zeta^i/z) on I_2kr with a translation of order 4k";
    r.parameters = {{"k", str(k)}, {"r", str(rr)}, {"zeta", to_string(Rational(1, m))}, {"eps", to_string(mod_one(eps))},
                    {"ord a", str(2 * m)}};
    r.shape = KodairaCurveType::I(2 * k * rr);
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::cycle;
    f.sign = -1;
    f.shift = 1;
    f.inverting = true;
    f.zeta = mod_one(Rational(1, m));
    f.eps = mod_one(eps);
    f.a = TorsionPoint::basis(2, 0, 2 * m);
    r.generators = {f};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::IRMinus{k * rr, {}});
    r.p_type = KodairaType::unstable(KodairaCurveType::IStar(rr));
    return r;
}

Recipe recipe_ir_star(std::int64_t m, std::int64_t rr) {
    require(m >= 3 && m % 2 == 1, "m odd");
    require(rr >= 1, "r >= 1");
    Recipe r;
    r.id = "IRstar";
    r.summary = "twist (-zeta)^j on the chain of I_mr*, zeta a primitive 2m-th root, translation of order m";
    // -zeta = exp(2 pi i (1/2 + 1/2m))
    const Rational u = mod_one(Rational(1, 2) + Rational(1, 2 * m));
    r.parameters = {{"m", str(m)}, {"r", str(rr)}, {"u", to_string(u)}, {"ord a", str(m)}};
    r.shape = KodairaCurveType::IStar(m * rr);
    AutomorphismFormula f;
    f.form = AutomorphismFormula::Form::star;
    f.u = u;
    f.a = TorsionPoint::basis(2, 0, m);
    r.generators = {f};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::UnstableLike{r.shape, {}});
    r.p_type = KodairaType::unstable(KodairaCurveType::IStar(rr));
    return r;
}

Recipe recipe_unstable_like(const KodairaType& p, std::int64_t m) {
    require(p.is_unstable(), "p unstable");
    const auto& u = p.as_unstable();
    require(!(u.base.family == CurveFamily::IStar && u.base.r >= 1), "p is not I_r* with r >= 1");
    require(multiplicity_allowed(u.base, m), multiplicity_condition(u.base));
    Recipe r;
    r.id = "unstable-like";
    r.summary = "translation of order m on the abelian factor of (C x A)/G";
    r.parameters = {{"m", str(m)}, {"G", u.stabilizer.to_string()}, {"ord a", str(m)}};
    r.shape = u.base;
    r.j_tag = j_tag_for(u.base);
    r.stabilizer = u.stabilizer;
    r.generators = {translation_only(r.shape, curve_model(r.shape, r.j_tag).size(), TorsionPoint::basis(2, 0, m))};
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::UnstableLike{u.base, u.stabilizer});
    r.p_type = p;
    return r;
}

Recipe recipe_exceptional(ExceptionalTag tag, std::int64_t m) {
    require(multiplicity_allowed(tag, m), multiplicity_condition(tag));
    Recipe r;
    r.m = m;
    r.expected = KodairaType::multiple(m, sub::Exceptional{tag});
    r.p_type = exceptional_p_types(tag).front();
    r.j_tag = exceptional_j_tag(tag);
    r.parameters = {{"m", str(m)}, {"ord a", str(m)}};
    const TorsionPoint a = TorsionPoint::basis(2, 0, m);
    switch (tag) {
        case ExceptionalTag::I0StarA:
            r.id = "I0star-a";
            r.summary = "swap of E1, E2 on I0* with a translation of order m";
            r.shape = KodairaCurveType::IStar(0);
            r.generators = {permutation_formula({1, 0, 2, 3, 4}, a)};
            break;
        case ExceptionalTag::I0StarA2: {
            r.id = "I0star-a2";
            r.summary = "swap of E1, E2 with a translation of order m, and a stabilizer swapping E3, E4";
            r.shape = KodairaCurveType::IStar(0);
            r.parameters.emplace_back("ord b", "2");
            r.generators = {permutation_formula({1, 0, 2, 3, 4}, a),
                            permutation_formula({0, 1, 3, 2, 4}, TorsionPoint::basis(2, 1, 2))};
            break;
        }
        case ExceptionalTag::I0StarB: {
            r.id = "I0star-b";
            r.summary = "4-cycle of the tails of I0* induced by x -> ix + g, translation of order 2m";
            r.shape = KodairaCurveType::IStar(0);
            r.parameters = {{"k", str(m / 2)}, {"m", str(m)}, {"g", "E[2] outside E^i"}, {"ord a", str(2 * m)}};
            // 0 -> g -> (1+i)g -> ig -> 0 on E[2]; the tails sit at 0, 1/4, 1/2, 3/4 on the center
            r.generators = {permutation_formula({3, 2, 0, 1, 4}, TorsionPoint::basis(2, 0, 2 * m))};
            break;
        }
        case ExceptionalTag::I0StarC:
            r.id = "I0star-c";
            r.summary = "3-cycle of E1, E2, E3 on I0* with j = 0, translation of order m";
            r.shape = KodairaCurveType::IStar(0);
            r.generators = {permutation_formula({1, 2, 0, 3, 4}, a)};
            break;
        case ExceptionalTag::IVA:
            r.id = "IV-a";
            r.summary = "swap of two components of IV with a translation of order m";
            r.shape = KodairaCurveType::IV();
            r.generators = {permutation_formula({1, 0, 2}, a)};
            break;
        case ExceptionalTag::IVStarA:
            r.id = "IVstar-a";
            r.summary = "swap of two arms of IV* with a translation of order m";
            r.shape = KodairaCurveType::IVStar();
            r.generators = {permutation_formula({0, 2, 1, 3, 5, 4, 6}, a)};
            break;
    }
    return r;
}

std::vector<Recipe> standard_recipes() {
    std::vector<Recipe> out;
    auto add = [&out](Recipe r, const std::string& suffix = "") {
        if (!suffix.empty()) r.id += "-" + suffix;
        out.push_back(std::move(r));
    };
    add(recipe_m_i0(3));
    add(recipe_m_i0_plus(6, 1));
    add(recipe_m_i0_plus(2, 2), "d2k2");
    add(recipe_m_irk(2, 1, 1));
    add(recipe_m_irk(1, 2, 1), "k1l2");
    add(recipe_m_irk(2, 3, 1), "k2l3");
    add(recipe_ir_plus(1, 2));
    add(recipe_ir_plus(2, 1), "k2");
    add(recipe_ir_minus(1, 2));
    add(recipe_ir_minus(3, 1, Rational(1, 4)), "k3");
    add(recipe_ir_star(3, 1));
    add(recipe_unstable_like(KodairaType::unstable(KodairaCurveType::II()), 5));
    add(recipe_unstable_like(KodairaType::unstable(KodairaCurveType::III(), FgAbelianGroup::cyclic(2)), 3), "III2");
    add(recipe_unstable_like(KodairaType::unstable(KodairaCurveType::IStar(0), FgAbelianGroup::from_cyclic_orders({2, 2})), 3),
        "I0star4");
    add(recipe_exceptional(ExceptionalTag::I0StarA, 2));
    add(recipe_exceptional(ExceptionalTag::I0StarA2, 6));
    add(recipe_exceptional(ExceptionalTag::I0StarB, 2));
    add(recipe_exceptional(ExceptionalTag::I0StarC, 3));
    add(recipe_exceptional(ExceptionalTag::IVA, 2));
    add(recipe_exceptional(ExceptionalTag::IVStarA, 4));
    return out;
}

Recipe find_recipe(const std::string& id) {
    for (auto& r : standard_recipes())
        if (r.id == id) return r;
    throw DomainError("unknown recipe " + id);
}

RecipeRun run_recipe(const Recipe& r) {
    CurveModel model = curve_model(r.shape, r.j_tag, r.torsion_rank);
    if (!r.stabilizer.is_trivial()) model = decorate(model, r.stabilizer);
    std::vector<DiagonalAutomorphism> gens;
    for (const auto& f : r.generators) gens.push_back(realize(f, model));
    if (gens.empty()) throw DomainError("recipe " + r.id + " has no inertia generator");
    FreeCheck single = is_free(model, gens.front());
    if (!single.free)
        throw DomainError("recipe " + r.id + ": inertia generator has a fixed point at power " +
                          std::to_string(*single.offending_power));
    RecipeRun run;
    run.computed = quotient_type(model, gens, r.m);
    run.pass = run.computed == r.expected;
    run.inertia_order = order(model, gens.front());
    return run;
}

// ---------------------------------------------------------------- tables

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"T1-nonmultiple", "T2-multiple",    "T3-pi0",
                                              "T4-exceptional", "TG-stabilizers", "T-reduction"};
    return ids;
}

namespace {

std::string slash(const FgAbelianGroup& g) {
    if (g.is_trivial()) return "";
    return "/" + to_string(*g.order());
}

std::string p_label(const KodairaType& p) {
    if (p.is_semistable()) return p.as_semistable().r == 0 ? "I0" : "I_r";
    const auto& u = p.as_unstable();
    if (u.base.family == CurveFamily::IStar && u.base.r >= 1) return "I_r*" + slash(u.stabilizer);
    return u.base.name() + slash(u.stabilizer);
}

std::vector<KodairaType> sweep_p_types() {
    std::vector<KodairaType> ps;
    for (std::int64_t r = 0; r <= 4; ++r) ps.push_back(KodairaType::semistable(r));
    for (auto& t : all_unstable_types(4)) ps.push_back(t);
    return ps;
}

std::string stability_label(const MultipleSubtype& s) {
    if (std::holds_alternative<sub::I0>(s) || std::holds_alternative<sub::IRk>(s)) return "semistable-like";
    if (std::holds_alternative<sub::UnstableLike>(s)) return "unstable-like";
    if (std::holds_alternative<sub::Exceptional>(s)) return "unstable-like";
    return "mixed";
}

std::string properties(const KodairaType& t) {
    if (t.is_semistable() && t.as_semistable().r == 0) return "abelian variety";
    KodairaCurveType shape = t.is_semistable() ? KodairaCurveType::I(t.as_semistable().r) : t.as_unstable().base;
    CurveModel c = curve_model(shape);
    if (t.is_unstable() && !t.as_unstable().stabilizer.is_trivial()) c = decorate(c, t.as_unstable().stabilizer);
    std::vector<std::size_t> root(c.size());
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
    auto find = [&root](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    if (c.stabilizer)
        for (const auto& g : c.stabilizer->generators)
            for (std::size_t i = 0; i < c.size(); ++i) root[find(i)] = find(g.curve.perm[i]);
    std::set<std::size_t> orbits;
    for (std::size_t i = 0; i < c.size(); ++i) orbits.insert(find(i));
    const bool reduced = std::all_of(c.components.begin(), c.components.end(), [](const Component& x) { return x.multiplicity == 1; });
    if (orbits.size() == 1 && reduced) return "integral";
    return reduced ? "reduced, reducible" : "non-reduced, reducible";
}

std::vector<CatalogEntry> table_t1() {
    std::vector<CatalogEntry> out;
    for (std::int64_t r = 0; r <= 4; ++r) {
        KodairaType t = KodairaType::semistable(r);
        out.push_back({"T1-nonmultiple", Json{{"stability", "semistable"}, {"type", to_string(t)}, {"properties", properties(t)}, {"source", "generated"}}});
    }
    for (const auto& t : all_unstable_types(4))
        out.push_back({"T1-nonmultiple", Json{{"stability", "unstable"}, {"type", to_string(t)}, {"properties", properties(t)}, {"source", "generated"}}});
    return out;
}

std::vector<CatalogEntry> sweep_rows(bool exceptional_only) {
    struct Row {
        std::string stability, subtype, constraint;
        std::set<std::string> p_types;
        std::set<std::int64_t> ms;
        std::vector<std::string> witnesses;
        std::optional<ExceptionalTag> tag;
    };
    std::vector<Row> rows;
    for (const auto& p : sweep_p_types()) {
        for (std::int64_t m = 2; m <= 12; ++m) {
            for (const auto& c : multiple_fiber_candidates(p, m)) {
                const auto& mu = c.type.as_multiple();
                const bool is_exc = std::holds_alternative<sub::Exceptional>(mu.subtype);
                if (is_exc != exceptional_only) continue;
                const std::string label = family_label(c.type);
                auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.subtype == label && r.constraint == c.constraint; });
                if (it == rows.end()) {
                    rows.push_back({stability_label(mu.subtype), label, c.constraint, {}, {}, {}, std::nullopt});
                    if (is_exc) rows.back().tag = std::get<sub::Exceptional>(mu.subtype).tag;
                    it = std::prev(rows.end());
                }
                it->p_types.insert(p_label(p));
                it->ms.insert(m);
                if (it->witnesses.size() < 4) it->witnesses.push_back(to_string(c.type) + " over " + to_string(p));
            }
        }
    }
    std::vector<CatalogEntry> out;
    for (const auto& r : rows) {
        Json row;
        if (exceptional_only) {
            const Recipe recipe = recipe_exceptional(*r.tag, *r.ms.begin());
            const RecipeRun run = run_recipe(recipe);
            FgAbelianGroup g;
            if (recipe.generators.size() > 1) {
                std::vector<TorsionPoint> pts;
                for (std::size_t i = 1; i < recipe.generators.size(); ++i) pts.push_back(recipe.generators[i].a);
                g = torsion_subgroup(pts);
            }
            row["type"] = r.subtype;
            row["curve"] = recipe.shape.name();
            row["alpha"] = *r.tag == ExceptionalTag::I0StarB ? "cycles E1..E4"
                         : *r.tag == ExceptionalTag::I0StarC ? "cycles E1..E3"
                         : *r.tag == ExceptionalTag::IVStarA ? "swaps F1, F2"
                                                            : "swaps E1, E2";
            row["beta"] = *r.tag == ExceptionalTag::I0StarA2 ? "swaps E3, E4" : "-";
            row["inertia"] = run.inertia_order == recipe.m ? "mu_m" : "mu_2m";
            row["G"] = g.to_string();
            row["multiplicity"] = r.constraint;
            row["p_types"] = std::vector<std::string>(r.p_types.begin(), r.p_types.end());
            row["m_values"] = std::vector<std::int64_t>(r.ms.begin(), r.ms.end());
            row["recipe"] = {{"id", recipe.id}, {"computed", to_string(run.computed)}, {"pass", run.pass}};
            row["transcribed"] = {"alpha", "beta"};
        } else {
            row["stability"] = r.stability;
            row["subtype"] = r.subtype;
            row["restriction"] = r.constraint;
            row["p_types"] = std::vector<std::string>(r.p_types.begin(), r.p_types.end());
            row["m_values"] = std::vector<std::int64_t>(r.ms.begin(), r.ms.end());
            row["witnesses"] = r.witnesses;
            row["source"] = "generated";
        }
        out.push_back({exceptional_only ? "T4-exceptional" : "T2-multiple", row});
    }
    return out;
}

std::vector<CatalogEntry> table_t3() {
    std::vector<CatalogEntry> out;
    auto add_family = [&out](const std::string& label, const std::vector<KodairaType>& reps) {
        std::string group;
        Json checks = Json::array();
        for (const auto& t : reps) {
            const std::string g = neron_component_group(t).to_string();
            if (group.empty()) group = g;
            if (g != group) throw DomainError("component group differs inside the family " + label);
            checks.push_back({{"type", to_string(t)}, {"pi0", g}});
        }
        out.push_back({"T3-pi0", Json{{"type", label}, {"pi0", group}, {"checked", checks}, {"source", "generated"}}});
    };
    {
        Json checks = Json::array();
        for (std::int64_t r = 1; r <= 12; ++r) {
            const std::string g = neron_component_group(KodairaType::semistable(r)).to_string();
            const std::string want = r == 1 ? "0" : "Z/" + std::to_string(r);
            if (g != want) throw DomainError("I_r component group mismatch at r = " + std::to_string(r));
            checks.push_back({{"type", "I" + std::to_string(r)}, {"pi0", g}});
        }
        out.push_back({"T3-pi0", Json{{"type", "I_r"}, {"pi0", "Z/r"}, {"checked", checks}, {"source", "generated"}}});
    }
    using K = KodairaCurveType;
    const auto z2 = FgAbelianGroup::cyclic(2);
    const auto z3 = FgAbelianGroup::cyclic(3);
    for (auto [base, g] : std::vector<std::pair<K, FgAbelianGroup>>{{K::II(), {}}, {K::III(), {}}, {K::III(), z2}, {K::IV(), {}}, {K::IV(), z3},
                                                                  {K::IIStar(), {}}, {K::IIIStar(), {}}, {K::IIIStar(), z2}, {K::IVStar(), {}}, {K::IVStar(), z3}}) {
        KodairaType t = KodairaType::unstable(base, g);
        add_family(to_string(t), {t});
    }
    for (std::int64_t order : {1, 2, 4}) {
        std::vector<KodairaType> even, odd;
        for (std::int64_t r : {0, 2, 4}) even.push_back(KodairaType::unstable(K::IStar(r), stabilizer_from_order(K::IStar(r), order)));
        for (std::int64_t r : {1, 3, 5}) odd.push_back(KodairaType::unstable(K::IStar(r), stabilizer_from_order(K::IStar(r), order)));
        const std::string suffix = order == 1 ? "" : "/" + std::to_string(order);
        add_family("I_ev*" + suffix, even);
        add_family("I_odd*" + suffix, odd);
    }
    // keep the printed order: even family first
    std::stable_partition(out.begin() + 11, out.end(), [](const CatalogEntry& e) {
        return e.row["type"].get<std::string>().rfind("I_ev*", 0) == 0;
    });
    return out;
}

std::vector<CatalogEntry> table_tg() {
    std::vector<CatalogEntry> out;
    auto row = [&out](const std::string& label, const std::vector<KodairaCurveType>& reps) {
        std::vector<std::string> groups;
        for (const auto& base : reps) {
            std::vector<std::string> gs;
            for (const auto& g : admissible_stabilizers(base)) gs.push_back(g.to_string());
            if (groups.empty()) groups = gs;
            if (gs != groups) throw DomainError("stabilizers differ inside the family " + label);
        }
        out.push_back({"TG-stabilizers", Json{{"curve", label}, {"stabilizers", groups}, {"source", "generated"}}});
    };
    using K = KodairaCurveType;
    row("II", {K::II()});
    row("III", {K::III()});
    row("IV", {K::IV()});
    row("I_r* (even r)", {K::IStar(0), K::IStar(2), K::IStar(4), K::IStar(6)});
    row("II*", {K::IIStar()});
    row("III*", {K::IIIStar()});
    row("IV*", {K::IVStar()});
    row("I_r* (odd r)", {K::IStar(1), K::IStar(3), K::IStar(5)});
    return out;
}

std::vector<CatalogEntry> table_reduction() {
    std::vector<CatalogEntry> out;
    using K = KodairaCurveType;
    for (const auto& base : {K::II(), K::IIStar(), K::III(), K::IIIStar(), K::IV(), K::IVStar(), K::IStar(0)}) {
        const auto red = semistable_reduction(KodairaType::unstable(base));
        out.push_back({"T-reduction", Json{{"type", base.name()}, {"reduced", to_string(red.reduced)}, {"ord_psi", red.degree},
                                           {"source", "generated"}}});
    }
    for (std::int64_t r = 1; r <= 3; ++r) {
        for (std::int64_t k = 1; k <= 3; ++k) {
            const auto bc = base_change(KodairaType::unstable(K::IStar(r)), 2 * k);
            out.push_back({"T-reduction", Json{{"type", K::IStar(r).name()}, {"degree", 2 * k}, {"reduced", to_string(bc.type)},
                                               {"ord_psi", bc.inertia_order}, {"source", "generated"}}});
        }
    }
    return out;
}

}  // namespace

std::string family_label(const KodairaType& t) {
    if (!t.is_multiple()) return p_label(t);
    const auto& mu = t.as_multiple();
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, sub::I0>) return "I0";
            else if constexpr (std::is_same_v<T, sub::I0Plus>) return "I0+";
            else if constexpr (std::is_same_v<T, sub::IRk>) return "I_R^k";
            else if constexpr (std::is_same_v<T, sub::IRPlus>) return "I_R^+" + slash(s.stabilizer);
            else if constexpr (std::is_same_v<T, sub::IRMinus>) return "I_R^-" + slash(s.stabilizer);
            else if constexpr (std::is_same_v<T, sub::UnstableLike>) {
                if (s.base.family == CurveFamily::IStar && s.base.r >= 1) return "I_R*" + slash(s.stabilizer);
                return s.base.name() + slash(s.stabilizer);
            } else {
                return to_string(s.tag);
            }
        },
        mu.subtype);
}

std::vector<CatalogEntry> emit_table(const std::string& id) {
    if (id == "T1-nonmultiple") return table_t1();
    if (id == "T2-multiple") return sweep_rows(false);
    if (id == "T3-pi0") return table_t3();
    if (id == "T4-exceptional") return sweep_rows(true);
    if (id == "TG-stabilizers") return table_tg();
    if (id == "T-reduction") return table_reduction();
    throw DomainError("unknown table " + id);
}

Json to_json(const Recipe& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json gens = Json::array();
    for (const auto& f : r.generators) gens.push_back(to_string(f));
    Json j{{"id", r.id}, {"summary", r.summary}, {"parameters", params}, {"shape", r.shape.name()}, {"j", r.j_tag}};
    if (!r.stabilizer.is_trivial()) j["stabilizer"] = r.stabilizer.to_string();
    j["generators"] = gens;
    j["m"] = r.m;
    j["expected"] = to_string(r.expected);
    j["p_type"] = to_string(r.p_type);
    return j;
}

Json to_json(const CatalogEntry& e) { return Json{{"table", e.table_id}, {"row", e.row}}; }

}  // namespace kodaira
