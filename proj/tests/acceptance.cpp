// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "generators.hpp"
#include "oracles/graph_oracle.hpp"
#include "oracles/lattice_oracle.hpp"

#include "kodaira/base_change.hpp"
#include "kodaira/catalog.hpp"
#include "kodaira/fiber_config.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace kodaira;

namespace {

struct Failure {
    std::ostringstream out;
    int count = 0;
    void operator()(const std::string& what) {
        if (count++ < 5) out << "\n    " << what;
    }
};

KodairaType T(const std::string& s) { return parse_kodaira_type(s); }

// ---------------------------------------------------------------- 1

void enumeration(Failure& fail) {
    const auto got = enumerate_balanced(10);
    std::multiset<std::string> tags;
    std::vector<oracle::Graph> transverse;
    for (const auto& c : got) {
        tags.insert(*c.tag);
        if (c.incidence != Incidence::transverse) continue;
        oracle::Graph g;
        g.a = c.multiplicities;
        g.q.assign(c.size(), std::vector<std::int64_t>(c.size(), 0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                if (i != j) g.q[i][j] = to_int64(c.pairing(i, j));
        transverse.push_back(std::move(g));
    }
    std::multiset<std::string> want{"III", "IV", "IV*", "III*", "II*"};
    for (int r = 2; r <= 10; ++r) want.insert("I" + std::to_string(r));
    for (int r = 0; r <= 5; ++r) want.insert("I" + std::to_string(r) + "*");
    if (tags != want) fail("tag multiset differs from the expected reducible list");

    std::vector<oracle::Graph> all;
    for (auto& g : oracle::balanced_graphs(10, 20)) all.push_back(std::move(g));
    if (all.size() != transverse.size())
        fail("oracle found " + std::to_string(all.size()) + " graphs, enumeration " + std::to_string(transverse.size()));
    for (const auto& g : all)
        if (std::none_of(transverse.begin(), transverse.end(), [&](const oracle::Graph& h) { return oracle::isomorphic(g, h); }))
            fail("oracle graph with " + std::to_string(g.a.size()) + " vertices missing from the enumeration");
}

// ---------------------------------------------------------------- 2

void component_groups(Failure& fail) {
    const std::vector<std::pair<std::string, std::string>> cells{
        {"II", "0"},      {"III", "Z/2"},      {"III/2", "0"},   {"IV", "Z/3"},      {"IV/3", "0"},     {"II*", "0"},
        {"III*", "Z/2"},  {"III*/2", "0"},     {"IV*", "Z/3"},   {"IV*/3", "0"},     {"I2*", "Z/2 + Z/2"}, {"I2*/2", "Z/2"},
        {"I2*/4", "0"},   {"I3*", "Z/4"},      {"I3*/2", "Z/2"}, {"I3*/4", "0"},     {"I0*", "Z/2 + Z/2"}, {"I6", "Z/6"}};
    for (const auto& [t, g] : cells)
        if (neron_component_group(T(t)).to_string() != g) fail(t + " should have pi0 " + g);
    for (std::int64_t r = 1; r <= 12; ++r)
        if (neron_component_group(KodairaType::semistable(r)) != FgAbelianGroup::cyclic(r)) fail("I" + std::to_string(r));
    for (std::int64_t r = 2; r <= 12; ++r)
        if (discriminant_group(intersection_matrix(KodairaCurveType::I(r))) != neron_component_group(KodairaType::semistable(r)))
            fail("I" + std::to_string(r) + " discriminant mismatch");
    for (const auto& t : all_unstable_types(12)) {
        const auto& u = t.as_unstable();
        if (!u.stabilizer.is_trivial() || u.base.is_integral()) continue;
        if (configuration_discriminant(shape_configuration(u.base)) != neron_component_group(t))
            fail(to_string(t) + " discriminant mismatch");
    }
}

// ---------------------------------------------------------------- 3

void discriminants(Failure& fail) {
    for (std::int64_t r = 2; r <= 12; ++r)
        if (discriminant_group(cycle_matrix(r)) != FgAbelianGroup::cyclic(r)) fail("cycle " + std::to_string(r));
    gen::Source src(20240611);
    for (int trial = 0; trial < 500; ++trial) {
        const auto rows = static_cast<std::size_t>(src.range(1, 4));
        const auto cols = static_cast<std::size_t>(src.range(1, 4));
        const auto raw = src.matrix(rows, cols, 10);
        oracle::Mat om;
        std::vector<std::vector<Integer>> big;
        for (const auto& r : raw) {
            om.emplace_back(r.begin(), r.end());
            big.emplace_back(r.begin(), r.end());
        }
        const auto want = oracle::cokernel(om, rows, cols).to_string();
        const auto got = cokernel(IntMatrix::from_rows(big, cols)).to_string();
        if (got != want) fail("random matrix " + std::to_string(trial) + ": " + got + " vs " + want);
    }
}

// ---------------------------------------------------------------- 4

void untangling(Failure& fail) {
    for (const auto& t : all_unstable_types(6)) {
        const auto u = untangle(t);
        if (*u.pi0_untangled.order() != *u.stabilizer.order() * *u.pi0.order()) fail(to_string(t));
    }
}

// ---------------------------------------------------------------- 5

void base_changes(Failure& fail) {
    for (std::int64_t r = 0; r <= 6; ++r)
        for (std::int64_t d = 1; d <= 6; ++d)
            if (base_change(KodairaType::semistable(r), d).type != KodairaType::semistable(d * r))
                fail("I" + std::to_string(r) + " by " + std::to_string(d));
    const std::vector<std::pair<std::string, std::int64_t>> rows{{"II", 6}, {"II*", 6}, {"III", 4}, {"III*", 4},
                                                                 {"IV", 3}, {"IV*", 3}, {"I0*", 2}};
    for (const auto& [t, d] : rows) {
        const auto s = semistable_reduction(T(t));
        if (s.degree != d || s.reduced != T("I0")) fail(t + " reduction");
        if (base_change(T(t), d).inertia_order != d) fail(t + " inertia order");
    }
    for (std::int64_t r = 1; r <= 3; ++r) {
        const auto star = KodairaType::unstable(KodairaCurveType::IStar(r));
        const auto s = semistable_reduction(star);
        if (s.degree != 2 || s.reduced != KodairaType::semistable(2 * r)) fail(to_string(star) + " minimal reduction");
        for (std::int64_t k = 1; k <= 3; ++k) {
            const auto b = base_change(star, 2 * k);
            if (b.type != KodairaType::semistable(2 * k * r) || b.inertia_order != 2 * k)
                fail(to_string(star) + " by " + std::to_string(2 * k));
        }
    }
}

// ---------------------------------------------------------------- 6

void duality(Failure& fail) {
    const auto pairs = dual_pairs(10);
    for (const auto& [a, b] : pairs)
        if (neron_component_group(a) != neron_component_group(b)) fail(to_string(a) + " / " + to_string(b));
    for (std::int64_t r = 1; r <= 5; r += 2) {
        const auto a = T("I" + std::to_string(r) + "*/2"), b = T("I" + std::to_string(2 * r) + "*/2");
        if (std::none_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == a && p.second == b; }))
            fail(to_string(a) + " / " + to_string(b) + " missing");
    }
}

// ---------------------------------------------------------------- 7

// Printed rows of the multiple-fiber tables: which subtypes, over which P, under which congruence.
struct PrintedRow {
    std::string name;
    std::function<bool(const KodairaType& p, std::int64_t m, const MultipleSubtype& s)> admits;
    std::set<std::int64_t> witnessed;
};

std::int64_t inertia_of(const KodairaCurveType& c) {
    switch (c.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return 6;
        case CurveFamily::III:
        case CurveFamily::IIIStar: return 4;
        case CurveFamily::IV:
        case CurveFamily::IVStar: return 3;
        default: return 2;
    }
}

bool star_positive(const KodairaType& p) {
    return p.is_unstable() && p.as_unstable().base.family == CurveFamily::IStar && p.as_unstable().base.r >= 1;
}

std::vector<PrintedRow> printed_rows() {
    using S = MultipleSubtype;
    const auto same_family = [](const KodairaType& p, const KodairaCurveType& c) {
        if (!p.is_unstable()) return false;
        const auto& b = p.as_unstable().base;
        if (c.family == CurveFamily::IStar) return b.family == CurveFamily::IStar && b.r == c.r;
        return inertia_of(b) == inertia_of(c) && b.family != CurveFamily::IStar;
    };
    const auto unstable_like = [same_family](std::vector<CurveFamily> fams, std::function<bool(std::int64_t)> cong) {
        return [=](const KodairaType& p, std::int64_t m, const S& s) {
            const auto* u = std::get_if<sub::UnstableLike>(&s);
            if (!u || std::find(fams.begin(), fams.end(), u->base.family) == fams.end()) return false;
            if (u->base.family == CurveFamily::IStar && u->base.r != 0) return false;
            return same_family(p, u->base) && cong(m);
        };
    };
    const auto exceptional = [](ExceptionalTag tag, std::set<std::string> ps, std::int64_t mod, std::set<std::int64_t> res) {
        return [=](const KodairaType& p, std::int64_t m, const S& s) {
            const auto* e = std::get_if<sub::Exceptional>(&s);
            return e && e->tag == tag && ps.count(to_string(p)) && res.count(m % mod);
        };
    };
    std::vector<PrintedRow> rows;
    rows.push_back({"I0", [](const KodairaType& p, std::int64_t, const S& s) {
                        return std::holds_alternative<sub::I0>(s) && p == KodairaType::semistable(0);
                    }, {}});
    rows.push_back({"I_R^k", [](const KodairaType& p, std::int64_t m, const S& s) {
                        const auto* x = std::get_if<sub::IRk>(&s);
                        if (!x || !p.is_semistable() || p.as_semistable().r < 1) return false;
                        return m % x->k == 0 && x->R == x->k * p.as_semistable().r;
                    }, {}});
    rows.push_back({"I0+", [](const KodairaType& p, std::int64_t m, const S& s) {
                        const auto* x = std::get_if<sub::I0Plus>(&s);
                        if (!x || !p.is_unstable() || star_positive(p)) return false;
                        return x->d == inertia_of(p.as_unstable().base) && m % x->d == 0;
                    }, {}});
    rows.push_back({"I_R^+-", [](const KodairaType& p, std::int64_t m, const S& s) {
                        if (!star_positive(p) || m % 2 != 0) return false;
                        const std::int64_t want_R = (m / 2) * p.as_unstable().base.r;
                        if (const auto* x = std::get_if<sub::IRPlus>(&s)) return x->R == want_R;
                        if (const auto* x = std::get_if<sub::IRMinus>(&s)) return x->R == want_R;
                        return false;
                    }, {}});
    rows.push_back({"II, II*", unstable_like({CurveFamily::II, CurveFamily::IIStar}, [](std::int64_t m) { return std::gcd(m, std::int64_t{6}) == 1; }), {}});
    rows.push_back({"III family", unstable_like({CurveFamily::III, CurveFamily::IIIStar}, [](std::int64_t m) { return m % 2 != 0; }), {}});
    rows.push_back({"IV family", unstable_like({CurveFamily::IV, CurveFamily::IVStar}, [](std::int64_t m) { return m % 3 != 0; }), {}});
    rows.push_back({"I0* family", unstable_like({CurveFamily::IStar}, [](std::int64_t m) { return m % 2 != 0; }), {}});
    rows.push_back({"I_R* family", [](const KodairaType& p, std::int64_t m, const S& s) {
                        const auto* u = std::get_if<sub::UnstableLike>(&s);
                        if (!u || u->base.family != CurveFamily::IStar || u->base.r == 0 || !star_positive(p)) return false;
                        return m % 2 != 0 && u->base.r == m * p.as_unstable().base.r;
                    }, {}});
    rows.push_back({"I0*-a", exceptional(ExceptionalTag::I0StarA, {"III", "III*"}, 4, {2}), {}});
    rows.push_back({"I0*-a/2", exceptional(ExceptionalTag::I0StarA2, {"III/2", "III*/2"}, 4, {2}), {}});
    rows.push_back({"I0*-b", exceptional(ExceptionalTag::I0StarB, {"III/2", "III*/2"}, 4, {2}), {}});
    rows.push_back({"I0*-c", exceptional(ExceptionalTag::I0StarC, {"II", "II*"}, 6, {3}), {}});
    rows.push_back({"IV-a", exceptional(ExceptionalTag::IVA, {"II", "II*"}, 6, {2, 4}), {}});
    rows.push_back({"IV*-a", exceptional(ExceptionalTag::IVStarA, {"II", "II*"}, 6, {2, 4}), {}});
    return rows;
}

void multiple_sweep(Failure& fail) {
    auto rows = printed_rows();
    std::vector<KodairaType> ps;
    for (std::int64_t r = 0; r <= 4; ++r) ps.push_back(KodairaType::semistable(r));
    for (const auto& t : all_unstable_types(4)) ps.push_back(t);
    for (const auto& p : ps)
        for (std::int64_t m = 2; m <= 12; ++m)
            for (const auto& t : multiple_fiber_types(p, m)) {
                const auto& s = t.as_multiple().subtype;
                auto it = std::find_if(rows.begin(), rows.end(), [&](const PrintedRow& row) { return row.admits(p, m, s); });
                if (it == rows.end()) {
                    fail("unlisted: " + to_string(t) + " over " + to_string(p));
                    continue;
                }
                if (!is_valid(t)) fail("invalid: " + to_string(t));
                it->witnessed.insert(m);
            }
    for (const auto& row : rows)
        if (row.witnessed.size() < 2) fail("row " + row.name + " witnessed by " + std::to_string(row.witnessed.size()) + " m values");
}

// ---------------------------------------------------------------- 8

void recipes(Failure& fail) {
    const std::vector<std::string> required{"mI0", "mI0plus", "mIrk", "IRplus", "IRminus", "IRstar", "unstable-like", "I0star-a", "I0star-b"};
    std::set<std::string> seen;
    for (const auto& r : standard_recipes()) {
        seen.insert(r.id);
        try {
            const auto run = run_recipe(r);
            if (!run.pass) fail(r.id + ": computed " + to_string(run.computed) + ", expected " + to_string(r.expected));
        } catch (const DomainError& e) {
            fail(r.id + ": " + e.what());
        }
    }
    for (const auto& id : required)
        if (!seen.count(id)) fail("missing recipe " + id);
    const std::map<std::string, std::string> expected{{"mI0", "3*I0"},     {"mI0plus", "6*I0+"}, {"IRplus", "2*I2+"},
                                                      {"I0star-a", "2*I0*-a"}, {"I0star-b", "2*I0*-b"}, {"unstable-like", "5*II"}};
    for (const auto& [id, type] : expected)
        if (to_string(find_recipe(id).expected) != type) fail(id + " should construct " + type);
    if (find_recipe("mIrk").expected.as_multiple().m != 2) fail("mIrk should be a 2*I2^2 construction");
}

// ---------------------------------------------------------------- 9

void round_trips(Failure& fail) {
    gen::Source src(2718);
    for (int i = 0; i < 200; ++i) {
        const auto t = src.kodaira_type();
        if (parse_kodaira_type(to_string(t)) != t) fail(to_string(t));
    }
    gen::Source fsrc(14);
    for (int i = 0; i < 50; ++i) {
        const auto f = fsrc.formula();
        if (parse_automorphism(to_string(f)) != f) fail(to_string(f));
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*run)(Failure&);
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {"enumeration of balanced configurations up to 10 components", enumeration, 60},
        {"Neron component groups", component_groups, 1},
        {"discriminant calculus", discriminants, 0},
        {"untangle exactness", untangling, 0},
        {"base change and semistable reduction", base_changes, 0},
        {"duality", duality, 0},
        {"multiple-fiber admissibility sweep", multiple_sweep, 10},
        {"quotient engine recipes", recipes, 0},
        {"serialization round trips", round_trips, 0},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Failure fail;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(fail);
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_s > 0 && secs > criteria[i].budget_s) fail("over the time budget");
        const bool ok = fail.count == 0;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name << " (" << secs << " s)"
                  << fail.out.str() << "\n";
    }
    return failed == 0 ? 0 : 1;
}
