#include "kodaira/base_change.hpp"

#include <algorithm>

namespace kodaira {

std::string to_string(PullbackCaseId c) {
    switch (c) {
        case PullbackCaseId::i: return "i";
        case PullbackCaseId::ii: return "ii";
        case PullbackCaseId::iii: return "iii";
        case PullbackCaseId::iv: return "iv";
        case PullbackCaseId::v: return "v";
    }
    return "?";
}

PullbackCase classify_pullback(LinearPart p, LinearPart q) {
    using L = LinearPart;
    if (p == L::zero && q == L::zero) return {PullbackCaseId::i, p, q};
    if (p == L::Ga && q == L::zero) return {PullbackCaseId::ii, p, q};
    if (p == L::Gm && q == L::Gm) return {PullbackCaseId::iii, p, q};
    if (p == L::Ga && q == L::Gm) return {PullbackCaseId::iv, p, q};
    if (p == L::Ga && q == L::Ga) return {PullbackCaseId::v, p, q};
    throw DomainError("(" + to_string(p) + ", " + to_string(q) + ") is impossible by Edixhoven monotonicity");
}

std::int64_t reduction_degree(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return 6;
        case CurveFamily::III:
        case CurveFamily::IIIStar: return 4;
        case CurveFamily::IV:
        case CurveFamily::IVStar: return 3;
        case CurveFamily::IStar: return 2;
        default: throw DomainError(base.name() + " is not unstable");
    }
}

BaseChangeResult base_change(const KodairaType& t, std::int64_t d) {
    if (d < 1) throw DomainError("base change degree must be positive");
    if (t.is_multiple()) throw DomainError("base change needs a non-multiple type");
    if (auto bad = validate(t); !bad.empty()) throw DomainError("invalid type: " + bad.front());
    BaseChangeResult out;
    if (t.is_semistable()) {
        const auto& s = t.as_semistable();
        out.type = KodairaType::semistable(s.r * d, s.r == 0 ? ShearOrder{1} : s.shear_order);
        out.inertia_order = s.r == 0 ? 1 : d;
        return out;
    }
    const auto& u = t.as_unstable();
    out.stabilizer = u.stabilizer;
    if (d == 1) {
        out.type = t;
        return out;
    }
    const std::int64_t e = reduction_degree(u.base);
    if (u.base.family == CurveFamily::IStar && u.base.r >= 1) {
        if (d % 2 != 0) throw DomainError("reduction degree not covered by the known reduction patterns");
        out.type = KodairaType::semistable(d * u.base.r);
        out.inertia_order = d;
    } else {
        if (d % e != 0) throw DomainError("reduction degree not covered by the known reduction patterns");
        out.type = KodairaType::semistable(0);
        out.inertia_order = e;
    }
    if (!u.stabilizer.is_trivial())
        out.notes.push_back("stabilizer " + u.stabilizer.to_string() + " survives as the kernel of the untangled cover");
    return out;
}

SemistableReduction semistable_reduction(const KodairaType& t) {
    if (!t.is_unstable()) throw DomainError("already semistable");
    if (auto bad = validate(t); !bad.empty()) throw DomainError("invalid type: " + bad.front());
    const auto& u = t.as_unstable();
    SemistableReduction out;
    out.degree = reduction_degree(u.base);
    out.stabilizer = u.stabilizer;
    out.twisted = !u.stabilizer.is_trivial();
    if (u.base.family == CurveFamily::IStar && u.base.r >= 1) {
        out.reduced = KodairaType::semistable(2 * u.base.r);
        out.inertia_formula = "(i,z) -> (-i, (-1)^i / z)";
    } else {
        out.reduced = KodairaType::semistable(0);
        out.inertia_formula = "x -> w^(+-1) x, ord w = " + std::to_string(out.degree);
    }
    return out;
}

std::vector<KodairaType> exceptional_p_types(ExceptionalTag tag) {
    using K = KodairaCurveType;
    const auto z2 = FgAbelianGroup::cyclic(2);
    switch (tag) {
        case ExceptionalTag::I0StarA: return {KodairaType::unstable(K::III()), KodairaType::unstable(K::IIIStar())};
        case ExceptionalTag::I0StarA2:
        case ExceptionalTag::I0StarB:
            return {KodairaType::unstable(K::III(), z2), KodairaType::unstable(K::IIIStar(), z2)};
        case ExceptionalTag::I0StarC:
        case ExceptionalTag::IVA:
        case ExceptionalTag::IVStarA: return {KodairaType::unstable(K::II()), KodairaType::unstable(K::IIStar())};
    }
    return {};
}

std::string exceptional_j_tag(ExceptionalTag tag) {
    switch (tag) {
        case ExceptionalTag::I0StarA:
        case ExceptionalTag::I0StarA2:
        case ExceptionalTag::I0StarB: return "1728";
        default: return "0";
    }
}

std::vector<MultipleCandidate> multiple_fiber_candidates(const KodairaType& p, std::int64_t m,
                                                         const std::optional<std::string>& j_tag) {
    if (m < 2) throw DomainError("not multiple");
    if (p.is_multiple()) throw DomainError("the t-automorphism type is never multiple");
    if (auto bad = validate(p); !bad.empty()) throw DomainError("invalid type: " + bad.front());
    if (j_tag && *j_tag != "0" && *j_tag != "1728" && *j_tag != "generic")
        throw DomainError("j tag must be 0, 1728 or generic");
    std::vector<MultipleCandidate> out;
    auto add = [&out, m](MultipleSubtype s, std::string constraint) {
        KodairaType t = KodairaType::multiple(m, std::move(s));
        if (auto bad = validate(t); !bad.empty()) throw DomainError("internal: " + to_string(t) + " " + bad.front());
        out.push_back({t, std::move(constraint)});
    };

    if (p.is_semistable()) {
        const std::int64_t r = p.as_semistable().r;
        if (r == 0) {
            add(sub::I0{}, "none");
            return out;
        }
        for (std::int64_t k = 1; k <= m; ++k)
            if (m % k == 0) add(sub::IRk{k, k * r}, "k | m, R = k r");
        return out;
    }

    const auto& u = p.as_unstable();
    const auto& base = u.base;
    if (base.family == CurveFamily::IStar && base.r >= 1) {
        const std::int64_t r = base.r;
        if (m % 2 == 0) {
            const std::int64_t k = m / 2;
            const std::int64_t R = k * r;
            for (std::int64_t order : {1, 2, 4})
                add(sub::IRPlus{R, plus_stabilizer_from_order(m, R, order)}, "m = 2k, R = k r");
            for (std::int64_t order : {1, 2})
                add(sub::IRMinus{R, order == 1 ? FgAbelianGroup{} : FgAbelianGroup::cyclic(2)}, "m = 2k, R = k r");
        } else {
            const auto star = KodairaCurveType::IStar(m * r);
            for (const auto& g : admissible_stabilizers(star))
                add(sub::UnstableLike{star, g}, multiplicity_condition(star));
        }
        return out;
    }

    const std::int64_t d = reduction_degree(base);
    if (m % d == 0) add(sub::I0Plus{d}, "d | m, d = " + std::to_string(d));
    if (multiplicity_allowed(base, m))
        for (const auto& g : admissible_stabilizers(base)) add(sub::UnstableLike{base, g}, multiplicity_condition(base));
    for (auto tag : all_exceptional_tags()) {
        if (!multiplicity_allowed(tag, m)) continue;
        auto ps = exceptional_p_types(tag);
        if (std::find(ps.begin(), ps.end(), p) == ps.end()) continue;
        if (j_tag && *j_tag != exceptional_j_tag(tag)) continue;
        add(sub::Exceptional{tag}, multiplicity_condition(tag));
    }
    return out;
}

std::vector<KodairaType> multiple_fiber_types(const KodairaType& p, std::int64_t m, const std::optional<std::string>& j_tag) {
    std::vector<KodairaType> out;
    for (auto& c : multiple_fiber_candidates(p, m, j_tag)) out.push_back(std::move(c.type));
    return out;
}

bool multiplicity_allowed(const MultipleSubtype& s, std::int64_t m) {
    if (const auto* u = std::get_if<sub::UnstableLike>(&s)) return multiplicity_allowed(u->base, m);
    if (const auto* e = std::get_if<sub::Exceptional>(&s)) return multiplicity_allowed(e->tag, m);
    return true;
}

}  // namespace kodaira
