#include "kodaira/fiber_type.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace kodaira {

namespace {

std::int64_t group_order(const FgAbelianGroup& g) {
    auto o = g.order();
    if (!o) throw DomainError("stabilizer must be finite");
    return to_int64(*o);
}

std::string slash_suffix(const FgAbelianGroup& g) {
    std::int64_t n = group_order(g);
    return n == 1 ? "" : "/" + std::to_string(n);
}

bool all_digits(const std::string& s) {
    return !s.empty() && s.size() <= 12 &&
           std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::int64_t parse_count(const std::string& s, const std::string& whole) {
    if (!all_digits(s)) throw DomainError("malformed type string '" + whole + "'");
    return std::stoll(s);
}

// Splits "BASE/n" into ("BASE", n); n = 1 without a slash.
std::pair<std::string, std::int64_t> split_slash(const std::string& text, const std::string& whole) {
    auto slash = text.rfind('/');
    if (slash == std::string::npos) return {text, 1};
    return {text.substr(0, slash), parse_count(text.substr(slash + 1), whole)};
}

const FgAbelianGroup kKlein = FgAbelianGroup::from_cyclic_orders({2, 2});

}  // namespace

std::string to_string(ExceptionalTag tag) {
    switch (tag) {
        case ExceptionalTag::I0StarA: return "I0*-a";
        case ExceptionalTag::I0StarA2: return "I0*-a/2";
        case ExceptionalTag::I0StarB: return "I0*-b";
        case ExceptionalTag::I0StarC: return "I0*-c";
        case ExceptionalTag::IVA: return "IV-a";
        case ExceptionalTag::IVStarA: return "IV*-a";
    }
    return "?";
}

const std::vector<ExceptionalTag>& all_exceptional_tags() {
    static const std::vector<ExceptionalTag> tags{ExceptionalTag::I0StarA, ExceptionalTag::I0StarA2,
                                                  ExceptionalTag::I0StarB, ExceptionalTag::I0StarC,
                                                  ExceptionalTag::IVA,     ExceptionalTag::IVStarA};
    return tags;
}

std::optional<ExceptionalTag> parse_exceptional_tag(const std::string& text) {
    for (auto tag : all_exceptional_tags())
        if (to_string(tag) == text) return tag;
    return std::nullopt;
}

FgAbelianGroup stabilizer_from_order(const KodairaCurveType& base, std::int64_t order) {
    if (order < 1) throw DomainError("stabilizer order must be positive");
    if (order == 1) return {};
    if (order == 4 && base.family == CurveFamily::IStar && base.r % 2 == 0) return kKlein;
    return FgAbelianGroup::cyclic(order);
}

FgAbelianGroup plus_stabilizer_from_order(std::int64_t m, std::int64_t R, std::int64_t order) {
    if (order == 4 && m % 2 == 0 && m > 0 && R % (m / 2) == 0 && (R / (m / 2)) % 2 == 0) return kKlein;
    if (order < 1) throw DomainError("stabilizer order must be positive");
    return order == 1 ? FgAbelianGroup{} : FgAbelianGroup::cyclic(order);
}

std::string subtype_string(std::int64_t m, const MultipleSubtype& s) {
    return std::visit(
        [m](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, sub::I0>) {
                return "I0";
            } else if constexpr (std::is_same_v<T, sub::I0Plus>) {
                return v.d == m ? std::string("I0+") : "I0+(d=" + std::to_string(v.d) + ")";
            } else if constexpr (std::is_same_v<T, sub::IRk>) {
                return "I" + std::to_string(v.R) + "^" + std::to_string(v.k);
            } else if constexpr (std::is_same_v<T, sub::IRPlus>) {
                return "I" + std::to_string(v.R) + "+" + slash_suffix(v.stabilizer);
            } else if constexpr (std::is_same_v<T, sub::IRMinus>) {
                return "I" + std::to_string(v.R) + "-" + slash_suffix(v.stabilizer);
            } else if constexpr (std::is_same_v<T, sub::UnstableLike>) {
                return v.base.name() + slash_suffix(v.stabilizer);
            } else {
                return to_string(v.tag);
            }
        },
        s);
}

std::string to_string(const KodairaType& t) {
    if (t.is_semistable()) return "I" + std::to_string(t.as_semistable().r);
    if (t.is_unstable()) {
        const auto& u = t.as_unstable();
        return u.base.name() + slash_suffix(u.stabilizer);
    }
    const auto& mu = t.as_multiple();
    return std::to_string(mu.m) + "*" + subtype_string(mu.m, mu.subtype);
}

namespace {

MultipleSubtype parse_subtype(std::int64_t m, const std::string& body, const std::string& whole) {
    if (auto tag = parse_exceptional_tag(body)) return sub::Exceptional{*tag};
    if (body == "I0") return sub::I0{};
    if (body == "I0+") return sub::I0Plus{m};
    if (body.rfind("I0+(d=", 0) == 0 && body.back() == ')')
        return sub::I0Plus{parse_count(body.substr(6, body.size() - 7), whole)};
    auto caret = body.find('^');
    if (caret != std::string::npos && body[0] == 'I') {
        return sub::IRk{parse_count(body.substr(caret + 1), whole), parse_count(body.substr(1, caret - 1), whole)};
    }
    auto sign = body.find_first_of("+-");
    if (sign != std::string::npos && body[0] == 'I' && all_digits(body.substr(1, sign - 1))) {
        std::int64_t R = parse_count(body.substr(1, sign - 1), whole);
        auto [rest, order] = split_slash(body.substr(sign), whole);
        if (rest != "+" && rest != "-") throw DomainError("malformed type string '" + whole + "'");
        if (rest == "+") return sub::IRPlus{R, plus_stabilizer_from_order(m, R, order)};
        return sub::IRMinus{R, order == 1 ? FgAbelianGroup{} : FgAbelianGroup::cyclic(order)};
    }
    auto [base_text, order] = split_slash(body, whole);
    KodairaCurveType base = parse_curve_type(base_text);
    if (!base.is_unstable()) throw DomainError("malformed type string '" + whole + "'");
    return sub::UnstableLike{base, stabilizer_from_order(base, order)};
}

}  // namespace

KodairaType parse_kodaira_type(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty type string");
    if (auto star = s.find('*'); star != std::string::npos && star > 0 && all_digits(s.substr(0, star))) {
        std::int64_t m = parse_count(s.substr(0, star), text);
        return Multiple{m, parse_subtype(m, s.substr(star + 1), text)};
    }
    auto [base_text, order] = split_slash(s, text);
    KodairaCurveType base = parse_curve_type(base_text);
    if (base.is_semistable()) {
        if (order != 1) throw DomainError("semistable types carry no stabilizer: '" + text + "'");
        return Semistable{base.r, 1};
    }
    return Unstable{base, stabilizer_from_order(base, order)};
}

namespace {

// Lattice action of a generator of Aut(E, 0) of order d on H_1(E, Z).
IntMatrix rotation_matrix(int d) {
    switch (d) {
        case 2: return IntMatrix{{-1, 0}, {0, -1}};
        case 3: return IntMatrix{{0, -1}, {1, -1}};
        case 4: return IntMatrix{{0, -1}, {1, 0}};
        case 6: return IntMatrix{{0, -1}, {1, 1}};
        default: throw DomainError("no rotation of order " + std::to_string(d));
    }
}

int inertia_order(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return 6;
        case CurveFamily::III:
        case CurveFamily::IIIStar: return 4;
        case CurveFamily::IV:
        case CurveFamily::IVStar: return 3;
        case CurveFamily::IStar: return 2;
        default: throw DomainError("no inertia order for " + base.name());
    }
}

}  // namespace

FgAbelianGroup untangled_component_group(const KodairaCurveType& base) {
    if (base.is_semistable()) {
        if (base.r < 0) throw DomainError("I_r needs r >= 0");
        return base.r <= 1 ? FgAbelianGroup{} : FgAbelianGroup::cyclic(base.r);
    }
    if (base.family == CurveFamily::IStar && base.r >= 1)
        return base.r % 2 == 0 ? kKlein : FgAbelianGroup::cyclic(4);
    // fixed points of the inertia rotation on the elliptic curve: coker(1 - M)
    IntMatrix m = rotation_matrix(inertia_order(base));
    IntMatrix one_minus = IntMatrix::identity(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) one_minus(i, j) -= m(i, j);
    return cokernel(one_minus);
}

std::vector<FgAbelianGroup> admissible_stabilizers(const KodairaCurveType& base) {
    if (!base.is_unstable()) throw DomainError("stabilizers are attached to unstable curve types");
    FgAbelianGroup pi0 = untangled_component_group(base);
    std::vector<FgAbelianGroup> out;
    std::int64_t n = group_order(pi0);
    for (std::int64_t order = 1; order <= n; ++order) {
        if (n % order != 0) continue;
        std::vector<FgAbelianGroup> shapes{order == 1 ? FgAbelianGroup{} : FgAbelianGroup::cyclic(order)};
        if (order == 4) shapes.push_back(kKlein);
        for (const auto& h : shapes)
            if (find_subgroup(pi0, h)) out.push_back(h);
    }
    return out;
}

bool is_admissible_stabilizer(const KodairaCurveType& base, const FgAbelianGroup& g) {
    auto list = admissible_stabilizers(base);
    return std::find(list.begin(), list.end(), g) != list.end();
}

bool multiplicity_allowed(const KodairaCurveType& base, std::int64_t m) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return gcd(m, std::int64_t{6}) == 1;
        case CurveFamily::III:
        case CurveFamily::IIIStar: return m % 2 != 0;
        case CurveFamily::IV:
        case CurveFamily::IVStar: return m % 3 != 0;
        case CurveFamily::IStar: return m % 2 != 0 && (base.r == 0 || base.r % m == 0);
        default: return false;
    }
}

bool multiplicity_allowed(ExceptionalTag tag, std::int64_t m) {
    switch (tag) {
        case ExceptionalTag::I0StarA:
        case ExceptionalTag::I0StarA2:
        case ExceptionalTag::I0StarB: return floor_mod(m, std::int64_t{4}) == 2;
        case ExceptionalTag::I0StarC: return floor_mod(m, std::int64_t{6}) == 3;
        case ExceptionalTag::IVA:
        case ExceptionalTag::IVStarA: {
            auto r = floor_mod(m, std::int64_t{6});
            return r == 2 || r == 4;
        }
    }
    return false;
}

std::string multiplicity_condition(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II:
        case CurveFamily::IIStar: return "m = +-1 mod 6";
        case CurveFamily::III:
        case CurveFamily::IIIStar: return "2 does not divide m";
        case CurveFamily::IV:
        case CurveFamily::IVStar: return "3 does not divide m";
        case CurveFamily::IStar:
            return base.r == 0 ? "2 does not divide m" : "2 does not divide m, R = m r";
        default: return "not unstable-like";
    }
}

std::string multiplicity_condition(ExceptionalTag tag) {
    switch (tag) {
        case ExceptionalTag::I0StarA:
        case ExceptionalTag::I0StarA2:
        case ExceptionalTag::I0StarB: return "m = 2 mod 4";
        case ExceptionalTag::I0StarC: return "m = 3 mod 6";
        case ExceptionalTag::IVA:
        case ExceptionalTag::IVStarA: return "m = +-2 mod 6";
    }
    return "";
}

std::vector<std::string> validate(const KodairaType& t) {
    std::vector<std::string> v;
    if (t.is_semistable()) {
        const auto& s = t.as_semistable();
        if (s.r < 0) v.push_back("r must be nonnegative");
        if (s.shear_order && *s.shear_order < 1) v.push_back("shear order must be positive");
        if (s.r == 0 && s.shear_order != ShearOrder{1}) v.push_back("I0 has trivial shear");
        return v;
    }
    auto check_stabilizer = [&v](const KodairaCurveType& base, const FgAbelianGroup& g) {
        if (!g.is_finite()) {
            v.push_back("stabilizer must be finite");
            return;
        }
        if (is_admissible_stabilizer(base, g)) return;
        if (base.family == CurveFamily::II || base.family == CurveFamily::IIStar)
            v.push_back(base.name() + " admits only trivial stabilizer");
        else
            v.push_back(base.name() + " does not admit stabilizer " + g.to_string());
    };
    if (t.is_unstable()) {
        const auto& u = t.as_unstable();
        if (!u.base.is_unstable()) {
            v.push_back("unstable types need an unstable curve type, got " + u.base.name());
            return v;
        }
        if (u.base.r < 0) v.push_back("r must be nonnegative");
        else check_stabilizer(u.base, u.stabilizer);
        return v;
    }
    const auto& mu = t.as_multiple();
    const std::int64_t m = mu.m;
    if (m < 2) {
        v.push_back("multiplicity must be at least 2");
        return v;
    }
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, sub::I0Plus>) {
                if (s.d != 2 && s.d != 3 && s.d != 4 && s.d != 6) v.push_back("d must be 2, 3, 4 or 6");
                else if (m % s.d != 0) v.push_back("d ∤ m");
            } else if constexpr (std::is_same_v<T, sub::IRk>) {
                if (s.k < 1 || s.R < 1) {
                    v.push_back("k and R must be positive");
                } else {
                    if (m % s.k != 0) v.push_back("k ∤ m");
                    if (s.R % s.k != 0) v.push_back("k ∤ R");
                }
            } else if constexpr (std::is_same_v<T, sub::IRPlus> || std::is_same_v<T, sub::IRMinus>) {
                if (m % 2 != 0) {
                    v.push_back("m must be even");
                    return;
                }
                const std::int64_t k = m / 2;
                if (s.R < 1 || s.R % k != 0) {
                    v.push_back("R must be a positive multiple of m/2");
                    return;
                }
                if (!s.stabilizer.is_finite()) {
                    v.push_back("stabilizer must be finite");
                    return;
                }
                const std::int64_t r = s.R / k;
                std::vector<FgAbelianGroup> allowed{FgAbelianGroup{}, FgAbelianGroup::cyclic(2)};
                if constexpr (std::is_same_v<T, sub::IRPlus>)
                    allowed.push_back(r % 2 == 0 ? kKlein : FgAbelianGroup::cyclic(4));
                if (std::find(allowed.begin(), allowed.end(), s.stabilizer) == allowed.end())
                    v.push_back(std::string(std::is_same_v<T, sub::IRPlus> ? "I_R^+" : "I_R^-") +
                                " does not admit stabilizer " + s.stabilizer.to_string());
            } else if constexpr (std::is_same_v<T, sub::UnstableLike>) {
                if (!s.base.is_unstable()) {
                    v.push_back("unstable-like types need an unstable curve type");
                    return;
                }
                check_stabilizer(s.base, s.stabilizer);
                if (!multiplicity_allowed(s.base, m))
                    v.push_back("multiplicity violates " + multiplicity_condition(s.base));
            } else if constexpr (std::is_same_v<T, sub::Exceptional>) {
                if (!multiplicity_allowed(s.tag, m))
                    v.push_back("multiplicity violates " + multiplicity_condition(s.tag));
            }
        },
        mu.subtype);
    return v;
}

FgAbelianGroup neron_component_group(const KodairaType& t) {
    if (t.is_multiple()) throw DomainError("component group is attached to P, not to a multiple X_s");
    if (auto bad = validate(t); !bad.empty()) throw DomainError("invalid type: " + bad.front());
    if (t.is_semistable()) return untangled_component_group(KodairaCurveType::I(t.as_semistable().r));
    const auto& u = t.as_unstable();
    FgAbelianGroup pi0 = untangled_component_group(u.base);
    if (u.stabilizer.is_trivial()) return pi0;
    auto embedded = find_subgroup(pi0, u.stabilizer);
    if (!embedded) throw DomainError("stabilizer does not embed");
    return quotient(pi0, *embedded);
}

KodairaCurveType conjugate(const KodairaCurveType& base) {
    switch (base.family) {
        case CurveFamily::II: return KodairaCurveType::IIStar();
        case CurveFamily::III: return KodairaCurveType::IIIStar();
        case CurveFamily::IV: return KodairaCurveType::IVStar();
        case CurveFamily::IIStar: return KodairaCurveType::II();
        case CurveFamily::IIIStar: return KodairaCurveType::III();
        case CurveFamily::IVStar: return KodairaCurveType::IV();
        case CurveFamily::IStar: return base;
        case CurveFamily::I: break;
    }
    throw DomainError("conjugate is defined for unstable types only");
}

KodairaType conjugate(const KodairaType& t) {
    if (!t.is_unstable()) throw DomainError("conjugate is defined for unstable types only");
    const auto& u = t.as_unstable();
    return Unstable{conjugate(u.base), u.stabilizer};
}

bool is_isogenous(const KodairaType& a, const KodairaType& b) {
    if (!a.is_unstable() || !b.is_unstable()) throw DomainError("isogeny is defined for unstable types only");
    return a.as_unstable().base == b.as_unstable().base;
}

UntangleResult untangle(const KodairaType& t) {
    if (!t.is_unstable()) throw DomainError("untangle is defined for unstable types only");
    const auto& u = t.as_unstable();
    KodairaType untangled = Unstable{u.base, {}};
    return {untangled, u.stabilizer, neron_component_group(untangled), neron_component_group(t)};
}

std::vector<std::pair<KodairaType, KodairaType>> dual_pairs(std::int64_t max_r) {
    std::vector<std::pair<KodairaType, KodairaType>> out;
    for (std::int64_t r = 0; r <= max_r; ++r) out.emplace_back(KodairaType::semistable(r), KodairaType::semistable(r));
    for (std::int64_t r = 1; r <= max_r; r += 2)
        out.emplace_back(KodairaType::unstable(KodairaCurveType::IStar(r), FgAbelianGroup::cyclic(2)),
                         KodairaType::unstable(KodairaCurveType::IStar(2 * r), FgAbelianGroup::cyclic(2)));
    return out;
}

std::optional<KodairaType> dual_of(const KodairaType& t) {
    if (t.is_semistable()) return KodairaType::semistable(t.as_semistable().r);
    if (!t.is_unstable()) return std::nullopt;
    const auto& u = t.as_unstable();
    if (u.base.family != CurveFamily::IStar || u.stabilizer != FgAbelianGroup::cyclic(2) || u.base.r < 1)
        return std::nullopt;
    if (u.base.r % 2 == 1) return KodairaType::unstable(KodairaCurveType::IStar(2 * u.base.r), u.stabilizer);
    if ((u.base.r / 2) % 2 == 1) return KodairaType::unstable(KodairaCurveType::IStar(u.base.r / 2), u.stabilizer);
    return std::nullopt;
}

bool dual_component_check(const KodairaType& t) {
    auto d = dual_of(t);
    if (!d) return false;
    return neron_component_group(t) == neron_component_group(*d);
}

std::string to_string(LinearPart l) {
    switch (l) {
        case LinearPart::zero: return "0";
        case LinearPart::Gm: return "Gm";
        case LinearPart::Ga: return "Ga";
    }
    return "?";
}

NeronFiberData neron_fiber_data(const KodairaType& t, std::int64_t relative_dimension) {
    if (relative_dimension < 1) throw DomainError("relative dimension must be positive");
    NeronFiberData d;
    d.pi0 = neron_component_group(t);
    if (t.is_semistable()) {
        const auto& s = t.as_semistable();
        if (s.r == 0) {
            d.linear_part = LinearPart::zero;
            d.abelian_dim = relative_dimension;
        } else {
            d.linear_part = LinearPart::Gm;
            d.abelian_dim = relative_dimension - 1;
            d.shear_order = s.shear_order;
        }
        return d;
    }
    d.linear_part = LinearPart::Ga;
    d.abelian_dim = relative_dimension - 1;
    d.split = true;
    return d;
}

std::vector<KodairaType> all_unstable_types(std::int64_t max_r) {
    std::vector<KodairaType> out;
    for (const auto& base : all_curve_types(max_r)) {
        if (!base.is_unstable()) continue;
        for (const auto& g : admissible_stabilizers(base)) out.push_back(KodairaType::unstable(base, g));
    }
    return out;
}

}  // namespace kodaira
