#include "kodaira/automorphism_formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

namespace kodaira {

namespace {

std::string pair_string(const std::array<Rational, 2>& p) {
    return "(" + to_string(p[0]) + ", " + to_string(p[1]) + ")";
}

std::string index_string(int sign, std::int64_t shift) {
    if (sign > 0) return shift == 0 ? "i" : "i+" + std::to_string(shift);
    return shift == 0 ? "-i" : std::to_string(shift) + "-i";
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::string> bracketed_items(const std::string& v, char open, char close) {
    if (v.size() < 2 || v.front() != open || v.back() != close) throw DomainError("malformed value " + v);
    return split_top_level(v.substr(1, v.size() - 2), ',');
}

TorsionPoint parse_point(const std::string& v) {
    std::vector<Rational> coords;
    for (const auto& x : bracketed_items(v, '(', ')')) coords.push_back(parse_rational(x));
    if (coords.empty()) throw DomainError("torsion point needs coordinates");
    return TorsionPoint(coords);
}

}  // namespace

std::string to_string(const AutomorphismFormula& f) {
    std::string head, binds;
    switch (f.form) {
        case AutomorphismFormula::Form::cycle: {
            std::string z = f.inverting ? "z^-1" : "z";
            if (f.zeta != 0) {
                z += " * zeta^i";
                binds += "zeta=" + to_string(f.zeta) + ", ";
            }
            if (f.eps != 0) {
                z += " * eps";
                binds += "eps=" + to_string(f.eps) + ", ";
            }
            head = "(i,z,y) -> (" + index_string(f.sign, f.shift) + ", " + z + ", y+a)";
            break;
        }
        case AutomorphismFormula::Form::elliptic: {
            const bool moved = f.t[0] != 0 || f.t[1] != 0;
            head = "(x,y) -> (w^" + std::to_string(f.e) + " * x" + (moved ? " + t" : "") + ", y+a)";
            if (moved) binds += "t=" + pair_string(f.t) + ", ";
            break;
        }
        case AutomorphismFormula::Form::star:
            head = "(j,z,y) -> (j, u^j * z, y+a)";
            binds += "u=" + to_string(f.u) + ", ";
            break;
        case AutomorphismFormula::Form::permutation: {
            head = "(x,y) -> (sigma(x), y+a)";
            std::string s = "[";
            for (std::size_t i = 0; i < f.sigma.size(); ++i) s += (i ? "," : "") + std::to_string(f.sigma[i]);
            binds += "sigma=" + s + "], ";
            break;
        }
    }
    return head + " ; " + binds + "a=" + f.a.to_string();
}

AutomorphismFormula parse_automorphism(const std::string& text) {
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
    const auto semi = s.find(';');
    if (semi == std::string::npos) throw DomainError("automorphism formula needs bindings after ';'");
    const std::string head = s.substr(0, semi);

    std::map<std::string, std::string> binds;
    for (const auto& item : split_top_level(s.substr(semi + 1), ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("malformed binding " + item);
        const std::string key = item.substr(0, eq);
        if (binds.count(key)) throw DomainError("duplicate binding " + key);
        binds[key] = item.substr(eq + 1);
    }
    auto take = [&binds](const std::string& key) -> std::optional<std::string> {
        auto it = binds.find(key);
        if (it == binds.end()) return std::nullopt;
        std::string v = it->second;
        binds.erase(it);
        return v;
    };

    AutomorphismFormula f;
    static const std::regex cycle_re(R"(\(i,z,y\)->\((i|i\+(\d+)|-i|(\d+)-i),(z|z\^-1)(\*zeta\^i)?(\*eps)?,y\+a\))");
    static const std::regex elliptic_re(R"(\(x,y\)->\(w\^(-?\d+)\*x(\+t)?,y\+a\))");
    static const std::regex star_re(R"(\(j,z,y\)->\(j,u\^j\*z,y\+a\))");
    static const std::regex perm_re(R"(\(x,y\)->\(sigma\(x\),y\+a\))");
    std::smatch m;
    if (std::regex_match(head, m, cycle_re)) {
        f.form = AutomorphismFormula::Form::cycle;
        const std::string idx = m[1];
        f.sign = idx.find("-i") != std::string::npos ? -1 : 1;
        if (m[2].matched) f.shift = std::stoll(m[2]);
        if (m[3].matched) f.shift = std::stoll(m[3]);
        f.inverting = m[4] == "z^-1";
        if (m[5].matched) {
            auto v = take("zeta");
            if (!v) throw DomainError("zeta is used but not bound");
            f.zeta = mod_one(parse_rational(*v));
            if (f.zeta == 0) throw DomainError("zeta must be nonzero when written");
        }
        if (m[6].matched) {
            auto v = take("eps");
            if (!v) throw DomainError("eps is used but not bound");
            f.eps = mod_one(parse_rational(*v));
            if (f.eps == 0) throw DomainError("eps must be nonzero when written");
        }
    } else if (std::regex_match(head, m, elliptic_re)) {
        f.form = AutomorphismFormula::Form::elliptic;
        f.e = std::stoll(m[1]);
        if (m[2].matched) {
            auto v = take("t");
            if (!v) throw DomainError("t is used but not bound");
            auto items = bracketed_items(*v, '(', ')');
            if (items.size() != 2) throw DomainError("t needs two coordinates");
            f.t = {mod_one(parse_rational(items[0])), mod_one(parse_rational(items[1]))};
            if (f.t[0] == 0 && f.t[1] == 0) throw DomainError("t must be nonzero when written");
        }
    } else if (std::regex_match(head, star_re)) {
        f.form = AutomorphismFormula::Form::star;
        auto v = take("u");
        if (!v) throw DomainError("u is used but not bound");
        f.u = mod_one(parse_rational(*v));
    } else if (std::regex_match(head, perm_re)) {
        f.form = AutomorphismFormula::Form::permutation;
        auto v = take("sigma");
        if (!v) throw DomainError("sigma is used but not bound");
        for (const auto& x : bracketed_items(*v, '[', ']')) {
            const auto n = to_int64(parse_integer(x));
            if (n < 0) throw DomainError("sigma entries must be nonnegative");
            f.sigma.push_back(static_cast<std::size_t>(n));
        }
    } else {
        throw DomainError("unrecognized automorphism formula: " + text);
    }
    auto a = take("a");
    if (!a) throw DomainError("translation a must be bound");
    f.a = parse_point(*a);
    if (!binds.empty()) throw DomainError("unused binding " + binds.begin()->first);
    return f;
}

DiagonalAutomorphism realize(const AutomorphismFormula& f, const CurveModel& c) {
    if (!c.torsion().contains(f.a)) throw DomainError("translation rank does not match the model");
    DiagonalAutomorphism out;
    out.translation = f.a;
    const std::size_t n = c.size();
    switch (f.form) {
        case AutomorphismFormula::Form::cycle: {
            if (!c.is_cycle()) throw DomainError("cycle formula needs a cycle model");
            const auto N = static_cast<std::int64_t>(n);
            if (denominator_of(f.zeta * N) != 1) throw DomainError("zeta^i is not well defined on Z/" + std::to_string(N));
            for (std::int64_t i = 0; i < N; ++i) {
                out.curve.perm.push_back(static_cast<std::size_t>(floor_mod(f.sign * i + f.shift, N)));
                const Rational c_i = f.zeta * i + f.eps;
                out.curve.maps.push_back({f.inverting ? ChartMap::invert(c_i) : ChartMap::scale(c_i), std::nullopt, std::nullopt});
            }
            break;
        }
        case AutomorphismFormula::Form::elliptic:
            if (!c.elliptic) throw DomainError("elliptic formula needs a smooth elliptic model");
            out.curve.perm = {0};
            out.curve.maps = {ComponentMap{{}, EllipticMap{floor_mod(f.e, std::int64_t{c.aut_order()}), f.t}, std::nullopt}};
            break;
        case AutomorphismFormula::Form::star: {
            if (c.shape.family != CurveFamily::IStar) throw DomainError("star formula needs an I_R* model");
            const std::int64_t r = c.shape.r;
            if (denominator_of(f.u * r) != 1) throw DomainError("u^R must be 1 so that the tails stay fixed");
            for (std::size_t i = 0; i < n; ++i) {
                out.curve.perm.push_back(i);
                const Rational exponent = i < 4 ? Rational(0) : Rational(f.u * static_cast<std::int64_t>(i - 4));
                out.curve.maps.push_back({ChartMap::scale(exponent), std::nullopt, std::nullopt});
            }
            break;
        }
        case AutomorphismFormula::Form::permutation:
            out.curve = realize_permutation(c, f.sigma);
            break;
    }
    if (auto bad = check_automorphism(c, out); !bad.empty()) throw DomainError(bad.front());
    return out;
}

}  // namespace kodaira
