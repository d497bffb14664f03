#include "kodaira/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kodaira {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        for (long long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("ragged matrix: row " + std::to_string(i));
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix shape mismatch in product");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += a * other(k, j);
        }
    return p;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Integer IntMatrix::determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

SmithResult smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix left = IntMatrix::identity(m.rows());
    IntMatrix right = IntMatrix::identity(m.cols());
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t diag = std::min(rows, cols);

    // Smallest absolute nonzero entry in the trailing block, first in row-major order.
    auto find_pivot = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                Integer v = abs_value(a(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    };
    auto move_to = [&](std::size_t t, std::size_t pi, std::size_t pj) {
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
    };

    for (std::size_t t = 0; t < diag; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(t, pi, pj)) break;
        move_to(t, pi, pj);
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                left.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                right.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                find_pivot(t, pi, pj);
                move_to(t, pi, pj);
                continue;
            }
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        left.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithResult result;
    for (std::size_t i = 0; i < diag; ++i) result.factors.push_back(a(i, i));
    result.left = std::move(left);
    result.right = std::move(right);
    return result;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    std::size_t rank = 0;
    for (const Integer& d : snf.factors)
        if (d != 0) ++rank;
    IntMatrix basis(m.cols(), m.cols() - rank);
    for (std::size_t j = rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j - rank) = snf.right(i, j);
    return basis;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(m(i, j));
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw DomainError("matrix is singular");
        std::swap(aug[p], aug[c]);
        Rational pivot = aug[c][c];
        for (auto& v : aug[c]) v /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = aug[i][n + j];
            if (denominator_of(v) != 1) throw DomainError("matrix is not unimodular");
            inv(i, j) = numerator_of(v);
        }
    return inv;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
    IntMatrix d(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0) throw DomainError("negative cyclic order");
        d(i, i) = orders[i];
    }
    return cokernel(d);
}

FgAbelianGroup FgAbelianGroup::cyclic(const Integer& n) {
    return from_cyclic_orders({n});
}

FgAbelianGroup FgAbelianGroup::free(std::size_t rank) {
    FgAbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

FgAbelianGroup FgAbelianGroup::parse(const std::string& text) {
    std::string body = trim(text);
    if (body == "0" || body.empty()) return trivial();
    std::vector<Integer> orders;
    std::stringstream stream(body);
    std::string term;
    while (std::getline(stream, term, '+')) {
        term = trim(term);
        std::size_t copies = 1;
        if (!term.empty() && term.front() == '(') {
            auto close = term.find(')');
            if (close == std::string::npos || close + 2 > term.size() || term[close + 1] != '^')
                throw DomainError("malformed group term '" + term + "'");
            copies = static_cast<std::size_t>(to_int64(parse_integer(term.substr(close + 2))));
            term = term.substr(1, close - 1);
        }
        Integer order;
        if (term == "Z") {
            order = 0;
        } else if (term.rfind("Z^", 0) == 0) {
            order = 0;
            copies *= static_cast<std::size_t>(to_int64(parse_integer(term.substr(2))));
        } else if (term.rfind("Z/", 0) == 0) {
            order = parse_integer(term.substr(2));
            if (order < 1) throw DomainError("cyclic order must be positive in '" + term + "'");
        } else {
            throw DomainError("malformed group term '" + term + "'");
        }
        for (std::size_t c = 0; c < copies; ++c) orders.push_back(order);
    }
    return from_cyclic_orders(orders);
}

std::optional<Integer> FgAbelianGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    Integer n = 1;
    for (const Integer& d : factors_) n *= d;
    return n;
}

Integer FgAbelianGroup::exponent() const {
    if (free_rank_ > 0) return 0;
    return factors_.empty() ? Integer(1) : factors_.back();
}

IntMatrix FgAbelianGroup::relation_matrix() const {
    std::size_t n = coordinate_count();
    IntMatrix d(n, n);
    for (std::size_t i = 0; i < factors_.size(); ++i) d(i, i) = factors_[i];
    return d;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    for (const Integer& d : factors_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    if (free_rank_ > 0) {
        if (!out.empty()) out += " + ";
        out += free_rank_ == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank_);
    }
    return out;
}

GroupElement::GroupElement(FgAbelianGroup g, std::vector<Integer> coords)
    : parent(std::move(g)), coordinates(std::move(coords)) {
    if (coordinates.size() != parent.coordinate_count())
        throw DomainError("element has " + std::to_string(coordinates.size()) + " coordinates, group " +
                          parent.to_string() + " needs " + std::to_string(parent.coordinate_count()));
    const auto& f = parent.invariant_factors();
    for (std::size_t i = 0; i < f.size(); ++i) coordinates[i] = floor_mod(coordinates[i], f[i]);
}

FgAbelianGroup cokernel(const IntMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    std::vector<Integer> torsion;
    std::size_t free_rank = m.rows() - snf.factors.size();
    for (const Integer& d : snf.factors) {
        if (d == 0)
            ++free_rank;
        else if (d != 1)
            torsion.push_back(d);
    }
    return FgAbelianGroup::from_invariant_factors(torsion, free_rank);
}
}  // namespace kodaira

namespace kodaira {

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::vector<Integer> factors, std::size_t free_rank) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw DomainError("invariant factor " + factors[i].str() + " is below 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw DomainError("invariant factors break the divisibility chain");
    }
    FgAbelianGroup g;
    g.factors_ = std::move(factors);
    g.free_rank_ = free_rank;
    return g;
}

FgAbelianGroup discriminant_group(const IntMatrix& intersection) {
    return discriminant_group(intersection, std::vector<Integer>(intersection.rows(), Integer(1)));
}

FgAbelianGroup discriminant_group(const IntMatrix& q, const std::vector<Integer>& weights) {
    if (!q.is_square() || q.rows() == 0) throw DomainError("intersection matrix must be square and nonempty");
    if (!q.is_symmetric()) throw DomainError("intersection matrix must be symmetric");
    const std::size_t n = q.rows();
    if (weights.size() != n) throw DomainError("weight vector length does not match the matrix");
    for (const Integer& w : weights)
        if (w <= 0) throw DomainError("weights must be positive");
    for (std::size_t j = 0; j < n; ++j) {
        Integer total = 0;
        for (std::size_t i = 0; i < n; ++i) total += weights[i] * q(i, j);
        if (total != 0)
            throw DomainError("row " + std::to_string(j) + " has nonzero degree " + total.str() +
                              "; not a fiber intersection matrix");
    }
    if (n == 1) return FgAbelianGroup::trivial();
    IntMatrix degree(1, n);
    for (std::size_t i = 0; i < n; ++i) degree(0, i) = weights[i];
    SmithResult snf = smith_normal_form(degree);
    // Columns 1.. of the right transform span ker(degree); rewrite im(q) in that basis.
    IntMatrix coords = unimodular_inverse(snf.right) * q;
    IntMatrix relations(n - 1, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) relations(i - 1, j) = coords(i, j);
    return cokernel(relations);
}

namespace {

void require_member(const FgAbelianGroup& g, const GroupElement& e) {
    if (!(e.parent == g)) throw DomainError("element of " + e.parent.to_string() + " used in " + g.to_string());
}

// Columns span {c : sum c_j s_j in D Z^n} for generators s_j of Z^n / D Z^n.
IntMatrix relation_lattice(const FgAbelianGroup& g, const std::vector<GroupElement>& gens) {
    const std::size_t n = g.coordinate_count();
    const std::size_t s = gens.size();
    IntMatrix d = g.relation_matrix();
    IntMatrix block(n, s + n);
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < n; ++i) block(i, j) = gens[j].coordinates[i];
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) block(i, s + j) = -d(i, j);
    IntMatrix kernel = integer_kernel(block);
    IntMatrix projected(s, kernel.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) projected(i, j) = kernel(i, j);
    return projected;
}

}  // namespace

FgAbelianGroup quotient(const FgAbelianGroup& g, const std::vector<GroupElement>& generators) {
    const std::size_t n = g.coordinate_count();
    IntMatrix d = g.relation_matrix();
    IntMatrix block(n, n + generators.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block(i, j) = d(i, j);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        require_member(g, generators[j]);
        for (std::size_t i = 0; i < n; ++i) block(i, n + j) = generators[j].coordinates[i];
    }
    return cokernel(block);
}

FgAbelianGroup dual(const FgAbelianGroup& g) {
    if (!g.is_finite()) throw DomainError("dual of " + g.to_string() + " is not finitely generated");
    // Hom(Z^n / M Z^n, Q/Z) = M^{-T} Z^n / Z^n = coker(M^T).
    return cokernel(g.relation_matrix().transpose());
}

std::optional<Integer> element_order(const GroupElement& e) {
    const auto& f = e.parent.invariant_factors();
    for (std::size_t i = f.size(); i < e.coordinates.size(); ++i)
        if (e.coordinates[i] != 0) return std::nullopt;
    Integer order = 1;
    for (std::size_t i = 0; i < f.size(); ++i) order = lcm(order, f[i] / gcd(f[i], e.coordinates[i]));
    return order;
}

bool is_cyclic(const FgAbelianGroup& g) {
    return g.invariant_factors().size() + g.free_rank() <= 1;
}

FgAbelianGroup subgroup_generated(const FgAbelianGroup& g, const std::vector<GroupElement>& generators) {
    for (const auto& e : generators) require_member(g, e);
    if (generators.empty()) return FgAbelianGroup::trivial();
    return cokernel(relation_lattice(g, generators));
}

FgAbelianGroup endomorphism_kernel(const FgAbelianGroup& g, const IntMatrix& f) {
    if (!g.is_finite()) throw DomainError("endomorphism kernel needs a finite group");
    const std::size_t n = g.coordinate_count();
    if (f.rows() != n || f.cols() != n) throw DomainError("endomorphism matrix has the wrong shape");
    if (n == 0) return FgAbelianGroup::trivial();
    IntMatrix d = g.relation_matrix();
    IntMatrix block(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block(i, j) = f(i, j);
            block(i, n + j) = -d(i, j);
        }
    IntMatrix kernel = integer_kernel(block);
    std::vector<GroupElement> gens;
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        std::vector<Integer> coords(n);
        for (std::size_t i = 0; i < n; ++i) coords[i] = kernel(i, j);
        gens.emplace_back(g, coords);
    }
    return subgroup_generated(g, gens);
}

std::vector<GroupElement> elements(const FgAbelianGroup& g) {
    if (!g.is_finite()) throw DomainError("cannot enumerate the infinite group " + g.to_string());
    const auto& f = g.invariant_factors();
    std::vector<GroupElement> out;
    std::vector<Integer> coords(f.size(), Integer(0));
    while (true) {
        out.emplace_back(g, coords);
        std::size_t i = f.size();
        bool carried_out = true;
        while (i > 0) {
            --i;
            coords[i] += 1;
            if (coords[i] < f[i]) {
                carried_out = false;
                break;
            }
            coords[i] = 0;
        }
        if (carried_out) return out;
    }
}

std::optional<std::vector<GroupElement>> find_subgroup(const FgAbelianGroup& g, const FgAbelianGroup& h) {
    if (h.is_trivial()) return std::vector<GroupElement>{};
    if (!g.is_finite() || !h.is_finite()) throw DomainError("subgroup search needs finite groups");
    std::vector<GroupElement> all = elements(g);
    const std::size_t want = h.invariant_factors().size();
    std::vector<GroupElement> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
        if (chosen.size() == want) return subgroup_generated(g, chosen) == h;
        for (std::size_t i = start; i < all.size(); ++i) {
            chosen.push_back(all[i]);
            if (search(i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (search(0)) return chosen;
    return std::nullopt;
}

}  // namespace kodaira
