#pragma once

#include "kodaira/integer.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace kodaira {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Integer>& entries() const { return entries_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    // Fraction-free (Bareiss) elimination.
    Integer determinant() const;
    std::vector<std::vector<Integer>> to_rows() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t r);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

struct SmithResult {
    // min(rows, cols) diagonal entries, nonnegative, d_i | d_{i+1}, zeros last.
    std::vector<Integer> factors;
    IntMatrix left;
    IntMatrix right;
};

SmithResult smith_normal_form(const IntMatrix& m);

// Columns form a basis of {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Exact inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    // Accepts arbitrary nonnegative cyclic orders (0 meaning Z) and normalizes.
    static FgAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
    // Factors must already satisfy 2 <= d_1 | d_2 | ...; throws otherwise.
    static FgAbelianGroup from_invariant_factors(std::vector<Integer> factors, std::size_t free_rank);
    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup cyclic(const Integer& n);
    static FgAbelianGroup free(std::size_t rank);
    // "0", "Z/4", "Z/2 + Z/2", "Z/3 + Z^2", also "(Z/2)^2".
    static FgAbelianGroup parse(const std::string& text);

    const std::vector<Integer>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    // Nullopt for infinite groups.
    std::optional<Integer> order() const;
    Integer exponent() const;
    // Relation matrix diag(d_1, ..., d_k, 0, ..., 0).
    IntMatrix relation_matrix() const;
    std::size_t coordinate_count() const { return factors_.size() + free_rank_; }

    std::string to_string() const;
    auto operator<=>(const FgAbelianGroup& other) const = default;
    bool operator==(const FgAbelianGroup& other) const = default;

private:
    std::vector<Integer> factors_;
    std::size_t free_rank_ = 0;
};

struct GroupElement {
    FgAbelianGroup parent;
    std::vector<Integer> coordinates;

    GroupElement(FgAbelianGroup g, std::vector<Integer> coords);
    bool operator==(const GroupElement& other) const = default;
};

FgAbelianGroup cokernel(const IntMatrix& m);

// ker(sum) / im(intersection) for a symmetric matrix with zero row sums.
FgAbelianGroup discriminant_group(const IntMatrix& intersection);
// Same with the weighted degree x -> sum w_i x_i; requires sum_i w_i q_ij = 0 for all j.
FgAbelianGroup discriminant_group(const IntMatrix& intersection, const std::vector<Integer>& weights);

FgAbelianGroup quotient(const FgAbelianGroup& g, const std::vector<GroupElement>& generators);
FgAbelianGroup dual(const FgAbelianGroup& g);
std::optional<Integer> element_order(const GroupElement& e);
bool is_cyclic(const FgAbelianGroup& g);

// Isomorphism type of the subgroup generated by the given elements.
FgAbelianGroup subgroup_generated(const FgAbelianGroup& g, const std::vector<GroupElement>& generators);
// Kernel of the endomorphism of a finite group given by an integer matrix on coordinates.
FgAbelianGroup endomorphism_kernel(const FgAbelianGroup& g, const IntMatrix& f);
// Every element of a finite group, in lexicographic coordinate order.
std::vector<GroupElement> elements(const FgAbelianGroup& g);
// Some subgroup isomorphic to h, given by generators; nullopt if h does not embed.
std::optional<std::vector<GroupElement>> find_subgroup(const FgAbelianGroup& g, const FgAbelianGroup& h);

}  // namespace kodaira
