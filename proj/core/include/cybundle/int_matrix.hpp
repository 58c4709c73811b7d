#pragma once

#include "cybundle/integers.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace cybundle::fga {

// Dense integer matrix with arbitrary-precision entries, row major.
// Values are immutable in spirit: all lattice algorithms below return fresh
// matrices instead of mutating their inputs.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    // Row-major initializer for tests and small fixtures.
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> column(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Columns of `rhs` appended to the right.
    IntMatrix augmented(const IntMatrix& rhs) const;
    IntMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                        std::size_t ncols) const;

    bool is_zero() const;
    bool is_identity() const;

    // Exact determinant (Bareiss fraction-free elimination); square only.
    Int determinant() const;
    bool is_unimodular() const;
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

// u * a * v == d, with u, v unimodular and d diagonal with nonnegative
// entries forming a divisibility chain d1 | d2 | ... .
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::size_t source_rows = 0;
    std::size_t source_cols = 0;

    std::size_t rank() const;
    // Diagonal entries > 1, in chain order (the torsion invariants).
    std::vector<Int> nontrivial_invariants() const;
};

// u * a == h with u unimodular and h in row-style Hermite normal form:
// row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot), zero rows last. h is the canonical representative of the
// row space of a under left GL_n(Z) action.
struct HermiteDecomposition {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};

struct LinearSolution {
    std::vector<Int> particular;
    std::vector<std::vector<Int>> kernel_basis;
};

// Deterministic Smith reduction. Pivot rule: smallest nonzero absolute
// value in the trailing submatrix, ties broken by lowest row then lowest
// column.
SmithDecomposition smith_normal_form(const IntMatrix& a);

HermiteDecomposition hermite_normal_form(const IntMatrix& a);

// Lattice basis of {x : a x == 0}, as columns.
IntMatrix kernel_basis(const IntMatrix& a);

// All integer solutions of a x == b: a particular solution plus a basis of
// the homogeneous kernel, or nullopt when no integer solution exists.
std::optional<LinearSolution> solve_integer_linear(const IntMatrix& a, const std::vector<Int>& b);

// Canonical basis (as columns) of the lattice spanned by the columns of a.
IntMatrix column_lattice_basis(const IntMatrix& a);

// Canonical integer row basis of {x : x * a == 0} (row HNF of the left
// kernel lattice).
IntMatrix left_kernel_rows(const IntMatrix& a);

}  // namespace cybundle::fga
