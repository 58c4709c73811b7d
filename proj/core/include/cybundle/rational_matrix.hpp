#pragma once

#include "cybundle/int_matrix.hpp"
#include "cybundle/integers.hpp"

#include <optional>
#include <vector>

namespace cybundle::fga {

// Dense exact rational matrix; companion to IntMatrix for the torus-point
// blocks. Only what the Picard layer needs: products, solving, kernels.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) {
        return RationalMatrix(rows, cols);
    }
    static RationalMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix augmented(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix&) const = default;

    bool is_zero() const;
    std::size_t rank() const;

    // Least common multiple of entry denominators (1 for an empty matrix).
    Int denominator_lcm() const;
    // this * lcm, as an integer matrix.
    IntMatrix scaled_integral() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// One rational solution of a x == b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a,
                                                    const std::vector<Rational>& b);

// Q-dimension of {x : a x == 0}.
std::size_t rational_nullity(const RationalMatrix& a);

// Canonical integer rows spanning {x : x a == 0} over Q.
IntMatrix rational_left_kernel_rows(const RationalMatrix& a);

}  // namespace cybundle::fga
