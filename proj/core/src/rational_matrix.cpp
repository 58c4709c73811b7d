#include "cybundle/rational_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cybundle::fga {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("RationalMatrix: dimension mismatch");
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RationalMatrix: dimension mismatch in sum");
    RationalMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += rhs.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::augmented(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: row mismatch in augment");
    RationalMatrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, cols_ + j) = rhs.at(i, j);
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& e) { return e == 0; });
}

Int RationalMatrix::denominator_lcm() const {
    Int l = 1;
    for (const Rational& e : entries_) l = lcm_int(l, denominator(e));
    return l;
}

IntMatrix RationalMatrix::scaled_integral() const {
    Int l = denominator_lcm();
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Rational v = at(i, j) * Rational(l);
            m.at(i, j) = numerator(v);
        }
    return m;
}

namespace {

// Gaussian elimination with exact arithmetic; returns pivot columns and the
// reduced matrix (row echelon).
struct Echelon {
    RationalMatrix m;
    std::vector<std::size_t> pivot_cols;
};

Echelon echelonize(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = pr; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(sel, j));
        Rational inv = Rational(1) / m.at(pr, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pr, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        pivots.push_back(col);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t RationalMatrix::rank() const { return echelonize(*this).pivot_cols.size(); }

std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a,
                                                    const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: length mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = echelonize(std::move(aug));
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        if (e.pivot_cols[r] == a.cols()) return std::nullopt;  // pivot in the RHS column
        x[e.pivot_cols[r]] = e.m.at(r, a.cols());
    }
    return x;
}

std::size_t rational_nullity(const RationalMatrix& a) { return a.cols() - a.rank(); }

IntMatrix rational_left_kernel_rows(const RationalMatrix& a) {
    // x a == 0 over Q has the same solution rows as x A == 0 for the scaled
    // integral A, whose left kernel lattice is already canonical.
    return left_kernel_rows(a.scaled_integral());
}

}  // namespace cybundle::fga
