#include "cybundle/int_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace cybundle::fga {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
    IntMatrix s = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] += rhs.entries_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix n = *this;
    for (auto& e : n.entries_) e = -e;
    return n;
}

IntMatrix IntMatrix::augmented(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("IntMatrix: row mismatch in augment");
    IntMatrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) m.at(i, cols_ + j) = rhs.at(i, j);
    }
    return m;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                               std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw std::invalid_argument("IntMatrix: submatrix out of range");
    IntMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& e) { return e == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
    if (rows_ == 0) return 1;
    // Bareiss: exact integer elimination, all divisions exact.
    IntMatrix m = *this;
    Int prev = 1;
    Int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < rows_; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i)
            for (std::size_t j = k + 1; j < cols_; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(rows_ - 1, cols_ - 1);
}

bool IntMatrix::is_unimodular() const {
    if (rows_ != cols_) return false;
    Int d = determinant();
    return d == 1 || d == -1;
}

std::size_t IntMatrix::rank() const { return smith_normal_form(*this).rank(); }

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::nontrivial_invariants() const {
    std::vector<Int> f;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d.at(i, i) > 1) f.push_back(d.at(i, i));
    return f;
}

namespace {

struct Pivot {
    std::size_t row = 0;
    std::size_t col = 0;
    bool found = false;
};

Pivot find_pivot(const IntMatrix& m, std::size_t k) {
    Pivot p;
    Int best = 0;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v == 0) continue;
            Int a = abs_int(v);
            if (!p.found || a < best) {
                best = a;
                p = {i, j, true};
            }
        }
    return p;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += factor * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

bool is_cleared(const IntMatrix& m, std::size_t k) {
    for (std::size_t i = k + 1; i < m.rows(); ++i)
        if (m.at(i, k) != 0) return false;
    for (std::size_t j = k + 1; j < m.cols(); ++j)
        if (m.at(k, j) != 0) return false;
    return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n), m, n};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    const std::size_t steps = std::min(m, n);
    for (std::size_t k = 0; k < steps; ++k) {
        for (;;) {
            Pivot p = find_pivot(d, k);
            if (!p.found) break;
            swap_rows(d, k, p.row);
            swap_rows(u, k, p.row);
            swap_cols(d, k, p.col);
            swap_cols(v, k, p.col);
            for (std::size_t i = k + 1; i < m; ++i)
                if (d.at(i, k) != 0) {
                    Int q = floor_div(d.at(i, k), d.at(k, k));
                    add_row(d, i, k, -q);
                    add_row(u, i, k, -q);
                }
            for (std::size_t j = k + 1; j < n; ++j)
                if (d.at(k, j) != 0) {
                    Int q = floor_div(d.at(k, j), d.at(k, k));
                    add_col(d, j, k, -q);
                    add_col(v, j, k, -q);
                }
            if (!is_cleared(d, k)) continue;
            if (d.at(k, k) < 0) {
                negate_row(d, k);
                negate_row(u, k);
            }
            // Divisibility: fold a non-multiple row into row k and repeat.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < m && divides_all; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        add_row(d, k, i, 1);
                        add_row(u, k, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (k < m && d.at(k, k) < 0) {
            negate_row(d, k);
            negate_row(u, k);
        }
    }
    return s;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    HermiteDecomposition res{a, IntMatrix::identity(m), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    std::size_t pr = 0;  // next pivot row
    for (std::size_t col = 0; col < n && pr < m; ++col) {
        // Euclidean reduction within the column until one nonzero survives.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = pr; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == m || abs_int(h.at(i, col)) < abs_int(h.at(best, col))) best = i;
            }
            if (best == m) break;  // column is zero below pr
            bool lone = true;
            for (std::size_t i = pr; i < m; ++i) {
                if (i == best || h.at(i, col) == 0) continue;
                Int q = floor_div(h.at(i, col), h.at(best, col));
                add_row(h, i, best, -q);
                add_row(u, i, best, -q);
                lone = false;
            }
            if (lone) {
                swap_rows(h, pr, best);
                swap_rows(u, pr, best);
                if (h.at(pr, col) < 0) {
                    negate_row(h, pr);
                    negate_row(u, pr);
                }
                for (std::size_t i = 0; i < pr; ++i) {
                    Int q = floor_div(h.at(i, col), h.at(pr, col));
                    add_row(h, i, pr, -q);
                    add_row(u, i, pr, -q);
                }
                ++pr;
                break;
            }
        }
    }
    res.rank = pr;
    return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    const std::size_t r = s.rank();
    const std::size_t n = a.cols();
    IntMatrix basis(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) basis.at(i, j - r) = s.v.at(i, j);
    return basis;
}

std::optional<LinearSolution> solve_integer_linear(const IntMatrix& a, const std::vector<Int>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_integer_linear: right-hand side length mismatch");
    SmithDecomposition s = smith_normal_form(a);
    const std::size_t r = s.rank();
    const std::size_t n = a.cols();
    std::vector<Int> ub = s.u * b;
    std::vector<Int> y(n, Int(0));
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < r) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    LinearSolution sol;
    sol.particular = s.v * y;
    for (std::size_t j = r; j < n; ++j) sol.kernel_basis.push_back(s.v.column(j));
    return sol;
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    // Row HNF of the transpose; nonzero rows back as columns.
    HermiteDecomposition h = hermite_normal_form(a.transpose());
    IntMatrix basis(a.rows(), h.rank);
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) basis.at(j, i) = h.h.at(i, j);
    return basis;
}

IntMatrix left_kernel_rows(const IntMatrix& a) {
    IntMatrix k = kernel_basis(a.transpose());  // columns span {x : a^T x = 0}
    HermiteDecomposition h = hermite_normal_form(k.transpose());
    IntMatrix rows(h.rank, a.rows());
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) rows.at(i, j) = h.h.at(i, j);
    return rows;
}

}  // namespace cybundle::fga
