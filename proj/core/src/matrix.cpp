#include "symprod/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "symprod/errors.hpp"

namespace symprod {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw precondition_error("ragged matrix rows");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& v : data_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_symmetric() const
{
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) {
                return false;
            }
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) {
        throw precondition_error("matrix product shape mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw precondition_error("matrix sum shape mismatch");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + Rational(-1) * b;
}

Matrix operator*(const Rational& s, Matrix m)
{
    for (auto& v : m.data_) {
        v *= s;
    }
    return m;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : ", [");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c == 0 ? "" : ", ") << (*this)(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns. When `ops` is
// non-null the same row operations are applied to it.
std::vector<std::size_t> rref(Matrix& m, Matrix* ops)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        auto swap_rows = [](Matrix& a, std::size_t r1, std::size_t r2) {
            for (std::size_t c = 0; c < a.cols(); ++c) {
                std::swap(a(r1, c), a(r2, c));
            }
        };
        if (pivot != row) {
            swap_rows(m, pivot, row);
            if (ops) {
                swap_rows(*ops, pivot, row);
            }
        }
        const Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m(row, c) *= inv;
        }
        if (ops) {
            for (std::size_t c = 0; c < ops->cols(); ++c) {
                (*ops)(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) {
                continue;
            }
            const Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) {
                    m(r, c) -= f * m(row, c);
                }
            }
            if (ops) {
                for (std::size_t c = 0; c < ops->cols(); ++c) {
                    if (!(*ops)(row, c).is_zero()) {
                        (*ops)(r, c) -= f * (*ops)(row, c);
                    }
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Matrix& m)
{
    Matrix work = m;
    return rref(work, nullptr).size();
}

Matrix null_space(const Matrix& m)
{
    Matrix work = m;
    const auto pivots = rref(work, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    Matrix basis(m.cols(), m.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        basis(free, k) = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            basis(pivots[i], k) = -work(i, free);
        }
        ++k;
    }
    return basis;
}

RankNormalForm rank_normal_form(const Matrix& m)
{
    // Row operations E bring m to reduced echelon form R = E m. Column
    // operations C (expressed as R C = [[I,0],[0,0]]) clear the non-pivot
    // columns and move pivots to the front. Then P = E and Q = C^T.
    Matrix r = m;
    Matrix e = Matrix::identity(m.rows());
    const auto pivots = rref(r, &e);
    const std::size_t rk = pivots.size();

    Matrix c(m.cols(), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < rk; ++i) {
        is_pivot[pivots[i]] = true;
        c(pivots[i], i) = Rational(1);
    }
    // Non-pivot columns become null vectors of R, placed after the pivots.
    std::size_t k = rk;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        c(free, k) = Rational(1);
        for (std::size_t i = 0; i < rk; ++i) {
            c(pivots[i], k) = -r(i, free);
        }
        ++k;
    }
    return {e, c.transpose(), rk};
}

CongruenceDiagonalization congruence_diagonalize(const Matrix& s)
{
    if (!s.is_symmetric()) {
        throw precondition_error("congruence diagonalization needs a symmetric matrix");
    }
    const std::size_t n = s.rows();
    Matrix a = s;
    Matrix p = Matrix::identity(n);

    // Basis vector i <- basis vector i + f * basis vector j, applied as a
    // congruence a <- E a E^T with E = I + f e_i e_j^T.
    auto add_basis = [&](std::size_t i, std::size_t j, const Rational& f) {
        for (std::size_t c = 0; c < n; ++c) {
            a(i, c) += f * a(j, c);
        }
        for (std::size_t r = 0; r < n; ++r) {
            a(r, i) += f * a(r, j);
        }
        for (std::size_t c = 0; c < n; ++c) {
            p(i, c) += f * p(j, c);
        }
    };

    auto swap_basis = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(a(i, c), a(j, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(a(r, i), a(r, j));
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(p(i, c), p(j, c));
        }
    };

    std::vector<Rational> diagonal(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            // Find any usable pivot in the trailing block.
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!a(i, i).is_zero()) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with == n) {
                // 2x2 pivot: a(k,k) = 0 = a(j,j), a(k,j) != 0. Replacing e_k by
                // e_k + e_j gives diagonal 2 a(k,j) != 0.
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (!a(k, j).is_zero()) {
                        add_basis(k, j, Rational(1));
                        break;
                    }
                }
            } else {
                swap_basis(k, swap_with);
            }
        }
        const Rational pivot = a(k, k);
        diagonal[k] = pivot;
        if (pivot.is_zero()) {
            continue; // row k of the trailing block is entirely zero
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (!a(i, k).is_zero()) {
                add_basis(i, k, -(a(i, k) / pivot));
            }
        }
    }
    return {p, diagonal};
}

Inertia inertia(const Matrix& s)
{
    Inertia out;
    for (const auto& d : congruence_diagonalize(s).diagonal) {
        if (d.sign() > 0) {
            ++out.positive;
        } else if (d.sign() < 0) {
            ++out.negative;
        } else {
            ++out.zero;
        }
    }
    return out;
}

} // namespace symprod
