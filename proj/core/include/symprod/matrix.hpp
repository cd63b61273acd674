#ifndef SYMPROD_MATRIX_HPP
#define SYMPROD_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod {

/// Dense row-major matrix over the rationals. Sized for the desk-scale
/// blocks produced by the brute-force oracles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Row-major nested initializer, all rows must have equal length.
    Matrix(const std::vector<std::vector<Rational>>& rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, Matrix m);
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one basis vector per column of the result.
Matrix null_space(const Matrix& m);

/// Invertible P, Q with P · m · Q^T = [[I_r, 0], [0, 0]] (r = rank).
struct RankNormalForm {
    Matrix row_transform;    // P
    Matrix column_transform; // Q
    std::size_t rank = 0;
};
RankNormalForm rank_normal_form(const Matrix& m);

/// Congruence diagonalization of a symmetric matrix: P · s · P^T = D, with P
/// invertible and D diagonal. Zero diagonals are handled by a symmetric
/// pivot on a nonzero off-diagonal entry.
struct CongruenceDiagonalization {
    Matrix transform;              // P
    std::vector<Rational> diagonal; // entries of D
};
CongruenceDiagonalization congruence_diagonalize(const Matrix& s);

/// Inertia of a symmetric rational matrix.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long long signature() const
    {
        return static_cast<long long>(positive) - static_cast<long long>(negative);
    }
};
Inertia inertia(const Matrix& s);

} // namespace symprod

#endif
