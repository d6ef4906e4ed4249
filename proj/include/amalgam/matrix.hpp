#ifndef AMALGAM_MATRIX_HPP
#define AMALGAM_MATRIX_HPP

#include "amalgam/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace amalgam {

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);

/// Dense rational matrix, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& x) const;        // this * x
    bool operator==(const Matrix& o) const = default;

    /// Stacks o below this; column counts must agree.
    Matrix vstack(const Matrix& o) const;
    /// Flattens row major into a single vector of length rows*cols.
    Vec flatten() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Unique reduced row-echelon form. Pivot rows are chosen by smallest
/// digit-size entry; the result does not depend on that choice.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0} as rows of the returned matrix (in reduced
/// row-echelon form, cols(m) columns).
Matrix null_space_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace amalgam

#endif
