#include "amalgam/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace amalgam {

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec: size mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix: entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("matrix: row size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix: sum shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix: difference shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - o.data_[i];
    return s;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix: apply size mismatch");
    Vec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) s += at(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
        throw std::invalid_argument("matrix: vstack column mismatch");
    std::size_t cols = rows_ ? cols_ : o.cols_;
    Matrix s(rows_ + o.rows_, cols);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols; ++c) s.at(r, c) = at(r, c);
    for (std::size_t r = 0; r < o.rows_; ++r)
        for (std::size_t c = 0; c < cols; ++c) s.at(rows_ + r, c) = o.at(r, c);
    return s;
}

Vec Matrix::flatten() const { return data_; }

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.matrix = m;
    Matrix& a = res.matrix;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < nc && lead < nr; ++col) {
        // pick the nonzero candidate with the smallest digit footprint
        std::size_t best = nr;
        std::size_t best_size = 0;
        for (std::size_t r = lead; r < nr; ++r) {
            if (a.at(r, col).is_zero()) continue;
            std::size_t sz = a.at(r, col).digit_size();
            if (best == nr || sz < best_size) { best = r; best_size = sz; }
        }
        if (best == nr) continue;
        if (best != lead)
            for (std::size_t c = 0; c < nc; ++c) std::swap(a.at(lead, c), a.at(best, c));
        Rational inv = a.at(lead, col).reciprocal();
        for (std::size_t c = col; c < nc; ++c) a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (std::size_t c = col; c < nc; ++c)
                a.at(r, c) -= f * a.at(lead, c);
        }
        res.pivot_columns.push_back(col);
        ++lead;
    }
    res.rank = res.pivot_columns.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix null_space_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t p : r.pivot_columns) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(nc);
        v[free_col] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = -r.matrix.at(i, free_col);
        basis.push_back(std::move(v));
    }
    Matrix nb = Matrix::from_rows(basis, nc);
    return rref(nb).matrix;  // canonical representative
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(aug);
    for (std::size_t p : rr.pivot_columns)
        if (p == m.cols()) return std::nullopt;  // inconsistent
    Vec x(m.cols());
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        x[rr.pivot_columns[i]] = rr.matrix.at(i, m.cols());
    return x;
}

}  // namespace amalgam
