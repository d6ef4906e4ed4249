#include "amalgam/subspace.hpp"

#include <stdexcept>

namespace amalgam {

Subspace Subspace::span(const Matrix& m, std::size_t ambient_dim) {
    if (m.rows() != 0 && m.cols() != ambient_dim)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    RrefResult r = rref(m);
    Subspace s(ambient_dim);
    Matrix b(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < ambient_dim; ++c) b.at(i, c) = r.matrix.at(i, c);
    s.basis_ = std::move(b);
    return s;
}

Subspace Subspace::span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    return span(Matrix::from_rows(vectors, ambient_dim), ambient_dim);
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = Matrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector dimension mismatch");
    return coordinates_of(v).has_value();
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
    // Reduce v against the echelon basis; leftovers mean v is outside.
    Vec w = v;
    Vec coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        // pivot column of row i = first nonzero column
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        coords[i] = w[p];
        if (!w[p].is_zero()) {
            Rational f = w[p];
            for (std::size_t c = 0; c < ambient_; ++c) w[c] -= f * basis_.at(i, c);
        }
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    return span(basis_.vstack(other.basis_), ambient_);
}

Subspace Subspace::intersection(const Subspace& other) const {
    // Zassenhaus: echelonize [U U; V 0]; rows whose left half is zero
    // carry an intersection basis in the right half.
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace: ambient dimension mismatch");
    const std::size_t n = ambient_;
    Matrix block(dim() + other.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            block.at(i, c) = basis_.at(i, c);
            block.at(i, n + c) = basis_.at(i, c);
        }
    for (std::size_t i = 0; i < other.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c)
            block.at(dim() + i, c) = other.basis_.at(i, c);
    RrefResult r = rref(block);
    std::vector<Vec> inter;
    for (std::size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c)
            left_zero = r.matrix.at(i, c).is_zero();
        if (!left_zero) continue;
        Vec v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = r.matrix.at(i, n + c);
        if (!is_zero_vec(v)) inter.push_back(std::move(v));
    }
    return span_of(inter, n);
}

SubspaceOps subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace_ops: ambient dimension mismatch");
    SubspaceOps r;
    r.sum = a.sum(b);
    r.intersection = a.intersection(b);
    r.a_contained_in_b = b.contains(a);
    r.equal = (a == b);
    return r;
}

}  // namespace amalgam
