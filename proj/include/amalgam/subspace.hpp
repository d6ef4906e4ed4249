#ifndef AMALGAM_SUBSPACE_HPP
#define AMALGAM_SUBSPACE_HPP

#include "amalgam/matrix.hpp"

namespace amalgam {

/// Subspace of Q^n, stored as its unique reduced row-echelon basis so
/// that equal subspaces compare equal syntactically.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Span of the rows of m (rows may be dependent or zero).
    static Subspace span(const Matrix& m, std::size_t ambient_dim);
    static Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool is_full() const { return dim() == ambient_; }
    bool is_zero() const { return dim() == 0; }

    /// Coordinates of v in the echelon basis; nullopt when v is outside.
    std::optional<Vec> coordinates_of(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // dim x ambient, RREF, no zero rows
};

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool a_contained_in_b = false;
    bool equal = false;
};

/// Computes sum/intersection/containment/equality in one call.
/// Throws std::invalid_argument when ambient dimensions differ.
SubspaceOps subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace amalgam

#endif
