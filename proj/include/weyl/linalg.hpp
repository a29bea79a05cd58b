#pragma once

#include <cstddef>
#include <vector>

#include "weyl/field.hpp"

namespace weyl::oracle {

using Vector = std::vector<FieldElement>;

/// Subspace of F^n kept in reduced row echelon form, pivots normalised to 1.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::shared_ptr<const CyclotomicField> field, std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vector>& basis() const noexcept { return rows_; }

    /// v minus its projection onto the span along the pivot coordinates; a
    /// linear map whose kernel is the subspace.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Adds v to the span; returns false if it was already contained.
    bool insert(const Vector& v);
    bool contains(const Subspace& other) const;

private:
    std::shared_ptr<const CyclotomicField> field_;
    std::size_t dim_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

Vector zero_vector(const std::shared_ptr<const CyclotomicField>& field, std::size_t n);
bool is_zero(const Vector& v);

/// Basis of {c : sum_k c_k columns[k] = 0}; columns all have the same length.
std::vector<Vector> kernel(const std::shared_ptr<const CyclotomicField>& field, const std::vector<Vector>& columns);

/// Rank of a list of row vectors.
std::size_t rank(const std::shared_ptr<const CyclotomicField>& field, std::size_t n, const std::vector<Vector>& rows);

} // namespace weyl::oracle
