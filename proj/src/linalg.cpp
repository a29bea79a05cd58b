#include "weyl/linalg.hpp"

#include <algorithm>

namespace weyl::oracle {

Vector zero_vector(const std::shared_ptr<const CyclotomicField>& field, std::size_t n) {
    return Vector(n, FieldElement::zero(field));
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Subspace::Subspace(std::shared_ptr<const CyclotomicField> field, std::size_t ambient_dim)
    : field_(std::move(field)), dim_(ambient_dim) {}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != dim_) throw DomainError("DimensionMismatch", "vector length differs from ambient dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElement c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!rows_[r][k].is_zero()) v[k] -= c * rows_[r][k];
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

bool Subspace::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && r[piv].is_zero()) ++piv;
    if (piv == dim_) return false;
    const FieldElement inv = r[piv].inverse();
    for (auto& x : r) x *= inv;
    // keep existing rows reduced at the new pivot
    for (auto& row : rows_) {
        const FieldElement c = row[piv];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < dim_; ++k)
            if (!r[k].is_zero()) row[k] -= c * r[k];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

std::vector<Vector> kernel(const std::shared_ptr<const CyclotomicField>& field, const std::vector<Vector>& columns) {
    const std::size_t ncols = columns.size();
    if (ncols == 0) return {};
    const std::size_t nrows = columns.front().size();
    // row-reduce the matrix whose k-th column is columns[k]
    std::vector<Vector> m(nrows, zero_vector(field, ncols));
    for (std::size_t k = 0; k < ncols; ++k)
        for (std::size_t r = 0; r < nrows; ++r) m[r][k] = columns[k][r];
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t p = row;
        while (p < nrows && m[p][col].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[row]);
        const FieldElement inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const FieldElement f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<Vector> out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        Vector v = zero_vector(field, ncols);
        v[free] = FieldElement::rational(field, 1);
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const std::shared_ptr<const CyclotomicField>& field, std::size_t n, const std::vector<Vector>& rows) {
    Subspace s(field, n);
    for (const auto& r : rows) s.insert(r);
    return s.dim();
}

} // namespace weyl::oracle
