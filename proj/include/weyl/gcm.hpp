#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weyl/errors.hpp"

namespace weyl {

using Int = std::int64_t;

// Overflow-checked integer arithmetic. Root coordinates stay small, but
// long words and Hilbert coefficients must never wrap silently.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Element of Z^rank, coordinates over the simple roots.
class RootVector {
public:
    RootVector() = default;
    explicit RootVector(std::size_t rank) : coords_(rank, 0) {}
    explicit RootVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
    RootVector(std::initializer_list<Int> coords) : coords_(coords) {}

    /// The i-th simple root (0-based index).
    static RootVector simple(std::size_t rank, std::size_t i);

    std::size_t rank() const noexcept { return coords_.size(); }
    Int operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Int>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    /// All coordinates >= 0 and not all zero.
    bool is_positive() const noexcept;
    bool is_negative() const noexcept;
    Int height() const;

    RootVector operator-() const;
    RootVector operator+(const RootVector& other) const;
    RootVector operator-(const RootVector& other) const;
    RootVector operator*(Int factor) const;

    friend bool operator==(const RootVector&, const RootVector&) = default;
    /// Lexicographic on coordinates.
    friend std::strong_ordering operator<=>(const RootVector& a, const RootVector& b) {
        return a.coords_ <=> b.coords_;
    }

    std::string to_string() const;

private:
    std::vector<Int> coords_;
};

struct RootVectorHash {
    std::size_t operator()(const RootVector& v) const noexcept;
};

/// Square integer matrix acting on Z^rank by v -> M v (columns are images
/// of the simple roots).
class LatticeMap {
public:
    LatticeMap() = default;
    explicit LatticeMap(std::vector<std::vector<Int>> rows);

    static LatticeMap identity(std::size_t rank);

    std::size_t rank() const noexcept { return rank_; }
    Int operator()(std::size_t row, std::size_t col) const { return data_[row * rank_ + col]; }

    RootVector apply(const RootVector& v) const;
    RootVector column(std::size_t j) const;
    LatticeMap operator*(const LatticeMap& rhs) const;
    Int determinant() const;
    bool is_identity() const noexcept;

    std::vector<std::vector<Int>> rows() const;

    friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
    friend auto operator<=>(const LatticeMap& a, const LatticeMap& b) {
        if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rank_ = 0;
    std::vector<Int> data_;
};

/// theta x theta integer matrix with a_ii = 2, a_ij <= 0 and
/// a_ij = 0 <=> a_ji = 0.
class GeneralizedCartanMatrix {
public:
    GeneralizedCartanMatrix() = default;

    std::size_t rank() const noexcept { return rank_; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * rank_ + j]; }
    std::vector<std::vector<Int>> rows() const;
    std::vector<Int> row(std::size_t i) const;

    friend bool operator==(const GeneralizedCartanMatrix&, const GeneralizedCartanMatrix&) = default;
    friend auto operator<=>(const GeneralizedCartanMatrix& a, const GeneralizedCartanMatrix& b) {
        return a.data_ <=> b.data_;
    }

private:
    friend GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<Int>>&);
    std::size_t rank_ = 0;
    std::vector<Int> data_;
};

/// Raised by validate_gcm; (i, j) are 0-based.
class NotGCM : public DomainError {
public:
    NotGCM(std::size_t i, std::size_t j, const std::string& reason);
    std::size_t i, j;
};

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<Int>>& entries);

/// s_i(alpha_j) = alpha_j - a_ij alpha_i.
LatticeMap reflection_matrix(const GeneralizedCartanMatrix& a, std::size_t i);

/// Reflection built from a single Cartan row; used when only row i of an
/// object's matrix is relevant.
LatticeMap reflection_from_row(std::span<const Int> cartan_row, std::size_t i);

/// Applies the product maps[0] * maps[1] * ... * maps[n-1] to v.
RootVector apply_word(std::span<const LatticeMap> maps, const RootVector& v);

} // namespace weyl
