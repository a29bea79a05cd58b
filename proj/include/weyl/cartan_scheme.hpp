#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weyl/gcm.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

/// Diagonal braiding q_ij = chi(alpha_i, alpha_j).
class BraidingMatrix {
public:
    BraidingMatrix() = default;
    explicit BraidingMatrix(std::vector<std::vector<ScalarValue>> rows);

    std::size_t rank() const noexcept { return rank_; }
    const ScalarValue& operator()(std::size_t i, std::size_t j) const { return data_[i * rank_ + j]; }

    /// chi(a, b) for a, b in Z^rank, via bilinearity.
    ScalarValue chi(const RootVector& a, const RootVector& b) const;

    std::vector<std::vector<ScalarValue>> rows() const;

    friend bool operator==(const BraidingMatrix&, const BraidingMatrix&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<ScalarValue> data_;
};

/// Twist-equivalence invariant: the q_ii together with q_ij q_ji for i < j.
struct TwistKey {
    std::vector<ScalarValue> diagonal;
    std::vector<ScalarValue> products;

    friend bool operator==(const TwistKey&, const TwistKey&) = default;
    friend auto operator<=>(const TwistKey&, const TwistKey&) = default;
};

TwistKey twist_key(const BraidingMatrix& q);

struct SchemeObject {
    std::size_t id = 0;
    std::string name;
    GeneralizedCartanMatrix cartan;
    std::optional<BraidingMatrix> braiding;
    std::optional<TwistKey> key;
};

/// Index set {0..rank-1}, objects, involutions r_i and one GCM per object.
class CartanScheme {
public:
    CartanScheme() = default;
    CartanScheme(std::size_t rank, std::vector<SchemeObject> objects,
                 std::vector<std::vector<std::size_t>> object_maps);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    const std::vector<SchemeObject>& objects() const noexcept { return objects_; }
    const SchemeObject& object(std::size_t x) const { return objects_.at(x); }
    const GeneralizedCartanMatrix& cartan(std::size_t x) const { return objects_.at(x).cartan; }
    /// r_i(X)
    std::size_t r(std::size_t i, std::size_t x) const { return maps_.at(i).at(x); }
    const std::vector<std::vector<std::size_t>>& object_maps() const noexcept { return maps_; }
    /// s_i^X as a lattice map.
    const LatticeMap& reflection(std::size_t i, std::size_t x) const { return reflections_.at(x).at(i); }

    bool has_braiding() const noexcept;
    std::optional<std::size_t> find(const std::string& name) const;
    /// Object id from a name, or from a 1-based / 0-based numeric label.
    std::size_t resolve(const std::string& label) const;

    /// Objects reachable from x under the r_i, sorted.
    std::vector<std::size_t> component(std::size_t x) const;
    bool is_connected() const;

private:
    std::size_t rank_ = 0;
    std::vector<SchemeObject> objects_;
    std::vector<std::vector<std::size_t>> maps_;
    std::vector<std::vector<LatticeMap>> reflections_;
};

struct AxiomViolation {
    std::string axiom;  // "C1", "C2" or "braiding"
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t object = 0;
    std::string message;
};

using AxiomReport = std::vector<AxiomViolation>;

class BoundExceeded : public DomainError {
public:
    BoundExceeded(std::size_t i, std::size_t j);
    std::size_t i, j;
};

class NotIFinite : public DomainError {
public:
    NotIFinite(const std::string& object, std::size_t i, std::size_t j);
    std::string object;
    std::size_t i, j;
};

class AxiomC1Violation : public DomainError {
public:
    AxiomC1Violation(std::size_t i, const std::string& object);
};

class AxiomC2Violation : public DomainError {
public:
    AxiomC2Violation(std::size_t i, std::size_t j, const std::string& object);
};

inline constexpr Int kDefaultExponentBound = 8;
inline constexpr std::size_t kDefaultMaxObjects = 10000;

/// a_ij of a diagonal braiding: 2 on the diagonal, otherwise -m for the least
/// m >= 0 with (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0. nullopt when no such
/// m <= bound exists.
std::optional<Int> diagonal_cartan_entry(const BraidingMatrix& q, std::size_t i, std::size_t j,
                                         Int bound = kDefaultExponentBound);

/// Row i of the Cartan matrix; throws BoundExceeded on the first undefined entry.
std::vector<Int> diagonal_cartan_row(const BraidingMatrix& q, std::size_t i, Int bound = kDefaultExponentBound);

/// Braiding of the reflected object: q'_jk = chi(s_i alpha_j, s_i alpha_k).
BraidingMatrix reflect_braiding(const BraidingMatrix& q, std::size_t i, const std::vector<Int>& a_row);

CartanScheme build_from_braiding(const BraidingMatrix& q, std::size_t max_objects = kDefaultMaxObjects,
                                 Int exponent_bound = kDefaultExponentBound);

struct ObjectSpec {
    std::string name;
    std::vector<std::vector<Int>> cartan;
};

/// maps[i][x] = r_i(x) over the positions of `objects`.
CartanScheme build_from_matrices(const std::vector<ObjectSpec>& objects,
                                 const std::vector<std::vector<std::size_t>>& maps);

AxiomReport check_axioms(const CartanScheme& scheme, Int exponent_bound = kDefaultExponentBound);

} // namespace weyl
