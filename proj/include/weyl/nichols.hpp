#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/census.hpp"
#include "weyl/linalg.hpp"

namespace weyl::oracle {

/// Word of the tensor algebra; character k is the generator index k.
using Letters = std::string;
/// Linear combination of words.
using Element = std::map<Letters, FieldElement>;

inline constexpr int kDefaultDegreeCap = 8;

class DegreeCapExceeded : public DomainError {
public:
    DegreeCapExceeded(Int degree, int cap);
};

struct GradedComponent {
    RootVector degree;
    std::vector<Letters> words;   // coordinate basis of the tensor-power component
    Subspace span;                // the Nichols algebra component inside it
    std::vector<Element> basis;   // elements spanning `span`, one per dimension
};

/// Nichols algebra of a diagonal braiding realised inside the quantum shuffle
/// algebra: product = braided shuffle, coproduct = deconcatenation. The
/// degree-d component is the span of shuffle products of generators.
class NicholsAlgebra {
public:
    explicit NicholsAlgebra(FieldBraiding q, int degree_cap = kDefaultDegreeCap);

    std::size_t rank() const noexcept { return q_.rank; }
    int degree_cap() const noexcept { return cap_; }
    const FieldBraiding& braiding() const noexcept { return q_; }
    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return q_.field; }

    FieldElement scalar(const mpq_class& v) const { return FieldElement::rational(q_.field, v); }

    Element one() const;
    Element generator(std::size_t i) const;
    RootVector degree_of(const Letters& word) const;

    Element multiply(const Element& a, const Element& b) const;
    /// (id ⊗ x_i^*) Δ: removes a trailing letter i.
    Element right_strip(const Element& x, std::size_t i) const;
    /// ∂^L_i: removes a leading letter i.
    Element left_strip(const Element& x, std::size_t i) const;
    /// x y - chi(deg x, deg y) y x for homogeneous x, y.
    Element braided_commutator(const Element& x, const RootVector& dx, const Element& y, const RootVector& dy) const;

    /// All words of multidegree d in lexicographic order.
    const std::vector<Letters>& words(const RootVector& d) const;
    Vector to_vector(const Element& x, const RootVector& d) const;
    Element from_vector(const Vector& v, const RootVector& d) const;

    /// B_d, computed recursively as sum_i B_{d - alpha_i} x_i.
    const GradedComponent& component(const RootVector& d) const;
    std::size_t dimension(const RootVector& d) const { return component(d).span.dim(); }

    /// All d in N0^theta with 0 < |d| <= max_total, ordered by (|d|, d).
    std::vector<RootVector> degrees_up_to(Int max_total) const;

private:
    void check_cap(const RootVector& d) const;

    FieldBraiding q_;
    int cap_;
    mutable std::map<RootVector, std::vector<Letters>> words_;
    mutable std::map<RootVector, GradedComponent> components_;
};

Element add(Element a, const Element& b, const FieldElement& factor);
Element scale(Element a, const FieldElement& factor);
bool is_zero(const Element& x);

/// Rank of the quantum symmetrizer on the degree-d word space.
std::size_t symmetrizer_dim(const NicholsAlgebra& algebra, const RootVector& d);
std::size_t symmetrizer_dim(const BraidingMatrix& q, const RootVector& d, int cap = kDefaultDegreeCap,
                            const mpq_class& generic_base = 2);

/// (ad x_i)^m (x_j) != 0 in the shuffle realisation.
bool adjoint_power_nonzero(const NicholsAlgebra& algebra, std::size_t i, std::size_t j, int m);

/// -max{m : (ad x_i)^m(x_j) != 0}; nullopt when still nonzero at degree cap.
std::optional<Int> oracle_cartan_entry(const NicholsAlgebra& algebra, std::size_t i, std::size_t j);

/// Joint kernel of the ∂^L_i on B_d is zero for every 0 < |d| <= max_total.
bool check_nondegenerate(const NicholsAlgebra& algebra, Int max_total);

struct CheckFailure {
    std::string which;
    RootVector degree;
    std::string message;
};

struct OracleReport {
    bool passed() const { return failures.empty(); }
    std::vector<CheckFailure> failures;
    std::map<RootVector, std::size_t> dimensions;  // graded dimensions of the checked span
    std::size_t checks = 0;
};

/// Root vectors along the PBW sequence, chosen inside B_{beta_l} by the
/// requirement Δ(x) - x ⊗ 1 ∈ E(w_{l-1}) ⊗ B; nullopt beyond the cap.
struct RootVectorData {
    std::vector<std::optional<Element>> vectors;
    /// span of PBW monomials in the first l root vectors, per l, per degree
    std::vector<std::map<RootVector, Subspace>> prefix_spans;
    std::vector<CheckFailure> failures;
};

RootVectorData build_root_vectors(const NicholsAlgebra& algebra, const std::vector<RootVector>& pbw, Int cap);

/// Multiplication closure, right-coproduct closure and graded dimensions of
/// the PBW span of a census record, up to total degree cap.
OracleReport verify_coideal(const CartanScheme& scheme, const CoidealRecord& record, int cap,
                            const mpq_class& generic_base = 2);

/// Commutators x_k x_l - chi(beta_k, beta_l) x_l x_k lie in the span of
/// ordered monomials in the roots strictly between k and l; and
/// Δ(x_l) - x_l ⊗ 1 ∈ E(w_{l-1}) ⊗ B.
OracleReport commutator_check(const CartanScheme& scheme, const CoidealRecord& record, int cap,
                              const mpq_class& generic_base = 2);

struct SmallEnumeration {
    std::size_t total_dimension = 0;
    std::size_t coideals = 0;                 // graded right coideal subalgebras found
    std::size_t distinct_hilbert = 0;         // distinct graded dimension vectors
    bool exhaustive = true;                   // false if a step had >1 free direction
    std::vector<std::map<RootVector, std::size_t>> dimension_vectors;
};

/// Exhaustive degree-by-degree search for the N0^theta-graded right coideal
/// subalgebras of a finite-dimensional Nichols algebra.
SmallEnumeration enumerate_coideals_small(const BraidingMatrix& q, std::size_t cap_dim, int degree_cap = kDefaultDegreeCap);

} // namespace weyl::oracle
