#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "weyl/cartan_scheme.hpp"

namespace weyl::oracle {

/// Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1). n = 1 is Q.
class CyclotomicField {
public:
    explicit CyclotomicField(unsigned order);

    unsigned order() const noexcept { return order_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    /// Monic cyclotomic polynomial, constant term first.
    const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }

    /// Reduces a coefficient vector modulo the cyclotomic polynomial.
    std::vector<mpq_class> reduce(std::vector<mpq_class> poly) const;

private:
    unsigned order_;
    std::vector<mpz_class> modulus_;
};

/// Exact element of a cyclotomic field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs);

    static FieldElement zero(std::shared_ptr<const CyclotomicField> field);
    static FieldElement rational(std::shared_ptr<const CyclotomicField> field, const mpq_class& value);
    /// zeta_n^k
    static FieldElement zeta_power(std::shared_ptr<const CyclotomicField> field, long long k);

    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    /// Throws DomainError on zero.
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    bool operator==(const FieldElement& o) const;

    std::string to_string() const;

private:
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<mpq_class> coeffs_;
};

/// Diagonal braiding over a cyclotomic field.
struct FieldBraiding {
    std::shared_ptr<const CyclotomicField> field;
    std::size_t rank = 0;
    std::vector<FieldElement> entries;  // row-major

    const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
    FieldElement chi(const RootVector& a, const RootVector& b) const;
};

/// Specialises q -> generic_base (a rational that is not a root of unity)
/// and zeta^(k/n) -> the corresponding power of zeta_N, N = lcm of the n.
FieldBraiding specialize(const BraidingMatrix& q, const mpq_class& generic_base = 2);

} // namespace weyl::oracle
