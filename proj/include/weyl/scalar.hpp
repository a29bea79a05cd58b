#pragma once

#include <compare>
#include <optional>
#include <string>

#include "weyl/gcm.hpp"

namespace weyl {

/// Braiding scalar of the form zeta^(k/n) * q^e: an exact root of unity
/// exp(2 pi i k/n) times a power of a formal parameter q that is not a root
/// of unity. Pure roots of unity have e = 0, pure generic powers have k = 0.
class ScalarValue {
public:
    ScalarValue() = default;

    static ScalarValue one() { return {}; }
    static ScalarValue root_of_unity(Int numerator, Int denominator);
    static ScalarValue generic_power(Int exponent);
    /// Parses "1", "-1", "z k/n", "q", "q^e" and products such as "z 1/2 * q^3".
    static ScalarValue parse(const std::string& literal);

    Int root_numerator() const noexcept { return num_; }
    Int root_denominator() const noexcept { return den_; }
    Int q_exponent() const noexcept { return q_exp_; }

    bool is_one() const noexcept { return num_ == 0 && q_exp_ == 0; }
    bool is_root_of_unity() const noexcept { return q_exp_ == 0; }
    /// Multiplicative order; nullopt when infinite.
    std::optional<Int> order() const noexcept;

    ScalarValue operator*(const ScalarValue& other) const;
    ScalarValue inverse() const;
    ScalarValue pow(Int exponent) const;

    friend bool operator==(const ScalarValue&, const ScalarValue&) = default;
    friend auto operator<=>(const ScalarValue&, const ScalarValue&) = default;

    /// Canonical literal, inverse of parse().
    std::string to_string() const;

private:
    ScalarValue(Int num, Int den, Int q_exp);
    // root part exp(2 pi i num/den), 0 <= num < den, gcd(num, den) = 1
    Int num_ = 0;
    Int den_ = 1;
    Int q_exp_ = 0;
};

/// Quantum integer (k)_x = 1 + x + ... + x^(k-1) is zero exactly.
bool quantum_integer_vanishes(const ScalarValue& x, Int k);

} // namespace weyl
