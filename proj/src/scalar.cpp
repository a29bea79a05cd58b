#include "weyl/scalar.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace weyl {

namespace {

Int floor_mod(Int a, Int n) {
    Int r = a % n;
    return r < 0 ? r + n : r;
}

Int parse_int(const std::string& text, const std::string& literal) {
    try {
        std::size_t used = 0;
        Int v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InputError("ScalarParse", "bad integer '" + text + "' in scalar literal '" + literal + "'");
    }
}

} // namespace

ScalarValue::ScalarValue(Int num, Int den, Int q_exp) : q_exp_(q_exp) {
    if (den <= 0) throw DomainError("ScalarValue", "root of unity denominator must be positive");
    num = floor_mod(num, den);
    Int g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

ScalarValue ScalarValue::root_of_unity(Int numerator, Int denominator) { return {numerator, denominator, 0}; }

ScalarValue ScalarValue::generic_power(Int exponent) { return {0, 1, exponent}; }

ScalarValue ScalarValue::parse(const std::string& literal) {
    std::string text;
    for (char c : literal) text += (c == '*') ? ' ' : c;
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw InputError("ScalarParse", "empty scalar literal");

    ScalarValue result;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "1") continue;
        if (t == "-1") {
            result = result * root_of_unity(1, 2);
        } else if (t == "z") {
            if (i + 1 >= tokens.size()) throw InputError("ScalarParse", "'z' needs k/n in '" + literal + "'");
            const std::string& frac = tokens[++i];
            auto slash = frac.find('/');
            if (slash == std::string::npos) throw InputError("ScalarParse", "expected k/n after 'z' in '" + literal + "'");
            Int k = parse_int(frac.substr(0, slash), literal);
            Int n = parse_int(frac.substr(slash + 1), literal);
            if (n <= 0) throw InputError("ScalarParse", "root of unity order must be positive in '" + literal + "'");
            result = result * root_of_unity(k, n);
        } else if (t == "q") {
            result = result * generic_power(1);
        } else if (t.size() > 2 && t[0] == 'q' && t[1] == '^') {
            result = result * generic_power(parse_int(t.substr(2), literal));
        } else {
            throw InputError("ScalarParse", "unrecognised token '" + t + "' in '" + literal + "'");
        }
    }
    return result;
}

std::optional<Int> ScalarValue::order() const noexcept {
    if (q_exp_ != 0) return std::nullopt;
    return den_;
}

ScalarValue ScalarValue::operator*(const ScalarValue& other) const {
    Int l = std::lcm(den_, other.den_);
    Int num = checked_add(checked_mul(num_, l / den_), checked_mul(other.num_, l / other.den_));
    return {num, l, checked_add(q_exp_, other.q_exp_)};
}

ScalarValue ScalarValue::inverse() const { return {-num_, den_, checked_sub(0, q_exp_)}; }

ScalarValue ScalarValue::pow(Int exponent) const {
    Int num = floor_mod(num_, den_);
    // reduce exponent mod den before multiplying to keep the numerator small
    Int e = floor_mod(exponent, den_);
    return {checked_mul(num, e), den_, checked_mul(q_exp_, exponent)};
}

std::string ScalarValue::to_string() const {
    if (is_one()) return "1";
    std::string out;
    if (num_ != 0) {
        out = (num_ == 1 && den_ == 2) ? "-1" : "z " + std::to_string(num_) + "/" + std::to_string(den_);
    }
    if (q_exp_ != 0) {
        if (!out.empty()) out += " * ";
        out += q_exp_ == 1 ? "q" : "q^" + std::to_string(q_exp_);
    }
    return out;
}

bool quantum_integer_vanishes(const ScalarValue& x, Int k) {
    // (k)_x = (x^k - 1)/(x - 1) for x != 1, and k for x = 1.
    if (k <= 0) return true;
    if (x.is_one()) return false;
    auto ord = x.order();
    return ord && k % *ord == 0;
}

} // namespace weyl
