#include "weyl/field.hpp"

#include <numeric>
#include <sstream>

namespace weyl::oracle {

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly divide_exact(ZPoly num, const ZPoly& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {0};
    ZPoly quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        mpz_class c = num[k];
        quot[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
    }
    return quot;
}

ZPoly cyclotomic_polynomial(unsigned n) {
    // x^n - 1 divided by Phi_d for all proper divisors d
    ZPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

void require_same(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field() && (a.field()->order() != b.field()->order()))
        throw DomainError("FieldMismatch", "elements of different cyclotomic fields");
}

} // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
    if (order == 0) throw DomainError("CyclotomicField", "order must be positive");
    modulus_ = cyclotomic_polynomial(order);
}

std::vector<mpq_class> CyclotomicField::reduce(std::vector<mpq_class> poly) const {
    const std::size_t d = degree();
    for (std::size_t k = poly.size(); k-- > d;) {
        mpq_class c = poly[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= d; ++t) poly[k - d + t] -= c * modulus_[t];
    }
    poly.resize(d);
    return poly;
}

FieldElement::FieldElement(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree()) coeffs_ = field_->reduce(std::move(coeffs_));
}

FieldElement FieldElement::zero(std::shared_ptr<const CyclotomicField> field) {
    std::vector<mpq_class> c(field->degree(), 0);
    return {std::move(field), std::move(c)};
}

FieldElement FieldElement::rational(std::shared_ptr<const CyclotomicField> field, const mpq_class& value) {
    std::vector<mpq_class> c(field->degree(), 0);
    c[0] = value;
    return {std::move(field), std::move(c)};
}

FieldElement FieldElement::zeta_power(std::shared_ptr<const CyclotomicField> field, long long k) {
    const long long n = field->order();
    long long e = ((k % n) + n) % n;
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    if (c.size() < field->degree()) c.resize(field->degree(), 0);
    auto reduced = field->reduce(std::move(c));
    return {std::move(field), std::move(reduced)};
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldElement r = *this;
    r += o;
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    FieldElement r = *this;
    r -= o;
    return r;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same(*this, o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(*this, o);
    const std::size_t d = coeffs_.size();
    if (d == 1) return {field_, {coeffs_[0] * o.coeffs_[0]}};
    std::vector<mpq_class> prod(2 * d - 1, 0);
    for (std::size_t a = 0; a < d; ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < d; ++b)
            if (o.coeffs_[b] != 0) prod[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    return {field_, field_->reduce(std::move(prod))};
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero field element");
    const std::size_t d = coeffs_.size();
    if (d == 1) return {field_, {1 / coeffs_[0]}};
    // Solve (multiplication by *this) x = 1 over Q.
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, 0));
    for (std::size_t col = 0; col < d; ++col) {
        FieldElement basis = zeta_power(field_, static_cast<long long>(col));
        FieldElement image = *this * basis;
        for (std::size_t row = 0; row < d; ++row) m[row][col] = image.coeffs_[row];
    }
    m[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && m[piv][col] == 0) ++piv;
        if (piv == d) throw DomainError("DivisionByZero", "singular multiplication matrix");
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (std::size_t c = col; c <= d; ++c) m[col][c] *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (std::size_t c = col; c <= d; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<mpq_class> x(d);
    for (std::size_t r = 0; r < d; ++r) x[r] = m[r][d];
    return {field_, std::move(x)};
}

FieldElement FieldElement::pow(long long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    FieldElement result = rational(field_, 1);
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement& o) const { return coeffs_ == o.coeffs_; }

std::string FieldElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << coeffs_[k].get_str();
        if (k) out << "*z^" << k;
    }
    if (first) out << '0';
    return out.str();
}

FieldElement FieldBraiding::chi(const RootVector& a, const RootVector& b) const {
    FieldElement r = FieldElement::rational(field, 1);
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank; ++j)
            if (b[j] != 0) r *= (*this)(i, j).pow(a[i] * b[j]);
    }
    return r;
}

FieldBraiding specialize(const BraidingMatrix& q, const mpq_class& generic_base) {
    if (generic_base == 0 || generic_base == 1 || generic_base == -1)
        throw DomainError("Specialization", "generic base must not be a root of unity");
    unsigned order = 1;
    for (const auto& row : q.rows())
        for (const auto& s : row) order = std::lcm(order, static_cast<unsigned>(s.root_denominator()));
    FieldBraiding out;
    out.field = std::make_shared<const CyclotomicField>(order);
    out.rank = q.rank();
    for (const auto& row : q.rows())
        for (const auto& s : row) {
            long long k = s.root_numerator() * (order / s.root_denominator());
            FieldElement value = FieldElement::zeta_power(out.field, k);
            mpq_class p = 1;
            mpq_class base = s.q_exponent() < 0 ? mpq_class(1 / generic_base) : generic_base;
            for (Int e = 0; e < (s.q_exponent() < 0 ? -s.q_exponent() : s.q_exponent()); ++e) p *= base;
            value *= FieldElement::rational(out.field, p);
            out.entries.push_back(std::move(value));
        }
    return out;
}

} // namespace weyl::oracle
