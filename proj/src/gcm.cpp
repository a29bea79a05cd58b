#include "weyl/gcm.hpp"

#include <sstream>

namespace weyl {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication");
    return r;
}

RootVector RootVector::simple(std::size_t rank, std::size_t i) {
    RootVector v(rank);
    v.coords_.at(i) = 1;
    return v;
}

bool RootVector::is_zero() const noexcept {
    for (Int c : coords_)
        if (c != 0) return false;
    return true;
}

bool RootVector::is_positive() const noexcept {
    bool nonzero = false;
    for (Int c : coords_) {
        if (c < 0) return false;
        nonzero |= c != 0;
    }
    return nonzero;
}

bool RootVector::is_negative() const noexcept { return (-*this).is_positive(); }

Int RootVector::height() const {
    Int h = 0;
    for (Int c : coords_) h = checked_add(h, c);
    return h;
}

RootVector RootVector::operator-() const {
    RootVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.coords_[i] = checked_sub(0, coords_[i]);
    return r;
}

RootVector RootVector::operator+(const RootVector& other) const {
    if (other.rank() != rank()) throw DomainError("RankMismatch", "vector addition");
    RootVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.coords_[i] = checked_add(coords_[i], other.coords_[i]);
    return r;
}

RootVector RootVector::operator-(const RootVector& other) const { return *this + (-other); }

RootVector RootVector::operator*(Int factor) const {
    RootVector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.coords_[i] = checked_mul(coords_[i], factor);
    return r;
}

std::string RootVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << coords_[i];
    }
    out << ')';
    return out.str();
}

std::size_t RootVectorHash::operator()(const RootVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int c : v.coords()) {
        h ^= std::hash<Int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

LatticeMap::LatticeMap(std::vector<std::vector<Int>> rows) : rank_(rows.size()) {
    data_.reserve(rank_ * rank_);
    for (const auto& row : rows) {
        if (row.size() != rank_) throw DomainError("RankMismatch", "lattice map must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

LatticeMap LatticeMap::identity(std::size_t rank) {
    LatticeMap m;
    m.rank_ = rank;
    m.data_.assign(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i) m.data_[i * rank + i] = 1;
    return m;
}

RootVector LatticeMap::apply(const RootVector& v) const {
    if (v.rank() != rank_) throw DomainError("RankMismatch", "map of rank " + std::to_string(rank_) +
                                                                   " applied to vector of rank " +
                                                                   std::to_string(v.rank()));
    RootVector r(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < rank_; ++j) acc = checked_add(acc, checked_mul(data_[i * rank_ + j], v[j]));
        r[i] = acc;
    }
    return r;
}

RootVector LatticeMap::column(std::size_t j) const {
    RootVector r(rank_);
    for (std::size_t i = 0; i < rank_; ++i) r[i] = data_[i * rank_ + j];
    return r;
}

LatticeMap LatticeMap::operator*(const LatticeMap& rhs) const {
    if (rhs.rank_ != rank_) throw DomainError("RankMismatch", "map composition");
    LatticeMap m;
    m.rank_ = rank_;
    m.data_.assign(rank_ * rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t k = 0; k < rank_; ++k) {
            Int a = data_[i * rank_ + k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < rank_; ++j)
                m.data_[i * rank_ + j] =
                    checked_add(m.data_[i * rank_ + j], checked_mul(a, rhs.data_[k * rank_ + j]));
        }
    return m;
}

// Bareiss fraction-free elimination; every division is exact.
Int LatticeMap::determinant() const {
    if (rank_ == 0) return 1;
    std::vector<Int> a = data_;
    const std::size_t n = rank_;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = checked_sub(checked_mul(a[i * n + j], a[k * n + k]),
                                           checked_mul(a[i * n + k], a[k * n + j])) /
                               prev;
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

bool LatticeMap::is_identity() const noexcept { return *this == identity(rank_); }

std::vector<std::vector<Int>> LatticeMap::rows() const {
    std::vector<std::vector<Int>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i].assign(data_.begin() + i * rank_, data_.begin() + (i + 1) * rank_);
    return out;
}

std::vector<std::vector<Int>> GeneralizedCartanMatrix::rows() const {
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < rank_; ++i) out.push_back(row(i));
    return out;
}

std::vector<Int> GeneralizedCartanMatrix::row(std::size_t i) const {
    return {data_.begin() + i * rank_, data_.begin() + (i + 1) * rank_};
}

NotGCM::NotGCM(std::size_t i_, std::size_t j_, const std::string& reason)
    : DomainError("NotGCM", "entry (" + std::to_string(i_ + 1) + "," + std::to_string(j_ + 1) + "): " + reason),
      i(i_), j(j_) {}

GeneralizedCartanMatrix validate_gcm(const std::vector<std::vector<Int>>& entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw DomainError("NotGCM", "empty matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (entries[i].size() != n) throw NotGCM(i, 0, "matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i][i] != 2) throw NotGCM(i, i, "diagonal entry must be 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (entries[i][j] > 0) throw NotGCM(i, j, "off-diagonal entry must be <= 0");
            if ((entries[i][j] == 0) != (entries[j][i] == 0))
                throw NotGCM(i, j, "a_ij = 0 must hold iff a_ji = 0");
        }
    }
    GeneralizedCartanMatrix a;
    a.rank_ = n;
    for (const auto& row : entries) a.data_.insert(a.data_.end(), row.begin(), row.end());
    return a;
}

LatticeMap reflection_from_row(std::span<const Int> cartan_row, std::size_t i) {
    const std::size_t n = cartan_row.size();
    if (i >= n) throw DomainError("IndexOutOfRange", "reflection index " + std::to_string(i + 1));
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    for (std::size_t k = 0; k < n; ++k) rows[k][k] = 1;
    // column j is s_i(alpha_j) = alpha_j - a_ij alpha_i
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = checked_sub(rows[i][j], cartan_row[j]);
    return LatticeMap(std::move(rows));
}

LatticeMap reflection_matrix(const GeneralizedCartanMatrix& a, std::size_t i) {
    if (i >= a.rank()) throw DomainError("IndexOutOfRange", "reflection index " + std::to_string(i + 1));
    const auto row = a.row(i);
    return reflection_from_row(row, i);
}

RootVector apply_word(std::span<const LatticeMap> maps, const RootVector& v) {
    RootVector r = v;
    for (auto it = maps.rbegin(); it != maps.rend(); ++it) r = it->apply(r);
    return r;
}

} // namespace weyl
