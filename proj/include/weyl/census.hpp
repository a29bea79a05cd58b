#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyl/duflo.hpp"

namespace weyl {

/// Multivariate polynomial over Z with exponents in N0^theta.
using Polynomial = std::map<RootVector, Int>;

/// Truncated product; drops monomials of total degree > max_degree.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, Int max_degree);

/// Coefficients of the specialisation t_1 = ... = t_theta = t.
std::vector<Int> specialize_total_degree(const Polynomial& p, Int max_degree);

struct HilbertFactor {
    RootVector degree;
    /// nullopt: 1/(1 - t^degree); h: (1 - t^(h degree)) / (1 - t^degree).
    std::optional<Int> height;

    friend bool operator==(const HilbertFactor&, const HilbertFactor&) = default;
};

/// Product of rank-one factors; truncation yields the graded dimensions.
struct HilbertSeries {
    std::vector<HilbertFactor> factors;

    Polynomial truncate(std::size_t rank, Int max_degree) const;
};

/// h = multiplicative order of q_lambda when it is a nontrivial root of
/// unity, otherwise infinite.
std::optional<Int> rank_one_height(const ScalarValue& q_lambda);

struct PBWSequence {
    std::vector<RootVector> degrees;               // beta_1 .. beta_m
    std::vector<ScalarValue> self_braidings;       // chi(beta_l, beta_l); empty without braiding
};

struct CoidealRecord {
    std::size_t id = 0;
    Morphism morphism;
    LambdaSet lambda;
    PBWSequence pbw;
    std::optional<HilbertSeries> hilbert;          // absent for schemes without braiding
    std::vector<bool> contains_generator;          // alpha_i ∈ Λ₊(w)
    std::vector<std::size_t> includes;             // ids of records contained in this one
};

inline constexpr Int kDefaultTruncation = 8;

PBWSequence pbw_degrees(const CartanScheme& scheme, std::size_t base, const Word& reduced_word);

/// beta_l != -beta_k for all k < l.
bool is_admissible(const CartanScheme& scheme, std::size_t base, const Word& word);

HilbertSeries hilbert_series(const CartanScheme& scheme, std::size_t base, const std::vector<RootVector>& lambda);
HilbertSeries hilbert_series(const CartanScheme& scheme, const CoidealRecord& record);

/// One record per element of Homto(X), ordered by (length, word). Throws
/// VerificationError if two records share Λ₊ or a truncated Hilbert series.
std::vector<CoidealRecord> census(const CartanScheme& scheme, std::size_t base,
                                  std::size_t max_length = kDefaultMaxLength,
                                  Int truncation = kDefaultTruncation);

/// E(w1) ⊆ E(w2) iff w1 <=_D w2.
bool inclusion_check(const CoidealRecord& r1, const CoidealRecord& r2);

/// H_{E(w2)} = H_{E(w1)} * prod over Λ₊(w2) \ Λ₊(w1), compared after truncation.
bool freeness_check(const CartanScheme& scheme, const CoidealRecord& r1, const CoidealRecord& r2,
                    Int truncation = kDefaultTruncation);

/// Order of the finite Weyl group of a Cartan matrix together with its
/// type label ("A2", "B3+A1", ...); nullopt when not of finite type.
std::optional<std::pair<Int, std::string>> weyl_group_order(const GeneralizedCartanMatrix& a);

struct KharchenkoCount {
    std::size_t count = 0;
    bool standard = false;
    std::optional<Int> weyl_order;
    std::string type;
};

KharchenkoCount kharchenko_count(const CartanScheme& scheme, std::size_t base,
                                 std::size_t max_length = kDefaultMaxLength);

/// For every record at X and every i, moves Λ₊ to r_i(X) by the first-letter
/// recursion and compares with the census record of s_i w there (Λ₊ and
/// truncated Hilbert series). Returns human-readable mismatches.
std::vector<std::string> check_reflection_consistency(const CartanScheme& scheme, std::size_t base,
                                                      std::size_t max_length = kDefaultMaxLength,
                                                      Int truncation = kDefaultTruncation);

} // namespace weyl
