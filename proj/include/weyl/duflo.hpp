#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "weyl/groupoid.hpp"

namespace weyl {

struct LambdaSet {
    std::size_t base = 0;
    std::vector<RootVector> roots;  // sorted lexicographically

    std::size_t size() const noexcept { return roots.size(); }
    bool contains(const RootVector& v) const;
    bool subset_of(const LambdaSet& other) const;

    friend bool operator==(const LambdaSet&, const LambdaSet&) = default;
};

/// Parity definition: positive lambda with an odd number of k such that
/// lambda = ±beta_k.
LambdaSet lambda_plus(const CartanScheme& scheme, std::size_t base, const Word& word);

/// Same set by peeling the first generator off recursively:
/// Λ^X(i, rest) = s_i(Λ^Y(rest)) ∪ {α_i}  or  s_i(Λ^Y(rest) \ {α_i}), Y = r_i(X).
LambdaSet lambda_plus_recursive(const CartanScheme& scheme, std::size_t base, const Word& word);

bool is_reduced(const CartanScheme& scheme, std::size_t base, const Word& word);

/// Equality of id_X s_w1 and id_X s_w2 via their Λ₊ sets. Throws
/// VerificationError when Λ₊ agrees but the source or matrix does not.
bool morphisms_equal(const CartanScheme& scheme, std::size_t base, const Word& w1, const Word& w2);

/// w1 <=_D w2 iff Λ₊(w1) ⊆ Λ₊(w2).
bool leq_duflo(const CartanScheme& scheme, std::size_t base, const Word& w1, const Word& w2);
bool leq_duflo(const Morphism& w1, const Morphism& w2);

struct DufloPoset {
    std::size_t base = 0;
    std::vector<Morphism> nodes;               // ordered by (length, word)
    std::vector<std::vector<bool>> relation;   // relation[a][b] <=> nodes[a] <=_D nodes[b]
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (w, w s_i), sorted

    std::size_t minimum() const { return 0; }
    /// Unique maximal node.
    std::size_t maximum() const;
};

/// Full order relation by subset tests (split across `threads` workers) and
/// Hasse edges from generator covers; throws VerificationError when the
/// covers differ from the transitive reduction of the relation.
DufloPoset build_poset(const CartanScheme& scheme, std::size_t base, std::size_t max_length = kDefaultMaxLength,
                       unsigned threads = 1);

/// Covering pairs of an order relation.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& relation);

/// Graphviz rendering; nodes labelled by reduced word and |Λ₊|.
std::string to_dot(const DufloPoset& poset, const CartanScheme& scheme);

} // namespace weyl
