#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weyl/cartan_scheme.hpp"

namespace weyl {

/// 0-based generator indices; (i1, ..., im) at X stands for id_X s_i1 ... s_im.
using Word = std::vector<std::size_t>;

std::string word_to_string(const Word& word);

/// An element of Hom(source, target) of the Weyl groupoid.
struct Morphism {
    std::size_t target = 0;
    std::size_t source = 0;
    Word word;           // lexicographically least reduced word
    LatticeMap matrix;   // composite as an element of Aut(Z^theta)
    std::vector<RootVector> lambda;  // sorted positive-root set Lambda_+

    std::size_t length() const noexcept { return word.size(); }
};

/// Data of an arbitrary (not necessarily reduced) word at a target object.
struct WordData {
    std::size_t target = 0;
    std::size_t source = 0;
    LatticeMap matrix;
    /// beta_k = s_i1 ... s_i(k-1) (alpha_ik)
    std::vector<RootVector> betas;
};

/// Throws InvalidWord on out-of-range generators.
WordData evaluate_word(const CartanScheme& scheme, std::size_t target, const Word& word);

inline constexpr std::size_t kDefaultMaxLength = 64;

/// Homto(X): every morphism with target X, breadth first over right
/// extensions w -> w s_i, deduplicated by (source, matrix). Throws
/// LengthBoundExceeded when words of length max_length + 1 still produce new
/// morphisms.
std::vector<Morphism> enumerate_morphisms_to(const CartanScheme& scheme, std::size_t target,
                                             std::size_t max_length = kDefaultMaxLength);

struct RealRootSet {
    std::size_t base = 0;
    std::set<RootVector> roots;

    std::set<RootVector> positive() const;
};

RealRootSet real_roots(const CartanScheme& scheme, std::size_t target, std::size_t max_length = kDefaultMaxLength);

struct AxiomCheck {
    std::string axiom;  // "R1".."R4"
    bool passed = true;
    struct Witness {
        std::size_t object = 0;
        std::size_t i = 0;
        std::size_t j = 0;
        std::optional<RootVector> root;
        std::string message;
    };
    std::vector<Witness> witnesses;
};

/// m_ij^X; nullopt on the diagonal, where the Coxeter convention is m_ii = 1.
using CoxeterTable = std::vector<std::vector<std::vector<std::optional<Int>>>>;

struct RootSystemReport {
    std::vector<AxiomCheck> axioms;  // R1, R2, R3, R4 in order
    CoxeterTable m;                  // m[X][i][j]

    bool passed() const;
};

RootSystemReport check_root_system(const CartanScheme& scheme, const std::vector<std::set<RootVector>>& roots);

/// m_ij^X = #(roots ∩ (N0 alpha_i + N0 alpha_j)) for i != j.
CoxeterTable coxeter_table(const CartanScheme& scheme, const std::vector<std::set<RootVector>>& roots);

struct CoxeterFailure {
    std::size_t object = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string message;
};

/// Verifies the alternating 2 m_ij-factor products (and s_i s_i) are
/// identities returning to the start object. Empty result means all hold.
std::vector<CoxeterFailure> check_coxeter_relations(const CartanScheme& scheme, const CoxeterTable& m);

struct ComponentVerdict {
    std::vector<std::size_t> objects;
    bool finite = false;
    std::map<std::size_t, std::size_t> homto_counts;  // object -> #Homto
    std::map<std::size_t, std::size_t> real_root_counts;
    std::size_t morphism_count = 0;  // #Mor of the component groupoid
    /// Finite-at-one-object agrees with finite-at-all and with equal #Homto.
    bool consistent = true;
    std::vector<std::string> notes;
};

struct FinitenessReport {
    std::vector<ComponentVerdict> components;
    bool all_finite() const;
    const ComponentVerdict& component_of(std::size_t object) const;
};

FinitenessReport is_finite(const CartanScheme& scheme, std::size_t max_length = kDefaultMaxLength);

/// The maximal-length elements of Homto(X) (exactly one in a finite Weyl groupoid).
std::vector<Morphism> longest_elements(const CartanScheme& scheme, std::size_t target,
                                       std::size_t max_length = kDefaultMaxLength);

/// Toggle rule of the parity definition: add/remove the positive member of
/// {beta, -beta}; roots of mixed sign are ignored.
void toggle_lambda(std::vector<RootVector>& sorted_lambda, const RootVector& beta);

} // namespace weyl
