#include "weyl/duflo.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace weyl {

bool LambdaSet::contains(const RootVector& v) const { return std::binary_search(roots.begin(), roots.end(), v); }

bool LambdaSet::subset_of(const LambdaSet& other) const {
    return std::includes(other.roots.begin(), other.roots.end(), roots.begin(), roots.end());
}

LambdaSet lambda_plus(const CartanScheme& scheme, std::size_t base, const Word& word) {
    const WordData data = evaluate_word(scheme, base, word);
    std::map<RootVector, std::size_t> counts;
    for (const auto& beta : data.betas) {
        if (beta.is_positive())
            ++counts[beta];
        else if (beta.is_negative())
            ++counts[-beta];
    }
    LambdaSet out{base, {}};
    for (const auto& [lambda, c] : counts)
        if (c % 2 == 1) out.roots.push_back(lambda);
    return out;
}

LambdaSet lambda_plus_recursive(const CartanScheme& scheme, std::size_t base, const Word& word) {
    std::vector<std::size_t> objects{base};  // X_0 = X, X_k = r_ik(X_{k-1})
    for (std::size_t i : word) {
        if (i >= scheme.rank()) throw DomainError("InvalidWord", "generator out of range in " + word_to_string(word));
        objects.push_back(scheme.r(i, objects.back()));
    }
    std::vector<RootVector> lambda;
    for (std::size_t k = word.size(); k-- > 0;) {
        const std::size_t i = word[k];
        const LatticeMap& s = scheme.reflection(i, objects[k + 1]);
        const RootVector alpha = RootVector::simple(scheme.rank(), i);
        auto it = std::find(lambda.begin(), lambda.end(), alpha);
        const bool present = it != lambda.end();
        if (present) lambda.erase(it);
        for (auto& v : lambda) v = s.apply(v);
        if (!present) lambda.push_back(alpha);
    }
    std::sort(lambda.begin(), lambda.end());
    return {base, std::move(lambda)};
}

bool is_reduced(const CartanScheme& scheme, std::size_t base, const Word& word) {
    return lambda_plus(scheme, base, word).size() == word.size();
}

bool morphisms_equal(const CartanScheme& scheme, std::size_t base, const Word& w1, const Word& w2) {
    const bool equal = lambda_plus(scheme, base, w1) == lambda_plus(scheme, base, w2);
    if (equal) {
        auto d1 = evaluate_word(scheme, base, w1);
        auto d2 = evaluate_word(scheme, base, w2);
        if (d1.source != d2.source || d1.matrix != d2.matrix)
            throw VerificationError("LambdaKeyCollision", word_to_string(w1) + " and " + word_to_string(w2) +
                                                              " share Λ₊ but are different morphisms");
    }
    return equal;
}

bool leq_duflo(const CartanScheme& scheme, std::size_t base, const Word& w1, const Word& w2) {
    return lambda_plus(scheme, base, w1).subset_of(lambda_plus(scheme, base, w2));
}

bool leq_duflo(const Morphism& w1, const Morphism& w2) {
    if (w1.target != w2.target) throw DomainError("TargetMismatch", "morphisms have different targets");
    return std::includes(w2.lambda.begin(), w2.lambda.end(), w1.lambda.begin(), w1.lambda.end());
}

std::size_t DufloPoset::maximum() const {
    std::size_t found = nodes.size();
    for (std::size_t b = 0; b < nodes.size(); ++b) {
        bool top = true;
        for (std::size_t a = 0; a < nodes.size(); ++a)
            if (!relation[a][b]) top = false;
        if (top) {
            if (found != nodes.size()) throw VerificationError("PosetMaximum", "two maximal elements");
            found = b;
        }
    }
    if (found == nodes.size()) throw DomainError("NotFinite", "Duflo order has no maximum");
    return found;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<std::vector<bool>>& rel) {
    const std::size_t n = rel.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !rel[a][b]) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (c != a && c != b && rel[a][c] && rel[c][b]) cover = false;
            if (cover) covers.emplace_back(a, b);
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

DufloPoset build_poset(const CartanScheme& scheme, std::size_t base, std::size_t max_length, unsigned threads) {
    DufloPoset poset;
    poset.base = base;
    try {
        poset.nodes = enumerate_morphisms_to(scheme, base, max_length);
    } catch (const DomainError& e) {
        if (e.kind() == "LengthBoundExceeded") throw DomainError("NotFinite", e.what());
        throw;
    }
    // BFS output is already ordered by (length, lexicographic word).
    const std::size_t n = poset.nodes.size();
    poset.relation.assign(n, std::vector<bool>(n, false));

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t a = t; a < n; a += workers)
                    for (std::size_t b = 0; b < n; ++b) poset.relation[a][b] = leq_duflo(poset.nodes[a], poset.nodes[b]);
            });
    }

    std::map<std::pair<std::size_t, LatticeMap>, std::size_t> index;
    for (std::size_t k = 0; k < n; ++k) index.emplace(std::make_pair(poset.nodes[k].source, poset.nodes[k].matrix), k);
    for (std::size_t a = 0; a < n; ++a) {
        const Morphism& w = poset.nodes[a];
        for (std::size_t i = 0; i < scheme.rank(); ++i) {
            // ℓ(w s_i) = ℓ(w) + 1 exactly when w(α_i) is positive
            if (!w.matrix.column(i).is_positive()) continue;
            auto key = std::make_pair(scheme.r(i, w.source), w.matrix * scheme.reflection(i, w.source));
            auto it = index.find(key);
            if (it == index.end()) throw VerificationError("PosetCover", "generator extension left Homto");
            if (poset.nodes[it->second].length() != w.length() + 1)
                throw VerificationError("PosetCover", "generator cover does not raise length by one");
            poset.hasse.emplace_back(a, it->second);
        }
    }
    std::sort(poset.hasse.begin(), poset.hasse.end());
    poset.hasse.erase(std::unique(poset.hasse.begin(), poset.hasse.end()), poset.hasse.end());
    if (poset.hasse != transitive_reduction(poset.relation))
        throw VerificationError("HasseMismatch", "generator covers differ from the transitive reduction");
    return poset;
}

std::string to_dot(const DufloPoset& poset, const CartanScheme& scheme) {
    std::ostringstream out;
    out << "digraph duflo {\n  rankdir=BT;\n  label=\"right Duflo order at " << scheme.object(poset.base).name
        << "\";\n";
    for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
        const auto& w = poset.nodes[k];
        std::string word = w.word.empty() ? "id" : "";
        for (std::size_t g : w.word) word += "s" + std::to_string(g + 1);
        out << "  n" << k << " [label=\"" << word << "\\n|L|=" << w.lambda.size() << "\"];\n";
    }
    for (const auto& [a, b] : poset.hasse) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace weyl
