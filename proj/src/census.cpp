#include "weyl/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace weyl {

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, Int max_degree) {
    Polynomial out;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) {
            RootVector d = da + db;
            if (d.height() > max_degree) continue;
            Int& c = out[d];
            c = checked_add(c, checked_mul(ca, cb));
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<Int> specialize_total_degree(const Polynomial& p, Int max_degree) {
    std::vector<Int> out(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& [d, c] : p) {
        Int h = d.height();
        if (h <= max_degree) out[static_cast<std::size_t>(h)] = checked_add(out[static_cast<std::size_t>(h)], c);
    }
    return out;
}

Polynomial HilbertSeries::truncate(std::size_t rank, Int max_degree) const {
    Polynomial result{{RootVector(rank), 1}};
    for (const auto& f : factors) {
        const Int step = f.degree.height();
        if (step <= 0) throw DomainError("HilbertSeries", "factor degree must be positive");
        Polynomial factor;
        for (Int k = 0; k * step <= max_degree; ++k) {
            if (f.height && k >= *f.height) break;
            factor[f.degree * k] = 1;
        }
        result = multiply_truncated(result, factor, max_degree);
    }
    return result;
}

std::optional<Int> rank_one_height(const ScalarValue& q_lambda) {
    if (q_lambda.is_one()) return std::nullopt;
    return q_lambda.order();
}

PBWSequence pbw_degrees(const CartanScheme& scheme, std::size_t base, const Word& reduced_word) {
    if (!is_reduced(scheme, base, reduced_word))
        throw DomainError("NotReduced", word_to_string(reduced_word) + " is not a reduced word");
    PBWSequence seq;
    seq.degrees = evaluate_word(scheme, base, reduced_word).betas;
    std::set<RootVector> distinct(seq.degrees.begin(), seq.degrees.end());
    if (distinct.size() != seq.degrees.size())
        throw VerificationError("PBWDegrees", "PBW degrees of a reduced word are not pairwise distinct");
    for (const auto& b : seq.degrees)
        if (!b.is_positive()) throw VerificationError("PBWDegrees", "PBW degree " + b.to_string() + " is not positive");
    if (const auto& q = scheme.object(base).braiding)
        for (const auto& b : seq.degrees) seq.self_braidings.push_back(q->chi(b, b));
    return seq;
}

bool is_admissible(const CartanScheme& scheme, std::size_t base, const Word& word) {
    const auto betas = evaluate_word(scheme, base, word).betas;
    for (std::size_t l = 0; l < betas.size(); ++l)
        for (std::size_t k = 0; k < l; ++k)
            if (betas[l] == -betas[k]) return false;
    return true;
}

HilbertSeries hilbert_series(const CartanScheme& scheme, std::size_t base, const std::vector<RootVector>& lambda) {
    const auto& q = scheme.object(base).braiding;
    if (!q) throw DomainError("ModeUnsupported", "Hilbert series need diagonal braiding data");
    HilbertSeries h;
    for (const auto& l : lambda) h.factors.push_back({l, rank_one_height(q->chi(l, l))});
    return h;
}

HilbertSeries hilbert_series(const CartanScheme& scheme, const CoidealRecord& record) {
    return hilbert_series(scheme, record.lambda.base, record.lambda.roots);
}

std::vector<CoidealRecord> census(const CartanScheme& scheme, std::size_t base, std::size_t max_length,
                                  Int truncation) {
    std::vector<Morphism> homto;
    try {
        homto = enumerate_morphisms_to(scheme, base, max_length);
    } catch (const DomainError& e) {
        if (e.kind() == "LengthBoundExceeded") throw DomainError("NotFinite", e.what());
        throw;
    }
    std::vector<CoidealRecord> records;
    std::set<std::vector<RootVector>> lambdas;
    std::set<Polynomial> series;
    for (auto& w : homto) {
        CoidealRecord rec;
        rec.id = records.size();
        rec.lambda = {base, w.lambda};
        rec.pbw = pbw_degrees(scheme, base, w.word);
        std::set<RootVector> pbw_set(rec.pbw.degrees.begin(), rec.pbw.degrees.end());
        if (!std::equal(pbw_set.begin(), pbw_set.end(), w.lambda.begin(), w.lambda.end()))
            throw VerificationError("PBWDegrees", "PBW degrees of " + word_to_string(w.word) + " differ from Λ₊");
        for (std::size_t i = 0; i < scheme.rank(); ++i)
            rec.contains_generator.push_back(rec.lambda.contains(RootVector::simple(scheme.rank(), i)));
        if (scheme.object(base).braiding) {
            rec.hilbert = hilbert_series(scheme, base, w.lambda);
            if (!series.insert(rec.hilbert->truncate(scheme.rank(), truncation)).second)
                throw VerificationError("HilbertCollision", "two coideals share a truncated Hilbert series at " +
                                                                word_to_string(w.word));
        }
        if (!lambdas.insert(w.lambda).second)
            throw VerificationError("LambdaCollision", "two morphisms share Λ₊ at " + word_to_string(w.word));
        rec.morphism = std::move(w);
        records.push_back(std::move(rec));
    }
    for (auto& r2 : records)
        for (const auto& r1 : records)
            if (inclusion_check(r1, r2)) r2.includes.push_back(r1.id);
    return records;
}

bool inclusion_check(const CoidealRecord& r1, const CoidealRecord& r2) { return leq_duflo(r1.morphism, r2.morphism); }

bool freeness_check(const CartanScheme& scheme, const CoidealRecord& r1, const CoidealRecord& r2, Int truncation) {
    if (!inclusion_check(r1, r2)) throw DomainError("NotComparable", "E(w1) is not contained in E(w2)");
    const std::size_t base = r2.lambda.base;
    std::vector<RootVector> complement;
    std::set_difference(r2.lambda.roots.begin(), r2.lambda.roots.end(), r1.lambda.roots.begin(),
                        r1.lambda.roots.end(), std::back_inserter(complement));
    const std::size_t n = scheme.rank();
    Polynomial big = hilbert_series(scheme, base, r2.lambda.roots).truncate(n, truncation);
    Polynomial small = hilbert_series(scheme, base, r1.lambda.roots).truncate(n, truncation);
    Polynomial quotient = hilbert_series(scheme, base, complement).truncate(n, truncation);
    return big == multiply_truncated(small, quotient, truncation);
}

namespace {

std::optional<std::pair<Int, std::string>> classify_component(const GeneralizedCartanMatrix& a,
                                                              const std::vector<std::size_t>& nodes) {
    const std::size_t n = nodes.size();
    auto factorial = [](Int k) {
        Int r = 1;
        for (Int i = 2; i <= k; ++i) r = checked_mul(r, i);
        return r;
    };
    if (n == 1) return std::make_pair(Int{2}, std::string("A1"));

    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::tuple<std::size_t, std::size_t, Int>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            Int p = checked_mul(a(nodes[u], nodes[v]), a(nodes[v], nodes[u]));
            if (p == 0) continue;
            if (p > 3) return std::nullopt;
            adj[u].push_back(v);
            adj[v].push_back(u);
            edges.emplace_back(u, v, p);
        }
    if (edges.size() != n - 1) return std::nullopt;  // connected with a cycle

    std::size_t doubles = 0, triples = 0;
    for (const auto& [u, v, p] : edges) {
        doubles += p == 2;
        triples += p == 3;
    }
    std::size_t max_deg = 0, branch = n;
    for (std::size_t u = 0; u < n; ++u) {
        if (adj[u].size() > max_deg) max_deg = adj[u].size();
        if (adj[u].size() == 3) branch = u;
    }
    if (max_deg > 3) return std::nullopt;
    const Int nn = static_cast<Int>(n);

    if (triples) {
        if (n == 2) return std::make_pair(Int{12}, std::string("G2"));
        return std::nullopt;
    }
    if (doubles > 1) return std::nullopt;
    if (doubles == 1) {
        if (max_deg > 2) return std::nullopt;
        for (const auto& [u, v, p] : edges) {
            if (p != 2) continue;
            bool u_leaf = adj[u].size() == 1, v_leaf = adj[v].size() == 1;
            if (u_leaf || v_leaf) {
                std::size_t leaf = u_leaf ? u : v, other = u_leaf ? v : u;
                if (n == 2) return std::make_pair(Int{8}, std::string("B2"));
                std::string letter = a(nodes[leaf], nodes[other]) == -2 ? "C" : "B";
                return std::make_pair(checked_mul(Int{1} << n, factorial(nn)), letter + std::to_string(n));
            }
            if (n == 4) return std::make_pair(Int{1152}, std::string("F4"));
        }
        return std::nullopt;
    }
    if (max_deg <= 2) return std::make_pair(factorial(nn + 1), "A" + std::to_string(n));

    // one branch node: leg lengths decide D/E
    std::vector<Int> legs;
    for (std::size_t start : adj[branch]) {
        Int len = 1;
        std::size_t prev = branch, cur = start;
        while (true) {
            std::size_t next = n;
            for (std::size_t w : adj[cur])
                if (w != prev) next = w;
            if (next == n) break;
            if (adj[cur].size() > 2) return std::nullopt;
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1)
        return std::make_pair(checked_mul(Int{1} << (n - 1), factorial(nn)), "D" + std::to_string(n));
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 2) return std::make_pair(Int{51840}, std::string("E6"));
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 3) return std::make_pair(Int{2903040}, std::string("E7"));
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 4) return std::make_pair(Int{696729600}, std::string("E8"));
    return std::nullopt;
}

} // namespace

std::optional<std::pair<Int, std::string>> weyl_group_order(const GeneralizedCartanMatrix& a) {
    const std::size_t n = a.rank();
    std::vector<bool> seen(n, false);
    Int order = 1;
    std::string type;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> nodes, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            nodes.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && a(u, v) != 0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        auto part = classify_component(a, nodes);
        if (!part) return std::nullopt;
        order = checked_mul(order, part->first);
        type += (type.empty() ? "" : "+") + part->second;
    }
    return std::make_pair(order, type);
}

KharchenkoCount kharchenko_count(const CartanScheme& scheme, std::size_t base, std::size_t max_length) {
    KharchenkoCount out;
    try {
        out.count = enumerate_morphisms_to(scheme, base, max_length).size();
    } catch (const DomainError& e) {
        if (e.kind() == "LengthBoundExceeded") throw DomainError("NotFinite", e.what());
        throw;
    }
    const auto component = scheme.component(base);
    out.standard = std::all_of(component.begin(), component.end(),
                               [&](std::size_t x) { return scheme.cartan(x) == scheme.cartan(base); });
    if (out.standard) {
        if (auto w = weyl_group_order(scheme.cartan(base))) {
            out.weyl_order = w->first;
            out.type = w->second;
        }
    }
    return out;
}

std::vector<std::string> check_reflection_consistency(const CartanScheme& scheme, std::size_t base,
                                                      std::size_t max_length, Int truncation) {
    std::vector<std::string> problems;
    const auto here = census(scheme, base, max_length, truncation);
    const bool braided = scheme.has_braiding();
    for (std::size_t i = 0; i < scheme.rank(); ++i) {
        const std::size_t there_obj = scheme.r(i, base);
        const auto there = census(scheme, there_obj, max_length, truncation);
        const LatticeMap& s = scheme.reflection(i, base);
        const RootVector alpha = RootVector::simple(scheme.rank(), i);
        for (const auto& rec : here) {
            std::vector<RootVector> moved = rec.lambda.roots;
            auto it = std::find(moved.begin(), moved.end(), alpha);
            const bool present = it != moved.end();
            if (present) moved.erase(it);
            for (auto& v : moved) v = s.apply(v);
            if (!present) moved.push_back(alpha);
            std::sort(moved.begin(), moved.end());

            Word extended{i};
            extended.insert(extended.end(), rec.morphism.word.begin(), rec.morphism.word.end());
            const auto target_data = evaluate_word(scheme, there_obj, extended);
            const CoidealRecord* match = nullptr;
            for (const auto& cand : there)
                if (cand.morphism.source == target_data.source && cand.morphism.matrix == target_data.matrix)
                    match = &cand;
            const std::string where = "s_" + std::to_string(i + 1) + word_to_string(rec.morphism.word);
            if (!match) {
                problems.push_back(where + ": no census record at the reflected object");
                continue;
            }
            if (match->lambda.roots != moved) problems.push_back(where + ": transported Λ₊ differs");
            if (braided) {
                auto lhs = hilbert_series(scheme, there_obj, moved).truncate(scheme.rank(), truncation);
                auto rhs = match->hilbert->truncate(scheme.rank(), truncation);
                if (lhs != rhs) problems.push_back(where + ": Hilbert series at the reflected object differ");
            }
        }
    }
    return problems;
}

} // namespace weyl
