#include "weyl/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace weyl {

namespace {

std::string label(std::size_t i) { return std::to_string(i + 1); }

class LengthBoundExceeded : public DomainError {
public:
    explicit LengthBoundExceeded(std::size_t bound)
        : DomainError("LengthBoundExceeded",
                      "Homto not saturated by words of length <= " + std::to_string(bound)) {}
};

} // namespace

std::string word_to_string(const Word& word) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out << ',';
        out << word[k] + 1;
    }
    out << ')';
    return out.str();
}

void toggle_lambda(std::vector<RootVector>& lambda, const RootVector& beta) {
    RootVector key;
    if (beta.is_positive())
        key = beta;
    else if (beta.is_negative())
        key = -beta;
    else
        return;
    auto it = std::lower_bound(lambda.begin(), lambda.end(), key);
    if (it != lambda.end() && *it == key)
        lambda.erase(it);
    else
        lambda.insert(it, key);
}

WordData evaluate_word(const CartanScheme& scheme, std::size_t target, const Word& word) {
    if (target >= scheme.object_count()) throw DomainError("InvalidWord", "unknown target object");
    WordData data;
    data.target = target;
    data.source = target;
    data.matrix = LatticeMap::identity(scheme.rank());
    for (std::size_t i : word) {
        if (i >= scheme.rank())
            throw DomainError("InvalidWord", "generator " + std::to_string(i + 1) + " out of range in " +
                                                 word_to_string(word));
        // w ∈ Hom(Y, X) followed by s_i^{r_i(Y)} ∈ Hom(r_i(Y), Y); C2 makes
        // s_i^{r_i(Y)} = s_i^Y as matrices.
        data.betas.push_back(data.matrix.column(i));
        data.matrix = data.matrix * scheme.reflection(i, data.source);
        data.source = scheme.r(i, data.source);
    }
    return data;
}

std::vector<Morphism> enumerate_morphisms_to(const CartanScheme& scheme, std::size_t target, std::size_t max_length) {
    if (target >= scheme.object_count()) throw InputError("UnknownObject", "target object out of range");
    std::vector<Morphism> all;
    std::set<std::pair<std::size_t, LatticeMap>> seen;

    Morphism id;
    id.target = id.source = target;
    id.matrix = LatticeMap::identity(scheme.rank());
    seen.emplace(id.source, id.matrix);
    all.push_back(std::move(id));

    std::size_t level_begin = 0;
    for (std::size_t length = 0;; ++length) {
        const std::size_t level_end = all.size();
        if (level_begin == level_end) break;
        for (std::size_t k = level_begin; k < level_end; ++k) {
            for (std::size_t i = 0; i < scheme.rank(); ++i) {
                const Morphism& w = all[k];
                LatticeMap matrix = w.matrix * scheme.reflection(i, w.source);
                std::size_t source = scheme.r(i, w.source);
                if (!seen.emplace(source, matrix).second) continue;
                if (length + 1 > max_length) throw LengthBoundExceeded(max_length);
                Morphism next;
                next.target = target;
                next.source = source;
                next.word = w.word;
                next.word.push_back(i);
                next.lambda = w.lambda;
                toggle_lambda(next.lambda, w.matrix.column(i));
                next.matrix = std::move(matrix);
                all.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    return all;
}

std::set<RootVector> RealRootSet::positive() const {
    std::set<RootVector> out;
    for (const auto& r : roots)
        if (r.is_positive()) out.insert(r);
    return out;
}

RealRootSet real_roots(const CartanScheme& scheme, std::size_t target, std::size_t max_length) {
    RealRootSet out;
    out.base = target;
    for (const auto& w : enumerate_morphisms_to(scheme, target, max_length))
        for (std::size_t i = 0; i < scheme.rank(); ++i) out.roots.insert(w.matrix.column(i));
    return out;
}

bool RootSystemReport::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomCheck& a) { return a.passed; });
}

CoxeterTable coxeter_table(const CartanScheme& scheme, const std::vector<std::set<RootVector>>& roots) {
    const std::size_t n = scheme.rank();
    CoxeterTable m(scheme.object_count(), std::vector<std::vector<std::optional<Int>>>(n, std::vector<std::optional<Int>>(n)));
    for (std::size_t x = 0; x < scheme.object_count(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Int count = 0;
                for (const auto& r : roots.at(x)) {
                    bool inside = true;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (r[k] < 0 || ((k != i && k != j) && r[k] != 0)) inside = false;
                    }
                    if (inside && !r.is_zero()) ++count;
                }
                m[x][i][j] = count;
            }
    return m;
}

RootSystemReport check_root_system(const CartanScheme& scheme, const std::vector<std::set<RootVector>>& roots) {
    const std::size_t n = scheme.rank();
    if (roots.size() != scheme.object_count())
        throw InputError("RootSystem", "need one root set per object");
    RootSystemReport report;
    AxiomCheck r1{"R1"}, r2{"R2"}, r3{"R3"}, r4{"R4"};

    for (std::size_t x = 0; x < scheme.object_count(); ++x) {
        const auto& delta = roots[x];
        const auto& name = scheme.object(x).name;
        for (const auto& r : delta) {
            if (!r.is_positive() && !r.is_negative()) {
                r1.passed = false;
                r1.witnesses.push_back({x, 0, 0, r, r.to_string() + " at " + name + " is neither positive nor negative"});
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            // Delta ∩ Z alpha_i = {±alpha_i}
            RootVector a = RootVector::simple(n, i);
            std::set<RootVector> on_axis;
            for (const auto& r : delta) {
                bool axis = true;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i && r[k] != 0) axis = false;
                if (axis) on_axis.insert(r);
            }
            if (on_axis != std::set<RootVector>{a, -a}) {
                r2.passed = false;
                r2.witnesses.push_back({x, i, i, std::nullopt,
                                        "roots on the axis of alpha_" + label(i) + " at " + name + " are not {±alpha_" +
                                            label(i) + "}"});
            }
            // s_i^X(Delta^X) = Delta^{r_i(X)}
            std::set<RootVector> image;
            for (const auto& r : delta) image.insert(scheme.reflection(i, x).apply(r));
            if (image != roots[scheme.r(i, x)]) {
                r3.passed = false;
                r3.witnesses.push_back({x, i, i, std::nullopt,
                                        "s_" + label(i) + " does not map the roots of " + name + " onto those of " +
                                            scheme.object(scheme.r(i, x)).name});
            }
        }
    }

    report.m = coxeter_table(scheme, roots);
    for (std::size_t x = 0; x < scheme.object_count(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || !report.m[x][i][j]) continue;
                std::size_t y = x;
                for (Int k = 0; k < *report.m[x][i][j]; ++k) y = scheme.r(i, scheme.r(j, y));
                if (y != x) {
                    r4.passed = false;
                    r4.witnesses.push_back({x, i, j, std::nullopt,
                                            "(r_" + label(i) + " r_" + label(j) + ")^" +
                                                std::to_string(*report.m[x][i][j]) + " does not fix " +
                                                scheme.object(x).name});
                }
            }
    report.axioms = {r1, r2, r3, r4};
    return report;
}

std::vector<CoxeterFailure> check_coxeter_relations(const CartanScheme& scheme, const CoxeterTable& m) {
    std::vector<CoxeterFailure> failures;
    const std::size_t n = scheme.rank();
    for (std::size_t x = 0; x < scheme.object_count(); ++x)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::optional<Int> mij = (i == j) ? std::optional<Int>(1) : m.at(x).at(i).at(j);
                if (!mij) continue;
                // s_j^X first, then s_i^{r_j(X)}, alternating, 2 m_ij factors
                LatticeMap product = LatticeMap::identity(n);
                std::size_t y = x;
                for (Int k = 0; k < 2 * *mij; ++k) {
                    std::size_t g = (k % 2 == 0) ? j : i;
                    product = scheme.reflection(g, y) * product;
                    y = scheme.r(g, y);
                }
                if (y != x || !product.is_identity())
                    failures.push_back({x, i, j,
                                        "Coxeter relation for (" + label(i) + "," + label(j) + ") with m = " +
                                            std::to_string(*mij) + " fails at " + scheme.object(x).name});
            }
    return failures;
}

bool FinitenessReport::all_finite() const {
    return std::all_of(components.begin(), components.end(), [](const ComponentVerdict& c) { return c.finite; });
}

const ComponentVerdict& FinitenessReport::component_of(std::size_t object) const {
    for (const auto& c : components)
        if (std::find(c.objects.begin(), c.objects.end(), object) != c.objects.end()) return c;
    throw InputError("UnknownObject", "object not in any component");
}

FinitenessReport is_finite(const CartanScheme& scheme, std::size_t max_length) {
    FinitenessReport report;
    std::vector<bool> assigned(scheme.object_count(), false);
    for (std::size_t x = 0; x < scheme.object_count(); ++x) {
        if (assigned[x]) continue;
        ComponentVerdict verdict;
        verdict.objects = scheme.component(x);
        for (std::size_t y : verdict.objects) assigned[y] = true;

        std::size_t finite_count = 0;
        for (std::size_t y : verdict.objects) {
            try {
                auto homto = enumerate_morphisms_to(scheme, y, max_length);
                std::set<RootVector> roots;
                for (const auto& w : homto)
                    for (std::size_t i = 0; i < scheme.rank(); ++i) roots.insert(w.matrix.column(i));
                verdict.homto_counts[y] = homto.size();
                verdict.real_root_counts[y] = roots.size();
                verdict.morphism_count += homto.size();
                ++finite_count;
            } catch (const DomainError& e) {
                if (e.kind() != "LengthBoundExceeded") throw;
            }
        }
        verdict.finite = finite_count == verdict.objects.size();
        if (finite_count != 0 && !verdict.finite) {
            verdict.consistent = false;
            verdict.notes.push_back("Homto is finite at some but not all objects of the component");
        }
        if (verdict.finite) {
            std::set<std::size_t> sizes;
            for (const auto& [y, c] : verdict.homto_counts) sizes.insert(c);
            if (sizes.size() != 1) {
                verdict.consistent = false;
                verdict.notes.push_back("#Homto differs between objects of one component");
            }
        } else {
            verdict.homto_counts.clear();
            verdict.real_root_counts.clear();
            verdict.morphism_count = 0;
        }
        report.components.push_back(std::move(verdict));
    }
    return report;
}

std::vector<Morphism> longest_elements(const CartanScheme& scheme, std::size_t target, std::size_t max_length) {
    std::vector<Morphism> homto;
    try {
        homto = enumerate_morphisms_to(scheme, target, max_length);
    } catch (const DomainError& e) {
        if (e.kind() == "LengthBoundExceeded") throw DomainError("NotFinite", e.what());
        throw;
    }
    std::size_t longest = homto.back().length();
    std::vector<Morphism> out;
    for (auto& w : homto)
        if (w.length() == longest) out.push_back(std::move(w));
    return out;
}

} // namespace weyl
