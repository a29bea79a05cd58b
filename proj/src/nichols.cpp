#include "weyl/nichols.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace weyl::oracle {

namespace {

RootVector zero_degree(std::size_t rank) { return RootVector(rank); }

bool fits_inside(const RootVector& small, const RootVector& big) {
    for (std::size_t k = 0; k < small.rank(); ++k)
        if (small[k] < 0 || small[k] > big[k]) return false;
    return true;
}

bool nonnegative(const RootVector& d) {
    for (Int c : d.coords())
        if (c < 0) return false;
    return true;
}

} // namespace

DegreeCapExceeded::DegreeCapExceeded(Int degree, int cap)
    : DomainError("DegreeCapExceeded",
                  "total degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap)) {}

Element add(Element a, const Element& b, const FieldElement& factor) {
    for (const auto& [w, c] : b) {
        auto it = a.find(w);
        if (it == a.end())
            it = a.emplace(w, c * factor).first;
        else
            it->second += c * factor;
        if (it->second.is_zero()) a.erase(it);
    }
    return a;
}

Element scale(Element a, const FieldElement& factor) {
    if (factor.is_zero()) return {};
    for (auto& [w, c] : a) c *= factor;
    return a;
}

bool is_zero(const Element& x) { return x.empty(); }

NicholsAlgebra::NicholsAlgebra(FieldBraiding q, int degree_cap) : q_(std::move(q)), cap_(degree_cap) {
    if (q_.rank == 0) throw InputError("NicholsAlgebra", "rank must be positive");
    if (degree_cap < 1) throw InputError("NicholsAlgebra", "degree cap must be positive");
}

void NicholsAlgebra::check_cap(const RootVector& d) const {
    if (d.height() > cap_) throw DegreeCapExceeded(d.height(), cap_);
}

Element NicholsAlgebra::one() const { return {{Letters{}, scalar(1)}}; }

Element NicholsAlgebra::generator(std::size_t i) const {
    if (i >= rank()) throw DomainError("IndexOutOfRange", "generator index");
    return {{Letters(1, static_cast<char>(i)), scalar(1)}};
}

RootVector NicholsAlgebra::degree_of(const Letters& word) const {
    RootVector d(rank());
    for (char c : word) d[static_cast<std::size_t>(c)] += 1;
    return d;
}

Element NicholsAlgebra::multiply(const Element& a, const Element& b) const {
    Element out;
    Letters prefix;
    // Interleavings of u and v; a letter of v moved in front of a letter a of
    // u picks up q(a, letter).
    std::function<void(const Letters&, std::size_t, const Letters&, std::size_t, const FieldElement&)> rec =
        [&](const Letters& u, std::size_t ui, const Letters& v, std::size_t vj, const FieldElement& coeff) {
            if (ui == u.size() || vj == v.size()) {
                Letters word = prefix + u.substr(ui) + v.substr(vj);
                auto it = out.find(word);
                if (it == out.end())
                    it = out.emplace(std::move(word), coeff).first;
                else
                    it->second += coeff;
                if (it->second.is_zero()) out.erase(it);
                return;
            }
            prefix.push_back(u[ui]);
            rec(u, ui + 1, v, vj, coeff);
            prefix.pop_back();

            FieldElement c = coeff;
            const auto letter = static_cast<std::size_t>(v[vj]);
            for (std::size_t k = ui; k < u.size(); ++k) c *= q_(static_cast<std::size_t>(u[k]), letter);
            prefix.push_back(v[vj]);
            rec(u, ui, v, vj + 1, c);
            prefix.pop_back();
        };
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            if (degree_of(u).height() + degree_of(v).height() > cap_)
                throw DegreeCapExceeded(degree_of(u).height() + degree_of(v).height(), cap_);
            rec(u, 0, v, 0, cu * cv);
        }
    return out;
}

Element NicholsAlgebra::right_strip(const Element& x, std::size_t i) const {
    Element out;
    for (const auto& [w, c] : x)
        if (!w.empty() && static_cast<std::size_t>(w.back()) == i) out.emplace(w.substr(0, w.size() - 1), c);
    return out;
}

Element NicholsAlgebra::left_strip(const Element& x, std::size_t i) const {
    Element out;
    for (const auto& [w, c] : x)
        if (!w.empty() && static_cast<std::size_t>(w.front()) == i) out.emplace(w.substr(1), c);
    return out;
}

Element NicholsAlgebra::braided_commutator(const Element& x, const RootVector& dx, const Element& y,
                                           const RootVector& dy) const {
    return add(multiply(x, y), multiply(y, x), -q_.chi(dx, dy));
}

const std::vector<Letters>& NicholsAlgebra::words(const RootVector& d) const {
    if (auto it = words_.find(d); it != words_.end()) return it->second;
    check_cap(d);
    std::vector<Letters> out;
    RootVector remaining = d;
    Letters current;
    std::function<void()> rec = [&] {
        if (remaining.is_zero()) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = 0; i < rank(); ++i) {
            if (remaining[i] == 0) continue;
            remaining[i] -= 1;
            current.push_back(static_cast<char>(i));
            rec();
            current.pop_back();
            remaining[i] += 1;
        }
    };
    if (nonnegative(d)) rec();
    return words_.emplace(d, std::move(out)).first->second;
}

Vector NicholsAlgebra::to_vector(const Element& x, const RootVector& d) const {
    const auto& ws = words(d);
    Vector v = zero_vector(field(), ws.size());
    for (const auto& [w, c] : x) {
        auto it = std::lower_bound(ws.begin(), ws.end(), w);
        if (it == ws.end() || *it != w)
            throw DomainError("DegreeMismatch", "element is not homogeneous of degree " + d.to_string());
        v[static_cast<std::size_t>(it - ws.begin())] = c;
    }
    return v;
}

Element NicholsAlgebra::from_vector(const Vector& v, const RootVector& d) const {
    const auto& ws = words(d);
    Element x;
    for (std::size_t k = 0; k < ws.size(); ++k)
        if (!v[k].is_zero()) x.emplace(ws[k], v[k]);
    return x;
}

const GradedComponent& NicholsAlgebra::component(const RootVector& d) const {
    if (auto it = components_.find(d); it != components_.end()) return it->second;
    check_cap(d);
    GradedComponent comp{d, words(d), Subspace(field(), words(d).size()), {}};
    if (d.is_zero()) {
        comp.span.insert(to_vector(one(), d));
        comp.basis.push_back(one());
    } else if (nonnegative(d)) {
        for (std::size_t i = 0; i < rank(); ++i) {
            if (d[i] == 0) continue;
            const RootVector lower = d - RootVector::simple(rank(), i);
            const auto& below = component(lower);
            for (const auto& b : below.basis) {
                Element e = multiply(b, generator(i));
                if (comp.span.insert(to_vector(e, d))) comp.basis.push_back(std::move(e));
            }
        }
    }
    return components_.emplace(d, std::move(comp)).first->second;
}

std::vector<RootVector> NicholsAlgebra::degrees_up_to(Int max_total) const {
    std::vector<RootVector> out;
    RootVector d(rank());
    std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int left) {
        if (k == rank()) {
            if (!d.is_zero()) out.push_back(d);
            return;
        }
        for (Int c = 0; c <= left; ++c) {
            d[k] = c;
            rec(k + 1, left - c);
        }
        d[k] = 0;
    };
    rec(0, max_total);
    std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a < b;
    });
    return out;
}

std::size_t symmetrizer_dim(const NicholsAlgebra& algebra, const RootVector& d) { return algebra.dimension(d); }

std::size_t symmetrizer_dim(const BraidingMatrix& q, const RootVector& d, int cap, const mpq_class& generic_base) {
    NicholsAlgebra algebra(specialize(q, generic_base), cap);
    return algebra.dimension(d);
}

bool adjoint_power_nonzero(const NicholsAlgebra& algebra, std::size_t i, std::size_t j, int m) {
    if (i == j) throw DomainError("IndexOutOfRange", "adjoint power needs i != j");
    Element y = algebra.generator(j);
    RootVector dy = RootVector::simple(algebra.rank(), j);
    const Element x = algebra.generator(i);
    const RootVector dx = RootVector::simple(algebra.rank(), i);
    for (int k = 0; k < m; ++k) {
        if (dy.height() + 1 > algebra.degree_cap()) throw DegreeCapExceeded(dy.height() + 1, algebra.degree_cap());
        y = algebra.braided_commutator(x, dx, y, dy);
        dy = dy + dx;
        if (is_zero(y)) return false;
    }
    return !is_zero(y);
}

std::optional<Int> oracle_cartan_entry(const NicholsAlgebra& algebra, std::size_t i, std::size_t j) {
    if (i == j) return 2;
    Element y = algebra.generator(j);
    RootVector dy = RootVector::simple(algebra.rank(), j);
    const Element x = algebra.generator(i);
    const RootVector dx = RootVector::simple(algebra.rank(), i);
    for (Int m = 1;; ++m) {
        if (dy.height() + 1 > algebra.degree_cap()) return std::nullopt;
        y = algebra.braided_commutator(x, dx, y, dy);
        dy = dy + dx;
        if (is_zero(y)) return -(m - 1);
    }
}

bool check_nondegenerate(const NicholsAlgebra& algebra, Int max_total) {
    for (const auto& d : algebra.degrees_up_to(max_total)) {
        const auto& comp = algebra.component(d);
        if (comp.basis.empty()) continue;
        // stack the ∂^L_i images of a basis; injective iff the columns are independent
        std::vector<Vector> columns;
        for (const auto& b : comp.basis) {
            Vector col;
            for (std::size_t i = 0; i < algebra.rank(); ++i) {
                if (d[i] == 0) continue;
                const RootVector lower = d - RootVector::simple(algebra.rank(), i);
                Vector part = algebra.to_vector(algebra.left_strip(b, i), lower);
                col.insert(col.end(), part.begin(), part.end());
            }
            columns.push_back(std::move(col));
        }
        if (!kernel(algebra.field(), columns).empty()) return false;
    }
    return true;
}

namespace {

using DegreeSpans = std::map<RootVector, Subspace>;

const Subspace* find_span(const DegreeSpans& spans, const RootVector& d) {
    auto it = spans.find(d);
    return it == spans.end() ? nullptr : &it->second;
}

/// Spans of x^a * s for s in `inner`, a >= 0, restricted to the degrees
/// `targets` (plus zero).
DegreeSpans extend_left(const NicholsAlgebra& algebra, const DegreeSpans& inner, const Element& x,
                        const RootVector& beta, const std::vector<RootVector>& targets) {
    std::vector<Element> powers{algebra.one()};
    DegreeSpans out;
    const RootVector zero = zero_degree(algebra.rank());
    out.emplace(zero, *find_span(inner, zero));
    for (const auto& d : targets) {
        Subspace span(algebra.field(), algebra.words(d).size());
        for (Int a = 0;; ++a) {
            RootVector rest = d - beta * a;
            if (!nonnegative(rest)) break;
            while (static_cast<Int>(powers.size()) <= a) powers.push_back(algebra.multiply(x, powers.back()));
            const Subspace* below = find_span(inner, rest);
            if (!below) continue;
            for (const auto& row : below->basis()) {
                Element e = algebra.multiply(powers[static_cast<std::size_t>(a)], algebra.from_vector(row, rest));
                span.insert(algebra.to_vector(e, d));
            }
        }
        out.emplace(d, std::move(span));
    }
    return out;
}

DegreeSpans unit_span(const NicholsAlgebra& algebra, const std::vector<RootVector>& targets) {
    DegreeSpans spans;
    const RootVector zero = zero_degree(algebra.rank());
    Subspace unit(algebra.field(), 1);
    unit.insert(algebra.to_vector(algebra.one(), zero));
    spans.emplace(zero, std::move(unit));
    for (const auto& d : targets) spans.emplace(d, Subspace(algebra.field(), algebra.words(d).size()));
    return spans;
}

/// Elements of B_d all of whose right strips lie in `spans`.
std::vector<Element> coideal_candidates(const NicholsAlgebra& algebra, const DegreeSpans& spans, const RootVector& d) {
    const auto& comp = algebra.component(d);
    std::vector<Vector> columns;
    for (const auto& b : comp.basis) {
        Vector col;
        for (std::size_t i = 0; i < algebra.rank(); ++i) {
            if (d[i] == 0) continue;
            const RootVector lower = d - RootVector::simple(algebra.rank(), i);
            Vector v = algebra.to_vector(algebra.right_strip(b, i), lower);
            if (const Subspace* s = find_span(spans, lower)) v = s->reduce(std::move(v));
            col.insert(col.end(), v.begin(), v.end());
        }
        columns.push_back(std::move(col));
    }
    std::vector<Element> out;
    for (const auto& coeffs : kernel(algebra.field(), columns)) {
        Element e;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (!coeffs[k].is_zero()) e = add(std::move(e), comp.basis[k], coeffs[k]);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

RootVectorData build_root_vectors(const NicholsAlgebra& algebra, const std::vector<RootVector>& pbw, Int cap) {
    RootVectorData data;
    const auto targets = algebra.degrees_up_to(cap);
    data.prefix_spans.push_back(unit_span(algebra, targets));
    for (const auto& beta : pbw) {
        const DegreeSpans& prev = data.prefix_spans.back();
        if (beta.height() > cap) {
            data.vectors.push_back(std::nullopt);
            data.prefix_spans.push_back(prev);
            continue;
        }
        Subspace seen = prev.at(beta);
        std::vector<Element> fresh;
        for (auto& cand : coideal_candidates(algebra, prev, beta))
            if (seen.insert(algebra.to_vector(cand, beta))) fresh.push_back(std::move(cand));
        if (fresh.size() != 1)
            data.failures.push_back({"root-vector", beta,
                                     std::to_string(fresh.size()) + " independent candidates for the root vector of degree " +
                                         beta.to_string()});
        if (fresh.empty()) {
            data.vectors.push_back(std::nullopt);
            data.prefix_spans.push_back(prev);
            continue;
        }
        data.vectors.push_back(fresh.front());
        data.prefix_spans.push_back(extend_left(algebra, prev, fresh.front(), beta, targets));
    }
    return data;
}

namespace {

NicholsAlgebra algebra_for(const CartanScheme& scheme, const CoidealRecord& record, int cap,
                           const mpq_class& generic_base) {
    const auto& q = scheme.object(record.lambda.base).braiding;
    if (!q) throw DomainError("ModeUnsupported", "oracle needs a diagonal braiding");
    return NicholsAlgebra(specialize(*q, generic_base), cap);
}

} // namespace

OracleReport verify_coideal(const CartanScheme& scheme, const CoidealRecord& record, int cap,
                            const mpq_class& generic_base) {
    const NicholsAlgebra algebra = algebra_for(scheme, record, cap, generic_base);
    const auto& pbw = record.pbw.degrees;
    RootVectorData data = build_root_vectors(algebra, pbw, cap);
    OracleReport report;
    report.failures = data.failures;
    const DegreeSpans& span = data.prefix_spans.back();

    Polynomial expected;
    if (record.hilbert) expected = record.hilbert->truncate(scheme.rank(), cap);
    const auto degrees = algebra.degrees_up_to(cap);
    for (const auto& d : degrees) {
        const Subspace& e = span.at(d);
        report.dimensions[d] = e.dim();
        ++report.checks;
        if (!algebra.component(d).span.contains(e))
            report.failures.push_back({"subspace", d, "span leaves the Nichols algebra"});
        if (record.hilbert) {
            auto it = expected.find(d);
            const Int want = it == expected.end() ? 0 : it->second;
            if (static_cast<Int>(e.dim()) != want)
                report.failures.push_back({"hilbert", d,
                                           "dimension " + std::to_string(e.dim()) + " but the Hilbert series gives " +
                                               std::to_string(want)});
        }
        // right coideal: every right strip stays inside
        for (std::size_t i = 0; i < scheme.rank(); ++i) {
            if (d[i] == 0 || e.dim() == 0) continue;
            const RootVector lower = d - RootVector::simple(scheme.rank(), i);
            const Subspace& target = span.at(lower);
            for (const auto& row : e.basis()) {
                ++report.checks;
                if (!target.contains(algebra.to_vector(algebra.right_strip(algebra.from_vector(row, d), i), lower))) {
                    report.failures.push_back({"coproduct", d, "right strip by generator " + std::to_string(i + 1) +
                                                                   " leaves the span"});
                    break;
                }
            }
        }
        // subalgebra: closed under left multiplication by the root vectors
        for (std::size_t l = 0; l < pbw.size(); ++l) {
            if (!data.vectors[l] || e.dim() == 0) continue;
            const RootVector up = d + pbw[l];
            if (up.height() > cap) continue;
            const Subspace& target = span.at(up);
            for (const auto& row : e.basis()) {
                ++report.checks;
                if (!target.contains(algebra.to_vector(algebra.multiply(*data.vectors[l], algebra.from_vector(row, d)), up))) {
                    report.failures.push_back({"multiplication", d, "product with the root vector of degree " +
                                                                        pbw[l].to_string() + " leaves the span"});
                    break;
                }
            }
        }
    }
    return report;
}

OracleReport commutator_check(const CartanScheme& scheme, const CoidealRecord& record, int cap,
                              const mpq_class& generic_base) {
    const NicholsAlgebra algebra = algebra_for(scheme, record, cap, generic_base);
    const auto& pbw = record.pbw.degrees;
    RootVectorData data = build_root_vectors(algebra, pbw, cap);
    OracleReport report;
    report.failures = data.failures;

    for (std::size_t k = 0; k < pbw.size(); ++k)
        for (std::size_t l = k + 1; l < pbw.size(); ++l) {
            const RootVector target = pbw[k] + pbw[l];
            if (target.height() > cap || !data.vectors[k] || !data.vectors[l]) continue;
            std::vector<RootVector> inside;
            for (const auto& d : algebra.degrees_up_to(target.height()))
                if (fits_inside(d, target)) inside.push_back(d);
            DegreeSpans between = unit_span(algebra, inside);
            for (std::size_t j = k + 1; j < l; ++j) {
                if (!data.vectors[j]) continue;
                between = extend_left(algebra, between, *data.vectors[j], pbw[j], inside);
            }
            Element bracket = algebra.braided_commutator(*data.vectors[k], pbw[k], *data.vectors[l], pbw[l]);
            ++report.checks;
            if (!between.at(target).contains(algebra.to_vector(bracket, target)))
                report.failures.push_back({"commutator", target,
                                           "bracket of roots " + std::to_string(k + 1) + " and " + std::to_string(l + 1) +
                                               " is not in the span of the roots between them"});
        }

    // Δ(x_l) - x_l ⊗ 1 ∈ E(w_{l-1}) ⊗ B: strip every nonempty suffix word
    for (std::size_t l = 0; l < pbw.size(); ++l) {
        if (!data.vectors[l]) continue;
        const DegreeSpans& lower = data.prefix_spans[l];
        for (const auto& d : algebra.degrees_up_to(pbw[l].height())) {
            if (!fits_inside(d, pbw[l])) continue;
            const RootVector rest = pbw[l] - d;
            for (const auto& suffix : algebra.words(d)) {
                Element x = *data.vectors[l];
                for (auto it = suffix.rbegin(); it != suffix.rend(); ++it)
                    x = algebra.right_strip(x, static_cast<std::size_t>(*it));
                ++report.checks;
                const Subspace* s = find_span(lower, rest);
                if (!s || !s->contains(algebra.to_vector(x, rest))) {
                    report.failures.push_back({"coproduct-variant", pbw[l],
                                               "coproduct of root vector " + std::to_string(l + 1) +
                                                   " has a left factor outside the earlier roots"});
                    break;
                }
            }
        }
    }
    return report;
}

SmallEnumeration enumerate_coideals_small(const BraidingMatrix& q, std::size_t cap_dim, int degree_cap) {
    const NicholsAlgebra algebra(specialize(q), degree_cap);
    const std::size_t n = algebra.rank();
    SmallEnumeration result;

    std::vector<RootVector> support;
    std::optional<Int> top;
    for (Int t = 1; t <= degree_cap; ++t) {
        bool any = false;
        for (const auto& d : algebra.degrees_up_to(t)) {
            if (d.height() != t || algebra.dimension(d) == 0) continue;
            any = true;
            support.push_back(d);
        }
        if (!any) {
            top = t - 1;
            break;
        }
    }
    if (!top) throw DomainError("NotFiniteDimensional", "Nichols algebra does not vanish below the degree cap");
    result.total_dimension = 1;
    for (const auto& d : support) result.total_dimension += algebra.dimension(d);
    if (result.total_dimension > cap_dim)
        throw DomainError("DimCapExceeded", "dimension " + std::to_string(result.total_dimension) + " exceeds " +
                                                std::to_string(cap_dim));

    DegreeSpans state = unit_span(algebra, {});
    std::set<std::map<RootVector, std::size_t>> distinct;

    std::function<void(std::size_t)> search = [&](std::size_t idx) {
        if (idx == support.size()) {
            std::map<RootVector, std::size_t> dims;
            for (const auto& d : support)
                if (auto s = find_span(state, d); s && s->dim()) dims[d] = s->dim();
            ++result.coideals;
            distinct.insert(dims);
            result.dimension_vectors.push_back(std::move(dims));
            return;
        }
        const RootVector& d = support[idx];
        const std::size_t width = algebra.words(d).size();

        Subspace products(algebra.field(), width);
        for (const auto& [d1, s1] : state) {
            if (d1.is_zero() || s1.dim() == 0) continue;
            const RootVector d2 = d - d1;
            if (!nonnegative(d2) || d2.is_zero()) continue;
            const Subspace* s2 = find_span(state, d2);
            if (!s2) continue;
            for (const auto& a : s1.basis())
                for (const auto& b : s2->basis())
                    products.insert(algebra.to_vector(
                        algebra.multiply(algebra.from_vector(a, d1), algebra.from_vector(b, d2)), d));
        }
        Subspace allowed(algebra.field(), width);
        for (const auto& c : coideal_candidates(algebra, state, d)) allowed.insert(algebra.to_vector(c, d));
        if (!allowed.contains(products)) return;

        std::vector<Vector> free;
        Subspace grow = products;
        for (const auto& row : allowed.basis())
            if (grow.insert(row)) free.push_back(row);
        if (free.size() > 1) result.exhaustive = false;

        const std::size_t choices = std::size_t{1} << free.size();
        for (std::size_t mask = 0; mask < choices; ++mask) {
            Subspace chosen = products;
            for (std::size_t k = 0; k < free.size(); ++k)
                if (mask & (std::size_t{1} << k)) chosen.insert(free[k]);
            state.insert_or_assign(d, std::move(chosen));
            search(idx + 1);
        }
        state.erase(d);
    };
    (void)n;
    search(0);
    result.distinct_hilbert = distinct.size();
    return result;
}

} // namespace weyl::oracle
