#include "weyl/cartan_scheme.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace weyl {

namespace {

std::string label(std::size_t i) { return std::to_string(i + 1); }

} // namespace

BraidingMatrix::BraidingMatrix(std::vector<std::vector<ScalarValue>> rows) : rank_(rows.size()) {
    if (rank_ == 0) throw InputError("BraidingMatrix", "rank must be at least 1");
    for (auto& row : rows) {
        if (row.size() != rank_) throw InputError("BraidingMatrix", "braiding matrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ScalarValue BraidingMatrix::chi(const RootVector& a, const RootVector& b) const {
    if (a.rank() != rank_ || b.rank() != rank_) throw DomainError("RankMismatch", "chi argument rank");
    ScalarValue r;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j) {
            if (b[j] == 0) continue;
            r = r * (*this)(i, j).pow(checked_mul(a[i], b[j]));
        }
    }
    return r;
}

std::vector<std::vector<ScalarValue>> BraidingMatrix::rows() const {
    std::vector<std::vector<ScalarValue>> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) out[i].assign(data_.begin() + i * rank_, data_.begin() + (i + 1) * rank_);
    return out;
}

TwistKey twist_key(const BraidingMatrix& q) {
    TwistKey key;
    for (std::size_t i = 0; i < q.rank(); ++i) {
        key.diagonal.push_back(q(i, i));
        for (std::size_t j = i + 1; j < q.rank(); ++j) key.products.push_back(q(i, j) * q(j, i));
    }
    return key;
}

CartanScheme::CartanScheme(std::size_t rank, std::vector<SchemeObject> objects,
                           std::vector<std::vector<std::size_t>> object_maps)
    : rank_(rank), objects_(std::move(objects)), maps_(std::move(object_maps)) {
    if (objects_.empty()) throw InputError("CartanScheme", "a Cartan scheme needs at least one object");
    if (maps_.size() != rank_) throw InputError("CartanScheme", "need one object map per index");
    for (std::size_t x = 0; x < objects_.size(); ++x) {
        objects_[x].id = x;
        if (objects_[x].cartan.rank() != rank_)
            throw InputError("CartanScheme", "object " + objects_[x].name + " has Cartan matrix of wrong rank");
    }
    for (const auto& table : maps_) {
        if (table.size() != objects_.size()) throw InputError("CartanScheme", "object map is not total");
        for (std::size_t y : table)
            if (y >= objects_.size()) throw InputError("CartanScheme", "object map leaves the object set");
    }
    reflections_.resize(objects_.size());
    for (std::size_t x = 0; x < objects_.size(); ++x)
        for (std::size_t i = 0; i < rank_; ++i) reflections_[x].push_back(reflection_matrix(objects_[x].cartan, i));
}

bool CartanScheme::has_braiding() const noexcept {
    for (const auto& o : objects_)
        if (!o.braiding) return false;
    return true;
}

std::optional<std::size_t> CartanScheme::find(const std::string& name) const {
    for (const auto& o : objects_)
        if (o.name == name) return o.id;
    return std::nullopt;
}

std::size_t CartanScheme::resolve(const std::string& text) const {
    if (auto id = find(text)) return *id;
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used == text.size() && v >= 1 && static_cast<std::size_t>(v) <= objects_.size())
            return static_cast<std::size_t>(v - 1);
    } catch (const std::exception&) {
    }
    throw InputError("UnknownObject", "no object named '" + text + "'");
}

std::vector<std::size_t> CartanScheme::component(std::size_t x) const {
    std::vector<bool> seen(objects_.size(), false);
    std::vector<std::size_t> stack{x}, out;
    seen.at(x) = true;
    while (!stack.empty()) {
        std::size_t y = stack.back();
        stack.pop_back();
        out.push_back(y);
        for (std::size_t i = 0; i < rank_; ++i) {
            std::size_t z = maps_[i][y];
            if (!seen[z]) {
                seen[z] = true;
                stack.push_back(z);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool CartanScheme::is_connected() const { return component(0).size() == objects_.size(); }

BoundExceeded::BoundExceeded(std::size_t i_, std::size_t j_)
    : DomainError("BoundExceeded", "no Cartan entry a_" + label(i_) + label(j_) + " within the exponent bound"),
      i(i_), j(j_) {}

NotIFinite::NotIFinite(const std::string& object_, std::size_t i_, std::size_t j_)
    : DomainError("NotIFinite", "object " + object_ + " is not " + label(i_) + "-finite (entry a_" + label(i_) +
                                    label(j_) + " exceeds the exponent bound)"),
      object(object_), i(i_), j(j_) {}

AxiomC1Violation::AxiomC1Violation(std::size_t i, const std::string& object)
    : DomainError("AxiomC1Violation", "r_" + label(i) + " is not an involution at " + object) {}

AxiomC2Violation::AxiomC2Violation(std::size_t i, std::size_t j, const std::string& object)
    : DomainError("AxiomC2Violation",
                  "c_" + label(i) + label(j) + " differs between " + object + " and its r_" + label(i) + "-image") {}

std::optional<Int> diagonal_cartan_entry(const BraidingMatrix& q, std::size_t i, std::size_t j, Int bound) {
    if (i >= q.rank() || j >= q.rank()) throw DomainError("IndexOutOfRange", "Cartan entry index");
    if (i == j) return 2;
    const ScalarValue& qii = q(i, i);
    const ScalarValue mixed = q(i, j) * q(j, i);
    ScalarValue power;  // q_ii^m
    for (Int m = 0; m <= bound; ++m) {
        if (quantum_integer_vanishes(qii, m + 1) || (power * mixed).is_one()) return -m;
        power = power * qii;
    }
    return std::nullopt;
}

std::vector<Int> diagonal_cartan_row(const BraidingMatrix& q, std::size_t i, Int bound) {
    std::vector<Int> row(q.rank());
    for (std::size_t j = 0; j < q.rank(); ++j) {
        auto a = diagonal_cartan_entry(q, i, j, bound);
        if (!a) throw BoundExceeded(i, j);
        row[j] = *a;
    }
    return row;
}

BraidingMatrix reflect_braiding(const BraidingMatrix& q, std::size_t i, const std::vector<Int>& a_row) {
    const std::size_t n = q.rank();
    if (i >= n) throw DomainError("IndexOutOfRange", "reflection index");
    if (a_row.size() != n || a_row[i] != 2)
        throw DomainError("UndefinedEntry", "Cartan row " + label(i) + " is incomplete");
    std::vector<std::vector<ScalarValue>> rows(n, std::vector<ScalarValue>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            rows[j][k] = q(j, k) * q(i, k).pow(-a_row[j]) * q(j, i).pow(-a_row[k]) *
                         q(i, i).pow(checked_mul(a_row[j], a_row[k]));
    return BraidingMatrix(std::move(rows));
}

CartanScheme build_from_braiding(const BraidingMatrix& q, std::size_t max_objects, Int exponent_bound) {
    const std::size_t n = q.rank();
    std::vector<SchemeObject> objects;
    std::map<TwistKey, std::size_t> index;
    std::vector<std::vector<std::size_t>> maps(n);
    std::deque<std::size_t> queue;

    auto add = [&](const BraidingMatrix& b) -> std::size_t {
        TwistKey key = twist_key(b);
        if (auto it = index.find(key); it != index.end()) return it->second;
        if (objects.size() >= max_objects)
            throw DomainError("TooManyObjects", "more than " + std::to_string(max_objects) + " objects");
        SchemeObject obj;
        obj.id = objects.size();
        obj.name = "X" + std::to_string(obj.id + 1);
        std::vector<std::vector<Int>> rows;
        for (std::size_t i = 0; i < n; ++i) {
            try {
                rows.push_back(diagonal_cartan_row(b, i, exponent_bound));
            } catch (const BoundExceeded& e) {
                throw NotIFinite(obj.name, e.i, e.j);
            }
        }
        obj.cartan = validate_gcm(rows);
        obj.braiding = b;
        obj.key = key;
        index.emplace(key, obj.id);
        objects.push_back(std::move(obj));
        for (auto& table : maps) table.push_back(0);
        queue.push_back(objects.size() - 1);
        return objects.size() - 1;
    };

    add(q);
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            BraidingMatrix b = *objects[x].braiding;
            auto reflected = reflect_braiding(b, i, objects[x].cartan.row(i));
            std::size_t y = add(reflected);
            maps[i][x] = y;
        }
    }
    CartanScheme scheme(n, std::move(objects), std::move(maps));
    auto report = check_axioms(scheme, exponent_bound);
    if (!report.empty())
        throw VerificationError("AxiomViolation", "generated scheme fails " + report.front().axiom + ": " +
                                                      report.front().message);
    return scheme;
}

CartanScheme build_from_matrices(const std::vector<ObjectSpec>& specs, const std::vector<std::vector<std::size_t>>& maps) {
    if (specs.empty()) throw InputError("CartanScheme", "no objects");
    const std::size_t n = specs.front().cartan.size();
    std::vector<SchemeObject> objects;
    for (std::size_t x = 0; x < specs.size(); ++x) {
        SchemeObject o;
        o.id = x;
        o.name = specs[x].name.empty() ? "X" + std::to_string(x + 1) : specs[x].name;
        o.cartan = validate_gcm(specs[x].cartan);
        objects.push_back(std::move(o));
    }
    CartanScheme scheme(n, std::move(objects), maps);
    for (const auto& v : check_axioms(scheme)) {
        if (v.axiom == "C1") throw AxiomC1Violation(v.i, scheme.object(v.object).name);
        if (v.axiom == "C2") throw AxiomC2Violation(v.i, v.j, scheme.object(v.object).name);
    }
    return scheme;
}

AxiomReport check_axioms(const CartanScheme& scheme, Int exponent_bound) {
    AxiomReport report;
    const std::size_t n = scheme.rank();
    for (std::size_t x = 0; x < scheme.object_count(); ++x) {
        const auto& name = scheme.object(x).name;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t y = scheme.r(i, x);
            if (scheme.r(i, y) != x)
                report.push_back({"C1", i, i, x, "r_" + label(i) + "(r_" + label(i) + "(" + name + ")) != " + name});
            for (std::size_t j = 0; j < n; ++j)
                if (scheme.cartan(x)(i, j) != scheme.cartan(y)(i, j))
                    report.push_back({"C2", i, j, x,
                                      "c_" + label(i) + label(j) + " at " + name + " is " +
                                          std::to_string(scheme.cartan(x)(i, j)) + " but " +
                                          std::to_string(scheme.cartan(y)(i, j)) + " at " + scheme.object(y).name});
        }
        if (const auto& b = scheme.object(x).braiding) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    auto a = diagonal_cartan_entry(*b, i, j, exponent_bound);
                    if (!a || *a != scheme.cartan(x)(i, j))
                        report.push_back({"braiding", i, j, x,
                                          "stored c_" + label(i) + label(j) + " at " + name +
                                              " is not reproduced by its braiding"});
                }
        }
    }
    return report;
}

} // namespace weyl
