#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace weyl;
using namespace weyl::oracle;
using testing::braiding;

TEST_CASE("cyclotomic fields") {
    auto f = std::make_shared<const CyclotomicField>(3);
    CHECK(f->degree() == 2);
    const auto z = FieldElement::zeta_power(f, 1);
    CHECK((z * z * z).is_one());
    CHECK((FieldElement::rational(f, 1) + z + z * z).is_zero());
    CHECK((z * z.inverse()).is_one());
    CHECK(z.pow(-1) == z * z);

    auto f12 = std::make_shared<const CyclotomicField>(12);
    CHECK(f12->degree() == 4);
    const auto w = FieldElement::zeta_power(f12, 5);
    CHECK(w.pow(12).is_one());
    CHECK_FALSE(w.pow(6).is_one());
    CHECK((w * w.inverse()).is_one());
    CHECK_THROWS_AS(FieldElement::zero(f12).inverse(), DomainError);
}

TEST_CASE("specialize") {
    const auto q = specialize(braiding({{"q^2", "z 1/3"}, {"-1", "z 1/4 * q^-1"}}));
    CHECK(q.field->order() == 12);
    CHECK(q(0, 0) == FieldElement::rational(q.field, 4));
    CHECK(q(1, 0) == FieldElement::rational(q.field, -1));
    CHECK(q(0, 1).pow(3).is_one());
    CHECK(q(1, 1) * FieldElement::rational(q.field, 2) == FieldElement::zeta_power(q.field, 3));
    CHECK_THROWS_AS(specialize(braiding({{"q"}}), 1), DomainError);
}

TEST_CASE("linear algebra") {
    auto f = std::make_shared<const CyclotomicField>(1);
    auto r = [&](int v) { return FieldElement::rational(f, v); };
    Subspace s(f, 3);
    CHECK(s.insert({r(1), r(2), r(3)}));
    CHECK(s.insert({r(0), r(1), r(1)}));
    CHECK_FALSE(s.insert({r(1), r(3), r(4)}));
    CHECK(s.dim() == 2);
    CHECK(s.contains({r(2), r(5), r(7)}));
    CHECK_FALSE(s.contains({r(0), r(0), r(1)}));
    const auto k = kernel(f, {{r(1), r(0)}, {r(0), r(1)}, {r(1), r(1)}});
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == r(-1));
    CHECK(k[0][1] == r(-1));
    CHECK(k[0][2] == r(1));
    CHECK(rank(f, 2, {{r(1), r(1)}, {r(2), r(2)}}) == 1);
}

TEST_CASE("shuffle product and strips") {
    NicholsAlgebra b(specialize(braiding({{"q^2", "q^-1"}, {"q^-1", "q^2"}})), 6);
    const auto x1 = b.generator(0), x2 = b.generator(1);
    // x1 x2 = [12] + q12 [21] in the shuffle realisation
    const auto p = b.multiply(x1, x2);
    CHECK(p.size() == 2);
    CHECK(p.at(Letters{0, 1}) == b.scalar(1));
    CHECK(p.at(Letters{1, 0}) == b.braiding()(0, 1));
    CHECK(b.right_strip(p, 1) == x1);
    CHECK(b.left_strip(p, 0) == x2);
    CHECK(b.multiply(b.one(), x1) == x1);
    // associativity
    const auto a = b.multiply(b.multiply(x1, x2), x1);
    const auto c = b.multiply(x1, b.multiply(x2, x1));
    CHECK(a == c);
    CHECK_THROWS_AS(b.component({4, 3}), DegreeCapExceeded);
}

TEST_CASE("symmetrizer_dim") {
    const auto a2 = braiding({{"q^2", "q^-1"}, {"q^-1", "q^2"}});
    for (long base : {2L, 3L}) {
        NicholsAlgebra b(specialize(a2, base), 6);
        std::vector<std::size_t> total(7, 0);
        total[0] = b.dimension(RootVector(2));
        for (const auto& d : b.degrees_up_to(6)) total[static_cast<std::size_t>(d.height())] += b.dimension(d);
        CHECK(total == std::vector<std::size_t>{1, 2, 4, 6, 9, 12, 16});
    }
    CHECK(symmetrizer_dim(a2, {1, 0}) == 1);
    CHECK(symmetrizer_dim(a2, {1, 1}) == 2);
    CHECK(symmetrizer_dim(a2, {2, 1}) == 2);
    CHECK(symmetrizer_dim(a2, {2, 2}) == 3);
    CHECK(symmetrizer_dim(braiding({{"-1"}}), {2}) == 0);
    CHECK(symmetrizer_dim(braiding({{"z 1/3"}}), {2}) == 1);
    CHECK(symmetrizer_dim(braiding({{"z 1/3"}}), {3}) == 0);
    CHECK_THROWS_AS(symmetrizer_dim(a2, {5, 5}, 8), DegreeCapExceeded);
}

TEST_CASE("oracle dimensions match the census product formula") {
    for (const char* name : {"a2.json", "b2.json", "g2.json", "a2_minus_one.json", "super_a2.json", "super_zeta3.json"}) {
        const auto s = testing::data_scheme(name);
        for (std::size_t x = 0; x < s.object_count(); ++x) {
            const auto top = census(s, x).back();
            const auto h = top.hilbert->truncate(2, 6);
            NicholsAlgebra b(specialize(*s.object(x).braiding), 6);
            for (const auto& d : b.degrees_up_to(6)) {
                auto it = h.find(d);
                CHECK(b.dimension(d) == static_cast<std::size_t>(it == h.end() ? 0 : it->second));
            }
        }
    }
}

TEST_CASE("adjoint_power_nonzero") {
    NicholsAlgebra a2(specialize(braiding({{"q^2", "q^-1"}, {"q^-1", "q^2"}})), 6);
    CHECK(adjoint_power_nonzero(a2, 0, 1, 0));
    CHECK(adjoint_power_nonzero(a2, 0, 1, 1));
    CHECK_FALSE(adjoint_power_nonzero(a2, 0, 1, 2));
    CHECK(oracle_cartan_entry(a2, 0, 1) == -1);

    NicholsAlgebra dec(specialize(braiding({{"q^2", "q^3"}, {"q^-3", "q^2"}})), 6);
    CHECK_FALSE(adjoint_power_nonzero(dec, 0, 1, 1));
    CHECK(oracle_cartan_entry(dec, 0, 1) == 0);

    NicholsAlgebra g2(specialize(braiding({{"q^6", "q^-3"}, {"q^-3", "q^2"}})), 6);
    CHECK(oracle_cartan_entry(g2, 1, 0) == -3);
    CHECK(oracle_cartan_entry(g2, 0, 1) == -1);

    NicholsAlgebra far(specialize(braiding({{"q^2", "q^-20"}, {"1", "q^2"}})), 5);
    CHECK_FALSE(oracle_cartan_entry(far, 0, 1).has_value());
    CHECK_THROWS_AS(adjoint_power_nonzero(far, 0, 1, 5), DegreeCapExceeded);
}

TEST_CASE("oracle Cartan entries agree with the scalar criterion") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> order(2, 6), expo(-3, 3);
    const int cap = 6;
    int compared = 0;
    for (int t = 0; t < 40; ++t) {
        std::vector<std::vector<ScalarValue>> rows(2, std::vector<ScalarValue>(2));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const int n = order(rng);
                std::uniform_int_distribution<int> k(0, n - 1);
                rows[i][j] = t % 2 ? ScalarValue::root_of_unity(k(rng), n) : ScalarValue::generic_power(expo(rng));
            }
        const BraidingMatrix q(rows);
        NicholsAlgebra b(specialize(q), cap);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto formula = diagonal_cartan_entry(q, i, 1 - i, cap - 2);
            const auto oracle = oracle_cartan_entry(b, i, 1 - i);
            CHECK(formula == oracle);
            ++compared;
        }
    }
    CHECK(compared == 80);
}

TEST_CASE("nondegeneracy of the left derivations") {
    NicholsAlgebra a2(specialize(braiding({{"q^2", "q^-1"}, {"q^-1", "q^2"}})), 6);
    CHECK(check_nondegenerate(a2, 6));
    NicholsAlgebra s(specialize(braiding({{"-1", "z 1/3"}, {"1", "-1"}})), 6);
    CHECK(check_nondegenerate(s, 6));
}

TEST_CASE("verify_coideal") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto recs = census(a2, 0);
    for (const auto& r : recs) {
        const auto report = verify_coideal(a2, r, 5);
        CHECK(report.passed());
    }
    const auto id = verify_coideal(a2, recs[0], 5);
    for (const auto& [d, n] : id.dimensions) CHECK(n == 0);

    // s1 s2: graded dims of 1/((1 - t1)(1 - t1 t2))
    const auto r12 = verify_coideal(a2, recs[3], 5);
    CHECK(recs[3].morphism.word == Word{0, 1});
    CHECK(r12.dimensions.at({2, 1}) == 1);
    CHECK(r12.dimensions.at({2, 0}) == 1);
    CHECK(r12.dimensions.at({0, 1}) == 0);
    CHECK(r12.dimensions.at({1, 2}) == 0);
    CHECK(r12.dimensions.at({3, 2}) == 1);

    // full record: every degree of the algebra
    NicholsAlgebra b(specialize(*a2.object(0).braiding), 5);
    for (const auto& [d, n] : verify_coideal(a2, recs.back(), 5).dimensions) CHECK(n == b.dimension(d));

    // a wrong Hilbert series is caught
    auto tampered = recs[3];
    tampered.hilbert->factors.pop_back();
    const auto bad = verify_coideal(a2, tampered, 4);
    CHECK_FALSE(bad.passed());
    CHECK(bad.failures.front().which == "hilbert");

    CHECK_THROWS_WITH_AS(verify_coideal(testing::three_objects(), census(testing::three_objects(), 0)[0], 3),
                         doctest::Contains("ModeUnsupported"), DomainError);
}

TEST_CASE("verify_coideal at roots of unity") {
    for (const char* name : {"super_zeta3.json", "a2_minus_one.json", "rank1_zeta3.json"}) {
        const auto s = testing::data_scheme(name);
        for (std::size_t x = 0; x < s.object_count(); ++x)
            for (const auto& r : census(s, x)) CHECK(verify_coideal(s, r, 6).passed());
    }
}

TEST_CASE("a PBW sequence without a simple root has no root vector") {
    const auto a2 = testing::data_scheme("a2.json");
    auto rec = census(a2, 0)[1];
    rec.pbw.degrees = {{1, 1}};
    rec.hilbert = HilbertSeries{{{RootVector{1, 1}, std::nullopt}}};
    const auto report = verify_coideal(a2, rec, 4);
    CHECK_FALSE(report.passed());
    CHECK(report.failures.front().which == "root-vector");
}

TEST_CASE("commutator_check") {
    for (const char* name : {"a2.json", "b2.json"}) {
        const auto s = testing::data_scheme(name);
        const auto report = commutator_check(s, census(s, 0).back(), 6);
        CHECK(report.passed());
        CHECK(report.checks > 0);
    }
    // adjacent roots commute up to the braiding scalar
    const auto a2 = testing::data_scheme("a2.json");
    NicholsAlgebra b(specialize(*a2.object(0).braiding), 4);
    const auto data = build_root_vectors(b, {{1, 0}, {1, 1}, {0, 1}}, 4);
    CHECK(data.failures.empty());
    REQUIRE(data.vectors[0]);
    REQUIRE(data.vectors[1]);
    CHECK(is_zero(b.braided_commutator(*data.vectors[0], {1, 0}, *data.vectors[1], {1, 1})));
    CHECK_FALSE(is_zero(b.braided_commutator(*data.vectors[0], {1, 0}, *data.vectors[2], {0, 1})));
}

TEST_CASE("enumerate_coideals_small") {
    for (const char* q : {"-1", "z 1/3", "z 1/4"}) {
        const auto e = enumerate_coideals_small(braiding({{q}}), 64);
        CHECK(e.coideals == 2);
        CHECK(e.distinct_hilbert == 2);
        CHECK(e.exhaustive);
    }
    const auto a1a1 = enumerate_coideals_small(braiding({{"-1", "1"}, {"1", "-1"}}), 64);
    CHECK(a1a1.total_dimension == 4);
    CHECK(a1a1.coideals == 4);

    const auto s = testing::data_scheme("super_zeta3.json");
    const auto e = enumerate_coideals_small(*s.object(0).braiding, 64);
    CHECK(e.total_dimension == 12);
    CHECK(e.coideals == enumerate_morphisms_to(s, 0).size());

    CHECK_THROWS_WITH_AS(enumerate_coideals_small(braiding({{"-1", "1"}, {"1", "-1"}}), 3),
                         doctest::Contains("DimCapExceeded"), DomainError);
    CHECK_THROWS_WITH_AS(enumerate_coideals_small(braiding({{"q^2"}}), 64, 5),
                         doctest::Contains("NotFiniteDimensional"), DomainError);
}
