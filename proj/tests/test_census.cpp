#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace weyl;

namespace {

Polynomial poly(std::initializer_list<std::pair<RootVector, Int>> terms) {
    Polynomial p;
    for (const auto& [d, c] : terms) p[d] = c;
    return p;
}

} // namespace

TEST_CASE("pbw_degrees") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto p = pbw_degrees(a2, 0, {0, 1, 0});
    CHECK(p.degrees == std::vector<RootVector>{{1, 0}, {1, 1}, {0, 1}});
    REQUIRE(p.self_braidings.size() == 3);
    CHECK(p.self_braidings[1] == ScalarValue::parse("q^2"));
    CHECK(pbw_degrees(a2, 0, {1}).degrees == std::vector<RootVector>{{0, 1}});
    CHECK_THROWS_WITH_AS(pbw_degrees(a2, 0, {0, 0}), doctest::Contains("NotReduced"), DomainError);

    const auto s = testing::three_objects();
    const auto w0 = longest_elements(s, 0).front();
    const auto pw = pbw_degrees(s, 0, w0.word);
    CHECK(pw.degrees.size() == 9);
    CHECK(pw.self_braidings.empty());
    for (const auto& b : pw.degrees) CHECK(real_roots(s, 0).positive().count(b) == 1);
}

TEST_CASE("pbw degrees of different reduced words give the same set") {
    const auto s = testing::data_scheme("b2.json");
    const auto words = testing::all_reduced_words(s, 0, 6);
    for (const auto& [key, list] : words) {
        std::set<RootVector> first;
        for (const auto& w : list) {
            const auto p = pbw_degrees(s, 0, w);
            std::set<RootVector> set(p.degrees.begin(), p.degrees.end());
            if (first.empty()) first = set;
            CHECK(set == first);
            const auto l = lambda_plus(s, 0, w);
            CHECK(set == std::set<RootVector>(l.roots.begin(), l.roots.end()));
        }
    }
}

TEST_CASE("is_admissible") {
    const auto a2 = testing::data_scheme("a2.json");
    CHECK(is_admissible(a2, 0, {0, 1, 0}));
    CHECK_FALSE(is_admissible(a2, 0, {0, 0}));
    CHECK_FALSE(is_admissible(a2, 0, {0, 1, 0, 1}));
    CHECK(evaluate_word(a2, 0, {0, 1, 0, 1}).betas[3] == RootVector{-1, 0});
    CHECK_THROWS_AS(is_admissible(a2, 0, {3}), DomainError);
}

TEST_CASE("admissible equals reduced with a root system") {
    for (const char* name : {"a2.json", "b2.json", "g2.json", "super_zeta3.json"}) {
        const auto s = testing::data_scheme(name);
        std::mt19937_64 rng(5);
        for (int t = 0; t < 300; ++t) {
            const std::size_t x = t % s.object_count();
            const Word w = testing::random_word(rng, s.rank(), 9);
            CHECK(is_admissible(s, x, w) == is_reduced(s, x, w));
        }
    }
}

TEST_CASE("census sizes") {
    CHECK(census(testing::data_scheme("a2.json"), 0).size() == 6);
    CHECK(census(testing::data_scheme("b2.json"), 0).size() == 8);
    CHECK(census(testing::data_scheme("g2.json"), 0).size() == 12);
    CHECK(census(testing::data_scheme("a3.json"), 0).size() == 24);
    CHECK(census(testing::data_scheme("b3.json"), 0).size() == 48);
    CHECK_THROWS_WITH_AS(census(testing::data_scheme("affine_a1.json"), 0, 10), doctest::Contains("NotFinite"),
                         DomainError);
}

TEST_CASE("census records") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto recs = census(a2, 0);
    const auto& top = recs.back();
    CHECK(top.morphism.word == Word{0, 1, 0});
    REQUIRE(top.hilbert);
    CHECK(top.hilbert->factors.size() == 3);
    for (const auto& f : top.hilbert->factors) CHECK_FALSE(f.height.has_value());
    std::set<RootVector> degs;
    for (const auto& f : top.hilbert->factors) degs.insert(f.degree);
    CHECK(degs == std::set<RootVector>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(top.contains_generator == std::vector<bool>{true, true});
    CHECK(top.includes.size() == 6);
    CHECK(recs[0].includes == std::vector<std::size_t>{0});
    for (std::size_t k = 1; k < recs.size(); ++k) CHECK(recs[k - 1].morphism.length() <= recs[k].morphism.length());

    std::set<Polynomial> series;
    for (const auto& r : recs) series.insert(r.hilbert->truncate(2, 8));
    CHECK(series.size() == recs.size());

    const auto s = testing::three_objects();
    const auto plain = census(s, 0);
    CHECK(plain.size() == 18);
    for (const auto& r : plain) CHECK_FALSE(r.hilbert.has_value());
}

TEST_CASE("hilbert_series") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto recs = census(a2, 0);
    CHECK(recs[0].hilbert->truncate(2, 8) == poly({{{0, 0}, 1}}));

    const auto spec = specialize_total_degree(recs.back().hilbert->truncate(2, 6), 6);
    CHECK(spec == std::vector<Int>{1, 2, 4, 6, 9, 12, 16});

    // q_lambda = -1 gives the factor 1 + t^lambda
    CHECK(rank_one_height(ScalarValue::parse("-1")) == 2);
    CHECK(rank_one_height(ScalarValue::parse("z 1/3")) == 3);
    CHECK_FALSE(rank_one_height(ScalarValue::one()).has_value());
    CHECK_FALSE(rank_one_height(ScalarValue::parse("q^2")).has_value());
    CHECK_FALSE(rank_one_height(ScalarValue::parse("-1 * q")).has_value());
    HilbertSeries h{{{RootVector{1, 1}, 2}}};
    CHECK(h.truncate(2, 5) == poly({{{0, 0}, 1}, {{1, 1}, 1}}));

    const auto m1 = testing::data_scheme("a2_minus_one.json");
    const auto top = census(m1, 0).back();
    CHECK(specialize_total_degree(top.hilbert->truncate(2, 4), 4) == std::vector<Int>{1, 2, 2, 2, 1});

    CHECK_THROWS_WITH_AS(hilbert_series(testing::three_objects(), 0, {}), doctest::Contains("ModeUnsupported"),
                         DomainError);
}

TEST_CASE("hilbert truncation is independent of factor order") {
    HilbertSeries a{{{RootVector{1, 0}, std::nullopt}, {RootVector{1, 1}, 3}, {RootVector{0, 1}, 2}}};
    HilbertSeries b{{{RootVector{0, 1}, 2}, {RootVector{1, 0}, std::nullopt}, {RootVector{1, 1}, 3}}};
    CHECK(a.truncate(2, 7) == b.truncate(2, 7));
    for (const auto& [d, c] : a.truncate(2, 7)) CHECK(c > 0);
}

TEST_CASE("inclusion_check") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto recs = census(a2, 0);
    auto by_word = [&](const Word& w) -> const CoidealRecord& {
        for (const auto& r : recs)
            if (r.morphism.word == w) return r;
        throw std::runtime_error("missing record");
    };
    for (const auto& r : recs) {
        CHECK(inclusion_check(recs[0], r));
        CHECK(inclusion_check(r, recs.back()));
    }
    CHECK(inclusion_check(by_word({0}), by_word({0, 1})));
    CHECK_FALSE(inclusion_check(by_word({0}), by_word({1, 0})));
}

TEST_CASE("inclusion implies coefficientwise Hilbert series domination") {
    const auto s = testing::data_scheme("b2.json");
    const auto recs = census(s, 0);
    for (const auto& r1 : recs)
        for (const auto& r2 : recs) {
            if (!inclusion_check(r1, r2)) continue;
            const auto h1 = r1.hilbert->truncate(2, 8);
            const auto h2 = r2.hilbert->truncate(2, 8);
            for (const auto& [d, c] : h1) {
                auto it = h2.find(d);
                REQUIRE(it != h2.end());
                CHECK(it->second >= c);
            }
        }
}

TEST_CASE("freeness_check") {
    const auto a2 = testing::data_scheme("a2.json");
    const auto recs = census(a2, 0);
    for (const auto& r1 : recs)
        for (const auto& r2 : recs)
            if (inclusion_check(r1, r2)) CHECK(freeness_check(a2, r1, r2));
    CHECK_THROWS_WITH_AS(freeness_check(a2, recs[1], recs[2]), doctest::Contains("NotComparable"), DomainError);
}

TEST_CASE("kharchenko_count") {
    const auto a3 = kharchenko_count(testing::data_scheme("a3.json"), 0);
    CHECK(a3.count == 24);
    CHECK(a3.standard);
    CHECK(a3.weyl_order == 24);
    CHECK(a3.type == "A3");
    const auto b2 = kharchenko_count(testing::data_scheme("b2.json"), 0);
    CHECK(b2.count == 8);
    CHECK(b2.weyl_order == 8);
    const auto g2 = kharchenko_count(testing::data_scheme("g2.json"), 0);
    CHECK(g2.weyl_order == 12);
    const auto b3 = kharchenko_count(testing::data_scheme("b3.json"), 0);
    CHECK(b3.weyl_order == 48);
    CHECK(b3.count == 48);

    const auto odd = kharchenko_count(testing::three_objects(), 0);
    CHECK(odd.count == 18);
    CHECK_FALSE(odd.standard);
    CHECK_FALSE(odd.weyl_order.has_value());

    const auto super = kharchenko_count(testing::data_scheme("super_a2.json"), 0);
    CHECK(super.count == 6);

    CHECK(weyl_group_order(validate_gcm({{2, 0}, {0, 2}}))->first == 4);
    CHECK(weyl_group_order(validate_gcm({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}))->first == 192);
    CHECK_FALSE(weyl_group_order(validate_gcm({{2, -2}, {-2, 2}})).has_value());
}

TEST_CASE("reflection consistency of the census") {
    for (const char* name : {"a2.json", "b2.json", "super_a2.json", "super_zeta3.json", "a2_minus_one.json"}) {
        const auto s = testing::data_scheme(name);
        for (std::size_t x = 0; x < s.object_count(); ++x) CHECK(check_reflection_consistency(s, x).empty());
    }
}
