#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyl/io.hpp"

namespace testing {

using namespace weyl;

inline BraidingMatrix braiding(const std::vector<std::vector<std::string>>& literals) {
    std::vector<std::vector<ScalarValue>> rows;
    for (const auto& r : literals) {
        rows.emplace_back();
        for (const auto& s : r) rows.back().push_back(ScalarValue::parse(s));
    }
    return BraidingMatrix(std::move(rows));
}

inline std::string data_path(const std::string& name) { return std::string(WEYL_DATA_DIR) + "/" + name; }

inline CartanScheme data_scheme(const std::string& name) { return io::load_scheme(data_path(name)); }

inline CartanScheme three_objects() {
    return build_from_matrices({{"X1", {{2, -1}, {-3, 2}}}, {"X2", {{2, -1}, {-4, 2}}}, {"X3", {{2, -1}, {-4, 2}}}},
                               {{1, 0, 2}, {0, 2, 1}});
}

inline CartanScheme single_object(const std::vector<std::vector<Int>>& cartan) {
    std::vector<std::vector<std::size_t>> maps(cartan.size(), std::vector<std::size_t>{0});
    return build_from_matrices({{"X", cartan}}, maps);
}

/// Parses "1^k2^l" style abbreviations such as "12^3", "1^22^5", "12^{-1}".
inline RootVector parse_power_notation(std::string text) {
    RootVector v(2);
    int sign = 1;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        sign = text[0] == '-' ? -1 : 1;
        text.erase(0, 1);
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t gen = static_cast<std::size_t>(text[pos] - '1');
        ++pos;
        Int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::string digits;
            if (text[pos] == '{') {
                const auto close = text.find('}', pos);
                digits = text.substr(pos + 1, close - pos - 1);
                pos = close + 1;
            } else {
                digits = text.substr(pos, 1);
                ++pos;
            }
            exp = std::stoll(digits);
        }
        v[gen] += exp;
    }
    return v * sign;
}

/// Every element of Homto(X) found by brute force over words, keyed by
/// (source, matrix), together with all of its reduced words.
using MorphismKey = std::pair<std::size_t, LatticeMap>;

inline std::map<MorphismKey, std::vector<Word>> all_reduced_words(const CartanScheme& scheme, std::size_t x,
                                                                  std::size_t max_length) {
    std::map<MorphismKey, std::vector<Word>> out;
    std::map<MorphismKey, std::size_t> length;
    std::vector<Word> layer{{}};
    for (std::size_t l = 0; l <= max_length && !layer.empty(); ++l) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            const WordData d = evaluate_word(scheme, x, w);
            MorphismKey key{d.source, d.matrix};
            auto it = length.find(key);
            if (it != length.end() && it->second < l) continue;
            length.emplace(key, l);
            out[key].push_back(w);
            for (std::size_t i = 0; i < scheme.rank(); ++i) {
                Word v = w;
                v.push_back(i);
                next.push_back(std::move(v));
            }
        }
        layer = std::move(next);
    }
    return out;
}

/// Length of each element of Homto(X), from the enumeration.
inline std::map<MorphismKey, std::size_t> length_table(const CartanScheme& scheme, std::size_t x) {
    std::map<MorphismKey, std::size_t> out;
    for (const auto& m : enumerate_morphisms_to(scheme, x)) out.emplace(MorphismKey{m.source, m.matrix}, m.length());
    return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> gen(0, rank - 1);
    Word w(len(rng));
    for (auto& i : w) i = gen(rng);
    return w;
}

} // namespace testing
