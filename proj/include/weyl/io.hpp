#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/census.hpp"
#include "weyl/nichols.hpp"

namespace weyl::io {

using Json = nlohmann::json;

struct BuildOptions {
    std::size_t max_objects = kDefaultMaxObjects;
    Int exponent_bound = kDefaultExponentBound;
};

/// Braiding document: {"rank": n, "mode": "root_of_unity"|"generic_q"|"mixed", "q": [[...]]}
BraidingMatrix parse_braiding(const Json& doc);

/// Either a braiding document or {"objects": [{"id", "cartan"}], "maps": [{"X1": "X2", ...}, ...]}.
CartanScheme parse_scheme(const Json& doc, const BuildOptions& options = {});

Json read_json_file(const std::string& path);
CartanScheme load_scheme(const std::string& path, const BuildOptions& options = {});
/// Writes doc with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& doc);
void write_text_file(const std::string& path, const std::string& text);

Json to_json(const RootVector& v);
Json to_json(const LatticeMap& m);
/// 1-based generator indices.
Json word_to_json(const Word& w);
Word word_from_json(const Json& j, std::size_t rank);

Json scheme_to_json(const CartanScheme& scheme);
Json axiom_report_to_json(const CartanScheme& scheme, const AxiomReport& report);
Json morphisms_to_json(const CartanScheme& scheme, const std::vector<Morphism>& morphisms);
Json roots_to_json(const CartanScheme& scheme, const RealRootSet& roots);
Json root_system_to_json(const CartanScheme& scheme, const RootSystemReport& report,
                         const std::vector<CoxeterFailure>& coxeter);
Json finiteness_to_json(const CartanScheme& scheme, const FinitenessReport& report);
Json poset_to_json(const CartanScheme& scheme, const DufloPoset& poset);
Json census_to_json(const CartanScheme& scheme, std::size_t base, const std::vector<CoidealRecord>& records);
Json oracle_report_to_json(const oracle::OracleReport& report);

/// Rebuilds the records of a census document against `scheme` and checks
/// that the stored Λ₊, PBW degrees and Hilbert factors match a fresh
/// computation. Throws VerificationError on any difference.
std::vector<CoidealRecord> census_from_json(const CartanScheme& scheme, const Json& doc,
                                            std::size_t max_length = kDefaultMaxLength);

} // namespace weyl::io
