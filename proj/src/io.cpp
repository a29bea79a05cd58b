#include "weyl/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace weyl::io {

namespace {

template <class T>
T get(const Json& doc, const char* key, const char* what) {
    if (!doc.contains(key)) throw InputError("Schema", std::string(what) + ": missing \"" + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError("Schema", std::string(what) + ": bad \"" + key + "\": " + e.what());
    }
}

std::string object_name(const CartanScheme& scheme, std::size_t x) { return scheme.object(x).name; }

Json hilbert_to_json(const HilbertSeries& h) {
    Json out = Json::array();
    for (const auto& f : h.factors)
        out.push_back({{"degree", to_json(f.degree)}, {"height", f.height ? Json(*f.height) : Json("inf")}});
    return out;
}

} // namespace

BraidingMatrix parse_braiding(const Json& doc) {
    const auto rows = get<std::vector<std::vector<std::string>>>(doc, "q", "braiding");
    const std::size_t n = doc.contains("rank") ? get<std::size_t>(doc, "rank", "braiding") : rows.size();
    const std::string mode = doc.contains("mode") ? get<std::string>(doc, "mode", "braiding") : "mixed";
    if (mode != "root_of_unity" && mode != "generic_q" && mode != "mixed")
        throw InputError("Schema", "unknown scalar mode \"" + mode + "\"");
    if (n == 0 || rows.size() != n) throw InputError("Schema", "q must be a rank x rank array");
    std::vector<std::vector<ScalarValue>> q;
    for (const auto& row : rows) {
        if (row.size() != n) throw InputError("Schema", "q must be a rank x rank array");
        q.emplace_back();
        for (const auto& lit : row) {
            ScalarValue s;
            try {
                s = ScalarValue::parse(lit);
            } catch (const Error& e) {
                throw InputError("Parse", e.what());
            }
            if (mode == "root_of_unity" && !s.is_root_of_unity())
                throw InputError("Schema", "literal \"" + lit + "\" is not a root of unity");
            q.back().push_back(s);
        }
    }
    return BraidingMatrix(std::move(q));
}

CartanScheme parse_scheme(const Json& doc, const BuildOptions& options) {
    if (!doc.is_object()) throw InputError("Schema", "scheme document must be an object");
    if (doc.contains("q")) return build_from_braiding(parse_braiding(doc), options.max_objects, options.exponent_bound);

    const auto objects = get<Json>(doc, "objects", "scheme");
    const auto maps = get<Json>(doc, "maps", "scheme");
    if (!objects.is_array() || objects.empty()) throw InputError("Schema", "\"objects\" must be a nonempty array");
    std::vector<ObjectSpec> specs;
    std::map<std::string, std::size_t> index;
    for (const auto& o : objects) {
        ObjectSpec spec;
        spec.name = get<std::string>(o, "id", "object");
        spec.cartan = get<std::vector<std::vector<Int>>>(o, "cartan", "object");
        if (!index.emplace(spec.name, specs.size()).second)
            throw InputError("Schema", "duplicate object id \"" + spec.name + "\"");
        specs.push_back(std::move(spec));
    }
    const std::size_t rank = specs.front().cartan.size();
    if (!maps.is_array() || maps.size() != rank) throw InputError("Schema", "\"maps\" needs one table per generator");
    std::vector<std::vector<std::size_t>> tables;
    for (const auto& m : maps) {
        if (!m.is_object()) throw InputError("Schema", "each map must be an object from id to id");
        std::vector<std::size_t> table(specs.size(), specs.size());
        for (const auto& [from, to] : m.items()) {
            if (!to.is_string()) throw InputError("Schema", "map values must be object ids");
            auto a = index.find(from);
            auto b = index.find(to.get<std::string>());
            if (a == index.end() || b == index.end()) throw InputError("Schema", "map mentions an unknown object");
            table[a->second] = b->second;
        }
        for (std::size_t x = 0; x < table.size(); ++x)
            if (table[x] == specs.size()) throw InputError("Schema", "map is not total on " + specs[x].name);
        tables.push_back(std::move(table));
    }
    return build_from_matrices(specs, tables);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("IO", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("Parse", path + ": " + e.what());
    }
}

CartanScheme load_scheme(const std::string& path, const BuildOptions& options) {
    return parse_scheme(read_json_file(path), options);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("IO", "cannot write " + path);
    out << text;
    if (!out) throw InputError("IO", "write failed for " + path);
}

void write_json_file(const std::string& path, const Json& doc) { write_text_file(path, doc.dump(2) + "\n"); }

Json to_json(const RootVector& v) { return v.coords(); }

Json to_json(const LatticeMap& m) { return m.rows(); }

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (auto i : w) out.push_back(i + 1);
    return out;
}

Word word_from_json(const Json& j, std::size_t rank) {
    if (!j.is_array()) throw InputError("Schema", "word must be an array of generator indices");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<Int>() < 1 || x.get<Int>() > static_cast<Int>(rank))
            throw InputError("Schema", "generator index out of range");
        w.push_back(x.get<std::size_t>() - 1);
    }
    return w;
}

Json scheme_to_json(const CartanScheme& scheme) {
    Json objects = Json::array();
    for (const auto& o : scheme.objects()) {
        Json obj = {{"id", o.name}, {"cartan", o.cartan.rows()}};
        if (o.braiding) {
            Json q = Json::array();
            for (const auto& row : o.braiding->rows()) {
                Json r = Json::array();
                for (const auto& s : row) r.push_back(s.to_string());
                q.push_back(std::move(r));
            }
            obj["braiding"] = std::move(q);
        }
        objects.push_back(std::move(obj));
    }
    Json maps = Json::array();
    for (std::size_t i = 0; i < scheme.rank(); ++i) {
        Json m = Json::object();
        for (std::size_t x = 0; x < scheme.object_count(); ++x) m[object_name(scheme, x)] = object_name(scheme, scheme.r(i, x));
        maps.push_back(std::move(m));
    }
    return {{"rank", scheme.rank()}, {"objects", std::move(objects)}, {"maps", std::move(maps)}};
}

Json axiom_report_to_json(const CartanScheme& scheme, const AxiomReport& report) {
    Json v = Json::array();
    for (const auto& a : report)
        v.push_back({{"axiom", a.axiom},
                     {"i", a.i + 1},
                     {"j", a.j + 1},
                     {"object", object_name(scheme, a.object)},
                     {"message", a.message}});
    return {{"valid", report.empty()}, {"violations", std::move(v)}};
}

Json morphisms_to_json(const CartanScheme& scheme, const std::vector<Morphism>& morphisms) {
    Json out = Json::array();
    for (const auto& m : morphisms) {
        Json lambda = Json::array();
        for (const auto& r : m.lambda) lambda.push_back(to_json(r));
        out.push_back({{"word", word_to_json(m.word)},
                       {"source", object_name(scheme, m.source)},
                       {"target", object_name(scheme, m.target)},
                       {"matrix", to_json(m.matrix)},
                       {"lambda", std::move(lambda)}});
    }
    return out;
}

Json roots_to_json(const CartanScheme& scheme, const RealRootSet& roots) {
    Json all = Json::array();
    Json pos = Json::array();
    for (const auto& r : roots.roots) all.push_back(to_json(r));
    for (const auto& r : roots.positive()) pos.push_back(to_json(r));
    return {{"object", object_name(scheme, roots.base)}, {"roots", std::move(all)}, {"positive", std::move(pos)}};
}

Json root_system_to_json(const CartanScheme& scheme, const RootSystemReport& report,
                         const std::vector<CoxeterFailure>& coxeter) {
    Json axioms = Json::array();
    for (const auto& a : report.axioms) {
        Json w = Json::array();
        for (const auto& x : a.witnesses) {
            Json j = {{"object", object_name(scheme, x.object)}, {"i", x.i + 1}, {"j", x.j + 1}, {"message", x.message}};
            if (x.root) j["root"] = to_json(*x.root);
            w.push_back(std::move(j));
        }
        axioms.push_back({{"axiom", a.axiom}, {"passed", a.passed}, {"witnesses", std::move(w)}});
    }
    Json m = Json::object();
    for (std::size_t x = 0; x < report.m.size(); ++x) {
        Json table = Json::array();
        for (const auto& row : report.m[x]) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(e ? Json(*e) : Json(nullptr));
            table.push_back(std::move(r));
        }
        m[object_name(scheme, x)] = std::move(table);
    }
    Json cox = Json::array();
    for (const auto& f : coxeter)
        cox.push_back({{"object", object_name(scheme, f.object)}, {"i", f.i + 1}, {"j", f.j + 1}, {"message", f.message}});
    return {{"root_system", report.passed()}, {"axioms", std::move(axioms)}, {"m", std::move(m)},
            {"coxeter_failures", std::move(cox)}};
}

Json finiteness_to_json(const CartanScheme& scheme, const FinitenessReport& report) {
    Json comps = Json::array();
    for (const auto& c : report.components) {
        Json objs = Json::array();
        for (auto x : c.objects) objs.push_back(object_name(scheme, x));
        Json homto = Json::object();
        Json roots = Json::object();
        for (const auto& [x, n] : c.homto_counts) homto[object_name(scheme, x)] = n;
        for (const auto& [x, n] : c.real_root_counts) roots[object_name(scheme, x)] = n;
        comps.push_back({{"objects", std::move(objs)},
                         {"verdict", c.finite ? "Finite" : "UnknownWithinBounds"},
                         {"homto", std::move(homto)},
                         {"real_roots", std::move(roots)},
                         {"morphisms", c.morphism_count},
                         {"consistent", c.consistent},
                         {"notes", c.notes}});
    }
    return {{"finite", report.all_finite()}, {"components", std::move(comps)}};
}

Json poset_to_json(const CartanScheme& scheme, const DufloPoset& poset) {
    Json nodes = Json::array();
    for (std::size_t k = 0; k < poset.nodes.size(); ++k) {
        const auto& m = poset.nodes[k];
        Json lambda = Json::array();
        for (const auto& r : m.lambda) lambda.push_back(to_json(r));
        nodes.push_back({{"id", k}, {"word", word_to_json(m.word)}, {"length", m.length()}, {"lambda", std::move(lambda)}});
    }
    Json edges = Json::array();
    for (const auto& [a, b] : poset.hasse) edges.push_back({a, b});
    return {{"object", object_name(scheme, poset.base)}, {"nodes", std::move(nodes)}, {"hasse", std::move(edges)}};
}

Json census_to_json(const CartanScheme& scheme, std::size_t base, const std::vector<CoidealRecord>& records) {
    Json recs = Json::array();
    for (const auto& r : records) {
        Json lambda = Json::array();
        for (const auto& v : r.lambda.roots) lambda.push_back(to_json(v));
        Json pbw = Json::array();
        for (const auto& v : r.pbw.degrees) pbw.push_back(to_json(v));
        Json rec = {{"id", r.id},
                    {"word", word_to_json(r.morphism.word)},
                    {"source", object_name(scheme, r.morphism.source)},
                    {"lambda", std::move(lambda)},
                    {"pbw_degrees", std::move(pbw)},
                    {"hilbert_factors", r.hilbert ? hilbert_to_json(*r.hilbert) : Json(nullptr)},
                    {"includes", r.includes}};
        if (!r.pbw.self_braidings.empty()) {
            Json sb = Json::array();
            for (const auto& s : r.pbw.self_braidings) sb.push_back(s.to_string());
            rec["self_braidings"] = std::move(sb);
        }
        recs.push_back(std::move(rec));
    }
    return {{"object", object_name(scheme, base)}, {"count", records.size()}, {"records", std::move(recs)}};
}

Json oracle_report_to_json(const oracle::OracleReport& report) {
    Json failures = Json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"check", f.which}, {"degree", to_json(f.degree)}, {"message", f.message}});
    Json dims = Json::array();
    for (const auto& [d, n] : report.dimensions) dims.push_back({{"degree", to_json(d)}, {"dimension", n}});
    return {{"passed", report.passed()}, {"checks", report.checks}, {"failures", std::move(failures)},
            {"dimensions", std::move(dims)}};
}

std::vector<CoidealRecord> census_from_json(const CartanScheme& scheme, const Json& doc, std::size_t max_length) {
    const auto object = get<std::string>(doc, "object", "census");
    const std::size_t base = scheme.resolve(object);
    const auto fresh = census(scheme, base, max_length);
    const auto stored = get<Json>(doc, "records", "census");
    if (!stored.is_array() || stored.size() != fresh.size())
        throw VerificationError("CensusMismatch", "stored census has " + std::to_string(stored.size()) +
                                                      " records, recomputation gives " + std::to_string(fresh.size()));
    const Json expected = census_to_json(scheme, base, fresh);
    for (std::size_t k = 0; k < fresh.size(); ++k) {
        const Json& s = stored[k];
        const Json& e = expected["records"][k];
        for (const char* key : {"word", "lambda", "pbw_degrees", "hilbert_factors", "includes"})
            if (s.value(key, Json()) != e[key])
                throw VerificationError("CensusMismatch", "record " + std::to_string(k) + " differs in \"" + key + "\"");
    }
    return fresh;
}

} // namespace weyl::io
