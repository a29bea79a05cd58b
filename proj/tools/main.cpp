#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weyl/io.hpp"

using namespace weyl;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kVerification = 2;
constexpr int kInput = 3;

struct RunConfig {
    std::string input;
    std::string object;
    std::string json_out;
    std::string dot_out;
    std::string census_in;
    std::size_t max_objects = kDefaultMaxObjects;
    std::size_t max_length = kDefaultMaxLength;
    Int exponent_bound = kDefaultExponentBound;
    int cap = oracle::kDefaultDegreeCap;
    Int truncation = kDefaultTruncation;
    unsigned threads = 1;
    long base = 2;
    bool root_system = false;
};

CartanScheme load(const RunConfig& cfg) {
    return io::load_scheme(cfg.input, {cfg.max_objects, cfg.exponent_bound});
}

std::size_t target_object(const CartanScheme& scheme, const RunConfig& cfg) {
    if (cfg.object.empty()) return 0;
    try {
        return scheme.resolve(cfg.object);
    } catch (const Error& e) {
        throw InputError("UnknownObject", e.what());
    }
}

void maybe_write(const std::string& path, const io::Json& doc) {
    if (!path.empty()) io::write_json_file(path, doc);
}

int cmd_scheme_check(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    const AxiomReport axioms = check_axioms(scheme, cfg.exponent_bound);
    io::Json doc = {{"scheme", io::scheme_to_json(scheme)}, {"axioms", io::axiom_report_to_json(scheme, axioms)}};
    std::cout << "objects: " << scheme.object_count() << ", rank " << scheme.rank() << "\n";
    std::cout << "Cartan scheme axioms: " << (axioms.empty() ? "ok" : "violated") << "\n";
    for (const auto& v : axioms) std::cout << "  " << v.axiom << ": " << v.message << "\n";
    bool ok = axioms.empty();
    if (cfg.root_system) {
        std::vector<std::set<RootVector>> roots;
        for (std::size_t x = 0; x < scheme.object_count(); ++x)
            roots.push_back(real_roots(scheme, x, cfg.max_length).roots);
        const RootSystemReport rs = check_root_system(scheme, roots);
        const auto coxeter = check_coxeter_relations(scheme, rs.m);
        doc["root_system"] = io::root_system_to_json(scheme, rs, coxeter);
        for (const auto& a : rs.axioms) {
            std::cout << a.axiom << ": " << (a.passed ? "pass" : "FAIL") << "\n";
            for (const auto& w : a.witnesses) std::cout << "  " << scheme.object(w.object).name << ": " << w.message << "\n";
        }
        std::cout << "Coxeter relations: " << (coxeter.empty() ? "hold" : std::to_string(coxeter.size()) + " failures")
                  << "\n";
        ok = ok && rs.passed();
    }
    maybe_write(cfg.json_out, doc);
    return ok ? kOk : kVerification;
}

int cmd_roots(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    io::Json doc = io::Json::array();
    std::vector<std::size_t> objects;
    if (cfg.object.empty())
        for (std::size_t x = 0; x < scheme.object_count(); ++x) objects.push_back(x);
    else
        objects.push_back(target_object(scheme, cfg));
    for (auto x : objects) {
        const RealRootSet roots = real_roots(scheme, x, cfg.max_length);
        std::cout << scheme.object(x).name << ": " << roots.roots.size() << " real roots\n ";
        for (const auto& r : roots.roots) std::cout << ' ' << r.to_string();
        std::cout << "\n";
        doc.push_back(io::roots_to_json(scheme, roots));
    }
    maybe_write(cfg.json_out, doc);
    return kOk;
}

int cmd_groupoid(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    const FinitenessReport report = is_finite(scheme, cfg.max_length);
    io::Json doc = {{"finiteness", io::finiteness_to_json(scheme, report)}};
    for (const auto& c : report.components) {
        std::cout << "component of " << c.objects.size() << " object(s): "
                  << (c.finite ? "Finite" : "UnknownWithinBounds") << "\n";
        for (const auto& [x, n] : c.homto_counts)
            std::cout << "  #Homto(" << scheme.object(x).name << ") = " << n << ", real roots "
                      << c.real_root_counts.at(x) << "\n";
        for (const auto& note : c.notes) std::cout << "  note: " << note << "\n";
    }
    if (!report.all_finite()) {
        std::cout << "verdict: UnknownWithinBounds (max length " << cfg.max_length << ")\n";
        maybe_write(cfg.json_out, doc);
        return kDomain;
    }
    const std::size_t x = target_object(scheme, cfg);
    doc["object"] = scheme.object(x).name;
    doc["morphisms"] = io::morphisms_to_json(scheme, enumerate_morphisms_to(scheme, x, cfg.max_length));
    maybe_write(cfg.json_out, doc);
    bool consistent = true;
    for (const auto& c : report.components) consistent = consistent && c.consistent;
    return consistent ? kOk : kVerification;
}

int cmd_duflo(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    const std::size_t x = target_object(scheme, cfg);
    const DufloPoset poset = build_poset(scheme, x, cfg.max_length, cfg.threads);
    std::cout << "Duflo order at " << scheme.object(x).name << ": " << poset.nodes.size() << " elements, "
              << poset.hasse.size() << " covering edges, longest length " << poset.nodes[poset.maximum()].length()
              << "\n";
    maybe_write(cfg.json_out, io::poset_to_json(scheme, poset));
    if (!cfg.dot_out.empty()) io::write_text_file(cfg.dot_out, to_dot(poset, scheme));
    return kOk;
}

int cmd_census(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    const std::size_t x = target_object(scheme, cfg);
    const auto records = census(scheme, x, cfg.max_length, cfg.truncation);
    const KharchenkoCount count = kharchenko_count(scheme, x, cfg.max_length);
    std::cout << "census at " << scheme.object(x).name << ": " << records.size() << " right coideal subalgebras\n";
    if (count.standard && count.weyl_order)
        std::cout << "standard scheme of type " << count.type << ", |W| = " << *count.weyl_order << "\n";
    for (const auto& r : records) {
        std::cout << "  #" << r.id << " " << (r.morphism.word.empty() ? "id" : word_to_string(r.morphism.word))
                  << "  pbw:";
        for (const auto& b : r.pbw.degrees) std::cout << ' ' << b.to_string();
        std::cout << "\n";
    }
    const auto mismatches = check_reflection_consistency(scheme, x, cfg.max_length, cfg.truncation);
    for (const auto& m : mismatches) std::cout << "  reflection mismatch: " << m << "\n";
    maybe_write(cfg.json_out, io::census_to_json(scheme, x, records));
    if (!cfg.dot_out.empty()) io::write_text_file(cfg.dot_out, to_dot(build_poset(scheme, x, cfg.max_length, cfg.threads), scheme));
    return mismatches.empty() ? kOk : kVerification;
}

int cmd_oracle_verify(const RunConfig& cfg) {
    const CartanScheme scheme = load(cfg);
    if (!scheme.has_braiding()) throw DomainError("ModeUnsupported", "the oracle needs a braiding input");
    std::size_t x = target_object(scheme, cfg);
    std::vector<CoidealRecord> records;
    if (!cfg.census_in.empty()) {
        const io::Json doc = io::read_json_file(cfg.census_in);
        records = io::census_from_json(scheme, doc, cfg.max_length);
        x = scheme.resolve(doc.at("object").get<std::string>());
    } else {
        records = census(scheme, x, cfg.max_length, cfg.truncation);
    }
    const mpq_class base(cfg.base);
    io::Json out = io::Json::array();
    bool ok = true;
    for (const auto& r : records) {
        const auto report = oracle::verify_coideal(scheme, r, cfg.cap, base);
        ok = ok && report.passed();
        std::cout << "  #" << r.id << " " << (r.morphism.word.empty() ? "id" : word_to_string(r.morphism.word)) << ": "
                  << (report.passed() ? "pass" : "FAIL") << " (" << report.checks << " checks)\n";
        for (const auto& f : report.failures) std::cout << "    " << f.which << " at " << f.degree.to_string() << ": " << f.message << "\n";
        io::Json j = io::oracle_report_to_json(report);
        j["record"] = r.id;
        out.push_back(std::move(j));
    }
    const auto comm = oracle::commutator_check(scheme, records.back(), cfg.cap, base);
    ok = ok && comm.passed();
    std::cout << "commutators of the longest record: " << (comm.passed() ? "pass" : "FAIL") << " (" << comm.checks
              << " checks)\n";
    for (const auto& f : comm.failures) std::cout << "    " << f.which << " at " << f.degree.to_string() << ": " << f.message << "\n";
    maybe_write(cfg.json_out, {{"object", scheme.object(x).name},
                               {"cap", cfg.cap},
                               {"records", std::move(out)},
                               {"commutators", io::oracle_report_to_json(comm)}});
    std::cout << "oracle: " << (ok ? "all checks passed" : "verification FAILED") << "\n";
    return ok ? kOk : kVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl groupoids, Duflo order and coideal subalgebras of Nichols algebras"};
    app.set_version_flag("--version", std::string(WEYL_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "Oracle degree cap")->check(CLI::PositiveNumber);
    app.add_option("--max-length", cfg.max_length, "Word length bound")->check(CLI::PositiveNumber);
    app.add_option("--max-objects", cfg.max_objects, "Object bound for braiding input")->check(CLI::PositiveNumber);
    app.add_option("--exponent-bound", cfg.exponent_bound, "Bound for Cartan entries")->check(CLI::PositiveNumber);
    app.add_option("--truncation", cfg.truncation, "Total degree for Hilbert series comparisons")
        ->check(CLI::PositiveNumber);

    auto with_io = [&](CLI::App* sub, bool object = true) {
        sub->add_option("--input,-i", cfg.input, "Scheme document (JSON)")->required();
        if (object) sub->add_option("--object,-x", cfg.object, "Base object (name or 1-based number)");
        sub->add_option("--json", cfg.json_out, "Write the JSON report here");
    };

    auto* scheme = app.add_subcommand("scheme", "Cartan scheme commands");
    scheme->require_subcommand(1);
    auto* check = scheme->add_subcommand("check", "Check (C1), (C2) and optionally (R1)-(R4)");
    with_io(check, false);
    check->add_flag("--root-system", cfg.root_system, "Also test the real roots against (R1)-(R4)");

    auto* roots = app.add_subcommand("roots", "Real roots");
    with_io(roots);
    auto* groupoid = app.add_subcommand("groupoid", "Finiteness and Homto");
    with_io(groupoid);
    auto* duflo = app.add_subcommand("duflo", "Right Duflo order");
    with_io(duflo);
    duflo->add_option("--dot", cfg.dot_out, "Write the Hasse diagram (DOT)");
    auto* cen = app.add_subcommand("census", "Graded right coideal subalgebras");
    with_io(cen);
    cen->add_option("--dot", cfg.dot_out, "Write the inclusion Hasse diagram (DOT)");
    auto* orc = app.add_subcommand("oracle", "Nichols algebra oracle");
    orc->require_subcommand(1);
    auto* verify = orc->add_subcommand("verify", "Check census records in the shuffle realisation");
    with_io(verify);
    verify->add_option("--census", cfg.census_in, "Census JSON to re-read and verify");
    verify->add_option("--base", cfg.base, "Rational value substituted for generic q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    if (!cfg.json_out.empty() && cfg.json_out == cfg.dot_out) {
        std::cerr << "error: --json and --dot must differ\n";
        return kInput;
    }

    try {
        if (check->parsed()) return cmd_scheme_check(cfg);
        if (roots->parsed()) return cmd_roots(cfg);
        if (groupoid->parsed()) return cmd_groupoid(cfg);
        if (duflo->parsed()) return cmd_duflo(cfg);
        if (cen->parsed()) return cmd_census(cfg);
        if (verify->parsed()) return cmd_oracle_verify(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kInput;
}
