// Command-line front end: family generation, per-graph spectra and
// classification over graph6 streams, property checkers, and the growth
// enumeration. JSON records carry a schema version; exit codes are 0 for
// success, 1 for a failed check or expectation, 2 for usage errors.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lg3/canonical.hpp"
#include "lg3/checks.hpp"
#include "lg3/families.hpp"
#include "lg3/graph.hpp"
#include "lg3/growth.hpp"
#include "lg3/linegraph.hpp"
#include "lg3/spectra.hpp"

using json = nlohmann::ordered_json;
using namespace lg3;

namespace {

constexpr const char* kSchemaVersion = "1";

Family family_from_name(const std::string& name) {
    for (Family f : {Family::cs1, Family::cs2, Family::cs3, Family::b1,
                     Family::b2, Family::b3, Family::b4})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family " + name);
}

// Output stream selection: empty or "-" means stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;
    int open(const std::string& path) {
        if (path.empty() || path == "-") return 0;
        file.open(path);
        if (!file) {
            std::cerr << "lg3: cannot open " << path << " for writing\n";
            return 2;
        }
        out = &file;
        return 0;
    }
};

// ---------------------------------------------------------------- gen

int run_gen(const std::string& family, int m, int n, int p, bool range,
            int max_n, int max_mn, const std::string& out_path) {
    Sink sink;
    if (int rc = sink.open(out_path)) return rc;

    std::vector<FamilyParams> sweep;
    const Family f = family_from_name(family);
    if (!range) {
        sweep.push_back({f, m, n, p});
    } else if (f == Family::cs2 || f == Family::b3) {
        for (int k = 0; k <= max_n; ++k) sweep.push_back({f, 0, k, 0});
    } else if (f == Family::cs3 || f == Family::b4) {
        for (int mm = 1; mm <= max_mn; ++mm)
            for (int nn = 1; nn <= mm && mm + nn - 1 <= max_mn; ++nn)
                for (int pp = 0; pp < nn; ++pp) sweep.push_back({f, mm, nn, pp});
    } else {
        sweep.push_back({f, 0, 0, 0});
    }

    try {
        for (const FamilyParams& params : sweep)
            *sink.out << write_graph6(gen_family(params)) << '\n';
    } catch (const std::invalid_argument& e) {
        std::cerr << "lg3 gen: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

// ------------------------------------------------- spectrum / classify

json error_record(int line, const Graph6Error& e) {
    json rec;
    rec["version"] = kSchemaVersion;
    rec["type"] = "error";
    rec["line"] = line;
    rec["byte_offset"] = e.offset;
    rec["message"] = e.what();
    return rec;
}

json spectrum_record(const Graph& g, int line, const std::string& text) {
    const Spectrum sp = eigenvalues_float(g);
    const Inertia in = inertia(g);
    json rec;
    rec["version"] = kSchemaVersion;
    rec["type"] = "spectrum";
    rec["line"] = line;
    rec["graph6"] = text;
    rec["n"] = g.n;
    rec["edges"] = g.edge_count();
    rec["eigenvalues"] = sp.values;
    rec["residual_bound"] = sp.residual_bound;
    rec["inertia"] = {{"positive", in.n_pos}, {"zero", in.n_zero}, {"negative", in.n_neg}};
    rec["lambda3_nonpositive"] = lambda3_nonpositive(g);
    rec["min_eigenvalue_at_least_minus2"] = min_eigenvalue_at_least(g, -2);
    rec["bipartite"] = is_bipartite(g);
    return rec;
}

json membership_json(const Membership& m) {
    json j;
    switch (m.verdict) {
        case Verdict::yes: j["verdict"] = "yes"; break;
        case Verdict::no: j["verdict"] = "no"; break;
        case Verdict::undecided: j["verdict"] = "undecided"; break;
    }
    if (m.verdict == Verdict::yes) {
        j["family"] = family_name(m.witness.family);
        if (m.witness.family == Family::cs3 || m.witness.family == Family::b4)
            j["m"] = m.witness.m;
        if (m.witness.family != Family::cs1 && m.witness.family != Family::b1 &&
            m.witness.family != Family::b2)
            j["n"] = m.witness.n;
        if (m.witness.family == Family::cs3 || m.witness.family == Family::b4)
            j["p"] = m.witness.p;
        j["embedding"] = m.embedding;
    }
    return j;
}

json classify_record(const Graph& g, int line, const std::string& text) {
    json rec;
    rec["version"] = kSchemaVersion;
    rec["type"] = "classify";
    rec["line"] = line;
    rec["graph6"] = text;
    rec["is_line_graph"] = is_line_graph(g);
    rec["root_graph_count"] = root_graphs(g).size();
    rec["cs_family"] = membership_json(member_cs_family(g));
    rec["b_family"] = membership_json(member_b_family(g));
    rec["complement_bipartite"] = is_bipartite(complement(g));
    return rec;
}

template <typename RecordFor>
int run_stream(const std::string& in_path, const std::string& out_path,
               RecordFor record_for) {
    std::ifstream fin;
    std::istream* in = &std::cin;
    if (!in_path.empty() && in_path != "-") {
        fin.open(in_path);
        if (!fin) {
            std::cerr << "lg3: cannot open " << in_path << '\n';
            return 2;
        }
        in = &fin;
    }
    Sink sink;
    if (int rc = sink.open(out_path)) return rc;

    std::string text;
    int line = 0;
    bool saw_error = false;
    while (std::getline(*in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty()) continue;
        json rec;
        try {
            rec = record_for(parse_graph6(text), line, text);
        } catch (const Graph6Error& e) {
            saw_error = true;
            rec = error_record(line, e);
        }
        *sink.out << rec.dump() << '\n';
    }
    return saw_error ? 1 : 0;
}

// --------------------------------------------------------------- verify

json report_json(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["instances"] = r.instances;
    j["not_applicable"] = r.not_applicable;
    j["passed"] = r.passed();
    j["failures"] = json::array();
    for (const CheckFailure& f : r.failures)
        j["failures"].push_back(
            {{"instance", f.instance}, {"relation", f.relation}, {"values", f.values}});
    return j;
}

// Accumulates per-input reports of one checker into a single suite report.
struct Suite {
    CheckReport total;
    int applicable = 0;
    explicit Suite(std::string name) { total.name = std::move(name); }
    void add(const CheckReport& r, const std::string& label) {
        total.instances += r.instances;
        total.not_applicable += r.not_applicable;
        applicable += r.not_applicable == 0;
        for (CheckFailure f : r.failures) {
            f.instance = label + ": " + f.instance;
            total.failures.push_back(std::move(f));
        }
    }
};

Graph random_root(std::mt19937_64& rng, int max_edges) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    const int m = std::uniform_int_distribution<int>(
        0, std::min<int>(max_edges, static_cast<int>(all.size())))(rng);
    all.resize(m);
    return make_graph(n, all);
}

int run_verify(std::uint64_t seed, int roots, int pairs, int max_n, int max_mn,
               int max_cycle, const std::vector<std::string>& only,
               const std::string& out_path) {
    Sink sink;
    if (int rc = sink.open(out_path)) return rc;

    const auto wanted = [&](const std::string& name) {
        return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
    };

    std::vector<json> checks;
    bool all_passed = true;
    const auto finish = [&](const CheckReport& r, int applicable = -1) {
        json j = report_json(r);
        if (applicable >= 0) j["applicable"] = applicable;
        all_passed = all_passed && r.passed();
        checks.push_back(std::move(j));
    };

    if (wanted("courant-weyl")) {
        // random symmetric +/-1 pairs with random index pairs (i, j)
        std::mt19937_64 rng(seed + 1);
        Suite suite("courant-weyl");
        for (int k = 0; k < pairs; ++k) {
            const int n = std::uniform_int_distribution<int>(2, 8)(rng);
            IntMatrix a(n, std::vector<int>(n)), b = a;
            std::bernoulli_distribution coin(0.5);
            for (int r = 0; r < n; ++r)
                for (int c = r; c < n; ++c) {
                    a[r][c] = a[c][r] = coin(rng) ? 1 : -1;
                    b[r][c] = b[c][r] = coin(rng) ? 1 : -1;
                }
            const int i = std::uniform_int_distribution<int>(1, n)(rng);
            const int j = std::uniform_int_distribution<int>(1, n)(rng);
            suite.add(check_courant_weyl(a, b, i, j), "pair " + std::to_string(k));
        }
        finish(suite.total);
    }
    if (wanted("interlacing")) {
        std::mt19937_64 rng(seed + 2);
        Suite suite("interlacing");
        std::bernoulli_distribution coin(0.5);
        for (int k = 0; k < pairs; ++k) {
            const int n = std::uniform_int_distribution<int>(2, 12)(rng);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) g.add_edge(u, v);
            const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            suite.add(check_interlacing(g, v), "graph " + std::to_string(k));
        }
        finish(suite.total);
    }
    if (wanted("bipartite-complement")) {
        std::mt19937_64 rng(seed + 3);
        Suite suite("bipartite-complement");
        for (int k = 0; k < roots; ++k)
            suite.add(check_bipartite_complement_lambda3(random_root(rng, 12)),
                      "root " + std::to_string(k));
        finish(suite.total, suite.applicable);
    }
    if (wanted("cvetkovic")) {
        std::mt19937_64 rng(seed + 3);  // same root stream as above
        Suite suite("cvetkovic");
        for (int k = 0; k < roots; ++k)
            suite.add(check_cvetkovic_lambda2(random_root(rng, 12)),
                      "root " + std::to_string(k));
        finish(suite.total);
    }
    if (wanted("family-complements")) finish(check_family_complements(max_n, max_mn));
    if (wanted("odd-cycles")) finish(check_odd_cycle_facts(max_cycle));

    json out;
    out["version"] = kSchemaVersion;
    out["type"] = "verify";
    out["seed"] = seed;
    out["bounds"] = {{"roots", roots}, {"pairs", pairs},   {"max_n", max_n},
                     {"max_mn", max_mn}, {"max_cycle", max_cycle}};
    out["checks"] = checks;
    out["status"] = all_passed ? "pass" : "fail";
    *sink.out << out.dump(2) << '\n';
    return all_passed ? 0 : 1;
}

// ------------------------------------------------------------ enumerate

json catalog_json(const std::vector<CatalogEntry>& catalog) {
    json arr = json::array();
    for (const CatalogEntry& e : catalog) {
        json j;
        j["graph6"] = e.graph6;
        j["isolated"] = e.isolated;
        j["matched"] = e.matched;
        if (e.matched) {
            j["family"] = family_name(e.params.family);
            if (e.params.family == Family::b4) j["m"] = e.params.m;
            j["n"] = e.params.n;
            if (e.params.family == Family::b4) j["p"] = e.params.p;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

std::set<std::string> census_connected_forms(const ComplementCensus& census) {
    std::set<std::string> disc;
    for (const CanonicalForm& f : census.disconnected_complement) disc.insert(f.bytes);
    std::set<std::string> out;
    for (const CanonicalForm& f : census.nonbipartite)
        if (!disc.count(f.bytes))
            out.insert(canonical_form(complement(parse_graph6(f.bytes))).bytes);
    return out;
}

int write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "lg3: cannot open " << path.string() << " for writing\n";
        return 2;
    }
    for (const std::string& line : lines) out << line << '\n';
    return 0;
}

int run_enumerate(int max_vertices, const std::string& emit_path,
                  const std::string& report_path, bool oracle_check,
                  const std::string& expect, const std::string& bless_dir) {
    EnumerationReport rep;
    try {
        rep = enumerate_to(max_vertices);
    } catch (const std::invalid_argument& e) {
        std::cerr << "lg3 enumerate: " << e.what() << '\n';
        return 2;
    }

    const std::vector<CatalogEntry> catalog = classify_terminal_catalog(rep);
    int matched = 0;
    for (const CatalogEntry& e : catalog) matched += e.matched;

    const ComplementCensus census = complement_subgraph_census();
    const std::vector<CanonicalForm> survivors = connected_nonbipartite_survivors(rep);
    std::set<std::string> survivor_forms;
    for (const CanonicalForm& f : survivors) survivor_forms.insert(f.bytes);
    const bool survivors_equal_census = survivor_forms == census_connected_forms(census);

    json out;
    out["version"] = kSchemaVersion;
    out["type"] = "enumerate";
    out["max_vertices"] = max_vertices;
    out["policy"] = "single_component";
    json levels;
    for (const auto& [k, graphs] : rep.levels)
        levels[std::to_string(k)] = graphs.size();
    out["level_counts"] = levels;
    out["terminal_count"] = rep.terminal().size();
    out["matched"] = matched;
    out["unmatched"] = static_cast<int>(catalog.size()) - matched;
    out["catalog"] = catalog_json(catalog);
    out["census"] = {
        {"nonbipartite", census.nonbipartite.size()},
        {"disconnected_complement", census.disconnected_complement.size()},
        {"connected_line_graphs",
         census.nonbipartite.size() - census.disconnected_complement.size()}};
    out["survivors"] = {{"count", survivors.size()},
                        {"equal_to_census", survivors_equal_census}};

    int rc = 0;
    if (oracle_check) {
        const int max_k = std::min(7, max_vertices);
        const EnumerationReport free_rep =
            enumerate_to(max_k, GrowthPolicy::unrestricted);
        json per_level;
        bool all_equal = true;
        for (int k = 3; k <= max_k; ++k) {
            const OracleComparison cmp = compare_with_oracle(free_rep, k);
            per_level[std::to_string(k)] = cmp.equal;
            all_equal = all_equal && cmp.equal;
        }
        out["oracle_check"] = {{"max_k", max_k}, {"equal", all_equal},
                               {"levels", per_level}};
        if (!all_equal) rc = 1;
    }

    if (!expect.empty()) {
        std::vector<long> want;
        std::istringstream ss(expect);
        for (std::string field; std::getline(ss, field, ',');) want.push_back(std::stol(field));
        if (want.size() != 4) {
            std::cerr << "lg3 enumerate: --expect wants four comma-separated counts\n";
            return 2;
        }
        const std::vector<long> got = {
            static_cast<long>(rep.terminal().size()),
            static_cast<long>(survivors.size()),
            static_cast<long>(census.nonbipartite.size()),
            static_cast<long>(census.disconnected_complement.size())};
        static const char* kNames[] = {"terminal", "connected survivors",
                                       "census nonbipartite", "census disconnected"};
        json diff = json::array();
        for (int i = 0; i < 4; ++i)
            if (want[i] != got[i]) {
                diff.push_back({{"count", kNames[i]}, {"expected", want[i]}, {"actual", got[i]}});
                std::cerr << "lg3 enumerate: " << kNames[i] << " expected " << want[i]
                          << ", got " << got[i] << '\n';
            }
        out["expect"] = {{"values", want}, {"match", diff.empty()}, {"diff", diff}};
        if (!diff.empty()) rc = 1;
    }

    if (!emit_path.empty()) {
        std::vector<std::string> lines;
        for (const Graph& g : rep.terminal()) lines.push_back(canonical_form(g).bytes);
        std::sort(lines.begin(), lines.end());
        if (int wrc = write_lines(emit_path, lines)) return wrc;
    }

    if (!bless_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(bless_dir, ec);
        if (ec) {
            std::cerr << "lg3: cannot create " << bless_dir << ": " << ec.message() << '\n';
            return 2;
        }
        for (int k = 3; k <= 7; ++k) {
            std::vector<std::string> lines;
            for (const CanonicalForm& f : oracle_enumerate(k)) lines.push_back(f.bytes);
            const auto path = std::filesystem::path(bless_dir) /
                              ("oracle_k" + std::to_string(k) + ".g6");
            if (int wrc = write_lines(path, lines)) return wrc;
        }
        std::vector<std::string> lines;
        for (const Graph& g : rep.terminal()) lines.push_back(canonical_form(g).bytes);
        std::sort(lines.begin(), lines.end());
        if (int wrc = write_lines(std::filesystem::path(bless_dir) / "terminal_catalog.g6",
                                  lines))
            return wrc;
    }

    Sink sink;
    if (int src = sink.open(report_path)) return src;
    *sink.out << out.dump(2) << '\n';
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"line graphs with at most two positive adjacency eigenvalues: "
                 "generators, exact spectra, property checks, and enumeration"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit family members as graph6");
    std::string gen_family_name;
    int gen_m = 1, gen_n = 0, gen_p = 0;
    bool gen_range = false;
    int gen_max_n = 8, gen_max_mn = 13;
    std::string gen_out;
    gen->add_option("--family", gen_family_name, "cs1|cs2|cs3|b1|b2|b3|b4")
        ->required()
        ->check(CLI::IsMember({"cs1", "cs2", "cs3", "b1", "b2", "b3", "b4"}));
    gen->add_option("-m", gen_m, "clique size m (cs3/b4)");
    gen->add_option("-n", gen_n, "parameter n (cs2/b3/cs3/b4)");
    gen->add_option("-p", gen_p, "matching size p (cs3/b4)");
    gen->add_flag("--range", gen_range, "sweep all valid parameters instead");
    gen->add_option("--max-n", gen_max_n, "range bound for cs2/b3 sweeps");
    gen->add_option("--max-mn", gen_max_mn, "range bound on m+n-1 for cs3/b4 sweeps");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "per-graph spectra as JSON lines");
    std::string spec_in, spec_out;
    spectrum->add_option("-i,--input", spec_in, "graph6 lines (default stdin)");
    spectrum->add_option("-o,--output", spec_out, "output path (default stdout)");

    // classify
    auto* classify = app.add_subcommand("classify", "family membership as JSON lines");
    std::string cls_in, cls_out;
    classify->add_option("-i,--input", cls_in, "graph6 lines (default stdin)");
    classify->add_option("-o,--output", cls_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the property checkers");
    std::uint64_t ver_seed = 0;
    int ver_roots = 500, ver_pairs = 200, ver_max_n = 8, ver_max_mn = 13,
        ver_max_cycle = 13;
    std::vector<std::string> ver_only;
    std::string ver_out;
    verify->add_option("--seed", ver_seed, "seed for the randomized suites");
    verify->add_option("--roots", ver_roots, "random root graphs per root suite");
    verify->add_option("--pairs", ver_pairs, "random inputs per matrix/graph suite");
    verify->add_option("--max-n", ver_max_n, "family sweep bound for cs2/b3");
    verify->add_option("--max-mn", ver_max_mn, "family sweep bound on m+n-1");
    verify->add_option("--max-cycle", ver_max_cycle, "largest odd cycle checked");
    verify->add_option("--only", ver_only, "restrict to named checkers")
        ->check(CLI::IsMember({"courant-weyl", "interlacing", "bipartite-complement",
                               "cvetkovic", "family-complements", "odd-cycles"}));
    verify->add_option("-o,--output", ver_out, "output path (default stdout)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "grow line graphs from 3K1");
    int enum_max_vertices = 12;
    std::string enum_emit, enum_report, enum_expect, enum_bless;
    bool enum_oracle = false;
    enumerate->add_option("--max-vertices", enum_max_vertices, "growth target (3..13)");
    enumerate->add_option("--emit-graph6", enum_emit, "write sorted terminal graph6 lines");
    enumerate->add_option("--report", enum_report, "write the JSON report here");
    enumerate->add_flag("--oracle-check", enum_oracle,
                        "compare levels k <= 7 against the exhaustive oracle");
    enumerate->add_option("--expect", enum_expect,
                          "terminal,survivors,census,disconnected counts to enforce");
    enumerate->add_option("--bless", enum_bless,
                          "regenerate fixture files into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return run_gen(gen_family_name, gen_m, gen_n, gen_p, gen_range, gen_max_n,
                           gen_max_mn, gen_out);
        if (*spectrum) return run_stream(spec_in, spec_out, spectrum_record);
        if (*classify) return run_stream(cls_in, cls_out, classify_record);
        if (*verify)
            return run_verify(ver_seed, ver_roots, ver_pairs, ver_max_n, ver_max_mn,
                              ver_max_cycle, ver_only, ver_out);
        if (*enumerate)
            return run_enumerate(enum_max_vertices, enum_emit, enum_report, enum_oracle,
                                 enum_expect, enum_bless);
    } catch (const std::exception& e) {
        std::cerr << "lg3: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
