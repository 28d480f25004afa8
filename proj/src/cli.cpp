#include "pbf/cli.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbf/nondecomp.hpp"
#include "pbf/pbf_core.hpp"
#include "pbf/reference_values.hpp"
#include "pbf/sbox.hpp"
#include "pbf/tripleset.hpp"

using nlohmann::json;

namespace pbf {

namespace {

struct RunConfig {
    int64_t n = 0;
    std::string poly_hex;
    uint64_t seed = 1;
    int64_t count = 0;
    std::string format = "text";
    std::string out_path;
    std::string in_path;
    bool verify_paper = false;
    int64_t max_len = 10;
};

void add_common_options(CLI::App *cmd, RunConfig &cfg, bool with_count, int64_t default_count) {
    cmd->add_option("--n", cfg.n, "extension degree (even)")->required();
    cmd->add_option("--poly", cfg.poly_hex, "irreducible modulus as hex (default: built-in)");
    cmd->add_option("--seed", cfg.seed, "base seed for all randomized steps");
    if (with_count) {
        cfg.count = default_count;
        cmd->add_option("--count", cfg.count, "number of samples");
    }
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", cfg.out_path, "output file path");
    cmd->add_flag("--verify-paper", cfg.verify_paper,
                  "compare computed results against the built-in reference table");
    cmd->add_option("--max-len", cfg.max_len, "bound on triple-set chain length");
}

FieldSpec make_field(const RunConfig &cfg) {
    unsigned n = static_cast<unsigned>(cfg.n);
    if (cfg.poly_hex.empty()) return FieldSpec::with_default_poly(n);
    std::string hex = cfg.poly_hex;
    if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
    if (hex.empty() || hex.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw std::invalid_argument("--poly: not a hex number: " + cfg.poly_hex);
    uint64_t poly = std::stoull(hex, nullptr, 16);
    if (poly > 0xffffffffULL) throw std::invalid_argument("--poly: out of range");
    return FieldSpec(n, static_cast<uint32_t>(poly));
}

std::string poly_str(const FieldSpec &field) {
    std::ostringstream os;
    os << "0x" << std::hex << field.poly();
    return os.str();
}

json config_json(const RunConfig &cfg, const FieldSpec *field) {
    json j{{"n", cfg.n}, {"seed", cfg.seed}};
    if (field) j["poly"] = poly_str(*field);
    if (cfg.count) j["count"] = cfg.count;
    return j;
}

bool write_file(const std::string &path, const std::string &content, std::ostream &err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    f << content;
    return true;
}

json stats_json(const GraphStats &st) {
    json j{{"vertices", st.vertices},
           {"edges", st.edges},
           {"components", st.components},
           {"diameter", st.diameter}};
    if (st.girth) j["girth"] = *st.girth;
    else j["girth"] = nullptr;
    return j;
}

std::string stats_text(const GraphStats &st) {
    std::ostringstream os;
    os << st.vertices << " vertices, " << st.edges << " edges, girth ";
    if (st.girth) os << *st.girth;
    else os << "none";
    os << ", " << st.components << " components, diameter " << st.diameter;
    return os.str();
}

struct Verifier {
    bool enabled;
    std::vector<std::string> mismatches;

    template <typename T, typename U>
    void expect(const std::string &what, const T &got, const U &want) {
        if (!enabled) return;
        if (!(got == static_cast<T>(want)))
            mismatches.push_back(what + ": computed " + to_str(got) + ", reference " +
                                 to_str(static_cast<T>(want)));
    }

    void expect_stats(const std::string &what, const GraphStats &got, const GraphStats &want) {
        if (!enabled) return;
        expect(what + ".vertices", got.vertices, want.vertices);
        expect(what + ".edges", got.edges, want.edges);
        expect(what + ".components", got.components, want.components);
        expect(what + ".diameter", got.diameter, want.diameter);
        if (got.girth != want.girth)
            mismatches.push_back(what + ".girth: computed " +
                                 (got.girth ? std::to_string(*got.girth) : "none") +
                                 ", reference " +
                                 (want.girth ? std::to_string(*want.girth) : "none"));
    }

    template <typename T> static std::string to_str(const T &v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }

    // Returns the exit code contribution and reports mismatches.
    int finish(std::ostream &out, std::ostream &err, json *report) {
        if (!enabled) return 0;
        if (report) {
            (*report)["verify"] = {{"checked", true}, {"mismatches", mismatches}};
        }
        if (mismatches.empty()) {
            if (!report) out << "verify: all reference values match\n";
            return 0;
        }
        for (const auto &m : mismatches) err << "verify mismatch: " << m << "\n";
        return 1;
    }
};

int even_n_or_fail(const RunConfig &cfg, std::ostream &err, int64_t lo, int64_t hi) {
    if (cfg.n < lo || cfg.n > hi || cfg.n % 2 != 0) {
        err << "error: --n must be even and in [" << lo << ", " << hi << "]\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------- space ---

int cmd_space(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (int rc = even_n_or_fail(cfg, err, 6, 30)) return rc;
    FieldSpec field = make_field(cfg);
    ConstraintSystem cs = build_constraints(field);
    std::size_t rank_m = rank(cs.m);
    PbfSpace space = pbf_space(cs);
    CountingRecord rec = counting_formulas(field.n());

    int64_t dim_pf =
        int64_t(field.n()) * int64_t(field.size()) + int64_t(field.size()) / 2 - 1 -
        static_cast<int64_t>(rank_m);
    bool rank_matches = static_cast<int64_t>(rank_m) == rec.expected_rank;

    Verifier v{cfg.verify_paper, {}};
    if (const ReferenceRow *ref = reference_row(field.n())) {
        v.expect("rank(M)", static_cast<int64_t>(rank_m), ref->rank_m);
        v.expect("dim(PBF)", static_cast<int64_t>(space.dim), ref->dim_pbf);
    }

    if (!cfg.out_path.empty() && !write_file(cfg.out_path, space.basis.export_text(), err))
        return 2;

    if (cfg.format == "json") {
        json j{{"config", config_json(cfg, &field)},
               {"l1_rows", cs.l1.size()},
               {"l2_rows", cs.l2.size()},
               {"rank_m", rank_m},
               {"expected_rank", rec.expected_rank},
               {"rank_matches_formula", rank_matches},
               {"dim_pbf", space.dim},
               {"dim_pf", dim_pf}};
        int rc = v.finish(out, err, &j);
        out << j.dump(2) << "\n";
        return rc;
    }
    out << "n=" << field.n() << " poly=" << poly_str(field) << "\n";
    out << "|L1|=" << cs.l1.size() << " |L2|=" << cs.l2.size() << "\n";
    out << "rank(M)=" << rank_m << " expected=" << rec.expected_rank
        << " match=" << (rank_matches ? "yes" : "no") << "\n";
    out << "dim(PBF)=" << space.dim << "\n";
    out << "dim(PF)=" << dim_pf << "\n";
    return v.finish(out, err, nullptr);
}

// ---------------------------------------------------------------- graph ---

int cmd_graph(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (int rc = even_n_or_fail(cfg, err, 6, 30)) return rc;
    FieldSpec field = make_field(cfg);
    TsGraph g = build_graph(field);
    GraphStats st = graph_stats(g);
    GraphStats fat = fat_subgraph_stats(g);
    bool verdict = has_3_regular_subgraph(g);

    Verifier v{cfg.verify_paper, {}};
    if (const ReferenceRow *ref = reference_row(field.n())) {
        if (ref->graph) v.expect_stats("graph", st, *ref->graph);
        if (ref->fat_graph) v.expect_stats("fat_graph", fat, *ref->fat_graph);
        // full rank iff no 3-regular subgraph
        ConstraintSystem cs = build_constraints(field);
        std::size_t rank_m = rank(cs.m);
        bool full = static_cast<int64_t>(rank_m) == ref->rank_m;
        v.expect("has_3_regular_subgraph", verdict, !full);
    }

    if (!cfg.out_path.empty() && !write_file(cfg.out_path, export_adjacency(g), err)) return 2;

    if (cfg.format == "json") {
        json j{{"config", config_json(cfg, &field)},
               {"graph", stats_json(st)},
               {"fat_graph", stats_json(fat)},
               {"has_3_regular_subgraph", verdict},
               {"forest", !st.girth.has_value()}};
        int rc = v.finish(out, err, &j);
        out << j.dump(2) << "\n";
        return rc;
    }
    out << "n=" << field.n() << " poly=" << poly_str(field) << "\n";
    out << "graph: " << stats_text(st) << "\n";
    out << "fat subgraph: " << stats_text(fat) << "\n";
    out << "3-regular subgraph: " << (verdict ? "yes" : "no") << "\n";
    return v.finish(out, err, nullptr);
}

// --------------------------------------------------------------- sample ---

int cmd_sample(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (int rc = even_n_or_fail(cfg, err, 6, 30)) return rc;
    if (cfg.count < 0) {
        err << "error: --count must be nonnegative\n";
        return 2;
    }
    FieldSpec field = make_field(cfg);
    ConstraintSystem cs = build_constraints(field);
    PbfSpace space = pbf_space(cs);
    SurveyResult sv = nl_survey(space, static_cast<std::size_t>(cfg.count), cfg.seed, true);

    std::string csv = "index,nl,delta,degree\n";
    std::size_t violations = 0;
    for (std::size_t i = 0; i < sv.rows.size(); ++i) {
        const SurveyRow &r = sv.rows[i];
        csv += std::to_string(i) + "," + std::to_string(r.nl) + "," + std::to_string(r.delta) +
               "," + std::to_string(r.degree) + "\n";
        if (!r.permutation || r.delta > 4 || r.degree != static_cast<int>(field.n()) - 1)
            ++violations;
    }

    Verifier v{cfg.verify_paper, {}};
    if (const NlReference *ref = nl_reference(field.n()); ref && cfg.count >= 1000) {
        if (sv.average_nl < ref->average - 1.0 || sv.average_nl > ref->average + 1.0)
            v.mismatches.push_back("average NL " + std::to_string(sv.average_nl) +
                                   " outside +-1.0 of reference " + std::to_string(ref->average));
    }
    if (violations) err << "error: " << violations << " sampled S-boxes violated invariants\n";

    bool csv_to_out = cfg.out_path.empty() && cfg.format == "csv";
    if (!cfg.out_path.empty() && !write_file(cfg.out_path, csv, err)) return 2;
    if (csv_to_out) out << csv;

    std::ostream &sum_stream = csv_to_out ? err : out;
    if (cfg.format == "json" && !csv_to_out) {
        json hist = json::object();
        for (const auto &[nl, c] : sv.histogram) hist[std::to_string(nl)] = c;
        json j{{"config", config_json(cfg, &field)},
               {"samples", sv.rows.size()},
               {"average_nl", sv.average_nl},
               {"var_nl", sv.var_nl},
               {"dist_nl", hist},
               {"violations", violations}};
        int rc = v.finish(out, err, &j);
        out << j.dump(2) << "\n";
        return violations ? 1 : rc;
    }
    sum_stream << "samples=" << sv.rows.size() << " average_nl=" << std::fixed
               << std::setprecision(4) << sv.average_nl << " var_nl=" << sv.var_nl << "\n";
    sum_stream.unsetf(std::ios::fixed);
    sum_stream << "dist: " << histogram_compact(sv.histogram) << "\n";
    int rc = v.finish(sum_stream, err, nullptr);
    return violations ? 1 : rc;
}

// ------------------------------------------------------------ nondecomp ---

int cmd_nondecomp(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (int rc = even_n_or_fail(cfg, err, 6, 30)) return rc;
    FieldSpec field = make_field(cfg);
    TSetPartition part = t_partition(field);
    TsGraph g = build_graph(field);

    std::size_t slim = 0;
    for (const auto &ts : g.verts) slim += !ts.fat;
    std::size_t type_i = part.count1 / 2;

    auto iiia = find_type_iiia(g, static_cast<std::size_t>(cfg.max_len));
    auto iiib = find_type_iiib(g, static_cast<std::size_t>(cfg.max_len));
    Pbf4Space p4 = pbf4_space(field);
    bool independent = p4.rank == p4.x.rows();

    Verifier v{cfg.verify_paper, {}};
    if (const ReferenceRow *ref = reference_row(field.n()))
        v.expect("dim(PBF_4)", static_cast<int64_t>(p4.dim), ref->dim_pbf4);
    if (!independent) err << "error: low-weight generator rows are not independent\n";

    if (!cfg.out_path.empty()) {
        std::string lines;
        auto dump = [&](const NonDecompPbf &nd) {
            json j{{"kind", nd_kind_name(nd.kind)}, {"tt", nd.f.to_hex()}, {"witness", nd.witness}};
            lines += j.dump() + "\n";
        };
        for (uint32_t b = 0; b < field.size(); b += 2)
            if (part.cls[b] == 1) dump(make_type_i(part, Fe{b}));
        for (const auto &ts : g.verts)
            if (!ts.fat) dump(make_type_ii(part, ts));
        for (const auto &nd : iiia) dump(nd);
        for (const auto &nd : iiib) dump(nd);
        if (!write_file(cfg.out_path, lines, err)) return 2;
    }

    if (cfg.format == "json") {
        json j{{"config", config_json(cfg, &field)},
               {"max_len", cfg.max_len},
               {"type_i", type_i},
               {"type_ii", slim},
               {"type_iiia", iiia.size()},
               {"type_iiib", iiib.size()},
               {"dim_pbf4", p4.dim},
               {"rank_x", p4.rank},
               {"rows_x", p4.x.rows()},
               {"rows_independent", independent}};
        int rc = v.finish(out, err, &j);
        out << j.dump(2) << "\n";
        return independent ? rc : 1;
    }
    out << "n=" << field.n() << " poly=" << poly_str(field) << "\n";
    out << "type-i: " << type_i << "\n";
    out << "type-ii: " << slim << "\n";
    out << "type-iiia (chains up to " << cfg.max_len << "): " << iiia.size() << "\n";
    out << "type-iiib (chains up to " << cfg.max_len << "): " << iiib.size() << "\n";
    out << "dim(PBF_4)=" << p4.dim << " rank(X)=" << p4.rank << "/" << p4.x.rows() << "\n";
    int rc = v.finish(out, err, nullptr);
    return independent ? rc : 1;
}

// ----------------------------------------------------------------- sbox ---

// Reads a hex truth table, ignoring whitespace; reports the byte offset of
// the first bad character.
BooleanFunction read_pbf_file(const FieldSpec &field, const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    std::string digits;
    for (std::size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(path + ": invalid character '" + std::string(1, c) +
                                        "' at byte offset " + std::to_string(i));
        digits += c;
    }
    std::size_t want = (field.size() + 3) / 4;
    if (digits.size() != want)
        throw std::invalid_argument(path + ": expected " + std::to_string(want) +
                                    " hex digits, got " + std::to_string(digits.size()));
    return BooleanFunction::from_hex(field, digits);
}

int cmd_sbox(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (int rc = even_n_or_fail(cfg, err, 6, 30)) return rc;
    FieldSpec field = make_field(cfg);
    ConstraintSystem cs = build_constraints(field);
    USet u = enumerate_U(field);

    BooleanFunction f = BooleanFunction::zero(field);
    if (!cfg.in_path.empty()) {
        f = read_pbf_file(field, cfg.in_path);
    } else {
        PbfSpace space = pbf_space(cs);
        f = sample_pbf(space, cfg.seed);
    }

    if (auto bad = pbf_violation(f, cs)) {
        err << "error: input is not a preferred Boolean function: " << *bad << "\n";
        return 1;
    }

    VectorialFunction g = construct_g(f, u);
    DdtSummary d = ddt(g);
    WalshSummary w = walsh(g);
    int deg = algebraic_degree(g);
    CczInvariants inv{d.spectrum, w.extended_spectrum, deg};

    std::string lut_path = cfg.out_path.empty() ? "sbox_lut.txt" : cfg.out_path;
    std::string lut_text;
    for (uint32_t a = 0; a < field.size(); ++a)
        lut_text += field.element_hex(Fe{g.lut[a]}) + "\n";
    if (!write_file(lut_path, lut_text, err)) return 2;

    json spec_d = json::object(), spec_w = json::object();
    for (const auto &[k, c] : d.spectrum) spec_d[std::to_string(k)] = c;
    for (const auto &[k, c] : w.extended_spectrum) spec_w[std::to_string(k)] = c;
    std::ostringstream fp;
    fp << std::hex << std::setw(16) << std::setfill('0') << inv.fingerprint();
    json j{{"config", config_json(cfg, &field)},
           {"pbf_tt", f.to_hex()},
           {"permutation", is_permutation(g)},
           {"delta", d.max},
           {"spectrum", spec_d},
           {"nl", w.nonlinearity},
           {"walsh_spectrum", spec_w},
           {"degree", deg},
           {"fingerprint", fp.str()}};
    if (!write_file(lut_path + ".json", j.dump(2) + "\n", err)) return 2;

    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << "pbf weight=" << f.weight() << " tt=" << f.to_hex() << "\n";
        out << "lut written to " << lut_path << " (analysis: " << lut_path << ".json)\n";
        out << "permutation=" << (is_permutation(g) ? "yes" : "no") << " delta=" << d.max
            << " nl=" << w.nonlinearity << " degree=" << deg << " fingerprint=" << fp.str()
            << "\n";
    }
    return (is_permutation(g) && d.max <= 4) ? 0 : 1;
}

// ------------------------------------------------------------- formulas ---

int cmd_formulas(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.n % 2 != 0 || cfg.n < 4 || cfg.n > 40) {
        err << "error: --n must be even and in [4, 40]\n";
        return 2;
    }
    CountingRecord rec = counting_formulas(static_cast<unsigned>(cfg.n));

    Verifier v{cfg.verify_paper, {}};
    struct {
        unsigned n;
        int64_t ccz;
    } ccz_refs[] = {{12, 766}, {14, 4650}, {16, 20790}};
    for (const auto &r : ccz_refs)
        if (r.n == rec.n) v.expect("log2_ccz_lower", rec.log2_ccz_lower, r.ccz);

    if (cfg.format == "json") {
        json j{{"config", config_json(cfg, nullptr)},
               {"log2_pf_per_pbf", rec.log2_pf_per_pbf},
               {"log2_ccz_lower", rec.log2_ccz_lower},
               {"nl_lower", rec.nl_lower},
               {"expected_rank", rec.expected_rank},
               {"dim_pf", rec.dim_pf}};
        int rc = v.finish(out, err, &j);
        out << j.dump(2) << "\n";
        return rc;
    }
    out << "n=" << rec.n << "\n";
    out << "log2_pf_per_pbf=" << rec.log2_pf_per_pbf << "\n";
    out << "log2_ccz_lower=" << rec.log2_ccz_lower << "\n";
    out << "nl_lower=" << rec.nl_lower << "\n";
    out << "expected_rank=" << rec.expected_rank << "\n";
    out << "dim_pf=" << rec.dim_pf << "\n";
    return v.finish(out, err, nullptr);
}

} // namespace

int cli_run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"differentially 4-uniform S-boxes from preferred Boolean functions"};
    app.require_subcommand(1);

    RunConfig cfg;
    int which = 0;
    auto *space = app.add_subcommand("space", "PBF space: constraint ranks and dimensions");
    add_common_options(space, cfg, false, 0);
    space->callback([&] { which = 1; });
    auto *graph = app.add_subcommand("graph", "triple-set graph statistics");
    add_common_options(graph, cfg, false, 0);
    graph->callback([&] { which = 2; });
    auto *sample = app.add_subcommand("sample", "nonlinearity survey over sampled PBFs");
    add_common_options(sample, cfg, true, 1000);
    sample->callback([&] { which = 3; });
    auto *nondec = app.add_subcommand("nondecomp", "non-decomposable PBFs and the PBF_4 space");
    add_common_options(nondec, cfg, false, 0);
    nondec->callback([&] { which = 4; });
    auto *sbox = app.add_subcommand("sbox", "build one S-box from a PBF and analyze it");
    add_common_options(sbox, cfg, false, 0);
    sbox->add_option("--in", cfg.in_path, "hex truth-table file (default: sample with --seed)");
    sbox->callback([&] { which = 5; });
    auto *formulas = app.add_subcommand("formulas", "closed-form counting record");
    add_common_options(formulas, cfg, false, 0);
    formulas->callback([&] { which = 6; });

    std::vector<const char *> argv;
    argv.push_back("pbftool");
    for (const auto &a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        switch (which) {
        case 1: return cmd_space(cfg, out, err);
        case 2: return cmd_graph(cfg, out, err);
        case 3: return cmd_sample(cfg, out, err);
        case 4: return cmd_nondecomp(cfg, out, err);
        case 5: return cmd_sbox(cfg, out, err);
        case 6: return cmd_formulas(cfg, out, err);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace pbf
