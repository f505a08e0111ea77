#include "cli.hpp"

#include <CLI11.hpp>

#include <netctrl/controllability.hpp>
#include <netctrl/designer.hpp>
#include <netctrl/destructive.hpp>
#include <netctrl/error.hpp>
#include <netctrl/graph.hpp>
#include <netctrl/io.hpp>
#include <netctrl/polynomial.hpp>
#include <netctrl/verifier.hpp>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace netctrl::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Payload goes to the --output file when given, to stdout otherwise.
void emit(const std::string& payload, const std::string& outputPath, std::ostream& out) {
    if (outputPath.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(outputPath, std::ios::binary);
    if (!f) fail(ErrorCode::ParseError, "cannot open '" + outputPath + "' for writing");
    f << payload;
    f.flush();
    if (!f) fail(ErrorCode::ParseError, "cannot write '" + outputPath + "'");
}

// "i,j,k" with 1-based labels -> distinct 0-based vertices, ascending.
std::vector<int> parse_leader_list(const std::string& csv, int n) {
    std::vector<int> leaders;
    uint64_t seen = 0;
    std::istringstream fields(csv);
    std::string tok;
    while (std::getline(fields, tok, ',')) {
        size_t pos = 0;
        long long v = -1;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            fail(ErrorCode::InvalidLeader, "leader token '" + tok + "' is not an integer");
        if (v < 1 || v > n)
            fail(ErrorCode::InvalidLeader, "leader " + tok + " out of range 1.." + std::to_string(n));
        if ((seen >> (v - 1)) & 1u) fail(ErrorCode::InvalidLeader, "duplicate leader " + tok);
        seen |= uint64_t(1) << (v - 1);
        leaders.push_back(static_cast<int>(v - 1));
    }
    if (leaders.empty() && !csv.empty())
        fail(ErrorCode::InvalidLeader, "leader list '" + csv + "' holds no labels");
    std::sort(leaders.begin(), leaders.end());
    return leaders;
}

std::string rational_vec_str(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << "]";
    return os.str();
}

std::string field_vec_str(const std::vector<FieldElement>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

std::string edge_line(const Graph& g) {
    std::ostringstream os;
    for (auto [u, v] : g.edges()) os << " " << (u + 1) << "-" << (v + 1);
    return os.str();
}

[[noreturn]] void fail_qcd_size(int n) {
    fail(ErrorCode::WrongSize,
         "quad certificates are defined on five-vertex graphs only (n = " + std::to_string(n) +
             " here): a four-vertex support must exclude exactly one vertex");
}

// ---- analyze ----------------------------------------------------------

struct AnalyzeArgs {
    std::string input, output, leaders;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
    Graph g = parse_edge_list(read_file(a.input));
    std::vector<int> leaders = parse_leader_list(a.leaders, g.n);
    if (leaders.empty()) fail(ErrorCode::InvalidLeader, "at least one leader is required");
    ControllabilityReport report = controllability_report(g, leaders);
    emit(serialize_report(report), a.output, out);
    (void)err;
    return report.kalmanControllable ? 0 : 10;
}

// ---- detect ------------------------------------------------------------

struct DetectArgs {
    std::string input, output, kind;
};

std::string detect_payload(const Graph& g, const std::string& kind) {
    bool wantDcd = kind == "dcd" || kind == "all";
    bool wantTcd = kind == "tcd" || kind == "all";
    bool wantQcd = kind == "qcd" || kind == "all";
    if (kind == "qcd" && g.n != 5) fail_qcd_size(g.n);

    std::ostringstream os;
    os << "netctrl.detect.v1\n";
    os << "n: " << g.n << "\n";
    os << "edges:" << edge_line(g) << "\n";
    os << "kind: " << kind << "\n";
    if (wantDcd) {
        std::vector<DcdCertificate> pairs = all_dcd_pairs(g);
        os << "dcd_pairs: " << pairs.size() << "\n";
        for (size_t i = 0; i < pairs.size(); ++i) {
            const DcdCertificate& c = pairs[i];
            os << "dcd " << (i + 1) << ": pair " << (c.p + 1) << "," << (c.q + 1)
               << (c.adjacentPair ? " adjacent" : " separate") << " lambda=" << c.eigenvalue
               << " vector=" << rational_vec_str(c.vec) << "\n";
        }
    }
    if (wantTcd) {
        std::vector<TcdCertificate> triples = all_tcd_triples(g);
        os << "tcd_triples: " << triples.size() << "\n";
        for (size_t i = 0; i < triples.size(); ++i) {
            const TcdCertificate& c = triples[i];
            os << "tcd " << (i + 1) << ": triple " << (c.p + 1) << "," << (c.q + 1) << ","
               << (c.r + 1) << " class=" << tcd_class_str(c.topologyClass)
               << " lambda=" << c.eigenvalue << " vector=" << rational_vec_str(c.vec) << "\n";
        }
    }
    if (wantQcd) {
        if (g.n != 5) {
            os << "qcd_quads: skipped (quad certificates are defined for n = 5 only, n = " << g.n
               << " here)\n";
        } else {
            QcdCatalog catalog = derive_qcd_catalog();
            std::vector<QcdCertificate> quads = qcd_quads_5(g, catalog);
            os << "qcd_quads: " << quads.size() << "\n";
            for (size_t i = 0; i < quads.size(); ++i) {
                const QcdCertificate& c = quads[i];
                os << "qcd " << (i + 1) << ": quad " << (c.quad[0] + 1) << "," << (c.quad[1] + 1)
                   << "," << (c.quad[2] + 1) << "," << (c.quad[3] + 1) << " excluded=" << (c.k + 1)
                   << " lambda=" << c.eigenvalue.str();
                if (c.eigenvalue.field())
                    os << " modulus=" << poly_str(c.eigenvalue.field()->modulus());
                os << " vector=" << field_vec_str(c.vec) << "\n";
            }
        }
    }
    return os.str();
}

int cmd_detect(const DetectArgs& a, std::ostream& out) {
    Graph g = parse_edge_list(read_file(a.input));
    if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "detect needs a connected graph");
    emit(detect_payload(g, a.kind), a.output, out);
    return 0;
}

// ---- design ------------------------------------------------------------

struct DesignArgs {
    std::string input, output;
    std::vector<std::string> random; // N SEED when present
};

std::string design_payload(const QcdDesignSpec& spec) {
    DesignOutput built = build_design(spec);

    // Independent re-check of the certificate before stamping the report.
    std::vector<FieldElement> eta;
    eta.reserve(built.eta.size());
    for (const Rational& r : built.eta) eta.emplace_back(r);
    for (const FieldElement& res :
         eigencondition_residual(built.graph, FieldElement(built.eigenvalue), eta))
        if (!res.is_zero())
            fail(ErrorCode::InconsistentTests, "designed eigenpair failed the residual re-check");

    auto indented = [](const std::string& block) {
        std::istringstream in(block);
        std::string line, outText;
        while (std::getline(in, line)) outText += "  " + line + "\n";
        return outText;
    };

    std::ostringstream os;
    os << "netctrl.design.v1\n";
    os << "spec:\n" << indented(serialize_design_spec(spec));
    os << "graph:\n" << indented(serialize_edge_list(built.graph));
    os << "eta: " << rational_vec_str(built.eta) << "\n";
    os << "lambda: " << built.eigenvalue << "\n";
    os << "sigma: " << Integer(built.eigenvalue - 4) << "\n";
    os << "stamp: exact eigenpair check passed (L*eta = lambda*eta)\n";
    return os.str();
}

int cmd_design(const DesignArgs& a, std::ostream& out) {
    if (a.input.empty() == a.random.empty())
        fail(ErrorCode::InvalidSpec, "design needs exactly one of --input SPECFILE or --random N SEED");
    QcdDesignSpec spec;
    if (!a.input.empty()) {
        spec = parse_design_spec(read_file(a.input));
    } else {
        size_t posN = 0, posS = 0;
        int n = 0;
        uint64_t seed = 0;
        try {
            n = std::stoi(a.random[0], &posN);
            seed = std::stoull(a.random[1], &posS);
        } catch (const std::exception&) {
            posN = 0;
        }
        if (posN != a.random[0].size() || posS != a.random[1].size() || posN == 0)
            fail(ErrorCode::InvalidSpec,
                 "--random expects an integer size and seed, got '" + a.random[0] + " " + a.random[1] + "'");
        spec = random_design(n, seed);
    }
    emit(design_payload(spec), a.output, out);
    return 0;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
    std::string suite, output;
    std::optional<int> n;
    uint64_t seed = kDefaultVerifySeed;
};

std::vector<VerificationRun> run_suite(const std::string& suite, const VerifyArgs& a) {
    std::vector<VerificationRun> runs;
    if (suite == "prop1") {
        if (a.n) runs.push_back(verify_prop1(*a.n, a.seed));
        else
            for (int n = 2; n <= 5; ++n) runs.push_back(verify_prop1(n, a.seed));
    } else if (suite == "t1") {
        if (a.n) runs.push_back(verify_t1(*a.n));
        else
            for (int n = 2; n <= 5; ++n) runs.push_back(verify_t1(n));
    } else if (suite == "t2") {
        if (a.n) runs.push_back(verify_t2(*a.n));
        else
            for (int n = 4; n <= 5; ++n) runs.push_back(verify_t2(n));
    } else if (suite == "fact1") {
        if (a.n) runs.push_back(verify_fact1(*a.n, a.seed));
        else
            for (int n = 3; n <= 5; ++n) runs.push_back(verify_fact1(n, a.seed));
    } else if (suite == "t4") {
        if (a.n && *a.n != 5)
            fail(ErrorCode::WrongSize, "suite t4 runs on five-vertex graphs only");
        runs.push_back(verify_t4(derive_qcd_catalog()));
    } else {
        fail(ErrorCode::UnknownSuite,
             "unknown suite '" + suite + "' (expected prop1, t1, t2, fact1, t4, or all)");
    }
    return runs;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    std::vector<VerificationRun> runs;
    if (a.suite == "all") {
        if (a.n)
            fail(ErrorCode::UnknownSuite,
                 "--n selects a size within one suite; it cannot be combined with 'all'");
        for (const char* s : {"prop1", "t1", "t2", "fact1", "t4"})
            for (VerificationRun& r : run_suite(s, a)) runs.push_back(std::move(r));
    } else {
        runs = run_suite(a.suite, a);
    }
    std::string payload;
    long long defects = 0;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (i) payload += "\n";
        payload += serialize_run(runs[i]);
        defects += static_cast<long long>(runs[i].counterexamples.size());
    }
    emit(payload, a.output, out);
    return defects == 0 ? 0 : 1;
}

// ---- catalog / enumerate / export-dot -----------------------------------

int cmd_catalog(const std::string& output, std::ostream& out) {
    emit(serialize_catalog(derive_qcd_catalog()), output, out);
    return 0;
}

int cmd_enumerate(int n, const std::string& output, std::ostream& out) {
    if (n < 2 || n > 8)
        fail(ErrorCode::WrongSize, "enumeration covers 2 <= n <= 8, got " + std::to_string(n));
    std::ostringstream os;
    os << "netctrl.enumeration.v1\n";
    os << "n: " << n << "\n";
    os << "count: " << count_connected_graphs(n) << "\n";
    if (n <= 6) {
        long long index = 0;
        enumerate_connected_graphs(n, [&](const Graph& g) {
            os << "graph " << ++index << ":" << edge_line(g) << "\n";
        });
    } else {
        os << "listing: omitted (n > 6, counts only)\n";
    }
    emit(os.str(), output, out);
    return 0;
}

struct ExportArgs {
    std::string input, output, leaders, kind; // kind: none|dcd|tcd|qcd
};

int cmd_export_dot(const ExportArgs& a, std::ostream& out) {
    Graph g = parse_edge_list(read_file(a.input));
    DotAnnotations ann;
    ann.leaders = parse_leader_list(a.leaders, g.n);
    if (a.kind == "dcd") {
        std::vector<DcdCertificate> pairs = all_dcd_pairs(g);
        if (!pairs.empty()) {
            ann.shaded = {pairs[0].p, pairs[0].q};
            for (const Rational& r : pairs[0].vec) {
                std::ostringstream v;
                v << r;
                ann.valueLabels.push_back(v.str());
            }
        }
    } else if (a.kind == "tcd") {
        std::vector<TcdCertificate> triples = all_tcd_triples(g);
        if (!triples.empty()) {
            ann.shaded = {triples[0].p, triples[0].q, triples[0].r};
            std::sort(ann.shaded.begin(), ann.shaded.end());
            for (const Rational& r : triples[0].vec) {
                std::ostringstream v;
                v << r;
                ann.valueLabels.push_back(v.str());
            }
        }
    } else if (a.kind == "qcd") {
        if (g.n != 5) fail_qcd_size(g.n);
        std::vector<QcdCertificate> quads = qcd_quads_5(g, derive_qcd_catalog());
        size_t pick = quads.size();
        for (size_t i = 0; i < quads.size() && pick == quads.size(); ++i)
            for (int leader : ann.leaders)
                if (quads[i].k == leader) {
                    pick = i;
                    break;
                }
        if (pick == quads.size() && !quads.empty()) pick = 0;
        if (pick < quads.size()) {
            const QcdCertificate& c = quads[pick];
            ann.shaded.assign(c.quad.begin(), c.quad.end());
            for (const FieldElement& e : c.vec) ann.valueLabels.push_back(e.str());
        }
    }
    emit(export_dot(g, ann), a.output, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"netctrl: exact controllability analysis of leader-follower networks on undirected graphs"};
    app.name("netctrl");
    app.require_subcommand(1);
    app.footer("exit codes: 0 success (analyze: controllable; verify: no counterexamples),\n"
               "            1 verify found counterexamples, 2 usage or input error,\n"
               "            10 analyze found the network uncontrollable");

    AnalyzeArgs analyzeArgs;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "decide controllability for a leader set, with exact eigenvector certificates");
    analyze->add_option("--input", analyzeArgs.input, "edge-list file")->required();
    analyze->add_option("--output", analyzeArgs.output, "write the report here instead of stdout");
    analyze->add_option("--leaders", analyzeArgs.leaders, "comma-separated 1-based leader labels")
        ->required();

    DetectArgs detectArgs;
    CLI::App* detect =
        app.add_subcommand("detect", "list destructive-node certificates (pairs, triples, quads)");
    detect->add_option("--input", detectArgs.input, "edge-list file")->required();
    detect->add_option("--output", detectArgs.output, "write the report here instead of stdout");
    detect->add_option("--kind", detectArgs.kind, "dcd, tcd, qcd, or all")
        ->default_val("all")
        ->check(CLI::IsMember({"dcd", "tcd", "qcd", "all"}));

    DesignArgs designArgs;
    CLI::App* design = app.add_subcommand(
        "design", "build a quad-certificate topology from a spec file or a random seed");
    design->add_option("--input", designArgs.input, "design-spec file");
    design->add_option("--output", designArgs.output, "write the report here instead of stdout");
    design->add_option("--random", designArgs.random, "sample a spec: vertex count and seed")
        ->expected(2);

    VerifyArgs verifyArgs;
    CLI::App* verify =
        app.add_subcommand("verify", "sweep the claimed equivalences over small graphs");
    verify->add_option("--suite", verifyArgs.suite, "prop1, t1, t2, fact1, t4, or all")->required();
    int verifyN = 0;
    CLI::Option* verifyNOpt =
        verify->add_option("--n", verifyN, "run one graph size instead of the suite default");
    verify->add_option("--seed", verifyArgs.seed, "seed for the sampled sizes");
    verify->add_option("--output", verifyArgs.output, "write the summaries here instead of stdout");

    std::string catalogOutput;
    CLI::App* catalog =
        app.add_subcommand("catalog", "derive and print the rooted quad-certificate catalog");
    catalog->add_option("--output", catalogOutput, "write the catalog here instead of stdout");

    int enumerateN = 0;
    std::string enumerateOutput;
    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list connected graphs of one size (counts only past n=6)");
    enumerate->add_option("--n", enumerateN, "graph size, 2..8")->required();
    enumerate->add_option("--output", enumerateOutput, "write the listing here instead of stdout");

    ExportArgs exportArgs;
    CLI::App* exportDot = app.add_subcommand(
        "export-dot", "render the graph as DOT, marking leaders and one certificate");
    exportDot->add_option("--input", exportArgs.input, "edge-list file")->required();
    exportDot->add_option("--output", exportArgs.output, "write the DOT text here instead of stdout");
    exportDot->add_option("--leaders", exportArgs.leaders, "draw these vertices as squares");
    exportDot->add_option("--kind", exportArgs.kind, "shade and label one certificate of this kind")
        ->default_val("none")
        ->check(CLI::IsMember({"none", "dcd", "tcd", "qcd"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(analyzeArgs, out, err);
        if (*detect) return cmd_detect(detectArgs, out);
        if (*design) return cmd_design(designArgs, out);
        if (*verify) {
            if (verifyNOpt->count() > 0) verifyArgs.n = verifyN;
            return cmd_verify(verifyArgs, out);
        }
        if (*catalog) return cmd_catalog(catalogOutput, out);
        if (*enumerate) return cmd_enumerate(enumerateN, enumerateOutput, out);
        if (*exportDot) return cmd_export_dot(exportArgs, out);
        err << "error: no command selected\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
}

} // namespace netctrl::cli
