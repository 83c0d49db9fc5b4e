#include "dbldom/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dbldom/constructions.hpp"
#include "dbldom/families.hpp"
#include "dbldom/verifier.hpp"

namespace dbldom::cli {

namespace {

using nlohmann::json;

enum class OutputFormat { Human, Json, Graph6, EdgeList };

/// Raised inside command handlers to leave with a specific status.
struct Exit {
    int code;
    std::string message;
};

OutputFormat parse_format(const std::string& text) {
    if (text == "human") return OutputFormat::Human;
    if (text == "json") return OutputFormat::Json;
    if (text == "graph6") return OutputFormat::Graph6;
    if (text == "edgelist") return OutputFormat::EdgeList;
    throw Exit{kInputError, "unknown format '" + text + "' (human, json, graph6, edgelist)"};
}

Graph load_graph(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return read_graph(in);
        std::ifstream file(path);
        if (!file) throw Exit{kInputError, "cannot open '" + path + "'"};
        return read_graph(file);
    } catch (const ParseError& e) {
        throw Exit{kInputError, (path == "-" ? std::string("<stdin>") : path) + ": " + e.what()};
    }
}

json set_json(VertexSet s) { return s.to_vector(); }

std::vector<ParameterKind> parse_params(const std::vector<std::string>& names) {
    if (names.empty()) return ParameterKind::core();
    std::vector<ParameterKind> out;
    for (const std::string& group : names) {
        std::stringstream ss(group);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            auto kind = ParameterKind::parse(name);
            if (!kind) {
                throw Exit{kInputError, "unknown parameter '" + name +
                                            "' (gamma, gamma<k>, gamma_x<k>, gamma_t, i, alpha, beta)"};
            }
            out.push_back(*kind);
        }
    }
    return out;
}

int cmd_compute(const std::string& input, const std::vector<std::string>& param_names, OutputFormat format,
                std::istream& in, std::ostream& out, std::ostream& err) {
    const std::vector<ParameterKind> params = parse_params(param_names);
    const Graph g = load_graph(input, in);
    int status = kOk;
    json rows = json::array();
    std::ostringstream human;
    human << "graph: n=" << g.order() << " m=" << g.edge_count() << " graph6=" << graph6_encode(g) << '\n';
    for (ParameterKind kind : params) {
        if (auto why = infeasibility_reason(kind, g)) {
            err << "error: " << *why << '\n';
            status = kInfeasible;
            rows.push_back({{"name", kind.name()}, {"error", *why}});
            human << kind.name() << " = undefined (" << *why << ")\n";
            continue;
        }
        const ParameterResult r = solve(kind, g);
        rows.push_back({{"name", kind.name()}, {"value", r.value}, {"witness", set_json(r.witness)}});
        human << kind.name() << " = " << r.value << "  witness " << r.witness.to_string() << '\n';
    }
    if (format == OutputFormat::Json) {
        out << json{{"n", g.order()}, {"m", g.edge_count()}, {"graph6", graph6_encode(g)}, {"parameters", rows}}
                   .dump(2)
            << '\n';
    } else {
        out << human.str();
    }
    return status;
}

int cmd_certify(const std::string& input, const std::string& theorem, OutputFormat format, std::istream& in,
                std::ostream& out, std::ostream& err) {
    const auto id = parse_construction(theorem);
    if (!id) {
        throw Exit{kInputError,
                   "unknown theorem '" + theorem + "' (alpha-gamma, beta-gamma, gamma2-gamma, total-gamma)"};
    }
    const Graph g = load_graph(input, in);
    if (auto why = construction_gate(*id, g)) throw Exit{kInfeasible, std::string(to_string(*id)) + ": " + *why};

    const CertifyOutcome result = certify(*id, g);
    const ConstructionCertificate& c = result.certificate;
    if (format == OutputFormat::Json) {
        out << json{{"theorem", std::string(to_string(*id))},
                    {"n", g.order()},
                    {"graph6", graph6_encode(g)},
                    {"S", set_json(c.input_s)},
                    {"D", set_json(c.input_d)},
                    {"forced", set_json(c.forced)},
                    {"W", set_json(c.result_w)},
                    {"augmented", set_json(c.augmented)},
                    {"size", c.result_w.size()},
                    {"size_bound", c.size_bound},
                    {"theorem_bound", result.theorem_bound},
                    {"witnesses_optimal", result.witnesses_optimal},
                    {"verdict", result.valid ? "OK" : "FAILED"}}
                   .dump(2)
            << '\n';
    } else {
        out << "theorem: " << to_string(*id) << '\n'
            << "S = " << c.input_s.to_string() << '\n'
            << "D = " << c.input_d.to_string() << '\n';
        if (!c.forced.empty()) out << "forced = " << c.forced.to_string() << '\n';
        out << "W' = " << c.result_w.to_string() << '\n'
            << "|W'| = " << c.result_w.size() << ", bound = " << c.size_bound
            << ", theorem bound = " << result.theorem_bound << '\n'
            << "verdict: " << (result.valid ? "OK" : "FAILED") << '\n';
    }
    if (!result.valid) {
        err << "error: certificate failed verification\n";
        return kViolation;
    }
    return kOk;
}

std::int64_t parse_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Exit{kInputError, std::string("invalid ") + what + " '" + text + "'"};
    }
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        if (!text.empty() && text.front() == '-') throw std::invalid_argument(text);
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw Exit{kInputError, "invalid seed '" + text + "'"};
    }
}

/// "0.5" or "1/2".
double parse_probability(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        double p = 0.0;
        if (slash == std::string::npos) {
            p = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string num = text.substr(0, slash);
            const std::string den = text.substr(slash + 1);
            const double a = std::stod(num, &used);
            if (used != num.size()) throw std::invalid_argument(text);
            const double b = std::stod(den, &used);
            if (used != den.size() || b == 0.0) throw std::invalid_argument(text);
            p = a / b;
        }
        return p;
    } catch (const std::exception&) {
        throw Exit{kInputError, "invalid edge probability '" + text + "'"};
    }
}

json family_sweep(int jobs, ScanReport& report) {
    std::vector<FamilySpec> specs;
    for (int t = 2; t <= 6; ++t) {
        for (int r = 1; r <= t - 1; ++r) specs.push_back(FamilySpec::h(t, r));
    }
    for (int r = 2; r <= 4; ++r) specs.push_back(FamilySpec::h_prime(r));

    std::vector<Graph> graphs;
    json rows = json::array();
    for (const FamilySpec& spec : specs) {
        const FamilyMember m = generate(spec);
        json mismatches = json::array();
        for (const FixtureMismatch& mm : check_expected(m)) {
            mismatches.push_back({{"name", mm.name}, {"expected", mm.expected}, {"actual", mm.actual}});
        }
        json expected = json::object();
        for (const auto& [name, value] : m.expected.entries()) expected[name] = value;
        rows.push_back({{"family", spec.label()},
                        {"n", m.graph.order()},
                        {"graph6", graph6_encode(m.graph)},
                        {"expected", expected},
                        {"mismatches", mismatches}});
        graphs.push_back(m.graph);
    }
    report = scan_graphs(graphs, jobs);
    report.mode = "family-sweep";
    return rows;
}

int cmd_verify(const std::vector<std::string>& args, const std::string& out_path, int jobs,
               const std::optional<std::string>& seed_flag, std::ostream& out, std::ostream& err) {
    if (args.empty()) throw Exit{kInputError, "verify needs a mode: exhaustive, random, trees or family-sweep"};
    const std::string& mode = args[0];
    auto expect_args = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (args.size() < lo || args.size() > hi) throw Exit{kInputError, std::string("usage: verify ") + usage};
    };

    ScanReport report;
    json families;
    bool fixtures_ok = true;
    try {
        if (mode == "exhaustive") {
            expect_args(2, 2, "exhaustive N");
            report = scan_exhaustive(static_cast<int>(parse_int(args[1], "order")), jobs);
        } else if (mode == "random") {
            expect_args(4, 5, "random N COUNT PROB [SEED]");
            std::uint64_t seed = args.size() == 5 ? parse_seed(args[4]) : 0;
            if (seed_flag) seed = parse_seed(*seed_flag);
            report = scan_random(static_cast<int>(parse_int(args[1], "order")), parse_int(args[2], "count"),
                                 parse_probability(args[3]), seed, jobs);
        } else if (mode == "trees") {
            expect_args(3, 4, "trees N COUNT [SEED]");
            std::uint64_t seed = args.size() == 4 ? parse_seed(args[3]) : 0;
            if (seed_flag) seed = parse_seed(*seed_flag);
            report = scan_random_trees(static_cast<int>(parse_int(args[1], "order")), parse_int(args[2], "count"),
                                       seed, jobs);
        } else if (mode == "family-sweep") {
            expect_args(1, 1, "family-sweep");
            families = family_sweep(jobs, report);
            for (const json& row : families) fixtures_ok = fixtures_ok && row["mismatches"].empty();
        } else {
            throw Exit{kInputError, "unknown verify mode '" + mode + "'"};
        }
    } catch (const Error& e) {
        if (e.code() == Errc::OrderTooLargeForExhaustive || e.code() == Errc::PreconditionViolated) {
            throw Exit{kInfeasible, std::string("budget exceeded: ") + e.what()};
        }
        throw;
    }

    json doc = report.to_json();
    if (!families.is_null()) doc["families"] = families;
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Exit{kInputError, "cannot write '" + out_path + "'"};
        file << text;
    }
    if (!report.clean() || !fixtures_ok) {
        err << "verify: violations found\n";
        return kViolation;
    }
    return kOk;
}

std::optional<FamilySpec> family_from_name(std::string name, int t, int r, int n) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    if (name == "h") return FamilySpec::h(t, r);
    if (name == "hprime" || name == "h'") return FamilySpec::h_prime(r);
    if (name == "complete") return FamilySpec::complete(n);
    if (name == "star") return FamilySpec::star(n);
    if (name == "path") return FamilySpec::path(n);
    if (name == "cycle") return FamilySpec::cycle(n);
    if (name == "complete-pendant" || name == "completepluspendant") return FamilySpec::complete_plus_pendant(n);
    if (name == "figure3") return FamilySpec::figure3();
    return std::nullopt;
}

int cmd_family(const std::string& name, int t, int r, int n, OutputFormat format, std::ostream& out) {
    const auto spec = family_from_name(name, t, r, n);
    if (!spec) {
        throw Exit{kInputError, "unknown family '" + name +
                                    "' (H, Hprime, complete, star, path, cycle, complete-pendant, figure3)"};
    }
    FamilyMember m = [&] {
        try {
            return generate(*spec);
        } catch (const Error& e) {
            throw Exit{kInfeasible, e.what()};
        }
    }();

    if (format == OutputFormat::Json) {
        json expected = json::object();
        for (const auto& [key, value] : m.expected.entries()) expected[key] = value;
        json edges = json::array();
        for (auto [u, v] : m.graph.edges()) edges.push_back({u, v});
        out << json{{"family", spec->label()},
                    {"n", m.graph.order()},
                    {"m", m.graph.edge_count()},
                    {"graph6", graph6_encode(m.graph)},
                    {"edges", edges},
                    {"expected", expected}}
                   .dump(2)
            << '\n';
        return kOk;
    }
    out << "# " << spec->label() << '\n';
    for (const auto& [key, value] : m.expected.entries()) out << "# expected " << key << " = " << value << '\n';
    if (format == OutputFormat::Graph6) {
        out << graph6_encode(m.graph) << '\n';
    } else {
        out << write_edge_list(m.graph);
    }
    return kOk;
}

int cmd_check(const std::string& input, OutputFormat format, std::istream& in, std::ostream& out) {
    const Graph g = load_graph(input, in);
    ParameterCache cache(g);
    const auto checks = check_all(cache);
    json rows = json::array();
    bool violated = false;
    for (const TheoremCheck& c : checks) {
        violated = violated || c.violated();
        if (format == OutputFormat::Json) {
            json w = json::object();
            for (const auto& [k, s] : c.witnesses) w[k] = set_json(s);
            rows.push_back({{"id", std::string(to_string(c.id))},
                            {"applicable", c.applicable},
                            {"lhs", c.lhs},
                            {"rhs", c.rhs},
                            {"slack", c.slack},
                            {"tight", c.tight},
                            {"witnesses", w}});
        } else if (c.applicable) {
            out << to_string(c.id) << ": " << statement(c.id) << "  lhs=" << c.lhs << " rhs=" << c.rhs
                << " slack=" << c.slack << (c.tight ? " tight" : "") << (c.violated() ? " VIOLATED" : "") << '\n';
        } else {
            out << to_string(c.id) << ": not applicable\n";
        }
    }
    if (format == OutputFormat::Json) out << json{{"graph6", graph6_encode(g)}, {"checks", rows}}.dump(2) << '\n';
    return violated ? kViolation : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double domination toolkit: exact parameters, certified constructions, bound scans"};
    app.name("dbldom");
    app.require_subcommand(1);

    std::string input = "-";
    std::string format_text;
    std::vector<std::string> params;
    std::string theorem;
    std::vector<std::string> verify_args;
    std::string out_path;
    int jobs = 0;
    std::string seed_text;
    std::string family_name;
    int fam_t = 0, fam_r = 0, fam_n = 0;

    auto* compute = app.add_subcommand("compute", "Compute parameters with witness sets");
    compute->add_option("input", input, "Edge-list or graph6 file, '-' for stdin");
    compute->add_option("--params", params, "Comma-separated: gamma, gamma2, gamma_x2, gamma_t, i, alpha, beta");
    compute->add_option("--format", format_text, "human | json");

    auto* certify_cmd = app.add_subcommand("certify", "Run a constructive bound and verify the result");
    certify_cmd->add_option("input", input, "Edge-list or graph6 file, '-' for stdin");
    certify_cmd->add_option("--theorem", theorem, "alpha-gamma | beta-gamma | gamma2-gamma | total-gamma")
        ->required();
    certify_cmd->add_option("--format", format_text, "human | json");

    auto* check = app.add_subcommand("check", "Evaluate every bound on one graph");
    check->add_option("input", input, "Edge-list or graph6 file, '-' for stdin");
    check->add_option("--format", format_text, "human | json");

    auto* verify = app.add_subcommand(
        "verify", "Scan graphs for bound violations: exhaustive N | random N COUNT PROB [SEED] | "
                  "trees N COUNT [SEED] | family-sweep");
    verify->add_option("mode", verify_args, "Mode and its arguments")->required();
    verify->add_option("--out", out_path, "Report path (default stdout)");
    verify->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
    verify->add_option("--seed", seed_text, "Seed for random modes");

    auto* family = app.add_subcommand("family", "Emit a named graph or family member");
    family->add_option("name", family_name, "H | Hprime | complete | star | path | cycle | complete-pendant | figure3")
        ->required();
    family->add_option("--t", fam_t, "t for H");
    family->add_option("--r", fam_r, "r for H and Hprime");
    family->add_option("--n", fam_n, "order for the named graphs");
    family->add_option("--format", format_text, "graph6 | edgelist | json | human");

    std::vector<std::string> argv_storage{"dbldom"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(input, params, parse_format(format_text.empty() ? "human" : format_text), in, out,
                               err);
        }
        if (certify_cmd->parsed()) {
            return cmd_certify(input, theorem, parse_format(format_text.empty() ? "human" : format_text), in, out,
                               err);
        }
        if (check->parsed()) {
            return cmd_check(input, parse_format(format_text.empty() ? "human" : format_text), in, out);
        }
        if (verify->parsed()) {
            std::optional<std::string> seed_flag;
            if (!seed_text.empty()) seed_flag = seed_text;
            return cmd_verify(verify_args, out_path, jobs, seed_flag, out, err);
        }
        if (family->parsed()) {
            return cmd_family(family_name, fam_t, fam_r, fam_n,
                              parse_format(format_text.empty() ? "graph6" : format_text), out);
        }
    } catch (const Exit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::ParseError ? kInputError : kInfeasible;
    }
    return kInputError;
}

}  // namespace dbldom::cli
