#include "dbldom/verifier.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

namespace dbldom {

std::string_view to_string(TheoremId id) {
    switch (id) {
    case TheoremId::T1_AlphaI: return "T1";
    case TheoremId::T2_AlphaGamma: return "T2";
    case TheoremId::T3_BetaGammaLeaf: return "T3";
    case TheoremId::T4_HararyHaynes: return "T4";
    case TheoremId::T5_Gallai: return "T5";
    case TheoremId::T6_MinAlpha: return "T6";
    case TheoremId::T7_Bonomo: return "T7";
    case TheoremId::T7t_TreeVariant: return "T7t";
    case TheoremId::T8_Gamma2Gamma: return "T8";
    case TheoremId::T9_ClawMin: return "T9";
    case TheoremId::T10_ClawTotalGamma: return "T10";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (TheoremId id : kAllTheorems) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

std::string_view statement(TheoremId id) {
    switch (id) {
    case TheoremId::T1_AlphaI: return "gamma_x2 <= alpha + i";
    case TheoremId::T2_AlphaGamma: return "gamma_x2 <= alpha + gamma";
    case TheoremId::T3_BetaGammaLeaf: return "gamma_x2 <= beta + gamma + |leaves| - |supports|";
    case TheoremId::T4_HararyHaynes: return "gamma_x2 <= floor(n/2) + gamma - 1 (no -1 when n = 3, 5)";
    case TheoremId::T5_Gallai: return "alpha + beta = n";
    case TheoremId::T6_MinAlpha: return "gamma_x2 <= min(alpha, n - alpha) + gamma";
    case TheoremId::T7_Bonomo: return "gamma_x2 <= 2 gamma2 - 1";
    case TheoremId::T7t_TreeVariant: return "gamma_x2 <= 2 gamma2 - 2 (trees, n >= 4)";
    case TheoremId::T8_Gamma2Gamma: return "gamma_x2 <= gamma2 + gamma";
    case TheoremId::T9_ClawMin: return "gamma_x2 <= min(2 gamma_t, 3 gamma)";
    case TheoremId::T10_ClawTotalGamma: return "gamma_x2 <= gamma_t + gamma";
    }
    return "?";
}

bool TheoremCheck::violated() const {
    if (!applicable) return false;
    return id == TheoremId::T5_Gallai ? lhs != rhs : lhs > rhs;
}

const ParameterResult& ParameterCache::get(ParameterKind kind) {
    auto it = cache_.find(kind);
    if (it == cache_.end()) {
        ++solves_;
        it = cache_.emplace(kind, solve(kind, g_)).first;
    }
    return it->second;
}

bool theorem_applicable(TheoremId id, const GraphProfile& p, int n) {
    switch (id) {
    case TheoremId::T1_AlphaI:
    case TheoremId::T2_AlphaGamma:
    case TheoremId::T7_Bonomo:
    case TheoremId::T8_Gamma2Gamma:
        return !p.has_isolated;
    case TheoremId::T3_BetaGammaLeaf: return !p.has_isolated && n >= 3;
    case TheoremId::T4_HararyHaynes:
    case TheoremId::T6_MinAlpha:
        return p.min_degree >= 2;
    case TheoremId::T5_Gallai: return true;
    case TheoremId::T7t_TreeVariant: return p.is_tree && n >= 4;
    case TheoremId::T9_ClawMin:
    case TheoremId::T10_ClawTotalGamma:
        return p.claw_free && !p.has_isolated;
    }
    return false;
}

TheoremCheck check_theorem(TheoremId id, ParameterCache& cache) {
    TheoremCheck c;
    c.id = id;
    const int n = cache.graph().order();
    const GraphProfile& p = cache.profile();
    c.applicable = theorem_applicable(id, p, n);
    if (!c.applicable) return c;

    auto use = [&](ParameterKind kind) {
        const ParameterResult& r = cache.get(kind);
        c.witnesses[kind.name()] = r.witness;
        return r.value;
    };
    const auto gamma = [&] { return use(ParameterKind::domination()); };
    const auto gamma2 = [&] { return use(ParameterKind::k_domination(2)); };
    const auto gamma_t = [&] { return use(ParameterKind::total_domination()); };
    const auto indep_dom = [&] { return use(ParameterKind::independent_domination()); };
    const auto alpha = [&] { return use(ParameterKind::independence()); };
    const auto beta = [&] { return use(ParameterKind::vertex_cover()); };

    if (id == TheoremId::T5_Gallai) {
        c.lhs = alpha() + beta();
        c.rhs = n;
    } else {
        c.lhs = use(ParameterKind::k_tuple_domination(2));
        switch (id) {
        case TheoremId::T1_AlphaI: c.rhs = alpha() + indep_dom(); break;
        case TheoremId::T2_AlphaGamma: c.rhs = alpha() + gamma(); break;
        case TheoremId::T3_BetaGammaLeaf:
            c.rhs = beta() + gamma() + p.leaves.size() - p.supports.size();
            break;
        case TheoremId::T4_HararyHaynes: c.rhs = n / 2 + gamma() - ((n == 3 || n == 5) ? 0 : 1); break;
        case TheoremId::T6_MinAlpha: {
            const int a = alpha();
            c.rhs = std::min(a, n - a) + gamma();
            break;
        }
        case TheoremId::T7_Bonomo: c.rhs = 2 * gamma2() - 1; break;
        case TheoremId::T7t_TreeVariant: c.rhs = 2 * gamma2() - 2; break;
        case TheoremId::T8_Gamma2Gamma: c.rhs = gamma2() + gamma(); break;
        case TheoremId::T9_ClawMin: c.rhs = std::min(2 * gamma_t(), 3 * gamma()); break;
        case TheoremId::T10_ClawTotalGamma: c.rhs = gamma_t() + gamma(); break;
        case TheoremId::T5_Gallai: break;
        }
    }
    c.slack = c.rhs - c.lhs;
    c.tight = c.slack == 0;
    return c;
}

TheoremCheck check_theorem(TheoremId id, const Graph& g) {
    ParameterCache cache(g);
    return check_theorem(id, cache);
}

std::vector<TheoremCheck> check_all(ParameterCache& cache) {
    std::vector<TheoremCheck> out;
    out.reserve(kAllTheorems.size());
    for (TheoremId id : kAllTheorems) out.push_back(check_theorem(id, cache));
    return out;
}

std::vector<TheoremCheck> check_all(const Graph& g) {
    ParameterCache cache(g);
    return check_all(cache);
}

void ScanReport::record(const Graph& g, const std::vector<TheoremCheck>& checks) {
    ++graphs_checked;
    std::string code;
    for (const TheoremCheck& c : checks) {
        if (!c.applicable) continue;
        TheoremStats& s = stats(c.id);
        ++s.applicable_count;
        if (c.tight) ++s.tight_count;
        s.max_slack = s.max_slack ? std::max(*s.max_slack, c.slack) : c.slack;
        if (c.violated()) {
            if (code.empty()) code = graph6_encode(g);
            s.violations.push_back(code);
        }
    }
}

void ScanReport::merge(const ScanReport& other) {
    graphs_checked += other.graphs_checked;
    for (std::size_t k = 0; k < theorems.size(); ++k) {
        TheoremStats& mine = theorems[k];
        const TheoremStats& theirs = other.theorems[k];
        mine.applicable_count += theirs.applicable_count;
        mine.tight_count += theirs.tight_count;
        if (theirs.max_slack) {
            mine.max_slack = mine.max_slack ? std::max(*mine.max_slack, *theirs.max_slack) : theirs.max_slack;
        }
        mine.violations.insert(mine.violations.end(), theirs.violations.begin(), theirs.violations.end());
        std::sort(mine.violations.begin(), mine.violations.end());
    }
}

bool ScanReport::clean() const {
    return std::all_of(theorems.begin(), theorems.end(),
                       [](const TheoremStats& s) { return s.violations.empty(); });
}

nlohmann::json ScanReport::to_json() const {
    nlohmann::json meta = {{"mode", mode}, {"n", n}, {"graphs_checked", graphs_checked}};
    meta["count"] = count ? nlohmann::json(*count) : nlohmann::json(nullptr);
    meta["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    if (edge_prob) meta["edge_prob"] = *edge_prob;

    nlohmann::json rows = nlohmann::json::array();
    for (TheoremId id : kAllTheorems) {
        const TheoremStats& s = stats(id);
        rows.push_back({{"id", std::string(to_string(id))},
                        {"statement", std::string(statement(id))},
                        {"applicable", s.applicable_count},
                        {"tight", s.tight_count},
                        {"max_slack", s.max_slack ? nlohmann::json(*s.max_slack) : nlohmann::json(nullptr)},
                        {"violations", s.violations}});
    }
    return {{"meta", meta}, {"theorems", rows}};
}

namespace {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into contiguous blocks, one per worker, and merges the
/// per-block reports.
ScanReport parallel_scan(std::int64_t total, int jobs,
                         const std::function<void(std::int64_t, std::int64_t, ScanReport&)>& work) {
    const int workers = static_cast<int>(std::min<std::int64_t>(resolve_jobs(jobs), std::max<std::int64_t>(total, 1)));
    std::vector<ScanReport> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::int64_t begin = total * w / workers;
        const std::int64_t end = total * (w + 1) / workers;
        auto body = [&, w, begin, end] {
            try {
                work(begin, end, parts[static_cast<std::size_t>(w)]);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        };
        if (workers == 1) {
            body();
        } else {
            threads.emplace_back(body);
        }
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    ScanReport out;
    for (const ScanReport& part : parts) out.merge(part);
    return out;
}

void check_into(const Graph& g, ScanReport& report) {
    ParameterCache cache(g);
    report.record(g, check_all(cache));
}

}  // namespace

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1U) {
                adj[static_cast<std::size_t>(i)].insert(j);
                adj[static_cast<std::size_t>(j)].insert(i);
            }
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

ScanReport scan_exhaustive(int n, int jobs) {
    if (n < 1 || n > kExhaustiveMaxOrder) {
        throw Error(Errc::OrderTooLargeForExhaustive,
                    "exhaustive scan supports orders 1..7, got " + std::to_string(n));
    }
    const std::int64_t total = std::int64_t{1} << (n * (n - 1) / 2);
    ScanReport report = parallel_scan(total, jobs, [n](std::int64_t begin, std::int64_t end, ScanReport& out) {
        for (std::int64_t mask = begin; mask < end; ++mask) {
            check_into(graph_from_pair_mask(n, static_cast<std::uint64_t>(mask)), out);
        }
    });
    report.mode = "exhaustive";
    report.n = n;
    report.count = total;
    return report;
}

std::vector<Graph> random_graphs(int n, std::int64_t count, double edge_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    const int pairs = n * (n - 1) / 2;
    for (std::int64_t s = 0; s < count; ++s) {
        std::uint64_t mask = 0;
        for (int k = 0; k < pairs; ++k) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < edge_prob) mask |= std::uint64_t{1} << k;
        }
        out.push_back(graph_from_pair_mask(n, mask));
    }
    return out;
}

Graph tree_from_pruefer(int n, const std::vector<int>& sequence) {
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
        throw Error(Errc::PreconditionViolated, "Pruefer sequence must have length n-2 with n >= 2");
    }
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) throw Error(Errc::PreconditionViolated, "Pruefer entry out of range");
        ++degree[static_cast<std::size_t>(x)];
    }
    std::vector<Edge> edges;
    for (int x : sequence) {
        int leaf = 0;
        while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
        edges.emplace_back(leaf, x);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.emplace_back(u, v);
                break;
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> random_trees(int n, std::int64_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t s = 0; s < count; ++s) {
        std::vector<int> seq(static_cast<std::size_t>(std::max(n - 2, 0)));
        for (int& x : seq) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        out.push_back(tree_from_pruefer(n, seq));
    }
    return out;
}

ScanReport scan_graphs(const std::vector<Graph>& graphs, int jobs) {
    ScanReport report = parallel_scan(static_cast<std::int64_t>(graphs.size()), jobs,
                                      [&graphs](std::int64_t begin, std::int64_t end, ScanReport& out) {
                                          for (std::int64_t k = begin; k < end; ++k) {
                                              check_into(graphs[static_cast<std::size_t>(k)], out);
                                          }
                                      });
    report.mode = "list";
    report.count = static_cast<std::int64_t>(graphs.size());
    return report;
}

namespace {

void check_random_args(int n, std::int64_t count, int n_min) {
    if (n < n_min || n > kRandomMaxOrder) {
        throw Error(Errc::PreconditionViolated, "random scan supports orders " + std::to_string(n_min) +
                                                    "..16, got " + std::to_string(n));
    }
    if (count < 1) throw Error(Errc::PreconditionViolated, "random scan needs count >= 1");
}

}  // namespace

ScanReport scan_random(int n, std::int64_t count, double edge_prob, std::uint64_t seed, int jobs) {
    check_random_args(n, count, 1);
    if (!(edge_prob > 0.0 && edge_prob < 1.0)) {
        throw Error(Errc::PreconditionViolated, "edge probability must lie in (0, 1)");
    }
    ScanReport report = scan_graphs(random_graphs(n, count, edge_prob, seed), jobs);
    report.mode = "random";
    report.n = n;
    report.seed = seed;
    report.edge_prob = edge_prob;
    return report;
}

ScanReport scan_random_trees(int n, std::int64_t count, std::uint64_t seed, int jobs) {
    check_random_args(n, count, 2);
    ScanReport report = scan_graphs(random_trees(n, count, seed), jobs);
    report.mode = "trees";
    report.n = n;
    report.seed = seed;
    return report;
}

ImprovementEntry audit_pair(TheoremId improved, TheoremId previous, ParameterCache& cache) {
    const TheoremCheck a = check_theorem(improved, cache);
    const TheoremCheck b = check_theorem(previous, cache);
    if (!a.applicable || !b.applicable) {
        throw Error(Errc::PairNotApplicable, std::string(to_string(improved)) + " vs " +
                                                 std::string(to_string(previous)) +
                                                 ": both theorems must apply to the graph");
    }
    ImprovementEntry e{improved, previous, a.rhs, b.rhs, a.rhs <= b.rhs, a.rhs < b.rhs, std::nullopt};

    // For T6/T4 and T8/T7 the condition is sufficient for a strict gain; for
    // T10/T9 and T2/T1 it is the termwise relation that makes the new bound
    // no worse.
    const int n = cache.graph().order();
    const int gamma = cache.value(ParameterKind::domination());
    if (improved == TheoremId::T6_MinAlpha && previous == TheoremId::T4_HararyHaynes) {
        if (n >= 6) {
            const int twice_alpha = 2 * cache.value(ParameterKind::independence());
            if (n % 2 == 0) {
                e.sufficient_condition = twice_alpha != n - 2 && twice_alpha != n && twice_alpha != n + 2;
            } else {
                e.sufficient_condition = twice_alpha != n - 1 && twice_alpha != n + 1 && twice_alpha != n - 3 &&
                                         twice_alpha != n + 3;
            }
        }
    } else if (improved == TheoremId::T8_Gamma2Gamma && previous == TheoremId::T7_Bonomo) {
        e.sufficient_condition = gamma <= cache.value(ParameterKind::k_domination(2)) - 2;
    } else if (improved == TheoremId::T10_ClawTotalGamma && previous == TheoremId::T9_ClawMin) {
        const int gamma_t = cache.value(ParameterKind::total_domination());
        e.sufficient_condition = gamma <= gamma_t && gamma_t <= 2 * gamma;
    } else if (improved == TheoremId::T2_AlphaGamma && previous == TheoremId::T1_AlphaI) {
        e.sufficient_condition = gamma <= cache.value(ParameterKind::independent_domination());
    }
    return e;
}

std::vector<ImprovementEntry> improvement_audit(const Graph& g) {
    ParameterCache cache(g);
    std::vector<ImprovementEntry> out;
    for (auto [improved, previous] : kImprovementPairs) {
        if (theorem_applicable(improved, cache.profile(), g.order()) &&
            theorem_applicable(previous, cache.profile(), g.order())) {
            out.push_back(audit_pair(improved, previous, cache));
        }
    }
    return out;
}

}  // namespace dbldom
