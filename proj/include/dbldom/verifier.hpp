#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dbldom/graph.hpp"
#include "dbldom/solvers.hpp"

namespace dbldom {

enum class TheoremId {
    T1_AlphaI,
    T2_AlphaGamma,
    T3_BetaGammaLeaf,
    T4_HararyHaynes,
    T5_Gallai,
    T6_MinAlpha,
    T7_Bonomo,
    T7t_TreeVariant,
    T8_Gamma2Gamma,
    T9_ClawMin,
    T10_ClawTotalGamma,
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::T1_AlphaI,      TheoremId::T2_AlphaGamma, TheoremId::T3_BetaGammaLeaf,
    TheoremId::T4_HararyHaynes, TheoremId::T5_Gallai,     TheoremId::T6_MinAlpha,
    TheoremId::T7_Bonomo,      TheoremId::T7t_TreeVariant, TheoremId::T8_Gamma2Gamma,
    TheoremId::T9_ClawMin,     TheoremId::T10_ClawTotalGamma};

/// "T1", ..., "T7t", ..., "T10".
std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
/// The inequality in words, e.g. "gamma_x2 <= alpha + gamma".
std::string_view statement(TheoremId id);

struct TheoremCheck {
    TheoremId id = TheoremId::T5_Gallai;
    bool applicable = false;
    int lhs = 0;
    int rhs = 0;
    int slack = 0;
    bool tight = false;
    std::map<std::string, VertexSet> witnesses;

    /// Applicable and the inequality (equality for T5) fails.
    bool violated() const;
};

/// Lazily computed optimal parameter values for one graph; each kind is
/// solved at most once.
class ParameterCache {
public:
    explicit ParameterCache(Graph g) : g_(std::move(g)), profile_(dbldom::profile(g_)) {}

    const ParameterResult& get(ParameterKind kind);
    int value(ParameterKind kind) { return get(kind).value; }
    const Graph& graph() const { return g_; }
    const GraphProfile& profile() const { return profile_; }
    int solves() const { return solves_; }

private:
    Graph g_;
    GraphProfile profile_;
    std::map<ParameterKind, ParameterResult> cache_;
    int solves_ = 0;
};

bool theorem_applicable(TheoremId id, const GraphProfile& p, int n);

TheoremCheck check_theorem(TheoremId id, const Graph& g);
TheoremCheck check_theorem(TheoremId id, ParameterCache& cache);
/// Every theorem in kAllTheorems order, sharing one cache.
std::vector<TheoremCheck> check_all(const Graph& g);
std::vector<TheoremCheck> check_all(ParameterCache& cache);

struct TheoremStats {
    std::int64_t applicable_count = 0;
    std::int64_t tight_count = 0;
    std::optional<int> max_slack;
    /// graph6 strings, sorted.
    std::vector<std::string> violations;
};

struct ScanReport {
    std::string mode;
    int n = 0;
    std::int64_t graphs_checked = 0;
    std::optional<std::int64_t> count;
    std::optional<std::uint64_t> seed;
    std::optional<double> edge_prob;
    std::array<TheoremStats, kAllTheorems.size()> theorems{};

    void record(const Graph& g, const std::vector<TheoremCheck>& checks);
    /// Order-independent merge of another report's counts and violations.
    void merge(const ScanReport& other);
    bool clean() const;
    TheoremStats& stats(TheoremId id) { return theorems[static_cast<std::size_t>(id)]; }
    const TheoremStats& stats(TheoremId id) const { return theorems[static_cast<std::size_t>(id)]; }

    /// {meta:{...}, theorems:[{id, applicable, tight, max_slack, violations}]}
    nlohmann::json to_json() const;
};

inline constexpr int kExhaustiveMaxOrder = 7;
inline constexpr int kRandomMaxOrder = 16;

/// Every labeled graph on n vertices, enumerated by the graph6 bit string
/// read as a binary counter. Throws Error(OrderTooLargeForExhaustive)
/// outside 1..7. `jobs` <= 0 means hardware concurrency; the report does
/// not depend on it.
ScanReport scan_exhaustive(int n, int jobs = 0);

/// Labeled graph with the given edge mask over the graph6 pair order.
Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// Bernoulli(edge_prob) graphs drawn from a mt19937_64 stream seeded with
/// `seed`. Each pair in graph6 order takes the next draw u = (x >> 11) * 2^-53
/// and is an edge iff u < edge_prob.
std::vector<Graph> random_graphs(int n, std::int64_t count, double edge_prob, std::uint64_t seed);
/// Trees from random Prüfer sequences; each entry is x mod n for the next
/// draw x. n >= 2.
std::vector<Graph> random_trees(int n, std::int64_t count, std::uint64_t seed);
Graph tree_from_pruefer(int n, const std::vector<int>& sequence);

/// Throws Error(PreconditionViolated) for n outside 1..16, count < 1 or
/// edge_prob outside (0, 1).
ScanReport scan_random(int n, std::int64_t count, double edge_prob, std::uint64_t seed, int jobs = 0);
ScanReport scan_random_trees(int n, std::int64_t count, std::uint64_t seed, int jobs = 0);
/// Checks an explicit list of graphs.
ScanReport scan_graphs(const std::vector<Graph>& graphs, int jobs = 0);

struct ImprovementEntry {
    TheoremId improved;
    TheoremId previous;
    int rhs_improved = 0;
    int rhs_previous = 0;
    bool no_worse = false;  ///< rhs_improved <= rhs_previous
    bool strict = false;    ///< rhs_improved < rhs_previous
    /// The stated sufficient condition for improvement on this graph, when
    /// one exists for the pair.
    std::optional<bool> sufficient_condition;
};

inline constexpr std::array<std::pair<TheoremId, TheoremId>, 4> kImprovementPairs = {{
    {TheoremId::T6_MinAlpha, TheoremId::T4_HararyHaynes},
    {TheoremId::T8_Gamma2Gamma, TheoremId::T7_Bonomo},
    {TheoremId::T10_ClawTotalGamma, TheoremId::T9_ClawMin},
    {TheoremId::T2_AlphaGamma, TheoremId::T1_AlphaI},
}};

/// One comparison; throws Error(PairNotApplicable) unless both theorems
/// apply to g.
ImprovementEntry audit_pair(TheoremId improved, TheoremId previous, ParameterCache& cache);
/// Every pair in kImprovementPairs whose theorems both apply.
std::vector<ImprovementEntry> improvement_audit(const Graph& g);

}  // namespace dbldom
