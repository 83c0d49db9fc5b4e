#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbldom/graph.hpp"

namespace dbldom {

/// The four double-domination bounds that come with a constructive proof.
enum class ConstructionId {
    AlphaGamma,   ///< gamma_x2 <= alpha + gamma
    BetaGamma,    ///< gamma_x2 <= beta + gamma + |leaves| - |supports|
    Gamma2Gamma,  ///< gamma_x2 <= gamma2 + gamma
    TotalGamma,   ///< gamma_x2 <= gamma_t + gamma, claw-free graphs
};

/// CLI spelling: "alpha-gamma", "beta-gamma", "gamma2-gamma", "total-gamma".
std::string_view to_string(ConstructionId id);
std::optional<ConstructionId> parse_construction(std::string_view name);
inline constexpr ConstructionId kAllConstructions[] = {
    ConstructionId::AlphaGamma, ConstructionId::BetaGamma, ConstructionId::Gamma2Gamma,
    ConstructionId::TotalGamma};

struct ConstructionCertificate {
    ConstructionId theorem;
    VertexSet input_s;
    VertexSet input_d;
    /// Vertices the construction includes besides S and D (the leaves for
    /// BetaGamma, empty otherwise).
    VertexSet forced;
    VertexSet result_w;
    int size_bound = 0;
    /// result_w minus (input_s | input_d | forced).
    VertexSet augmented;
};

/// A requirement that the built set meets `candidates`, recorded against the
/// vertex that raised it.
struct Demand {
    int owner = 0;
    VertexSet candidates;
};

/// Greedy one-pass augmentation: demands are visited by ascending owner,
/// already-met demands are skipped, otherwise the smallest candidate is
/// added. Adds at most one vertex per demand.
/// Throws Error(EmptyDemand) if any demand has no candidates.
VertexSet minimal_augmentation(const Graph& g, VertexSet base, std::vector<Demand> demands);

// Each builder checks the preconditions its proof relies on and throws
// Error(PreconditionViolated) naming the first one that fails.

/// S: maximum independent set, D: dominating set, no isolated vertex.
ConstructionCertificate build_thm_alpha_gamma(const Graph& g, VertexSet s, VertexSet d);
/// S: vertex cover, D: dominating set, both containing every support
/// vertex; n >= 3 and no isolated vertex.
ConstructionCertificate build_thm_beta_gamma(const Graph& g, VertexSet s, VertexSet d);
/// S: 2-dominating set, D: dominating set, no isolated vertex.
ConstructionCertificate build_thm_gamma2_gamma(const Graph& g, VertexSet s, VertexSet d);
/// S: total dominating set, D: dominating set, g claw-free without
/// isolated vertices.
ConstructionCertificate build_thm_total_gamma(const Graph& g, VertexSet s, VertexSet d);

ConstructionCertificate build(ConstructionId id, const Graph& g, VertexSet s, VertexSet d);

/// Why `id` cannot be run on g, or nullopt. Checks graph-level gates only.
std::optional<std::string> construction_gate(ConstructionId id, const Graph& g);

struct CertifyOutcome {
    ConstructionCertificate certificate;
    /// True iff result_w is double dominating, within size_bound, and (for
    /// TotalGamma) total dominating.
    bool valid = false;
    /// Bound of the inequality itself, from optimal parameter values.
    int theorem_bound = 0;
    /// Whether the witnesses fed to the builder have optimal size, so that
    /// size_bound equals theorem_bound.
    bool witnesses_optimal = false;
};

/// Obtains lexicographically least optimal witnesses from the solver (with
/// the support vertices required for BetaGamma) and runs the builder.
CertifyOutcome certify(ConstructionId id, const Graph& g);

bool certificate_valid(const Graph& g, const ConstructionCertificate& cert);

}  // namespace dbldom
