#include "dbldom/constructions.hpp"

#include <algorithm>

#include "dbldom/solvers.hpp"

namespace dbldom {

std::string_view to_string(ConstructionId id) {
    switch (id) {
    case ConstructionId::AlphaGamma: return "alpha-gamma";
    case ConstructionId::BetaGamma: return "beta-gamma";
    case ConstructionId::Gamma2Gamma: return "gamma2-gamma";
    case ConstructionId::TotalGamma: return "total-gamma";
    }
    return "?";
}

std::optional<ConstructionId> parse_construction(std::string_view name) {
    for (ConstructionId id : kAllConstructions) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

VertexSet minimal_augmentation(const Graph& g, VertexSet base, std::vector<Demand> demands) {
    for (const Demand& d : demands) {
        if (d.candidates.empty()) {
            throw Error(Errc::EmptyDemand, "demand raised by vertex " + std::to_string(d.owner) + " is empty");
        }
        if (!d.candidates.is_subset_of(g.vertices())) {
            throw Error(Errc::PreconditionViolated, "demand candidates outside V(G)");
        }
    }
    std::stable_sort(demands.begin(), demands.end(),
                     [](const Demand& a, const Demand& b) { return a.owner < b.owner; });
    VertexSet w = base;
    for (const Demand& d : demands) {
        if (!d.candidates.intersects(w)) w.insert(d.candidates.front());
    }
    return w;
}

namespace {

[[noreturn]] void violated(ConstructionId id, const std::string& what) {
    throw Error(Errc::PreconditionViolated, std::string(to_string(id)) + ": " + what);
}

void require_subsets(ConstructionId id, const Graph& g, VertexSet s, VertexSet d) {
    if (!s.is_subset_of(g.vertices()) || !d.is_subset_of(g.vertices())) {
        violated(id, "witness sets must be subsets of V(G)");
    }
}

void require_no_isolated(ConstructionId id, const Graph& g) {
    if (g.has_isolated_vertex()) violated(id, "isolated vertex present");
}

void require_dominating(ConstructionId id, const Graph& g, VertexSet d) {
    if (!satisfies(ParameterKind::domination(), g, d)) violated(id, "D is not a dominating set");
}

ConstructionCertificate finish(ConstructionId id, const Graph& g, VertexSet s, VertexSet d, VertexSet forced,
                               const std::vector<Demand>& demands, int size_bound) {
    ConstructionCertificate cert{id, s, d, forced, {}, size_bound, {}};
    cert.result_w = minimal_augmentation(g, s | d | forced, demands);
    cert.augmented = cert.result_w - (s | d | forced);
    return cert;
}

}  // namespace

std::optional<std::string> construction_gate(ConstructionId id, const Graph& g) {
    if (g.has_isolated_vertex()) return "isolated vertex present";
    if (id == ConstructionId::BetaGamma && g.order() < 3) return "order below 3";
    if (id == ConstructionId::TotalGamma && !is_claw_free(g)) return "not claw-free";
    return std::nullopt;
}

ConstructionCertificate build_thm_alpha_gamma(const Graph& g, VertexSet s, VertexSet d) {
    constexpr auto id = ConstructionId::AlphaGamma;
    require_subsets(id, g, s, d);
    require_no_isolated(id, g);
    if (!g.is_independent(s)) violated(id, "S is not independent");
    if (s.size() != solve(ParameterKind::independence(), g).value) {
        violated(id, "S is not a maximum independent set");
    }
    require_dominating(id, g, d);

    // (a) meet epn(x, S∪D) when it is nonempty, (b) otherwise meet N(x).
    const VertexSet sd = s | d;
    std::vector<Demand> demands;
    for (int x : s & d) {
        const VertexSet private_nbrs = epn(x, sd, g);
        demands.push_back({x, private_nbrs.empty() ? g.neighbors(x) : private_nbrs});
    }
    return finish(id, g, s, d, {}, demands, s.size() + d.size());
}

ConstructionCertificate build_thm_beta_gamma(const Graph& g, VertexSet s, VertexSet d) {
    constexpr auto id = ConstructionId::BetaGamma;
    require_subsets(id, g, s, d);
    if (g.order() < 3) violated(id, "order below 3");
    require_no_isolated(id, g);
    if (!satisfies(ParameterKind::vertex_cover(), g, s)) violated(id, "S is not a vertex cover");
    require_dominating(id, g, d);
    const GraphProfile p = profile(g);
    if (!p.supports.is_subset_of(s & d)) violated(id, "support vertices not contained in S ∩ D");

    std::vector<Demand> demands;
    for (int x : (s & d) - p.supports) demands.push_back({x, g.neighbors(x)});
    return finish(id, g, s, d, p.leaves, demands, s.size() + d.size() + p.leaves.size() - p.supports.size());
}

ConstructionCertificate build_thm_gamma2_gamma(const Graph& g, VertexSet s, VertexSet d) {
    constexpr auto id = ConstructionId::Gamma2Gamma;
    require_subsets(id, g, s, d);
    require_no_isolated(id, g);
    if (!satisfies(ParameterKind::k_domination(2), g, s)) violated(id, "S is not a 2-dominating set");
    require_dominating(id, g, d);

    std::vector<Demand> demands;
    for (int x : s & d) demands.push_back({x, g.neighbors(x)});
    return finish(id, g, s, d, {}, demands, s.size() + d.size());
}

ConstructionCertificate build_thm_total_gamma(const Graph& g, VertexSet s, VertexSet d) {
    constexpr auto id = ConstructionId::TotalGamma;
    require_subsets(id, g, s, d);
    require_no_isolated(id, g);
    if (!is_claw_free(g)) violated(id, "not claw-free");
    if (!satisfies(ParameterKind::total_domination(), g, s)) violated(id, "S is not a total dominating set");
    require_dominating(id, g, d);

    const VertexSet sd = s | d;
    std::vector<Demand> demands;
    for (int x : s & d) {
        const VertexSet private_nbrs = epn(x, sd, g);
        if (!private_nbrs.empty()) demands.push_back({x, private_nbrs});
    }
    return finish(id, g, s, d, {}, demands, s.size() + d.size());
}

ConstructionCertificate build(ConstructionId id, const Graph& g, VertexSet s, VertexSet d) {
    switch (id) {
    case ConstructionId::AlphaGamma: return build_thm_alpha_gamma(g, s, d);
    case ConstructionId::BetaGamma: return build_thm_beta_gamma(g, s, d);
    case ConstructionId::Gamma2Gamma: return build_thm_gamma2_gamma(g, s, d);
    case ConstructionId::TotalGamma: return build_thm_total_gamma(g, s, d);
    }
    throw Error(Errc::PreconditionViolated, "unknown construction");
}

bool certificate_valid(const Graph& g, const ConstructionCertificate& cert) {
    if (!satisfies(ParameterKind::k_tuple_domination(2), g, cert.result_w)) return false;
    if (cert.result_w.size() > cert.size_bound) return false;
    if (!(cert.input_s | cert.input_d | cert.forced).is_subset_of(cert.result_w)) return false;
    if (cert.theorem == ConstructionId::TotalGamma &&
        !satisfies(ParameterKind::total_domination(), g, cert.result_w)) {
        return false;
    }
    return true;
}

CertifyOutcome certify(ConstructionId id, const Graph& g) {
    if (auto why = construction_gate(id, g)) violated(id, *why);

    const ParameterResult gamma = solve(ParameterKind::domination(), g);
    ParameterResult first = gamma;
    ParameterResult d = gamma;
    int theorem_bound = 0;
    switch (id) {
    case ConstructionId::AlphaGamma:
        first = solve(ParameterKind::independence(), g);
        theorem_bound = first.value + gamma.value;
        break;
    case ConstructionId::BetaGamma: {
        const GraphProfile p = profile(g);
        const int beta = solve(ParameterKind::vertex_cover(), g).value;
        first = solve(ParameterKind::vertex_cover(), g, p.supports);
        d = solve(ParameterKind::domination(), g, p.supports);
        theorem_bound = beta + gamma.value + p.leaves.size() - p.supports.size();
        break;
    }
    case ConstructionId::Gamma2Gamma:
        first = solve(ParameterKind::k_domination(2), g);
        theorem_bound = first.value + gamma.value;
        break;
    case ConstructionId::TotalGamma:
        first = solve(ParameterKind::total_domination(), g);
        theorem_bound = first.value + gamma.value;
        break;
    }

    CertifyOutcome out{build(id, g, first.witness, d.witness), false, theorem_bound, false};
    out.valid = certificate_valid(g, out.certificate);
    out.witnesses_optimal = out.certificate.size_bound == theorem_bound;
    return out;
}

}  // namespace dbldom
