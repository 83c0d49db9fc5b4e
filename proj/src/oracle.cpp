// Brute-force reference for solve(). Shares nothing with the sweep search
// beyond the Graph type: predicates are re-stated from the definitions with
// plain loops and counters.

#include <cstdint>

#include "dbldom/solvers.hpp"

namespace dbldom {

namespace {

bool in(std::uint64_t mask, int v) { return ((mask >> v) & 1U) != 0; }

int count_in(const Graph& g, std::uint64_t mask, int v, bool closed) {
    int c = (closed && in(mask, v)) ? 1 : 0;
    for (int w = 0; w < g.order(); ++w) {
        if (w != v && g.has_edge(v, w) && in(mask, w)) ++c;
    }
    return c;
}

bool independent(const Graph& g, std::uint64_t mask) {
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (in(mask, u) && in(mask, v) && g.has_edge(u, v)) return false;
        }
    }
    return true;
}

bool naive_predicate(ParameterKind kind, const Graph& g, std::uint64_t mask) {
    const int n = g.order();
    using Tag = ParameterKind::Tag;
    switch (kind.tag()) {
    case Tag::Domination:
        for (int v = 0; v < n; ++v) {
            if (count_in(g, mask, v, true) < 1) return false;
        }
        return true;
    case Tag::KTupleDomination:
        for (int v = 0; v < n; ++v) {
            if (count_in(g, mask, v, true) < kind.k()) return false;
        }
        return true;
    case Tag::KDomination:
        for (int v = 0; v < n; ++v) {
            if (!in(mask, v) && count_in(g, mask, v, false) < kind.k()) return false;
        }
        return true;
    case Tag::TotalDomination:
        for (int v = 0; v < n; ++v) {
            if (count_in(g, mask, v, false) < 1) return false;
        }
        return true;
    case Tag::IndependentDomination:
        if (!independent(g, mask)) return false;
        for (int v = 0; v < n; ++v) {
            if (count_in(g, mask, v, true) < 1) return false;
        }
        return true;
    case Tag::Independence:
        return independent(g, mask);
    case Tag::VertexCover:
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g.has_edge(u, v) && !in(mask, u) && !in(mask, v)) return false;
            }
        }
        return true;
    }
    return false;
}

// Compare sorted member lists of two equal-size masks.
bool lexicographically_before(std::uint64_t a, std::uint64_t b, int n) {
    for (int v = 0; v < n; ++v) {
        if (in(a, v) != in(b, v)) return in(a, v);
    }
    return false;
}

}  // namespace

ParameterResult oracle_solve(ParameterKind kind, const Graph& g, VertexSet required) {
    const int n = g.order();
    if (n > kOracleMaxOrder) {
        throw Error(Errc::GraphTooLargeForOracle,
                    "oracle_solve supports n <= " + std::to_string(kOracleMaxOrder) + ", got " + std::to_string(n));
    }
    const std::uint64_t req = required.bits();
    const std::uint64_t total = std::uint64_t{1} << n;
    if (req >= total) {
        throw Error(Errc::PreconditionViolated, "required set is not a subset of V(G)");
    }

    bool have = false;
    std::uint64_t best = 0;
    int best_size = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if ((mask & req) != req) continue;
        if (!naive_predicate(kind, g, mask)) continue;
        int size = 0;
        for (int v = 0; v < n; ++v) size += in(mask, v) ? 1 : 0;
        const bool better = !have || (kind.is_maximization() ? size > best_size : size < best_size) ||
                            (size == best_size && lexicographically_before(mask, best, n));
        if (better) {
            have = true;
            best = mask;
            best_size = size;
        }
    }
    if (!have) {
        const bool independence_based = kind.tag() == ParameterKind::Tag::Independence ||
                                        kind.tag() == ParameterKind::Tag::IndependentDomination;
        throw Error(independence_based ? Errc::RequiredSetInfeasible : Errc::InfeasibleParameter,
                    kind.name() + ": no feasible set contains " + required.to_string());
    }
    return {kind, best_size, VertexSet(best)};
}

}  // namespace dbldom
