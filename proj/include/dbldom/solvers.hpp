#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbldom/graph.hpp"

namespace dbldom {

/// The seven set classes. `k` is meaningful only for the k-indexed kinds.
class ParameterKind {
public:
    enum class Tag {
        Domination,
        KDomination,
        KTupleDomination,
        TotalDomination,
        IndependentDomination,
        Independence,
        VertexCover,
    };

    static constexpr ParameterKind domination() { return ParameterKind(Tag::Domination, 1); }
    /// |S ∩ N(v)| >= k for every v outside S. Throws on k < 1.
    static ParameterKind k_domination(int k);
    /// |S ∩ N[v]| >= k for every v. Throws on k < 1.
    static ParameterKind k_tuple_domination(int k);
    static constexpr ParameterKind total_domination() { return ParameterKind(Tag::TotalDomination, 1); }
    static constexpr ParameterKind independent_domination() {
        return ParameterKind(Tag::IndependentDomination, 1);
    }
    static constexpr ParameterKind independence() { return ParameterKind(Tag::Independence, 1); }
    static constexpr ParameterKind vertex_cover() { return ParameterKind(Tag::VertexCover, 1); }

    /// The seven parameters the bounds are stated in: gamma, gamma2,
    /// gamma_x2, gamma_t, i, alpha, beta.
    static std::vector<ParameterKind> core();

    /// Accepts "gamma", "gamma<k>", "gamma_x<k>", "gamma_t", "i", "alpha",
    /// "beta". Returns nullopt on anything else.
    static std::optional<ParameterKind> parse(std::string_view name);

    constexpr Tag tag() const { return tag_; }
    constexpr int k() const { return k_; }
    constexpr bool is_maximization() const { return tag_ == Tag::Independence; }
    std::string name() const;

    constexpr bool operator==(const ParameterKind&) const = default;
    constexpr auto operator<=>(const ParameterKind& o) const {
        if (tag_ != o.tag_) return static_cast<int>(tag_) <=> static_cast<int>(o.tag_);
        return k_ <=> o.k_;
    }

private:
    constexpr ParameterKind(Tag tag, int k) : tag_(tag), k_(k) {}

    Tag tag_;
    int k_;
};

struct ParameterResult {
    ParameterKind kind;
    int value = 0;
    VertexSet witness;
};

/// Defining predicate of `kind` on `s`. Total: any (g, s) pair is valid input.
bool satisfies(ParameterKind kind, const Graph& g, VertexSet s);

/// Exact optimum among sets containing `required`, found by a cardinality
/// sweep over combinations in lexicographic order with prefix pruning. The
/// witness is the lexicographically least optimal set.
///
/// Throws Error(InfeasibleParameter) when no superset of `required` meets the
/// predicate, and Error(RequiredSetInfeasible) when `required` is not
/// independent for the independence-based kinds.
ParameterResult solve(ParameterKind kind, const Graph& g, VertexSet required = {});

/// Unpruned power-set scan with its own predicate code; same contract as
/// solve. Throws Error(GraphTooLargeForOracle) for n > 18.
ParameterResult oracle_solve(ParameterKind kind, const Graph& g, VertexSet required = {});

inline constexpr int kOracleMaxOrder = 18;

/// Human-readable reason why `kind` has no feasible set on g containing
/// `required`, or nullopt when feasible.
std::optional<std::string> infeasibility_reason(ParameterKind kind, const Graph& g, VertexSet required = {});

}  // namespace dbldom
