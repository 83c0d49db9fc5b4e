#include "dbldom/solvers.hpp"

#include <algorithm>
#include <charconv>

#include "solver_detail.hpp"

namespace dbldom {

ParameterKind ParameterKind::k_domination(int k) {
    if (k < 1) throw Error(Errc::PreconditionViolated, "k-domination needs k >= 1");
    return ParameterKind(Tag::KDomination, k);
}

ParameterKind ParameterKind::k_tuple_domination(int k) {
    if (k < 1) throw Error(Errc::PreconditionViolated, "k-tuple domination needs k >= 1");
    return ParameterKind(Tag::KTupleDomination, k);
}

std::vector<ParameterKind> ParameterKind::core() {
    return {domination(),       k_domination(2), k_tuple_domination(2), total_domination(),
            independent_domination(), independence(),  vertex_cover()};
}

std::string ParameterKind::name() const {
    switch (tag_) {
    case Tag::Domination: return "gamma";
    case Tag::KDomination: return "gamma" + std::to_string(k_);
    case Tag::KTupleDomination: return "gamma_x" + std::to_string(k_);
    case Tag::TotalDomination: return "gamma_t";
    case Tag::IndependentDomination: return "i";
    case Tag::Independence: return "alpha";
    case Tag::VertexCover: return "beta";
    }
    return "?";
}

std::optional<ParameterKind> ParameterKind::parse(std::string_view name) {
    if (name == "gamma") return domination();
    if (name == "gamma_t") return total_domination();
    if (name == "i") return independent_domination();
    if (name == "alpha") return independence();
    if (name == "beta") return vertex_cover();

    auto parse_k = [](std::string_view digits) -> std::optional<int> {
        if (digits.empty()) return std::nullopt;
        int k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1) return std::nullopt;
        return k;
    };
    if (name.starts_with("gamma_x")) {
        if (auto k = parse_k(name.substr(7))) return k_tuple_domination(*k);
        return std::nullopt;
    }
    if (name.starts_with("gamma")) {
        if (auto k = parse_k(name.substr(5))) return k_domination(*k);
    }
    return std::nullopt;
}

bool satisfies(ParameterKind kind, const Graph& g, VertexSet s) {
    const int n = g.order();
    if (!s.is_subset_of(g.vertices())) return false;
    using Tag = ParameterKind::Tag;
    switch (kind.tag()) {
    case Tag::Domination:
    case Tag::KTupleDomination:
        for (int v = 0; v < n; ++v) {
            if ((g.closed_neighbors(v) & s).size() < kind.k()) return false;
        }
        return true;
    case Tag::KDomination:
        for (int v : g.vertices() - s) {
            if ((g.neighbors(v) & s).size() < kind.k()) return false;
        }
        return true;
    case Tag::TotalDomination:
        for (int v = 0; v < n; ++v) {
            if (!g.neighbors(v).intersects(s)) return false;
        }
        return true;
    case Tag::IndependentDomination:
        return g.is_independent(s) && satisfies(ParameterKind::domination(), g, s);
    case Tag::Independence:
        return g.is_independent(s);
    case Tag::VertexCover:
        for (int v : g.vertices() - s) {
            if (!g.neighbors(v).is_subset_of(s)) return false;
        }
        return true;
    }
    return false;
}

namespace detail {

std::optional<Infeasibility> check_feasible(ParameterKind kind, const Graph& g, VertexSet required) {
    using Tag = ParameterKind::Tag;
    if (!required.is_subset_of(g.vertices())) {
        return Infeasibility{Errc::PreconditionViolated,
                             "required set " + required.to_string() + " is not a subset of V(G)"};
    }
    switch (kind.tag()) {
    case Tag::Independence:
    case Tag::IndependentDomination:
        if (!g.is_independent(required)) {
            return Infeasibility{Errc::RequiredSetInfeasible,
                                 "required set " + required.to_string() + " is not independent: " +
                                     kind.name() + " has no feasible superset"};
        }
        return std::nullopt;
    case Tag::KTupleDomination:
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) < kind.k() - 1) {
                if (g.degree(v) == 0) {
                    return Infeasibility{Errc::InfeasibleParameter, "isolated vertex present (vertex " +
                                                                        std::to_string(v) + "): " +
                                                                        kind.name() + " undefined"};
                }
                return Infeasibility{Errc::InfeasibleParameter,
                                     "minimum degree below k-1 (vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(g.degree(v)) + "): " + kind.name() + " undefined"};
            }
        }
        return std::nullopt;
    case Tag::TotalDomination:
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) == 0) {
                return Infeasibility{Errc::InfeasibleParameter, "isolated vertex present (vertex " +
                                                                    std::to_string(v) + "): " + kind.name() +
                                                                    " undefined"};
            }
        }
        return std::nullopt;
    case Tag::Domination:
    case Tag::KDomination:
    case Tag::VertexCover:
        return std::nullopt;
    }
    return std::nullopt;
}

void throw_if_infeasible(ParameterKind kind, const Graph& g, VertexSet required) {
    if (auto why = check_feasible(kind, g, required)) throw Error(why->code, why->message);
}

}  // namespace detail

std::optional<std::string> infeasibility_reason(ParameterKind kind, const Graph& g, VertexSet required) {
    if (auto why = detail::check_feasible(kind, g, required)) return why->message;
    return std::nullopt;
}

namespace {

/// Fixed-size subset search over the vertices outside `required`, visiting
/// combinations in lexicographic order. Partial selections are cut as soon
/// as the remaining candidates cannot complete the predicate.
class SweepSearch {
public:
    SweepSearch(ParameterKind kind, const Graph& g, VertexSet required)
        : kind_(kind), g_(g), required_(required) {
        for (int v : g.vertices() - required) pool_.push_back(v);
        suffix_.resize(pool_.size() + 1);
        for (std::size_t p = pool_.size(); p-- > 0;) {
            suffix_[p] = suffix_[p + 1] | VertexSet::single(pool_[p]);
        }
        const auto tag = kind.tag();
        independent_only_ = tag == ParameterKind::Tag::Independence ||
                            tag == ParameterKind::Tag::IndependentDomination;
    }

    std::optional<VertexSet> find(int size) {
        const int extra = size - required_.size();
        if (extra < 0 || extra > static_cast<int>(pool_.size())) return std::nullopt;
        if (dfs(0, required_, extra)) return found_;
        return std::nullopt;
    }

private:
    bool dfs(std::size_t pos, VertexSet chosen, int remaining) {
        if (remaining == 0) {
            if (satisfies(kind_, g_, chosen)) {
                found_ = chosen;
                return true;
            }
            return false;
        }
        if (pool_.size() - pos < static_cast<std::size_t>(remaining)) return false;
        if (!viable(chosen, suffix_[pos], remaining)) return false;

        const int v = pool_[pos];
        if (!(independent_only_ && g_.neighbors(v).intersects(chosen))) {
            if (dfs(pos + 1, chosen | VertexSet::single(v), remaining - 1)) return true;
        }
        return dfs(pos + 1, chosen, remaining);
    }

    // Each vertex's demand must still be reachable using at most `remaining`
    // further picks from `future`.
    bool coverage_viable(VertexSet chosen, VertexSet future, int remaining, bool closed, int need) const {
        for (int v = 0; v < g_.order(); ++v) {
            const VertexSet cover = closed ? g_.closed_neighbors(v) : g_.neighbors(v);
            const int have = (cover & chosen).size();
            if (have >= need) continue;
            if (have + std::min(remaining, (cover & future).size()) < need) return false;
        }
        return true;
    }

    bool viable(VertexSet chosen, VertexSet future, int remaining) const {
        using Tag = ParameterKind::Tag;
        switch (kind_.tag()) {
        case Tag::Domination:
        case Tag::KTupleDomination:
            return coverage_viable(chosen, future, remaining, true, kind_.k());
        case Tag::TotalDomination:
            return coverage_viable(chosen, future, remaining, false, 1);
        case Tag::IndependentDomination:
            return coverage_viable(chosen, future - g_.neighborhood(chosen), remaining, true, 1);
        case Tag::KDomination:
            for (int v : g_.vertices() - chosen - future) {
                const VertexSet nv = g_.neighbors(v);
                if ((nv & chosen).size() + std::min(remaining, (nv & future).size()) < kind_.k()) return false;
            }
            return true;
        case Tag::VertexCover: {
            const VertexSet open = chosen | future;
            for (int v : g_.vertices() - open) {
                if (!g_.neighbors(v).is_subset_of(open)) return false;
            }
            return true;
        }
        case Tag::Independence:
            return true;
        }
        return true;
    }

    ParameterKind kind_;
    const Graph& g_;
    VertexSet required_;
    std::vector<int> pool_;
    std::vector<VertexSet> suffix_;
    bool independent_only_ = false;
    VertexSet found_;
};

}  // namespace

ParameterResult solve(ParameterKind kind, const Graph& g, VertexSet required) {
    detail::throw_if_infeasible(kind, g, required);
    SweepSearch search(kind, g, required);
    const int lo = required.size();
    const int hi = g.order();
    if (kind.is_maximization()) {
        for (int size = hi; size >= lo; --size) {
            if (auto w = search.find(size)) return {kind, size, *w};
        }
    } else {
        for (int size = lo; size <= hi; ++size) {
            if (auto w = search.find(size)) return {kind, size, *w};
        }
    }
    throw Error(Errc::InfeasibleParameter, kind.name() + ": no feasible set found");
}

}  // namespace dbldom
