#include "dbldom/families.hpp"

namespace dbldom {

std::string FamilySpec::label() const {
    switch (family) {
    case FamilyId::H: return "H(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case FamilyId::HPrime: return "HPrime(" + std::to_string(a) + ")";
    case FamilyId::Complete: return "Complete(" + std::to_string(a) + ")";
    case FamilyId::Star: return "Star(" + std::to_string(a) + ")";
    case FamilyId::Path: return "Path(" + std::to_string(a) + ")";
    case FamilyId::Cycle: return "Cycle(" + std::to_string(a) + ")";
    case FamilyId::CompletePlusPendant: return "CompletePlusPendant(" + std::to_string(a) + ")";
    case FamilyId::Figure3: return "Figure3";
    }
    return "?";
}

std::vector<std::pair<ParameterKind, int>> ExpectedValues::parameters() const {
    std::vector<std::pair<ParameterKind, int>> out;
    auto add = [&](const std::optional<int>& v, ParameterKind kind) {
        if (v) out.emplace_back(kind, *v);
    };
    add(gamma, ParameterKind::domination());
    add(gamma2, ParameterKind::k_domination(2));
    add(gamma_x2, ParameterKind::k_tuple_domination(2));
    add(gamma_t, ParameterKind::total_domination());
    add(i, ParameterKind::independent_domination());
    add(alpha, ParameterKind::independence());
    add(beta, ParameterKind::vertex_cover());
    return out;
}

std::vector<std::pair<std::string, int>> ExpectedValues::entries() const {
    std::vector<std::pair<std::string, int>> out;
    for (auto [kind, value] : parameters()) out.emplace_back(kind.name(), value);
    if (leaves) out.emplace_back("leaves", *leaves);
    if (supports) out.emplace_back("supports", *supports);
    return out;
}

namespace {

[[noreturn]] void invalid(const FamilySpec& spec, const std::string& why) {
    throw Error(Errc::InvalidFamilyParameters, spec.label() + ": " + why);
}

void require_order(const FamilySpec& spec, int n_min, int order) {
    if (spec.a < n_min) invalid(spec, "needs n >= " + std::to_string(n_min));
    if (order > kMaxOrder) invalid(spec, "order exceeds " + std::to_string(kMaxOrder));
}

FamilyMember h_family(const FamilySpec& spec) {
    const int t = spec.a;
    const int r = spec.b;
    if (t < 2 || r < 1 || r > t - 1) invalid(spec, "needs t >= 2 and 1 <= r <= t-1");
    if (2 * t + 2 > kMaxOrder) invalid(spec, "order exceeds 62");
    const int u = 0;
    const int u2 = t + 1;
    std::vector<Edge> edges;
    for (int k = 1; k <= t; ++k) {
        edges.emplace_back(u, k);
        edges.emplace_back(u2, u2 + k);
    }
    edges.emplace_back(u, u2);
    for (int k = 1; k <= r; ++k) edges.emplace_back(k, u2 + k);

    ExpectedValues ev;
    ev.gamma_x2 = 2 * t - r + 2;
    ev.gamma = 2;
    ev.i = t + 1;
    ev.alpha = 2 * t - r;
    ev.beta = r + 2;
    ev.leaves = 2 * (t - r);
    ev.supports = 2;
    return {Graph::from_edge_list(2 * t + 2, edges), ev};
}

FamilyMember h_prime_family(const FamilySpec& spec) {
    const int r = spec.a;
    if (r < 2) invalid(spec, "needs r >= 2");
    const int n = 3 * (r + 1);
    if (n > kMaxOrder) invalid(spec, "order exceeds 62");
    std::vector<Edge> edges;
    for (int j = 1; j <= 3 * r; ++j) {
        const int i = (j - 1) % 3;  // a_i as 0-based index, residue 0 -> a_3
        const int next = (i + 1) % 3;
        edges.emplace_back(2 + j, i);
        edges.emplace_back(2 + j, next);
    }
    ExpectedValues ev;
    ev.gamma_x2 = 5;
    return {Graph::from_edge_list(n, edges), ev};
}

FamilyMember figure3() {
    std::vector<Edge> edges{{0, 5}};
    for (int hub : {0, 5}) {
        const int r1 = hub + 1, r2 = hub + 2, r3 = hub + 3, r4 = hub + 4;
        for (int rim = r1; rim <= r4; ++rim) edges.emplace_back(hub, rim);
        edges.insert(edges.end(), {{r1, r3}, {r3, r2}, {r2, r4}, {r4, r1}});
    }
    ExpectedValues ev;
    ev.gamma = 2;
    ev.gamma2 = 4;
    ev.gamma_x2 = 6;
    return {Graph::from_edge_list(10, edges), ev};
}

}  // namespace

FamilyMember generate(const FamilySpec& spec) {
    const int n = spec.a;
    std::vector<Edge> edges;
    ExpectedValues ev;
    switch (spec.family) {
    case FamilyId::H: return h_family(spec);
    case FamilyId::HPrime: return h_prime_family(spec);
    case FamilyId::Figure3: return figure3();
    case FamilyId::Complete:
        require_order(spec, 1, n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        }
        ev.gamma = 1;
        ev.alpha = 1;
        if (n >= 2) ev.gamma_x2 = 2;
        return {Graph::from_edge_list(n, edges), ev};
    case FamilyId::Star:
        require_order(spec, 2, n);
        for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
        if (n >= 3) ev.gamma_x2 = n;
        return {Graph::from_edge_list(n, edges), ev};
    case FamilyId::Path:
        require_order(spec, 1, n);
        for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        return {Graph::from_edge_list(n, edges), ev};
    case FamilyId::Cycle:
        require_order(spec, 3, n);
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
        return {Graph::from_edge_list(n, edges), ev};
    case FamilyId::CompletePlusPendant:
        require_order(spec, 2, n + 1);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        }
        edges.emplace_back(0, n);
        return {Graph::from_edge_list(n + 1, edges), ev};
    }
    invalid(spec, "unknown family");
}

std::vector<FixtureMismatch> check_expected(const FamilyMember& member) {
    std::vector<FixtureMismatch> out;
    for (auto [kind, value] : member.expected.parameters()) {
        const int actual = solve(kind, member.graph).value;
        if (actual != value) out.push_back({kind.name(), value, actual});
    }
    const GraphProfile p = profile(member.graph);
    if (member.expected.leaves && *member.expected.leaves != p.leaves.size()) {
        out.push_back({"leaves", *member.expected.leaves, p.leaves.size()});
    }
    if (member.expected.supports && *member.expected.supports != p.supports.size()) {
        out.push_back({"supports", *member.expected.supports, p.supports.size()});
    }
    return out;
}

}  // namespace dbldom
