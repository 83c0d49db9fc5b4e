#include <algorithm>

#include "doctest.h"

#include "dbldom/families.hpp"
#include "test_support.hpp"

using namespace dbldom;
using namespace dbldom::testing;

namespace {

bool triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v > u && g.neighbors(u).intersects(g.neighbors(v))) return false;
        }
    }
    return true;
}

/// Same graph up to relabeling, by trying every permutation (n <= 10).
bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(a.order()));
    for (int v = 0; v < a.order(); ++v) perm[static_cast<std::size_t>(v)] = v;
    do {
        bool same = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                same = false;
                break;
            }
        }
        if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("H(4,2) matches the drawn graph and its closed forms") {
    const FamilyMember m = generate(FamilySpec::h(4, 2));
    CHECK(m.graph.order() == 10);
    CHECK(m.graph.edge_count() == 11);
    CHECK(isomorphic(m.graph, figure1_drawing()));
    CHECK(m.expected.gamma_x2 == 8);
    CHECK(m.expected.gamma == 2);
    CHECK(m.expected.i == 5);
    CHECK(m.expected.alpha == 6);
    CHECK(m.expected.beta == 4);
    CHECK(m.expected.leaves == 4);
    CHECK(m.expected.supports == 2);
    CHECK(check_expected(m).empty());
    // Index layout: u = 0, u' = 5, matched pairs v1-v1', v2-v2'.
    CHECK(m.graph.has_edge(0, 5));
    CHECK(m.graph.has_edge(1, 6));
    CHECK(m.graph.has_edge(2, 7));
    CHECK_FALSE(m.graph.has_edge(3, 8));
}

TEST_CASE("H(t,r) structure and fixtures for small t") {
    for (int t = 2; t <= 5; ++t) {
        for (int r = 1; r <= t - 1; ++r) {
            const FamilyMember m = generate(FamilySpec::h(t, r));
            const GraphProfile p = profile(m.graph);
            CHECK(p.leaves.size() == 2 * (t - r));
            CHECK(p.supports.size() == 2);
            CHECK(p.min_degree == 1);
            CHECK(m.graph.order() == 2 * t + 2);
            CHECK(m.graph.edge_count() == 2 * t + 1 + r);
            CHECK(check_expected(m).empty());
        }
    }
}

TEST_CASE("H' members") {
    const FamilyMember g2 = generate(FamilySpec::h_prime(2));
    CHECK(g2.graph.order() == 9);
    CHECK(g2.graph.edge_count() == 12);
    for (int a = 0; a < 3; ++a) CHECK(g2.graph.degree(a) == 4);
    for (int v = 3; v < 9; ++v) CHECK(g2.graph.degree(v) == 2);
    // Figure 2: v3 and v6 attach to a3 and a1.
    CHECK(g2.graph.has_edge(5, 2));
    CHECK(g2.graph.has_edge(5, 0));
    CHECK(g2.graph.has_edge(8, 2));
    CHECK(g2.graph.has_edge(8, 0));
    CHECK(g2.expected.gamma_x2 == 5);
    CHECK(check_expected(g2).empty());

    const int alpha = oracle_solve(ParameterKind::independence(), g2.graph).value;
    const int gamma = oracle_solve(ParameterKind::domination(), g2.graph).value;
    CHECK(alpha == 6);
    CHECK(gamma == 3);
    CHECK(g2.graph.order() - alpha + gamma == 6);

    for (int r = 2; r <= 4; ++r) {
        const Graph g = generate(FamilySpec::h_prime(r)).graph;
        CHECK(profile(g).min_degree == 2);
        CHECK(triangle_free(g));
        CHECK(g.edge_count() == 6 * r);
        CHECK(g.order() == 3 * (r + 1));
    }
}

TEST_CASE("named graphs") {
    const FamilyMember k5 = generate(FamilySpec::complete(5));
    CHECK(k5.graph.edge_count() == 10);
    CHECK(k5.expected.gamma_x2 == 2);
    CHECK(check_expected(k5).empty());

    const FamilyMember s6 = generate(FamilySpec::star(6));
    CHECK(s6.graph.order() == 6);
    CHECK(s6.expected.gamma_x2 == 6);
    CHECK(check_expected(s6).empty());

    const FamilyMember fig3 = generate(FamilySpec::figure3());
    CHECK(fig3.graph.order() == 10);
    CHECK(fig3.graph.edge_count() == 17);
    CHECK(fig3.expected.gamma == 2);
    CHECK(fig3.expected.gamma2 == 4);
    CHECK(fig3.expected.gamma_x2 == 6);
    CHECK(check_expected(fig3).empty());
    // Each half is a wheel: hub of degree 5 (4 rim + other hub), rim degree 3.
    CHECK(fig3.graph.degree(0) == 5);
    CHECK(fig3.graph.degree(5) == 5);
    for (int v : {1, 2, 3, 4, 6, 7, 8, 9}) CHECK(fig3.graph.degree(v) == 3);

    CHECK(generate(FamilySpec::path(5)).graph.edge_count() == 4);
    CHECK(generate(FamilySpec::cycle(5)).graph.edge_count() == 5);
    for (int n = 2; n <= 8; ++n) {
        const Graph g = generate(FamilySpec::complete_plus_pendant(n)).graph;
        CHECK(g.order() == n + 1);
        CHECK(is_claw_free(g));
    }
}

TEST_CASE("invalid family parameters") {
    auto invalid = [](const FamilySpec& spec) {
        try {
            generate(spec);
        } catch (const Error& e) {
            return e.code() == Errc::InvalidFamilyParameters;
        }
        return false;
    };
    CHECK(invalid(FamilySpec::h(2, 2)));
    CHECK(invalid(FamilySpec::h(1, 0)));
    CHECK(invalid(FamilySpec::h(4, 0)));
    CHECK(invalid(FamilySpec::h(31, 1)));
    CHECK(invalid(FamilySpec::h_prime(1)));
    CHECK(invalid(FamilySpec::h_prime(20)));
    CHECK(invalid(FamilySpec::complete(0)));
    CHECK(invalid(FamilySpec::star(1)));
    CHECK(invalid(FamilySpec::cycle(2)));
    CHECK(invalid(FamilySpec::complete_plus_pendant(1)));
    CHECK(invalid(FamilySpec::complete_plus_pendant(62)));
    CHECK_FALSE(invalid(FamilySpec::h(30, 29)));
}

TEST_CASE("labels") {
    CHECK(FamilySpec::h(4, 2).label() == "H(4,2)");
    CHECK(FamilySpec::h_prime(3).label() == "HPrime(3)");
    CHECK(FamilySpec::figure3().label() == "Figure3");
}

}
