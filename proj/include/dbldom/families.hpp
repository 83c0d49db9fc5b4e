#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbldom/graph.hpp"
#include "dbldom/solvers.hpp"

namespace dbldom {

enum class FamilyId { H, HPrime, Complete, Star, Path, Cycle, CompletePlusPendant, Figure3 };

/// A family member. Parameters by family:
///   H(t, r)                 t >= 2, 1 <= r <= t-1
///   HPrime(r)               r >= 2
///   Complete(n), Path(n)    n >= 1
///   Star(n)                 n >= 2, K_{1,n-1}
///   Cycle(n)                n >= 3
///   CompletePlusPendant(n)  n >= 2, order n+1
///   Figure3                 none
struct FamilySpec {
    FamilyId family = FamilyId::Figure3;
    int a = 0;
    int b = 0;

    static FamilySpec h(int t, int r) { return {FamilyId::H, t, r}; }
    static FamilySpec h_prime(int r) { return {FamilyId::HPrime, r, 0}; }
    static FamilySpec complete(int n) { return {FamilyId::Complete, n, 0}; }
    static FamilySpec star(int n) { return {FamilyId::Star, n, 0}; }
    static FamilySpec path(int n) { return {FamilyId::Path, n, 0}; }
    static FamilySpec cycle(int n) { return {FamilyId::Cycle, n, 0}; }
    static FamilySpec complete_plus_pendant(int n) { return {FamilyId::CompletePlusPendant, n, 0}; }
    static FamilySpec figure3() { return {FamilyId::Figure3, 0, 0}; }

    /// e.g. "H(4,2)", "HPrime(3)", "Figure3".
    std::string label() const;
};

/// Closed-form values known for a family member. Absent entries are not
/// asserted.
struct ExpectedValues {
    std::optional<int> gamma;
    std::optional<int> gamma2;
    std::optional<int> gamma_x2;
    std::optional<int> gamma_t;
    std::optional<int> i;
    std::optional<int> alpha;
    std::optional<int> beta;
    std::optional<int> leaves;
    std::optional<int> supports;

    /// Present parameter entries as (kind, value) pairs.
    std::vector<std::pair<ParameterKind, int>> parameters() const;
    /// Present entries as (name, value), parameters first, then
    /// "leaves", "supports".
    std::vector<std::pair<std::string, int>> entries() const;
};

struct FamilyMember {
    Graph graph;
    ExpectedValues expected;
};

/// Vertex layouts:
///   H(t,r): u = 0, v_1..v_t = 1..t, u' = t+1, v'_1..v'_t = t+2..2t+1.
///   HPrime(r): a_1, a_2, a_3 = 0, 1, 2; v_j = 2 + j for j = 1..3r; v_j is
///     adjacent to a_i and a_{i+1} where i = j mod 3 taken in {1,2,3} and
///     a_4 = a_1.
///   Star(n): center 0. CompletePlusPendant(n): K_n on 0..n-1, pendant n on 0.
///   Figure3: hubs 0 and 5, rims 1..4 and 6..9, each rim the cycle
///     r1-r3-r2-r4-r1, hubs adjacent.
/// Throws Error(InvalidFamilyParameters) when the parameters are out of range.
FamilyMember generate(const FamilySpec& spec);

/// Per-entry comparison of solver output against ExpectedValues.
struct FixtureMismatch {
    std::string name;
    int expected = 0;
    int actual = 0;
};
std::vector<FixtureMismatch> check_expected(const FamilyMember& member);

}  // namespace dbldom
