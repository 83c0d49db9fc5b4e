#pragma once

#include <optional>
#include <string>

#include "dbldom/solvers.hpp"

namespace dbldom::detail {

struct Infeasibility {
    Errc code;
    std::string message;
};

std::optional<Infeasibility> check_feasible(ParameterKind kind, const Graph& g, VertexSet required);
void throw_if_infeasible(ParameterKind kind, const Graph& g, VertexSet required);

}  // namespace dbldom::detail
