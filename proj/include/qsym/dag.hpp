#pragma once

#include "qsym/graph.hpp"
#include "qsym/model.hpp"

namespace qsym {

// Expression DAG of a normalized problem as a coloured undirected graph.
// One sum root per equation, variable leaves shared between equations.
// A coefficient-1 linear term hangs directly off the root; other terms are
// "*" nodes (or "sq" for squares) with a literal child when the coefficient
// is not 1. The constant is a literal child of the root. Operators are
// coloured by (depth, symbol) and literals by (depth, value), which keeps
// parent/child direction without a directed search.
ColoredGraph build_dag(const Problem& problem);

}  // namespace qsym
