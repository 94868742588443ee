#pragma once

#include <cstddef>
#include <vector>

// Small directed-graph helpers shared by the analyzer and the evaluator.
// Graphs are adjacency lists over node indices 0..n-1.
namespace esea::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Kahn's algorithm. Produces an order in which every node appears after
// all of its successors (edge a -> b puts b before a); ties are broken by
// smallest node index. Empty result if the graph has a cycle.
std::vector<std::size_t> topological_order(const Adjacency& adj);

bool has_cycle(const Adjacency& adj);

// Johnson's algorithm: every elementary cycle, self-loops included. Each
// cycle lists its nodes in traversal order starting from the smallest;
// cycles are sorted by that starting node.
std::vector<std::vector<std::size_t>> elementary_cycles(const Adjacency& adj);

} // namespace esea::graph
