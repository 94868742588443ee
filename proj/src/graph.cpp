#include "esea/graph.hpp"

#include <algorithm>
#include <queue>

namespace esea::graph {

std::vector<std::size_t> topological_order(const Adjacency& adj) {
    const std::size_t n = adj.size();
    // Edge a -> b means "a depends on b": b must be placed first, so work
    // on out-degrees and walk reversed edges.
    std::vector<std::size_t> out_degree(n, 0);
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t a = 0; a < n; ++a) {
        out_degree[a] = adj[a].size();
        for (std::size_t b : adj[a]) reverse[b].push_back(a);
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (out_degree[v] == 0) ready.push(v);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::size_t a : reverse[v]) {
            if (--out_degree[a] == 0) ready.push(a);
        }
    }
    if (order.size() != n) return {};
    return order;
}

bool has_cycle(const Adjacency& adj) {
    return !adj.empty() && topological_order(adj).empty();
}

namespace {

// Johnson's elementary-circuit search, restricted to the subgraph of
// nodes >= start.
struct CircuitFinder {
    const Adjacency& adj;
    std::size_t start = 0;
    std::vector<bool> blocked;
    std::vector<std::vector<std::size_t>> block_list;
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>>& cycles;

    CircuitFinder(const Adjacency& a, std::vector<std::vector<std::size_t>>& out)
        : adj(a), blocked(a.size(), false), block_list(a.size()), cycles(out) {}

    void unblock(std::size_t v) {
        blocked[v] = false;
        for (std::size_t w : block_list[v]) {
            if (blocked[w]) unblock(w);
        }
        block_list[v].clear();
    }

    bool circuit(std::size_t v) {
        bool found = false;
        stack.push_back(v);
        blocked[v] = true;
        for (std::size_t w : adj[v]) {
            if (w < start) continue;
            if (w == start) {
                cycles.push_back(stack);
                found = true;
            } else if (!blocked[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (std::size_t w : adj[v]) {
                if (w < start) continue;
                auto& list = block_list[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        stack.pop_back();
        return found;
    }
};

} // namespace

std::vector<std::vector<std::size_t>> elementary_cycles(const Adjacency& adj) {
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        CircuitFinder finder(adj, cycles);
        finder.start = s;
        finder.circuit(s);
    }
    return cycles;
}

} // namespace esea::graph
