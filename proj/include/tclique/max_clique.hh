#ifndef TCLIQUE_MAX_CLIQUE_HH
#define TCLIQUE_MAX_CLIQUE_HH

#include <tclique/tournament.hh>

#include <cstdint>
#include <span>

namespace tclique
{
    struct CliqueResult
    {
        int size = 0;
        VertexSet witness;
        long nodes = 0;
    };

    /// Exact maximum clique by branch and bound with a greedy colouring bound.
    auto max_clique(const Graph & g) -> CliqueResult;
    /// Maximum clique of g restricted to `within`.
    auto max_clique(const Graph & g, const VertexSet & within) -> CliqueResult;

    /// Clique number of the graph with adjacency masks adj (n <= 64), restricted to p.
    auto clique_number_mask(std::span<const std::uint64_t> adj, std::uint64_t p) -> int;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
}

#endif
