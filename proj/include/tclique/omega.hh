#ifndef TCLIQUE_OMEGA_HH
#define TCLIQUE_OMEGA_HH

#include <tclique/tournament.hh>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace tclique
{
    enum class SolveStatus
    {
        exact,
        exceeded
    };

    auto to_string(SolveStatus s) -> std::string;

    struct OmegaOptions
    {
        int exact_limit = 14;
        /// Search-tree nodes; negative means unlimited.
        long budget = -1;
        /// Return the lexicographically least optimal placement sequence.
        bool lex_least = true;
    };

    struct OmegaResult
    {
        SolveStatus status = SolveStatus::exact;
        /// Meaningful when status == exact; otherwise equals upper.
        int value = 0;
        int lower = 0, upper = 0;
        /// An ordering achieving `upper`.
        std::vector<Vertex> order;
        bool lex_least = false;
        long nodes = 0;
        std::string lower_witness = "exhaustive";
    };

    /**
     * Exact tournament clique number: minimum over vertex orderings of the clique
     * number of the backedge graph. Throws SizeLimitExceeded above exact_limit
     * vertices; a budget overrun yields status exceeded with the bounds reached.
     */
    auto omega_dir(const Tournament & t, const OmegaOptions & options = {}) -> OmegaResult;

    /// omega_dir of t[s]; the order is reported in t's labels.
    auto omega_dir(const Tournament & t, const VertexSet & s, const OmegaOptions & options = {}) -> OmegaResult;

    /// Exact value of t[s]; throws BudgetExceeded if the budget runs out.
    auto omega_value(const Tournament & t, const VertexSet & s, const OmegaOptions & options = {}) -> int;
    auto omega_value(const Tournament & t, const OmegaOptions & options = {}) -> int;

    /// Clique number of backedge_graph(t, order).
    auto ordering_clique_number(const Tournament & t, const std::vector<Vertex> & order) -> int;

    struct OmegaBoundsOptions
    {
        std::uint64_t seed = 0;
        int anneal_iterations = 4000;
        int samples = 24;
        int sample_size = 12;
        OmegaOptions exact;
    };

    struct OmegaBounds
    {
        int lower = 0, upper = 0;
        std::vector<Vertex> upper_order;
        VertexSet lower_set;
    };

    /// Certified bracket: lower from exact values on sampled induced subsets, upper from annealed orderings.
    auto omega_dir_bounds(const Tournament & t, const OmegaBoundsOptions & options = {}) -> OmegaBounds;
    auto omega_dir_bounds(const Tournament & t, const VertexSet & s, const OmegaBoundsOptions & options = {}) -> OmegaBounds;

    /// Vertices sorted by decreasing out-degree, then a bubble pass removing adjacent backedges.
    auto score_order(const Tournament & t) -> std::vector<Vertex>;
}

#endif
