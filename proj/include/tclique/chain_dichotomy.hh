#ifndef TCLIQUE_CHAIN_DICHOTOMY_HH
#define TCLIQUE_CHAIN_DICHOTOMY_HH

#include <tclique/chains.hh>
#include <tclique/containment.hh>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    struct DichotomyOptions
    {
        /// Check by exhaustive search that every subset with ω⃗ >= c_small contains A_{m-1}; otherwise it is assumed.
        bool check_small_hypothesis = true;
        int subset_check_limit = 16;
        /// Proceed when c < 2 m! a + c_small; a failed construction is then reported instead of thrown.
        bool relaxed = false;
    };

    struct DichotomyResult
    {
        enum class Kind
        {
            ordering,
            embedding,
            hypothesis_failed
        };

        Kind kind = Kind::ordering;
        MergeResult merged;
        /// ω of the backward-edge graph of the merged chain.
        int backward_clique = 0;

        std::vector<Vertex> order;
        int order_clique = 0;
        /// 4mc.
        long bound = 0;

        /// K in bag order, the odd-position subset K', and the A_{m-1} copies X_2, X_4, ...
        std::vector<Vertex> clique, k_prime;
        std::vector<VertexSet> x_sets;
        /// Copy of A_m: embedding[q] is the host vertex for pattern vertex q of build_A(m).
        Embedding embedding;

        std::string diagnostic;
        bool verified = false;
        bool small_hypothesis_assumed = false;
        /// Set when a theorem hypothesis failed but the run continued in relaxed mode.
        std::string relaxed_note;
    };

    auto to_string(DichotomyResult::Kind k) -> std::string;

    /// Clique number of the backedge graph of t restricted to the vertices of `order`, in that order.
    auto partial_ordering_clique_number(const Tournament & t, const std::vector<Vertex> & order) -> int;

    /**
     * Merges the near-bag-chain, builds the backward-edge graph G and either emits the
     * concatenated ordering (when ω(G) < 2m) with its clique number below 4mc, or
     * extracts a copy of A_m from a 2m-clique of G.
     */
    auto chain_dichotomy(OmegaEvaluator & omega, const NearBagChain & q, int m, int c_small, const DichotomyOptions & options = {})
        -> DichotomyResult;
    auto chain_dichotomy(const Tournament & t, const NearBagChain & q, int m, int c_small, const DichotomyOptions & options = {})
        -> DichotomyResult;

    auto to_json(const DichotomyResult & r) -> nlohmann::json;
}

#endif
