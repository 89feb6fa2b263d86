#ifndef TCLIQUE_BAG_GROWTH_HH
#define TCLIQUE_BAG_GROWTH_HH

#include <tclique/chains.hh>
#include <tclique/containment.hh>

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    /**
     * Constants used by the bag-growing procedures. Each empty member means the true
     * value: g is g45, the doubling ladder is c_t = c, c_i = 2g(c_{i+1}) + 2^{i+1} f(c_{i+1}),
     * and the doubling threshold is 1 + 2g(c_1) + 1. True values overflow almost
     * immediately and are then reported with the exact figure from the bounds module.
     */
    struct DeskConstants
    {
        std::function<long(long)> g;
        /// ladder(c_target, c, t) -> c_1..c_t with t = |V(D_n)|.
        std::function<std::vector<long>(long, long, int)> ladder;
        /// threshold(c_target, c) -> C54(c_target, c).
        std::function<long(long, long)> threshold;

        auto overridden() const -> bool { return g || ladder || threshold; }
        auto g_of(long x) const -> long;
        auto ladder_of(long c_target, long c, int n) const -> std::vector<long>;
        auto threshold_of(long c_target, long c, int n) const -> long;
    };

    struct AtomGrowth
    {
        int k = 0;
        std::vector<Vertex> vertices;
        /// atoms[b]: vertices outside v_1..v_k (inside `within`) beating exactly the v_{i+1} with bit i of b set.
        std::vector<VertexSet> atoms;
        long nodes = 0;
    };

    /**
     * Largest k with v_1..v_k realising Q[q_1..q_k] and every atom of ω⃗ >= c_k
     * (thresholds[i-1] = c_i). Among witnesses of that length the one whose smallest
     * atom is largest is kept, ties going to the lexicographically least sequence.
     */
    auto grow_copy_atoms(OmegaEvaluator & omega, const VertexSet & within, const Tournament & q, const std::vector<long> & thresholds,
        long budget = -1) -> AtomGrowth;

    struct HalfToFullOptions
    {
        DeskConstants constants;
        /// Swap the roles of in- and out-neighbourhoods.
        bool swapped = false;
        /// Check that every subset of A ∪ B with ω⃗ >= c contains D_{n-1} when |A ∪ B| is at most this; otherwise assume it.
        int subset_check_limit = 16;
    };

    struct HalfToFullOutcome
    {
        enum class Kind
        {
            d_copy,
            split,
            hypothesis_failed,
            proof_step_contradiction
        };

        Kind kind = Kind::split;
        /// d_copy: a copy of build_D(n).
        Embedding embedding;
        Vertex pivot = -1;
        VertexSet d_alpha, d_beta;
        /// split: B_2 = B \ C.
        VertexSet b2;
        VertexSet c_set;
        int bullet = 0;
        std::string measured, required, diagnostic;
        /// A step relied on overridden constants and was replaced by a search.
        bool relaxed = false;
        bool d_hypothesis_assumed = false;
    };

    auto to_string(HalfToFullOutcome::Kind k) -> std::string;

    /// Turns the half-chain (A, B) into D_n or a subset B_2 of B whose out-neighbourhoods in A have ω⃗ < c.
    auto half_to_full_step(OmegaEvaluator & omega, const VertexSet & a, const VertexSet & b, int n, int c, int c_small, int c_large,
        const HalfToFullOptions & options = {}) -> HalfToFullOutcome;

    struct DoublingOutcome
    {
        enum class Kind
        {
            chain,
            d_copy,
            below_threshold,
            inconclusive
        };

        Kind kind = Kind::chain;
        VertexSet first, second;
        Embedding embedding;
        long threshold = 0;
        bool relaxed = false;
        std::string diagnostic;
    };

    auto to_string(DoublingOutcome::Kind k) -> std::string;

    /// Inside Y: find D_n, or two bags of ω⃗ exactly c_target forming a (c_target, c)-bag-chain, or report ω⃗(Y) below the threshold.
    auto double_bag(OmegaEvaluator & omega, const VertexSet & y, int n, int c, int c_target, const DeskConstants & constants = {})
        -> DoublingOutcome;

    struct Chain8Outcome
    {
        enum class Kind
        {
            chain,
            d_copy,
            below_threshold,
            inconclusive,
            constant_overflow
        };

        Kind kind = Kind::chain;
        BagChain chain;
        ChainReport report;
        Embedding embedding;
        /// c_0 = c_large, c_i = C54(c_{i-1}, c).
        std::vector<long> level_targets;
        std::string diagnostic;
    };

    auto to_string(Chain8Outcome::Kind k) -> std::string;

    /// Three rounds of doubling from V(T) to a (c_large, c)-bag-chain of length 8, or D_n, or a threshold report.
    auto build_chain_length8(OmegaEvaluator & omega, int n, int c, int c_large, const DeskConstants & constants = {}) -> Chain8Outcome;

    auto to_json(const HalfToFullOutcome & o) -> nlohmann::json;
    auto to_json(const DoublingOutcome & o) -> nlohmann::json;
    auto to_json(const Chain8Outcome & o) -> nlohmann::json;
}

#endif
