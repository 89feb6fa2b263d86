#ifndef TCLIQUE_CHAINS_HH
#define TCLIQUE_CHAINS_HH

#include <tclique/evaluator.hh>
#include <tclique/tournament.hh>

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    /// (B_1..B_t) with ω⃗(B_i) = c and backward neighbourhoods between any two bags below a.
    struct BagChain
    {
        std::vector<VertexSet> bags;
        int c = 0, a = 0;
    };

    /// (Q_1..Q_r) with ω⃗(Q_i) <= c and backward neighbourhoods into the union of later/earlier bags at most a.
    struct NearBagChain
    {
        std::vector<VertexSet> bags;
        int c = 0, a = 0;
    };

    /// Bag indices are 1-based; j = 0 when the rule concerns a single bag.
    struct ChainViolation
    {
        std::string rule;
        int i = 0, j = 0;
        Vertex v = -1;
        int measured = 0;
        int bound = 0;
    };

    struct ChainReport
    {
        bool ok = true;
        std::vector<ChainViolation> violations;
        std::string evaluator;
        long checks = 0;
    };

    auto check_disjoint(const std::vector<VertexSet> & bags) -> void;
    auto union_of(int n, const std::vector<VertexSet> & bags) -> VertexSet;

    auto verify_bag_chain(OmegaEvaluator & omega, const BagChain & chain) -> ChainReport;
    auto verify_bag_chain(const Tournament & t, const BagChain & chain) -> ChainReport;
    auto verify_near_bag_chain(OmegaEvaluator & omega, const NearBagChain & chain) -> ChainReport;
    auto verify_near_bag_chain(const Tournament & t, const NearBagChain & chain) -> ChainReport;

    /**
     * Zones Z_{1/2}..Z_{t-1/2} of a bag chain; zones[k] holds Z_{k+1/2}. A vertex goes
     * to Z_{j-1/2} for the largest j with ω⃗(B_j^-(v)) >= c_small, and to Z_{1/2} when
     * there is no such j.
     */
    struct ZoneSequence
    {
        std::vector<VertexSet> zones;
        int c_small = 0;
        /// zone_of[v] = k for v in Z_{k+1/2}, -1 for bag vertices.
        std::vector<int> zone_of;
        /// For Z_{1/2}: "rich in B_1" or "no rich bag"; empty elsewhere.
        std::vector<std::string> reason;
    };

    auto assign_zones(OmegaEvaluator & omega, const std::vector<VertexSet> & bags, int c_small) -> ZoneSequence;
    auto assign_zones(const Tournament & t, const std::vector<VertexSet> & bags, int c_small) -> ZoneSequence;

    /// True iff the zones and bags partition V(T).
    auto zones_partition(const Tournament & t, const std::vector<VertexSet> & bags, const ZoneSequence & z) -> bool;

    struct ZoneAudit
    {
        bool skipped = false;
        std::string reason;
        /// Inequalities were evaluated although a hypothesis failed.
        bool forced = false;
        std::vector<ChainViolation> violations;
        long checks = 0;
        std::string evaluator;

        auto ok() const -> bool { return violations.empty(); }
    };

    struct ZoneAuditOptions
    {
        /// Evaluate the inequalities even when a hypothesis fails (the result is then informational).
        bool evaluate_anyway = false;
        /// Largest vertex count on which the D_{n-1} hypothesis is checked over all subsets.
        int subset_check_limit = 16;
    };

    /**
     * Evaluates the four families of bag/zone inequalities (btb, btz, ztb, ztz) on a
     * chain B and its zones, after checking that T is D_n-free, that B is a
     * (c_large, c_small)-bag-chain with c_large >= 2^n c_small and that every subset
     * with ω⃗ >= c_small contains D_{n-1}.
     */
    auto zone_lemma_audit(OmegaEvaluator & omega, const BagChain & b, const ZoneSequence & z, int n, const ZoneAuditOptions & options = {})
        -> ZoneAudit;

    /// Z^{(r)} = (Z_{r+1/2}, Z_{r+7/2}, ...) for r in {0,1,2}.
    auto residue_chain(const ZoneSequence & z, int r) -> std::vector<VertexSet>;

    struct MergeResult
    {
        NearBagChain chain;
        std::vector<int> omegas;
        /// first_input[l] is the index of the first input bag merged into bag l.
        std::vector<int> first_input;
    };

    /// Greedy left-to-right merge closing a bag once its ω⃗ exceeds c; the result is a (2c, a)-near-bag-chain.
    auto merge_bags(OmegaEvaluator & omega, const NearBagChain & q, int c) -> MergeResult;

    /// Edges uv for arcs u->v with u in a later bag than v.
    auto backward_graph(const Tournament & t, const std::vector<VertexSet> & bags) -> Graph;

    /// Vertices whose in- and out-neighbourhoods both have ω⃗ >= b.
    auto bidirectional_rich(OmegaEvaluator & omega, int b) -> VertexSet;
    auto bidirectional_rich(const Tournament & t, int b) -> VertexSet;

    /// A subset of `within` with ω⃗ >= threshold containing no copy of `pattern`, if any (exhaustive; needs |within| <= limit).
    auto pattern_hypothesis_violation(OmegaEvaluator & omega, const VertexSet & within, int threshold, const Tournament & pattern,
        int limit = 16) -> std::optional<VertexSet>;

    auto bags_to_json(const std::vector<VertexSet> & bags) -> nlohmann::json;
    auto to_json(const ChainReport & r) -> nlohmann::json;
    auto to_json(const ZoneSequence & z) -> nlohmann::json;
    auto to_json(const ZoneAudit & a) -> nlohmann::json;
}

#endif
