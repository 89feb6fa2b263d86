#ifndef TCLIQUE_LEMMA_SUITE_HH
#define TCLIQUE_LEMMA_SUITE_HH

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tclique
{
    /// One property checked over many cases. For conditional statements `held` counts the cases whose hypotheses measurably held.
    struct PropertyResult
    {
        std::string name;
        long cases = 0;
        long held = 0;
        long violations = 0;
        std::vector<std::string> examples;
        double seconds = 0;

        auto ok() const -> bool { return violations == 0; }
    };

    struct PropertyParams
    {
        std::uint64_t seed = 1;
        long cases = 100;
        int max_n = 10;
    };

    /// ω⃗(T) <= ω⃗(X) + ω⃗(Y) over random tournaments and bipartitions.
    auto property_subadditivity(const PropertyParams & p) -> PropertyResult;
    auto property_omega_le_chi(const PropertyParams & p) -> PropertyResult;
    /// tournament_of(backedge_graph(T, <)) = T and backedges plus forward arcs = n(n-1)/2.
    auto property_backedge_roundtrip(const PropertyParams & p) -> PropertyResult;
    /// Every mountain found verifies and an m-mountain has at most (m!)^2 vertices.
    auto property_mountain_size(const PropertyParams & p) -> PropertyResult;
    /// Random mountain, random 2-colouring, random a + b = m + 1: a monochromatic witness of the right order and colour.
    auto property_two_colouring(const PropertyParams & p) -> PropertyResult;
    /// ω⃗(T) >= floor(log2 m) for the largest m-mountain.
    auto property_log_bound(const PropertyParams & p) -> PropertyResult;
    /// The A/D/U freeness and primality facts at small indices (seed and cases unused).
    auto property_family_freeness(const PropertyParams & p) -> PropertyResult;
    /// Zones and bags partition V(T); reassignment is idempotent.
    auto property_zone_partition(const PropertyParams & p) -> PropertyResult;
    /// Bidirectionally rich vertices: ω⃗(B) >= ω⃗(T) - ω⃗(X) - ω⃗(Y) and ω⃗(X), ω⃗(Y) < g(b).
    auto property_rich_vertices(const PropertyParams & p) -> PropertyResult;
    /// Merge post-bounds and a verifying dichotomy certificate on random near-bag-chains meeting the theorem's hypotheses (m = 2).
    auto property_chain_dichotomy(const PropertyParams & p) -> PropertyResult;
    /// Mountain growing at the true q: no contradiction whenever the hypotheses hold.
    auto property_grow_mountain(const PropertyParams & p) -> PropertyResult;
    /// Half-chain to bag-chain at the true g: no contradiction whenever the hypotheses hold.
    auto property_half_to_full(const PropertyParams & p) -> PropertyResult;
    /// Bag/zone inequalities whenever the audit's hypotheses hold.
    auto property_zone_inequalities(const PropertyParams & p) -> PropertyResult;

    struct LemmaSuiteOptions
    {
        std::uint64_t seed = 1;
        int max_n = 10;
        /// Multiplies every default case count.
        double scale = 1.0;
    };

    struct LemmaSuiteReport
    {
        std::vector<PropertyResult> properties;

        auto ok() const -> bool;
    };

    auto run_lemma_suite(const LemmaSuiteOptions & options = {}) -> LemmaSuiteReport;

    auto to_json(const PropertyResult & r) -> nlohmann::json;
    auto to_json(const LemmaSuiteReport & r) -> nlohmann::json;
}

#endif
