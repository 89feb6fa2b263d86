#ifndef TCLIQUE_CONTAINMENT_HH
#define TCLIQUE_CONTAINMENT_HH

#include <tclique/constructions.hh>
#include <tclique/tournament.hh>

#include <optional>
#include <string>
#include <vector>

namespace tclique
{
    /// embedding[q] is the host vertex playing pattern vertex q.
    using Embedding = std::vector<Vertex>;

    struct ContainmentOptions
    {
        /// Search nodes; negative means unlimited.
        long budget = -1;
    };

    /**
     * Induced copy of `pattern` in `host`, found by backtracking over a static
     * pattern order (most degree-constrained first) with forward-checked domains.
     * The first embedding in that order is returned, so results are reproducible.
     */
    auto contains_copy(const Tournament & host, const Tournament & pattern, const ContainmentOptions & options = {})
        -> std::optional<Embedding>;

    /// As above, restricted to host vertices in `within`.
    auto contains_copy(const Tournament & host, const VertexSet & within, const Tournament & pattern,
        const ContainmentOptions & options = {}) -> std::optional<Embedding>;

    /// True iff the map is injective and preserves every arc in both directions.
    auto verify_embedding(const Tournament & host, const Tournament & pattern, const Embedding & map) -> bool;

    /// Lexicographically least embedding (by image sequence) inside `within`, or none.
    auto least_embedding(const Tournament & host, const VertexSet & within, const Tournament & pattern) -> std::optional<Embedding>;

    struct FamilyIndex
    {
        int value = 0;
        std::string warning;
    };

    /// Largest n with a copy of A_n (or D_n) in t.
    auto family_index(const Tournament & t, Family family) -> FamilyIndex;

    /// A module M with 1 < |M| < n, or none when t is prime.
    auto find_module(const Tournament & t) -> std::optional<VertexSet>;
    auto is_prime(const Tournament & t) -> bool;
}

#endif
