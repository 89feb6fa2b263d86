#ifndef TCLIQUE_CANONICAL_HH
#define TCLIQUE_CANONICAL_HH

#include <tclique/tournament.hh>

#include <string>
#include <vector>

namespace tclique
{
    inline constexpr int canonical_code_limit = 16;

    /**
     * Isomorphism-invariant byte string: two tournaments get the same code iff they
     * are isomorphic. Computed by colour refinement plus individualisation, taking
     * the lexicographically least adjacency string over all leaves. Throws
     * SizeLimitExceeded above `limit` vertices.
     */
    auto canonical_code(const Tournament & t, int limit = canonical_code_limit) -> std::string;

    /// A permutation realising the canonical form: labelling[i] is the vertex placed at position i.
    auto canonical_labelling(const Tournament & t, int limit = canonical_code_limit) -> std::vector<Vertex>;

    auto to_hex(const std::string & bytes) -> std::string;

    auto isomorphic(const Tournament & a, const Tournament & b) -> bool;
}

#endif
