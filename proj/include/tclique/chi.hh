#ifndef TCLIQUE_CHI_HH
#define TCLIQUE_CHI_HH

#include <tclique/omega.hh>
#include <tclique/tournament.hh>

#include <vector>

namespace tclique
{
    struct ChiOptions
    {
        int exact_limit = 20;
        long budget = -1;
    };

    struct ChiResult
    {
        SolveStatus status = SolveStatus::exact;
        int value = 0;
        int lower = 0, upper = 0;
        /// A partition into transitive classes achieving `upper`.
        std::vector<VertexSet> classes;
        long nodes = 0;
    };

    /// Dichromatic number: fewest transitive classes partitioning V(t). Throws SizeLimitExceeded above exact_limit.
    auto chi_dir(const Tournament & t, const ChiOptions & options = {}) -> ChiResult;

    /// True iff the classes partition V(t) and each induces a transitive subtournament.
    auto is_transitive_partition(const Tournament & t, const std::vector<VertexSet> & classes) -> bool;
}

#endif
