#ifndef TCLIQUE_EVALUATOR_HH
#define TCLIQUE_EVALUATOR_HH

#include <tclique/omega.hh>

#include <string>
#include <unordered_map>
#include <vector>

namespace tclique
{
    enum class EvaluatorMode
    {
        exact,
        bounds
    };

    auto to_string(EvaluatorMode m) -> std::string;
    auto evaluator_mode_from_string(const std::string & s) -> EvaluatorMode;

    struct OmegaInterval
    {
        int lower = 0, upper = 0;
        /// An ordering of the set achieving `upper`, in host labels.
        std::vector<Vertex> order;

        auto exact() const -> bool { return lower == upper; }
    };

    /**
     * Cached ω⃗ queries on induced subsets of one tournament. In bounds mode the
     * certified bracket is used first and an exact solve is attempted only when a
     * decision needs it; undecidable queries throw rather than guess.
     */
    class OmegaEvaluator
    {
    public:
        explicit OmegaEvaluator(const Tournament & t, EvaluatorMode mode = EvaluatorMode::exact, OmegaOptions exact = {},
            OmegaBoundsOptions bounds = {});

        auto tournament() const -> const Tournament & { return _t; }
        auto mode() const -> EvaluatorMode { return _mode; }

        auto interval(const VertexSet & s) -> OmegaInterval;
        /// Exact value; throws BudgetExceeded or SizeLimitExceeded if it cannot be pinned down.
        auto value(const VertexSet & s) -> int;
        /// Decides ω⃗(s) >= k.
        auto at_least(const VertexSet & s, int k) -> bool;
        /// An optimal ordering of s (exact mode) or the best known one.
        auto order(const VertexSet & s) -> std::vector<Vertex>;

        auto queries() const -> long { return _queries; }
        auto exact_solves() const -> long { return _exact_solves; }

    private:
        const Tournament & _t;
        EvaluatorMode _mode;
        OmegaOptions _exact;
        OmegaBoundsOptions _bounds;
        std::unordered_map<VertexSet, OmegaInterval, VertexSetHash> _cache;
        long _queries = 0, _exact_solves = 0;

        auto solve_exact(const VertexSet & s) -> OmegaInterval;
    };
}

#endif
