#include <tclique/evaluator.hh>
#include <tclique/errors.hh>

namespace tclique
{
    auto to_string(EvaluatorMode m) -> std::string
    {
        return m == EvaluatorMode::exact ? "exact" : "bounds";
    }

    auto evaluator_mode_from_string(const std::string & s) -> EvaluatorMode
    {
        if (s == "exact")
            return EvaluatorMode::exact;
        if (s == "bounds")
            return EvaluatorMode::bounds;
        throw InvalidInput("unknown evaluator '" + s + "' (expected exact or bounds)");
    }

    OmegaEvaluator::OmegaEvaluator(const Tournament & t, EvaluatorMode mode, OmegaOptions exact, OmegaBoundsOptions bounds) :
        _t(t),
        _mode(mode),
        _exact(exact),
        _bounds(bounds)
    {
    }

    auto OmegaEvaluator::solve_exact(const VertexSet & s) -> OmegaInterval
    {
        ++_exact_solves;
        auto r = omega_dir(_t, s, _exact);
        if (r.status != SolveStatus::exact)
            return {r.lower, r.upper, r.order};
        return {r.value, r.value, r.order};
    }

    auto OmegaEvaluator::interval(const VertexSet & s) -> OmegaInterval
    {
        ++_queries;
        if (auto it = _cache.find(s); it != _cache.end())
            return it->second;
        OmegaInterval result;
        if (s.count() <= 2 || (_mode == EvaluatorMode::exact))
            result = solve_exact(s);
        else {
            auto b = omega_dir_bounds(_t, s, _bounds);
            result = {b.lower, b.upper, b.upper_order};
        }
        _cache.emplace(s, result);
        return result;
    }

    auto OmegaEvaluator::value(const VertexSet & s) -> int
    {
        auto i = interval(s);
        if (i.exact())
            return i.lower;
        if (s.count() > _exact.exact_limit)
            throw SizeLimitExceeded("omega: bracket [" + std::to_string(i.lower) + "," + std::to_string(i.upper) + "] on " +
                std::to_string(s.count()) + " vertices exceeds the exact limit");
        auto e = solve_exact(s);
        if (! e.exact())
            throw BudgetExceeded("omega: budget exhausted with bracket [" + std::to_string(e.lower) + "," + std::to_string(e.upper) + "]");
        _cache[s] = e;
        return e.lower;
    }

    auto OmegaEvaluator::at_least(const VertexSet & s, int k) -> bool
    {
        auto i = interval(s);
        if (i.lower >= k)
            return true;
        if (i.upper < k)
            return false;
        return value(s) >= k;
    }

    auto OmegaEvaluator::order(const VertexSet & s) -> std::vector<Vertex>
    {
        auto i = interval(s);
        if (! i.exact() && s.count() <= _exact.exact_limit)
            value(s);
        return _cache.at(s).order;
    }
}
