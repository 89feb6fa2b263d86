#include <tclique/chi.hh>
#include <tclique/errors.hh>

#include <algorithm>
#include <bit>

using std::uint64_t;
using std::vector;

namespace tclique
{
    namespace
    {
        struct OutOfBudget
        {
        };

        struct Search
        {
            int n;
            vector<uint64_t> out, in;
            vector<int> order;
            long budget;
            long nodes = 0;
            int lower;

            vector<uint64_t> classes;
            int best;
            vector<uint64_t> best_classes;

            // adding v to cls keeps it transitive iff no arc runs from out(v)∩cls to in(v)∩cls
            auto fits(int v, uint64_t cls) const -> bool
            {
                uint64_t heads = out[static_cast<size_t>(v)] & cls, tails = in[static_cast<size_t>(v)] & cls;
                for (uint64_t h = heads; h; h &= h - 1)
                    if (out[static_cast<size_t>(std::countr_zero(h))] & tails)
                        return false;
                return true;
            }

            auto search(int i, int used) -> void
            {
                if (best == lower)
                    return;
                if (budget >= 0 && nodes >= budget)
                    throw OutOfBudget{};
                ++nodes;
                if (used >= best)
                    return;
                if (i == n) {
                    best = used;
                    best_classes.assign(classes.begin(), classes.begin() + used);
                    return;
                }
                int v = order[static_cast<size_t>(i)];
                for (int c = 0; c < used; ++c)
                    if (fits(v, classes[static_cast<size_t>(c)])) {
                        classes[static_cast<size_t>(c)] |= uint64_t{1} << v;
                        search(i + 1, used);
                        classes[static_cast<size_t>(c)] &= ~(uint64_t{1} << v);
                    }
                if (used + 1 < best) {
                    classes[static_cast<size_t>(used)] = uint64_t{1} << v;
                    search(i + 1, used + 1);
                    classes[static_cast<size_t>(used)] = 0;
                }
            }
        };

        auto to_sets(int n, const vector<uint64_t> & masks) -> vector<VertexSet>
        {
            vector<VertexSet> result;
            for (auto m : masks)
                result.push_back(VertexSet::from_mask(n, m));
            return result;
        }
    }

    auto chi_dir(const Tournament & t, const ChiOptions & options) -> ChiResult
    {
        int n = t.size();
        if (n > options.exact_limit || n > 64)
            throw SizeLimitExceeded("chi_dir exact mode supports at most " + std::to_string(std::min(options.exact_limit, 64)) +
                " vertices, got " + std::to_string(n));
        ChiResult result;
        if (n == 0)
            return result;

        Search s;
        s.n = n;
        s.budget = options.budget;
        for (int v = 0; v < n; ++v) {
            s.out.push_back(t.out(v).mask());
            s.in.push_back(t.in(v).mask());
        }
        // vertices on many directed triangles first
        vector<long> triangles(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (uint64_t h = s.out[static_cast<size_t>(v)]; h; h &= h - 1)
                triangles[static_cast<size_t>(v)] += std::popcount(s.out[static_cast<size_t>(std::countr_zero(h))] & s.in[static_cast<size_t>(v)]);
        for (int v = 0; v < n; ++v)
            s.order.push_back(v);
        std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return triangles[static_cast<size_t>(a)] > triangles[static_cast<size_t>(b)]; });

        s.lower = is_transitive(t) ? 1 : 2;

        // first fit for the incumbent
        vector<uint64_t> greedy;
        for (int v : s.order) {
            bool placed = false;
            for (auto & c : greedy)
                if (s.fits(v, c)) {
                    c |= uint64_t{1} << v;
                    placed = true;
                    break;
                }
            if (! placed)
                greedy.push_back(uint64_t{1} << v);
        }
        s.best = static_cast<int>(greedy.size());
        s.best_classes = greedy;
        s.classes.assign(static_cast<size_t>(n), 0);

        try {
            s.search(0, 0);
        }
        catch (const OutOfBudget &) {
            result.status = SolveStatus::exceeded;
            result.lower = s.lower;
            result.upper = result.value = s.best;
            result.classes = to_sets(n, s.best_classes);
            result.nodes = s.nodes;
            return result;
        }
        result.value = result.lower = result.upper = s.best;
        result.classes = to_sets(n, s.best_classes);
        std::sort(result.classes.begin(), result.classes.end(), [](const VertexSet & a, const VertexSet & b) { return a.lex_compare(b) < 0; });
        result.nodes = s.nodes;
        return result;
    }

    auto is_transitive_partition(const Tournament & t, const vector<VertexSet> & classes) -> bool
    {
        VertexSet seen = t.empty_set();
        for (auto & c : classes) {
            if (c.universe() != t.size() || c.intersects(seen) || ! is_transitive(t, c))
                return false;
            seen |= c;
        }
        return seen == t.vertices();
    }
}
