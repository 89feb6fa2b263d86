#include <tclique/errors.hh>
#include <tclique/max_clique.hh>
#include <tclique/omega.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

using std::uint64_t;
using std::vector;

namespace tclique
{
    auto to_string(SolveStatus s) -> std::string
    {
        return s == SolveStatus::exact ? "exact" : "exceeded";
    }

    namespace
    {
        struct OutOfBudget
        {
        };

        inline auto bit(int v) -> uint64_t
        {
            return uint64_t{1} << v;
        }

        /*
         * Decision search: is there an ordering extending the fixed prefix whose
         * backedge graph has clique number at most k? Swapping two consecutive
         * vertices joined by a backedge deletes that edge and changes nothing else,
         * so after the fixed prefix it suffices to try orders in which consecutive
         * vertices are joined by forward arcs.
         */
        struct Decider
        {
            int n;
            vector<uint64_t> out;
            long budget;
            long nodes = 0;

            int k = 0;
            vector<uint64_t> prefix_adj;
            vector<int> through;
            vector<Vertex> order;
            uint64_t placed = 0;

            Decider(const Tournament & t, long b) :
                n(t.size()), out(static_cast<size_t>(t.size())), budget(b), prefix_adj(static_cast<size_t>(t.size()), 0),
                through(static_cast<size_t>(t.size()), 0)
            {
                for (int v = 0; v < n; ++v)
                    out[static_cast<size_t>(v)] = t.out(v).mask();
            }

            auto all() const -> uint64_t
            {
                return n == 64 ? ~uint64_t{0} : bit(n) - 1;
            }

            auto reset(int new_k) -> void
            {
                k = new_k;
                placed = 0;
                order.clear();
                std::fill(prefix_adj.begin(), prefix_adj.end(), 0);
                std::fill(through.begin(), through.end(), 0);
            }

            // places v; returns false (and leaves state untouched) if some vertex becomes dead
            auto place(int v, vector<int> & saved) -> bool
            {
                if (through[static_cast<size_t>(v)] + 1 > k)
                    return false;
                uint64_t remaining = all() & ~placed & ~bit(v);
                saved.assign(through.begin(), through.end());
                uint64_t common_base = placed & out[static_cast<size_t>(v)];
                for (uint64_t r = remaining & ~out[static_cast<size_t>(v)]; r; r &= r - 1) {
                    int w = std::countr_zero(r);
                    // w beats v, so w joins v and the prefix clique below both
                    int c = 1 + clique_number_mask(prefix_adj, common_base & out[static_cast<size_t>(w)]);
                    if (c > through[static_cast<size_t>(w)]) {
                        through[static_cast<size_t>(w)] = c;
                        if (c + 1 > k) {
                            through = saved;
                            return false;
                        }
                    }
                }
                prefix_adj[static_cast<size_t>(v)] = common_base;
                for (uint64_t r = common_base; r; r &= r - 1)
                    prefix_adj[static_cast<size_t>(std::countr_zero(r))] |= bit(v);
                placed |= bit(v);
                order.push_back(v);
                return true;
            }

            auto unplace(int v, const vector<int> & saved) -> void
            {
                placed &= ~bit(v);
                order.pop_back();
                for (uint64_t r = prefix_adj[static_cast<size_t>(v)]; r; r &= r - 1)
                    prefix_adj[static_cast<size_t>(std::countr_zero(r))] &= ~bit(v);
                prefix_adj[static_cast<size_t>(v)] = 0;
                through = saved;
            }

            auto search(int last) -> bool
            {
                if (budget >= 0 && nodes >= budget)
                    throw OutOfBudget{};
                ++nodes;
                uint64_t remaining = all() & ~placed;
                if (! remaining)
                    return true;
                uint64_t candidates = last == -1 ? remaining : remaining & out[static_cast<size_t>(last)];
                vector<int> saved;
                for (uint64_t c = candidates; c; c &= c - 1) {
                    int v = std::countr_zero(c);
                    if (! place(v, saved))
                        continue;
                    if (search(v))
                        return true;
                    unplace(v, saved);
                }
                return false;
            }
        };

        auto transitive_by_scores(const Tournament & t) -> bool
        {
            return is_transitive(t);
        }
    }

    auto ordering_clique_number(const Tournament & t, const vector<Vertex> & order) -> int
    {
        auto b = backedge_graph(t, order);
        if (t.size() <= 64) {
            vector<uint64_t> adj(static_cast<size_t>(t.size()));
            for (int v = 0; v < t.size(); ++v)
                adj[static_cast<size_t>(v)] = b.edges.neighbours(v).mask();
            return clique_number_mask(adj, t.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << t.size()) - 1);
        }
        return max_clique(b.edges).size;
    }

    auto score_order(const Tournament & t) -> vector<Vertex>
    {
        vector<Vertex> order(static_cast<size_t>(t.size()));
        for (int v = 0; v < t.size(); ++v)
            order[static_cast<size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return t.out_degree(a) > t.out_degree(b); });
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < order.size(); ++i)
                if (t.arc(order[i + 1], order[i])) {
                    std::swap(order[i], order[i + 1]);
                    changed = true;
                }
        }
        return order;
    }

    auto omega_dir(const Tournament & t, const OmegaOptions & options) -> OmegaResult
    {
        int n = t.size();
        if (n > options.exact_limit || n > 64)
            throw SizeLimitExceeded("omega_dir exact mode supports at most " + std::to_string(std::min(options.exact_limit, 64)) +
                " vertices, got " + std::to_string(n));

        OmegaResult result;
        if (n == 0) {
            result.lex_least = true;
            return result;
        }

        auto heuristic = score_order(t);
        int heuristic_value = ordering_clique_number(t, heuristic);
        int k = transitive_by_scores(t) ? 1 : 2;

        Decider d(t, options.budget);
        try {
            while (true) {
                d.reset(k);
                if (k >= heuristic_value) {
                    result.order = heuristic;
                    k = heuristic_value;
                    break;
                }
                if (d.search(-1)) {
                    result.order = d.order;
                    break;
                }
                ++k;
            }
        }
        catch (const OutOfBudget &) {
            result.status = SolveStatus::exceeded;
            result.lower = k;
            result.upper = heuristic_value;
            result.value = heuristic_value;
            result.order = heuristic;
            result.nodes = d.nodes;
            result.lower_witness = "partial";
            return result;
        }

        result.value = result.lower = result.upper = k;

        if (options.lex_least) {
            try {
                // fix positions one at a time, keeping the least vertex that still admits a completion
                vector<Vertex> prefix;
                while (static_cast<int>(prefix.size()) < n) {
                    bool extended = false;
                    for (int v = 0; v < n && ! extended; ++v) {
                        if (std::find(prefix.begin(), prefix.end(), v) != prefix.end())
                            continue;
                        d.reset(k);
                        vector<int> saved;
                        bool ok = true;
                        for (auto p : prefix)
                            ok = ok && d.place(p, saved);
                        if (ok && d.place(v, saved) && d.search(-1)) {
                            prefix.push_back(v);
                            // the completion found is itself valid; keep its forced tail only as a witness
                            result.order = d.order;
                            extended = true;
                        }
                    }
                    if (! extended)
                        throw std::logic_error("omega_dir: lex refinement lost feasibility");
                }
                result.order = prefix;
                result.lex_least = true;
            }
            catch (const OutOfBudget &) {
                result.lex_least = false;
            }
        }
        result.nodes = d.nodes;
        return result;
    }

    auto omega_dir(const Tournament & t, const VertexSet & s, const OmegaOptions & options) -> OmegaResult
    {
        auto sub = induced(t, s);
        auto result = omega_dir(sub.tournament, options);
        for (auto & v : result.order)
            v = sub.original[static_cast<size_t>(v)];
        return result;
    }

    auto omega_value(const Tournament & t, const VertexSet & s, const OmegaOptions & options) -> int
    {
        auto opts = options;
        opts.lex_least = false;
        auto result = omega_dir(t, s, opts);
        if (result.status != SolveStatus::exact)
            throw BudgetExceeded("omega_dir budget exhausted: bounds [" + std::to_string(result.lower) + ", " +
                std::to_string(result.upper) + "]");
        return result.value;
    }

    auto omega_value(const Tournament & t, const OmegaOptions & options) -> int
    {
        return omega_value(t, t.vertices(), options);
    }

    auto omega_dir_bounds(const Tournament & t, const OmegaBoundsOptions & options) -> OmegaBounds
    {
        int n = t.size();
        OmegaBounds result;
        result.lower_set = t.empty_set();
        if (n == 0)
            return result;

        std::mt19937_64 rng(options.seed);

        // upper bound: anneal over orderings, cost = clique number then backedge count
        auto order = score_order(t);
        auto cost_of = [&](const vector<Vertex> & o) {
            long back = 0;
            for (size_t i = 0; i < o.size(); ++i)
                for (size_t j = i + 1; j < o.size(); ++j)
                    if (t.arc(o[j], o[i]))
                        ++back;
            int w = ordering_clique_number(t, o);
            return std::pair<int, long>{w, back};
        };
        auto current = cost_of(order);
        auto best = current;
        auto best_order = order;
        double temperature = 1.0;
        double cooling = options.anneal_iterations > 0 ? std::pow(0.01, 1.0 / options.anneal_iterations) : 1.0;
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int it = 0; it < options.anneal_iterations && n > 1; ++it) {
            auto candidate = order;
            int i = pick(rng), j = pick(rng);
            auto v = candidate[static_cast<size_t>(i)];
            candidate.erase(candidate.begin() + i);
            candidate.insert(candidate.begin() + j, v);
            auto c = cost_of(candidate);
            double delta = (c.first - current.first) * static_cast<double>(n) + static_cast<double>(c.second - current.second) / n;
            if (delta <= 0 || unit(rng) < std::exp(-delta / temperature)) {
                order = std::move(candidate);
                current = c;
                if (current < best) {
                    best = current;
                    best_order = order;
                }
            }
            temperature *= cooling;
        }
        result.upper = best.first;
        result.upper_order = best_order;

        // lower bound: exact values on induced subsets
        result.lower = 1;
        result.lower_set = VertexSet::of(n, {0});
        auto try_subset = [&](const VertexSet & s) {
            auto r = omega_dir(t, s, OmegaOptions{options.exact.exact_limit, options.exact.budget, false});
            if (r.status == SolveStatus::exact && r.value > result.lower) {
                result.lower = r.value;
                result.lower_set = s;
            }
            else if (r.status == SolveStatus::exceeded && r.lower > result.lower) {
                result.lower = r.lower;
                result.lower_set = s;
            }
        };
        int limit = std::min(options.exact.exact_limit, 64);
        if (n <= limit)
            try_subset(t.vertices());
        else {
            int size = std::min({options.sample_size, limit, n});
            vector<Vertex> all(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v)
                all[static_cast<size_t>(v)] = v;
            for (int s = 0; s < options.samples && result.lower < result.upper; ++s) {
                std::shuffle(all.begin(), all.end(), rng);
                try_subset(VertexSet::of(n, std::span<const Vertex>(all.data(), static_cast<size_t>(size))));
            }
        }
        if (result.lower > result.upper)
            throw std::logic_error("omega_dir_bounds: lower exceeds upper");
        return result;
    }

    auto omega_dir_bounds(const Tournament & t, const VertexSet & s, const OmegaBoundsOptions & options) -> OmegaBounds
    {
        auto sub = induced(t, s);
        auto b = omega_dir_bounds(sub.tournament, options);
        OmegaBounds result;
        result.lower = b.lower;
        result.upper = b.upper;
        for (auto v : b.upper_order)
            result.upper_order.push_back(sub.original[static_cast<size_t>(v)]);
        result.lower_set = t.empty_set();
        b.lower_set.for_each([&](Vertex v) { result.lower_set.set(sub.original[static_cast<size_t>(v)]); });
        return result;
    }
}
