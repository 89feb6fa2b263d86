#include <tclique/canonical.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>

#include <algorithm>
#include <map>
#include <mutex>

using std::optional;
using std::vector;

namespace tclique
{
    namespace
    {
        struct OutOfBudget
        {
        };

        struct Matcher
        {
            const Tournament & host;
            const Tournament & pattern;
            long budget;
            bool least;
            long nodes = 0;
            vector<Vertex> order;
            Embedding map;

            auto search(size_t depth, vector<VertexSet> & domains, VertexSet used) -> bool
            {
                if (budget >= 0 && nodes >= budget)
                    throw OutOfBudget{};
                ++nodes;
                if (depth == order.size())
                    return true;
                Vertex q = order[depth];
                auto candidates = domains[static_cast<size_t>(q)] - used;
                for (Vertex h = candidates.first(); h != -1; h = candidates.next(h)) {
                    auto saved = domains;
                    bool ok = true;
                    for (size_t later = depth + 1; later < order.size() && ok; ++later) {
                        Vertex p = order[later];
                        domains[static_cast<size_t>(p)] &= pattern.arc(q, p) ? host.out(h) : host.in(h);
                        domains[static_cast<size_t>(p)].reset(h);
                        if (domains[static_cast<size_t>(p)].empty())
                            ok = false;
                    }
                    if (ok) {
                        map[static_cast<size_t>(q)] = h;
                        auto next_used = used;
                        next_used.set(h);
                        if (search(depth + 1, domains, next_used))
                            return true;
                    }
                    domains = std::move(saved);
                }
                return false;
            }
        };

        auto run(const Tournament & host, const VertexSet & within, const Tournament & pattern, long budget, bool least)
            -> optional<Embedding>
        {
            int k = pattern.size();
            if (k == 0)
                return Embedding{};
            if (k > within.count())
                return std::nullopt;

            Matcher m{host, pattern, budget, least, 0, {}, Embedding(static_cast<size_t>(k), -1)};
            for (int q = 0; q < k; ++q)
                m.order.push_back(q);
            if (! least) {
                // extreme score first: such vertices have the fewest host candidates
                std::stable_sort(m.order.begin(), m.order.end(), [&](Vertex a, Vertex b) {
                    auto tight = [&](Vertex q) { return std::min(pattern.out_degree(q), k - 1 - pattern.out_degree(q)); };
                    return tight(a) < tight(b);
                });
            }

            vector<VertexSet> domains(static_cast<size_t>(k), within);
            for (int q = 0; q < k; ++q) {
                int need_out = pattern.out_degree(q), need_in = k - 1 - need_out;
                within.for_each([&](Vertex h) {
                    if ((host.out(h) & within).count() < need_out || (host.in(h) & within).count() < need_in)
                        domains[static_cast<size_t>(q)].reset(h);
                });
                if (domains[static_cast<size_t>(q)].empty())
                    return std::nullopt;
            }

            try {
                if (m.search(0, domains, VertexSet(host.size())))
                    return m.map;
            }
            catch (const OutOfBudget &) {
                throw BudgetExceeded("contains_copy: search budget exhausted after " + std::to_string(m.nodes) + " nodes");
            }
            return std::nullopt;
        }
    }

    auto contains_copy(const Tournament & host, const VertexSet & within, const Tournament & pattern,
        const ContainmentOptions & options) -> optional<Embedding>
    {
        return run(host, within, pattern, options.budget, false);
    }

    auto contains_copy(const Tournament & host, const Tournament & pattern, const ContainmentOptions & options) -> optional<Embedding>
    {
        return contains_copy(host, host.vertices(), pattern, options);
    }

    auto least_embedding(const Tournament & host, const VertexSet & within, const Tournament & pattern) -> optional<Embedding>
    {
        return run(host, within, pattern, -1, true);
    }

    auto verify_embedding(const Tournament & host, const Tournament & pattern, const Embedding & map) -> bool
    {
        if (map.size() != static_cast<size_t>(pattern.size()))
            return false;
        VertexSet image(host.size());
        for (auto h : map) {
            if (h < 0 || h >= host.size() || image.test(h))
                return false;
            image.set(h);
        }
        for (int a = 0; a < pattern.size(); ++a)
            for (int b = 0; b < pattern.size(); ++b)
                if (a != b && pattern.arc(a, b) != host.arc(map[static_cast<size_t>(a)], map[static_cast<size_t>(b)]))
                    return false;
        return true;
    }

    auto family_index(const Tournament & t, Family family) -> FamilyIndex
    {
        if (family == Family::U)
            throw InvalidInput("family_index is defined for A and D only");
        if (t.size() == 0)
            return {0, "empty tournament: family index is 0"};

        static std::mutex cache_mutex;
        static std::map<std::pair<std::string, int>, int> cache;
        std::optional<std::string> code;
        if (t.size() <= canonical_code_limit) {
            code = canonical_code(t);
            std::lock_guard lock(cache_mutex);
            auto it = cache.find({*code, static_cast<int>(family)});
            if (it != cache.end())
                return {it->second, ""};
        }

        int limit = family == Family::A ? max_A_index : max_D_index;
        int n = 1;
        while (n + 1 <= limit) {
            auto next = build_family({family, n + 1}).tournament;
            if (next.size() > t.size() || ! contains_copy(t, next))
                break;
            ++n;
        }
        FamilyIndex result{n, ""};
        if (n == limit)
            result.warning = "reached the largest constructible index; value is a lower bound";
        if (code) {
            std::lock_guard lock(cache_mutex);
            cache[{*code, static_cast<int>(family)}] = n;
        }
        return result;
    }

    auto find_module(const Tournament & t) -> optional<VertexSet>
    {
        int n = t.size();
        if (n < 3)
            return std::nullopt;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                // smallest module containing a and b: absorb every vertex that splits it
                auto m = VertexSet::of(n, {a, b});
                bool grew = true;
                while (grew && m.count() < n) {
                    grew = false;
                    auto outside = m.complement();
                    for (Vertex x = outside.first(); x != -1; x = outside.next(x)) {
                        auto beaten = t.out(x) & m;
                        if (beaten.any() && beaten != m) {
                            m.set(x);
                            grew = true;
                        }
                    }
                }
                if (m.count() < n)
                    return m;
            }
        return std::nullopt;
    }

    auto is_prime(const Tournament & t) -> bool
    {
        return ! find_module(t);
    }
}
