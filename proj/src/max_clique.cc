#include <tclique/max_clique.hh>

#include <bit>
#include <vector>

using std::uint64_t;
using std::vector;

namespace tclique
{
    namespace
    {
        struct Search
        {
            const Graph & g;
            vector<Vertex> current;
            vector<Vertex> best;
            long nodes = 0;

            // colour classes greedily; order[i] gets bound colours[i], ascending
            auto colour_order(const VertexSet & p, vector<Vertex> & order, vector<int> & colours) -> void
            {
                VertexSet uncoloured = p;
                int colour = 0;
                while (uncoloured.any()) {
                    ++colour;
                    VertexSet q = uncoloured;
                    while (q.any()) {
                        Vertex v = q.first();
                        uncoloured.reset(v);
                        q.reset(v);
                        q -= g.neighbours(v);
                        order.push_back(v);
                        colours.push_back(colour);
                    }
                }
            }

            auto expand(VertexSet p) -> void
            {
                ++nodes;
                vector<Vertex> order;
                vector<int> colours;
                colour_order(p, order, colours);
                for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                    if (current.size() + static_cast<size_t>(colours[static_cast<size_t>(i)]) <= best.size())
                        return;
                    Vertex v = order[static_cast<size_t>(i)];
                    current.push_back(v);
                    auto next = p & g.neighbours(v);
                    if (next.empty()) {
                        if (current.size() > best.size())
                            best = current;
                    }
                    else
                        expand(next);
                    current.pop_back();
                    p.reset(v);
                }
            }
        };

        auto mask_expand(std::span<const uint64_t> adj, uint64_t p, int size, int & best) -> void
        {
            int order[64], colours[64], count = 0;
            uint64_t uncoloured = p;
            int colour = 0;
            while (uncoloured) {
                ++colour;
                uint64_t q = uncoloured;
                while (q) {
                    int v = std::countr_zero(q);
                    uncoloured &= ~(uint64_t{1} << v);
                    q &= ~(uint64_t{1} << v);
                    q &= ~adj[static_cast<size_t>(v)];
                    order[count] = v;
                    colours[count++] = colour;
                }
            }
            for (int i = count - 1; i >= 0; --i) {
                if (size + colours[i] <= best)
                    return;
                int v = order[i];
                uint64_t next = p & adj[static_cast<size_t>(v)];
                if (! next) {
                    if (size + 1 > best)
                        best = size + 1;
                }
                else
                    mask_expand(adj, next, size + 1, best);
                p &= ~(uint64_t{1} << v);
            }
        }
    }

    auto max_clique(const Graph & g, const VertexSet & within) -> CliqueResult
    {
        Search s{g, {}, {}, 0};
        if (within.any())
            s.expand(within);
        CliqueResult result;
        result.size = static_cast<int>(s.best.size());
        result.witness = VertexSet::of(g.size(), s.best);
        result.nodes = s.nodes;
        return result;
    }

    auto max_clique(const Graph & g) -> CliqueResult
    {
        return max_clique(g, VertexSet::full(g.size()));
    }

    auto clique_number_mask(std::span<const uint64_t> adj, uint64_t p) -> int
    {
        if (! p)
            return 0;
        int best = 0;
        mask_expand(adj, p, 0, best);
        return best;
    }

    auto is_clique(const Graph & g, const VertexSet & s) -> bool
    {
        bool ok = true;
        s.for_each([&](Vertex v) {
            if (ok && ! (s - VertexSet::of(g.size(), {v})).is_subset_of(g.neighbours(v)))
                ok = false;
        });
        return ok;
    }
}
