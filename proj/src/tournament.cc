#include <tclique/errors.hh>
#include <tclique/tournament.hh>

#include <algorithm>
#include <random>
#include <string>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace tclique
{
    auto Tournament::from_out_rows(vector<VertexSet> out_rows) -> Tournament
    {
        Tournament t;
        t._n = static_cast<int>(out_rows.size());
        for (int v = 0; v < t._n; ++v) {
            const auto & row = out_rows[static_cast<size_t>(v)];
            if (row.universe() != t._n)
                throw InvalidInput("row " + to_string(v) + " has universe " + to_string(row.universe()) + ", expected " + to_string(t._n));
            if (row.test(v))
                throw InvalidInput("loop at vertex " + to_string(v));
        }
        t._in.assign(static_cast<size_t>(t._n), VertexSet(t._n));
        for (int v = 0; v < t._n; ++v)
            out_rows[static_cast<size_t>(v)].for_each([&](Vertex w) { t._in[static_cast<size_t>(w)].set(v); });
        for (int v = 0; v < t._n; ++v)
            for (int w = v + 1; w < t._n; ++w) {
                bool forward = out_rows[static_cast<size_t>(v)].test(w), backward = out_rows[static_cast<size_t>(w)].test(v);
                if (forward && backward)
                    throw InvalidInput("digon between " + to_string(v) + " and " + to_string(w));
                if (! forward && ! backward)
                    throw InvalidInput("missing arc between " + to_string(v) + " and " + to_string(w));
            }
        t._out = std::move(out_rows);
        return t;
    }

    auto Tournament::out_of(const VertexSet & s) const -> VertexSet
    {
        VertexSet result(_n);
        s.for_each([&](Vertex v) { result |= out(v); });
        return result;
    }

    auto Tournament::in_of(const VertexSet & s) const -> VertexSet
    {
        VertexSet result(_n);
        s.for_each([&](Vertex v) { result |= in(v); });
        return result;
    }

    auto Tournament::reversed() const -> Tournament
    {
        Tournament t;
        t._n = _n;
        t._out = _in;
        t._in = _out;
        return t;
    }

    Graph::Graph(int n) :
        _n(n),
        _rows(static_cast<size_t>(n), VertexSet(n))
    {
    }

    auto Graph::add_edge(Vertex a, Vertex b) -> void
    {
        if (a == b)
            throw InvalidInput("graph loop at " + to_string(a));
        _rows[static_cast<size_t>(a)].set(b);
        _rows[static_cast<size_t>(b)].set(a);
    }

    auto Graph::edge_count() const -> long
    {
        long total = 0;
        for (auto & r : _rows)
            total += r.count();
        return total / 2;
    }

    auto Graph::validate() const -> void
    {
        for (int v = 0; v < _n; ++v) {
            if (adjacent(v, v))
                throw InvalidInput("graph loop at " + to_string(v));
            neighbours(v).for_each([&](Vertex w) {
                if (! adjacent(w, v))
                    throw InvalidInput("asymmetric edge " + to_string(v) + "-" + to_string(w));
            });
        }
    }

    auto from_matrix(int n, const vector<vector<int>> & cells) -> Tournament
    {
        if (n < 0 || cells.size() != static_cast<size_t>(n))
            throw InvalidInput("matrix has " + to_string(cells.size()) + " rows, expected " + to_string(n));
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (int i = 0; i < n; ++i) {
            const auto & line = cells[static_cast<size_t>(i)];
            if (line.size() != static_cast<size_t>(n))
                throw InvalidInput("matrix row " + to_string(i) + " has " + to_string(line.size()) + " cells, expected " + to_string(n));
            for (int j = 0; j < n; ++j) {
                int c = line[static_cast<size_t>(j)];
                if (c != 0 && c != 1)
                    throw InvalidInput("matrix cell (" + to_string(i) + "," + to_string(j) + ") is not 0/1");
                if (c)
                    rows[static_cast<size_t>(i)].set(j);
            }
        }
        return Tournament::from_out_rows(std::move(rows));
    }

    auto to_matrix(const Tournament & t) -> vector<vector<int>>
    {
        vector<vector<int>> cells(static_cast<size_t>(t.size()), vector<int>(static_cast<size_t>(t.size()), 0));
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j)
                cells[static_cast<size_t>(i)][static_cast<size_t>(j)] = t.arc(i, j) ? 1 : 0;
        return cells;
    }

    auto transitive_tournament(int n) -> Tournament
    {
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                rows[static_cast<size_t>(i)].set(j);
        return Tournament::from_out_rows(std::move(rows));
    }

    auto induced(const Tournament & t, const VertexSet & s) -> InducedTournament
    {
        if (s.universe() != t.size())
            throw InvalidInput("induced: vertex set universe does not match tournament");
        InducedTournament result;
        result.original = s.members();
        int k = static_cast<int>(result.original.size());
        vector<VertexSet> rows(static_cast<size_t>(k), VertexSet(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (t.arc(result.original[static_cast<size_t>(i)], result.original[static_cast<size_t>(j)]))
                    rows[static_cast<size_t>(i)].set(j);
        result.tournament = Tournament::from_out_rows(std::move(rows));
        return result;
    }

    auto delta_compose(const Tournament & t1, const Tournament & t2, const Tournament & t3) -> Tournament
    {
        int n1 = t1.size(), n2 = t2.size(), n3 = t3.size(), n = n1 + n2 + n3;
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        const Tournament * parts[3] = {&t1, &t2, &t3};
        int offsets[3] = {0, n1, n1 + n2};
        int sizes[3] = {n1, n2, n3};
        for (int p = 0; p < 3; ++p) {
            int next = (p + 1) % 3;
            for (int i = 0; i < sizes[p]; ++i) {
                auto & row = rows[static_cast<size_t>(offsets[p] + i)];
                parts[p]->out(i).for_each([&](Vertex j) { row.set(offsets[p] + j); });
                for (int j = 0; j < sizes[next]; ++j)
                    row.set(offsets[next] + j);
            }
        }
        return Tournament::from_out_rows(std::move(rows));
    }

    auto substitute(const Tournament & t, Vertex v, const Tournament & replacement) -> Tournament
    {
        if (v < 0 || v >= t.size())
            throw InvalidInput("substitute: vertex " + to_string(v) + " not in tournament");
        int k = replacement.size();
        int n = t.size() - 1 + k;
        // image of an old vertex other than v
        auto image = [&](Vertex x) { return x < v ? x : x + k - 1; };
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (int x = 0; x < t.size(); ++x) {
            if (x == v)
                continue;
            for (int y = 0; y < t.size(); ++y) {
                if (y == x || ! t.arc(x, y))
                    continue;
                if (y == v)
                    for (int i = 0; i < k; ++i)
                        rows[static_cast<size_t>(image(x))].set(v + i);
                else
                    rows[static_cast<size_t>(image(x))].set(image(y));
            }
        }
        for (int i = 0; i < k; ++i) {
            auto & row = rows[static_cast<size_t>(v + i)];
            replacement.out(i).for_each([&](Vertex j) { row.set(v + j); });
            t.out(v).for_each([&](Vertex y) { row.set(image(y)); });
        }
        return Tournament::from_out_rows(std::move(rows));
    }

    auto validate_permutation(int n, span<const Vertex> order) -> void
    {
        if (order.size() != static_cast<size_t>(n))
            throw InvalidInput("order has " + to_string(order.size()) + " entries, expected " + to_string(n));
        vector<bool> seen(static_cast<size_t>(n), false);
        for (auto v : order) {
            if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
                throw InvalidInput("order is not a permutation of 0.." + to_string(n - 1));
            seen[static_cast<size_t>(v)] = true;
        }
    }

    auto backedge_graph(const Tournament & t, span<const Vertex> order) -> OrderedBackedgeGraph
    {
        validate_permutation(t.size(), order);
        OrderedBackedgeGraph result{Graph(t.size()), vector<Vertex>(order.begin(), order.end())};
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                if (t.arc(order[j], order[i]))
                    result.edges.add_edge(order[i], order[j]);
        return result;
    }

    auto tournament_of(const OrderedBackedgeGraph & b) -> Tournament
    {
        int n = b.edges.size();
        validate_permutation(n, b.order);
        b.edges.validate();
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (size_t i = 0; i < b.order.size(); ++i)
            for (size_t j = i + 1; j < b.order.size(); ++j) {
                Vertex u = b.order[i], w = b.order[j];
                if (b.edges.adjacent(u, w))
                    rows[static_cast<size_t>(w)].set(u);
                else
                    rows[static_cast<size_t>(u)].set(w);
            }
        return Tournament::from_out_rows(std::move(rows));
    }

    auto is_out_complete(const Tournament & t, const VertexSet & xs, const VertexSet & ys) -> bool
    {
        if (xs.intersects(ys))
            throw InvalidInput("is_out_complete: sets overlap");
        bool ok = true;
        xs.for_each([&](Vertex x) {
            if (ok && ! ys.is_subset_of(t.out(x)))
                ok = false;
        });
        return ok;
    }

    auto is_transitive(const Tournament & t, const VertexSet & s) -> bool
    {
        // a tournament is transitive iff its score sequence is 0, 1, ..., k-1
        vector<bool> seen(static_cast<size_t>(s.count()), false);
        bool ok = true;
        s.for_each([&](Vertex v) {
            if (! ok)
                return;
            auto d = static_cast<size_t>((t.out(v) & s).count());
            if (seen[d])
                ok = false;
            else
                seen[d] = true;
        });
        return ok;
    }

    auto is_transitive(const Tournament & t) -> bool
    {
        return is_transitive(t, t.vertices());
    }

    auto random_tournament(int n, std::uint64_t seed) -> Tournament
    {
        if (n < 0)
            throw InvalidInput("random_tournament: negative size");
        std::mt19937_64 rng(seed);
        vector<VertexSet> rows(static_cast<size_t>(n), VertexSet(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (rng() >> 63)
                    rows[static_cast<size_t>(i)].set(j);
                else
                    rows[static_cast<size_t>(j)].set(i);
            }
        return Tournament::from_out_rows(std::move(rows));
    }

    auto is_module(const Tournament & t, const VertexSet & m) -> bool
    {
        auto outside = m.complement();
        bool ok = true;
        outside.for_each([&](Vertex x) {
            if (! ok)
                return;
            auto beaten = t.out(x) & m;
            if (! beaten.empty() && beaten != m)
                ok = false;
        });
        return ok;
    }
}
