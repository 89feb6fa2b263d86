#ifndef TCLIQUE_TOURNAMENT_HH
#define TCLIQUE_TOURNAMENT_HH

#include <tclique/vertex_set.hh>

#include <cstdint>
#include <span>
#include <vector>

namespace tclique
{
    /**
     * A tournament on vertices 0..n-1. Row v of the out-adjacency has bit w set iff
     * the arc v->w exists. Construction validates that there are no loops and that
     * every pair carries exactly one arc; after that the value is immutable.
     */
    class Tournament
    {
    public:
        Tournament() = default;

        /// Validates and adopts out-neighbour rows. Throws InvalidInput.
        static auto from_out_rows(std::vector<VertexSet> out_rows) -> Tournament;

        auto size() const -> int { return _n; }
        auto arc(Vertex from, Vertex to) const -> bool { return _out[static_cast<std::size_t>(from)].test(to); }
        auto out(Vertex v) const -> const VertexSet & { return _out[static_cast<std::size_t>(v)]; }
        auto in(Vertex v) const -> const VertexSet & { return _in[static_cast<std::size_t>(v)]; }
        auto out_degree(Vertex v) const -> int { return out(v).count(); }
        auto vertices() const -> VertexSet { return VertexSet::full(_n); }
        auto empty_set() const -> VertexSet { return VertexSet(_n); }

        /// Union of out-neighbourhoods (vertices dominated by some member of s).
        auto out_of(const VertexSet & s) const -> VertexSet;
        /// Union of in-neighbourhoods (vertices dominating some member of s).
        auto in_of(const VertexSet & s) const -> VertexSet;

        /// Same vertex set with every arc reversed.
        auto reversed() const -> Tournament;

        friend auto operator==(const Tournament & a, const Tournament & b) -> bool { return a._out == b._out; }

    private:
        int _n = 0;
        std::vector<VertexSet> _out, _in;
    };

    /// Simple undirected graph on 0..n-1 with symmetric bit rows.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        auto size() const -> int { return _n; }
        auto add_edge(Vertex a, Vertex b) -> void;
        auto adjacent(Vertex a, Vertex b) const -> bool { return _rows[static_cast<std::size_t>(a)].test(b); }
        auto neighbours(Vertex v) const -> const VertexSet & { return _rows[static_cast<std::size_t>(v)]; }
        auto edge_count() const -> long;

        /// Throws InvalidInput unless rows are symmetric and loop-free.
        auto validate() const -> void;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        int _n = 0;
        std::vector<VertexSet> _rows;
    };

    /// Backedge graph B(T, <): edge uv (u before v) iff the arc is v->u.
    struct OrderedBackedgeGraph
    {
        Graph edges;
        /// order[i] is the vertex at position i.
        std::vector<Vertex> order;
    };

    struct InducedTournament
    {
        Tournament tournament;
        /// original[i] is the vertex of the host that became vertex i.
        std::vector<Vertex> original;
    };

    auto from_matrix(int n, const std::vector<std::vector<int>> & cells) -> Tournament;
    auto to_matrix(const Tournament & t) -> std::vector<std::vector<int>>;

    auto transitive_tournament(int n) -> Tournament;

    auto induced(const Tournament & t, const VertexSet & s) -> InducedTournament;

    /// Disjoint union with V(t1) => V(t2) => V(t3) => V(t1); vertices of t1 first.
    auto delta_compose(const Tournament & t1, const Tournament & t2, const Tournament & t3) -> Tournament;

    /**
     * Substitutes `replacement` for vertex v. Vertices before v keep their index,
     * the replacement occupies positions v..v+|replacement|-1, and later vertices
     * shift up.
     */
    auto substitute(const Tournament & t, Vertex v, const Tournament & replacement) -> Tournament;

    /// Throws InvalidInput unless `order` is a permutation of 0..n-1.
    auto validate_permutation(int n, std::span<const Vertex> order) -> void;

    auto backedge_graph(const Tournament & t, std::span<const Vertex> order) -> OrderedBackedgeGraph;

    /// The unique tournament whose backedge graph under `b.order` is `b.edges`.
    auto tournament_of(const OrderedBackedgeGraph & b) -> Tournament;

    /// True iff x->y for every x in xs, y in ys. Throws InvalidInput if they overlap.
    auto is_out_complete(const Tournament & t, const VertexSet & xs, const VertexSet & ys) -> bool;

    /// True iff t[s] has no directed cycle.
    auto is_transitive(const Tournament & t, const VertexSet & s) -> bool;
    auto is_transitive(const Tournament & t) -> bool;

    /// Every pair oriented by an independent fair coin from a seeded mt19937_64.
    auto random_tournament(int n, std::uint64_t seed) -> Tournament;

    /// True iff every vertex outside m is out-complete to m or in-complete from m.
    auto is_module(const Tournament & t, const VertexSet & m) -> bool;
}

#endif
