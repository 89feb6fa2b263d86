#include "oracles.hh"

#include <tclique/canonical.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>
#include <tclique/max_clique.hh>
#include <tclique/tournament.hh>
#include <tclique/trn_io.hh>

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace tclique;

namespace
{
    auto c3() -> Tournament { return from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }
    auto single() -> Tournament { return transitive_tournament(1); }
}

TEST(VertexSet, BasicOperations)
{
    auto s = VertexSet::of(70, {1, 5, 69});
    EXPECT_EQ(s.count(), 3);
    EXPECT_TRUE(s.test(69));
    EXPECT_FALSE(s.test(68));
    EXPECT_EQ(s.first(), 1);
    EXPECT_EQ(s.next(1), 5);
    EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 5, 69}));
    auto full = VertexSet::full(70);
    EXPECT_EQ((full - s).count(), 67);
    EXPECT_TRUE(s.is_subset_of(full));
    EXPECT_EQ(s.complement(), full - s);
    EXPECT_TRUE(VertexSet(4).empty());
}

TEST(VertexSet, UniverseMismatchThrows)
{
    EXPECT_THROW((void)(VertexSet(3) | VertexSet(4)), std::invalid_argument);
}

TEST(Tournament, FromMatrix)
{
    auto one = from_matrix(1, {{0}});
    EXPECT_EQ(one.size(), 1);
    auto t = c3();
    EXPECT_TRUE(t.arc(0, 1) && t.arc(1, 2) && t.arc(2, 0));
    EXPECT_THROW(from_matrix(2, {{0, 1}, {1, 0}}), InvalidInput);
    EXPECT_THROW(from_matrix(2, {{0, 0}, {0, 0}}), InvalidInput);
    EXPECT_THROW(from_matrix(1, {{1}}), InvalidInput);
}

TEST(Tournament, Induced)
{
    auto t = c3();
    EXPECT_EQ(induced(t, t.vertices()).tournament, t);
    auto pair = induced(t, VertexSet::of(3, {0, 1}));
    EXPECT_EQ(pair.tournament.size(), 2);
    EXPECT_TRUE(pair.tournament.arc(0, 1));
    EXPECT_EQ(pair.original, (std::vector<Vertex>{0, 1}));

    // every cyclic triple of D_3 induces C_3
    auto d3 = build_D(3).tournament;
    int cyclic = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                auto s = VertexSet::of(7, {a, b, c});
                if (! is_transitive(d3, s)) {
                    ++cyclic;
                    EXPECT_TRUE(isomorphic(induced(d3, s).tournament, t));
                }
            }
    EXPECT_GT(cyclic, 0);
}

TEST(Tournament, DeltaCompose)
{
    auto s = single();
    EXPECT_TRUE(isomorphic(delta_compose(s, s, s), c3()));
    auto d3 = delta_compose(c3(), c3(), s);
    EXPECT_EQ(d3.size(), 7);
    EXPECT_TRUE(isomorphic(d3, build_D(3).tournament));
    auto t = transitive_tournament(4);
    EXPECT_EQ(delta_compose(t, c3(), s).size(), 8);
}

TEST(Tournament, Substitute)
{
    auto t = c3();
    EXPECT_TRUE(isomorphic(substitute(t, 1, single()), t));
    for (Vertex v = 0; v < 3; ++v) {
        auto u = substitute(t, v, c3());
        ASSERT_EQ(u.size(), 5);
        auto m = find_module(u);
        ASSERT_TRUE(m.has_value());
        EXPECT_EQ(m->count(), 3);
        EXPECT_TRUE(is_module(u, *m));
    }
}

TEST(Tournament, BackedgeGraph)
{
    auto t = transitive_tournament(5);
    std::vector<Vertex> forward{0, 1, 2, 3, 4}, backward{4, 3, 2, 1, 0};
    EXPECT_EQ(backedge_graph(t, forward).edges.edge_count(), 0);
    EXPECT_EQ(backedge_graph(t, backward).edges.edge_count(), 10);
    // rotations of the cycle leave one backedge, reflections two
    std::vector<Vertex> order{0, 1, 2};
    do {
        bool rotation = (order[1] - order[0] + 3) % 3 == 1;
        EXPECT_EQ(backedge_graph(c3(), order).edges.edge_count(), rotation ? 1 : 2);
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<Vertex> bad{0, 0, 1};
    EXPECT_THROW(backedge_graph(c3(), bad), InvalidInput);
}

TEST(Tournament, OutComplete)
{
    auto t = c3();
    EXPECT_TRUE(is_out_complete(t, VertexSet(3), VertexSet::of(3, {1})));
    EXPECT_TRUE(is_out_complete(t, VertexSet::of(3, {0}), VertexSet::of(3, {1})));
    EXPECT_FALSE(is_out_complete(t, VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})));
}

TEST(Tournament, RandomIsDeterministicAndFair)
{
    EXPECT_EQ(random_tournament(0, 1).size(), 0);
    EXPECT_EQ(random_tournament(5, 42), random_tournament(5, 42));
    std::map<std::pair<int, int>, int> forward;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        auto t = random_tournament(5, seed);
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                forward[{i, j}] += t.arc(i, j);
    }
    for (auto & [_, count] : forward) {
        EXPECT_GE(count, 450);
        EXPECT_LE(count, 550);
    }
}

TEST(TrnIo, RoundTripAndComments)
{
    auto d = build_D(3).tournament;
    EXPECT_EQ(parse_trn(format_trn(d)), d);
    EXPECT_EQ(parse_trn("# cyclic triangle\n3\n010\n\n001\n100\n"), c3());
    EXPECT_THROW(parse_trn("3\n011\n001\n100\n"), InvalidInput);
    EXPECT_THROW(parse_trn("2\n01\n"), InvalidInput);
    EXPECT_THROW(parse_trn("x\n"), InvalidInput);
}

TEST(TrnIo, Bags)
{
    std::istringstream in("0 1\n# comment\n2\n");
    auto bags = read_bags(in, 3);
    ASSERT_EQ(bags.size(), 2U);
    EXPECT_EQ(bags[0], VertexSet::of(3, {0, 1}));
    EXPECT_EQ(format_bags(bags), "0 1\n2\n");
    std::istringstream bad("0 7\n");
    EXPECT_THROW(read_bags(bad, 3), InvalidInput);
}

TEST(Canonical, RelabellingsAgree)
{
    auto a = c3();
    auto b = from_matrix(3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    EXPECT_EQ(canonical_code(a), canonical_code(b));
    EXPECT_NE(canonical_code(a), canonical_code(transitive_tournament(3)));
}

TEST(Canonical, FourVertexClasses)
{
    // bucket all 2^6 labelled 4-tournaments by exhaustive permutation isomorphism
    std::vector<Tournament> reps;
    for (std::uint64_t code = 0; code < 64; ++code) {
        auto t = oracle::tournament_from_bits(4, code);
        bool known = false;
        for (auto & r : reps) {
            std::vector<int> p{0, 1, 2, 3};
            do {
                bool same = true;
                for (int i = 0; i < 4 && same; ++i)
                    for (int j = 0; j < 4 && same; ++j)
                        if (i != j)
                            same = t.arc(i, j) == r.arc(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
                known = same;
            } while (! known && std::next_permutation(p.begin(), p.end()));
            if (known)
                break;
        }
        if (! known)
            reps.push_back(t);
    }
    ASSERT_EQ(reps.size(), 4U);
    std::set<std::string> codes;
    for (auto & r : reps)
        codes.insert(canonical_code(r));
    EXPECT_EQ(codes.size(), 4U);
    for (std::uint64_t code = 0; code < 64; ++code)
        EXPECT_TRUE(codes.count(canonical_code(oracle::tournament_from_bits(4, code))));
}

TEST(MaxClique, SmallGraphs)
{
    Graph empty(4);
    auto r = max_clique(empty);
    EXPECT_EQ(r.size, 1);
    EXPECT_EQ(r.witness.count(), 1);

    Graph k5(5);
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            k5.add_edge(a, b);
    EXPECT_EQ(max_clique(k5).size, 5);

    Graph c5(5);
    for (int a = 0; a < 5; ++a)
        c5.add_edge(a, (a + 1) % 5);
    auto c = max_clique(c5);
    EXPECT_EQ(c.size, 2);
    EXPECT_TRUE(is_clique(c5, c.witness));
    EXPECT_EQ(max_clique(Graph(0)).size, 0);
}

TEST(MaxClique, MatchesBruteForce)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 14);
        auto t = random_tournament(n, seed);
        Graph g(n);
        std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
        // use arc direction on a random tournament as a random graph
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (t.arc(a, b)) {
                    g.add_edge(a, b);
                    adj[static_cast<size_t>(a)] |= 1U << b;
                    adj[static_cast<size_t>(b)] |= 1U << a;
                }
        auto r = max_clique(g);
        EXPECT_EQ(r.size, oracle::clique_number(adj)) << "seed " << seed;
        EXPECT_TRUE(is_clique(g, r.witness));
    }
}
