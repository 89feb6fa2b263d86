#include "oracles.hh"

#include <tclique/errors.hh>
#include <tclique/grow_mountain.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>

#include <gtest/gtest.h>

using namespace tclique;

namespace
{
    auto c3() -> Tournament { return from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }
}

TEST(Arcs, TransitiveAllLight)
{
    auto t = transitive_tournament(5);
    auto arcs = classify_arcs(t, 1);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v)
            if (t.arc(u, v))
                EXPECT_TRUE(arcs.is_light(u, v));
}

TEST(Arcs, CyclicTriangleAllHeavy)
{
    auto arcs = classify_arcs(c3(), 1);
    EXPECT_TRUE(arcs.is_heavy(0, 1));
    EXPECT_TRUE(arcs.is_heavy(1, 2));
    EXPECT_TRUE(arcs.is_heavy(2, 0));
}

TEST(Arcs, OneHeavyMeansReturningPath)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_tournament(7, seed);
        auto arcs = classify_arcs(t, 1);
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = 0; v < 7; ++v) {
                if (! t.arc(u, v))
                    continue;
                bool path = (t.out(v) & t.in(u)).any();
                EXPECT_EQ(arcs.is_heavy(u, v), path);
            }
    }
}

TEST(FindMountain, SmallCases)
{
    auto one = find_mountain(transitive_tournament(3), 1, 1);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one->vertex_set.count(), 1);

    auto two = find_mountain(c3(), 1, 2);
    ASSERT_TRUE(two.has_value());
    EXPECT_EQ(two->clique.size(), 2U);
    EXPECT_EQ(two->vertex_set, VertexSet::full(3));
    EXPECT_EQ(two->order(), 2);

    EXPECT_FALSE(find_mountain(transitive_tournament(6), 1, 2).has_value());
}

TEST(VerifyMountain, DetectsDamage)
{
    auto t = c3();
    auto cert = *find_mountain(t, 1, 2);
    EXPECT_TRUE(verify_mountain(t, cert).ok);

    auto shrunk = cert;
    shrunk.witnesses.clear();
    EXPECT_FALSE(verify_mountain(t, shrunk).ok);

    // same certificate read against the transitive tournament: the clique arc is not heavy
    EXPECT_FALSE(verify_mountain(transitive_tournament(3), cert).ok);

    auto j = to_json(cert);
    EXPECT_EQ(j.at("schema"), 1);
    auto back = mountain_from_json(j, 3);
    EXPECT_TRUE(verify_mountain(t, back).ok);
}

TEST(VerifyMountain, FoundMountainsVerify)
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = random_tournament(8, seed);
        for (int m = 1; m <= 3; ++m) {
            auto cert = MountainOracle(t).mountain_certificate(t.vertices(), m);
            if (! cert)
                break;
            EXPECT_TRUE(verify_mountain(t, *cert).ok);
            EXPECT_LE(cert->vertex_set.count(), mountain_size_bound(m));
        }
    }
}

TEST(TwoColouring, TrivialCases)
{
    auto t = c3();
    auto cert = *MountainOracle(t).mountain_certificate(t.vertices(), 2);
    std::vector<Colour> red(3, Colour::red);
    auto w = two_colouring_witness(t, cert, red, 2, 1);
    EXPECT_EQ(w.colour, Colour::red);
    EXPECT_EQ(w.certificate.vertex_set, cert.vertex_set);

    auto single = *MountainOracle(t).mountain_certificate(t.vertices(), 1);
    std::vector<Colour> blue(3, Colour::blue);
    auto s = two_colouring_witness(t, single, blue, 1, 1);
    EXPECT_EQ(s.colour, Colour::blue);
    EXPECT_EQ(s.certificate.vertex_set, single.vertex_set);
}

TEST(TwoColouring, CyclicTriangleSplit)
{
    auto t = c3();
    auto cert = *find_mountain(t, 1, 2);
    std::vector<Colour> phi(3, Colour::blue);
    for (auto v : cert.clique)
        phi[static_cast<size_t>(v)] = Colour::red;
    // a = 2 asks for a red 2-mountain; the only 2-mountain is all of C_3, so the answer is a blue vertex
    auto w = two_colouring_witness(t, cert, phi, 2, 1);
    EXPECT_EQ(w.colour, Colour::blue);
    EXPECT_EQ(w.order, 1);
    EXPECT_EQ(w.certificate.vertex_set.count(), 1);
    EXPECT_TRUE(verify_mountain(t, w.certificate).ok);
}

TEST(LightDomination, SmallCases)
{
    EXPECT_EQ(min_light_dominating(transitive_tournament(5), 1).set, VertexSet::of(5, {0}));
    EXPECT_EQ(min_light_dominating(c3(), 1).set.count(), 3);
    EXPECT_EQ(min_light_dominating(transitive_tournament(1), 1).set.count(), 1);

    std::vector<Vertex> order{0, 1, 2, 3, 4};
    EXPECT_EQ(greedy_light_set(transitive_tournament(5), 1, order), VertexSet::of(5, {0}));
    std::vector<Vertex> c3order{2, 0, 1};
    EXPECT_EQ(greedy_light_set(c3(), 1, c3order).count(), 3);
    EXPECT_TRUE(greedy_light_set(transitive_tournament(0), 1, {}).empty());
}

TEST(LightDomination, ExactIsNoLargerThanGreedy)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = random_tournament(8, seed);
        auto arcs = classify_arcs(t, 1);
        auto best = min_light_dominating(arcs);
        EXPECT_TRUE(is_light_dominating(arcs, best.set));
        std::vector<Vertex> order{0, 1, 2, 3, 4, 5, 6, 7};
        auto greedy = greedy_light_set(arcs, order);
        EXPECT_TRUE(is_light_dominating(arcs, greedy));
        EXPECT_LE(best.set.count(), greedy.count());
    }
}

TEST(LogBound, Audits)
{
    auto flat = log_bound_audit(transitive_tournament(6));
    EXPECT_TRUE(flat.ok);
    EXPECT_EQ(flat.largest_mountain, 1);
    auto cyc = log_bound_audit(c3());
    EXPECT_TRUE(cyc.ok);
    EXPECT_GE(cyc.largest_mountain, 2);
    EXPECT_EQ(cyc.omega, 2);
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        EXPECT_TRUE(log_bound_audit(random_tournament(1 + static_cast<int>(seed % 10), seed)).ok) << seed;
}

TEST(GrowMountain, FirstHypothesisFails)
{
    GrowMountainParams p;
    auto out = grow_mountain_step(c3(), p);
    EXPECT_EQ(out.kind, GrowMountainOutcome::Kind::hypothesis_failed);
    EXPECT_EQ(out.bullet, 1);
    EXPECT_EQ(out.q, 3);
}

TEST(GrowMountain, SecondHypothesisFails)
{
    // vertex 0 of D_3-like cyclic triangles has a cyclic out-neighbourhood once the threshold is lowered
    auto t = substitute(c3(), 1, c3());
    GrowMountainParams p;
    p.threshold_override = 1;
    auto out = grow_mountain_step(t, p);
    EXPECT_EQ(out.kind, GrowMountainOutcome::Kind::hypothesis_failed);
    EXPECT_EQ(out.bullet, 2);
}

TEST(GrowMountain, OverriddenThresholdGivesMountain)
{
    // locally transitive on seven vertices: every out-neighbourhood is transitive and ω⃗ = 2
    auto t = oracle::tournament_from_bits(7, 17976);
    GrowMountainParams p;
    p.threshold_override = 2;
    auto out = grow_mountain_step(t, p);
    ASSERT_EQ(out.kind, GrowMountainOutcome::Kind::mountain);
    EXPECT_EQ(out.q, 3);
    ASSERT_TRUE(out.mountain.has_value());
    EXPECT_TRUE(verify_mountain(t, *out.mountain).ok);
    EXPECT_EQ(out.mountain->clique.size(), 2U);
}

TEST(GrowMountain, DeskScaleRunsNeverContradictSilently)
{
    int mountains = 0;
    for (int n = 3; n <= 6; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); code += 7) {
            auto t = oracle::tournament_from_bits(n, code);
            GrowMountainParams p;
            p.threshold_override = 2;
            p.q_override = 1;
            auto out = grow_mountain_step(t, p);
            if (out.kind == GrowMountainOutcome::Kind::mountain) {
                ASSERT_TRUE(out.mountain.has_value());
                EXPECT_TRUE(verify_mountain(t, *out.mountain).ok);
                ++mountains;
            }
            if (out.kind == GrowMountainOutcome::Kind::proof_step_contradiction)
                EXPECT_TRUE(out.relaxed) << out.diagnostic;
        }
    EXPECT_GT(mountains, 0);
}
