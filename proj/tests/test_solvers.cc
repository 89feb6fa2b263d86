#include "oracles.hh"

#include <tclique/certificates.hh>
#include <tclique/chi.hh>
#include <tclique/constructions.hh>
#include <tclique/errors.hh>
#include <tclique/evaluator.hh>
#include <tclique/omega.hh>

#include <gtest/gtest.h>

using namespace tclique;

namespace
{
    auto c3() -> Tournament { return from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }
}

TEST(Omega, SmallValues)
{
    EXPECT_EQ(omega_value(transitive_tournament(5)), 1);
    EXPECT_EQ(omega_value(c3()), 2);
    EXPECT_EQ(omega_value(transitive_tournament(0)), 0);
    auto d3 = build_D(3).tournament;
    EXPECT_EQ(omega_value(d3), oracle::omega_by_permutations(d3));
}

TEST(Omega, MatchesPermutationOracle)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        auto t = random_tournament(n, seed);
        auto r = omega_dir(t);
        ASSERT_EQ(r.status, SolveStatus::exact);
        EXPECT_EQ(r.value, oracle::omega_by_permutations(t)) << "seed " << seed;
        EXPECT_EQ(ordering_clique_number(t, r.order), r.value);
        EXPECT_TRUE(verify_omega_certificate(t, r));
    }
}

TEST(Omega, SubsetAndLimits)
{
    auto d3 = build_D(3).tournament;
    EXPECT_EQ(omega_value(d3, VertexSet::of(7, {0})), 1);
    EXPECT_EQ(omega_value(d3, VertexSet(7)), 0);
    EXPECT_THROW(omega_dir(transitive_tournament(20)), SizeLimitExceeded);
    OmegaOptions wide;
    wide.exact_limit = 20;
    EXPECT_EQ(omega_dir(transitive_tournament(20), wide).value, 1);
}

TEST(Omega, BudgetReportsBracket)
{
    OmegaOptions tight;
    tight.budget = 0;
    auto r = omega_dir(build_D(3).tournament, tight);
    EXPECT_EQ(r.status, SolveStatus::exceeded);
    EXPECT_LE(r.lower, r.upper);
    EXPECT_LE(r.lower, 2);
    EXPECT_GE(r.upper, 2);
}

TEST(Omega, CertificateRoundTrip)
{
    auto t = build_D(3).tournament;
    auto r = omega_dir(t);
    auto j = to_json(r);
    EXPECT_EQ(j.at("schema"), 1);
    auto back = omega_result_from_json(j);
    EXPECT_EQ(back.value, r.value);
    EXPECT_EQ(back.order, r.order);
    EXPECT_TRUE(verify_omega_certificate(t, back));
    // a worse ordering does not certify the value
    auto tampered = back;
    tampered.value = 1;
    tampered.lower = tampered.upper = 1;
    EXPECT_FALSE(verify_omega_certificate(t, tampered));
}

TEST(OmegaBounds, Bracket)
{
    auto b = omega_dir_bounds(transitive_tournament(20));
    EXPECT_EQ(b.lower, 1);
    EXPECT_EQ(b.upper, 1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = random_tournament(18, seed);
        OmegaBoundsOptions o;
        o.seed = seed;
        auto r = omega_dir_bounds(t, o);
        EXPECT_LE(r.lower, r.upper);
        EXPECT_EQ(ordering_clique_number(t, r.upper_order), r.upper);
    }
}

TEST(OmegaBounds, BracketsExactOnD4)
{
    auto d4 = build_D(4).tournament;
    OmegaOptions wide;
    wide.exact_limit = 15;
    int exact = omega_dir(d4, wide).value;
    EXPECT_GE(exact, omega_value(build_D(3).tournament));
    OmegaBoundsOptions o;
    o.seed = 7;
    auto b = omega_dir_bounds(d4, o);
    EXPECT_LE(b.lower, exact);
    EXPECT_GE(b.upper, exact);
}

TEST(Chi, SmallValues)
{
    EXPECT_EQ(chi_dir(transitive_tournament(6)).value, 1);
    auto c = chi_dir(c3());
    EXPECT_EQ(c.value, 2);
    EXPECT_TRUE(is_transitive_partition(c3(), c.classes));
    EXPECT_LE(chi_dir(build_U(3).tournament).value, 2);
    EXPECT_THROW(chi_dir(transitive_tournament(21)), SizeLimitExceeded);
}

TEST(Chi, MatchesColouringOracle)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        auto t = random_tournament(n, seed);
        auto r = chi_dir(t);
        EXPECT_EQ(r.value, oracle::chi_by_colourings(t)) << "seed " << seed;
        EXPECT_TRUE(verify_chi_certificate(t, r));
        EXPECT_LE(omega_value(t), r.value);
    }
}

TEST(Evaluator, CachesAndAgrees)
{
    auto t = random_tournament(10, 3);
    OmegaEvaluator ev(t);
    auto all = t.vertices();
    int w = ev.value(all);
    EXPECT_EQ(w, omega_value(t));
    EXPECT_EQ(ev.value(all), w);
    EXPECT_EQ(ev.exact_solves(), 1);
    EXPECT_TRUE(ev.at_least(all, w));
    EXPECT_FALSE(ev.at_least(all, w + 1));
    EXPECT_EQ(ordering_clique_number(t, ev.order(all)), w);
}

TEST(Evaluator, BoundsModeBrackets)
{
    auto t = random_tournament(12, 5);
    OmegaBoundsOptions bo;
    bo.seed = 1;
    OmegaEvaluator ev(t, EvaluatorMode::bounds, {}, bo);
    auto iv = ev.interval(t.vertices());
    int w = omega_value(t);
    EXPECT_LE(iv.lower, w);
    EXPECT_GE(iv.upper, w);
}
