#include <tclique/canonical.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>

#include <gtest/gtest.h>

using namespace tclique;

namespace
{
    auto c3() -> Tournament { return from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

    auto factorial(int n) -> long
    {
        long f = 1;
        for (int i = 2; i <= n; ++i)
            f *= i;
        return f;
    }
}

TEST(BuildD, SmallCases)
{
    EXPECT_EQ(build_D(1).tournament.size(), 1);
    EXPECT_TRUE(isomorphic(build_D(2).tournament, c3()));
    EXPECT_EQ(build_D(5).tournament.size(), 31);
    for (int n = 1; n <= max_D_index; ++n)
        EXPECT_EQ(build_D(n).tournament.size(), (1 << n) - 1);
    EXPECT_THROW(build_D(0), InvalidInput);
}

TEST(BuildD, SelfConverse)
{
    for (int n = 1; n <= 4; ++n) {
        auto d = build_D(n).tournament;
        EXPECT_TRUE(isomorphic(d, d.reversed())) << n;
    }
}

TEST(BuildA, Sizes)
{
    EXPECT_TRUE(isomorphic(build_A(2).tournament, c3()));
    EXPECT_EQ(build_A(3).tournament.size(), 9);
    EXPECT_EQ(size_A(2), 3);
    EXPECT_EQ(size_A(4), 31);
    for (int n = 1; n <= max_A_index; ++n) {
        auto a = build_A(n);
        EXPECT_EQ(a.tournament.size(), size_A(n));
        EXPECT_LE(a.tournament.size(), 2 * factorial(n));
        EXPECT_EQ(a.labels.size(), static_cast<size_t>(a.tournament.size()));
    }
}

TEST(BuildU, Shape)
{
    EXPECT_EQ(build_U(1).tournament.size(), 1);
    auto u3 = build_U(3).tournament;
    EXPECT_EQ(u3.size(), 5);
    EXPECT_TRUE(is_prime(u3));
}

TEST(BuildU, SubstitutionGivesA)
{
    for (int n = 2; n <= 4; ++n)
        EXPECT_EQ(canonical_code(A_from_U(n), 64), canonical_code(build_A(n).tournament, 64)) << n;
}

TEST(Families, FromString)
{
    EXPECT_EQ(family_from_string("D"), Family::D);
    EXPECT_THROW(family_from_string("Q"), InvalidInput);
    EXPECT_EQ(build_family({Family::A, 3}).tournament, build_A(3).tournament);
}

TEST(Containment, Basics)
{
    auto e = contains_copy(c3(), transitive_tournament(1));
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(e->size(), 1U);
    EXPECT_FALSE(contains_copy(transitive_tournament(6), c3()).has_value());
    auto d3 = build_D(3).tournament;
    auto copy = contains_copy(d3, c3());
    ASSERT_TRUE(copy.has_value());
    EXPECT_TRUE(verify_embedding(d3, c3(), *copy));
    EXPECT_FALSE(verify_embedding(d3, c3(), {0, 0, 1}));
}

TEST(Containment, FreenessFacts)
{
    auto d3 = build_D(3).tournament;
    auto a3 = build_A(3).tournament;
    EXPECT_FALSE(contains_copy(a3, d3).has_value());
    EXPECT_FALSE(contains_copy(build_D(4).tournament, a3).has_value());
    EXPECT_TRUE(contains_copy(a3, build_U(3).tournament).has_value());
}

TEST(Containment, Budget)
{
    ContainmentOptions o;
    o.budget = 0;
    EXPECT_THROW(contains_copy(build_D(4).tournament, build_A(3).tournament, o), BudgetExceeded);
}

TEST(Containment, FamilyIndex)
{
    EXPECT_EQ(family_index(transitive_tournament(5), Family::D).value, 1);
    EXPECT_EQ(family_index(build_D(3).tournament, Family::D).value, 3);
    EXPECT_EQ(family_index(build_D(4).tournament, Family::A).value, 2);
}

TEST(Modules, PrimeAndComposite)
{
    EXPECT_FALSE(find_module(c3()).has_value());
    EXPECT_TRUE(is_prime(c3()));
    auto sub = substitute(c3(), 0, c3());
    auto m = find_module(sub);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(is_module(sub, *m));
    auto d3 = build_D(3).tournament;
    EXPECT_TRUE(find_module(d3).has_value());
    EXPECT_FALSE(is_prime(d3));
    EXPECT_TRUE(is_prime(build_U(3).tournament));
}
