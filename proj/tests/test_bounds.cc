#include "oracles.hh"
#include "transcription.hh"

#include <tclique/bounds.hh>
#include <tclique/errors.hh>

#include <gtest/gtest.h>

using namespace tclique;

TEST(Ramsey, SmallValues)
{
    EXPECT_EQ(ramsey_upper(1, 7)->value.value, 1);
    EXPECT_EQ(ramsey_upper(3, 3)->value.value, 6);
    EXPECT_TRUE(ramsey_upper(3, 3)->value.is_exact());
    EXPECT_LE(ramsey_upper(4, 4)->value.value, 20);
    EXPECT_EQ(ramsey_upper(6, 2)->value.value, 6);
    // binomial fallback
    EXPECT_EQ(ramsey_upper(5, 5)->value.value, 70);
}

TEST(Ramsey, ThreeThreeByBruteForce)
{
    EXPECT_FALSE(oracle::ramsey_holds(5, 3, 3));
    EXPECT_TRUE(oracle::ramsey_holds(6, 3, 3));
    EXPECT_EQ(ramsey_upper(3, 3)->value.value, 6);
}

TEST(Q, Values)
{
    EXPECT_EQ(q_of(1, 1, 1)->value.value, 3);
    EXPECT_EQ(q_of(1, 2, 1)->value.value, 6);
    BigInt prev = 0;
    for (long b = 1; b <= 6; ++b) {
        auto v = q_of(b, 2, 2)->value.value;
        EXPECT_GE(v, prev);
        prev = v;
    }
    EXPECT_THROW(q_of(1, 1, 2), InvalidInput);
}

TEST(MountainLadder, ByHand)
{
    auto ladder = mountain_ladder(1);
    ASSERT_EQ(ladder.size(), 3U);
    EXPECT_EQ(ladder[0]->value.value, 1);
    EXPECT_EQ(ladder[1]->value.value, 7);
    EXPECT_EQ(ladder[2]->value.value, 51);
    EXPECT_EQ(g45(1)->value.value, 51);
    for (long b = 1; b <= 3; ++b) {
        auto l = mountain_ladder(b);
        for (size_t i = 1; i < l.size(); ++i)
            EXPECT_GE(l[i]->value.value, l[i - 1]->value.value);
        EXPECT_EQ(l.front()->value.value, 1);
    }
}

TEST(G45, Monotone)
{
    EXPECT_EQ(g45(0)->value.value, 1);
    BigInt prev = 0;
    for (long b = 1; b <= 3; ++b) {
        auto v = g45(b)->value;
        EXPECT_TRUE(v.is_exact());
        EXPECT_GE(v.value, prev);
        EXPECT_GE(v.value, b);
        EXPECT_EQ(v.value, transcription::g(b));
        prev = v.value;
    }
    auto big = g45(9)->value;
    EXPECT_EQ(big.kind, BoundValue::Kind::lower_bound);
    EXPECT_EQ(big.value, transcription::g(9));
}

TEST(Ladder2a, SmallCases)
{
    auto id = [](const BoundExpr & x) { return x; };
    auto one = c_ladder_2a(constant(1), 1, id);
    ASSERT_EQ(one.entries.size(), 1U);
    EXPECT_EQ(one.entries[0]->value.value, 1);
    EXPECT_EQ(one.C->value.value, 2 * 51 + 1);

    auto two = c_ladder_2a(constant(1), 2, id);
    EXPECT_EQ(two.entries[0]->value.value, 2 * 51 + 4 * 1);
    EXPECT_EQ(two.C->value.value, 2 * transcription::g(106) + 1);
    EXPECT_GE(two.entries[0]->value.value, two.entries[1]->value.value);
}

TEST(FMain, Values)
{
    auto f1 = f_main(1);
    EXPECT_EQ(f1->value.value, 0);
    EXPECT_TRUE(f1->value.is_exact());
    auto f2 = f_main(2);
    EXPECT_EQ(f2->value.kind, BoundValue::Kind::lower_bound);
    EXPECT_EQ(f2->value.value, transcription::f(2));
    EXPECT_TRUE(trace_consistent(f2));
    EXPECT_EQ(reevaluate(f2), f2->value);
}

TEST(FMain, Increasing)
{
    BigInt prev = -2;
    for (int t = 1; t <= 4; ++t) {
        auto v = f_main(t)->value;
        EXPECT_GT(v.log10_floor(), prev) << t;
        prev = v.log10_floor();
    }
}

TEST(Traces, Reevaluate)
{
    for (auto e : {ramsey_upper(3, 3), q_of(2, 2, 1), g45(2), g45(7), C54(constant(1), constant(1), 2)})
        EXPECT_TRUE(trace_consistent(e));
    EXPECT_GT(trace_size(f_main(2)), 10);
    auto j = to_json(f_main(2), 2);
    EXPECT_EQ(j.at("op"), "mul");
    EXPECT_TRUE(j.contains("operands"));
}

TEST(BoundValue, LogDomain)
{
    BoundsContext tiny;
    tiny.digit_cap = 5;
    auto big = bv_mul(BoundValue::exact_of(BigInt(1000000)), BoundValue::exact_of(BigInt(1000000)), tiny);
    EXPECT_EQ(big.kind, BoundValue::Kind::log10_lower_bound);
    EXPECT_LE(big.value, 12);
    EXPECT_EQ(big.to_string().substr(0, 5), ">=10^");
}
