#ifndef TCLIQUE_TESTS_TRANSCRIPTION_HH
#define TCLIQUE_TESTS_TRANSCRIPTION_HH

#include <tclique/bounds.hh>

#include <algorithm>
#include <map>
#include <vector>

// Second, straight-line transcription of the constant recurrences on plain big integers.
namespace transcription
{
    using tclique::BigInt;

    inline auto binomial(const BigInt & n, long k) -> BigInt
    {
        if (n < k)
            return 0;
        BigInt r = 1;
        for (long i = 0; i < k; ++i)
            r = r * (n - i) / (i + 1);
        return r;
    }

    inline auto ramsey(const BigInt & s, long t) -> BigInt
    {
        static const std::map<std::pair<long, long>, long> known{
            {{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23}, {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
        if (s == 1 || t == 1)
            return 1;
        if (s == 2)
            return t;
        if (t == 2)
            return s;
        if (s <= 64) {
            long a = static_cast<long>(s), b = t;
            if (auto it = known.find({std::min(a, b), std::max(a, b)}); it != known.end())
                return it->second;
        }
        long k = s < t ? static_cast<long>(s) - 1 : t - 1;
        return binomial(s + t - 2, k);
    }

    inline auto factorial(long n) -> BigInt
    {
        BigInt f = 1;
        for (long i = 2; i <= n; ++i)
            f *= i;
        return f;
    }

    /// Mountain ladder with `rungs` steps: exact below six, three rungs (a lower bound) above.
    inline auto g(const BigInt & b) -> BigInt
    {
        if (b <= 0)
            return 1;
        long rungs = b <= 5 ? (1L << static_cast<long>(b)) : 3;
        BigInt c = 1;
        for (long r = 1; r <= rungs; ++r) {
            BigInt cur = c > r ? c : BigInt(r);
            for (long s = 1; s <= r; ++s) {
                BigInt q = ramsey(b * factorial(r) * factorial(r) + 1, s + 1) + s;
                cur += (b + 1) * q;
            }
            c = cur;
        }
        return c;
    }

    inline auto C54(const BigInt & c_large, const BigInt & c, int n) -> BigInt
    {
        long d_prev = (1L << (n - 1)) - 1, d_n = (1L << n) - 1;
        std::vector<BigInt> ladder(static_cast<size_t>(d_n + 1));
        ladder[static_cast<size_t>(d_n)] = c;
        for (long i = d_n - 1; i >= 1; --i) {
            const auto & next = ladder[static_cast<size_t>(i + 1)];
            BigInt f = c_large + g((1 + d_prev) * next);
            ladder[static_cast<size_t>(i)] = 2 * g(next) + (BigInt(1) << (i + 1)) * f;
        }
        return 1 + 2 * g(ladder[1]) + 1;
    }

    inline auto f(int t) -> BigInt
    {
        if (t == 1)
            return 0;
        BigInt c_small = f(t - 1);
        BigInt c_large = (BigInt(1) << t) * c_small;
        BigInt chain = c_large;
        for (int i = 0; i < 3; ++i)
            chain = C54(chain, c_small, t);
        BigInt third = (4 * factorial(t) + 1) * c_small;
        return 16 * t * std::max({c_large, chain, third});
    }
}

#endif
