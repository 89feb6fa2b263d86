#include <tclique/constructions.hh>
#include <tclique/errors.hh>

using boost::multiprecision::cpp_int;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    auto family_from_string(const string & s) -> Family
    {
        if (s == "A" || s == "a")
            return Family::A;
        if (s == "D" || s == "d")
            return Family::D;
        if (s == "U" || s == "u")
            return Family::U;
        throw InvalidInput("unknown family '" + s + "' (expected A, D or U)");
    }

    auto to_string(Family f) -> string
    {
        switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::U: return "U";
        }
        return "?";
    }

    auto build_D(int n) -> LabelledTournament
    {
        if (n < 1 || n > max_D_index)
            throw InvalidInput("build_D: n must be in 1.." + to_string(max_D_index) + ", got " + to_string(n));
        if (n == 1)
            return {transitive_tournament(1), {"d"}};
        auto inner = build_D(n - 1);
        auto single = transitive_tournament(1);
        LabelledTournament result{delta_compose(inner.tournament, inner.tournament, single), {}};
        for (int part = 1; part <= 2; ++part)
            for (auto & l : inner.labels)
                result.labels.push_back(to_string(part) + (l == "d" ? "" : "." + l));
        result.labels.push_back("3");
        return result;
    }

    auto build_A(int n) -> LabelledTournament
    {
        if (n < 1 || n > max_A_index)
            throw InvalidInput("build_A: n must be in 1.." + to_string(max_A_index) + ", got " + to_string(n));
        if (n == 1)
            return {transitive_tournament(1), {"v1"}};
        auto inner = build_A(n - 1);
        int block = inner.tournament.size();
        int total = n + (n - 1) * block;

        // spine v_i sits at position (i-1)(block+1); block T_j starts right after v_j
        auto spine = [&](int i) { return (i - 1) * (block + 1); };
        auto block_start = [&](int j) { return spine(j) + 1; };

        vector<VertexSet> rows(static_cast<size_t>(total), VertexSet(total));
        vector<string> labels(static_cast<size_t>(total));
        for (int i = 1; i <= n; ++i) {
            labels[static_cast<size_t>(spine(i))] = "v" + to_string(i);
            for (int j = 1; j < i; ++j)
                rows[static_cast<size_t>(spine(i))].set(spine(j));
            for (int j = i; j <= n - 1; ++j)
                for (int x = 0; x < block; ++x)
                    rows[static_cast<size_t>(spine(i))].set(block_start(j) + x);
        }
        for (int j = 1; j <= n - 1; ++j)
            for (int x = 0; x < block; ++x) {
                auto & row = rows[static_cast<size_t>(block_start(j) + x)];
                labels[static_cast<size_t>(block_start(j) + x)] = "T" + to_string(j) + "/" + inner.labels[static_cast<size_t>(x)];
                inner.tournament.out(x).for_each([&](Vertex y) { row.set(block_start(j) + y); });
                for (int k = j + 1; k <= n - 1; ++k)
                    for (int y = 0; y < block; ++y)
                        row.set(block_start(k) + y);
                for (int i = j + 1; i <= n; ++i)
                    row.set(spine(i));
            }
        return {Tournament::from_out_rows(std::move(rows)), std::move(labels)};
    }

    auto build_U(int n) -> LabelledTournament
    {
        if (n < 1)
            throw InvalidInput("build_U: n must be at least 1");
        int total = 2 * n - 1;
        vector<VertexSet> rows(static_cast<size_t>(total), VertexSet(total));
        vector<string> labels;
        for (int a = 0; a < total; ++a) {
            int i = a + 1;
            labels.push_back("u" + to_string(i));
            for (int b = 0; b < total; ++b) {
                int j = b + 1;
                if (i == j)
                    continue;
                bool both_odd = i % 2 == 1 && j % 2 == 1;
                if ((both_odd && i > j) || (! both_odd && i < j))
                    rows[static_cast<size_t>(a)].set(b);
            }
        }
        return {Tournament::from_out_rows(std::move(rows)), std::move(labels)};
    }

    auto build_family(FamilyId id) -> LabelledTournament
    {
        switch (id.tag) {
        case Family::A: return build_A(id.n);
        case Family::D: return build_D(id.n);
        case Family::U: return build_U(id.n);
        }
        throw InvalidInput("unknown family");
    }

    auto size_A(int n) -> cpp_int
    {
        if (n < 1)
            throw InvalidInput("size_A: n must be at least 1");
        cpp_int a = 1, factorial = 1;
        for (int k = 2; k <= n; ++k) {
            a = (k - 1) * a + k;
            factorial *= k;
        }
        if (a > 2 * factorial)
            throw std::logic_error("size_A exceeds 2 n!");
        return a;
    }

    auto A_from_U(int n) -> Tournament
    {
        auto result = build_U(n).tournament;
        if (n == 1)
            return result;
        auto inner = build_A(n - 1).tournament;
        // highest even index first so earlier positions are unaffected
        for (int i = 2 * n - 2; i >= 2; i -= 2)
            result = substitute(result, i - 1, inner);
        return result;
    }
}
