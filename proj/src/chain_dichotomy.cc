#include <tclique/chain_dichotomy.hh>
#include <tclique/constructions.hh>
#include <tclique/errors.hh>
#include <tclique/max_clique.hh>

#include <algorithm>
#include <stdexcept>

using nlohmann::json;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    auto to_string(DichotomyResult::Kind k) -> string
    {
        switch (k) {
        case DichotomyResult::Kind::ordering: return "ordering";
        case DichotomyResult::Kind::embedding: return "embedding";
        case DichotomyResult::Kind::hypothesis_failed: return "hypothesis_failed";
        }
        return "?";
    }

    auto partial_ordering_clique_number(const Tournament & t, const vector<Vertex> & order) -> int
    {
        int n = t.size();
        Graph g(n);
        VertexSet seen(n);
        for (Vertex v : order) {
            if (v < 0 || v >= n || seen.test(v))
                throw InvalidInput("ordering repeats or leaves the vertex range");
            (seen & t.out(v)).for_each([&](Vertex u) { g.add_edge(u, v); });
            seen.set(v);
        }
        return max_clique(g, seen).size;
    }

    namespace
    {
        auto factorial(int m) -> long
        {
            long f = 1;
            for (int i = 2; i <= m; ++i)
                f *= i;
            return f;
        }

        auto failed(DichotomyResult r, string why) -> DichotomyResult
        {
            r.kind = DichotomyResult::Kind::hypothesis_failed;
            r.diagnostic = std::move(why);
            return r;
        }
    }

    auto chain_dichotomy(OmegaEvaluator & omega, const NearBagChain & q, int m, int c_small, const DichotomyOptions & options) -> DichotomyResult
    {
        const auto & t = omega.tournament();
        int n = t.size();
        if (m < 2 || m > max_A_index)
            throw InvalidInput("chain_dichotomy: m must be in 2.." + to_string(max_A_index));
        DichotomyResult result;
        result.bound = 4L * m * q.c;

        if (auto report = verify_near_bag_chain(omega, q); ! report.ok)
            return failed(result, "not a (" + to_string(q.c) + "," + to_string(q.a) + ")-near-bag-chain: " + report.violations.front().rule);
        long need = 2 * factorial(m) * q.a + c_small;
        if (q.c < need) {
            string why = "c = " + to_string(q.c) + " < 2 m! a + c_small = " + to_string(need);
            if (! options.relaxed)
                return failed(result, why);
            result.relaxed_note = why;
        }
        auto inner = build_A(m - 1).tournament;
        auto all = union_of(n, q.bags);
        if (options.check_small_hypothesis) {
            try {
                if (auto bad = pattern_hypothesis_violation(omega, all, c_small, inner, options.subset_check_limit))
                    return failed(result, "subset " + bad->to_string() + " has omega >= c_small but no A_" + to_string(m - 1));
            }
            catch (const SizeLimitExceeded &) {
                result.small_hypothesis_assumed = true;
            }
        }
        else
            result.small_hypothesis_assumed = true;

        result.merged = merge_bags(omega, q, q.c);
        const auto & bags = result.merged.chain.bags;
        auto g = backward_graph(t, bags);
        auto k = max_clique(g, all);
        result.backward_clique = k.size;

        if (k.size < 2 * m) {
            for (auto & bag : bags) {
                auto o = omega.order(bag);
                result.order.insert(result.order.end(), o.begin(), o.end());
            }
            result.order_clique = partial_ordering_clique_number(t, result.order);
            result.kind = DichotomyResult::Kind::ordering;
            result.verified = result.order_clique < result.bound;
            if (! result.verified && omega.mode() == EvaluatorMode::exact)
                throw std::logic_error("concatenated ordering has clique number " + to_string(result.order_clique) + " >= 4mc");
            return result;
        }

        vector<int> bag_of(static_cast<size_t>(n), -1);
        for (size_t j = 0; j < bags.size(); ++j)
            bags[j].for_each([&](Vertex v) { bag_of[static_cast<size_t>(v)] = static_cast<int>(j); });
        auto members = k.witness.members();
        std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) { return bag_of[static_cast<size_t>(a)] < bag_of[static_cast<size_t>(b)]; });
        members.resize(static_cast<size_t>(2 * m));
        result.clique = members;
        // positions are 1-based in the argument: v_i = members[i-1], Z'_{j_i} = bags[bag_of[v_i]]
        auto v_at = [&](int i) { return members[static_cast<size_t>(i - 1)]; };
        auto zone_at = [&](int i) -> const VertexSet & { return bags[static_cast<size_t>(bag_of[static_cast<size_t>(v_at(i))])]; };
        for (int i = 1; i <= 2 * m; i += 2)
            result.k_prime.push_back(v_at(i));

        VertexSet s(n);
        for (int i = 2; i <= 2 * m - 2; i += 2)
            s |= zone_at(i);
        auto s_prime = s;
        for (int ip = 1; ip <= 2 * m - 1; ip += 2) {
            Vertex v = v_at(ip);
            for (int i = 2; i <= 2 * m - 2; i += 2)
                s_prime -= zone_at(i) & (i > ip ? t.in(v) : t.out(v));
        }

        auto construction_failed = [&](const string & why) -> DichotomyResult {
            if (options.relaxed || result.small_hypothesis_assumed)
                return failed(result, why);
            throw std::logic_error("chain_dichotomy construction failed under verified hypotheses: " + why);
        };

        vector<Embedding> copies;
        for (int i = 2; i <= 2 * m - 2; i += 2) {
            auto avail = zone_at(i) & s_prime;
            auto x = least_embedding(t, avail, inner);
            if (! x)
                return construction_failed("no A_" + to_string(m - 1) + " in Z'_{j_" + to_string(i) + "} ∩ S' (omega " +
                    to_string(omega.value(avail)) + ")");
            VertexSet xs(n);
            for (Vertex v : *x)
                xs.set(v);
            result.x_sets.push_back(xs);
            copies.push_back(*x);
            s_prime -= t.in_of(xs);
        }

        auto pattern = build_A(m).tournament;
        int block = inner.size();
        result.embedding.assign(static_cast<size_t>(pattern.size()), -1);
        for (int i = 1; i <= m; ++i)
            result.embedding[static_cast<size_t>((i - 1) * (block + 1))] = result.k_prime[static_cast<size_t>(i - 1)];
        for (int j = 1; j <= m - 1; ++j)
            for (int x = 0; x < block; ++x)
                result.embedding[static_cast<size_t>((j - 1) * (block + 1) + 1 + x)] = copies[static_cast<size_t>(j - 1)][static_cast<size_t>(x)];
        result.kind = DichotomyResult::Kind::embedding;
        result.verified = verify_embedding(t, pattern, result.embedding);
        if (! result.verified)
            return construction_failed("assembled map is not a copy of A_" + to_string(m));
        return result;
    }

    auto chain_dichotomy(const Tournament & t, const NearBagChain & q, int m, int c_small, const DichotomyOptions & options) -> DichotomyResult
    {
        OmegaEvaluator omega(t);
        return chain_dichotomy(omega, q, m, c_small, options);
    }

    auto to_json(const DichotomyResult & r) -> json
    {
        json j{{"schema", 1}, {"kind", "chain_dichotomy"}, {"branch", to_string(r.kind)}, {"merged_bags", bags_to_json(r.merged.chain.bags)},
            {"merged_omegas", r.merged.omegas}, {"backward_clique", r.backward_clique}, {"verified", r.verified},
            {"small_hypothesis_assumed", r.small_hypothesis_assumed}};
        if (! r.relaxed_note.empty())
            j["relaxed"] = r.relaxed_note;
        switch (r.kind) {
        case DichotomyResult::Kind::ordering:
            j["order"] = r.order;
            j["order_clique"] = r.order_clique;
            j["bound"] = r.bound;
            break;
        case DichotomyResult::Kind::embedding:
            j["clique"] = r.clique;
            j["k_prime"] = r.k_prime;
            j["x_sets"] = bags_to_json(r.x_sets);
            j["embedding"] = r.embedding;
            break;
        case DichotomyResult::Kind::hypothesis_failed:
            j["diagnostic"] = r.diagnostic;
            break;
        }
        return j;
    }
}
