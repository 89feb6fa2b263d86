#include <tclique/errors.hh>
#include <tclique/evaluator.hh>
#include <tclique/grow_mountain.hh>
#include <tclique/max_clique.hh>

#include <algorithm>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    auto to_string(GrowMountainOutcome::Kind k) -> string
    {
        switch (k) {
        case GrowMountainOutcome::Kind::mountain: return "mountain";
        case GrowMountainOutcome::Kind::hypothesis_failed: return "hypothesis_failed";
        case GrowMountainOutcome::Kind::proof_step_contradiction: return "proof_step_contradiction";
        }
        return "?";
    }

    auto find_mountain_hypothesis_violation(const Tournament & t, int r, int s, int c, const GrowMountainParams & params) -> optional<VertexSet>
    {
        int n = t.size();
        if (n > params.subset_check_limit)
            throw SizeLimitExceeded("subset hypothesis check needs n <= " + to_string(params.subset_check_limit));
        MountainOracle oracle(t, params.mountains);
        OmegaEvaluator omega(t, EvaluatorMode::exact, params.omega);
        auto is_free = [&](const VertexSet & x) { return ! oracle.has_mountain(x, r) || ! oracle.has_clique(x, r, s); };
        // ω⃗ is monotone, so only maximal mountain-free sets need measuring
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            auto x = VertexSet::from_mask(n, mask);
            if (! is_free(x))
                continue;
            bool maximal = true;
            for (Vertex v = 0; v < n && maximal; ++v)
                if (! x.test(v)) {
                    auto bigger = x;
                    bigger.set(v);
                    maximal = ! is_free(bigger);
                }
            if (maximal && omega.at_least(x, c))
                return x;
        }
        return std::nullopt;
    }

    namespace
    {
        auto failed(GrowMountainOutcome o, int bullet, string measured, string required) -> GrowMountainOutcome
        {
            o.kind = GrowMountainOutcome::Kind::hypothesis_failed;
            o.bullet = bullet;
            o.measured = std::move(measured);
            o.required = std::move(required);
            return o;
        }

        auto contradiction(GrowMountainOutcome o, string diagnostic, bool relaxed = false) -> GrowMountainOutcome
        {
            o.kind = GrowMountainOutcome::Kind::proof_step_contradiction;
            o.diagnostic = std::move(diagnostic);
            o.relaxed = relaxed;
            return o;
        }

        auto factorial(int n) -> long
        {
            long f = 1;
            for (int i = 2; i <= n; ++i)
                f *= i;
            return f;
        }
    }

    auto grow_mountain_step(const Tournament & t, const GrowMountainParams & p) -> GrowMountainOutcome
    {
        if (p.r < 1 || p.s < 1 || p.s > p.r || p.b < 1 || p.c < 1)
            throw InvalidInput("grow_mountain_step: need r >= 1, 1 <= s <= r, b, c >= 1");
        if (p.r > p.mountains.cap)
            throw InvalidInput("grow_mountain_step: r exceeds the mountain cap");
        if (p.q_override && *p.q_override < 1)
            throw InvalidInput("grow_mountain_step: q must be positive");

        GrowMountainOutcome out;
        out.q = p.q_override ? BigInt(*p.q_override) : q_of(p.b, p.r, p.s)->value.value;
        int n = t.size();
        auto all = t.vertices();
        OmegaEvaluator omega(t, EvaluatorMode::exact, p.omega);

        bool relaxed = p.q_override || p.threshold_override;
        BigInt required = p.threshold_override ? BigInt(*p.threshold_override) : (p.b + 1) * out.q + p.c;
        int w = omega.value(all);
        if (BigInt(w) < required)
            return failed(out, 1, "omega(T) = " + to_string(w),
                string(p.threshold_override ? "omega(T) >= " : "omega(T) >= (b+1)q + c = ") + required.str());
        for (Vertex v = 0; v < n; ++v)
            if (int x = omega.value(t.out(v)); x > p.b)
                return failed(out, 2, "omega(N+(" + to_string(v) + ")) = " + to_string(x), "<= b = " + to_string(p.b));
        if (auto bad = find_mountain_hypothesis_violation(t, p.r, p.s, p.c, p))
            return failed(out, 3, "subset " + bad->to_string() + " has omega >= c but lacks an r-mountain or an (r,s)-mountain",
                "every subset with omega >= " + to_string(p.c) + " contains both");

        if (out.q > n)
            return contradiction(out, "q exceeds |V(T)|", relaxed);
        long q = out.q.convert_to<long>();
        MountainOracle oracle(t, p.mountains);
        auto arcs = classify_arcs(t, p.r, false, p.mountains);
        auto dom = min_light_dominating(arcs);
        if (! dom.exact)
            throw BudgetExceeded("grow_mountain_step: light dominating set search did not finish");
        auto w_set = dom.set;
        if (w_set.count() < q)
            return contradiction(out, "minimum light dominating set has " + to_string(w_set.count()) + " < q vertices", relaxed);

        auto w_members = w_set.members();
        VertexSet s_set(n);
        for (long i = 0; i < q; ++i)
            s_set.set(w_members[static_cast<std::size_t>(i)]);
        VertexSet a(n), b(n), c(n);
        (all - s_set).for_each([&](Vertex x) {
            if (s_set.is_subset_of(t.out(x)))
                a.set(x);
            else if ((arcs.light_in(x) & s_set).any())
                b.set(x);
            else
                c.set(x);
        });

        if (! omega.at_least(a, p.c))
            return contradiction(out, "omega(A) = " + to_string(omega.value(a)) + " < c", p.threshold_override.has_value());
        auto m = oracle.mountain_certificate(a, p.r);
        if (! m)
            return contradiction(out, "A has omega >= c but no r-mountain");

        long threshold = p.b * factorial(p.r) * factorial(p.r) + 1;
        if (! omega.at_least(b, static_cast<int>(std::min<long>(threshold, n + 1)))) {
            auto s_b = greedy_light_set(arcs, omega.order(b));
            Graph g(n);
            s_b.for_each([&](Vertex u) { (s_b & arcs.heavy_out[static_cast<std::size_t>(u)]).for_each([&](Vertex v) { g.add_edge(u, v); }); });
            auto k = max_clique(g, s_b);
            if (k.size >= p.s + 1) {
                auto members = k.witness.members();
                members.resize(static_cast<std::size_t>(p.s + 1));
                out.mountain = oracle.certificate_from_clique(all, p.r, members);
                out.route = "heavy clique in S_B";
                return out;
            }
            auto k_prime = oracle.find_clique(a, p.r, p.s);
            if (! k_prime)
                return contradiction(out, "A has omega >= c but no (r,s)-clique");
            VertexSet k_set = VertexSet::of(n, *k_prime);
            for (Vertex v : s_set.members()) {
                bool all_heavy = true;
                for (Vertex x : *k_prime)
                    all_heavy = all_heavy && arcs.is_heavy(x, v);
                if (all_heavy) {
                    auto members = *k_prime;
                    members.push_back(v);
                    std::sort(members.begin(), members.end());
                    out.mountain = oracle.certificate_from_clique(all, p.r, members);
                    out.route = "A' plus v";
                    return out;
                }
            }
            auto w_prime = (w_set - s_set) | s_b | k_set;
            if (! is_light_dominating(arcs, w_prime))
                return contradiction(out, "(W \\ S) u S_B u A' is not light dominating");
            if (w_prime.count() < w_set.count())
                return contradiction(out, "light dominating set of size " + to_string(w_prime.count()) + " beats the minimum " +
                    to_string(w_set.count()));
            return contradiction(out,
                "|S_B| + s = " + to_string(s_b.count() + p.s) + " is not below q = " + to_string(q) + ", so the minimality argument does not apply",
                relaxed);
        }

        auto reach = t.out_of(m->vertex_set) & b;
        auto escape = b - reach;
        if (escape.empty())
            return contradiction(out, "B is covered by out-neighbours of the mountain in A");
        Vertex v = escape.first();
        Vertex u = (arcs.light_in(v) & s_set).first();
        return contradiction(out, "arc " + to_string(u) + "->" + to_string(v) + " is light but the mountain in A witnesses it");
    }

    auto to_json(const GrowMountainOutcome & o) -> json
    {
        json j{{"schema", 1}, {"kind", "grow_mountain_step"}, {"outcome", to_string(o.kind)}, {"q", o.q.str()}};
        switch (o.kind) {
        case GrowMountainOutcome::Kind::mountain:
            j["route"] = o.route;
            j["mountain"] = to_json(*o.mountain);
            break;
        case GrowMountainOutcome::Kind::hypothesis_failed:
            j["bullet"] = o.bullet;
            j["measured"] = o.measured;
            j["required"] = o.required;
            break;
        case GrowMountainOutcome::Kind::proof_step_contradiction:
            j["diagnostic"] = o.diagnostic;
            j["relaxed"] = o.relaxed;
            break;
        }
        return j;
    }
}
