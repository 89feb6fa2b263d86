#include <tclique/bag_growth.hh>
#include <tclique/bounds.hh>
#include <tclique/certificates.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>

#include <algorithm>
#include <limits>
#include <stdexcept>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    namespace
    {
        auto checked_add(long a, long b) -> optional<long>
        {
            long r;
            if (__builtin_add_overflow(a, b, &r))
                return std::nullopt;
            return r;
        }

        auto checked_mul(long a, long b) -> optional<long>
        {
            long r;
            if (__builtin_mul_overflow(a, b, &r))
                return std::nullopt;
            return r;
        }

        auto digits_of(const BoundValue & v) -> string
        {
            string s = v.to_string();
            if (s.size() > 60)
                s = s.substr(0, 30) + "..." + s.substr(s.size() - 10) + " (" + to_string(s.size()) + " chars)";
            return s;
        }

        [[noreturn]] auto overflow(const string & what, const BoundExpr & exact) -> void
        {
            throw SizeLimitExceeded("constant overflow: " + what + " = " + digits_of(exact->value));
        }

        auto as_long(const BoundExpr & e, const string & what) -> long
        {
            if (e->value.is_exact() && e->value.value <= std::numeric_limits<long>::max())
                return static_cast<long>(e->value.value);
            overflow(what, e);
        }

        auto d_size(int n) -> long { return (1L << n) - 1; }
    }

    auto DeskConstants::g_of(long x) const -> long
    {
        if (g)
            return g(x);
        return as_long(g45(x), "g(" + to_string(x) + ")");
    }

    auto DeskConstants::ladder_of(long c_target, long c, int n) const -> vector<long>
    {
        int t = static_cast<int>(d_size(n));
        if (ladder)
            return ladder(c_target, c, t);
        if (! g) {
            BoundFunction f = [&](const BoundExpr & x) { return add(constant(c_target), g45(mul(constant(1L << (n - 1)), x))); };
            auto l = c_ladder_2a(constant(c), t, f);
            vector<long> out;
            for (int i = 0; i < t; ++i)
                out.push_back(as_long(l.entries[static_cast<size_t>(i)], "c_" + to_string(i + 1)));
            return out;
        }
        vector<long> out(static_cast<size_t>(t));
        out[static_cast<size_t>(t - 1)] = c;
        for (int i = t - 1; i >= 1; --i) {
            long next = out[static_cast<size_t>(i)];
            auto inner = checked_mul(1L << (n - 1), next);
            optional<long> fx = inner ? checked_add(c_target, g_of(*inner)) : std::nullopt;
            optional<long> scaled = (fx && i + 1 < 62) ? checked_mul(1L << (i + 1), *fx) : std::nullopt;
            optional<long> twice = checked_mul(2, g_of(next));
            optional<long> v = (scaled && twice) ? checked_add(*twice, *scaled) : std::nullopt;
            if (! v)
                throw SizeLimitExceeded("constant overflow: c_" + to_string(i) + " exceeds 64-bit range under the supplied g");
            out[static_cast<size_t>(i - 1)] = *v;
        }
        return out;
    }

    auto DeskConstants::threshold_of(long c_target, long c, int n) const -> long
    {
        if (threshold)
            return threshold(c_target, c);
        if (! g && ! ladder)
            return as_long(C54(constant(c_target), constant(c), n), "C(" + to_string(c_target) + ", " + to_string(c) + ")");
        long c1 = ladder_of(c_target, c, n).front();
        auto twice = checked_mul(2, g_of(c1));
        auto v = twice ? checked_add(*twice, 2) : std::nullopt;
        if (! v)
            throw SizeLimitExceeded("constant overflow: doubling threshold exceeds 64-bit range");
        return *v;
    }

    namespace
    {
        struct AtomSearch
        {
            OmegaEvaluator & omega;
            const Tournament & t;
            const Tournament & q;
            long threshold = 0;
            int k = 0;
            long budget = -1;
            long nodes = 0;
            vector<Vertex> chosen;
            bool found = false;
            int best_score = -1;
            vector<Vertex> best;
            vector<VertexSet> best_atoms;

            auto target_pattern(int depth) const -> int
            {
                int b = 0;
                for (int j = 0; j < depth; ++j)
                    if (q.arc(depth, j))
                        b |= 1 << j;
                return b;
            }

            auto run(const vector<VertexSet> & atoms) -> void
            {
                int depth = static_cast<int>(chosen.size());
                if (depth == k) {
                    int score = std::numeric_limits<int>::max();
                    for (auto & a : atoms)
                        score = std::min(score, a.count());
                    if (! found || score > best_score) {
                        found = true;
                        best_score = score;
                        best = chosen;
                        best_atoms = atoms;
                    }
                    return;
                }
                auto candidates = atoms[static_cast<size_t>(target_pattern(depth))];
                for (Vertex v : candidates.members()) {
                    if (++nodes > budget && budget >= 0)
                        throw BudgetExceeded("grow_copy_atoms: node budget exhausted");
                    vector<VertexSet> next(atoms.size() * 2, VertexSet(t.size()));
                    bool ok = true;
                    for (size_t b = 0; b < atoms.size() && ok; ++b) {
                        auto base = atoms[b];
                        base.reset(v);
                        next[b] = base & t.out(v);
                        next[b | (size_t{1} << depth)] = base & t.in(v);
                        ok = omega.at_least(next[b], static_cast<int>(threshold))
                            && omega.at_least(next[b | (size_t{1} << depth)], static_cast<int>(threshold));
                    }
                    if (! ok)
                        continue;
                    chosen.push_back(v);
                    run(next);
                    chosen.pop_back();
                }
            }
        };
    }

    auto grow_copy_atoms(OmegaEvaluator & omega, const VertexSet & within, const Tournament & q, const vector<long> & thresholds, long budget)
        -> AtomGrowth
    {
        int t = q.size();
        if (static_cast<int>(thresholds.size()) != t)
            throw InvalidInput("grow_copy_atoms: need one threshold per pattern vertex");
        if (t > 20)
            throw SizeLimitExceeded("grow_copy_atoms: pattern too large for atom enumeration");
        AtomGrowth result;
        for (int k = t; k >= 1; --k) {
            AtomSearch search{omega, omega.tournament(), q, thresholds[static_cast<size_t>(k - 1)], k, budget, 0, {}, false, -1, {}, {}};
            search.nodes = result.nodes;
            search.run({within});
            result.nodes = search.nodes;
            if (search.found) {
                result.k = k;
                result.vertices = search.best;
                result.atoms = search.best_atoms;
                return result;
            }
        }
        result.atoms = {within};
        return result;
    }

    auto to_string(HalfToFullOutcome::Kind k) -> string
    {
        switch (k) {
        case HalfToFullOutcome::Kind::d_copy: return "d_copy";
        case HalfToFullOutcome::Kind::split: return "split";
        case HalfToFullOutcome::Kind::hypothesis_failed: return "hypothesis_failed";
        case HalfToFullOutcome::Kind::proof_step_contradiction: return "proof_step_contradiction";
        }
        return "?";
    }

    auto to_string(DoublingOutcome::Kind k) -> string
    {
        switch (k) {
        case DoublingOutcome::Kind::chain: return "chain";
        case DoublingOutcome::Kind::d_copy: return "d_copy";
        case DoublingOutcome::Kind::below_threshold: return "below_threshold";
        case DoublingOutcome::Kind::inconclusive: return "inconclusive";
        }
        return "?";
    }

    auto to_string(Chain8Outcome::Kind k) -> string
    {
        switch (k) {
        case Chain8Outcome::Kind::chain: return "chain";
        case Chain8Outcome::Kind::d_copy: return "d_copy";
        case Chain8Outcome::Kind::below_threshold: return "below_threshold";
        case Chain8Outcome::Kind::inconclusive: return "inconclusive";
        case Chain8Outcome::Kind::constant_overflow: return "constant_overflow";
        }
        return "?";
    }

    namespace
    {
        auto hyp_failed(HalfToFullOutcome o, int bullet, string measured, string required, string why) -> HalfToFullOutcome
        {
            o.kind = HalfToFullOutcome::Kind::hypothesis_failed;
            o.bullet = bullet;
            o.measured = std::move(measured);
            o.required = std::move(required);
            o.diagnostic = std::move(why);
            return o;
        }
    }

    auto half_to_full_step(OmegaEvaluator & omega, const VertexSet & a, const VertexSet & b, int n, int c, int c_small, int c_large,
        const HalfToFullOptions & options) -> HalfToFullOutcome
    {
        const auto & t = omega.tournament();
        if (n < 2 || n > max_D_index)
            throw InvalidInput("half_to_full_step: n must be in 2.." + to_string(max_D_index));
        if (a.intersects(b))
            throw InvalidInput("half_to_full_step: A and B overlap");
        bool sw = options.swapped;
        auto n_in = [&](Vertex v) -> const VertexSet & { return sw ? t.out(v) : t.in(v); };
        auto n_out = [&](Vertex v) -> const VertexSet & { return sw ? t.in(v) : t.out(v); };
        auto in_union = [&](const VertexSet & s) { return sw ? t.out_of(s) : t.in_of(s); };
        long d_prev = d_size(n - 1);

        HalfToFullOutcome o;
        o.b2 = o.c_set = o.d_alpha = o.d_beta = t.empty_set();
        if (c_small < c)
            return hyp_failed(o, 5, "c_small = " + to_string(c_small), "c_small >= c = " + to_string(c), "c_small below c");
        int wa = omega.value(a);
        if (wa < c_large)
            return hyp_failed(o, 1, "omega(A) = " + to_string(wa), ">= " + to_string(c_large), "A too small");
        auto scaled = checked_mul(1 + d_prev, c_small);
        auto need_b = scaled ? checked_add(c_large, options.constants.g_of(*scaled)) : std::nullopt;
        if (! need_b)
            throw SizeLimitExceeded("constant overflow: c_large + g((1 + |V(D_{n-1})|) c_small)");
        int wb = omega.value(b);
        if (wb < *need_b)
            return hyp_failed(o, 2, "omega(B) = " + to_string(wb), ">= " + to_string(*need_b), "B too small");
        for (Vertex v : a.members()) {
            int w = omega.value(n_in(v) & b);
            if (w >= c_small)
                return hyp_failed(o, 3, "omega(N(" + to_string(v) + ") & B) = " + to_string(w), "< " + to_string(c_small),
                    string(sw ? "out" : "in") + "-neighbourhood of a vertex of A is rich in B");
        }
        auto d_prev_t = build_D(n - 1).tournament;
        auto ab = a | b;
        if (n - 1 > 1 || c < 1) {
            if (ab.count() <= options.subset_check_limit) {
                if (auto bad = pattern_hypothesis_violation(omega, ab, c, d_prev_t, options.subset_check_limit))
                    return hyp_failed(o, 4, "subset " + bad->to_string() + " has omega >= " + to_string(c) + " without D_" + to_string(n - 1),
                        "every subset with omega >= c contains D_{n-1}", "D_{n-1} hypothesis fails");
            } else
                o.d_hypothesis_assumed = true;
        }

        VertexSet cset = t.empty_set();
        for (Vertex v : b.members())
            if (omega.at_least(n_out(v) & a, c))
                cset.set(v);
        o.c_set = cset;
        if (omega.at_least(b - cset, c_large)) {
            o.kind = HalfToFullOutcome::Kind::split;
            o.b2 = b - cset;
            return o;
        }

        long need_pivot = *scaled;
        auto attempt = [&](Vertex p) -> bool {
            auto alpha = least_embedding(t, n_out(p) & a, d_prev_t);
            if (! alpha)
                return false;
            auto d_alpha = VertexSet::of(t.size(), *alpha);
            auto rest = (n_in(p) & cset) - in_union(d_alpha);
            auto beta = least_embedding(t, rest, d_prev_t);
            if (! beta)
                return false;
            o.pivot = p;
            o.d_alpha = d_alpha;
            o.d_beta = VertexSet::of(t.size(), *beta);
            auto all = o.d_alpha | o.d_beta;
            all.set(p);
            auto map = least_embedding(t, all, build_D(n).tournament);
            if (! map)
                throw std::logic_error("half_to_full_step: assembled set is not a copy of D_n");
            o.embedding = *map;
            o.kind = HalfToFullOutcome::Kind::d_copy;
            return true;
        };

        optional<Vertex> pivot;
        for (Vertex p : cset.members())
            if (omega.at_least(n_in(p) & cset, static_cast<int>(need_pivot))) {
                pivot = p;
                break;
            }
        if (pivot) {
            auto alpha = least_embedding(t, n_out(*pivot) & a, d_prev_t);
            if (! alpha && ! options.constants.overridden())
                return hyp_failed(o, 4, "N(" + to_string(*pivot) + ") & A has omega >= " + to_string(c) + " but no D_" + to_string(n - 1),
                    "every subset with omega >= c contains D_{n-1}", "D_{n-1} hypothesis fails at the pivot");
            if (attempt(*pivot))
                return o;
        }
        if (! options.constants.overridden()) {
            o.kind = HalfToFullOutcome::Kind::proof_step_contradiction;
            o.measured = pivot ? "no D_{n-1} outside the in-neighbours of D_alpha" : "omega(C) = " + to_string(omega.value(cset));
            o.required = pivot ? ">= c_small left after removing N(D_alpha)" : "a pivot with omega(N(p) & C) >= " + to_string(need_pivot);
            o.diagnostic = "the pivot step failed although the hypotheses hold";
            return o;
        }
        vector<std::pair<int, Vertex>> ranked;
        for (Vertex p : cset.members())
            ranked.emplace_back(-omega.value(n_in(p) & cset), p);
        std::sort(ranked.begin(), ranked.end());
        o.relaxed = true;
        for (auto [_, p] : ranked)
            if ((! pivot || p != *pivot) && attempt(p))
                return o;
        o.kind = HalfToFullOutcome::Kind::proof_step_contradiction;
        o.measured = "omega(B \\ C) = " + to_string(omega.value(b - cset));
        o.required = ">= " + to_string(c_large) + " or a pivot yielding D_n";
        o.diagnostic = "overridden constants too small for the pivot step";
        return o;
    }

    namespace
    {
        auto trim_to(OmegaEvaluator & omega, VertexSet s, int target) -> VertexSet
        {
            while (omega.value(s) > target) {
                auto m = s.members();
                s.reset(m.back());
            }
            return s;
        }

        auto embedding_from(const AtomGrowth & growth, const Tournament & q) -> optional<Embedding>
        {
            int t = q.size();
            Embedding e = growth.vertices;
            if (growth.k == t)
                return e;
            int b = 0;
            for (int j = 0; j < t - 1; ++j)
                if (q.arc(t - 1, j))
                    b |= 1 << j;
            const auto & atom = growth.atoms[static_cast<size_t>(b)];
            if (atom.empty())
                return std::nullopt;
            e.push_back(atom.first());
            return e;
        }
    }

    auto double_bag(OmegaEvaluator & omega, const VertexSet & y, int n, int c, int c_target, const DeskConstants & constants)
        -> DoublingOutcome
    {
        const auto & t = omega.tournament();
        DoublingOutcome out;
        out.first = out.second = t.empty_set();
        out.relaxed = constants.overridden();
        out.threshold = constants.threshold_of(c_target, c, n);
        if (! omega.at_least(y, static_cast<int>(std::min<long>(out.threshold, std::numeric_limits<int>::max())))) {
            out.kind = DoublingOutcome::Kind::below_threshold;
            out.diagnostic = "omega = " + to_string(omega.value(y)) + " < " + to_string(out.threshold);
            return out;
        }
        auto d = build_D(n).tournament;
        int tq = d.size();
        auto ladder = constants.ladder_of(c_target, c, n);
        auto growth = grow_copy_atoms(omega, y, d, ladder);
        if (growth.k == 0) {
            out.kind = DoublingOutcome::Kind::inconclusive;
            out.diagnostic = "no vertex with both atoms above c_1 = " + to_string(ladder.front());
            return out;
        }
        if (growth.k >= tq - 1) {
            if (auto e = embedding_from(growth, d)) {
                if (! verify_embedding(t, d, *e))
                    throw std::logic_error("double_bag: grown copy fails verification");
                out.kind = DoublingOutcome::Kind::d_copy;
                out.embedding = *e;
                return out;
            }
            if (growth.k == tq) {
                out.kind = DoublingOutcome::Kind::inconclusive;
                return out;
            }
        }

        int k = growth.k;
        long x = ladder[static_cast<size_t>(k)];
        int bstar = 0;
        for (int j = 0; j < k; ++j)
            if (d.arc(k, j))
                bstar |= 1 << j;
        const auto & xstar = growth.atoms[static_cast<size_t>(bstar)];
        VertexSet bset = t.empty_set();
        for (Vertex v : xstar.members())
            if (omega.at_least(t.out(v) & xstar, static_cast<int>(x)) && omega.at_least(t.in(v) & xstar, static_cast<int>(x)))
                bset.set(v);

        // classes[s][b]: s = 0 for in-neighbourhoods, 1 for out-neighbourhoods
        int atoms = 1 << k;
        vector<vector<VertexSet>> classes(2, vector<VertexSet>(static_cast<size_t>(atoms), t.empty_set()));
        for (Vertex v : bset.members()) {
            bool placed = false;
            for (int s = 0; s < 2 && ! placed; ++s)
                for (int b = 0; b < atoms && ! placed; ++b) {
                    const auto & nb = s == 0 ? t.in(v) : t.out(v);
                    if (! omega.at_least(growth.atoms[static_cast<size_t>(b)] & nb, static_cast<int>(x))) {
                        classes[static_cast<size_t>(s)][static_cast<size_t>(b)].set(v);
                        placed = true;
                    }
                }
            if (! placed) {
                out.kind = DoublingOutcome::Kind::inconclusive;
                out.diagnostic = "vertex " + to_string(v) + " extends the atom growth beyond k = " + to_string(k);
                return out;
            }
        }
        int best_s = 0, best_b = 0, best_w = -1;
        for (int s = 0; s < 2; ++s)
            for (int b = 0; b < atoms; ++b) {
                int w = omega.value(classes[static_cast<size_t>(s)][static_cast<size_t>(b)]);
                if (w > best_w) {
                    best_w = w;
                    best_s = s;
                    best_b = b;
                }
            }
        auto a_side = classes[static_cast<size_t>(best_s)][static_cast<size_t>(best_b)];
        auto b_side = growth.atoms[static_cast<size_t>(best_b)];

        HalfToFullOptions first{constants, best_s == 1};
        HalfToFullOptions second{constants, best_s == 0};
        auto fail = [&](const HalfToFullOutcome & h, const string & stage) {
            if (h.kind == HalfToFullOutcome::Kind::d_copy) {
                out.kind = DoublingOutcome::Kind::d_copy;
                out.embedding = h.embedding;
            } else {
                out.kind = DoublingOutcome::Kind::inconclusive;
                out.diagnostic = stage + ": " + to_string(h.kind) + (h.bullet ? " (bullet " + to_string(h.bullet) + ")" : "") + " " + h.measured + " "
                    + h.required;
            }
            out.relaxed = out.relaxed || h.relaxed;
            return out;
        };
        auto h1 = half_to_full_step(omega, a_side, b_side, n, c, static_cast<int>(x), c_target, first);
        if (h1.kind != HalfToFullOutcome::Kind::split)
            return fail(h1, "first split");
        auto h2 = half_to_full_step(omega, h1.b2, a_side, n, c, static_cast<int>(x), c_target, second);
        if (h2.kind != HalfToFullOutcome::Kind::split)
            return fail(h2, "second split");
        auto b2 = trim_to(omega, h1.b2, c_target);
        auto b1 = trim_to(omega, h2.b2, c_target);
        out.kind = DoublingOutcome::Kind::chain;
        if (best_s == 0) {
            out.first = b1;
            out.second = b2;
        } else {
            out.first = b2;
            out.second = b1;
        }
        return out;
    }

    auto build_chain_length8(OmegaEvaluator & omega, int n, int c, int c_large, const DeskConstants & constants) -> Chain8Outcome
    {
        const auto & t = omega.tournament();
        Chain8Outcome out;
        try {
            out.level_targets = {c_large};
            for (int i = 1; i <= 3; ++i)
                out.level_targets.push_back(constants.threshold_of(out.level_targets.back(), c, n));
        } catch (const SizeLimitExceeded & e) {
            out.kind = Chain8Outcome::Kind::constant_overflow;
            out.diagnostic = e.what();
            return out;
        }
        vector<VertexSet> bags = {t.vertices()};
        for (int level = 2; level >= 0; --level) {
            vector<VertexSet> next;
            for (const auto & y : bags) {
                DoublingOutcome d;
                try {
                    d = double_bag(omega, y, n, c, static_cast<int>(out.level_targets[static_cast<size_t>(level)]), constants);
                } catch (const SizeLimitExceeded & e) {
                    if (string(e.what()).rfind("constant overflow", 0) != 0)
                        throw;
                    out.kind = Chain8Outcome::Kind::constant_overflow;
                    out.diagnostic = e.what();
                    return out;
                }
                switch (d.kind) {
                case DoublingOutcome::Kind::chain:
                    next.push_back(d.first);
                    next.push_back(d.second);
                    continue;
                case DoublingOutcome::Kind::d_copy:
                    out.kind = Chain8Outcome::Kind::d_copy;
                    out.embedding = d.embedding;
                    return out;
                case DoublingOutcome::Kind::below_threshold:
                    out.kind = Chain8Outcome::Kind::below_threshold;
                    break;
                case DoublingOutcome::Kind::inconclusive:
                    out.kind = Chain8Outcome::Kind::inconclusive;
                    break;
                }
                out.diagnostic = "level " + to_string(3 - level) + " bag " + y.to_string() + ": " + d.diagnostic;
                return out;
            }
            bags = std::move(next);
        }
        out.chain = BagChain{bags, c_large, c};
        out.report = verify_bag_chain(omega, out.chain);
        if (! out.report.ok)
            throw std::logic_error("build_chain_length8: assembled chain fails verification");
        out.kind = Chain8Outcome::Kind::chain;
        return out;
    }

    auto to_json(const HalfToFullOutcome & o) -> json
    {
        json j{{"kind", to_string(o.kind)}, {"relaxed", o.relaxed}, {"d_hypothesis_assumed", o.d_hypothesis_assumed}};
        switch (o.kind) {
        case HalfToFullOutcome::Kind::d_copy:
            j["embedding"] = o.embedding;
            j["pivot"] = o.pivot;
            j["d_alpha"] = set_to_json(o.d_alpha);
            j["d_beta"] = set_to_json(o.d_beta);
            break;
        case HalfToFullOutcome::Kind::split:
            j["b2"] = set_to_json(o.b2);
            j["c_set"] = set_to_json(o.c_set);
            break;
        default:
            if (o.bullet)
                j["bullet"] = o.bullet;
            j["measured"] = o.measured;
            j["required"] = o.required;
            j["diagnostic"] = o.diagnostic;
        }
        return j;
    }

    auto to_json(const DoublingOutcome & o) -> json
    {
        json j{{"kind", to_string(o.kind)}, {"threshold", o.threshold}, {"relaxed", o.relaxed}};
        if (o.kind == DoublingOutcome::Kind::chain)
            j["bags"] = bags_to_json({o.first, o.second});
        if (o.kind == DoublingOutcome::Kind::d_copy)
            j["embedding"] = o.embedding;
        if (! o.diagnostic.empty())
            j["diagnostic"] = o.diagnostic;
        return j;
    }

    auto to_json(const Chain8Outcome & o) -> json
    {
        json j{{"kind", to_string(o.kind)}, {"level_targets", o.level_targets}};
        if (o.kind == Chain8Outcome::Kind::chain) {
            j["bags"] = bags_to_json(o.chain.bags);
            j["c"] = o.chain.c;
            j["a"] = o.chain.a;
            j["report"] = to_json(o.report);
        }
        if (o.kind == Chain8Outcome::Kind::d_copy)
            j["embedding"] = o.embedding;
        if (! o.diagnostic.empty())
            j["diagnostic"] = o.diagnostic;
        return j;
    }
}
