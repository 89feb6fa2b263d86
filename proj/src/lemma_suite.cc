#include <tclique/bag_growth.hh>
#include <tclique/bounds.hh>
#include <tclique/canonical.hh>
#include <tclique/chain_dichotomy.hh>
#include <tclique/chains.hh>
#include <tclique/chi.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>
#include <tclique/grow_mountain.hh>
#include <tclique/lemma_suite.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

using nlohmann::json;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    namespace
    {
        using Rng = std::mt19937_64;

        struct Recorder
        {
            PropertyResult result;
            std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

            explicit Recorder(string name) { result.name = std::move(name); }

            auto check(bool ok, const string & what) -> void
            {
                if (ok)
                    return;
                ++result.violations;
                if (result.examples.size() < 5)
                    result.examples.push_back(what);
            }

            auto finish() -> PropertyResult
            {
                result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                return result;
            }
        };

        auto uniform(Rng & rng, int lo, int hi) -> int { return std::uniform_int_distribution<int>(lo, hi)(rng); }

        auto random_subset(Rng & rng, int n) -> VertexSet
        {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (rng() & 1)
                    s.set(v);
            return s;
        }

        auto tag(std::uint64_t seed, int n) -> string { return "seed " + to_string(seed) + " n " + to_string(n); }

        auto log2_floor(int m) -> int
        {
            int k = 0;
            while ((2 << k) <= m)
                ++k;
            return k;
        }

        /// Bags of random tournaments laid out in sequence; each backward pair appears with probability `back`.
        auto random_layered(Rng & rng, const vector<int> & sizes, double back) -> std::pair<Tournament, vector<VertexSet>>
        {
            int n = std::accumulate(sizes.begin(), sizes.end(), 0);
            vector<int> bag_of;
            for (size_t i = 0; i < sizes.size(); ++i)
                bag_of.insert(bag_of.end(), static_cast<size_t>(sizes[i]), static_cast<int>(i));
            vector<vector<int>> m(static_cast<size_t>(n), vector<int>(static_cast<size_t>(n), 0));
            std::bernoulli_distribution coin(0.5), rev(back);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    bool forward = bag_of[static_cast<size_t>(i)] == bag_of[static_cast<size_t>(j)] ? coin(rng) : ! rev(rng);
                    if (forward)
                        m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
                    else
                        m[static_cast<size_t>(j)][static_cast<size_t>(i)] = 1;
                }
            vector<VertexSet> bags(sizes.size(), VertexSet(n));
            for (int v = 0; v < n; ++v)
                bags[static_cast<size_t>(bag_of[static_cast<size_t>(v)])].set(v);
            return {from_matrix(n, m), bags};
        }

        /// Largest ω⃗ of a backward neighbourhood: in-neighbours among later bags, out-neighbours among earlier bags.
        auto near_chain_a(OmegaEvaluator & omega, const vector<VertexSet> & bags) -> int
        {
            const auto & t = omega.tournament();
            int a = 0, r = static_cast<int>(bags.size());
            for (int i = 0; i < r; ++i) {
                VertexSet later(t.size()), earlier(t.size());
                for (int j = i + 1; j < r; ++j)
                    later |= bags[static_cast<size_t>(j)];
                for (int j = 0; j < i; ++j)
                    earlier |= bags[static_cast<size_t>(j)];
                for (Vertex v : bags[static_cast<size_t>(i)].members())
                    a = std::max({a, omega.value(t.in(v) & later), omega.value(t.out(v) & earlier)});
            }
            return a;
        }
    }

    auto property_subadditivity(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("subadditivity");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 1, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            auto x = random_subset(rng, n);
            auto y = t.vertices() - x;
            int w = omega_value(t), wx = omega_value(t, x), wy = omega_value(t, y);
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(w <= wx + wy, tag(seed, n) + ": " + to_string(w) + " > " + to_string(wx) + " + " + to_string(wy));
        }
        return rec.finish();
    }

    auto property_omega_le_chi(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("omega_le_chi");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 0, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            int w = omega_value(t);
            auto c = chi_dir(t);
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(w <= c.value, tag(seed, n) + ": omega " + to_string(w) + " > chi " + to_string(c.value));
        }
        return rec.finish();
    }

    auto property_backedge_roundtrip(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("backedge_roundtrip");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 0, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            vector<Vertex> order(static_cast<size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            auto b = backedge_graph(t, order);
            long forward = 0;
            for (int a = 0; a < n; ++a)
                for (int c = a + 1; c < n; ++c)
                    forward += t.arc(order[static_cast<size_t>(a)], order[static_cast<size_t>(c)]) ? 1 : 0;
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(tournament_of(b) == t, tag(seed, n) + ": round trip differs");
            rec.check(b.edges.edge_count() + forward == static_cast<long>(n) * (n - 1) / 2, tag(seed, n) + ": arc count");
        }
        return rec.finish();
    }

    auto property_mountain_size(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("mountain_size");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 1, std::min(p.max_n, 9));
            auto seed = rng();
            auto t = random_tournament(n, seed);
            MountainOracle oracle(t);
            for (int m = 1; m <= 3; ++m) {
                auto cert = oracle.mountain_certificate(t.vertices(), m);
                if (! cert)
                    break;
                ++rec.result.cases;
                ++rec.result.held;
                auto report = verify_mountain(t, *cert);
                rec.check(report.ok, tag(seed, n) + ": " + to_string(m) + "-mountain fails verification");
                rec.check(cert->vertex_set.count() <= mountain_size_bound(m),
                    tag(seed, n) + ": " + to_string(m) + "-mountain has " + to_string(cert->vertex_set.count()) + " vertices");
            }
        }
        return rec.finish();
    }

    auto property_two_colouring(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("two_colouring");
        Rng rng(p.seed);
        while (rec.result.cases < p.cases) {
            int n = uniform(rng, 3, std::min(p.max_n, 9));
            auto seed = rng();
            auto t = random_tournament(n, seed);
            MountainOracle oracle(t);
            int r = uniform(rng, 1, 3);
            auto cert = oracle.mountain_certificate(t.vertices(), r);
            if (! cert)
                continue;
            vector<Colour> phi(static_cast<size_t>(n));
            for (auto & c : phi)
                c = (rng() & 1) ? Colour::red : Colour::blue;
            int a = uniform(rng, 1, r), b = r + 1 - a;
            ++rec.result.cases;
            ++rec.result.held;
            string where = tag(seed, n) + " r " + to_string(r) + " a " + to_string(a);
            try {
                auto w = two_colouring_witness(t, *cert, phi, a, b);
                bool mono = true;
                w.certificate.vertex_set.for_each([&](Vertex v) { mono = mono && phi[static_cast<size_t>(v)] == w.colour; });
                int want = w.colour == Colour::red ? a : b;
                rec.check(mono, where + ": witness not monochromatic");
                rec.check(w.certificate.order() == want, where + ": witness has the wrong order");
                rec.check(w.certificate.vertex_set.is_subset_of(cert->vertex_set), where + ": witness leaves the mountain");
                rec.check(verify_mountain(t, w.certificate).ok, where + ": witness fails verification");
            } catch (const std::exception & e) {
                rec.check(false, where + ": " + e.what());
            }
        }
        return rec.finish();
    }

    auto property_log_bound(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("log_bound");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 1, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            auto audit = log_bound_audit(t);
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(audit.ok && audit.omega >= log2_floor(audit.largest_mountain),
                tag(seed, n) + ": " + to_string(audit.largest_mountain) + "-mountain with omega " + to_string(audit.omega));
        }
        return rec.finish();
    }

    auto property_family_freeness(const PropertyParams &) -> PropertyResult
    {
        Recorder rec("family_freeness");
        auto d3 = build_D(3).tournament;
        auto a3 = build_A(3).tournament;
        auto u3 = build_U(3).tournament;
        auto fact = [&](bool ok, const string & what) {
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(ok, what);
        };
        for (int n = 3; n <= 4; ++n)
            fact(! contains_copy(build_A(n).tournament, d3), "A_" + to_string(n) + " contains D_3");
        for (int n = 1; n <= 5; ++n)
            fact(! contains_copy(build_D(n).tournament, a3), "D_" + to_string(n) + " contains A_3");
        fact(contains_copy(a3, u3).has_value(), "A_3 does not contain U_3");
        fact(is_prime(u3), "U_3 is not prime");
        fact(isomorphic(build_A(1).tournament, build_D(1).tournament), "A_1 and D_1 differ");
        fact(isomorphic(build_A(2).tournament, build_D(2).tournament), "A_2 and D_2 differ");
        return rec.finish();
    }

    auto property_zone_partition(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("zone_partition");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 2, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            int r = uniform(rng, 1, std::min(4, n));
            vector<VertexSet> bags(static_cast<size_t>(r), VertexSet(n));
            for (int v = 0; v < n; ++v) {
                int b = uniform(rng, -1, r - 1);
                if (b >= 0)
                    bags[static_cast<size_t>(b)].set(v);
            }
            int c_small = uniform(rng, 1, 2);
            OmegaEvaluator omega(t);
            auto z = assign_zones(omega, bags, c_small);
            auto again = assign_zones(omega, bags, c_small);
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(zones_partition(t, bags, z), tag(seed, n) + ": zones and bags do not partition");
            rec.check(z.zones == again.zones && z.zone_of == again.zone_of, tag(seed, n) + ": reassignment differs");
        }
        return rec.finish();
    }

    auto property_rich_vertices(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("rich_vertices");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 1, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            int b = uniform(rng, 1, 2);
            OmegaEvaluator omega(t);
            auto rich = bidirectional_rich(omega, b);
            VertexSet x(n), y(n);
            for (Vertex v = 0; v < n; ++v) {
                if (! omega.at_least(t.out(v), b))
                    x.set(v);
                if (! omega.at_least(t.in(v), b))
                    y.set(v);
            }
            int w = omega.value(t.vertices()), wr = omega.value(rich), wx = omega.value(x), wy = omega.value(y);
            long g = static_cast<long>(g45(b)->value.value);
            ++rec.result.cases;
            ++rec.result.held;
            rec.check(rich == t.vertices() - x - y, tag(seed, n) + ": rich set differs from the complement of X and Y");
            rec.check(wr >= w - wx - wy, tag(seed, n) + ": omega(B) " + to_string(wr) + " below " + to_string(w - wx - wy));
            rec.check(wx < g && wy < g, tag(seed, n) + ": poor set reaches g(b)");
        }
        return rec.finish();
    }

    auto property_chain_dichotomy(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("chain_dichotomy");
        Rng rng(p.seed);
        const int m = 2, c_small = 1;
        while (rec.result.cases < p.cases) {
            int r = uniform(rng, 2, 5);
            vector<int> sizes;
            int budget = p.max_n;
            for (int i = 0; i < r && budget > 0; ++i) {
                int s = uniform(rng, 1, std::min(3, budget));
                sizes.push_back(s);
                budget -= s;
            }
            double back = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
            auto [t, bags] = random_layered(rng, sizes, back);
            OmegaEvaluator omega(t);
            int a = near_chain_a(omega, bags);
            int c = 0;
            for (auto & bag : bags)
                c = std::max(c, omega.value(bag));
            c = std::max(c, 2 * 2 * a + c_small);
            NearBagChain q{bags, c, a};
            ++rec.result.cases;
            string where = "chain of " + to_string(bags.size()) + " bags on " + to_string(t.size()) + " vertices, a " + to_string(a);
            try {
                auto merged = merge_bags(omega, q, c);
                for (size_t l = 0; l + 1 < merged.omegas.size(); ++l)
                    rec.check(merged.omegas[l] > c && merged.omegas[l] <= 2 * c, where + ": merged bag outside (c, 2c]");
                auto res = chain_dichotomy(omega, q, m, c_small);
                if (res.kind == DichotomyResult::Kind::hypothesis_failed)
                    continue;
                ++rec.result.held;
                if (res.kind == DichotomyResult::Kind::ordering) {
                    int independent = partial_ordering_clique_number(t, res.order);
                    rec.check(independent == res.order_clique && independent < 4 * m * c, where + ": ordering clique " + to_string(independent));
                } else {
                    rec.check(verify_embedding(t, build_A(m).tournament, res.embedding), where + ": A_m embedding fails");
                }
            } catch (const std::exception & e) {
                rec.check(false, where + ": " + e.what());
            }
        }
        return rec.finish();
    }

    auto property_grow_mountain(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("grow_mountain");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 3, std::min(p.max_n, 9));
            auto seed = rng();
            auto t = random_tournament(n, seed);
            GrowMountainParams params;
            params.r = 1;
            params.s = 1;
            params.b = uniform(rng, 1, 2);
            params.c = 1;
            auto out = grow_mountain_step(t, params);
            ++rec.result.cases;
            if (out.kind == GrowMountainOutcome::Kind::hypothesis_failed)
                continue;
            ++rec.result.held;
            rec.check(out.kind == GrowMountainOutcome::Kind::mountain && out.mountain && verify_mountain(t, *out.mountain).ok,
                tag(seed, n) + ": " + out.diagnostic);
        }
        return rec.finish();
    }

    auto property_half_to_full(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("half_to_full");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            int n = uniform(rng, 2, p.max_n);
            auto seed = rng();
            auto t = random_tournament(n, seed);
            VertexSet a(n), b(n);
            for (int v = 0; v < n; ++v)
                ((rng() & 1) ? a : b).set(v);
            OmegaEvaluator omega(t);
            ++rec.result.cases;
            try {
                auto out = half_to_full_step(omega, a, b, 2, 1, uniform(rng, 1, 2), 1);
                if (out.kind == HalfToFullOutcome::Kind::hypothesis_failed)
                    continue;
                ++rec.result.held;
                bool ok = out.kind == HalfToFullOutcome::Kind::split ? omega.at_least(out.b2, 1)
                    : out.kind == HalfToFullOutcome::Kind::d_copy     ? verify_embedding(t, build_D(2).tournament, out.embedding)
                                                                      : false;
                rec.check(ok, tag(seed, n) + ": " + to_string(out.kind));
            } catch (const SizeLimitExceeded &) {
                // the hypothesis threshold itself is beyond 64 bits, so it cannot hold here
            }
        }
        return rec.finish();
    }

    auto property_zone_inequalities(const PropertyParams & p) -> PropertyResult
    {
        Recorder rec("zone_inequalities");
        Rng rng(p.seed);
        for (long i = 0; i < p.cases; ++i) {
            vector<int> sizes;
            int budget = p.max_n;
            for (int j = 0; j < 4 && budget > 0; ++j) {
                int s = uniform(rng, 1, std::min(3, budget));
                sizes.push_back(s);
                budget -= s;
            }
            auto [t, bags] = random_layered(rng, sizes, 0.15);
            OmegaEvaluator omega(t);
            int c = 0;
            for (auto & bag : bags)
                c = std::min(c == 0 ? omega.value(bag) : c, omega.value(bag));
            BagChain chain{bags, c, std::max(1, near_chain_a(omega, bags) + 1)};
            int n = 3;
            int c_small = std::max(1, chain.a);
            auto z = assign_zones(omega, bags, c_small);
            ++rec.result.cases;
            try {
                auto audit = zone_lemma_audit(omega, chain, z, n);
                if (audit.skipped)
                    continue;
                ++rec.result.held;
                rec.check(audit.ok(), "layered chain " + to_string(i) + ": " + to_string(audit.violations.size()) + " zone violations");
            } catch (const std::exception & e) {
                rec.check(false, "layered chain " + to_string(i) + ": " + e.what());
            }
        }
        return rec.finish();
    }

    auto LemmaSuiteReport::ok() const -> bool
    {
        return std::all_of(properties.begin(), properties.end(), [](const PropertyResult & r) { return r.ok(); });
    }

    auto run_lemma_suite(const LemmaSuiteOptions & options) -> LemmaSuiteReport
    {
        auto count = [&](long base) { return std::max<long>(1, std::lround(static_cast<double>(base) * options.scale)); };
        auto params = [&](long base, int salt) { return PropertyParams{options.seed * 1000003ULL + static_cast<std::uint64_t>(salt), count(base), options.max_n}; };
        LemmaSuiteReport report;
        report.properties.push_back(property_subadditivity(params(200, 1)));
        report.properties.push_back(property_omega_le_chi(params(100, 2)));
        report.properties.push_back(property_backedge_roundtrip(params(200, 3)));
        report.properties.push_back(property_mountain_size(params(40, 4)));
        report.properties.push_back(property_two_colouring(params(100, 5)));
        report.properties.push_back(property_log_bound(params(40, 6)));
        report.properties.push_back(property_family_freeness(params(1, 7)));
        report.properties.push_back(property_zone_partition(params(100, 8)));
        report.properties.push_back(property_rich_vertices(params(100, 9)));
        report.properties.push_back(property_chain_dichotomy(params(100, 10)));
        report.properties.push_back(property_grow_mountain(params(20, 11)));
        report.properties.push_back(property_half_to_full(params(50, 12)));
        report.properties.push_back(property_zone_inequalities(params(50, 13)));
        return report;
    }

    auto to_json(const PropertyResult & r) -> json
    {
        return json{{"name", r.name}, {"cases", r.cases}, {"held", r.held}, {"violations", r.violations}, {"examples", r.examples},
            {"seconds", r.seconds}, {"ok", r.ok()}};
    }

    auto to_json(const LemmaSuiteReport & r) -> json
    {
        json props = json::array();
        for (auto & p : r.properties)
            props.push_back(to_json(p));
        return json{{"schema", 1}, {"ok", r.ok()}, {"properties", props}};
    }
}
