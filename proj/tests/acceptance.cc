#include "oracles.hh"
#include "transcription.hh"

#include <tclique/bag_growth.hh>
#include <tclique/bounds.hh>
#include <tclique/canonical.hh>
#include <tclique/chain_dichotomy.hh>
#include <tclique/chi.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/grow_mountain.hh>
#include <tclique/lemma_suite.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace tclique;

namespace
{
    struct Check
    {
        std::ostringstream notes;
        bool ok = true;

        auto expect(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                ok = false;
                notes << " [failed: " << what << "]";
            }
        }
    };

    auto criterion(int number, const std::string & title, const std::function<void(Check &)> & body) -> bool
    {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            body(check);
        }
        catch (const std::exception & e) {
            check.ok = false;
            check.notes << " [exception: " << e.what() << "]";
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %d: %s (%.2fs)%s\n", check.ok ? "PASS" : "FAIL", number, title.c_str(), seconds, check.notes.str().c_str());
        std::fflush(stdout);
        return check.ok;
    }

    auto c3() -> Tournament { return from_matrix(3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}); }

    auto factorial(int n) -> long
    {
        long f = 1;
        for (int i = 2; i <= n; ++i)
            f *= i;
        return f;
    }

    auto singletons(int n) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> bags;
        for (Vertex v = 0; v < n; ++v)
            bags.push_back(VertexSet::of(n, {v}));
        return bags;
    }

    /// Cyclic blocks of three laid out forward, except that the first vertex of each later block beats the first of every earlier block.
    auto backward_blocks(int blocks) -> Tournament
    {
        int n = 3 * blocks;
        std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool backward = i / 3 == j / 3 ? j - i == 2 : i % 3 == 0 && j % 3 == 0;
                (backward ? m[static_cast<size_t>(j)][static_cast<size_t>(i)] : m[static_cast<size_t>(i)][static_cast<size_t>(j)]) = 1;
            }
        return from_matrix(n, m);
    }

    /// Clique number of the backedge graph on `order`, by bitmask brute force.
    auto order_clique_oracle(const Tournament & t, const std::vector<Vertex> & order) -> int
    {
        auto k = order.size();
        std::vector<std::uint32_t> adj(k, 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (t.arc(order[j], order[i])) {
                    adj[i] |= 1U << j;
                    adj[j] |= 1U << i;
                }
        return oracle::clique_number(adj);
    }

    auto flat_constants(long level) -> DeskConstants
    {
        DeskConstants k;
        k.g = [](long) { return 0L; };
        k.ladder = [level](long, long, int t) { return std::vector<long>(static_cast<size_t>(t), level); };
        k.threshold = [level](long, long) { return level; };
        return k;
    }

    auto property_line(const PropertyResult & r) -> std::string
    {
        std::ostringstream s;
        s << r.name << " cases=" << r.cases << " held=" << r.held << " violations=" << r.violations;
        if (r.held == 0)
            s << " (vacuous: hypotheses never held)";
        return s.str();
    }

    auto run_property(Check & check, const PropertyResult & r) -> void
    {
        check.notes << " " << r.name << ": " << r.cases << " cases, " << r.violations << " violations;";
        check.expect(r.ok(), r.name + (r.examples.empty() ? std::string() : ": " + r.examples.front()));
    }
}

auto main() -> int
{
    bool all = true;

    all &= criterion(1, "family sizes", [](Check & check) {
        for (int n = 1; n <= max_D_index; ++n)
            check.expect(build_D(n).tournament.size() == (1 << n) - 1, "|D_" + std::to_string(n) + "|");
        for (int n = 1; n <= max_A_index; ++n) {
            auto size = build_A(n).tournament.size();
            check.expect(size == size_A(n), "|A_" + std::to_string(n) + "| = size_A");
            check.expect(size <= 2 * factorial(n), "|A_" + std::to_string(n) + "| <= 2 n!");
        }
    });

    all &= criterion(2, "freeness facts", [](Check & check) {
        auto d3 = build_D(3).tournament, a3 = build_A(3).tournament;
        for (int n : {3, 4})
            check.expect(! contains_copy(build_A(n).tournament, d3).has_value(), "A_" + std::to_string(n) + " is D_3-free");
        for (int n = 1; n <= 5; ++n)
            check.expect(! contains_copy(build_D(n).tournament, a3).has_value(), "D_" + std::to_string(n) + " is A_3-free");
        auto u3 = build_U(3).tournament;
        auto copy = contains_copy(a3, u3);
        check.expect(copy.has_value() && verify_embedding(a3, u3, *copy), "A_3 contains U_3");
        check.expect(is_prime(u3), "U_3 prime");
    });

    all &= criterion(3, "small-index identities", [](Check & check) {
        check.expect(canonical_code(build_A(1).tournament) == canonical_code(build_D(1).tournament), "A_1 = D_1");
        check.expect(canonical_code(build_A(2).tournament) == canonical_code(build_D(2).tournament), "A_2 = D_2");
        check.expect(canonical_code(build_D(2).tournament) == canonical_code(c3()), "D_2 = C_3");
    });

    all &= criterion(4, "solver ground truth", [](Check & check) {
        long classes = 0, random_cases = 0;
        auto compare = [&](const Tournament & t, const std::string & label) {
            int omega = omega_value(t), chi = chi_dir(t).value;
            check.expect(omega == oracle::omega_by_permutations(t), "omega " + label);
            check.expect(chi == oracle::chi_by_colourings(t), "chi " + label);
        };
        for (int n = 0; n <= 6; ++n) {
            std::set<std::string> seen;
            std::uint64_t codes = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t code = 0; code < codes; ++code) {
                auto t = oracle::tournament_from_bits(n, code);
                if (! seen.insert(canonical_code(t)).second)
                    continue;
                compare(t, "n=" + std::to_string(n) + " code=" + std::to_string(code));
                ++classes;
            }
        }
        for (int n : {7, 8})
            for (std::uint64_t seed = 0; seed < 200; ++seed, ++random_cases)
                compare(random_tournament(n, seed), "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
        check.expect(chi_dir(c3()).value == 2, "chi(C_3) = 2");
        check.expect(omega_value(c3()) == 2, "omega(C_3) = 2");
        for (int n = 1; n <= 8; ++n)
            check.expect(omega_value(transitive_tournament(n)) == 1, "omega(transitive)");
        check.notes << " " << classes << " isomorphism classes n<=6, " << random_cases << " random n in {7,8}";
    });

    all &= criterion(5, "small-case chromatic values", [](Check & check) {
        int a3 = chi_dir(build_A(3).tournament).value;
        check.expect(a3 == 3, "chi(A_3) = 3");
        check.notes << " chi(A_3)=" << a3;
        for (int n : {3, 4}) {
            ChiOptions o;
            o.exact_limit = 20;
            auto r = chi_dir(build_D(n).tournament, o);
            check.expect(r.status == SolveStatus::exact && r.value >= n, "chi(D_" + std::to_string(n) + ") >= n");
            check.notes << " chi(D_" << n << ")=" << r.value;
        }
        for (int n = 1; n <= 4; ++n) {
            auto r = chi_dir(build_U(n).tournament);
            check.expect(r.upper <= 2, "chi(U_" + std::to_string(n) + ") <= 2");
        }
    });

    all &= criterion(6, "subadditivity", [](Check & check) {
        run_property(check, property_subadditivity({.seed = 6, .cases = 1000, .max_n = 10}));
    });

    all &= criterion(7, "mountain suite", [](Check & check) {
        run_property(check, property_mountain_size({.seed = 7, .cases = 200, .max_n = 10}));
        run_property(check, property_two_colouring({.seed = 7, .cases = 500, .max_n = 10}));
        run_property(check, property_log_bound({.seed = 7, .cases = 200, .max_n = 10}));
    });

    all &= criterion(8, "chain suite", [](Check & check) {
        run_property(check, property_zone_partition({.seed = 8, .cases = 200, .max_n = 10}));
        run_property(check, property_chain_dichotomy({.seed = 8, .cases = 100, .max_n = 10}));

        // constructed m = 2 instances: forward chains give orderings, the backward clique gives A_2
        int m = 2, instances = 0;
        for (int n = 2; n <= 10; ++n)
            for (int width = 1; width <= 3; ++width) {
                auto t = transitive_tournament(n);
                std::vector<VertexSet> bags;
                for (Vertex v = 0; v < n; v += width) {
                    VertexSet bag(n);
                    for (Vertex u = v; u < std::min(n, v + width); ++u)
                        bag.set(u);
                    bags.push_back(bag);
                }
                auto r = chain_dichotomy(t, NearBagChain{bags, 1, 0}, m, 1);
                ++instances;
                bool ordering = r.kind == DichotomyResult::Kind::ordering;
                check.expect(ordering, "forward chain n=" + std::to_string(n));
                if (ordering) {
                    int independent = order_clique_oracle(t, r.order);
                    check.expect(independent == r.order_clique && independent < 4 * m * 1, "ordering clique n=" + std::to_string(n));
                }
            }
        for (int blocks = 2; blocks <= 3; ++blocks) {
            auto t = backward_blocks(blocks);
            DichotomyOptions o;
            o.relaxed = true;
            auto r = chain_dichotomy(t, NearBagChain{singletons(t.size()), 1, 1}, m, 1, o);
            ++instances;
            bool verified = r.kind == DichotomyResult::Kind::embedding && r.verified
                && verify_embedding(t, build_A(m).tournament, r.embedding);
            bool ordered = r.kind == DichotomyResult::Kind::ordering && order_clique_oracle(t, r.order) < 4 * m;
            check.expect(verified || ordered, "backward blocks " + std::to_string(blocks));
        }
        {
            auto t = backward_blocks(4);
            DichotomyOptions o;
            o.relaxed = true;
            auto r = chain_dichotomy(t, NearBagChain{singletons(12), 1, 1}, m, 1, o);
            ++instances;
            check.expect(r.kind == DichotomyResult::Kind::embedding && verify_embedding(t, build_A(m).tournament, r.embedding),
                "backward blocks 4 embeds A_2");
        }
        check.notes << " " << instances << " constructed instances";
    });

    all &= criterion(9, "bounds pipeline", [](Check & check) {
        auto f1 = f_main(1);
        check.expect(f1->value.is_exact() && f1->value.value == 0, "f(1) = 0");
        auto f2 = f_main(2);
        check.expect(f2->value.value == transcription::f(2), "f(2) matches transcription");
        check.expect(ramsey_upper(3, 3)->value.value == 6, "R(3,3) = 6");
        check.expect(! oracle::ramsey_holds(5, 3, 3) && oracle::ramsey_holds(6, 3, 3), "R(3,3) brute force");
        for (auto e : {f1, f2, ramsey_upper(3, 3), g45(1), g45(4), q_of(2, 2, 1), f_main(3)})
            check.expect(trace_consistent(e), "trace re-evaluates");
        check.notes << " f(2) has " << f2->value.log10_floor() + 1 << " digits, trace nodes " << trace_size(f2);
    });

    all &= criterion(10, "lemma audits at n <= 10", [](Check & check) {
        auto report = run_lemma_suite({.seed = 10, .max_n = 10, .scale = 1.0});
        for (auto & p : report.properties) {
            std::printf("  %s\n", property_line(p).c_str());
            check.expect(p.ok(), p.name + (p.examples.empty() ? std::string() : ": " + p.examples.front()));
        }

        // proof steps under desk-scale constants, where their branches are reachable
        {
            int mountains = 0;
            for (int n = 3; n <= 7; ++n) {
                std::set<std::string> seen;
                for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
                    auto t = oracle::tournament_from_bits(n, code);
                    if (! seen.insert(canonical_code(t)).second)
                        continue;
                    GrowMountainParams p;
                    p.threshold_override = 2;
                    auto out = grow_mountain_step(t, p);
                    if (out.kind == GrowMountainOutcome::Kind::proof_step_contradiction)
                        check.expect(out.relaxed, "grow_mountain contradiction on a step the overrides do not touch");
                    if (out.kind != GrowMountainOutcome::Kind::mountain)
                        continue;
                    check.expect(out.mountain && verify_mountain(t, *out.mountain).ok, "grown mountain verifies");
                    ++mountains;
                }
            }
            check.expect(mountains > 0, "grow_mountain reached its mountain branch");
            std::printf("  desk grow_mountain: %d verified mountains\n", mountains);
        }
        {
            auto t = from_matrix(4, {{0, 1, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}});
            OmegaEvaluator omega(t);
            HalfToFullOptions o;
            o.constants.g = [](long) { return 0L; };
            auto r = half_to_full_step(omega, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3}), 2, 1, 2, 1, o);
            check.expect(r.kind == HalfToFullOutcome::Kind::d_copy && verify_embedding(t, build_D(2).tournament, r.embedding),
                "half_to_full pivot copy");
            std::printf("  desk half_to_full: %s\n", r.kind == HalfToFullOutcome::Kind::d_copy ? "D_2 copy verified" : "no copy");
        }
        {
            auto t = build_D(3).tournament;
            OmegaEvaluator omega(t);
            auto r = double_bag(omega, t.vertices(), 2, 1, 1, flat_constants(1));
            check.expect(r.kind == DoublingOutcome::Kind::d_copy && verify_embedding(t, build_D(2).tournament, r.embedding), "doubling copy");
        }
        {
            auto t = transitive_tournament(64);
            OmegaOptions wide;
            wide.exact_limit = 64;
            OmegaEvaluator omega(t, EvaluatorMode::exact, wide);
            auto r = build_chain_length8(omega, 2, 1, 1, flat_constants(1));
            check.expect(r.kind == Chain8Outcome::Kind::chain && r.chain.bags.size() == 8 && verify_bag_chain(omega, r.chain).ok,
                "8-chain verifies");
            std::printf("  desk 8-chain: %s\n", r.kind == Chain8Outcome::Kind::chain ? "8 bags verified" : r.diagnostic.c_str());
        }
        check.notes << " true-scale theorem not reproducible; audited at n <= 10";
    });

    return all ? 0 : 1;
}
