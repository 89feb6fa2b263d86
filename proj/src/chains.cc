#include <tclique/chains.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>

#include <bit>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    auto check_disjoint(const vector<VertexSet> & bags) -> void
    {
        for (size_t i = 0; i < bags.size(); ++i)
            for (size_t j = i + 1; j < bags.size(); ++j)
                if (bags[i].intersects(bags[j]))
                    throw InvalidInput("bags " + to_string(i + 1) + " and " + to_string(j + 1) + " overlap");
    }

    auto union_of(int n, const vector<VertexSet> & bags) -> VertexSet
    {
        VertexSet u(n);
        for (auto & b : bags)
            u |= b;
        return u;
    }

    namespace
    {
        auto suffix_unions(int n, const vector<VertexSet> & bags) -> vector<VertexSet>
        {
            // suffix[i] = union of bags i..end
            vector<VertexSet> suffix(bags.size() + 1, VertexSet(n));
            for (size_t i = bags.size(); i-- > 0;)
                suffix[i] = suffix[i + 1] | bags[i];
            return suffix;
        }

        auto prefix_unions(int n, const vector<VertexSet> & bags) -> vector<VertexSet>
        {
            // prefix[i] = union of bags 0..i-1
            vector<VertexSet> prefix(bags.size() + 1, VertexSet(n));
            for (size_t i = 0; i < bags.size(); ++i)
                prefix[i + 1] = prefix[i] | bags[i];
            return prefix;
        }
    }

    auto verify_bag_chain(OmegaEvaluator & omega, const BagChain & chain) -> ChainReport
    {
        const auto & t = omega.tournament();
        check_disjoint(chain.bags);
        ChainReport report;
        report.evaluator = to_string(omega.mode());
        int len = static_cast<int>(chain.bags.size());
        for (int i = 0; i < len; ++i) {
            ++report.checks;
            int w = omega.value(chain.bags[static_cast<size_t>(i)]);
            if (w != chain.c)
                report.violations.push_back({"bag_level", i + 1, 0, -1, w, chain.c});
        }
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                const auto & bi = chain.bags[static_cast<size_t>(i)];
                const auto & bj = chain.bags[static_cast<size_t>(j)];
                bj.for_each([&](Vertex v) {
                    ++report.checks;
                    auto back = t.out(v) & bi;
                    if (omega.at_least(back, chain.a))
                        report.violations.push_back({"later_out", j + 1, i + 1, v, omega.value(back), chain.a - 1});
                });
                bi.for_each([&](Vertex w) {
                    ++report.checks;
                    auto back = t.in(w) & bj;
                    if (omega.at_least(back, chain.a))
                        report.violations.push_back({"earlier_in", i + 1, j + 1, w, omega.value(back), chain.a - 1});
                });
            }
        report.ok = report.violations.empty();
        return report;
    }

    auto verify_bag_chain(const Tournament & t, const BagChain & chain) -> ChainReport
    {
        OmegaEvaluator omega(t);
        return verify_bag_chain(omega, chain);
    }

    auto verify_near_bag_chain(OmegaEvaluator & omega, const NearBagChain & chain) -> ChainReport
    {
        const auto & t = omega.tournament();
        int n = t.size();
        check_disjoint(chain.bags);
        ChainReport report;
        report.evaluator = to_string(omega.mode());
        auto suffix = suffix_unions(n, chain.bags);
        auto prefix = prefix_unions(n, chain.bags);
        int len = static_cast<int>(chain.bags.size());
        for (int i = 0; i < len; ++i) {
            const auto & q = chain.bags[static_cast<size_t>(i)];
            ++report.checks;
            if (omega.at_least(q, chain.c + 1))
                report.violations.push_back({"bag_level", i + 1, 0, -1, omega.value(q), chain.c});
            q.for_each([&](Vertex v) {
                report.checks += 2;
                auto later = t.in(v) & suffix[static_cast<size_t>(i + 1)];
                if (omega.at_least(later, chain.a + 1))
                    report.violations.push_back({"in_from_later", i + 1, 0, v, omega.value(later), chain.a});
                auto earlier = t.out(v) & prefix[static_cast<size_t>(i)];
                if (omega.at_least(earlier, chain.a + 1))
                    report.violations.push_back({"out_to_earlier", i + 1, 0, v, omega.value(earlier), chain.a});
            });
        }
        report.ok = report.violations.empty();
        return report;
    }

    auto verify_near_bag_chain(const Tournament & t, const NearBagChain & chain) -> ChainReport
    {
        OmegaEvaluator omega(t);
        return verify_near_bag_chain(omega, chain);
    }

    auto assign_zones(OmegaEvaluator & omega, const vector<VertexSet> & bags, int c_small) -> ZoneSequence
    {
        const auto & t = omega.tournament();
        int n = t.size();
        check_disjoint(bags);
        if (bags.empty())
            throw InvalidInput("assign_zones needs at least one bag");
        ZoneSequence z;
        z.c_small = c_small;
        z.zones.assign(bags.size(), VertexSet(n));
        z.reason.assign(bags.size(), "");
        z.zone_of.assign(static_cast<size_t>(n), -1);
        bool rich_first = false, none = false;
        (t.vertices() - union_of(n, bags)).for_each([&](Vertex v) {
            int zone = 0;
            bool found = false;
            for (size_t j = bags.size(); j-- > 0;)
                if (omega.at_least(bags[j] & t.in(v), c_small)) {
                    zone = static_cast<int>(j);
                    found = true;
                    break;
                }
            if (zone == 0)
                (found ? rich_first : none) = true;
            z.zones[static_cast<size_t>(zone)].set(v);
            z.zone_of[static_cast<size_t>(v)] = zone;
        });
        if (rich_first && none)
            z.reason[0] = "rich in B_1; no rich bag";
        else if (rich_first)
            z.reason[0] = "rich in B_1";
        else if (none)
            z.reason[0] = "no rich bag";
        return z;
    }

    auto assign_zones(const Tournament & t, const vector<VertexSet> & bags, int c_small) -> ZoneSequence
    {
        OmegaEvaluator omega(t);
        return assign_zones(omega, bags, c_small);
    }

    auto zones_partition(const Tournament & t, const vector<VertexSet> & bags, const ZoneSequence & z) -> bool
    {
        int n = t.size();
        VertexSet seen(n);
        int total = 0;
        for (auto & s : bags) {
            seen |= s;
            total += s.count();
        }
        for (auto & s : z.zones) {
            seen |= s;
            total += s.count();
        }
        return total == n && seen == t.vertices();
    }

    auto residue_chain(const ZoneSequence & z, int r) -> vector<VertexSet>
    {
        if (r < 0 || r > 2)
            throw InvalidInput("residue must be 0, 1 or 2");
        vector<VertexSet> out;
        for (size_t k = static_cast<size_t>(r); k < z.zones.size(); k += 3)
            out.push_back(z.zones[k]);
        return out;
    }

    auto pattern_hypothesis_violation(OmegaEvaluator & omega, const VertexSet & within, int threshold, const Tournament & pattern, int limit)
        -> optional<VertexSet>
    {
        const auto & t = omega.tournament();
        int n = t.size();
        auto members = within.members();
        int m = static_cast<int>(members.size());
        if (m > limit)
            throw SizeLimitExceeded("hypothesis check over all subsets needs at most " + to_string(limit) + " vertices, got " + to_string(m));
        auto to_set = [&](std::uint32_t mask) {
            VertexSet s(n);
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1U)
                    s.set(members[static_cast<size_t>(i)]);
            return s;
        };
        std::uint32_t full = (std::uint32_t{1} << m);
        vector<char> free(full, 1);
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (std::popcount(mask) < pattern.size())
                continue;
            bool subsets_free = true;
            for (int i = 0; i < m && subsets_free; ++i)
                if (mask >> i & 1U)
                    subsets_free = free[mask & ~(std::uint32_t{1} << i)];
            free[mask] = subsets_free && ! contains_copy(t, to_set(mask), pattern);
        }
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            if (! free[mask])
                continue;
            bool maximal = true;
            for (int i = 0; i < m && maximal; ++i)
                if (! (mask >> i & 1U))
                    maximal = ! free[mask | (std::uint32_t{1} << i)];
            if (maximal && omega.at_least(to_set(mask), threshold))
                return to_set(mask);
        }
        return std::nullopt;
    }

    auto zone_lemma_audit(OmegaEvaluator & omega, const BagChain & b, const ZoneSequence & z, int n, const ZoneAuditOptions & options) -> ZoneAudit
    {
        const auto & t = omega.tournament();
        int nt = t.size();
        int cs = z.c_small;
        ZoneAudit audit;
        audit.evaluator = to_string(omega.mode());
        if (n < 2 || n > max_D_index)
            throw InvalidInput("zone_lemma_audit: n must be in 2.." + to_string(max_D_index));
        if (z.zones.size() != b.bags.size())
            throw InvalidInput("zone sequence does not match the chain length");

        auto skip = [&](string reason) {
            audit.skipped = true;
            audit.reason = std::move(reason);
        };
        auto recomputed = assign_zones(omega, b.bags, cs);
        if (recomputed.zones != z.zones)
            skip("zones do not match the chain");
        else if (b.a > cs)
            skip("chain threshold a = " + to_string(b.a) + " exceeds c_small = " + to_string(cs));
        else if (static_cast<long>(b.c) < (1L << n) * cs)
            skip("bag level " + to_string(b.c) + " is below 2^n c_small");
        else if (auto r = verify_bag_chain(omega, b); ! r.ok)
            skip("not a bag chain (" + r.violations.front().rule + ")");
        else if (auto d = contains_copy(t, build_D(n).tournament))
            skip("T contains D_" + to_string(n));
        else {
            try {
                if (auto bad = pattern_hypothesis_violation(omega, t.vertices(), cs, build_D(n - 1).tournament, options.subset_check_limit))
                    skip("subset " + bad->to_string() + " has omega >= c_small but no D_" + to_string(n - 1));
            }
            catch (const SizeLimitExceeded & e) {
                skip(string("D_{n-1} hypothesis not measurable: ") + e.what());
            }
        }
        if (audit.skipped && ! options.evaluate_anyway)
            return audit;
        audit.forced = audit.skipped;

        int len = static_cast<int>(b.bags.size());
        auto bag = [&](int i) -> const VertexSet & { return b.bags[static_cast<size_t>(i - 1)]; };
        auto zone = [&](int k) -> const VertexSet & { return z.zones[static_cast<size_t>(k)]; };
        auto check = [&](const string & rule, int i, int j, Vertex v, const VertexSet & s, int bound) {
            ++audit.checks;
            if (omega.at_least(s, bound))
                audit.violations.push_back({rule, i, j, v, omega.value(s), bound - 1});
        };

        for (int i = 1; i <= len; ++i)
            bag(i).for_each([&](Vertex v) {
                VertexSet later(nt), earlier(nt);
                for (int k = i + 1; k <= len; ++k)
                    later |= bag(k) & t.in(v);
                for (int k = 1; k < i; ++k)
                    earlier |= bag(k) & t.out(v);
                check("btb(a)", i, 0, v, later, 2 * cs);
                check("btb(b)", i, 0, v, earlier, 2 * cs);
                // zone k is Z_{k+1/2}
                for (int k = 0; k < len; ++k) {
                    if (k >= i + 2)
                        check("ztb(a)", i, k, v, zone(k) & t.in(v), cs);
                    if (k <= i - 3)
                        check("ztb(b)", i, k, v, zone(k) & t.out(v), cs);
                }
            });
        for (int k = 0; k < len; ++k)
            zone(k).for_each([&](Vertex v) {
                for (int i = 1; i <= len; ++i) {
                    if (i <= k - 1)
                        check("btz(a)", k, i, v, bag(i) & t.out(v), cs);
                    if (i >= k + 2)
                        check("btz(b)", k, i, v, bag(i) & t.in(v), cs);
                }
                VertexSet far_later(nt), far_earlier(nt);
                for (int k2 = k + 3; k2 < len; ++k2)
                    far_later |= zone(k2) & t.in(v);
                for (int k2 = 0; k2 <= k - 3; ++k2)
                    far_earlier |= zone(k2) & t.out(v);
                check("ztz(a)", k, 0, v, far_later, cs);
                check("ztz(b)", k, 0, v, far_earlier, cs);
            });
        return audit;
    }

    auto merge_bags(OmegaEvaluator & omega, const NearBagChain & q, int c) -> MergeResult
    {
        int n = omega.tournament().size();
        check_disjoint(q.bags);
        MergeResult result;
        result.chain.c = 2 * c;
        result.chain.a = q.a;
        if (q.bags.empty())
            return result;
        vector<VertexSet> merged{VertexSet(n)};
        result.first_input.push_back(0);
        for (size_t i = 0; i < q.bags.size(); ++i) {
            if (omega.at_least(merged.back(), c + 1)) {
                merged.emplace_back(n);
                result.first_input.push_back(static_cast<int>(i));
            }
            merged.back() |= q.bags[i];
        }
        for (auto & m : merged)
            result.omegas.push_back(omega.value(m));
        result.chain.bags = std::move(merged);
        return result;
    }

    auto backward_graph(const Tournament & t, const vector<VertexSet> & bags) -> Graph
    {
        check_disjoint(bags);
        Graph g(t.size());
        for (size_t i = 0; i < bags.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                bags[i].for_each([&](Vertex u) { (t.out(u) & bags[j]).for_each([&](Vertex v) { g.add_edge(u, v); }); });
        return g;
    }

    auto bidirectional_rich(OmegaEvaluator & omega, int b) -> VertexSet
    {
        const auto & t = omega.tournament();
        VertexSet rich(t.size());
        t.vertices().for_each([&](Vertex v) {
            if (omega.at_least(t.in(v), b) && omega.at_least(t.out(v), b))
                rich.set(v);
        });
        return rich;
    }

    auto bidirectional_rich(const Tournament & t, int b) -> VertexSet
    {
        OmegaEvaluator omega(t);
        return bidirectional_rich(omega, b);
    }

    auto bags_to_json(const vector<VertexSet> & bags) -> json
    {
        json j = json::array();
        for (auto & b : bags)
            j.push_back(b.members());
        return j;
    }

    namespace
    {
        auto violations_json(const vector<ChainViolation> & vs) -> json
        {
            json j = json::array();
            for (auto & v : vs) {
                json x{{"rule", v.rule}, {"i", v.i}, {"measured", v.measured}, {"bound", v.bound}};
                if (v.j)
                    x["j"] = v.j;
                if (v.v >= 0)
                    x["vertex"] = v.v;
                j.push_back(x);
            }
            return j;
        }
    }

    auto to_json(const ChainReport & r) -> json
    {
        return {{"schema", 1}, {"ok", r.ok}, {"evaluator", r.evaluator}, {"checks", r.checks}, {"violations", violations_json(r.violations)}};
    }

    auto to_json(const ZoneSequence & z) -> json
    {
        json zones = json::array();
        for (size_t k = 0; k < z.zones.size(); ++k) {
            json x{{"index", std::to_string(k) + "+1/2"}, {"vertices", z.zones[k].members()}};
            if (! z.reason[k].empty())
                x["reason"] = z.reason[k];
            zones.push_back(x);
        }
        return {{"schema", 1}, {"c_small", z.c_small}, {"zones", zones}};
    }

    auto to_json(const ZoneAudit & a) -> json
    {
        json j{{"schema", 1}, {"skipped", a.skipped}, {"forced", a.forced}, {"ok", a.ok()}, {"checks", a.checks}, {"evaluator", a.evaluator},
            {"violations", violations_json(a.violations)}};
        if (! a.reason.empty())
            j["reason"] = a.reason;
        return j;
    }
}
