#include <tclique/errors.hh>
#include <tclique/max_clique.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>

#include <algorithm>
#include <bit>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    auto MountainCertificate::order() const -> int
    {
        if (r == 1 && s == 1)
            return 1;
        if (s == r + 1)
            return s;
        return 0;
    }

    auto mountain_size_bound(int m) -> long
    {
        long f = 1;
        for (int i = 2; i <= m; ++i)
            f *= i;
        return f * f;
    }

    MountainOracle::MountainOracle(const Tournament & t, MountainOptions options) :
        _t(t),
        _options(options)
    {
    }

    auto MountainOracle::tick() -> void
    {
        if (_options.budget >= 0 && _evaluations >= _options.budget)
            throw BudgetExceeded("mountain search budget exhausted after " + to_string(_evaluations) + " evaluations");
        ++_evaluations;
    }

    auto MountainOracle::has_mountain(const VertexSet & y, int m) -> bool
    {
        if (m < 1)
            throw InvalidInput("mountain order must be positive");
        if (m == 1)
            return y.any();
        return has_clique(y, m - 1, m);
    }

    auto MountainOracle::heavy(const VertexSet & y, Vertex u, Vertex v, int r) -> bool
    {
        if (! _t.arc(u, v))
            return false;
        auto between = y & _t.in(u) & _t.out(v);
        return has_mountain(between, r);
    }

    auto MountainOracle::heavy_graph(const VertexSet & y, int r) -> Graph
    {
        Graph g(_t.size());
        y.for_each([&](Vertex u) {
            (y & _t.out(u)).for_each([&](Vertex v) {
                if (heavy(y, u, v, r))
                    g.add_edge(u, v);
            });
        });
        return g;
    }

    auto MountainOracle::has_clique(const VertexSet & y, int r, int s) -> bool
    {
        if (s <= 1)
            return s <= 0 || y.any();
        if (y.count() < s)
            return false;
        if (r == 1 && s == 2) {
            // a directed triangle inside y
            bool found = false;
            y.for_each([&](Vertex u) {
                if (! found)
                    (y & _t.out(u)).for_each([&](Vertex v) {
                        if (! found && (y & _t.in(u) & _t.out(v)).any())
                            found = true;
                    });
            });
            return found;
        }
        size_t key = static_cast<size_t>(r) * 64 + static_cast<size_t>(s);
        if (_memo.size() <= key)
            _memo.resize(key + 1);
        auto & memo = _memo[key];
        if (auto it = memo.find(y); it != memo.end())
            return it->second;
        tick();
        bool result = max_clique(heavy_graph(y, r), y).size >= s;
        _memo[key].emplace(y, result);
        return result;
    }

    auto MountainOracle::find_clique(const VertexSet & y, int r, int s) -> optional<vector<Vertex>>
    {
        if (s < 1)
            throw InvalidInput("clique size must be positive");
        if (s == 1) {
            if (y.empty())
                return std::nullopt;
            return vector<Vertex>{y.first()};
        }
        if (! has_clique(y, r, s))
            return std::nullopt;
        auto c = max_clique(heavy_graph(y, r), y);
        auto members = c.witness.members();
        members.resize(static_cast<size_t>(s));
        return members;
    }

    auto MountainOracle::assemble(const VertexSet & y, int r, const vector<Vertex> & clique) -> MountainCertificate
    {
        MountainCertificate cert;
        cert.r = r;
        cert.s = static_cast<int>(clique.size());
        cert.clique = clique;
        std::sort(cert.clique.begin(), cert.clique.end());
        cert.vertex_set = VertexSet::of(_t.size(), cert.clique);
        for (auto u : cert.clique)
            for (auto v : cert.clique) {
                if (u == v || ! _t.arc(u, v))
                    continue;
                auto w = mountain_certificate(y & _t.in(u) & _t.out(v), r);
                if (! w)
                    throw std::logic_error("mountain assembly: arc " + to_string(u) + "->" + to_string(v) + " is not " + to_string(r) + "-heavy");
                cert.vertex_set |= w->vertex_set;
                cert.witnesses.emplace(std::pair{u, v}, std::move(*w));
            }
        return cert;
    }

    auto MountainOracle::minimise(VertexSet x, int r, int s) -> VertexSet
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = x.first(); v != -1; v = x.next(v)) {
                auto smaller = x;
                smaller.reset(v);
                if (has_clique(smaller, r, s)) {
                    x = std::move(smaller);
                    changed = true;
                }
            }
        }
        return x;
    }

    auto MountainOracle::certificate_from_clique(const VertexSet & y, int r, const vector<Vertex> & clique) -> MountainCertificate
    {
        int s = static_cast<int>(clique.size());
        auto first = assemble(y, r, clique);
        auto x = minimise(first.vertex_set, r, s);
        auto inner = find_clique(x, r, s);
        if (! inner)
            throw std::logic_error("mountain minimisation lost the clique");
        auto cert = assemble(x, r, *inner);
        if (cert.vertex_set != x)
            throw std::logic_error("rebuilt mountain does not span its minimal set");
        return cert;
    }

    auto MountainOracle::certificate(const VertexSet & y, int r, int s) -> optional<MountainCertificate>
    {
        auto clique = find_clique(y, r, s);
        if (! clique)
            return std::nullopt;
        return certificate_from_clique(y, r, *clique);
    }

    auto MountainOracle::mountain_certificate(const VertexSet & y, int m) -> optional<MountainCertificate>
    {
        if (m == 1) {
            if (y.empty())
                return std::nullopt;
            MountainCertificate cert;
            cert.clique = {y.first()};
            cert.vertex_set = VertexSet::of(_t.size(), {y.first()});
            return cert;
        }
        return certificate(y, m - 1, m);
    }

    auto ArcClassification::light_in(Vertex v) const -> VertexSet
    {
        VertexSet result(n);
        for (int u = 0; u < n; ++u)
            if (light_out[static_cast<size_t>(u)].test(v))
                result.set(u);
        return result;
    }

    auto classify_arcs(const Tournament & t, int r, bool with_witnesses, const MountainOptions & options) -> ArcClassification
    {
        if (r < 1)
            throw InvalidInput("classify_arcs: r must be positive");
        MountainOracle oracle(t, options);
        ArcClassification result;
        result.r = r;
        result.n = t.size();
        result.heavy_out.assign(static_cast<size_t>(t.size()), t.empty_set());
        result.light_out.assign(static_cast<size_t>(t.size()), t.empty_set());
        auto all = t.vertices();
        for (int u = 0; u < t.size(); ++u)
            t.out(u).for_each([&](Vertex v) {
                if (oracle.heavy(all, u, v, r)) {
                    result.heavy_out[static_cast<size_t>(u)].set(v);
                    if (with_witnesses)
                        result.witnesses.emplace(std::pair{u, v}, *oracle.mountain_certificate(t.in(u) & t.out(v), r));
                }
                else
                    result.light_out[static_cast<size_t>(u)].set(v);
            });
        return result;
    }

    auto find_mountain(const Tournament & t, int r, int s, const MountainOptions & options) -> optional<MountainCertificate>
    {
        if (r < 1 || s < 1)
            throw InvalidInput("find_mountain: r and s must be positive");
        if (r > options.cap)
            throw InvalidInput("find_mountain: r exceeds the cap of " + to_string(options.cap));
        MountainOracle oracle(t, options);
        return oracle.certificate(t.vertices(), r, s);
    }

    namespace
    {
        auto verify_into(const Tournament & t, MountainOracle & oracle, const MountainCertificate & cert, const string & path,
            vector<string> & out) -> void
        {
            auto fail = [&](const string & what) { out.push_back(path + ": " + what); };
            int n = t.size();
            if (cert.r < 1 || cert.s < 1) {
                fail("r and s must be positive");
                return;
            }
            if (cert.vertex_set.universe() != n) {
                fail("vertex set has the wrong universe");
                return;
            }
            if (static_cast<int>(cert.clique.size()) != cert.s)
                fail("clique has " + to_string(cert.clique.size()) + " vertices, expected " + to_string(cert.s));
            VertexSet clique(n);
            for (auto v : cert.clique) {
                if (v < 0 || v >= n) {
                    fail("clique vertex " + to_string(v) + " outside the tournament");
                    return;
                }
                if (clique.test(v))
                    fail("repeated clique vertex " + to_string(v));
                clique.set(v);
            }
            if (! clique.is_subset_of(cert.vertex_set))
                fail("clique not contained in vertex set");

            VertexSet spanned = clique;
            size_t arcs = 0;
            for (auto u : cert.clique)
                for (auto v : cert.clique) {
                    if (u == v || ! t.arc(u, v))
                        continue;
                    ++arcs;
                    string arc = to_string(u) + "->" + to_string(v);
                    auto it = cert.witnesses.find({u, v});
                    if (it == cert.witnesses.end()) {
                        fail("no witness for clique arc " + arc);
                        continue;
                    }
                    auto & w = it->second;
                    if (w.order() != cert.r)
                        fail("witness for " + arc + " is not a " + to_string(cert.r) + "-mountain");
                    if (w.vertex_set.universe() != n) {
                        fail("witness for " + arc + " has the wrong universe");
                        continue;
                    }
                    if (! w.vertex_set.is_subset_of(t.in(u)))
                        fail("witness for " + arc + " is not out-complete to " + to_string(u));
                    if (! w.vertex_set.is_subset_of(t.out(v)))
                        fail("witness for " + arc + " is not in-complete from " + to_string(v));
                    spanned |= w.vertex_set;
                    verify_into(t, oracle, w, path + "/" + arc, out);
                }
            if (cert.witnesses.size() != arcs)
                fail("witness map has entries that are not clique arcs");
            if (spanned != cert.vertex_set)
                fail("vertex set is not the union of the clique and its witnesses");

            for (Vertex x = cert.vertex_set.first(); x != -1; x = cert.vertex_set.next(x)) {
                auto smaller = cert.vertex_set;
                smaller.reset(x);
                if (oracle.has_clique(smaller, cert.r, cert.s)) {
                    fail("not minimal: removing " + to_string(x) + " keeps an (" + to_string(cert.r) + "," + to_string(cert.s) + ")-clique");
                    break;
                }
            }
            if (int m = cert.order(); m > 0 && cert.vertex_set.count() > mountain_size_bound(m))
                fail("size " + to_string(cert.vertex_set.count()) + " exceeds (" + to_string(m) + "!)^2");
        }
    }

    auto verify_mountain(const Tournament & t, const MountainCertificate & cert, const MountainOptions & options) -> VerifyReport
    {
        MountainOracle oracle(t, options);
        VerifyReport report;
        verify_into(t, oracle, cert, "root", report.violations);
        report.ok = report.violations.empty();
        return report;
    }

    namespace
    {
        struct TwoColouring
        {
            const Tournament & t;
            const vector<Colour> & phi;
            MountainOracle oracle;

            auto single(Vertex v) -> MountainCertificate
            {
                MountainCertificate cert;
                cert.clique = {v};
                cert.vertex_set = VertexSet::of(t.size(), {v});
                return cert;
            }

            auto first_of(const VertexSet & s, Colour c) -> Vertex
            {
                for (Vertex v = s.first(); v != -1; v = s.next(v))
                    if (phi[static_cast<size_t>(v)] == c)
                        return v;
                return -1;
            }

            // descend into the witnesses of `chosen` looking for (a', b') mountains; `towards` is the majority colour
            auto descend(const MountainCertificate & m, const vector<Vertex> & chosen, Colour towards, int a, int b) -> ColouredMountain
            {
                int wa = towards == Colour::blue ? a : a - 1;
                int wb = towards == Colour::blue ? b - 1 : b;
                VertexSet x = VertexSet::of(t.size(), chosen);
                for (auto u : chosen)
                    for (auto v : chosen) {
                        if (u == v || ! t.arc(u, v))
                            continue;
                        auto found = run(m.witnesses.at({u, v}), wa, wb);
                        if (found.colour != towards)
                            return found;
                        x |= found.certificate.vertex_set;
                    }
                int level = static_cast<int>(chosen.size()) - 1;
                auto cert = oracle.certificate_from_clique(x, level, chosen);
                return {towards, static_cast<int>(chosen.size()), std::move(cert)};
            }

            auto run(const MountainCertificate & m, int a, int b) -> ColouredMountain
            {
                int order = m.order();
                if (order == 1) {
                    Vertex v = m.clique[0];
                    return {phi[static_cast<size_t>(v)], 1, m};
                }
                if (b == 1) {
                    if (Vertex v = first_of(m.vertex_set, Colour::blue); v != -1)
                        return {Colour::blue, 1, single(v)};
                    return {Colour::red, order, m};
                }
                if (a == 1) {
                    if (Vertex v = first_of(m.vertex_set, Colour::red); v != -1)
                        return {Colour::red, 1, single(v)};
                    return {Colour::blue, order, m};
                }
                vector<Vertex> blues, reds;
                for (auto v : m.clique)
                    (phi[static_cast<size_t>(v)] == Colour::blue ? blues : reds).push_back(v);
                if (static_cast<int>(blues.size()) >= b) {
                    blues.resize(static_cast<size_t>(b));
                    return descend(m, blues, Colour::blue, a, b);
                }
                reds.resize(static_cast<size_t>(a));
                return descend(m, reds, Colour::red, a, b);
            }
        };
    }

    auto two_colouring_witness(const Tournament & t, const MountainCertificate & cert, const vector<Colour> & phi, int a, int b)
        -> ColouredMountain
    {
        int r = cert.order();
        if (r < 1)
            throw InvalidInput("two_colouring_witness: certificate is not an r-mountain");
        if (a < 1 || b < 1 || a + b != r + 1)
            throw InvalidInput("two_colouring_witness: need a, b >= 1 and a + b = r + 1");
        if (phi.size() != static_cast<size_t>(t.size()))
            throw InvalidInput("two_colouring_witness: colouring has the wrong length");
        if (auto report = verify_mountain(t, cert); ! report.ok)
            throw InvalidInput("two_colouring_witness: invalid certificate: " + report.violations.front());
        TwoColouring tc{t, phi, MountainOracle(t)};
        auto result = tc.run(cert, a, b);
        int wanted = result.colour == Colour::red ? a : b;
        if (result.order != wanted)
            throw std::logic_error("two_colouring_witness: descent returned the wrong order");
        return result;
    }

    auto is_light_dominating(const ArcClassification & arcs, const VertexSet & w) -> bool
    {
        VertexSet covered = w;
        w.for_each([&](Vertex u) { covered |= arcs.light_out[static_cast<size_t>(u)]; });
        return covered == VertexSet::full(arcs.n);
    }

    namespace
    {
        struct OutOfBudget
        {
        };

        struct Dominator
        {
            int n;
            vector<VertexSet> cover;
            vector<VertexSet> coverers;
            long budget;
            long nodes = 0;
            VertexSet best;
            int best_size;

            auto search(const VertexSet & covered, VertexSet & chosen, int size) -> void
            {
                if (budget >= 0 && nodes >= budget)
                    throw OutOfBudget{};
                ++nodes;
                auto uncovered = covered.complement();
                if (uncovered.empty()) {
                    if (size < best_size) {
                        best_size = size;
                        best = chosen;
                    }
                    return;
                }
                int most = 1;
                for (int w = 0; w < n; ++w)
                    most = std::max(most, (cover[static_cast<size_t>(w)] & uncovered).count());
                int need = (uncovered.count() + most - 1) / most;
                if (size + need >= best_size)
                    return;
                Vertex x = uncovered.first();
                coverers[static_cast<size_t>(x)].for_each([&](Vertex w) {
                    chosen.set(w);
                    search(covered | cover[static_cast<size_t>(w)], chosen, size + 1);
                    chosen.reset(w);
                });
            }
        };
    }

    auto min_light_dominating(const ArcClassification & arcs, long budget) -> DominatingResult
    {
        int n = arcs.n;
        Dominator d{n, {}, {}, budget, 0, VertexSet::full(n), n};
        for (int w = 0; w < n; ++w) {
            auto c = arcs.light_out[static_cast<size_t>(w)];
            c.set(w);
            d.cover.push_back(c);
        }
        for (int x = 0; x < n; ++x) {
            auto c = arcs.light_in(x);
            c.set(x);
            d.coverers.push_back(c);
        }
        // greedy incumbent
        {
            VertexSet covered(n), chosen(n);
            while (covered != VertexSet::full(n)) {
                int best_w = -1, gain = -1;
                for (int w = 0; w < n; ++w) {
                    int g = (d.cover[static_cast<size_t>(w)] - covered).count();
                    if (g > gain) {
                        gain = g;
                        best_w = w;
                    }
                }
                chosen.set(best_w);
                covered |= d.cover[static_cast<size_t>(best_w)];
            }
            if (chosen.count() < d.best_size) {
                d.best = chosen;
                d.best_size = chosen.count();
            }
        }
        DominatingResult result;
        try {
            VertexSet chosen(n);
            d.search(VertexSet(n), chosen, 0);
        }
        catch (const OutOfBudget &) {
            result.exact = false;
        }
        result.set = d.best;
        result.nodes = d.nodes;
        return result;
    }

    auto min_light_dominating(const Tournament & t, int r, long budget) -> DominatingResult
    {
        return min_light_dominating(classify_arcs(t, r, false), budget);
    }

    auto greedy_light_set(const ArcClassification & arcs, const vector<Vertex> & order) -> VertexSet
    {
        VertexSet chosen(arcs.n), seen(arcs.n);
        for (auto v : order) {
            if (v < 0 || v >= arcs.n || seen.test(v))
                throw InvalidInput("greedy_light_set: order repeats or leaves the vertex range");
            seen.set(v);
            if (! arcs.light_in(v).intersects(chosen))
                chosen.set(v);
        }
        return chosen;
    }

    auto greedy_light_set(const Tournament & t, int r, const vector<Vertex> & order) -> VertexSet
    {
        validate_permutation(t.size(), order);
        return greedy_light_set(classify_arcs(t, r, false), order);
    }

    auto log_bound_audit(const Tournament & t, const MountainOptions & options) -> LogBoundAudit
    {
        LogBoundAudit audit;
        if (t.size() == 0)
            return audit;
        MountainOracle oracle(t, options);
        auto all = t.vertices();
        int m = 1;
        while (m + 1 <= options.cap && oracle.has_mountain(all, m + 1))
            ++m;
        audit.largest_mountain = m;
        audit.bound = std::bit_width(static_cast<unsigned>(m)) - 1;
        audit.omega = omega_value(t);
        audit.ok = audit.omega >= audit.bound;
        return audit;
    }

    auto to_json(const MountainCertificate & cert) -> json
    {
        json j;
        j["schema"] = 1;
        j["kind"] = "mountain";
        j["r"] = cert.r;
        j["s"] = cert.s;
        j["clique"] = cert.clique;
        j["vertex_set"] = cert.vertex_set.members();
        j["witnesses"] = json::array();
        for (auto & [arc, w] : cert.witnesses)
            j["witnesses"].push_back({{"arc", {arc.first, arc.second}}, {"certificate", to_json(w)}});
        return j;
    }

    auto mountain_from_json(const json & j, int n) -> MountainCertificate
    {
        if (j.value("schema", 0) != 1)
            throw InvalidInput("unsupported mountain certificate schema");
        MountainCertificate cert;
        cert.r = j.at("r").get<int>();
        cert.s = j.at("s").get<int>();
        cert.clique = j.at("clique").get<vector<Vertex>>();
        cert.vertex_set = VertexSet::of(n, j.at("vertex_set").get<vector<Vertex>>());
        for (auto & w : j.at("witnesses")) {
            auto arc = w.at("arc").get<vector<Vertex>>();
            if (arc.size() != 2)
                throw InvalidInput("witness arc must have two endpoints");
            cert.witnesses.emplace(std::pair{arc[0], arc[1]}, mountain_from_json(w.at("certificate"), n));
        }
        return cert;
    }
}
