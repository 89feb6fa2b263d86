#include <tclique/atlas.hh>
#include <tclique/bounds.hh>
#include <tclique/canonical.hh>
#include <tclique/certificates.hh>
#include <tclique/chain_dichotomy.hh>
#include <tclique/chains.hh>
#include <tclique/chi.hh>
#include <tclique/cli.hh>
#include <tclique/constructions.hh>
#include <tclique/containment.hh>
#include <tclique/errors.hh>
#include <tclique/evaluator.hh>
#include <tclique/lemma_suite.hh>
#include <tclique/mountains.hh>
#include <tclique/omega.hh>
#include <tclique/trn_io.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace tclique
{
    using std::to_string;

    namespace
    {
        /// Wrong or missing arguments discovered after parsing.
        class UsageError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        struct Context
        {
            std::istream & in;
            std::ostream & out;
            bool json_out = false;
            bool stdin_used = false;

            auto tournament(const string & path) -> Tournament
            {
                if (path == "-") {
                    if (stdin_used)
                        throw UsageError("standard input can be read only once");
                    stdin_used = true;
                    return read_trn(in);
                }
                return read_trn_file(path);
            }

            auto bags(const string & path, int n) -> vector<VertexSet>
            {
                if (path == "-") {
                    if (stdin_used)
                        throw UsageError("standard input can be read only once");
                    stdin_used = true;
                    return read_bags(in, n);
                }
                return read_bags_file(path, n);
            }

            auto emit(json j) -> void
            {
                if (j.is_object() && ! j.contains("schema"))
                    j["schema"] = 1;
                out << j.dump(2) << "\n";
            }
        };

        auto join(const vector<Vertex> & vs) -> string
        {
            string s;
            for (size_t i = 0; i < vs.size(); ++i)
                s += (i ? " " : "") + to_string(vs[i]);
            return s;
        }

        auto short_value(const BoundValue & v) -> string
        {
            auto s = v.to_string();
            if (s.size() > 48)
                s = s.substr(0, 24) + "..." + s.substr(s.size() - 10) + " (" + to_string(s.size()) + " chars)";
            return s;
        }

        auto print_trace(std::ostream & out, const BoundExpr & e, int depth, int max_depth) -> void
        {
            out << string(static_cast<size_t>(2 * depth), ' ') << e->op << "  " << e->anchor << "  = " << short_value(e->value) << "\n";
            if (depth >= max_depth) {
                if (! e->operands.empty())
                    out << string(static_cast<size_t>(2 * depth + 2), ' ') << "(" << e->operands.size() << " operands elided)\n";
                return;
            }
            for (auto & o : e->operands)
                print_trace(out, o, depth + 1, max_depth);
        }

        auto make_evaluator(const Tournament & t, const string & mode, optional<std::uint64_t> seed, int exact_limit, long budget)
            -> OmegaEvaluator
        {
            auto m = evaluator_mode_from_string(mode);
            if (m == EvaluatorMode::bounds && ! seed)
                throw UsageError("--evaluator bounds is randomized and needs --seed");
            OmegaOptions exact;
            exact.exact_limit = exact_limit;
            exact.budget = budget;
            OmegaBoundsOptions bounds;
            bounds.exact = exact;
            bounds.seed = seed.value_or(0);
            return OmegaEvaluator(t, m, exact, bounds);
        }

        auto print_violations(std::ostream & out, const vector<ChainViolation> & vs) -> void
        {
            for (auto & v : vs)
                out << "  " << v.rule << " bag " << v.i << (v.j ? " vs " + to_string(v.j) : string()) << (v.v >= 0 ? " vertex " + to_string(v.v) : string())
                    << ": " << v.measured << " against " << v.bound << "\n";
        }

        auto print_property(std::ostream & out, const PropertyResult & r) -> void
        {
            out << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.cases << " cases, hypotheses held in " << r.held << ", " << r.violations
                << " violations (" << r.seconds << " s)\n";
            for (auto & e : r.examples)
                out << "     " << e << "\n";
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Tournament clique number toolkit", "tclique"};
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all", "Expand all help");
        Context ctx{in, out};
        app.add_flag("--json", ctx.json_out, "Machine-readable JSON output");

        optional<std::uint64_t> seed;
        long budget = -1;
        int exact_limit = 14;
        string file, file2, evaluator = "exact";

        auto * gen = app.add_subcommand("gen", "Generate a tournament in .trn form");
        string family;
        int gen_n = 0;
        bool labels = false;
        gen->add_option("--family", family, "A, D, U, transitive or random")->required();
        gen->add_option("--n", gen_n, "Index (A, D, U) or vertex count (transitive, random)")->required()->check(CLI::NonNegativeNumber);
        gen->add_option("--seed", seed, "Seed for random");
        gen->add_flag("--labels", labels, "Emit vertex roles as comments");

        auto * omega = app.add_subcommand("omega", "Tournament clique number");
        string omega_mode = "exact";
        omega->add_option("file", file, ".trn file or -")->required();
        omega->add_option("--budget", budget, "Search nodes (negative: unlimited)");
        omega->add_option("--exact-limit", exact_limit, "Largest vertex count for the exact solver");
        omega->add_option("--mode", omega_mode, "exact or bounds");
        omega->add_option("--seed", seed, "Seed for bounds mode");

        auto * chi = app.add_subcommand("chi", "Dichromatic number");
        int chi_limit = 20;
        chi->add_option("file", file, ".trn file or -")->required();
        chi->add_option("--budget", budget, "Search nodes (negative: unlimited)");
        chi->add_option("--exact-limit", chi_limit, "Largest vertex count");

        auto * contains = app.add_subcommand("contains", "Search for an induced copy of a pattern");
        contains->add_option("--host", file, "Host .trn or -")->required();
        contains->add_option("--pattern", file2, "Pattern .trn or -")->required();
        contains->add_option("--budget", budget, "Search nodes (negative: unlimited)");

        auto * mountain = app.add_subcommand("mountain", "Find an (r,s)-mountain");
        int mr = 1, ms = 1, cap = default_mountain_cap;
        mountain->add_option("file", file, ".trn file or -")->required();
        mountain->add_option("--r", mr, "Witness order r")->required()->check(CLI::PositiveNumber);
        mountain->add_option("--s", ms, "Clique size s")->required()->check(CLI::PositiveNumber);
        mountain->add_option("--cap", cap, "Largest mountain order searched");
        mountain->add_option("--budget", budget, "Subset evaluations (negative: unlimited)");

        auto * maudit = app.add_subcommand("mountain-audit", "Mountain property suites (sizes, two-colouring, log bound)");
        long cases = 100;
        int max_n = 10;
        maudit->add_option("--seed", seed, "Seed")->required();
        maudit->add_option("--cases", cases, "Cases per property")->check(CLI::PositiveNumber);
        maudit->add_option("--max-n", max_n, "Largest tournament")->check(CLI::Range(1, 12));

        auto * chain = app.add_subcommand("chain", "Bag-chain tools");
        chain->require_subcommand(1);
        int cc = 0, ca = 0, c_small = 1, mm = 2;
        bool near = false, relaxed = false;
        auto chain_common = [&](CLI::App * sub) {
            sub->add_option("file", file, ".trn file or -")->required();
            sub->add_option("bags", file2, "Bag file or -")->required();
            sub->add_option("--evaluator", evaluator, "exact or bounds");
            sub->add_option("--seed", seed, "Seed for the bounds evaluator");
            sub->add_option("--exact-limit", exact_limit, "Largest vertex count for exact solves");
        };
        auto * cverify = chain->add_subcommand("verify", "Check the bag-chain (or near-bag-chain) conditions");
        chain_common(cverify);
        cverify->add_option("--c", cc, "Bag clique number c")->required();
        cverify->add_option("--a", ca, "Backward bound a")->required();
        cverify->add_flag("--near", near, "Check a near-bag-chain instead");
        auto * czones = chain->add_subcommand("zones", "Assign zones to the vertices outside the bags");
        chain_common(czones);
        czones->add_option("--c-small", c_small, "Richness threshold")->required();
        auto * cmerge = chain->add_subcommand("merge", "Greedy merge of a near-bag-chain");
        chain_common(cmerge);
        cmerge->add_option("--c", cc, "Merge threshold c")->required();
        cmerge->add_option("--a", ca, "Backward bound a of the input");
        auto * cdich = chain->add_subcommand("dichotomy", "Ordering of small clique number or a copy of A_m");
        chain_common(cdich);
        cdich->add_option("--m", mm, "Index m")->required()->check(CLI::Range(2, max_A_index));
        cdich->add_option("--c", cc, "Bag bound c")->required();
        cdich->add_option("--a", ca, "Backward bound a")->required();
        cdich->add_option("--c-small", c_small, "Threshold for the A_{m-1} hypothesis")->required();
        cdich->add_flag("--relaxed", relaxed, "Continue when c < 2 m! a + c_small");

        auto * bounds = app.add_subcommand("bounds", "Constant pipeline");
        bounds->require_subcommand(1);
        int bt = 1, depth = 3;
        long bb = 1;
        int br = 1, bs = 1;
        auto * bf = bounds->add_subcommand("f", "f(t) with its derivation");
        bf->add_option("--t", bt, "t")->required()->check(CLI::Range(1, 8));
        auto * bg = bounds->add_subcommand("g45", "g(b), the out-neighbourhood threshold");
        bg->add_option("--b", bb, "b")->required()->check(CLI::NonNegativeNumber);
        auto * bq = bounds->add_subcommand("q", "q = R(b (r!)^2 + 1, s + 1) + s");
        bq->add_option("--b", bb, "b")->required()->check(CLI::PositiveNumber);
        bq->add_option("--r", br, "r")->required()->check(CLI::Range(1, 12));
        bq->add_option("--s", bs, "s")->required()->check(CLI::PositiveNumber);
        auto * bram = bounds->add_subcommand("ramsey", "Ramsey upper bound R(s, t)");
        bram->add_option("--s", bb, "s")->required()->check(CLI::PositiveNumber);
        bram->add_option("--t", bt, "t")->required()->check(CLI::PositiveNumber);
        for (auto * sub : {bf, bg, bq, bram})
            sub->add_option("--depth", depth, "Trace depth shown");

        auto * atlas = app.add_subcommand("atlas", "Persistent cache of invariants by canonical code");
        atlas->require_subcommand(1);
        string db = "tclique.atlas";
        atlas->add_option("--db", db, "Atlas file");
        vector<string> atlas_files;
        auto * aadd = atlas->add_subcommand("add", "Compute and store records");
        aadd->add_option("files", atlas_files, ".trn files or -")->required();
        auto * aget = atlas->add_subcommand("get", "Look up a code (or the code of a .trn file)");
        aget->add_option("key", file, "Hex code or .trn file")->required();
        auto * alist = atlas->add_subcommand("list", "All records");
        auto * acompact = atlas->add_subcommand("compact", "Rewrite with one record per code; move corrupt spans aside");
        auto * averify = atlas->add_subcommand("verify", "Checksums, consistency and re-derivation of every record");

        auto * suite = app.add_subcommand("lemma-suite", "Full invariant battery");
        double scale = 1.0;
        suite->add_option("--seed", seed, "Seed")->required();
        suite->add_option("--scale", scale, "Multiplier on case counts")->check(CLI::PositiveNumber);
        suite->add_option("--max-n", max_n, "Largest tournament")->check(CLI::Range(1, 12));

        vector<string> reversed(args.rbegin(), args.rend());
        if (! reversed.empty())
            reversed.pop_back();
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        auto & o = ctx.out;
        try {
            if (*gen) {
                Tournament t;
                vector<string> roles;
                if (family == "random") {
                    if (! seed)
                        throw UsageError("gen --family random needs --seed");
                    t = random_tournament(gen_n, *seed);
                } else if (family == "transitive") {
                    t = transitive_tournament(gen_n);
                } else {
                    auto lt = build_family({family_from_string(family), gen_n});
                    t = lt.tournament;
                    roles = lt.labels;
                }
                if (labels)
                    for (size_t v = 0; v < roles.size(); ++v)
                        o << "# " << v << " " << roles[v] << "\n";
                write_trn(o, t);
                return exit_ok;
            }

            if (*omega) {
                auto t = ctx.tournament(file);
                if (omega_mode == "bounds") {
                    if (! seed)
                        throw UsageError("omega --mode bounds is randomized and needs --seed");
                    OmegaBoundsOptions bo;
                    bo.seed = *seed;
                    bo.exact.exact_limit = exact_limit;
                    bo.exact.budget = budget;
                    auto b = omega_dir_bounds(t, bo);
                    if (ctx.json_out)
                        ctx.emit(to_json(b));
                    else
                        o << "omega in [" << b.lower << ", " << b.upper << "]\norder: " << join(b.upper_order) << "\n";
                    return exit_ok;
                }
                if (omega_mode != "exact")
                    throw UsageError("--mode must be exact or bounds");
                OmegaOptions opt;
                opt.budget = budget;
                opt.exact_limit = exact_limit;
                auto r = omega_dir(t, opt);
                if (ctx.json_out)
                    ctx.emit(to_json(r));
                else if (r.status == SolveStatus::exact)
                    o << "omega = " << r.value << "\norder: " << join(r.order) << "\n";
                else
                    o << "omega in [" << r.lower << ", " << r.upper << "] (budget exhausted after " << r.nodes << " nodes)\n";
                return r.status == SolveStatus::exact ? exit_ok : exit_budget;
            }

            if (*chi) {
                auto t = ctx.tournament(file);
                auto r = chi_dir(t, ChiOptions{chi_limit, budget});
                if (ctx.json_out)
                    ctx.emit(to_json(r));
                else if (r.status == SolveStatus::exact) {
                    o << "chi = " << r.value << "\n";
                    for (auto & c : r.classes)
                        o << "class: " << join(c.members()) << "\n";
                } else
                    o << "chi in [" << r.lower << ", " << r.upper << "] (budget exhausted after " << r.nodes << " nodes)\n";
                return r.status == SolveStatus::exact ? exit_ok : exit_budget;
            }

            if (*contains) {
                auto host = ctx.tournament(file);
                auto pattern = ctx.tournament(file2);
                auto e = contains_copy(host, pattern, ContainmentOptions{budget});
                if (ctx.json_out)
                    ctx.emit(json{{"found", e.has_value()}, {"embedding", e ? json(*e) : json(nullptr)}});
                else if (e)
                    o << "found: " << join(*e) << "\n";
                else
                    o << "not found\n";
                return e ? exit_ok : exit_negative;
            }

            if (*mountain) {
                auto t = ctx.tournament(file);
                if (ms > mr + 1)
                    throw UsageError("an (r,s)-mountain needs s <= r + 1");
                MountainOptions mo;
                mo.cap = cap;
                mo.budget = budget;
                auto cert = find_mountain(t, mr, ms, mo);
                if (ctx.json_out)
                    ctx.emit(cert ? json{{"found", true}, {"certificate", to_json(*cert)}} : json{{"found", false}});
                else if (cert)
                    o << "(" << mr << "," << ms << ")-mountain: clique " << join(cert->clique) << ", vertices " << cert->vertex_set.to_string() << "\n";
                else
                    o << "no (" << mr << "," << ms << ")-mountain\n";
                return cert ? exit_ok : exit_negative;
            }

            if (*maudit) {
                LemmaSuiteReport report;
                PropertyParams p{*seed, cases, max_n};
                report.properties.push_back(property_mountain_size(p));
                report.properties.push_back(property_two_colouring(p));
                report.properties.push_back(property_log_bound(p));
                if (ctx.json_out)
                    ctx.emit(to_json(report));
                else
                    for (auto & r : report.properties)
                        print_property(o, r);
                return report.ok() ? exit_ok : exit_negative;
            }

            if (*chain) {
                auto t = ctx.tournament(file);
                auto bags = ctx.bags(file2, t.size());
                auto ev = make_evaluator(t, evaluator, seed, exact_limit, budget);
                if (*cverify) {
                    auto report = near ? verify_near_bag_chain(ev, NearBagChain{bags, cc, ca}) : verify_bag_chain(ev, BagChain{bags, cc, ca});
                    if (ctx.json_out)
                        ctx.emit(to_json(report));
                    else {
                        o << (report.ok ? "ok" : "violated") << " (" << report.checks << " checks, " << report.evaluator << " evaluator)\n";
                        print_violations(o, report.violations);
                    }
                    return report.ok ? exit_ok : exit_negative;
                }
                if (*czones) {
                    auto z = assign_zones(ev, bags, c_small);
                    if (ctx.json_out)
                        ctx.emit(to_json(z));
                    else
                        for (size_t k = 0; k < z.zones.size(); ++k)
                            o << "Z_" << k << "+1/2: " << join(z.zones[k].members())
                              << (k < z.reason.size() && ! z.reason[k].empty() ? "  (" + z.reason[k] + ")" : string()) << "\n";
                    return exit_ok;
                }
                if (*cmerge) {
                    auto m = merge_bags(ev, NearBagChain{bags, cc, ca}, cc);
                    if (ctx.json_out)
                        ctx.emit(json{{"bags", bags_to_json(m.chain.bags)}, {"omegas", m.omegas}, {"first_input", m.first_input},
                            {"c", m.chain.c}, {"a", m.chain.a}});
                    else {
                        o << "(" << m.chain.c << "," << m.chain.a << ")-near-bag-chain of " << m.chain.bags.size() << " bags\n";
                        for (size_t l = 0; l < m.chain.bags.size(); ++l)
                            o << "bag " << l + 1 << " (omega " << m.omegas[l] << "): " << join(m.chain.bags[l].members()) << "\n";
                    }
                    return exit_ok;
                }
                DichotomyOptions dopt;
                dopt.relaxed = relaxed;
                auto r = chain_dichotomy(ev, NearBagChain{bags, cc, ca}, mm, c_small, dopt);
                if (ctx.json_out)
                    ctx.emit(to_json(r));
                else {
                    o << "branch: " << to_string(r.kind) << "\n";
                    if (r.kind == DichotomyResult::Kind::ordering)
                        o << "ordering clique number " << r.order_clique << " < " << r.bound << "\norder: " << join(r.order) << "\n";
                    else if (r.kind == DichotomyResult::Kind::embedding)
                        o << "A_" << mm << " copy: " << join(r.embedding) << (r.verified ? " (verified)" : "") << "\n";
                    if (! r.diagnostic.empty())
                        o << r.diagnostic << "\n";
                    if (! r.relaxed_note.empty())
                        o << "note: " << r.relaxed_note << "\n";
                }
                return r.kind == DichotomyResult::Kind::hypothesis_failed ? exit_negative : exit_ok;
            }

            if (*bounds) {
                BoundExpr e;
                string name;
                if (*bf) {
                    e = f_main(bt);
                    name = "f(" + to_string(bt) + ")";
                } else if (*bg) {
                    e = g45(bb);
                    name = "g(" + to_string(bb) + ")";
                } else if (*bq) {
                    if (bs > br)
                        throw UsageError("q needs s <= r");
                    e = q_of(bb, br, bs);
                    name = "q(" + to_string(bb) + "," + to_string(br) + "," + to_string(bs) + ")";
                } else {
                    e = ramsey_upper(bb, bt);
                    name = "R(" + to_string(bb) + "," + to_string(bt) + ")";
                }
                bool consistent = trace_consistent(e);
                if (ctx.json_out)
                    ctx.emit(json{{"name", name}, {"kind", e->value.kind_name()}, {"value", e->value.to_string()},
                        {"trace_nodes", trace_size(e)}, {"trace_consistent", consistent}, {"trace", to_json(e, depth)}});
                else {
                    o << name << " = " << short_value(e->value) << "  [" << e->value.kind_name() << ", " << trace_size(e) << " trace nodes, "
                      << (consistent ? "trace re-evaluates" : "TRACE MISMATCH") << "]\n";
                    print_trace(o, e, 0, depth);
                }
                return consistent ? exit_ok : exit_negative;
            }

            if (*atlas) {
                Atlas store(db);
                if (*aadd) {
                    json added = json::array();
                    for (auto & f : atlas_files) {
                        auto rec = store.upsert(compute_atlas_record(ctx.tournament(f)));
                        added.push_back(to_json(rec));
                        if (! ctx.json_out)
                            o << rec.code << "  n " << rec.n << "  omega " << rec.omega_lower
                              << (rec.omega_exact() ? string() : ".." + to_string(rec.omega_upper)) << "  chi "
                              << (rec.chi ? to_string(*rec.chi) : string("?")) << "  omega_A " << rec.omega_a << "  omega_D " << rec.omega_d << "\n";
                    }
                    if (ctx.json_out)
                        ctx.emit(json{{"records", added}});
                    return exit_ok;
                }
                if (*aget) {
                    string code = file;
                    if (file == "-" || std::filesystem::is_regular_file(file))
                        code = to_hex(canonical_code(ctx.tournament(file)));
                    auto rec = store.get(code);
                    if (ctx.json_out)
                        ctx.emit(rec ? to_json(*rec) : json{{"code", code}, {"found", false}});
                    else if (rec)
                        o << to_json(*rec).dump(2) << "\n";
                    else
                        o << "absent: " << code << "\n";
                    return rec ? exit_ok : exit_negative;
                }
                if (*alist) {
                    json all = json::array();
                    for (auto & r : store.records()) {
                        all.push_back(to_json(r));
                        if (! ctx.json_out)
                            o << r.code << "  n " << r.n << "  omega " << r.omega_lower << ".." << r.omega_upper << "\n";
                    }
                    if (ctx.json_out)
                        ctx.emit(json{{"records", all}});
                    return exit_ok;
                }
                if (*acompact) {
                    auto moved = store.quarantined().size();
                    auto dropped = store.compact();
                    o << "dropped " << dropped << " superseded records, quarantined " << moved << " corrupt spans\n";
                    return exit_ok;
                }
                (void)averify;
                long problems = 0;
                for (auto & span : store.quarantined()) {
                    ++problems;
                    o << "corrupt span at " << span.offset << " (" << span.length << " bytes): " << span.reason << "\n";
                }
                for (auto & r : store.records()) {
                    try {
                        validate_record(r);
                        auto t = parse_trn(r.trn);
                        if (to_hex(canonical_code(t)) != r.code)
                            throw InvalidInput("stored tournament has a different canonical code");
                    } catch (const std::exception & e) {
                        ++problems;
                        o << r.code << ": " << e.what() << "\n";
                    }
                }
                o << store.records().size() << " records, " << problems << " problems\n";
                return problems ? exit_negative : exit_ok;
            }

            if (*suite) {
                auto report = run_lemma_suite(LemmaSuiteOptions{*seed, max_n, scale});
                if (ctx.json_out)
                    ctx.emit(to_json(report));
                else
                    for (auto & r : report.properties)
                        print_property(o, r);
                return report.ok() ? exit_ok : exit_negative;
            }
        } catch (const UsageError & e) {
            err << "tclique: " << e.what() << "\n";
            return exit_usage;
        } catch (const InvalidInput & e) {
            err << "tclique: invalid input: " << e.what() << "\n";
            return exit_usage;
        } catch (const BudgetExceeded & e) {
            err << "tclique: budget exceeded: " << e.what() << "\n";
            return exit_budget;
        } catch (const SizeLimitExceeded & e) {
            err << "tclique: size limit: " << e.what() << "\n";
            return exit_budget;
        }
        return exit_usage;
    }
}
