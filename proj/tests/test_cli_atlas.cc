#include <tclique/atlas.hh>
#include <tclique/canonical.hh>
#include <tclique/cli.hh>
#include <tclique/constructions.hh>
#include <tclique/errors.hh>
#include <tclique/trn_io.hh>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

using namespace tclique;
namespace fs = std::filesystem;

namespace
{
    struct Scratch
    {
        fs::path dir;

        Scratch()
        {
            auto base = fs::temp_directory_path() / ("tclique-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
            fs::create_directories(base);
            dir = base;
        }
        ~Scratch() { fs::remove_all(dir); }

        static auto counter() -> int &
        {
            static int c = 0;
            return c;
        }

        auto write(const std::string & name, const std::string & text) const -> std::string
        {
            auto p = dir / name;
            std::ofstream(p) << text;
            return p.string();
        }
    };

    struct Run
    {
        int code;
        std::string out, err;
    };

    auto cli(std::vector<std::string> args, const std::string & input = "") -> Run
    {
        args.insert(args.begin(), "tclique");
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run(args, in, out, err);
        return {code, out.str(), err.str()};
    }
}

TEST(Cli, OmegaOfD3)
{
    Scratch s;
    auto d3 = s.write("d3.trn", format_trn(build_D(3).tournament));
    auto r = cli({"omega", d3});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("omega = 2"), std::string::npos);
    auto j = nlohmann::json::parse(cli({"--json", "omega", d3}).out);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("value"), 2);
}

TEST(Cli, ContainsNegativeResult)
{
    Scratch s;
    auto a3 = s.write("a3.trn", format_trn(build_A(3).tournament));
    auto d3 = s.write("d3.trn", format_trn(build_D(3).tournament));
    auto r = cli({"contains", "--host", a3, "--pattern", d3});
    EXPECT_EQ(r.code, exit_negative);
    EXPECT_EQ(r.out, "not found\n");
    EXPECT_EQ(cli({"contains", "--host", d3, "--pattern", a3}).code, exit_negative);
    EXPECT_EQ(cli({"contains", "--host", d3, "--pattern", d3}).code, exit_ok);
}

TEST(Cli, BudgetExit)
{
    auto d4 = cli({"gen", "--family", "D", "--n", "4"});
    ASSERT_EQ(d4.code, exit_ok);
    EXPECT_EQ(cli({"omega", "-", "--budget", "0", "--exact-limit", "15"}, d4.out).code, exit_budget);
    EXPECT_EQ(cli({"omega", "-"}, d4.out).code, exit_budget);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(cli({}).code, exit_usage);
    EXPECT_EQ(cli({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(cli({"gen", "--family", "random", "--n", "5"}).code, exit_usage);
    EXPECT_EQ(cli({"lemma-suite"}).code, exit_usage);
    EXPECT_EQ(cli({"omega", "/nonexistent/file.trn"}).code, exit_usage);
    EXPECT_EQ(cli({"omega", "-"}, "3\n011\n001\n100\n").code, exit_usage);
    EXPECT_EQ(cli({"--help"}).code, exit_ok);
}

TEST(Cli, GenIsDeterministic)
{
    auto a = cli({"gen", "--family", "random", "--n", "9", "--seed", "5"});
    auto b = cli({"gen", "--family", "random", "--n", "9", "--seed", "5"});
    EXPECT_EQ(a.code, exit_ok);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(parse_trn(a.out), random_tournament(9, 5));
    auto labelled = cli({"gen", "--family", "A", "--n", "3", "--labels"});
    EXPECT_EQ(parse_trn(labelled.out), build_A(3).tournament);
    EXPECT_NE(labelled.out.find("# 0 "), std::string::npos);
}

TEST(Cli, ChiAndMountain)
{
    auto c3 = cli({"gen", "--family", "D", "--n", "2"}).out;
    auto chi = cli({"chi", "-"}, c3);
    EXPECT_EQ(chi.code, exit_ok);
    EXPECT_NE(chi.out.find("chi = 2"), std::string::npos);
    EXPECT_EQ(cli({"mountain", "-", "--r", "1", "--s", "2"}, c3).code, exit_ok);
    auto flat = cli({"gen", "--family", "transitive", "--n", "5"}).out;
    EXPECT_EQ(cli({"mountain", "-", "--r", "1", "--s", "2"}, flat).code, exit_negative);
}

TEST(Cli, ChainCommands)
{
    Scratch s;
    auto t = s.write("t.trn", format_trn(transitive_tournament(6)));
    auto bags = s.write("b.txt", "0 1\n2 3\n4 5\n");
    auto back = s.write("r.txt", "4 5\n2 3\n0 1\n");
    EXPECT_EQ(cli({"chain", "verify", t, bags, "--c", "1", "--a", "1"}).code, exit_ok);
    EXPECT_EQ(cli({"chain", "verify", t, back, "--c", "1", "--a", "1"}).code, exit_negative);
    EXPECT_EQ(cli({"chain", "zones", t, bags, "--c-small", "1"}).code, exit_ok);
    EXPECT_EQ(cli({"chain", "merge", t, bags, "--c", "1"}).code, exit_ok);
    auto d = cli({"chain", "dichotomy", t, bags, "--m", "2", "--c", "1", "--a", "0", "--c-small", "1"});
    EXPECT_EQ(d.code, exit_ok);
    EXPECT_NE(d.out.find("branch: ordering"), std::string::npos);
    EXPECT_EQ(cli({"chain", "verify", t, bags, "--c", "1", "--a", "1", "--evaluator", "bounds"}).code, exit_usage);
    EXPECT_EQ(cli({"chain", "verify", t, bags, "--c", "1", "--a", "1", "--evaluator", "bounds", "--seed", "3"}).code, exit_ok);
}

TEST(Cli, Bounds)
{
    auto f = cli({"bounds", "f", "--t", "1"});
    EXPECT_EQ(f.code, exit_ok);
    EXPECT_EQ(f.out.rfind("f(1) = 0", 0), 0U);
    auto r = cli({"--json", "bounds", "ramsey", "--s", "3", "--t", "3"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("value"), "6");
    EXPECT_TRUE(j.at("trace_consistent").get<bool>());
    EXPECT_EQ(cli({"bounds", "q", "--b", "1", "--r", "1", "--s", "2"}).code, exit_usage);
}

TEST(Cli, AuditsAndSuite)
{
    EXPECT_EQ(cli({"mountain-audit", "--seed", "3", "--cases", "10", "--max-n", "7"}).code, exit_ok);
    auto r = cli({"--json", "lemma-suite", "--seed", "2", "--scale", "0.2"});
    EXPECT_EQ(r.code, exit_ok);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("ok").get<bool>());
    EXPECT_EQ(j.at("schema"), 1);
}

TEST(Atlas, RoundTripAndRestart)
{
    Scratch s;
    auto path = (s.dir / "atlas.db").string();
    auto rec = compute_atlas_record(build_D(3).tournament);
    EXPECT_EQ(rec.omega_lower, 2);
    EXPECT_EQ(rec.omega_d, 3);
    EXPECT_EQ(rec.omega_a, 2);
    ASSERT_TRUE(rec.chi.has_value());
    EXPECT_EQ(*rec.chi, 3);
    AtlasRecord stored;
    {
        Atlas atlas(path);
        stored = atlas.upsert(rec);
        auto got = atlas.get(rec.code);
        ASSERT_TRUE(got.has_value());
        EXPECT_EQ(*got, stored);
        EXPECT_FALSE(atlas.get("00ff").has_value());
    }
    Atlas reopened(path);
    auto again = reopened.get(rec.code);
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(*again, stored);
    EXPECT_EQ(parse_trn(again->trn), build_D(3).tournament);
}

TEST(Atlas, UpsertKeepsCreatedAndCompacts)
{
    Scratch s;
    auto path = (s.dir / "atlas.db").string();
    Atlas atlas(path);
    auto rec = compute_atlas_record(transitive_tournament(4));
    rec.created = 5;
    auto first = atlas.upsert(rec);
    EXPECT_EQ(first.created, 5);
    rec.created = 99;
    auto second = atlas.upsert(rec);
    EXPECT_EQ(second.created, 5);
    EXPECT_EQ(atlas.records().size(), 1U);
    EXPECT_EQ(atlas.compact(), 1);
    EXPECT_EQ(atlas.records().size(), 1U);
}

TEST(Atlas, InvalidRecordRejected)
{
    Scratch s;
    Atlas atlas((s.dir / "atlas.db").string());
    auto rec = compute_atlas_record(transitive_tournament(3));
    rec.omega_lower = 3;
    rec.chi = 1;
    rec.omega_upper = 3;
    EXPECT_THROW(atlas.upsert(rec), InvalidInput);
}

TEST(Atlas, CorruptionIsQuarantined)
{
    Scratch s;
    auto path = (s.dir / "atlas.db").string();
    std::string code_a, code_b;
    {
        Atlas atlas(path);
        code_a = atlas.upsert(compute_atlas_record(build_D(2).tournament)).code;
        code_b = atlas.upsert(compute_atlas_record(transitive_tournament(5))).code;
    }
    {
        // flip one payload byte of the first frame
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(20);
        f.put('#');
    }
    Atlas atlas(path);
    EXPECT_FALSE(atlas.get(code_a).has_value());
    EXPECT_TRUE(atlas.get(code_b).has_value());
    ASSERT_EQ(atlas.quarantined().size(), 1U);
    EXPECT_EQ(atlas.quarantined()[0].offset, 0U);
    EXPECT_EQ(atlas.quarantined()[0].reason, "checksum mismatch");
    atlas.compact();
    EXPECT_TRUE(fs::exists(path + ".quarantine"));
    EXPECT_TRUE(atlas.quarantined().empty());
    EXPECT_TRUE(atlas.get(code_b).has_value());
}

TEST(Atlas, TornTailIgnored)
{
    Scratch s;
    auto path = (s.dir / "atlas.db").string();
    std::string code;
    {
        Atlas atlas(path);
        code = atlas.upsert(compute_atlas_record(build_D(2).tournament)).code;
    }
    auto frame = atlas_frame(to_json(compute_atlas_record(transitive_tournament(3))).dump());
    std::ofstream(path, std::ios::app | std::ios::binary) << frame.substr(0, frame.size() / 2);
    Atlas atlas(path);
    EXPECT_TRUE(atlas.get(code).has_value());
    EXPECT_TRUE(atlas.quarantined().empty());
    EXPECT_EQ(atlas.records().size(), 1U);
}

TEST(Atlas, TwoProcessesWriteDistinctCodes)
{
    Scratch s;
    auto path = (s.dir / "atlas.db").string();
    std::vector<pid_t> children;
    for (int child = 0; child < 2; ++child) {
        pid_t pid = ::fork();
        ASSERT_GE(pid, 0);
        if (pid == 0) {
            int status = 0;
            try {
                Atlas atlas(path);
                for (int i = 0; i < 10; ++i)
                    atlas.upsert(compute_atlas_record(random_tournament(6, static_cast<std::uint64_t>(child * 100 + i))));
            } catch (...) {
                status = 1;
            }
            ::_exit(status);
        }
        children.push_back(pid);
    }
    for (auto pid : children) {
        int status = 0;
        ::waitpid(pid, &status, 0);
        EXPECT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);
    }
    Atlas atlas(path);
    EXPECT_TRUE(atlas.quarantined().empty());
    for (int child = 0; child < 2; ++child)
        for (int i = 0; i < 10; ++i) {
            auto code = to_hex(canonical_code(random_tournament(6, static_cast<std::uint64_t>(child * 100 + i))));
            EXPECT_TRUE(atlas.get(code).has_value()) << child << " " << i;
        }
}

TEST(Cli, AtlasCommands)
{
    Scratch s;
    auto db = (s.dir / "cli.db").string();
    auto d3 = s.write("d3.trn", format_trn(build_D(3).tournament));
    EXPECT_EQ(cli({"atlas", "--db", db, "add", d3}).code, exit_ok);
    EXPECT_EQ(cli({"atlas", "--db", db, "get", d3}).code, exit_ok);
    EXPECT_EQ(cli({"atlas", "--db", db, "get", "abcdef"}).code, exit_negative);
    EXPECT_EQ(cli({"atlas", "--db", db, "verify"}).code, exit_ok);
    EXPECT_EQ(cli({"atlas", "--db", db, "list"}).code, exit_ok);
    EXPECT_EQ(cli({"atlas", "--db", db, "compact"}).code, exit_ok);
}
