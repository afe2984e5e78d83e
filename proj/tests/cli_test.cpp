#include "cli.hpp"

#include "distmagic/graph.hpp"
#include "distmagic/magic.hpp"

#include "golden.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace distmagic;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult dmagic(std::vector<std::string> args) {
    args.insert(args.begin(), "dmagic");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("dmagic_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name), std::ios::binary) << text;
        return path(name);
    }

    static std::string read(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    fs::path dir_;
};

std::string golden_table16() {
    std::ostringstream out;
    out << "16 16 514\n";
    for (const auto& row : golden::kC16xC16) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_F(CliTest, Table16IsByteExact) {
    const CliResult r = dmagic({"table16"});
    EXPECT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out, golden_table16());
    const CliResult file = dmagic({"table16", "--out", path("t.txt")});
    EXPECT_EQ(file.status, cli::kOk);
    EXPECT_EQ(read(path("t.txt")), golden_table16());
}

TEST_F(CliTest, Table16RowZeroFirst) {
    const CliResult r = dmagic({"table16", "--row0-first"});
    ASSERT_EQ(r.status, cli::kOk);
    const std::string second_line = r.out.substr(r.out.find('\n') + 1, r.out.find('\n', 10) - r.out.find('\n') - 1);
    EXPECT_EQ(second_line, "1 65 255 191 3 67 253 189 4 68 254 190 2 66 256 192");
}

TEST_F(CliTest, Classify) {
    CliResult r = dmagic({"classify", "direct", "6", "6"});
    EXPECT_EQ(r.status, cli::kNegative);
    EXPECT_EQ(r.out, "not_distance_magic\n");
    r = dmagic({"classify", "direct", "8", "12"});
    EXPECT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out, "distance_magic_not_balanced\n");
    r = dmagic({"classify", "direct", "4", "7"});
    EXPECT_EQ(r.out, "balanced_distance_magic\n");
    r = dmagic({"classify", "cartesian", "6", "6"});
    EXPECT_EQ(r.out, "distance_magic\n");
    r = dmagic({"classify", "cycle", "5"});
    EXPECT_EQ(r.status, cli::kNegative);
    r = dmagic({"classify", "lex", "5", "4"});
    EXPECT_EQ(r.status, cli::kOk);
    r = dmagic({"classify", "direct", "6"});
    EXPECT_EQ(r.status, cli::kInputError);
    r = dmagic({"classify", "strong", "6", "6"});
    EXPECT_EQ(r.status, cli::kInputError);
}

TEST_F(CliTest, SearchEdgeListFile) {
    const std::string c4 = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    const CliResult r = dmagic({"search", c4});
    EXPECT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out.substr(0, 10), "found k=5\n");
    const CliResult none = dmagic({"search", "cycle:5"});
    EXPECT_EQ(none.status, cli::kNegative);
    EXPECT_EQ(none.out.substr(0, 15), "exhausted_none\n");
    const CliResult budget = dmagic({"search", "cycle:9", "--budget", "3"});
    EXPECT_EQ(budget.status, cli::kNegative);
    EXPECT_EQ(budget.out.substr(0, 16), "budget_exceeded\n");
}

TEST_F(CliTest, MalformedInputsReportLines) {
    const std::string dup = write("dup.txt", "3 2\n0 1\n0 1\n");
    CliResult r = dmagic({"search", dup});
    EXPECT_EQ(r.status, cli::kInputError);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;

    const std::string g = write("g.txt", "2 1\n0 1\n");
    const std::string bad = write("l.txt", "0 1\n1 1\n");
    r = dmagic({"verify", g, bad});
    EXPECT_EQ(r.status, cli::kInputError);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

    r = dmagic({"verify", path("missing.txt"), bad});
    EXPECT_EQ(r.status, cli::kInputError);
    r = dmagic({"bogus"});
    EXPECT_EQ(r.status, cli::kInputError);
    r = dmagic({"construct", "--kind", "cycle-product", "--m", "6", "--n", "8"});
    EXPECT_EQ(r.status, cli::kInputError);
    EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, VerifyOutputs) {
    const std::string l = write("l.txt", "0 1\n1 2\n2 4\n3 3\n");
    CliResult r = dmagic({"verify", "cycle:4", l});
    EXPECT_EQ(r.status, cli::kOk);
    EXPECT_NE(r.out.find("distance_magic=true\nmagic_constant=5\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("balanced=true\n"), std::string::npos);
    r = dmagic({"verify", "cycle:4", l, "--human"});
    EXPECT_NE(r.out.find("distance magic: yes, k = 5"), std::string::npos) << r.out;
    const std::string id = write("id.txt", "0 1\n1 2\n2 3\n3 4\n");
    r = dmagic({"verify", "cycle:4", id});
    EXPECT_EQ(r.status, cli::kNegative);
    EXPECT_NE(r.out.find("distance_magic=false\n"), std::string::npos);
}

// Every construction written to disk and read back through verify.
TEST_F(CliTest, ConstructRoundTrips) {
    struct Case {
        std::vector<std::string> args;
        std::string k;
        bool balanced;
    };
    const std::vector<Case> cases{
        {{"--kind", "c4"}, "5", true},
        {{"--kind", "complete-bipartite", "--n", "2"}, "18", true},
        {{"--kind", "complete-minus-matching", "--n", "3"}, "14", true},
        {{"--kind", "lexicographic", "--regular", "cycle:3", "--balanced", "c4"}, "65", true},
        {{"--kind", "lexicographic", "--regular", "cycle:4", "--balanced", "empty:2"}, "18", true},
        {{"--kind", "direct", "--regular", "cycle:3", "--balanced", "c4"}, "26", true},
        {{"--kind", "direct", "--regular", "cycle:5", "--balanced", "c4", "--balanced-first"}, "42", true},
        {{"--kind", "direct", "--regular", "cycle:4", "--balanced", "complete-bipartite:2"}, "132", true},
        {{"--kind", "cycle-product", "--m", "8", "--n", "12", "--format", "list"}, "194", false},
    };
    for (const auto& c : cases) {
        std::vector<std::string> args{"construct"};
        args.insert(args.end(), c.args.begin(), c.args.end());
        args.insert(args.end(), {"--out", path("labels.txt"), "--graph-out", path("graph.txt")});
        const CliResult made = dmagic(args);
        ASSERT_EQ(made.status, cli::kOk) << made.err;
        const CliResult v = dmagic({"verify", path("graph.txt"), path("labels.txt")});
        EXPECT_EQ(v.status, cli::kOk) << c.args[1];
        EXPECT_NE(v.out.find("magic_constant=" + c.k + "\n"), std::string::npos) << c.args[1] << "\n" << v.out;
        EXPECT_NE(v.out.find(std::string("balanced=") + (c.balanced ? "true" : "false")), std::string::npos);
    }
}

TEST_F(CliTest, ConstructFromFiles) {
    const std::string hg = write("h.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n");
    const std::string hl = write("hl.txt", "0 1\n1 2\n2 4\n3 3\n");
    const CliResult r = dmagic({"construct", "--kind", "direct", "--regular", "cycle:4", "--balanced-graph", hg,
                          "--balanced-labels", hl, "--out", path("l.txt"), "--graph-out", path("g.txt")});
    ASSERT_EQ(r.status, cli::kOk) << r.err;
    const CliResult v = dmagic({"verify", path("g.txt"), path("l.txt")});
    EXPECT_NE(v.out.find("magic_constant=34\n"), std::string::npos);
    const CliResult missing = dmagic({"construct", "--kind", "direct", "--regular", "cycle:4", "--balanced-graph", hg});
    EXPECT_EQ(missing.status, cli::kInputError);
}

TEST_F(CliTest, ConstructGridHeader) {
    const CliResult r = dmagic({"construct", "--kind", "cycle-product", "--m", "8", "--n", "8"});
    ASSERT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out.substr(0, 8), "8 8 130\n");
    const CliResult t = dmagic({"construct", "--kind", "cycle-product", "--m", "16", "--n", "16"});
    EXPECT_EQ(t.out, golden_table16());
}

TEST_F(CliTest, Product) {
    const CliResult r = dmagic({"product", "--kind", "direct", "path:2", "path:2"});
    ASSERT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out, "4 2\n0 3\n1 2\n");
    const CliResult lex = dmagic({"product", "--kind", "lex", "cycle:4", "empty:3", "--out", path("p.txt")});
    ASSERT_EQ(lex.status, cli::kOk);
    const Graph g = parse_edge_list(read(path("p.txt")));
    EXPECT_EQ(g.order(), 12u);
    EXPECT_EQ(regularity(g), 6u);
}

TEST_F(CliTest, Eit) {
    const std::string l = write("l.txt", "0 1\n1 2\n2 4\n3 3\n");
    const CliResult r = dmagic({"eit", "cycle:4", l});
    ASSERT_EQ(r.status, cli::kOk);
    EXPECT_EQ(r.out.substr(0, 17), "EIT(4,2) total=5\n");
    const CliResult bad = dmagic({"eit", "path:3", write("p.txt", "0 1\n1 3\n2 2\n")});
    EXPECT_EQ(bad.status, cli::kInputError);
}

TEST_F(CliTest, Couple) {
    ASSERT_EQ(dmagic({"construct", "--kind", "direct", "--regular", "cycle:5", "--balanced", "c4", "--balanced-first",
                      "--out", path("l.txt")})
                  .status,
              cli::kOk);
    for (const char* seed : {"0", "1", "7", "123"}) {
        const CliResult r = dmagic({"couple", "--first", "cycle:4", "--second", "cycle:5", path("l.txt"), "--seed", seed});
        ASSERT_EQ(r.status, cli::kOk) << r.err;
        EXPECT_NE(r.out.find("factor_balanced=true\n"), std::string::npos) << r.out;
        EXPECT_NE(r.out.find("factor_magic_constant=5\n"), std::string::npos) << r.out;
    }
    ASSERT_EQ(dmagic({"construct", "--kind", "lexicographic", "--regular", "cycle:3", "--balanced", "c4", "--out",
                      path("lex.txt")})
                  .status,
              cli::kOk);
    const CliResult lex =
        dmagic({"couple", "--kind", "lexicographic", "--first", "cycle:3", "--second", "cycle:4", path("lex.txt")});
    EXPECT_EQ(lex.status, cli::kOk) << lex.err;
    EXPECT_NE(lex.out.find("factor=second\n"), std::string::npos);
    const CliResult wrong = dmagic({"couple", "--first", "cycle:5", "--second", "cycle:4", path("l.txt")});
    EXPECT_EQ(wrong.status, cli::kInputError);
}

TEST_F(CliTest, Deterministic) {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {"table16"}, {"search", "path:3"}, {"classify", "direct", "8", "8"}, {"product", "--kind", "direct", "cycle:3", "cycle:4"}}) {
        const CliResult a = dmagic(args);
        const CliResult b = dmagic(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.status, b.status);
    }
}
