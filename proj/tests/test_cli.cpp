#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path & p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("mcsp_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string & args)
{
    const auto out = scratch() / "stdout", err = scratch() / "stderr";
    const std::string cmd = std::string(MCSP_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string & name, const std::string & text)
{
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

nlohmann::json json_of(const std::string & text) { return nlohmann::json::parse(text); }

} // namespace

TEST(Cli, FixturesList)
{
    const auto r = run("fixtures list");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    std::vector<std::string> names;
    for (const auto & a : j.at("algebras"))
        names.push_back(a.at("name"));
    for (const char * expected : {"meet2", "chain3", "rps", "counterexample", "family_rps"})
        EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
}

TEST(Cli, DemoCounterexample)
{
    const auto r = run("demo counterexample");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("oracle").at("solvable"), true);
    EXPECT_EQ(j.at("oracle").at("witness"), json_of(R"({"w":0,"x":0,"y":0,"z":0})"));
    EXPECT_EQ(j.at("algorithm").at("solvable"), false);
    EXPECT_EQ(j.at("algorithm").at("unsound_no_possible"), true);
    EXPECT_EQ(j.at("disagree"), true);
}

TEST(Cli, SolveSingletonExitsZero)
{
    const auto inst = write("single.json", R"({"algebra":"meet2","variables":["x","y"],
        "potatoes":{"x":[1],"y":[0]}})");
    const auto r = run("solve " + inst.string());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("solvable"), true);
    EXPECT_EQ(j.at("witness"), json_of(R"({"x":1,"y":0})"));
}

TEST(Cli, SolveNoExitsOne)
{
    const auto f = run("fixtures instance counterexample");
    ASSERT_EQ(f.exit_code, 0) << f.err;
    const auto inst = write("ce.json", f.out);
    const auto r = run("solve " + inst.string() + " --trace");
    EXPECT_EQ(r.exit_code, 1) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("solvable"), false);
    EXPECT_TRUE(j.contains("quotient_trace"));
}

TEST(Cli, BulatovWithTrace)
{
    const auto f = run("fixtures instance meet2_full3");
    ASSERT_EQ(f.exit_code, 0) << f.err;
    const auto inst = write("meet.json", f.out);
    const auto r = run("bulatov " + inst.string() + " --trace --debug-audit");
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("assignment"), json_of(R"({"x":0,"y":0,"z":0})"));
    EXPECT_EQ(j.at("trace").size(), 1U);
}

TEST(Cli, ConsistencyFromStdin)
{
    const auto raw = write("raw.json", R"({"algebra":"meet2","variables":["x","y"],
        "constraints":[{"scope":["x","y"],"relation":[[1,1]]}]})");
    const auto r = run("consistency - --stats < " + raw.string());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("potatoes").at("x"), json_of("[1]"));
    EXPECT_NE(r.err.find("deletions"), std::string::npos);
}

TEST(Cli, CheckAlgebraAndDotExport)
{
    const auto dot_file = scratch() / "arrows.dot";
    const auto r = run("check-algebra counterexample --dot-export " + dot_file.string());
    ASSERT_EQ(r.exit_code, 0) << r.err;
    const auto j = json_of(r.out);
    EXPECT_EQ(j.at("a_theta_congruence"), true);
    EXPECT_EQ(j.at("d_left_commutative"), false);
    EXPECT_NE(slurp(dot_file).find("digraph"), std::string::npos);

    const auto lit = run(R"(check-algebra '{"size":2,"ops":[{"name":"dot","arity":2,"table":[0,0,0,1]}]}')");
    ASSERT_EQ(lit.exit_code, 0) << lit.err;
    EXPECT_EQ(json_of(lit.out).at("two_semilattice"), true);
}

TEST(Cli, ErrorsExitTwoWithCode)
{
    const auto bad = write("bad.json", "{ nope");
    auto r = run("solve " + bad.string());
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(json_of(r.err).at("error"), "parse_error");

    r = run("fixtures show no_such_algebra");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(json_of(r.err).at("error"), "unknown_fixture");

    const auto open = write("open.json", R"({"algebra":"counterexample","variables":["x"],"potatoes":{"x":[1,2,3]}})");
    r = run("solve " + open.string());
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_EQ(json_of(r.err).at("error"), "not_closed");

    r = run("frobnicate");
    EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, OutputIsDeterministic)
{
    const auto a = run("fixtures random rps --seed 9 --variables 5 --constraints 3");
    const auto b = run("fixtures random rps --seed 9 --variables 5 --constraints 3");
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}
