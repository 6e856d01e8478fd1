// mcsp: command-line front end for the solver library.
//
// Exit codes: 0 success, 1 solve answered NO, 2 bad input or refused.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "mcsp/brute_force.hpp"
#include "mcsp/bulatov.hpp"
#include "mcsp/consistency.hpp"
#include "mcsp/error.hpp"
#include "mcsp/fixtures.hpp"
#include "mcsp/identities.hpp"
#include "mcsp/json_io.hpp"
#include "mcsp/maltsev.hpp"
#include "mcsp/semilattice_digraph.hpp"

namespace {

using namespace mcsp;

constexpr int exit_ok = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

std::string read_input(const std::string & path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (! in)
        fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A file path, "-", or literal JSON starting with '{'.
Json load_json(const std::string & arg)
{
    if (! arg.empty() && arg.front() == '{')
        return parse_json(arg);
    return parse_json(read_input(arg));
}

void emit(const Json & j)
{
    std::cout << j.dump(2) << '\n';
}

// --dot when given; else the fixture's own dot when "algebra" names a
// fixture; else dot(x0,x1) if the algebra has a binary "dot".
Term resolve_dot(const std::string & dot_arg, const Json & doc, const FiniteAlgebra & alg)
{
    if (! dot_arg.empty())
        return term_from_json(load_json(dot_arg));
    if (doc.contains("dot"))
        return term_from_json(doc.at("dot"));
    if (doc.contains("algebra") && doc.at("algebra").is_string())
        return fixtures::algebra_fixture(doc.at("algebra").get<std::string>()).dot;
    if (auto i = alg.signature().find("dot"); i && alg.signature()[*i].arity == 2)
        return reduct_dot_term();
    fail(ErrorCode::PreconditionFailed, "no --dot given and the algebra has no binary operation named 'dot'");
}

FiniteAlgebra load_algebra(const std::string & arg, Term * fixture_dot)
{
    if (! arg.empty() && arg.front() != '{' && arg != "-" && ! std::ifstream(arg)) {
        auto f = fixtures::algebra_fixture(arg);
        if (fixture_dot)
            *fixture_dot = f.dot;
        return *f.algebra;
    }
    return algebra_from_json(load_json(arg));
}

struct Options {
    std::string input;
    std::string dot;
    std::string block_solver = "brute";
    std::string dot_export;
    std::string fixture;
    std::string family;
    bool trace = false;
    bool debug_audit = false;
    bool stats = false;
    std::uint64_t seed = 1;
    std::size_t variables = 4;
    std::size_t constraints = 4;
};

int cmd_consistency(const Options & o)
{
    const auto raw = raw_instance_from_json(load_json(o.input));
    ConsistencyStats stats;
    const auto inst = two_three_consistency(raw, &stats);
    if (o.stats)
        std::cerr << "deletions " << stats.deletions << ", sweeps " << stats.sweeps << '\n';
    emit(instance_to_json(inst));
    return exit_ok;
}

int cmd_bulatov(const Options & o)
{
    const auto doc = load_json(o.input);
    const auto inst = instance_from_json(doc);
    const auto dot = resolve_dot(o.dot, doc, inst.algebra());
    const auto result = bulatov_solution(inst, dot, BulatovOptions{o.debug_audit});
    Json out;
    out["assignment"] = assignment_to_json(inst.variables(), result.assignment);
    if (o.trace)
        out["trace"] = trace_to_json(result.trace, inst.variables());
    emit(out);
    return exit_ok;
}

int cmd_solve(const Options & o)
{
    if (o.block_solver != "brute")
        fail(ErrorCode::PreconditionFailed, "unknown block solver '" + o.block_solver + "'");
    const auto doc = load_json(o.input);
    const auto inst = instance_from_json(doc);
    const auto dot = resolve_dot(o.dot, doc, inst.algebra());
    const auto solver = default_block_solver();
    const auto result = main_solve(inst, dot, *solver, SolveOptions{o.debug_audit, o.trace});
    auto out = solve_result_to_json(result, inst.variables());
    if (o.trace && result.trace)
        out["quotient_trace"] = trace_to_json(*result.trace, inst.variables());
    emit(out);
    return result.solvable ? exit_ok : exit_no;
}

int cmd_check_algebra(const Options & o)
{
    Term fixture_dot = reduct_dot_term();
    const auto alg = load_algebra(o.input, &fixture_dot);
    Term dot = o.dot.empty() ? fixture_dot : term_from_json(load_json(o.dot));
    auto out = hypothesis_report_to_json(hypothesis_check(alg, dot));
    out["two_semilattice"] = is_two_semilattice(alg, dot);
    emit(out);
    if (! o.dot_export.empty()) {
        const auto t = binary_table(alg, dot);
        const auto g = arrow_digraph(t, ElementSet::full(alg.size()));
        std::vector<std::string> labels;
        for (std::size_t e = 0; e < alg.size(); ++e)
            labels.push_back(std::to_string(e));
        std::ofstream file(o.dot_export);
        if (! file)
            fail(ErrorCode::ParseError, "cannot write '" + o.dot_export + "'");
        file << to_dot(g, labels, "arrows");
    }
    return exit_ok;
}

int cmd_demo(const Options & o)
{
    if (o.input != "counterexample")
        fail(ErrorCode::UnknownFixture, "unknown demo '" + o.input + "'");
    const auto c = build_counterexample();
    const auto oracle = brute_force_solve(c.instance);
    const auto result = main_solve(c.instance, c.dot, *default_block_solver(), SolveOptions{o.debug_audit, false});
    Json out;
    out["oracle"] = Json{{"solvable", oracle.has_value()},
        {"witness", oracle ? assignment_to_json(c.instance.variables(), *oracle) : Json(nullptr)}};
    out["algorithm"] = solve_result_to_json(result, c.instance.variables());
    out["quotient_solution"] = result.quotient_solution ? assignment_to_json(c.instance.variables(), *result.quotient_solution)
                                                        : Json(nullptr);
    out["disagree"] = oracle.has_value() != result.solvable;
    emit(out);
    return exit_ok;
}

int cmd_fixtures(const std::string & action, const Options & o)
{
    if (action == "list") {
        Json algebras = Json::array();
        for (const auto & f : fixtures::all_algebra_fixtures())
            algebras.push_back(Json{{"name", f.name}, {"size", f.algebra->size()}, {"description", f.description},
                {"two_semilattice", f.two_semilattice}});
        Json instances = Json::array();
        for (const auto & name : fixtures::instance_names())
            instances.push_back(name);
        emit(Json{{"algebras", algebras}, {"instances", instances}});
    } else if (action == "show") {
        const auto f = fixtures::algebra_fixture(o.fixture);
        emit(Json{{"name", f.name}, {"description", f.description}, {"algebra", algebra_to_json(*f.algebra)},
            {"dot", term_to_json(f.dot)}});
    } else if (action == "instance") {
        const auto f = fixtures::instance_fixture(o.fixture);
        auto j = instance_to_json(f.instance);
        j["dot"] = term_to_json(f.dot);
        emit(j);
    } else if (action == "random") {
        const auto f = fixtures::algebra_fixture(o.fixture);
        std::mt19937_64 rng(o.seed);
        fixtures::RawShape shape;
        shape.variables = o.variables;
        shape.binary_constraints = o.constraints;
        emit(instance_to_json(fixtures::random_standard_instance(f.algebra, shape, rng), f.name));
    } else {
        fail(ErrorCode::UnknownFixture, "unknown fixtures action '" + action + "'");
    }
    return exit_ok;
}

void report(const std::string & code, const std::string & message)
{
    std::cerr << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Decide binary CSPs over finite idempotent algebras"};
    app.require_subcommand(1);
    Options o;
    std::string fixtures_action;

    auto * consistency = app.add_subcommand("consistency", "(2,3)-consistency of a raw instance; prints the standard instance");
    consistency->add_option("raw", o.input, "raw instance JSON file, or - for stdin")->required();
    consistency->add_flag("--stats", o.stats, "print deletion and sweep counts to stderr");

    auto * bulatov = app.add_subcommand("bulatov", "find a Bulatov solution of a standard instance over a 2-semilattice");
    bulatov->add_option("instance", o.input, "instance JSON file, or -")->required();
    bulatov->add_option("--dot", o.dot, "term JSON (file or literal)");
    bulatov->add_flag("--trace", o.trace, "include the reduction trace");
    bulatov->add_flag("--debug-audit", o.debug_audit, "re-validate every intermediate instance");

    auto * solve = app.add_subcommand("solve", "decide a standard instance");
    solve->add_option("instance", o.input, "instance JSON file, or -")->required();
    solve->add_option("--dot", o.dot, "term JSON (file or literal)");
    solve->add_option("--block-solver", o.block_solver, "block solver")->check(CLI::IsMember({"brute"}));
    solve->add_flag("--trace", o.trace, "include the quotient reduction trace");
    solve->add_flag("--debug-audit", o.debug_audit, "paranoid re-validation");

    auto * check = app.add_subcommand("check-algebra", "report the solver hypotheses for an algebra and dot term");
    check->add_option("algebra", o.input, "algebra JSON file, literal, or built-in name")->required();
    check->add_option("--dot", o.dot, "term JSON (file or literal)");
    check->add_option("--dot-export", o.dot_export, "write the arrow digraph in DOT format to this file");

    auto * demo = app.add_subcommand("demo", "canned demonstrations");
    demo->add_option("name", o.input, "demo name (counterexample)")->required();
    demo->add_flag("--debug-audit", o.debug_audit, "paranoid re-validation");

    auto * fixtures_cmd = app.add_subcommand("fixtures", "built-in algebras and instances");
    fixtures_cmd->add_option("action", fixtures_action, "list | show | instance | random")->required();
    fixtures_cmd->add_option("name", o.fixture, "fixture name");
    fixtures_cmd->add_option("--seed", o.seed, "seed for 'random'");
    fixtures_cmd->add_option("--variables", o.variables, "variables for 'random'");
    fixtures_cmd->add_option("--constraints", o.constraints, "binary constraints for 'random'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        report("usage", e.what());
        return exit_error;
    }

    try {
        if (consistency->parsed())
            return cmd_consistency(o);
        if (bulatov->parsed())
            return cmd_bulatov(o);
        if (solve->parsed())
            return cmd_solve(o);
        if (check->parsed())
            return cmd_check_algebra(o);
        if (demo->parsed())
            return cmd_demo(o);
        return cmd_fixtures(fixtures_action, o);
    } catch (const Error & e) {
        report(std::string(to_string(e.code())), e.what());
    } catch (const std::exception & e) {
        report("internal", e.what());
    }
    return exit_error;
}
