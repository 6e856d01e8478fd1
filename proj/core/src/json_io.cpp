#include "mcsp/json_io.hpp"

#include <map>

#include "mcsp/error.hpp"
#include "mcsp/fixtures.hpp"

namespace mcsp {

namespace {

[[noreturn]] void parse_error(const std::string & what)
{
    fail(ErrorCode::ParseError, what);
}

const Json & field(const Json & j, const char * key)
{
    if (! j.is_object())
        parse_error(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        parse_error(std::string("missing key '") + key + "'");
    return *it;
}

std::size_t as_index(const Json & j, const char * what)
{
    if (! j.is_number_unsigned() && ! (j.is_number_integer() && j.get<long long>() >= 0))
        parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<Element> as_elements(const Json & j, const char * what)
{
    if (! j.is_array())
        parse_error(std::string(what) + " must be an array");
    std::vector<Element> out;
    out.reserve(j.size());
    for (const auto & e : j)
        out.push_back(static_cast<Element>(as_index(e, what)));
    return out;
}

Relation as_relation(const Json & j, const char * what)
{
    if (! j.is_array())
        parse_error(std::string(what) + " must be an array of pairs");
    std::vector<ElementPair> pairs;
    for (const auto & p : j) {
        const auto e = as_elements(p, what);
        if (e.size() != 2)
            parse_error(std::string(what) + " entries must be pairs");
        pairs.emplace_back(e[0], e[1]);
    }
    return Relation(std::move(pairs));
}

Json relation_to_json(const Relation & r)
{
    Json out = Json::array();
    for (auto [a, b] : r)
        out.push_back({a, b});
    return out;
}

Json set_to_json(const ElementSet & s)
{
    return Json(std::vector<Element>(s.begin(), s.end()));
}

std::shared_ptr<const FiniteAlgebra> algebra_field(const Json & j, const AlgebraResolver & resolve)
{
    const auto & a = field(j, "algebra");
    if (a.is_string())
        return resolve(a.get<std::string>());
    return std::make_shared<const FiniteAlgebra>(algebra_from_json(a));
}

std::vector<std::string> variables_field(const Json & j)
{
    const auto & v = field(j, "variables");
    if (! v.is_array())
        parse_error("'variables' must be an array of names");
    std::vector<std::string> out;
    for (const auto & name : v) {
        if (! name.is_string())
            parse_error("variable names must be strings");
        out.push_back(name.get<std::string>());
    }
    return out;
}

std::size_t lookup(const std::vector<std::string> & variables, const std::string & name)
{
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name)
            return i;
    fail(ErrorCode::VariableOutOfRange, "unknown variable '" + name + "'");
}

template <class T>
T wrap(const char * what, const std::function<T()> & body)
{
    try {
        return body();
    } catch (const nlohmann::json::exception & e) {
        parse_error(std::string(what) + ": " + e.what());
    }
}

} // namespace

Json parse_json(const std::string & text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception & e) {
        parse_error(e.what());
    }
}

Json algebra_to_json(const FiniteAlgebra & alg)
{
    Json ops = Json::array();
    for (std::size_t i = 0; i < alg.signature().size(); ++i) {
        const auto & sym = alg.signature()[i];
        ops.push_back(Json{{"name", sym.name}, {"arity", sym.arity}, {"table", alg.table(i)}});
    }
    return Json{{"size", alg.size()}, {"ops", ops}};
}

FiniteAlgebra algebra_from_json(const Json & j)
{
    return wrap<FiniteAlgebra>("algebra", [&] {
        const std::size_t size = as_index(field(j, "size"), "size");
        const auto & ops = field(j, "ops");
        if (! ops.is_array())
            parse_error("'ops' must be an array");
        std::vector<Symbol> symbols;
        std::vector<std::vector<Element>> tables;
        for (const auto & op : ops) {
            const auto & name = field(op, "name");
            if (! name.is_string())
                parse_error("operation name must be a string");
            symbols.push_back(Symbol{name.get<std::string>(), as_index(field(op, "arity"), "arity")});
            tables.push_back(as_elements(field(op, "table"), "table"));
        }
        return FiniteAlgebra(size, Signature(std::move(symbols)), std::move(tables));
    });
}

Json term_to_json(const Term & t)
{
    if (t.is_var())
        return Json{{"var", t.var_index()}};
    Json args = Json::array();
    for (const auto & a : t.args())
        args.push_back(term_to_json(a));
    return Json{{"op", t.symbol()}, {"args", args}};
}

Term term_from_json(const Json & j)
{
    return wrap<Term>("term", [&] {
        if (! j.is_object())
            parse_error("a term must be an object");
        if (j.contains("var"))
            return Term::var(as_index(j.at("var"), "var"));
        const auto & op = field(j, "op");
        if (! op.is_string())
            parse_error("'op' must be a string");
        std::vector<Term> args;
        if (j.contains("args")) {
            if (! j.at("args").is_array())
                parse_error("'args' must be an array");
            for (const auto & a : j.at("args"))
                args.push_back(term_from_json(a));
        }
        return Term::app(op.get<std::string>(), std::move(args));
    });
}

Json partition_to_json(const Partition & p)
{
    Json blocks = Json::array();
    for (const auto & b : p.blocks())
        blocks.push_back(set_to_json(b));
    return Json{{"blocks", blocks}};
}

Partition partition_from_json(const Json & j, std::size_t universe_size)
{
    return wrap<Partition>("partition", [&] {
        const auto & blocks = field(j, "blocks");
        if (! blocks.is_array())
            parse_error("'blocks' must be an array");
        std::vector<std::vector<Element>> out;
        for (const auto & b : blocks)
            out.push_back(as_elements(b, "block"));
        return Partition::from_blocks(universe_size, out);
    });
}

AlgebraResolver fixture_resolver()
{
    return [](const std::string & name) { return fixtures::algebra_fixture(name).algebra; };
}

Json instance_to_json(const Instance & inst, const std::optional<std::string> & algebra_name)
{
    Json out;
    out["algebra"] = algebra_name ? Json(*algebra_name) : algebra_to_json(inst.algebra());
    out["variables"] = inst.variables();
    Json potatoes = Json::object();
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        potatoes[inst.variables()[x]] = set_to_json(inst.potato(x));
    out["potatoes"] = potatoes;
    Json relations = Json::object();
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        for (std::size_t y = 0; y < inst.variable_count(); ++y)
            relations[inst.variables()[x] + "," + inst.variables()[y]] = relation_to_json(inst.relation(x, y));
    out["relations"] = relations;
    return out;
}

Instance instance_from_json(const Json & j, const AlgebraResolver & resolve)
{
    return wrap<Instance>("instance", [&] {
        auto algebra = algebra_field(j, resolve);
        auto variables = variables_field(j);
        const std::size_t n = variables.size();

        std::vector<ElementSet> potatoes(n, ElementSet::full(algebra->size()));
        if (j.contains("potatoes")) {
            const auto & p = j.at("potatoes");
            if (! p.is_object())
                parse_error("'potatoes' must map variable names to element lists");
            for (const auto & [name, elems] : p.items())
                potatoes[lookup(variables, name)] = ElementSet(as_elements(elems, "potato"));
        }

        std::vector<std::optional<Relation>> given(n * n);
        if (j.contains("relations")) {
            const auto & r = j.at("relations");
            if (! r.is_object())
                parse_error("'relations' must map \"x,y\" keys to pair lists");
            for (const auto & [key, pairs] : r.items()) {
                const auto comma = key.find(',');
                if (comma == std::string::npos)
                    parse_error("relation key '" + key + "' is not of the form \"x,y\"");
                const std::size_t x = lookup(variables, key.substr(0, comma));
                const std::size_t y = lookup(variables, key.substr(comma + 1));
                given[x * n + y] = as_relation(pairs, "relation");
            }
        }
        std::vector<Relation> relations;
        relations.reserve(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (given[x * n + y])
                    relations.push_back(*given[x * n + y]);
                else if (given[y * n + x])
                    relations.push_back(given[y * n + x]->inverse());
                else if (x == y)
                    relations.push_back(Relation::diagonal(potatoes[x]));
                else
                    relations.push_back(Relation::product(potatoes[x], potatoes[y]));
            }
        Instance inst(std::move(algebra), std::move(variables), std::move(potatoes), std::move(relations));
        if (auto bad = closure_violation(inst))
            fail(ErrorCode::NotClosed, *bad);
        return inst;
    });
}

Json raw_instance_to_json(const RawInstance & raw, const std::optional<std::string> & algebra_name)
{
    Json out;
    out["algebra"] = algebra_name ? Json(*algebra_name) : algebra_to_json(*raw.algebra);
    out["variables"] = raw.variables;
    Json constraints = Json::array();
    for (const auto & c : raw.binary)
        constraints.push_back(Json{{"scope", {raw.variables[c.first], raw.variables[c.second]}}, {"relation", relation_to_json(c.relation)}});
    for (const auto & c : raw.unary)
        constraints.push_back(Json{{"scope", {raw.variables[c.variable]}}, {"relation", set_to_json(c.allowed)}});
    out["constraints"] = constraints;
    return out;
}

RawInstance raw_instance_from_json(const Json & j, const AlgebraResolver & resolve)
{
    return wrap<RawInstance>("raw instance", [&] {
        RawInstance raw;
        raw.algebra = algebra_field(j, resolve);
        raw.variables = variables_field(j);
        if (j.contains("constraints")) {
            const auto & cs = j.at("constraints");
            if (! cs.is_array())
                parse_error("'constraints' must be an array");
            for (const auto & c : cs) {
                const auto & scope = field(c, "scope");
                if (! scope.is_array() || scope.empty() || scope.size() > 2)
                    parse_error("a constraint scope lists one or two variables");
                for (const auto & v : scope)
                    if (! v.is_string())
                        parse_error("scope entries must be variable names");
                const auto & rel = field(c, "relation");
                if (scope.size() == 1)
                    raw.unary.push_back(UnaryConstraint{lookup(raw.variables, scope[0].get<std::string>()),
                        ElementSet(as_elements(rel, "relation"))});
                else
                    raw.binary.push_back(BinaryConstraint{lookup(raw.variables, scope[0].get<std::string>()),
                        lookup(raw.variables, scope[1].get<std::string>()), as_relation(rel, "relation")});
            }
        }
        raw.validate();
        if (auto bad = raw.closure_violation())
            fail(ErrorCode::NotClosed, *bad);
        return raw;
    });
}

Json assignment_to_json(const std::vector<std::string> & variables, const Assignment & a)
{
    Json out = Json::object();
    for (std::size_t x = 0; x < variables.size() && x < a.size(); ++x)
        out[variables[x]] = a[x];
    return out;
}

namespace {

Json check_to_json(const PropertyCheck & check, const std::vector<std::string> & variables)
{
    Json out{{"passed", check.passed}};
    if (check.witness) {
        std::vector<std::string> vars;
        for (auto v : check.witness->variables)
            vars.push_back(variables[v]);
        out["witness"] = Json{{"variables", vars}, {"elements", check.witness->elements}, {"description", check.witness->description}};
    }
    return out;
}

} // namespace

Json standard_report_to_json(const StandardReport & report, const std::vector<std::string> & variables)
{
    return Json{{"standard", report.standard()}, {"empty", report.empty}, {"P1", check_to_json(report.diagonal, variables)},
        {"P2", check_to_json(report.triangle, variables)}, {"P3", check_to_json(report.subdirect, variables)},
        {"P4", check_to_json(report.symmetric, variables)}};
}

Json trace_to_json(const ReductionTrace & trace, const std::vector<std::string> & variables)
{
    Json steps = Json::array();
    for (const auto & step : trace.steps) {
        Json s;
        std::size_t total = 0;
        for (const auto & p : step.result.potatoes())
            total += p.size();
        if (step.kind == StepKind::SccRestriction) {
            s["step"] = ">=1";
        } else {
            const auto & d = *step.decomposition;
            s["step"] = ">=2";
            s["pivot"] = variables[d.pivot];
            Json blocks = Json::array();
            for (const auto & b : d.congruence_blocks)
                blocks.push_back(set_to_json(b));
            s["congruence_blocks"] = blocks;
            std::vector<std::string> w;
            for (auto x : d.w)
                w.push_back(variables[x]);
            s["w"] = w;
            s["chosen_block"] = d.chosen_block;
        }
        s["total_potato_size"] = total;
        steps.push_back(s);
    }
    return steps;
}

Json hypothesis_report_to_json(const HypothesisReport & report)
{
    Json out;
    out["idempotent"] = report.idempotent;
    out["a_theta_congruence"] = report.theta_congruence;
    out["b_quotient_two_semilattice"] = report.quotient_two_semilattice;
    out["c_projection_on_blocks"] = report.projection_on_blocks;
    out["d_left_commutative"] = report.left_commutative;
    out["theta"] = report.theta ? partition_to_json(*report.theta) : Json(nullptr);
    out["theta_failure"] = report.theta_failure
        ? Json{{"failure", std::string(to_string(report.theta_failure->failure))}, {"detail", report.theta_failure->detail}}
        : Json(nullptr);
    out["d_counterexample"] = report.left_commutative_counterexample ? Json(*report.left_commutative_counterexample) : Json(nullptr);
    out["note"] = "membership of the theta-blocks in a tractable variety is not checked here; "
                  "it is assumed of the block solver's input class";
    return out;
}

Json solve_result_to_json(const SolveResult & result, const std::vector<std::string> & variables)
{
    Json out;
    out["solvable"] = result.solvable;
    out["witness"] = result.witness ? assignment_to_json(variables, *result.witness) : Json(nullptr);
    out["hypotheses"] = hypothesis_report_to_json(result.hypotheses);
    out["unsound_no_possible"] = result.unsound_no_possible;
    return out;
}

} // namespace mcsp
