#include <gtest/gtest.h>

#include <random>

#include "mcsp/consistency.hpp"
#include "mcsp/error.hpp"
#include "mcsp/fixtures.hpp"
#include "mcsp/json_io.hpp"
#include "mcsp/maltsev.hpp"

using namespace mcsp;
namespace fx = mcsp::fixtures;

namespace {

ErrorCode code_of(const std::function<void()> & f)
{
    try {
        f();
    } catch (const Error & e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an mcsp::Error";
    return ErrorCode::InternalInconsistency;
}

} // namespace

TEST(Json, AlgebraAndTermRoundTrip)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        const auto j = algebra_to_json(*f.algebra);
        EXPECT_EQ(algebra_from_json(j), *f.algebra) << f.name;
        EXPECT_EQ(algebra_from_json(parse_json(j.dump())), *f.algebra) << f.name;
        EXPECT_EQ(term_from_json(term_to_json(f.dot)), f.dot) << f.name;
    }
}

TEST(Json, AlgebraSchema)
{
    const auto j = algebra_to_json(fx::meet2());
    EXPECT_EQ(j.dump(), R"({"size":2,"ops":[{"name":"dot","arity":2,"table":[0,0,0,1]}]})");
    EXPECT_EQ(term_to_json(fx::counterexample_dot()).dump(), R"({"op":"q","args":[{"var":0},{"var":1},{"var":1}]})");
}

TEST(Json, PartitionRoundTrip)
{
    const auto p = Partition::from_blocks(5, {{0}, {1, 2, 3, 4}});
    const auto j = partition_to_json(p);
    EXPECT_EQ(j.dump(), R"({"blocks":[[0],[1,2,3,4]]})");
    EXPECT_EQ(partition_from_json(j, 5), p);
    EXPECT_THROW(partition_from_json(parse_json(R"({"blocks":[[0,1],[1,2]]})"), 3), Error);
}

TEST(Json, InstanceRoundTrip)
{
    for (const auto & name : fx::instance_names()) {
        const auto f = fx::instance_fixture(name);
        EXPECT_EQ(instance_from_json(instance_to_json(f.instance)), f.instance) << name;
    }
    const auto ce = build_counterexample();
    EXPECT_EQ(instance_from_json(parse_json(instance_to_json(ce.instance).dump())), ce.instance);
    EXPECT_EQ(instance_from_json(instance_to_json(ce.instance, std::string("counterexample"))), ce.instance);
}

TEST(Json, RandomInstancesRoundTripByteStable)
{
    std::mt19937_64 rng(2);
    const auto f = fx::algebra_fixture("diamond4");
    for (int rep = 0; rep < 20; ++rep) {
        fx::RawShape shape;
        shape.variables = 4;
        shape.binary_constraints = 3;
        shape.unary_constraints = 1;
        const auto raw = fx::random_raw_instance(f.algebra, shape, rng);
        const auto rj = raw_instance_to_json(raw, f.name);
        EXPECT_EQ(raw_instance_from_json(rj), raw);
        const auto inst = two_three_consistency(raw);
        const auto text = instance_to_json(inst, f.name).dump();
        EXPECT_EQ(instance_to_json(instance_from_json(parse_json(text)), f.name).dump(), text);
    }
}

TEST(Json, InstanceDefaults)
{
    // Only R_xy given: R_yx is its inverse, R_xx the diagonal, potatoes D.
    const auto j = parse_json(R"({"algebra":"meet2","variables":["x","y"],
        "relations":{"x,y":[[0,0],[1,0],[1,1]]}})");
    const auto inst = instance_from_json(j);
    EXPECT_EQ(inst.potato(0), (ElementSet{0, 1}));
    EXPECT_EQ(inst.relation(1, 0), (Relation{{0, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(inst.relation(0, 0), (Relation{{0, 0}, {1, 1}}));

    const auto j2 = parse_json(R"({"algebra":"chain3","variables":["x","y"],"potatoes":{"x":[0,1]}})");
    const auto inst2 = instance_from_json(j2);
    EXPECT_EQ(inst2.relation(0, 1), Relation::product(ElementSet{0, 1}, ElementSet{0, 1, 2}));
}

TEST(Json, InstanceErrors)
{
    EXPECT_EQ(code_of([] { parse_json("{not json"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"variables":["x"]})")); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"algebra":"nope","variables":["x"]})")); }), ErrorCode::UnknownFixture);
    // q(2,3,1) = 4 leaves {1,2,3}.
    EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"algebra":"counterexample","variables":["x"],"potatoes":{"x":[1,2,3]}})")); }),
        ErrorCode::NotClosed);
    EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"algebra":"meet2","variables":["x"],"potatoes":{"x":[5]}})")); }),
        ErrorCode::ElementOutOfRange);
    EXPECT_EQ(code_of([] { algebra_from_json(parse_json(R"({"size":2,"ops":[{"name":"dot","arity":2,"table":[0,1]}]})")); }),
        ErrorCode::ArityMismatch);
    EXPECT_EQ(code_of([] { term_from_json(parse_json(R"({"op":"dot","args":"x"})")); }), ErrorCode::ParseError);
}

TEST(Json, RawInstanceSchema)
{
    const auto raw = raw_instance_from_json(parse_json(R"({"algebra":"meet2","variables":["x","y"],
        "constraints":[{"scope":["x","y"],"relation":[[1,1]]},{"scope":["y"],"relation":[1]}]})"));
    ASSERT_EQ(raw.binary.size(), 1U);
    ASSERT_EQ(raw.unary.size(), 1U);
    EXPECT_EQ(raw.binary[0].relation, (Relation{{1, 1}}));
    EXPECT_EQ(raw.unary[0].allowed, (ElementSet{1}));
    EXPECT_EQ(code_of([] { raw_instance_from_json(parse_json(R"({"algebra":"meet2","variables":["x"],
        "constraints":[{"scope":["z"],"relation":[1]}]})")); }),
        ErrorCode::VariableOutOfRange);
}

TEST(Json, SolveResultShape)
{
    const auto ce = build_counterexample();
    const auto r = main_solve(ce.instance, ce.dot, *default_block_solver());
    const auto j = solve_result_to_json(r, ce.instance.variables());
    EXPECT_EQ(j.at("solvable"), false);
    EXPECT_TRUE(j.at("witness").is_null());
    EXPECT_EQ(j.at("unsound_no_possible"), true);
    EXPECT_EQ(j.at("hypotheses").at("d_left_commutative"), false);
}
