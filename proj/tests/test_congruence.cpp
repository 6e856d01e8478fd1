#include <gtest/gtest.h>

#include "mcsp/congruence.hpp"
#include "mcsp/error.hpp"
#include "mcsp/fixtures.hpp"
#include "mcsp/identities.hpp"
#include "support.hpp"

using namespace mcsp;
namespace fx = mcsp::fixtures;

namespace {

const Term xy = Term::app("dot", {Term::var(0), Term::var(1)});

Partition blocks(std::size_t n, std::vector<std::vector<Element>> b) { return Partition::from_blocks(n, b); }

} // namespace

TEST(Partition, CanonicalForm)
{
    const auto p = Partition::from_labels({7, 3, 7, 3, 9});
    EXPECT_EQ(mcsp::testing::block_lists(p), (std::vector<std::vector<Element>>{{0, 2}, {1, 3}, {4}}));
    EXPECT_EQ(p.representative(3), 1U);
    EXPECT_EQ(p.block_index(4), 2U);
    EXPECT_TRUE(Partition::discrete(5).refines(p));
    EXPECT_FALSE(p.refines(Partition::discrete(5)));
}

TEST(Partition, JoinLaws)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        const std::size_t n = f.algebra->size();
        if (n > 8)
            continue;
        const auto all = all_congruences(*f.algebra);
        for (const auto & a : all) {
            EXPECT_EQ(join(a, Partition::discrete(n)), a);
            EXPECT_EQ(join(a, Partition::indiscrete(n)), Partition::indiscrete(n));
            for (const auto & b : all) {
                const auto j = join(a, b);
                EXPECT_EQ(j, join(b, a));
                EXPECT_TRUE(a.refines(j));
                EXPECT_TRUE(is_congruence(*f.algebra, j)) << f.name;
            }
        }
    }
}

TEST(IsCongruence, Examples)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        const std::size_t n = f.algebra->size();
        EXPECT_TRUE(is_congruence(*f.algebra, Partition::discrete(n))) << f.name;
        EXPECT_TRUE(is_congruence(*f.algebra, Partition::indiscrete(n))) << f.name;
    }
    const auto d = fx::counterexample_algebra();
    EXPECT_TRUE(is_congruence(d, blocks(5, {{0}, {1, 2, 3, 4}})));
    EXPECT_FALSE(is_congruence(d, blocks(5, {{0, 1}, {2, 3, 4}})));
    EXPECT_THROW(is_congruence(d, Partition::discrete(4)), Error);
}

TEST(IsCongruence, MatchesDefinitionOnEveryPartition)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        if (f.algebra->size() > 5)
            continue;
        for (const auto & label : mcsp::testing::all_partition_labels(f.algebra->size()))
            EXPECT_EQ(is_congruence(*f.algebra, Partition::from_labels(label)), mcsp::testing::congruence_by_definition(*f.algebra, label))
                << f.name;
    }
}

TEST(PrincipalCongruence, Examples)
{
    const auto c = fx::chain3();
    EXPECT_EQ(principal_congruence(c, 1, 1), Partition::discrete(3));
    EXPECT_EQ(principal_congruence(fx::meet2(), 0, 1), Partition::indiscrete(2));
    EXPECT_EQ(principal_congruence(c, 1, 2), blocks(3, {{0}, {1, 2}}));
    EXPECT_THROW(principal_congruence(c, 0, 3), Error);
}

TEST(PrincipalCongruence, IsLeastContainingThePair)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        const std::size_t n = f.algebra->size();
        if (n > 6)
            continue;
        const auto all = mcsp::testing::congruences_by_enumeration(*f.algebra);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const auto cg = principal_congruence(*f.algebra, a, b);
                EXPECT_TRUE(cg.same_block(a, b));
                for (const auto & bl : all) {
                    const auto other = Partition::from_blocks(n, bl);
                    if (other.same_block(a, b))
                        EXPECT_TRUE(cg.refines(other)) << f.name;
                }
            }
    }
}

TEST(AllCongruences, Examples)
{
    const FiniteAlgebra one(1, Signature{{"dot", 2}}, {{0}});
    EXPECT_EQ(all_congruences(one).size(), 1U);
    EXPECT_EQ(all_congruences(fx::meet2()), (std::vector<Partition>{Partition::discrete(2), Partition::indiscrete(2)}));

    const auto d = fx::counterexample_algebra();
    const auto cons = all_congruences(d);
    EXPECT_NE(std::find(cons.begin(), cons.end(), blocks(5, {{0}, {1, 2, 3, 4}})), cons.end());
    // The three index-2 subgroups of Z2xZ2 and their cosets, top on its own.
    for (auto [a, b] : {std::pair<Element, Element>{1, 2}, {1, 3}, {1, 4}}) {
        std::vector<Element> rest;
        for (Element e = 1; e <= 4; ++e)
            if (e != a && e != b)
                rest.push_back(e);
        const auto p = blocks(5, {{0}, {a, b}, rest});
        EXPECT_NE(std::find(cons.begin(), cons.end(), p), cons.end());
    }
}

TEST(AllCongruences, MatchesEnumeration)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        if (f.algebra->size() > 6)
            continue;
        std::set<std::vector<std::vector<Element>>> ours;
        for (const auto & p : all_congruences(*f.algebra))
            ours.insert(mcsp::testing::block_lists(p));
        EXPECT_EQ(ours, mcsp::testing::congruences_by_enumeration(*f.algebra)) << f.name;
    }
}

TEST(AllCongruences, RefusesLargeAlgebras)
{
    try {
        all_congruences(fx::maltsev_family(fx::Skeleton::Rps, 0), CongruenceOptions{.max_size = 6});
        FAIL();
    } catch (const Error & e) {
        EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
    }
}

TEST(MaximalCongruences, Examples)
{
    EXPECT_EQ(maximal_congruences(fx::meet2()), (std::vector<Partition>{Partition::discrete(2)}));
    EXPECT_EQ(maximal_congruences(fx::rps()), (std::vector<Partition>{Partition::discrete(3)}));

    const auto c = fx::chain3();
    const auto all = all_congruences(c);
    std::vector<Partition> expected;
    for (const auto & a : all) {
        if (a.is_indiscrete())
            continue;
        bool maximal = true;
        for (const auto & b : all)
            if (! b.is_indiscrete() && b != a && a.refines(b))
                maximal = false;
        if (maximal)
            expected.push_back(a);
    }
    EXPECT_EQ(maximal_congruences(c), expected);
    EXPECT_EQ(expected, (std::vector<Partition>{blocks(3, {{0}, {1, 2}}), blocks(3, {{0, 1}, {2}})}));
}

TEST(Theta, TwoSemilatticeGivesZero)
{
    for (const auto & f : fx::two_semilattice_fixtures()) {
        const auto r = theta_witness(*f.algebra, f.dot);
        ASSERT_TRUE(std::holds_alternative<Partition>(r)) << f.name;
        EXPECT_TRUE(std::get<Partition>(r).is_discrete());
    }
}

TEST(Theta, Counterexample)
{
    const auto r = theta_witness(fx::counterexample_algebra(), fx::counterexample_dot());
    ASSERT_TRUE(std::holds_alternative<Partition>(r));
    EXPECT_EQ(std::get<Partition>(r), blocks(5, {{0}, {1, 2, 3, 4}}));
}

TEST(Theta, FirstProjectionGivesOne)
{
    const auto r = theta_witness(fx::rps(), Term::var(0));
    ASSERT_TRUE(std::holds_alternative<Partition>(r));
    EXPECT_TRUE(std::get<Partition>(r).is_indiscrete());
}

TEST(Theta, ReportsFirstFailure)
{
    // Second projection: a.b = a only when a = b, so theta is 0 and the
    // quotient is the algebra itself, where y is not commutative.
    const auto r = theta_witness(fx::rps(), Term::var(1));
    ASSERT_TRUE(std::holds_alternative<ThetaFailureReport>(r));
    EXPECT_EQ(std::get<ThetaFailureReport>(r).failure, ThetaFailure::QuotientNotTwoSemilattice);

    // dot(x, y) = x except 1.0 = 2: 0 ~ 2 and 2 ~ 1 but not 0 ~ 1.
    std::vector<Element> table{0, 0, 0, 2, 1, 1, 2, 2, 2};
    const FiniteAlgebra bad(3, Signature{{"dot", 2}}, {table});
    const auto r2 = theta_witness(bad, xy);
    ASSERT_TRUE(std::holds_alternative<ThetaFailureReport>(r2));
    EXPECT_EQ(std::get<ThetaFailureReport>(r2).failure, ThetaFailure::NotTransitive);
}

TEST(Theta, OutputsPassIndependentAudit)
{
    for (const auto & f : fx::all_algebra_fixtures()) {
        const auto r = theta_witness(*f.algebra, f.dot);
        if (! std::holds_alternative<Partition>(r))
            continue;
        const auto & theta = std::get<Partition>(r);
        const auto dot = binary_table(*f.algebra, f.dot);
        const std::size_t n = f.algebra->size();
        std::vector<std::size_t> label(n);
        for (Element a = 0; a < n; ++a)
            label[a] = theta.block_index(a);
        EXPECT_TRUE(mcsp::testing::congruence_by_definition(*f.algebra, label)) << f.name;
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                const bool related = dot(a, b) == a && dot(b, a) == b;
                EXPECT_EQ(related, theta.same_block(a, b)) << f.name;
            }
        const auto qa = quotient_algebra(dot_reduct(*f.algebra, f.dot), theta);
        EXPECT_TRUE(is_two_semilattice(qa.algebra, reduct_dot_term())) << f.name;
    }
}
