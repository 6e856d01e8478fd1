#include "mcsp/fixtures.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <optional>

#include "mcsp/consistency.hpp"
#include "mcsp/error.hpp"
#include "mcsp/identities.hpp"
#include "mcsp/maltsev.hpp"
#include "mcsp/relation.hpp"

namespace mcsp::fixtures {

namespace {

const Signature dot_signature{{"dot", 2}};
const Signature m_signature{{"m", 3}};

FiniteAlgebra binary_algebra(std::size_t size, const std::function<Element(Element, Element)> & op)
{
    return FiniteAlgebra::tabulate(size, dot_signature, [&](std::size_t, std::span<const Element> a) { return op(a[0], a[1]); });
}

FiniteAlgebra ternary_algebra(std::size_t size, const std::function<Element(Element, Element, Element)> & op)
{
    return FiniteAlgebra::tabulate(size, m_signature, [&](std::size_t, std::span<const Element> a) { return op(a[0], a[1], a[2]); });
}

Element rps_dot(Element a, Element b)
{
    if (a == b)
        return a;
    // 0 -> 1 -> 2 -> 0
    return (a + 1) % 3 == b ? b : a;
}

Element meet(Element a, Element b) { return std::min(a, b); }

std::shared_ptr<const FiniteAlgebra> share(FiniteAlgebra alg)
{
    return std::make_shared<const FiniteAlgebra>(std::move(alg));
}

AlgebraFixture make(std::string name, std::string description, FiniteAlgebra alg, Term dot)
{
    AlgebraFixture f{std::move(name), std::move(description), share(std::move(alg)), std::move(dot), false};
    f.two_semilattice = is_two_semilattice(*f.algebra, f.dot);
    return f;
}

Term dot_term() { return Term::app("dot", {Term::var(0), Term::var(1)}); }

struct NamedAlgebra {
    const char * name;
    const char * description;
    std::function<AlgebraFixture()> build;
};

const std::vector<NamedAlgebra> & algebra_table()
{
    static const std::vector<NamedAlgebra> table{
        {"meet2", "two-element meet semilattice", [] { return make("meet2", "two-element meet semilattice", meet2(), dot_term()); }},
        {"chain3", "three-element chain under min", [] { return make("chain3", "three-element chain under min", chain3(), dot_term()); }},
        {"rps", "rock-paper-scissors 2-semilattice",
            [] { return make("rps", "rock-paper-scissors 2-semilattice", rps(), dot_term()); }},
        {"diamond4", "meet semilattice of the four-element Boolean lattice",
            [] { return make("diamond4", "meet semilattice of the four-element Boolean lattice", diamond4(), dot_term()); }},
        {"tournament5", "five-vertex tournament, a.b is the winner",
            [] { return make("tournament5", "five-vertex tournament, a.b is the winner", tournament5(), dot_term()); }},
        {"rps_over_meet", "rock-paper-scissors above a bottom element",
            [] { return make("rps_over_meet", "rock-paper-scissors above a bottom element", rps_over_meet(), dot_term()); }},
        {"counterexample", "top plus Z2xZ2 with q; dot = q(x,y,y)",
            [] { return make("counterexample", "top plus Z2xZ2 with q; dot = q(x,y,y)", counterexample_algebra(), counterexample_dot()); }},
        {"z2_affine", "Z2 with m = x+y+z; dot = m(x,y,y)",
            [] { return make("z2_affine", "Z2 with m = x+y+z; dot = m(x,y,y)", z2_affine(), ternary_star()); }},
        {"z2sq_affine", "Z2xZ2 with m = x+y+z; dot = m(x,y,y)",
            [] { return make("z2sq_affine", "Z2xZ2 with m = x+y+z; dot = m(x,y,y)", z2_squared_affine(), ternary_star()); }},
        {"meet2_ternary", "two-element semilattice with m = x meet y meet z",
            [] { return make("meet2_ternary", "two-element semilattice with m = x meet y meet z", meet2_ternary(), ternary_star()); }},
        {"rps_ternary", "rock-paper-scissors with m = (x.y).z",
            [] { return make("rps_ternary", "rock-paper-scissors with m = (x.y).z", rps_ternary(), ternary_star()); }},
        {"family_meet2", "meet2 x Z2xZ2, no twist",
            [] { return make("family_meet2", "meet2 x Z2xZ2, no twist", maltsev_family(Skeleton::Meet2, 0), dot_term()); }},
        {"family_rps", "rps x Z2xZ2, no twist",
            [] { return make("family_rps", "rps x Z2xZ2, no twist", maltsev_family(Skeleton::Rps, 0), dot_term()); }},
        {"family_meet2_twisted", "meet2 x Z2xZ2, twist seed 1",
            [] { return make("family_meet2_twisted", "meet2 x Z2xZ2, twist seed 1", maltsev_family(Skeleton::Meet2, 1), dot_term()); }},
        {"family_rps_twisted", "rps x Z2xZ2, twist seed 7",
            [] { return make("family_rps_twisted", "rps x Z2xZ2, twist seed 7", maltsev_family(Skeleton::Rps, 7), dot_term()); }},
    };
    return table;
}

} // namespace

std::vector<std::string> algebra_names()
{
    std::vector<std::string> out;
    for (const auto & entry : algebra_table())
        out.emplace_back(entry.name);
    return out;
}

AlgebraFixture algebra_fixture(std::string_view name)
{
    for (const auto & entry : algebra_table())
        if (entry.name == name)
            return entry.build();
    fail(ErrorCode::UnknownFixture, "no built-in algebra named '" + std::string(name) + "'");
}

std::vector<AlgebraFixture> all_algebra_fixtures()
{
    std::vector<AlgebraFixture> out;
    for (const auto & entry : algebra_table())
        out.push_back(entry.build());
    return out;
}

std::vector<AlgebraFixture> two_semilattice_fixtures()
{
    auto all = all_algebra_fixtures();
    std::erase_if(all, [](const AlgebraFixture & f) { return ! f.two_semilattice; });
    return all;
}

FiniteAlgebra meet2() { return binary_algebra(2, meet); }
FiniteAlgebra chain3() { return binary_algebra(3, meet); }
FiniteAlgebra rps() { return binary_algebra(3, rps_dot); }

FiniteAlgebra diamond4()
{
    // 0 = bottom, 1 and 2 incomparable, 3 = top; meet is bitwise and.
    return binary_algebra(4, [](Element a, Element b) { return a & b; });
}

FiniteAlgebra tournament5()
{
    // beats[a] lists who a beats; chosen so the tournament is strongly connected
    // but not vertex-transitive.
    static constexpr std::array<std::array<bool, 5>, 5> beats{{
        {false, false, true, false, false},
        {true, false, true, true, false},
        {false, false, false, true, true},
        {true, false, false, false, true},
        {true, true, false, false, false},
    }};
    return binary_algebra(5, [](Element a, Element b) { return a == b || beats[a][b] ? a : b; });
}

FiniteAlgebra rps_over_meet()
{
    return binary_algebra(4, [](Element a, Element b) -> Element {
        if (a == 3 || b == 3)
            return 3;
        return rps_dot(a, b);
    });
}

FiniteAlgebra counterexample_algebra()
{
    return FiniteAlgebra::tabulate(5, Signature{{"q", 3}}, [](std::size_t, std::span<const Element> a) -> Element {
        if (a[0] == 0 && a[1] == 0 && a[2] == 0)
            return 0;
        if (a[0] != 0 && a[1] != 0 && a[2] != 0)
            return static_cast<Element>((((a[0] - 1) ^ (a[1] - 1) ^ (a[2] - 1))) + 1);
        for (Element e : a)
            if (e != 0)
                return e;
        return 0;
    });
}

Term counterexample_dot() { return Term::app("q", {Term::var(0), Term::var(1), Term::var(1)}); }

FiniteAlgebra z2_affine()
{
    return ternary_algebra(2, [](Element a, Element b, Element c) { return a ^ b ^ c; });
}

FiniteAlgebra z2_squared_affine()
{
    return ternary_algebra(4, [](Element a, Element b, Element c) { return a ^ b ^ c; });
}

FiniteAlgebra meet2_ternary()
{
    return ternary_algebra(2, [](Element a, Element b, Element c) { return a & b & c; });
}

FiniteAlgebra rps_ternary()
{
    return ternary_algebra(3, [](Element a, Element b, Element c) { return rps_dot(rps_dot(a, b), c); });
}

Term ternary_star() { return Term::app("m", {Term::var(0), Term::var(1), Term::var(1)}); }

std::size_t skeleton_size(Skeleton skeleton) { return skeleton == Skeleton::Meet2 ? 2 : 3; }

FiniteAlgebra maltsev_family(Skeleton skeleton, std::uint64_t seed)
{
    const std::size_t k = skeleton_size(skeleton);
    auto s_dot = [skeleton](Element s, Element t) { return skeleton == Skeleton::Meet2 ? meet(s, t) : rps_dot(s, t); };
    std::vector<Element> twist(k * k, 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Element> group(0, 3);
        for (Element s = 0; s < k; ++s)
            for (Element t = 0; t < k; ++t)
                if (s != t)
                    twist[s * k + t] = group(rng);
    }
    const Signature sig{{"dot", 2}, {"m", 3}};
    return FiniteAlgebra::tabulate(4 * k, sig, [&](std::size_t symbol, std::span<const Element> a) -> Element {
        if (symbol == 0) {
            const Element s = a[0] / 4, t = a[1] / 4;
            return 4 * s_dot(s, t) + ((a[0] % 4) ^ twist[s * k + t]);
        }
        const Element s = a[0] / 4, t = a[1] / 4, u = a[2] / 4;
        return 4 * s_dot(s, s_dot(t, u)) + ((a[0] % 4) ^ (a[1] % 4) ^ (a[2] % 4));
    });
}

FiniteAlgebra random_two_semilattice(std::size_t size, std::mt19937_64 & rng)
{
    constexpr Element unset = static_cast<Element>(-1);
    std::vector<std::pair<Element, Element>> pairs;
    for (Element a = 0; a < size; ++a)
        for (Element b = a + 1; b < size; ++b)
            pairs.emplace_back(a, b);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::vector<Element> table(size * size, unset);
    for (Element a = 0; a < size; ++a)
        table[a * size + a] = a;

    // Sets a.b = b.a = c and everything x.(x.y) = x.y then forces. Returns
    // false (leaving t in an arbitrary state) on a clash.
    auto assign = [size](std::vector<Element> & t, Element a, Element b, Element c) {
        std::deque<std::array<Element, 3>> queue{{a, b, c}};
        while (! queue.empty()) {
            auto [x, y, z] = queue.front();
            queue.pop_front();
            for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                auto & cell = t[p * size + q];
                if (cell == z)
                    continue;
                if (cell != unset)
                    return false;
                cell = z;
            }
            if (z != x && z != y) {
                queue.push_back({x, z, z});
                queue.push_back({y, z, z});
            }
        }
        return true;
    };

    std::bernoulli_distribution other(0.35);
    for (auto [a, b] : pairs) {
        if (table[a * size + b] != unset)
            continue;
        if (size > 2 && other(rng)) {
            std::uniform_int_distribution<Element> pick(0, static_cast<Element>(size - 1));
            const Element c = pick(rng);
            if (c != a && c != b) {
                auto attempt = table;
                if (assign(attempt, a, b, c)) {
                    table = std::move(attempt);
                    continue;
                }
            }
        }
        // A value in {a, b} never forces anything else.
        assign(table, a, b, std::bernoulli_distribution(0.5)(rng) ? a : b);
    }
    auto alg = FiniteAlgebra(size, dot_signature, {table});
    if (! is_two_semilattice(alg, dot_term()))
        fail(ErrorCode::InternalInconsistency, "random 2-semilattice generator produced a bad table");
    return alg;
}

RawInstance random_raw_instance(std::shared_ptr<const FiniteAlgebra> algebra, const RawShape & shape, std::mt19937_64 & rng)
{
    if (shape.variables == 0)
        fail(ErrorCode::PreconditionFailed, "random_raw_instance needs at least one variable");
    RawInstance raw;
    raw.algebra = std::move(algebra);
    for (std::size_t i = 0; i < shape.variables; ++i)
        raw.variables.push_back("v" + std::to_string(i));
    const std::size_t d = raw.algebra->size();
    std::uniform_int_distribution<std::size_t> var(0, shape.variables - 1);
    std::uniform_int_distribution<Element> elem(0, static_cast<Element>(d - 1));
    std::bernoulli_distribution take(shape.seed_density);
    std::optional<Assignment> planted;
    if (std::bernoulli_distribution(shape.plant_probability)(rng)) {
        planted.emplace(shape.variables);
        for (auto & v : *planted)
            v = elem(rng);
    }

    for (std::size_t i = 0; i < shape.binary_constraints; ++i) {
        const std::size_t x = var(rng);
        std::size_t y = var(rng);
        if (shape.variables > 1)
            while (y == x)
                y = var(rng);
        std::vector<ElementPair> seed;
        for (Element a = 0; a < d; ++a)
            for (Element b = 0; b < d; ++b)
                if (take(rng))
                    seed.emplace_back(a, b);
        if (planted)
            seed.emplace_back((*planted)[x], (*planted)[y]);
        if (seed.empty())
            seed.emplace_back(elem(rng), elem(rng));
        raw.binary.push_back(BinaryConstraint{x, y, relation_closure(*raw.algebra, Relation(std::move(seed)))});
    }
    for (std::size_t i = 0; i < shape.unary_constraints; ++i) {
        const std::size_t x = var(rng);
        std::vector<Element> seed;
        if (planted)
            seed.push_back((*planted)[x]);
        for (Element a = 0; a < d; ++a)
            if (take(rng))
                seed.push_back(a);
        if (seed.empty())
            seed.push_back(elem(rng));
        raw.unary.push_back(UnaryConstraint{x, subuniverse_closure(*raw.algebra, ElementSet(std::move(seed)))});
    }
    return raw;
}

Instance random_standard_instance(std::shared_ptr<const FiniteAlgebra> algebra, const RawShape & shape, std::mt19937_64 & rng,
    std::size_t max_attempts)
{
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        auto inst = two_three_consistency(random_raw_instance(algebra, shape, rng));
        if (! inst.is_empty())
            return inst;
    }
    fail(ErrorCode::BoundExceeded, "no nonempty instance after " + std::to_string(max_attempts) + " attempts");
}

namespace {

InstanceFixture full_fixture(std::string name, std::string description, FiniteAlgebra alg, std::size_t vars)
{
    auto algebra = share(std::move(alg));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vars; ++i)
        names.push_back(std::string(1, static_cast<char>('x' + i % 3)) + (i >= 3 ? std::to_string(i / 3) : ""));
    std::vector<ElementSet> potatoes(vars, ElementSet::full(algebra->size()));
    return InstanceFixture{std::move(name), std::move(description), full_instance(algebra, names, potatoes), dot_term()};
}

struct NamedInstance {
    const char * name;
    std::function<InstanceFixture()> build;
};

const std::vector<NamedInstance> & instance_table()
{
    static const std::vector<NamedInstance> table{
        {"counterexample",
            [] {
                auto c = build_counterexample();
                return InstanceFixture{"counterexample", "four variables over top plus Z2xZ2; only all-top solves it",
                    std::move(c.instance), std::move(c.dot)};
            }},
        {"meet2_full3", [] { return full_fixture("meet2_full3", "full instance over meet2 on three variables", meet2(), 3); }},
        {"rps_full3", [] { return full_fixture("rps_full3", "full instance over rps on three variables", rps(), 3); }},
        {"meet2_singleton",
            [] {
                auto algebra = share(meet2());
                std::vector<ElementSet> potatoes{ElementSet{1}, ElementSet{0}};
                std::vector<Relation> relations{Relation::diagonal(potatoes[0]), Relation{{1, 0}}, Relation{{0, 1}},
                    Relation::diagonal(potatoes[1])};
                return InstanceFixture{"meet2_singleton", "two variables with singleton potatoes",
                    Instance(algebra, {"x", "y"}, potatoes, relations), dot_term()};
            }},
    };
    return table;
}

} // namespace

std::vector<std::string> instance_names()
{
    std::vector<std::string> out;
    for (const auto & entry : instance_table())
        out.emplace_back(entry.name);
    return out;
}

InstanceFixture instance_fixture(std::string_view name)
{
    for (const auto & entry : instance_table())
        if (entry.name == name)
            return entry.build();
    fail(ErrorCode::UnknownFixture, "no built-in instance named '" + std::string(name) + "'");
}

} // namespace mcsp::fixtures
