#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/instance.hpp"
#include "mcsp/term.hpp"

namespace mcsp::fixtures {

struct AlgebraFixture {
    std::string name;
    std::string description;
    std::shared_ptr<const FiniteAlgebra> algebra;
    Term dot;
    bool two_semilattice = false; // dot is a 2-semilattice operation on the whole algebra
};

// Built-in algebras, in a fixed order.
std::vector<std::string> algebra_names();
AlgebraFixture algebra_fixture(std::string_view name); // throws UnknownFixture
std::vector<AlgebraFixture> all_algebra_fixtures();
std::vector<AlgebraFixture> two_semilattice_fixtures();

// Algebras with a single binary operation "dot".
FiniteAlgebra meet2();
FiniteAlgebra chain3();
FiniteAlgebra rps(); // 0 -> 1 -> 2 -> 0, a.b is the head of the arc
FiniteAlgebra diamond4(); // meet semilattice of the four-element Boolean lattice
FiniteAlgebra tournament5();
FiniteAlgebra rps_over_meet(); // RPS on {0,1,2} sitting above a bottom element 3

// Top (element 0) plus Z2xZ2 (elements 1..4) with a single ternary q:
// q = top on (top,top,top), a+b+c on Z2xZ2, else the first argument that is
// not top.
FiniteAlgebra counterexample_algebra();
Term counterexample_dot(); // q(x0,x1,x1)

// Affine groups with the ternary m(x,y,z) = x+y+z.
FiniteAlgebra z2_affine();
FiniteAlgebra z2_squared_affine();
// Two-element semilattice with m(x,y,z) = x meet y meet z, and RPS with
// m(x,y,z) = (x.y).z; these play the 2-semilattice side of the edge-term
// construction.
FiniteAlgebra meet2_ternary();
FiniteAlgebra rps_ternary();
// m(x0,x1,x1) over signature {m}.
Term ternary_star();

enum class Skeleton { Meet2, Rps };

// D = S x Z2xZ2 with operations dot and m:
//   (s,a).(t,b)           = (s.t, a + twist(s,t))      twist(s,s) = 0
//   m((s,a),(t,b),(u,c))  = (s.(t.u), a + b + c)
// Element (s,a) is encoded as 4s + a. Twists are drawn from seed (seed 0
// means no twist). theta is the partition by s, dot is the first projection
// on each block, D/theta = S, and x.(y.z) = x.(z.y) holds.
FiniteAlgebra maltsev_family(Skeleton skeleton, std::uint64_t seed);
std::size_t skeleton_size(Skeleton skeleton);

// Random 2-semilattice on size elements: a commutative idempotent table with
// x.(x.y) = x.y, built by propagation with restarts. Signature {dot}.
FiniteAlgebra random_two_semilattice(std::size_t size, std::mt19937_64 & rng);

struct RawShape {
    std::size_t variables = 4;
    std::size_t binary_constraints = 4;
    std::size_t unary_constraints = 0;
    // Each relation is generated by a random seed containing every pair with
    // this probability (at least one pair); unary seeds likewise.
    double seed_density = 0.3;
    // With this probability a random assignment is planted: its values go
    // into every seed, so the instance is solvable.
    double plant_probability = 0.0;
};

// Random raw instance whose constraint relations are subuniverses generated
// by random seeds.
RawInstance random_raw_instance(std::shared_ptr<const FiniteAlgebra> algebra, const RawShape & shape, std::mt19937_64 & rng);

// Runs (2,3)-consistency on random raw instances until one is nonempty.
// Fails with BoundExceeded after max_attempts empty outputs.
Instance random_standard_instance(std::shared_ptr<const FiniteAlgebra> algebra, const RawShape & shape, std::mt19937_64 & rng,
    std::size_t max_attempts = 1000);

// Built-in instances.
std::vector<std::string> instance_names();
struct InstanceFixture {
    std::string name;
    std::string description;
    Instance instance;
    Term dot;
};
InstanceFixture instance_fixture(std::string_view name); // throws UnknownFixture

} // namespace mcsp::fixtures
