#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/algebra.hpp"
#include "mcsp/element_set.hpp"
#include "mcsp/relation.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// Values indexed by variable position.
using Assignment = std::vector<Element>;

// A binary CSP instance over a fixed finite algebra: one potato P_x per
// variable and one relation R_xy for every ordered pair of variables, with
// R_xy inside P_x x P_y.
class Instance {
public:
    Instance() = default;
    Instance(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<std::string> variables,
        std::vector<ElementSet> potatoes, std::vector<Relation> relations);

    const FiniteAlgebra & algebra() const noexcept { return *algebra_; }
    const std::shared_ptr<const FiniteAlgebra> & algebra_ptr() const noexcept { return algebra_; }

    std::size_t variable_count() const noexcept { return variables_.size(); }
    const std::vector<std::string> & variables() const noexcept { return variables_; }
    std::size_t variable_index(std::string_view name) const;

    const ElementSet & potato(std::size_t x) const { return potatoes_[x]; }
    const std::vector<ElementSet> & potatoes() const noexcept { return potatoes_; }
    const Relation & relation(std::size_t x, std::size_t y) const { return relations_[x * variables_.size() + y]; }
    const std::vector<Relation> & relations() const noexcept { return relations_; }

    // Some potato is empty.
    bool is_empty() const;
    bool all_singletons() const;
    std::size_t total_potato_size() const;

    friend bool operator==(const Instance & a, const Instance & b);

private:
    std::shared_ptr<const FiniteAlgebra> algebra_;
    std::vector<std::string> variables_;
    std::vector<ElementSet> potatoes_;
    std::vector<Relation> relations_;
};

// Potatoes P_x, relations R_xx = 0_{P_x} and R_xy = P_x x P_y.
Instance full_instance(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<std::string> variables,
    std::vector<ElementSet> potatoes);

// Description of the first potato or relation that is not a subuniverse of
// the ambient algebra (or of its square), if any.
std::optional<std::string> closure_violation(const Instance & inst);

struct UnaryConstraint {
    std::size_t variable = 0;
    ElementSet allowed;

    friend bool operator==(const UnaryConstraint &, const UnaryConstraint &) = default;
};

struct BinaryConstraint {
    std::size_t first = 0;
    std::size_t second = 0;
    Relation relation;

    friend bool operator==(const BinaryConstraint &, const BinaryConstraint &) = default;
};

// A general instance of CSP(D,2): a list of unary and binary constraints.
struct RawInstance {
    std::shared_ptr<const FiniteAlgebra> algebra;
    std::vector<std::string> variables;
    std::vector<BinaryConstraint> binary;
    std::vector<UnaryConstraint> unary;

    // Variable indices and elements in range; throws otherwise.
    void validate() const;
    // Every constraint relation is a subuniverse of the matching power of D.
    std::optional<std::string> closure_violation() const;

    friend bool operator==(const RawInstance & a, const RawInstance & b);
};

struct StandardWitness {
    std::vector<std::size_t> variables;
    std::vector<Element> elements;
    std::string description;
};

struct PropertyCheck {
    bool passed = true;
    std::optional<StandardWitness> witness;
};

struct StandardReport {
    bool empty = false;
    PropertyCheck diagonal;       // R_xx = 0_{P_x}
    PropertyCheck triangle;       // every (a,b) in R_xy extends to every z
    PropertyCheck subdirect;      // R_xy projects onto P_x and P_y
    PropertyCheck symmetric;      // R_yx = R_xy^{-1}

    bool standard() const { return diagonal.passed && triangle.passed && subdirect.passed && symmetric.passed; }
};

StandardReport validate_standard(const Instance & inst);

// Replace potatoes (each inside the old one) and intersect relations.
Instance restrict(const Instance & inst, const std::vector<ElementSet> & new_potatoes);

// Fails with SizeMismatch on a partial assignment.
bool is_solution(const Instance & inst, const Assignment & assignment);

// Whether the pointwise dot of two solutions is again a solution. Fails with
// PreconditionFailed if either input is not a solution.
bool solution_closure_check(const Instance & inst, const Assignment & s1, const Assignment & s2, const Term & dot);

} // namespace mcsp
