#include "mcsp/instance.hpp"

#include <set>

#include "mcsp/error.hpp"

namespace mcsp {

Instance::Instance(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<std::string> variables,
    std::vector<ElementSet> potatoes, std::vector<Relation> relations) :
    algebra_(std::move(algebra)),
    variables_(std::move(variables)),
    potatoes_(std::move(potatoes)),
    relations_(std::move(relations))
{
    if (! algebra_)
        fail(ErrorCode::PreconditionFailed, "instance without an ambient algebra");
    const std::size_t n = variables_.size();
    std::set<std::string_view> names;
    for (const auto & v : variables_)
        if (! names.insert(v).second)
            fail(ErrorCode::PreconditionFailed, "duplicate variable '" + v + "'");
    if (potatoes_.size() != n)
        fail(ErrorCode::SizeMismatch, "expected one potato per variable");
    if (relations_.size() != n * n)
        fail(ErrorCode::SizeMismatch, "expected one relation per ordered pair of variables");
    for (std::size_t x = 0; x < n; ++x)
        for (Element e : potatoes_[x])
            if (e >= algebra_->size())
                fail(ErrorCode::ElementOutOfRange, "potato of '" + variables_[x] + "' contains " + std::to_string(e));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (! relation(x, y).is_subset_of_product(potatoes_[x], potatoes_[y]))
                fail(ErrorCode::PreconditionFailed,
                    "relation (" + variables_[x] + "," + variables_[y] + ") is not contained in the product of the potatoes");
}

std::size_t Instance::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name)
            return i;
    fail(ErrorCode::PreconditionFailed, "unknown variable '" + std::string(name) + "'");
}

bool Instance::is_empty() const
{
    for (const auto & p : potatoes_)
        if (p.empty())
            return true;
    return false;
}

bool Instance::all_singletons() const
{
    for (const auto & p : potatoes_)
        if (p.size() != 1)
            return false;
    return true;
}

std::size_t Instance::total_potato_size() const
{
    std::size_t total = 0;
    for (const auto & p : potatoes_)
        total += p.size();
    return total;
}

bool operator==(const Instance & a, const Instance & b)
{
    return *a.algebra_ == *b.algebra_ && a.variables_ == b.variables_ && a.potatoes_ == b.potatoes_
        && a.relations_ == b.relations_;
}

Instance full_instance(std::shared_ptr<const FiniteAlgebra> algebra, std::vector<std::string> variables,
    std::vector<ElementSet> potatoes)
{
    const std::size_t n = variables.size();
    std::vector<Relation> relations;
    relations.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            relations.push_back(x == y ? Relation::diagonal(potatoes[x]) : Relation::product(potatoes[x], potatoes[y]));
    return Instance(std::move(algebra), std::move(variables), std::move(potatoes), std::move(relations));
}

std::optional<std::string> closure_violation(const Instance & inst)
{
    const auto & alg = inst.algebra();
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        if (! inst.potato(x).empty() && ! is_subuniverse(alg, inst.potato(x)))
            return "potato of '" + inst.variables()[x] + "' is not a subuniverse";
    for (std::size_t x = 0; x < inst.variable_count(); ++x)
        for (std::size_t y = 0; y < inst.variable_count(); ++y)
            if (! inst.relation(x, y).empty() && ! is_closed_relation(alg, inst.relation(x, y)))
                return "relation (" + inst.variables()[x] + "," + inst.variables()[y] + ") is not a subuniverse of the square";
    return std::nullopt;
}

void RawInstance::validate() const
{
    if (! algebra)
        fail(ErrorCode::PreconditionFailed, "raw instance without an ambient algebra");
    const std::size_t n = variables.size();
    for (const auto & c : binary) {
        if (c.first >= n || c.second >= n)
            fail(ErrorCode::VariableOutOfRange, "binary constraint scope outside the variable list");
        for (auto [a, b] : c.relation)
            if (a >= algebra->size() || b >= algebra->size())
                fail(ErrorCode::ElementOutOfRange, "binary constraint mentions an element outside the universe");
    }
    for (const auto & c : unary) {
        if (c.variable >= n)
            fail(ErrorCode::VariableOutOfRange, "unary constraint scope outside the variable list");
        for (Element a : c.allowed)
            if (a >= algebra->size())
                fail(ErrorCode::ElementOutOfRange, "unary constraint mentions an element outside the universe");
    }
}

std::optional<std::string> RawInstance::closure_violation() const
{
    for (std::size_t i = 0; i < binary.size(); ++i)
        if (! binary[i].relation.empty() && ! is_closed_relation(*algebra, binary[i].relation))
            return "binary constraint #" + std::to_string(i) + " is not a subuniverse of D^2";
    for (std::size_t i = 0; i < unary.size(); ++i)
        if (! unary[i].allowed.empty() && ! is_subuniverse(*algebra, unary[i].allowed))
            return "unary constraint #" + std::to_string(i) + " is not a subuniverse of D";
    return std::nullopt;
}

bool operator==(const RawInstance & a, const RawInstance & b)
{
    return *a.algebra == *b.algebra && a.variables == b.variables && a.binary == b.binary && a.unary == b.unary;
}

namespace {

StandardWitness witness(std::vector<std::size_t> vars, std::vector<Element> elems, std::string description)
{
    return StandardWitness{std::move(vars), std::move(elems), std::move(description)};
}

} // namespace

StandardReport validate_standard(const Instance & inst)
{
    StandardReport report;
    report.empty = inst.is_empty();
    const std::size_t n = inst.variable_count();
    const auto & names = inst.variables();

    for (std::size_t x = 0; x < n && report.diagonal.passed; ++x)
        if (inst.relation(x, x) != Relation::diagonal(inst.potato(x))) {
            report.diagonal.passed = false;
            report.diagonal.witness = witness({x}, {}, "R_" + names[x] + names[x] + " is not the diagonal of the potato");
        }

    for (std::size_t x = 0; x < n && report.triangle.passed; ++x)
        for (std::size_t y = 0; y < n && report.triangle.passed; ++y)
            for (std::size_t z = 0; z < n && report.triangle.passed; ++z) {
                const auto & rxz = inst.relation(x, z);
                const auto & ryz = inst.relation(y, z);
                for (auto [a, b] : inst.relation(x, y)) {
                    bool supported = false;
                    for (Element c : inst.potato(z))
                        if (rxz.contains(a, c) && ryz.contains(b, c)) {
                            supported = true;
                            break;
                        }
                    if (! supported) {
                        report.triangle.passed = false;
                        report.triangle.witness = witness({x, y, z}, {a, b},
                            "pair (" + std::to_string(a) + "," + std::to_string(b) + ") of R_" + names[x] + names[y]
                                + " has no support in " + names[z]);
                        break;
                    }
                }
            }

    for (std::size_t x = 0; x < n && report.subdirect.passed; ++x)
        for (std::size_t y = 0; y < n && report.subdirect.passed; ++y) {
            if (inst.potato(x).empty() || inst.potato(y).empty())
                continue;
            const auto & r = inst.relation(x, y);
            const auto left = r.first_projection();
            const auto right = r.second_projection();
            for (Element a : inst.potato(x))
                if (! left.contains(a)) {
                    report.subdirect.passed = false;
                    report.subdirect.witness = witness({x, y}, {a},
                        "element " + std::to_string(a) + " of P_" + names[x] + " has no partner in R_" + names[x] + names[y]);
                    break;
                }
            if (! report.subdirect.passed)
                break;
            for (Element b : inst.potato(y))
                if (! right.contains(b)) {
                    report.subdirect.passed = false;
                    report.subdirect.witness = witness({y, x}, {b},
                        "element " + std::to_string(b) + " of P_" + names[y] + " has no partner in R_" + names[x] + names[y]);
                    break;
                }
        }

    for (std::size_t x = 0; x < n && report.symmetric.passed; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (inst.relation(y, x) != inst.relation(x, y).inverse()) {
                report.symmetric.passed = false;
                report.symmetric.witness = witness({x, y}, {}, "R_" + names[y] + names[x] + " is not the inverse of R_" + names[x] + names[y]);
                break;
            }
    return report;
}

Instance restrict(const Instance & inst, const std::vector<ElementSet> & new_potatoes)
{
    const std::size_t n = inst.variable_count();
    if (new_potatoes.size() != n)
        fail(ErrorCode::SizeMismatch, "expected one potato per variable");
    for (std::size_t x = 0; x < n; ++x)
        if (! new_potatoes[x].is_subset_of(inst.potato(x)))
            fail(ErrorCode::PreconditionFailed, "new potato of '" + inst.variables()[x] + "' is not inside the old one");
    std::vector<Relation> relations;
    relations.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            relations.push_back(inst.relation(x, y).restrict(new_potatoes[x], new_potatoes[y]));
    return Instance(inst.algebra_ptr(), inst.variables(), new_potatoes, std::move(relations));
}

bool is_solution(const Instance & inst, const Assignment & assignment)
{
    const std::size_t n = inst.variable_count();
    if (assignment.size() != n)
        fail(ErrorCode::SizeMismatch, "assignment covers " + std::to_string(assignment.size()) + " of "
                + std::to_string(n) + " variables");
    for (std::size_t x = 0; x < n; ++x)
        if (! inst.potato(x).contains(assignment[x]))
            return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (! inst.relation(x, y).contains(assignment[x], assignment[y]))
                return false;
    return true;
}

bool solution_closure_check(const Instance & inst, const Assignment & s1, const Assignment & s2, const Term & dot)
{
    if (! is_solution(inst, s1) || ! is_solution(inst, s2))
        fail(ErrorCode::PreconditionFailed, "solution_closure_check expects two solutions");
    const auto t = binary_table(inst.algebra(), dot);
    Assignment combined(s1.size());
    for (std::size_t x = 0; x < s1.size(); ++x)
        combined[x] = t(s1[x], s2[x]);
    return is_solution(inst, combined);
}

} // namespace mcsp
