#include "mcsp/identities.hpp"

#include "mcsp/error.hpp"

namespace mcsp {

std::optional<std::vector<Element>> identity_counterexample(
    const FiniteAlgebra & alg, const Term & lhs, const Term & rhs, std::size_t var_count)
{
    const auto left = term_table(alg, lhs, var_count);
    const auto right = term_table(alg, rhs, var_count);
    for (std::size_t offset = 0; offset < left.size(); ++offset) {
        if (left[offset] == right[offset])
            continue;
        std::vector<Element> assignment(var_count);
        std::size_t code = offset;
        for (std::size_t i = var_count; i-- > 0;) {
            assignment[i] = static_cast<Element>(code % alg.size());
            code /= alg.size();
        }
        return assignment;
    }
    return std::nullopt;
}

bool check_identity(const FiniteAlgebra & alg, const Term & lhs, const Term & rhs, std::size_t var_count)
{
    return ! identity_counterexample(alg, lhs, rhs, var_count).has_value();
}

bool is_idempotent(const FiniteAlgebra & alg)
{
    std::vector<Element> args;
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
        const auto arity = alg.signature()[s].arity;
        for (Element a = 0; a < alg.size(); ++a) {
            args.assign(arity, a);
            if (alg.apply(s, args) != a)
                return false;
        }
    }
    return true;
}

bool is_two_semilattice(const FiniteAlgebra & alg, const Term & dot)
{
    if (dot.variable_bound() > 2)
        fail(ErrorCode::ArityMismatch, "dot term " + to_string(dot) + " is not binary");
    const auto x = Term::var(0);
    const auto y = Term::var(1);
    const auto xy = substitute(dot, std::vector{x, y});
    const auto yx = substitute(dot, std::vector{y, x});
    const auto xx = substitute(dot, std::vector{x, x});
    const auto x_xy = substitute(dot, std::vector{x, xy});
    return check_identity(alg, xx, x, 2) && check_identity(alg, xy, yx, 2) && check_identity(alg, x_xy, xy, 2);
}

bool is_two_semilattice_on(const BinaryTable & dot, const ElementSet & elements)
{
    for (Element a : elements) {
        if (dot(a, a) != a)
            return false;
        for (Element b : elements) {
            const Element ab = dot(a, b);
            if (! elements.contains(ab) || ab != dot(b, a) || dot(a, ab) != ab)
                return false;
        }
    }
    return true;
}

bool is_two_semilattice_on(const BinaryTable & dot)
{
    return is_two_semilattice_on(dot, ElementSet::full(dot.size()));
}

} // namespace mcsp
