#include "mcsp/edge_term.hpp"

#include <algorithm>

#include "mcsp/error.hpp"
#include "mcsp/identities.hpp"

namespace mcsp {

std::vector<std::vector<bool>> edge_identity_rows(std::size_t k)
{
    if (k < 2)
        fail(ErrorCode::ArityMismatch, "edge operations need k >= 2");
    std::vector<std::vector<bool>> rows;
    std::vector<bool> row(k + 1, false);
    row[0] = row[1] = true;
    rows.push_back(row);
    row.assign(k + 1, false);
    row[0] = row[2] = true;
    rows.push_back(row);
    for (std::size_t r = 2; r < k; ++r) {
        row.assign(k + 1, false);
        row[r + 1] = true;
        rows.push_back(row);
    }
    return rows;
}

Term edge_row_term(const Term & e, const std::vector<bool> & row)
{
    std::vector<Term> args;
    args.reserve(row.size());
    for (bool is_y : row)
        args.push_back(Term::var(is_y ? 1 : 0));
    return substitute(e, args);
}

bool is_edge_operation(const FiniteAlgebra & alg, const Term & e, std::size_t k)
{
    if (k < 2)
        fail(ErrorCode::ArityMismatch, "edge operations need k >= 2");
    if (e.variable_bound() > k + 1)
        fail(ErrorCode::ArityMismatch, "term " + to_string(e) + " is not " + std::to_string(k + 1) + "-ary");
    const auto x = Term::var(0);
    for (const auto & row : edge_identity_rows(k))
        if (! check_identity(alg, edge_row_term(e, row), x, 2))
            return false;
    return true;
}

std::set<std::size_t> dependency_set(const FiniteAlgebra & alg, const Term & term, std::size_t var_count)
{
    std::set<std::size_t> result;
    for (std::size_t k = 0; k < var_count; ++k)
        if (depends_on(alg, term, var_count, k))
            result.insert(k);
    return result;
}

namespace {

bool subset_of(const std::set<std::size_t> & s, std::initializer_list<std::size_t> allowed)
{
    return std::all_of(s.begin(), s.end(), [&](std::size_t i) {
        return std::find(allowed.begin(), allowed.end(), i) != allowed.end();
    });
}

} // namespace

Term derive_dot_term(const Term & e, std::size_t k, const Term & star, const std::set<std::size_t> & dep_set,
    std::optional<std::size_t> fallback_row)
{
    if (k < 2)
        fail(ErrorCode::ArityMismatch, "edge operations need k >= 2");
    if (e.variable_bound() > k + 1)
        fail(ErrorCode::ArityMismatch, "term " + to_string(e) + " is not " + std::to_string(k + 1) + "-ary");
    if (star.variable_bound() > 2)
        fail(ErrorCode::ArityMismatch, "term " + to_string(star) + " is not binary");
    for (std::size_t i : dep_set)
        if (i > k)
            fail(ErrorCode::VariableOutOfRange, "dependency position " + std::to_string(i) + " > k");

    const auto x = Term::var(0);
    const auto y = Term::var(1);
    const auto x_star_y = substitute(star, std::vector{x, y});

    auto with_star_at = [&](std::initializer_list<std::size_t> positions) {
        std::vector<Term> args(k + 1, x);
        for (std::size_t p : positions)
            args[p] = x_star_y;
        return substitute(e, args);
    };

    if (! fallback_row) {
        if (subset_of(dep_set, {0, 1}))
            return with_star_at({0, 1});
        if (subset_of(dep_set, {0, 2}))
            return with_star_at({0, 2});
        if (dep_set.size() == 1 && *dep_set.begin() >= 3)
            return with_star_at({*dep_set.begin()});
    }

    const auto rows = edge_identity_rows(k);
    if (fallback_row) {
        if (*fallback_row >= rows.size())
            fail(ErrorCode::NoApplicableCase, "fallback row " + std::to_string(*fallback_row) + " does not exist");
        return edge_row_term(e, rows[*fallback_row]);
    }

    auto y_positions_in_dep = [&](const std::vector<bool> & row) {
        std::size_t inside = 0, outside = 0;
        for (std::size_t p = 0; p < row.size(); ++p)
            if (row[p])
                (dep_set.count(p) ? inside : outside)++;
        return std::pair{inside, outside};
    };

    for (const auto & row : rows) {
        auto [inside, outside] = y_positions_in_dep(row);
        if (inside > 0 && outside == 0 && inside < dep_set.size())
            return edge_row_term(e, row);
    }
    for (const auto & row : rows) {
        auto [inside, outside] = y_positions_in_dep(row);
        (void) outside;
        if (inside > 0 && inside < dep_set.size())
            return edge_row_term(e, row);
    }
    fail(ErrorCode::NoApplicableCase, "no edge-identity row separates the dependency set");
}

} // namespace mcsp
