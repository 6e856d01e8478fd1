#include "mcsp/term.hpp"

#include <algorithm>

#include "mcsp/error.hpp"

namespace mcsp {

Term Term::var(std::size_t index)
{
    Term t;
    t.node_ = Var{index};
    return t;
}

Term Term::app(std::string symbol, std::vector<Term> args)
{
    Term t;
    t.node_ = App{std::move(symbol), std::move(args)};
    return t;
}

std::size_t Term::variable_bound() const
{
    if (is_var())
        return var_index() + 1;
    std::size_t bound = 0;
    for (const auto & a : args())
        bound = std::max(bound, a.variable_bound());
    return bound;
}

bool operator==(const Term & a, const Term & b)
{
    if (a.is_var() != b.is_var())
        return false;
    if (a.is_var())
        return a.var_index() == b.var_index();
    return a.symbol() == b.symbol() && a.args() == b.args();
}

Term substitute(const Term & term, std::span<const Term> replacements)
{
    if (term.is_var()) {
        if (term.var_index() >= replacements.size())
            fail(ErrorCode::VariableOutOfRange, "no replacement for x" + std::to_string(term.var_index()));
        return replacements[term.var_index()];
    }
    std::vector<Term> args;
    args.reserve(term.args().size());
    for (const auto & a : term.args())
        args.push_back(substitute(a, replacements));
    return Term::app(term.symbol(), std::move(args));
}

std::string to_string(const Term & term)
{
    if (term.is_var())
        return "x" + std::to_string(term.var_index());
    std::string out = term.symbol() + "(";
    for (std::size_t i = 0; i < term.args().size(); ++i) {
        if (i)
            out += ",";
        out += to_string(term.args()[i]);
    }
    return out + ")";
}

namespace {

// Term with symbol names resolved against one signature.
struct ResolvedTerm {
    std::size_t var = 0;
    std::size_t symbol = 0;
    bool is_var = false;
    std::vector<ResolvedTerm> args;
};

ResolvedTerm resolve(const FiniteAlgebra & alg, const Term & term, std::size_t var_count)
{
    ResolvedTerm r;
    if (term.is_var()) {
        if (term.var_index() >= var_count)
            fail(ErrorCode::VariableOutOfRange, "variable x" + std::to_string(term.var_index()) + " but only "
                    + std::to_string(var_count) + " variables");
        r.is_var = true;
        r.var = term.var_index();
        return r;
    }
    r.symbol = alg.signature().index_of(term.symbol());
    const auto arity = alg.signature()[r.symbol].arity;
    if (term.args().size() != arity)
        fail(ErrorCode::ArityMismatch, "'" + term.symbol() + "' has arity " + std::to_string(arity) + " but is applied to "
                + std::to_string(term.args().size()) + " arguments");
    for (const auto & a : term.args())
        r.args.push_back(resolve(alg, a, var_count));
    return r;
}

Element evaluate(const FiniteAlgebra & alg, const ResolvedTerm & t, std::span<const Element> assignment)
{
    if (t.is_var)
        return assignment[t.var];
    Element stack_args[8];
    std::vector<Element> heap_args;
    std::span<Element> args;
    if (t.args.size() <= 8)
        args = std::span<Element>(stack_args, t.args.size());
    else {
        heap_args.resize(t.args.size());
        args = heap_args;
    }
    for (std::size_t i = 0; i < t.args.size(); ++i)
        args[i] = evaluate(alg, t.args[i], assignment);
    return alg.apply(t.symbol, args);
}

void check_assignment(const FiniteAlgebra & alg, std::size_t var_count, std::span<const Element> assignment)
{
    if (assignment.size() != var_count)
        fail(ErrorCode::SizeMismatch, "assignment has " + std::to_string(assignment.size()) + " values, expected "
                + std::to_string(var_count));
    for (Element a : assignment)
        if (a >= alg.size())
            fail(ErrorCode::ElementOutOfRange, "assignment value " + std::to_string(a) + " outside universe");
}

} // namespace

Element eval_term(const FiniteAlgebra & alg, const Term & term, std::size_t var_count, std::span<const Element> assignment)
{
    const auto resolved = resolve(alg, term, var_count);
    check_assignment(alg, var_count, assignment);
    return evaluate(alg, resolved, assignment);
}

std::vector<Element> term_table(const FiniteAlgebra & alg, const Term & term, std::size_t var_count)
{
    const auto resolved = resolve(alg, term, var_count);
    std::vector<Element> table;
    table.reserve(table_length(alg.size(), var_count));
    for_each_tuple(alg.size(), var_count, [&](std::span<const Element> a) { table.push_back(evaluate(alg, resolved, a)); });
    return table;
}

bool depends_on(const FiniteAlgebra & alg, const Term & term, std::size_t var_count, std::size_t k)
{
    if (k >= var_count)
        fail(ErrorCode::VariableOutOfRange, "dependency position " + std::to_string(k) + " >= " + std::to_string(var_count));
    const auto table = term_table(alg, term, var_count);
    const std::size_t n = alg.size();
    // stride of position k in the row-major encoding
    const std::size_t stride = table_length(n, var_count - 1 - k);
    for (std::size_t offset = 0; offset < table.size(); ++offset) {
        const std::size_t digit = (offset / stride) % n;
        if (digit != 0)
            continue;
        for (std::size_t v = 1; v < n; ++v)
            if (table[offset + v * stride] != table[offset])
                return true;
    }
    return false;
}

BinaryTable::BinaryTable(std::size_t size, std::vector<Element> table) :
    size_(size),
    table_(std::move(table))
{
    if (table_.size() != size_ * size_)
        fail(ErrorCode::SizeMismatch, "binary table has wrong length");
}

BinaryTable binary_table(const FiniteAlgebra & alg, const Term & term)
{
    if (term.variable_bound() > 2)
        fail(ErrorCode::ArityMismatch, "term " + to_string(term) + " is not binary");
    return BinaryTable(alg.size(), term_table(alg, term, 2));
}

FiniteAlgebra dot_reduct(const FiniteAlgebra & alg, const Term & dot)
{
    auto table = binary_table(alg, dot);
    return FiniteAlgebra(alg.size(), Signature{{"dot", 2}}, {table.table()});
}

Term reduct_dot_term()
{
    return Term::app("dot", {Term::var(0), Term::var(1)});
}

} // namespace mcsp
