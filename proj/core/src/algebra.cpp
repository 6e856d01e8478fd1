#include "mcsp/algebra.hpp"

#include <set>

#include "mcsp/error.hpp"
#include "closure.hpp"

namespace mcsp {

Signature::Signature(std::vector<Symbol> symbols) :
    symbols_(std::move(symbols))
{
    std::set<std::string_view> names;
    for (const auto & s : symbols_)
        if (! names.insert(s.name).second)
            fail(ErrorCode::SignatureMismatch, "duplicate symbol '" + s.name + "'");
}

Signature::Signature(std::initializer_list<Symbol> symbols) :
    Signature(std::vector<Symbol>(symbols))
{
}

std::optional<std::size_t> Signature::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    fail(ErrorCode::UnknownSymbol, "symbol '" + std::string(name) + "' not in signature");
}

std::size_t table_length(std::size_t size, std::size_t arity)
{
    std::size_t length = 1;
    for (std::size_t i = 0; i < arity; ++i)
        length *= size;
    return length;
}

std::size_t table_offset(std::size_t size, std::span<const Element> args)
{
    std::size_t offset = 0;
    for (Element a : args)
        offset = offset * size + a;
    return offset;
}

void for_each_tuple(std::size_t size, std::size_t arity, const std::function<void(std::span<const Element>)> & visit)
{
    if (size == 0 && arity > 0)
        return;
    std::vector<Element> tuple(arity, 0);
    while (true) {
        visit(tuple);
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < size)
                break;
            tuple[pos] = 0;
            if (pos == 0)
                return;
        }
        if (arity == 0)
            return;
    }
}

FiniteAlgebra::FiniteAlgebra(std::size_t size, Signature signature, std::vector<std::vector<Element>> tables) :
    size_(size),
    signature_(std::move(signature)),
    tables_(std::move(tables))
{
    if (size_ == 0)
        fail(ErrorCode::PreconditionFailed, "algebra universe must be nonempty");
    if (tables_.size() != signature_.size())
        fail(ErrorCode::SignatureMismatch, "expected " + std::to_string(signature_.size()) + " tables, got "
                + std::to_string(tables_.size()));
    for (std::size_t s = 0; s < tables_.size(); ++s) {
        const auto expected = table_length(size_, signature_[s].arity);
        if (tables_[s].size() != expected)
            fail(ErrorCode::ArityMismatch, "table for '" + signature_[s].name + "' has " + std::to_string(tables_[s].size())
                    + " entries, expected " + std::to_string(expected));
        for (Element v : tables_[s])
            if (v >= size_)
                fail(ErrorCode::ElementOutOfRange, "table for '" + signature_[s].name + "' contains " + std::to_string(v));
    }
}

FiniteAlgebra FiniteAlgebra::tabulate(std::size_t size, Signature signature, const OperationFn & op)
{
    std::vector<std::vector<Element>> tables;
    for (std::size_t s = 0; s < signature.size(); ++s) {
        std::vector<Element> table;
        table.reserve(table_length(size, signature[s].arity));
        for_each_tuple(size, signature[s].arity, [&](std::span<const Element> args) { table.push_back(op(s, args)); });
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra(size, std::move(signature), std::move(tables));
}

Element eval_op(const FiniteAlgebra & alg, std::string_view symbol, std::span<const Element> args)
{
    const auto s = alg.signature().index_of(symbol);
    if (args.size() != alg.signature()[s].arity)
        fail(ErrorCode::ArityMismatch, "'" + std::string(symbol) + "' has arity " + std::to_string(alg.signature()[s].arity)
                + ", got " + std::to_string(args.size()) + " arguments");
    for (Element a : args)
        if (a >= alg.size())
            fail(ErrorCode::ElementOutOfRange, "argument " + std::to_string(a) + " outside universe of size "
                    + std::to_string(alg.size()));
    return alg.apply(s, args);
}

Element ProductAlgebra::encode(std::span<const Element> coordinates) const
{
    if (coordinates.size() != factor_sizes.size())
        fail(ErrorCode::SizeMismatch, "tuple length does not match number of factors");
    std::size_t code = 0;
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
        if (coordinates[i] >= factor_sizes[i])
            fail(ErrorCode::ElementOutOfRange, "coordinate out of range for factor " + std::to_string(i));
        code = code * factor_sizes[i] + coordinates[i];
    }
    return static_cast<Element>(code);
}

std::vector<Element> ProductAlgebra::decode(Element e) const
{
    std::vector<Element> coordinates(factor_sizes.size());
    std::size_t code = e;
    for (std::size_t i = factor_sizes.size(); i-- > 0;) {
        coordinates[i] = static_cast<Element>(code % factor_sizes[i]);
        code /= factor_sizes[i];
    }
    return coordinates;
}

ProductAlgebra product_algebra(std::span<const FiniteAlgebra> factors)
{
    if (factors.empty())
        fail(ErrorCode::EmptyList, "product of an empty list of algebras");
    ProductAlgebra result;
    std::size_t size = 1;
    for (const auto & f : factors) {
        if (! (f.signature() == factors.front().signature()))
            fail(ErrorCode::SignatureMismatch, "product factors have different signatures");
        result.factor_sizes.push_back(f.size());
        size *= f.size();
    }

    std::vector<std::vector<Element>> decoded(size);
    for (std::size_t e = 0; e < size; ++e)
        decoded[e] = result.decode(static_cast<Element>(e));

    std::vector<Element> coordinate_args;
    std::vector<Element> coordinates(factors.size());
    result.algebra = FiniteAlgebra::tabulate(size, factors.front().signature(),
        [&](std::size_t s, std::span<const Element> args) {
            for (std::size_t i = 0; i < factors.size(); ++i) {
                coordinate_args.clear();
                for (Element a : args)
                    coordinate_args.push_back(decoded[a][i]);
                coordinates[i] = factors[i].apply(s, coordinate_args);
            }
            return result.encode(coordinates);
        });
    return result;
}

bool is_subuniverse(const FiniteAlgebra & alg, const ElementSet & set)
{
    return subuniverse_closure(alg, set).size() == set.size();
}

ElementSet subuniverse_closure(const FiniteAlgebra & alg, const ElementSet & seed)
{
    std::vector<std::size_t> codes;
    for (Element e : seed) {
        if (e >= alg.size())
            fail(ErrorCode::ElementOutOfRange, "seed element " + std::to_string(e) + " outside universe");
        codes.push_back(e);
    }
    std::vector<std::size_t> arities;
    for (const auto & s : alg.signature())
        arities.push_back(s.arity);
    std::vector<Element> args;
    const auto closed = detail::semi_naive_closure(alg.size(), codes, arities,
        [&](std::size_t s, std::span<const std::size_t> a) -> std::size_t {
            args.assign(a.begin(), a.end());
            return alg.apply(s, args);
        });
    return ElementSet(std::vector<Element>(closed.begin(), closed.end()));
}

Subalgebra restrict_to_subuniverse(const FiniteAlgebra & alg, const ElementSet & sub)
{
    if (sub.empty())
        fail(ErrorCode::PreconditionFailed, "cannot restrict to an empty set");
    if (! is_subuniverse(alg, sub))
        fail(ErrorCode::NotClosed, "set is not closed under the basic operations");
    Subalgebra result;
    result.universe = sub;
    std::vector<Element> ambient_args;
    result.algebra = FiniteAlgebra::tabulate(sub.size(), alg.signature(), [&](std::size_t s, std::span<const Element> args) {
        ambient_args.clear();
        for (Element a : args)
            ambient_args.push_back(sub[a]);
        return static_cast<Element>(sub.index_of(alg.apply(s, ambient_args)));
    });
    return result;
}

QuotientAlgebra quotient_algebra(const FiniteAlgebra & alg, const Partition & congruence)
{
    if (congruence.universe_size() != alg.size())
        fail(ErrorCode::SizeMismatch, "partition universe does not match algebra");
    QuotientAlgebra result;
    result.partition = congruence;
    const std::size_t k = congruence.block_count();

    std::vector<std::vector<Element>> tables;
    for (std::size_t s = 0; s < alg.signature().size(); ++s) {
        const std::size_t arity = alg.signature()[s].arity;
        constexpr Element unset = ~Element{0};
        std::vector<Element> table(table_length(k, arity), unset);
        std::vector<Element> quotient_args(arity);
        // Audit well-definedness by visiting every ambient tuple.
        for_each_tuple(alg.size(), arity, [&](std::span<const Element> args) {
            for (std::size_t p = 0; p < arity; ++p)
                quotient_args[p] = result.project(args[p]);
            Element image = result.project(alg.apply(s, args));
            Element & slot = table[table_offset(k, quotient_args)];
            if (slot == unset)
                slot = image;
            else if (slot != image)
                fail(ErrorCode::NotCongruence, "operation '" + alg.signature()[s].name + "' is not well defined on the blocks");
        });
        tables.push_back(std::move(table));
    }
    result.algebra = FiniteAlgebra(k, alg.signature(), std::move(tables));
    return result;
}

} // namespace mcsp
