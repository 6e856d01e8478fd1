#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/element_set.hpp"
#include "mcsp/partition.hpp"

namespace mcsp {

struct Symbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const Symbol &, const Symbol &) = default;
};

// Ordered list of operation symbols with unique names.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Symbol> symbols);
    Signature(std::initializer_list<Symbol> symbols);

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const; // throws UnknownSymbol

    std::size_t size() const noexcept { return symbols_.size(); }
    const Symbol & operator[](std::size_t i) const { return symbols_[i]; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend bool operator==(const Signature &, const Signature &) = default;

private:
    std::vector<Symbol> symbols_;
};

// Number of entries in a table of the given arity: size^arity.
std::size_t table_length(std::size_t size, std::size_t arity);

// Row-major offset of an argument tuple, first argument most significant.
std::size_t table_offset(std::size_t size, std::span<const Element> args);

// Calls visit(tuple) for every tuple in {0..size-1}^arity in row-major order.
void for_each_tuple(std::size_t size, std::size_t arity, const std::function<void(std::span<const Element>)> & visit);

// A finite algebra on the universe 0..size-1 whose basic operations are
// stored as full row-major tables. Immutable after construction.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::size_t size, Signature signature, std::vector<std::vector<Element>> tables);

    using OperationFn = std::function<Element(std::size_t symbol, std::span<const Element> args)>;
    static FiniteAlgebra tabulate(std::size_t size, Signature signature, const OperationFn & op);

    std::size_t size() const noexcept { return size_; }
    const Signature & signature() const noexcept { return signature_; }
    const std::vector<Element> & table(std::size_t symbol) const { return tables_[symbol]; }

    // Unchecked lookup by symbol index.
    Element apply(std::size_t symbol, std::span<const Element> args) const
    {
        return tables_[symbol][table_offset(size_, args)];
    }

    friend bool operator==(const FiniteAlgebra &, const FiniteAlgebra &) = default;

private:
    std::size_t size_ = 0;
    Signature signature_;
    std::vector<std::vector<Element>> tables_;
};

// Checked lookup: unknown symbol, arity mismatch and out-of-range elements
// are reported with distinct error codes.
Element eval_op(const FiniteAlgebra & alg, std::string_view symbol, std::span<const Element> args);

struct ProductAlgebra {
    FiniteAlgebra algebra;
    std::vector<std::size_t> factor_sizes;

    Element encode(std::span<const Element> coordinates) const;
    std::vector<Element> decode(Element e) const;
};

ProductAlgebra product_algebra(std::span<const FiniteAlgebra> factors);

bool is_subuniverse(const FiniteAlgebra & alg, const ElementSet & set);
ElementSet subuniverse_closure(const FiniteAlgebra & alg, const ElementSet & seed);

struct Subalgebra {
    FiniteAlgebra algebra;
    ElementSet universe; // local index i corresponds to universe[i]

    Element to_ambient(Element local) const { return universe[local]; }
    Element to_local(Element ambient) const { return static_cast<Element>(universe.index_of(ambient)); }
};

Subalgebra restrict_to_subuniverse(const FiniteAlgebra & alg, const ElementSet & sub);

struct QuotientAlgebra {
    FiniteAlgebra algebra;
    Partition partition; // quotient element i is partition.block(i)

    Element project(Element e) const { return static_cast<Element>(partition.block_index(e)); }
    const ElementSet & block(Element q) const { return partition.block(q); }
};

// Builds the induced tables, failing with NotCongruence if some operation is
// not well defined on the blocks.
QuotientAlgebra quotient_algebra(const FiniteAlgebra & alg, const Partition & congruence);

} // namespace mcsp
