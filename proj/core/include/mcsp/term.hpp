#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcsp/algebra.hpp"

namespace mcsp {

// A term over named operation symbols and numbered variables x0, x1, ...
class Term {
public:
    static Term var(std::size_t index);
    static Term app(std::string symbol, std::vector<Term> args);

    bool is_var() const noexcept { return std::holds_alternative<Var>(node_); }
    std::size_t var_index() const { return std::get<Var>(node_).index; }
    const std::string & symbol() const { return std::get<App>(node_).symbol; }
    const std::vector<Term> & args() const { return std::get<App>(node_).args; }

    // One more than the largest variable index occurring in the term (0 if none).
    std::size_t variable_bound() const;

    friend bool operator==(const Term & a, const Term & b);

private:
    struct Var {
        std::size_t index;
    };
    struct App {
        std::string symbol;
        std::vector<Term> args;
    };

    Term() = default;

    std::variant<Var, App> node_;
};

// Replaces every Var(i) by replacements[i].
Term substitute(const Term & term, std::span<const Term> replacements);

// Infix-free rendering, e.g. "q(x0,x1,x1)".
std::string to_string(const Term & term);

Element eval_term(const FiniteAlgebra & alg, const Term & term, std::size_t var_count, std::span<const Element> assignment);

// The term operation as a row-major table over all size^var_count assignments.
std::vector<Element> term_table(const FiniteAlgebra & alg, const Term & term, std::size_t var_count);

// True iff changing only variable k can change the value of the term operation.
bool depends_on(const FiniteAlgebra & alg, const Term & term, std::size_t var_count, std::size_t k);

// A binary term operation tabulated once for repeated use.
class BinaryTable {
public:
    BinaryTable() = default;
    BinaryTable(std::size_t size, std::vector<Element> table);

    std::size_t size() const noexcept { return size_; }
    Element operator()(Element a, Element b) const { return table_[a * size_ + b]; }
    const std::vector<Element> & table() const noexcept { return table_; }

private:
    std::size_t size_ = 0;
    std::vector<Element> table_;
};

// Fails with ArityMismatch if the term mentions a variable other than x0, x1.
BinaryTable binary_table(const FiniteAlgebra & alg, const Term & term);

// Algebra with the single binary operation "dot" given by the term.
FiniteAlgebra dot_reduct(const FiniteAlgebra & alg, const Term & dot);

// dot(x0, x1) over the reduct's signature.
Term reduct_dot_term();

} // namespace mcsp
