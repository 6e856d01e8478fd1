#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mcsp/algebra.hpp"
#include "mcsp/bulatov.hpp"
#include "mcsp/instance.hpp"
#include "mcsp/maltsev.hpp"
#include "mcsp/partition.hpp"
#include "mcsp/term.hpp"

namespace mcsp {

// Key order is kept as written, so output is byte-stable.
using Json = nlohmann::ordered_json;

// Every *_from_json fails with ParseError on malformed input; semantic
// problems (bad tables, out-of-range elements) keep their own error codes.

Json algebra_to_json(const FiniteAlgebra & alg);
FiniteAlgebra algebra_from_json(const Json & j);

Json term_to_json(const Term & t);
Term term_from_json(const Json & j);

Json partition_to_json(const Partition & p);
Partition partition_from_json(const Json & j, std::size_t universe_size);

// Resolves the "algebra" field when it is a string.
using AlgebraResolver = std::function<std::shared_ptr<const FiniteAlgebra>(const std::string & name)>;
// Looks names up among the built-in fixtures.
AlgebraResolver fixture_resolver();

// "algebra" is written inline unless algebra_name is given.
Json instance_to_json(const Instance & inst, const std::optional<std::string> & algebra_name = std::nullopt);
// A missing R_xy defaults to the inverse of R_yx, then to P_x x P_y; a
// missing R_xx to the diagonal of P_x; a missing potato to the whole
// universe. Potatoes and relations must be subuniverses (NotClosed).
Instance instance_from_json(const Json & j, const AlgebraResolver & resolve = fixture_resolver());

Json raw_instance_to_json(const RawInstance & raw, const std::optional<std::string> & algebra_name = std::nullopt);
RawInstance raw_instance_from_json(const Json & j, const AlgebraResolver & resolve = fixture_resolver());

Json assignment_to_json(const std::vector<std::string> & variables, const Assignment & a);
Json standard_report_to_json(const StandardReport & report, const std::vector<std::string> & variables);
Json trace_to_json(const ReductionTrace & trace, const std::vector<std::string> & variables);
Json hypothesis_report_to_json(const HypothesisReport & report);
Json solve_result_to_json(const SolveResult & result, const std::vector<std::string> & variables);

Json parse_json(const std::string & text); // ParseError on bad syntax

} // namespace mcsp
