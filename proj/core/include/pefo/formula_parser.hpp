#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pefo/formula.hpp"
#include "pefo/structure.hpp"

namespace pefo {

struct ParseOptions {
    // When set, relation names and arities are checked against it.
    const Signature* signature = nullptr;
    // When set, every free variable must be declared here (an empty list
    // demands a sentence). When unset, free variables are unrestricted.
    std::optional<std::vector<std::string>> declared_free;
};

// Recursive-descent parser for
//
//   formula := quant | disj
//   quant   := ("exists" | "forall") VAR formula
//   disj    := conj {"|" conj}
//   conj    := prim {"&" prim}
//   prim    := REL "(" term {"," term} ")" | term "=" term | "(" formula ")" | "true"
//   term    := VAR | "@" INT
//
// `&` binds over `|`; quantifiers extend maximally to the right. `true`
// round-trips the designated empty-conjunction node.
FormulaPtr parse_formula(std::string_view text, const ParseOptions& options = {});

} // namespace pefo
