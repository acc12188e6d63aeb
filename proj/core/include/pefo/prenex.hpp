#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pefo/formula.hpp"

namespace pefo {

struct PrefixEntry {
    Quantifier quantifier = Quantifier::exists;
    std::string variable;
    std::optional<std::vector<int>> restriction;

    bool operator==(const PrefixEntry&) const = default;
};

// A quantifier prefix over a quantifier-free matrix. Prefix variables are
// pairwise distinct.
struct PrenexFormula {
    std::vector<PrefixEntry> prefix;
    FormulaPtr matrix;

    FormulaPtr to_formula() const;
    std::string to_string() const;
};

// Prenex normal form: bound variables are first renamed apart (clashing
// names become v#1, v#2, ... in left-to-right traversal order; unique names
// are kept), then quantifiers are hoisted left to right. In this positive
// fragment renamed-apart quantifiers commute past junctions without capture,
// so the result is equivalent. Rejects restricted quantifiers; those only
// arise downstream of prenexing.
PrenexFormula prenex(const FormulaPtr& f);

} // namespace pefo
