#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pefo/formula.hpp"
#include "pefo/structure.hpp"

namespace pefo {

// A concrete relation value: arity plus a sorted, deduplicated tuple set.
struct Relation {
    int arity = 0;
    std::vector<Tuple> tuples;

    Relation() = default;
    Relation(int arity, std::vector<Tuple> tuples);

    bool contains(std::span<const int> t) const;
    bool operator==(const Relation&) const = default;
};

// Tarskian truth by exhaustive recursion: quantifiers iterate the (possibly
// restricted) domain in ascending order, junctions short-circuit, equality
// compares assigned elements. env assigns the free variables; evaluation
// never mutates it.
bool evaluate_bruteforce(const Structure& b, const FormulaPtr& f,
                         const std::map<std::string, int>& env = {});

// The relation {x : b |= f(x)} over the given free-variable list, by brute
// force over all assignments.
Relation extension(const Structure& b, const FormulaPtr& f,
                   const std::vector<std::string>& free_vars);

} // namespace pefo
