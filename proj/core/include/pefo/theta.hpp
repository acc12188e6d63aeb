#pragma once

#include <string>
#include <vector>

#include "pefo/evaluate.hpp"
#include "pefo/formula.hpp"
#include "pefo/shop.hpp"
#include "pefo/structure.hpp"

namespace pefo {

// The quantifier-free conjunction of all positive facts of the tuple r, over
// fresh variables v0,...,v{l-1} (one per position of r). No facts yields the
// truth node.
FormulaPtr canonical_conjunction(const Structure& b, const Tuple& r);

// Free variables u1,...,uk used by the two tuple-type formulas below.
std::vector<std::string> theta_free_vars(int k);

// The equality-using type formula of a tuple: its extension is the orbit of
// r under automorphisms of b.
FormulaPtr theta_tuple_eq(const Structure& b, const Tuple& r);

// The equality-free type formula of a tuple: b |= theta_r(r') iff some shop
// preserving b maps r to r' componentwise. The inner disjunction ranges over
// all n^n assignment tuples, so the domain is capped at four elements.
FormulaPtr theta_tuple(const Structure& b, const Tuple& r);

// Disjunction of theta_tuple over the tuples of s; defines s exactly when s
// is invariant under every shop preserving b (see preserves). Rejects the
// empty relation: the fragment cannot define emptiness.
FormulaPtr theta_relation(const Structure& b, const Relation& s);

// Whether f preserves the relation s: tuples of s map into s under every
// componentwise image choice.
bool preserves(const Shop& f, const Relation& s);

} // namespace pefo
