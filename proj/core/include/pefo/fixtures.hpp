#pragma once

#include <string>
#include <vector>

#include "pefo/shop.hpp"
#include "pefo/structure.hpp"

namespace pefo {

// Named structure families with a fixed canonical labelling:
//
//   clique k         loopless complete digraph on k vertices (relation E)
//   nae k            single ternary relation R_NAE = B^3 minus constant triples
//   k2_plus_k1       2-clique on {0,1} plus the isolated vertex 2 (relation E)
//   multipartite s1 s2 ...   complete multipartite digraph; block i occupies
//                    the next s_i consecutive elements, edges join distinct
//                    blocks in both directions
Structure fixture(const std::string& name, const std::vector<int>& params);

std::vector<std::string> fixture_names();

// Complements the edge set of a single-binary-relation structure, loops
// included.
Structure complement_digraph(const Structure& b);

// The quotient of b by an equivalence shop f that preserves b: one element
// per class (classes ordered by least member), a relation holds on classes
// iff it holds on some choice of representatives.
Structure quotient(const Structure& b, const Shop& f);

} // namespace pefo
