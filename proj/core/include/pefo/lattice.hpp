#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pefo/dsm.hpp"

namespace pefo {

// The inclusion lattice of all monoids on an n-element domain. Nodes are
// sorted by (size, canonical member order), so the singleton {identity} is
// first and the monoid of all shops last; edges are the Hasse covers.
struct DsmLattice {
    int domain_size = 0;
    std::vector<Dsm> nodes;
    std::vector<std::pair<int, int>> edges; // (subset index, superset index)

    int bottom() const noexcept { return 0; }
    int top() const noexcept { return static_cast<int>(nodes.size()) - 1; }
};

// Enumerates every monoid as the join closure of the singleton-generated
// ones. The default cap of three keeps this fast; four is feasible but slow.
DsmLattice enumerate_dsms(int n, int cap = 3);

// Deterministic DOT rendering; nodes carry their generator notation plus an
// optional extra label line (verdicts, usually) keyed by node index.
std::string export_dot(const DsmLattice& lattice,
                       const std::map<int, std::string>& labels = {});

} // namespace pefo
