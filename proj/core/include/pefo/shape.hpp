#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pefo/shop.hpp"

namespace pefo {

// Shape flags of a shop, with every witness listed in ascending order.
struct ShopShape {
    // Exact special forms.
    std::vector<int> forall;                            // matches forall_at(n, b)
    std::vector<int> exists;                            // matches exists_at(n, b)
    std::vector<std::pair<int, int>> forall_exists;     // matches forall_exists_at(n, b, b'), b != b'

    // General forms.
    std::vector<int> a_witnesses;                       // image(b) = whole domain
    std::vector<int> e_witnesses;                       // b lies in every image

    bool is_permutation = false;
    bool is_equivalence = false;                        // reflexive, symmetric, transitive

    bool is_a_shop() const noexcept { return !a_witnesses.empty(); }
    bool is_e_shop() const noexcept { return !e_witnesses.empty(); }
};

ShopShape detect_shape(const Shop& f);

// Canonical A form: a tripartition {b}; kept; collapsed where g(b) is the
// whole domain, kept elements are fixed points, and collapsed elements map to
// a single kept element. kept is non-empty.
struct ATripartition {
    int b = -1;
    std::vector<int> kept;
    std::vector<int> collapsed;
};

// Canonical E form: a bipartition kept; absorbed where b lies in every
// image, kept elements keep themselves ({x,b} <= g(x)), and kept images
// jointly cover the domain. kept is non-empty.
struct EBipartition {
    int b = -1;
    std::vector<int> kept;
    std::vector<int> absorbed;
};

std::optional<ATripartition> canonical_a_form(const Shop& g);
std::optional<EBipartition> canonical_e_form(const Shop& g);

// For an A-shop f on at least two elements, returns a member of the monoid
// closure of f in canonical A form; dually for E-shops. The construction
// raises f to a power determined by the cycle structure of its digraph, then
// scans surjective sub-shops for a witness, falling back to a closure-wide
// scan.
Shop canonicalize_a(const Shop& f);
Shop canonicalize_e(const Shop& f);

// Adjacency view of a shop: edge (x, y) iff y lies in the image of x. For a
// shop this digraph has no sources and no sinks.
struct ShopDigraph {
    int n = 0;
    std::vector<std::uint32_t> out;

    bool edge(int x, int y) const { return (out[static_cast<std::size_t>(x)] >> y) & 1u; }
};

ShopDigraph digraph_of(const Shop& f);

} // namespace pefo
