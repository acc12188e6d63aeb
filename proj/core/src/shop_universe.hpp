#pragma once

#include <unordered_map>
#include <vector>

#include "pefo/shop.hpp"

namespace pefo::detail {

// All shops on a small domain with a precomputed composition table and
// per-shop surjective sub-shop lists. Closure computations over shop ids
// then reduce to table lookups. Built once per domain size and immutable
// afterwards; the table is quadratic in the shop count, so only domains up
// to three elements are supported (265 shops).
struct ShopUniverse {
    int n = 0;
    std::vector<Shop> shops;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::vector<int>> compose_table; // [g][f] = id of g after f
    std::vector<std::vector<int>> subshops;      // sorted ids
    std::vector<std::vector<int>> singleton_closure; // sorted ids, one per shop
    int identity_id = 0;

    static constexpr int max_domain = 3;

    static const ShopUniverse& get(int n);

    int id_of(const Shop& f) const { return index.at(f.key()); }

    // Least monoid containing the seeds, as sorted ids.
    std::vector<int> closure_ids(const std::vector<int>& seeds) const;
};

} // namespace pefo::detail
