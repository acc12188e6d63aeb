#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pefo/shop.hpp"

namespace pefo {

class Structure;

// A down-closed shop monoid: contains the identity and is closed under
// composition and under surjective sub-shops. Members are kept sorted in the
// canonical shop order.
class Dsm {
public:
    Dsm() = default;
    // Sorts and deduplicates; requires the identity to be present. Closure
    // itself is not re-verified here, see verify_dsm_closed.
    Dsm(int n, std::vector<Shop> members);

    // Least fixed point of {identity} + generators under composition and
    // surjective sub-shops.
    static Dsm closure(int n, const std::vector<Shop>& generators);

    int domain_size() const noexcept { return n_; }
    const std::vector<Shop>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const Shop& f) const;

    bool operator==(const Dsm& other) const = default;

private:
    int n_ = 0;
    std::vector<Shop> members_;
};

// All shops preserving every relation of b. Verified closed for domains of
// size at most three (larger monoids are closed by the same argument but the
// pairwise check gets expensive).
Dsm she_monoid(const Structure& b, int cap = Shop::default_enumeration_cap);

// Exhaustive check of the monoid invariants.
bool verify_dsm_closed(const Dsm& d);

// Pointwise inverse of every member; again a monoid.
Dsm dsm_inverse(const Dsm& d);

// True iff every member has singleton images.
bool is_permutation_subgroup(const Dsm& d);

// A partition of the domain such that every member maps each block into a
// single block, inducing a block permutation (which may differ from member
// to member). Partitions need at least two blocks and at least one block of
// size two or more; the all-singleton case is is_permutation_subgroup.
struct BlockPermutationBound {
    std::vector<std::vector<int>> blocks;
    // Distinct block maps realised by members: entry m means block i maps
    // into block m[i].
    std::vector<std::vector<int>> block_maps;

    std::string describe() const;
};

std::optional<BlockPermutationBound> is_block_permutation_bounded(const Dsm& d);

// Smallest generating set: all singletons are tried first, then pairs (for
// small monoids), then a greedy cover. Ties break toward canonical order.
std::vector<Shop> minimal_generators(const Dsm& d);

// Angle-bracket display of a monoid by its minimal generators.
std::string generator_notation(const Dsm& d);

} // namespace pefo
