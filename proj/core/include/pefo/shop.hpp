#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pefo/error.hpp"

namespace pefo {

class Structure;

// A shop (surjective hyper-operation) on the domain {0,...,n-1}: every
// element is mapped to a non-empty subset of the domain, and every element
// of the domain occurs in at least one image. Images are stored as bitmasks.
//
// Shops are immutable values; all operations on them are free functions that
// return fresh shops.
class Shop {
public:
    // The (a|bc|d) notation reads images as digit strings, so domains are
    // kept below ten elements.
    static constexpr int max_domain = 9;
    static constexpr int default_enumeration_cap = 4;

    Shop(int n, std::vector<std::uint32_t> images);

    static Shop identity(int n);
    // b maps to the whole domain, everything else to itself.
    static Shop forall_at(int n, int b);
    // every x maps to {x, b}.
    static Shop exists_at(int n, int b);
    // b maps to the whole domain, everything else to {b_prime}.
    static Shop forall_exists_at(int n, int b, int b_prime);
    // every element maps to the whole domain.
    static Shop full(int n);

    // Parses the (01|1|12) notation.
    static Shop parse(const std::string& text);

    int domain_size() const noexcept { return n_; }
    std::uint32_t image(int x) const { return images_[static_cast<std::size_t>(x)]; }
    bool maps(int x, int y) const { return (image(x) >> y) & 1u; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }

    std::uint32_t full_mask() const noexcept { return (1u << n_) - 1u; }

    std::string to_string() const;

    // Packs the image masks into one integer; unique for n <= 5. Used as a
    // hash/map key by the enumeration and closure machinery.
    std::uint64_t key() const;

    friend bool operator==(const Shop& a, const Shop& b) {
        return a.n_ == b.n_ && a.images_ == b.images_;
    }
    // Lexicographic on the image-mask sequence; this is the canonical order
    // used by enumeration, monoid listings and witness tie-breaking.
    friend std::strong_ordering operator<=>(const Shop& a, const Shop& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.images_ <=> b.images_;
    }

private:
    int n_;
    std::vector<std::uint32_t> images_;
};

// g after f: x maps to the union of g over f(x).
Shop compose(const Shop& g, const Shop& f);

// f composed with itself r times (r >= 1).
Shop power(const Shop& f, int r);

// x maps to the set of elements whose image under f contains x.
Shop inverse(const Shop& f);

// Pointwise image inclusion.
bool is_subshop(const Shop& f, const Shop& g);

// All surjective shops pointwise below g, in canonical order; includes g.
std::vector<Shop> surjective_subshops(const Shop& g);

// All shops on an n-element domain in canonical order. Throws CapError when
// n exceeds the cap; (2^n - 1)^n candidates make n = 5 the practical limit.
std::vector<Shop> enumerate_shops(int n, int cap = Shop::default_enumeration_cap);

// Number of shops on an n-element domain, by inclusion-exclusion.
std::uint64_t count_shops(int n);

// Whether f preserves every relation of b: for each tuple of each relation,
// every choice of images componentwise again satisfies the relation.
bool is_she(const Shop& f, const Structure& b);

bool is_permutation_shop(const Shop& f);

} // namespace pefo
