#include "pefo/shop.hpp"

#include <algorithm>
#include <bit>

#include "pefo/structure.hpp"

namespace pefo {

namespace {

void require_same_domain(const Shop& a, const Shop& b) {
    if (a.domain_size() != b.domain_size())
        throw ValidationError("shop domain sizes differ: "
                              + std::to_string(a.domain_size()) + " vs "
                              + std::to_string(b.domain_size()));
}

} // namespace

Shop::Shop(int n, std::vector<std::uint32_t> images) : n_(n), images_(std::move(images)) {
    if (n < 1 || n > max_domain)
        throw ValidationError("shop domain size out of range: " + std::to_string(n));
    if (static_cast<int>(images_.size()) != n)
        throw ValidationError("shop has " + std::to_string(images_.size())
                              + " images for domain size " + std::to_string(n));
    std::uint32_t seen = 0;
    for (std::uint32_t m : images_) {
        if (m == 0)
            throw ValidationError("shop image is empty (totality violated)");
        if (m >= (1u << n))
            throw ValidationError("shop image contains an element outside the domain");
        seen |= m;
    }
    if (seen != full_mask())
        throw ValidationError("shop is not surjective");
}

Shop Shop::identity(int n) {
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = 1u << x;
    return Shop(n, std::move(images));
}

Shop Shop::forall_at(int n, int b) {
    if (b < 0 || b >= n) throw ValidationError("forall_at: element out of domain");
    Shop s = identity(n);
    std::vector<std::uint32_t> images = s.images_;
    images[static_cast<std::size_t>(b)] = s.full_mask();
    return Shop(n, std::move(images));
}

Shop Shop::exists_at(int n, int b) {
    if (b < 0 || b >= n) throw ValidationError("exists_at: element out of domain");
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        images[static_cast<std::size_t>(x)] = (1u << x) | (1u << b);
    return Shop(n, std::move(images));
}

Shop Shop::forall_exists_at(int n, int b, int b_prime) {
    if (b < 0 || b >= n || b_prime < 0 || b_prime >= n)
        throw ValidationError("forall_exists_at: element out of domain");
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n), 1u << b_prime);
    images[static_cast<std::size_t>(b)] = (1u << n) - 1u;
    return Shop(n, std::move(images));
}

Shop Shop::full(int n) {
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n), (1u << n) - 1u);
    return Shop(n, std::move(images));
}

Shop Shop::parse(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("shop literal: " + msg, 1, static_cast<int>(i) + 1);
    };
    if (text.empty() || text.front() != '(') throw fail("expected '('");
    ++i;
    std::vector<std::uint32_t> images;
    std::uint32_t current = 0;
    bool saw_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            current |= 1u << (c - '0');
            saw_digit = true;
        } else if (c == '|' || c == ')') {
            if (!saw_digit) throw fail("empty image");
            images.push_back(current);
            current = 0;
            saw_digit = false;
            if (c == ')') {
                ++i;
                break;
            }
        } else {
            throw fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (i != text.size()) throw fail("trailing input after ')'");
    if (images.empty()) throw fail("no images");
    int n = static_cast<int>(images.size());
    try {
        return Shop(n, std::move(images));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("shop literal: ") + e.what(), 1, 1);
    }
}

std::string Shop::to_string() const {
    std::string out = "(";
    for (int x = 0; x < n_; ++x) {
        if (x > 0) out += '|';
        for (int y = 0; y < n_; ++y)
            if (maps(x, y)) out += static_cast<char>('0' + y);
    }
    out += ')';
    return out;
}

std::uint64_t Shop::key() const {
    std::uint64_t k = static_cast<std::uint64_t>(n_);
    for (std::uint32_t m : images_) k = (k << 10) | m;
    return k;
}

Shop compose(const Shop& g, const Shop& f) {
    require_same_domain(g, f);
    int n = f.domain_size();
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        std::uint32_t acc = 0;
        for (int y = 0; y < n; ++y)
            if (f.maps(x, y)) acc |= g.image(y);
        images[static_cast<std::size_t>(x)] = acc;
    }
    return Shop(n, std::move(images));
}

Shop power(const Shop& f, int r) {
    if (r < 1) throw ValidationError("power: exponent must be positive");
    Shop acc = f;
    for (int i = 1; i < r; ++i) acc = compose(f, acc);
    return acc;
}

Shop inverse(const Shop& f) {
    int n = f.domain_size();
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (f.maps(y, x)) images[static_cast<std::size_t>(x)] |= 1u << y;
    return Shop(n, std::move(images));
}

bool is_subshop(const Shop& f, const Shop& g) {
    require_same_domain(f, g);
    for (int x = 0; x < f.domain_size(); ++x)
        if (f.image(x) & ~g.image(x)) return false;
    return true;
}

std::vector<Shop> surjective_subshops(const Shop& g) {
    int n = g.domain_size();
    std::vector<Shop> out;
    // Odometer over the non-empty submasks of each image, in canonical order.
    std::vector<std::vector<std::uint32_t>> choices(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::uint32_t m = g.image(x);
        for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
            if (sub != 0) choices[static_cast<std::size_t>(x)].push_back(sub);
            if (sub == 0) break;
        }
        std::sort(choices[static_cast<std::size_t>(x)].begin(),
                  choices[static_cast<std::size_t>(x)].end());
    }
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> images(static_cast<std::size_t>(n));
    const std::uint32_t full = g.full_mask();
    while (true) {
        std::uint32_t seen = 0;
        for (int x = 0; x < n; ++x) {
            images[static_cast<std::size_t>(x)] =
                choices[static_cast<std::size_t>(x)][idx[static_cast<std::size_t>(x)]];
            seen |= images[static_cast<std::size_t>(x)];
        }
        if (seen == full) out.emplace_back(n, images);
        int pos = n - 1;
        while (pos >= 0) {
            auto p = static_cast<std::size_t>(pos);
            if (++idx[p] < choices[p].size()) break;
            idx[p] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

std::vector<Shop> enumerate_shops(int n, int cap) {
    if (n < 1) throw ValidationError("enumerate_shops: domain size must be positive");
    if (n > cap)
        throw CapError("enumerate_shops: domain size " + std::to_string(n)
                       + " exceeds cap " + std::to_string(cap));
    return surjective_subshops(Shop::full(n));
}

std::uint64_t count_shops(int n) {
    // (2^n - 1)^n total assignments minus the non-surjective ones.
    auto ipow = [](std::uint64_t base, int e) {
        std::uint64_t r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    std::uint64_t total = 0;
    std::int64_t sign = 1;
    std::uint64_t binom = 1;
    for (int k = 0; k <= n; ++k) {
        std::uint64_t missing_k = ipow(ipow(2, n - k) - 1, n);
        total = static_cast<std::uint64_t>(static_cast<std::int64_t>(total)
                                           + sign * static_cast<std::int64_t>(binom * missing_k));
        sign = -sign;
        binom = binom * static_cast<std::uint64_t>(n - k) / static_cast<std::uint64_t>(k + 1);
    }
    return total;
}

bool is_she(const Shop& f, const Structure& b) {
    if (f.domain_size() != b.domain_size())
        throw ValidationError("is_she: shop and structure domain sizes differ");
    const Signature& sig = b.signature();
    for (int rel = 0; rel < sig.size(); ++rel) {
        const auto arity = static_cast<std::size_t>(sig.symbol(rel).arity);
        std::vector<std::vector<int>> options(arity);
        std::vector<std::size_t> idx(arity);
        std::vector<int> image_tuple(arity);
        for (const Tuple& t : b.tuples(rel)) {
            for (std::size_t i = 0; i < arity; ++i) {
                options[i].clear();
                const std::uint32_t m = f.image(t[i]);
                for (int y = 0; y < f.domain_size(); ++y)
                    if ((m >> y) & 1u) options[i].push_back(y);
            }
            // Product of the componentwise images, odometer style.
            std::fill(idx.begin(), idx.end(), 0);
            while (true) {
                for (std::size_t i = 0; i < arity; ++i) image_tuple[i] = options[i][idx[i]];
                if (!b.holds(rel, image_tuple)) return false;
                auto pos = static_cast<int>(arity) - 1;
                while (pos >= 0) {
                    auto p = static_cast<std::size_t>(pos);
                    if (++idx[p] < options[p].size()) break;
                    idx[p] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
    }
    return true;
}

bool is_permutation_shop(const Shop& f) {
    for (int x = 0; x < f.domain_size(); ++x)
        if (std::popcount(f.image(x)) != 1) return false;
    return true;
}

} // namespace pefo
