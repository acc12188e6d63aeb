#include "pefo/shape.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "pefo/dsm.hpp"

namespace pefo {

ShopDigraph digraph_of(const Shop& f) {
    return ShopDigraph{f.domain_size(), f.images()};
}

ShopShape detect_shape(const Shop& f) {
    const int n = f.domain_size();
    const std::uint32_t full = f.full_mask();
    ShopShape s;

    for (int b = 0; b < n; ++b) {
        if (f == Shop::forall_at(n, b)) s.forall.push_back(b);
        if (f == Shop::exists_at(n, b)) s.exists.push_back(b);
    }
    for (int b = 0; b < n; ++b)
        for (int bp = 0; bp < n; ++bp)
            if (b != bp && f == Shop::forall_exists_at(n, b, bp))
                s.forall_exists.emplace_back(b, bp);

    for (int b = 0; b < n; ++b)
        if (f.image(b) == full) s.a_witnesses.push_back(b);
    for (int b = 0; b < n; ++b) {
        bool everywhere = true;
        for (int x = 0; x < n && everywhere; ++x) everywhere = f.maps(x, b);
        if (everywhere) s.e_witnesses.push_back(b);
    }

    s.is_permutation = is_permutation_shop(f);

    bool eq = true;
    for (int x = 0; x < n && eq; ++x) eq = f.maps(x, x);
    for (int x = 0; x < n && eq; ++x)
        for (int y = x + 1; y < n && eq; ++y)
            if (f.maps(x, y) != f.maps(y, x)) eq = false;
    for (int x = 0; x < n && eq; ++x)
        for (int y = 0; y < n && eq; ++y)
            if (f.maps(x, y) && (f.image(y) & ~f.image(x))) eq = false;
    s.is_equivalence = eq;

    return s;
}

std::optional<ATripartition> canonical_a_form(const Shop& g) {
    const int n = g.domain_size();
    if (n < 2) return std::nullopt;
    const std::uint32_t full = g.full_mask();
    for (int b = 0; b < n; ++b) {
        if (g.image(b) != full) continue;
        ATripartition part;
        part.b = b;
        bool ok = true;
        std::uint32_t kept_mask = 0;
        for (int x = 0; x < n && ok; ++x) {
            if (x == b) continue;
            const std::uint32_t m = g.image(x);
            if (m == (1u << x)) {
                part.kept.push_back(x);
                kept_mask |= m;
            } else if (std::popcount(m) == 1) {
                part.collapsed.push_back(x);
            } else {
                ok = false;
            }
        }
        if (!ok || part.kept.empty()) continue;
        for (int x : part.collapsed)
            if (!(g.image(x) & kept_mask)) ok = false;
        if (ok) return part;
    }
    return std::nullopt;
}

std::optional<EBipartition> canonical_e_form(const Shop& g) {
    const int n = g.domain_size();
    if (n < 2) return std::nullopt;
    for (int b = 0; b < n; ++b) {
        bool everywhere = true;
        for (int x = 0; x < n && everywhere; ++x) everywhere = g.maps(x, b);
        if (!everywhere) continue;
        EBipartition part;
        part.b = b;
        std::uint32_t cover = 0;
        for (int x = 0; x < n; ++x) {
            if (g.maps(x, x)) {
                part.kept.push_back(x);
                cover |= g.image(x);
            } else {
                part.absorbed.push_back(x);
            }
        }
        if (!part.kept.empty() && cover == g.full_mask()) return part;
    }
    return std::nullopt;
}

namespace {

struct PruneResult {
    std::uint32_t remaining = 0;
    int rounds = 0;
};

// Removes sources (or sinks), whole rounds at a time, from the subgraph
// induced on `vertices`, until none is left. A self-loop is neither a source
// nor a sink.
PruneResult prune(const ShopDigraph& g, std::uint32_t vertices, bool remove_sources) {
    std::uint32_t alive = vertices;
    int rounds = 0;
    while (true) {
        std::uint32_t doomed = 0;
        for (int x = 0; x < g.n; ++x) {
            if (!((alive >> x) & 1u)) continue;
            std::uint32_t degree = 0;
            if (remove_sources) {
                for (int y = 0; y < g.n; ++y)
                    if (((alive >> y) & 1u) && g.edge(y, x)) degree |= 1u << y;
            } else {
                degree = g.out[static_cast<std::size_t>(x)] & alive;
            }
            if (degree == 0) doomed |= 1u << x;
        }
        if (doomed == 0) break;
        alive &= ~doomed;
        ++rounds;
    }
    return {alive, rounds};
}

// Lengths of closed walks covering each non-trivial strongly connected
// component of the subgraph induced on `vertices`. Trivial loopless
// components contribute nothing.
std::vector<int> covering_cycle_lengths(const ShopDigraph& g, std::uint32_t vertices) {
    const int n = g.n;
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        if ((vertices >> x) & 1u) reach[static_cast<std::size_t>(x)] = g.out[static_cast<std::size_t>(x)] & vertices;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            if (!((vertices >> x) & 1u)) continue;
            std::uint32_t next = reach[static_cast<std::size_t>(x)];
            for (int y = 0; y < n; ++y)
                if ((next >> y) & 1u) next |= reach[static_cast<std::size_t>(y)];
            if (next != reach[static_cast<std::size_t>(x)]) {
                reach[static_cast<std::size_t>(x)] = next;
                changed = true;
            }
        }
    }

    auto bfs_distance = [&](int from, int to) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{from};
        dist[static_cast<std::size_t>(from)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            if (x == to && dist[static_cast<std::size_t>(x)] > 0) break;
            for (int y = 0; y < n; ++y)
                if (((vertices >> y) & 1u) && g.edge(x, y)
                    && dist[static_cast<std::size_t>(y)] == -1) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(y);
                }
        }
        return dist[static_cast<std::size_t>(to)];
    };

    std::vector<int> lengths;
    std::uint32_t assigned = 0;
    for (int x = 0; x < n; ++x) {
        if (!((vertices >> x) & 1u) || ((assigned >> x) & 1u)) continue;
        std::vector<int> comp{x};
        assigned |= 1u << x;
        for (int y = x + 1; y < n; ++y) {
            if (!((vertices >> y) & 1u)) continue;
            const bool xy = (reach[static_cast<std::size_t>(x)] >> y) & 1u;
            const bool yx = (reach[static_cast<std::size_t>(y)] >> x) & 1u;
            if (xy && yx) {
                comp.push_back(y);
                assigned |= 1u << y;
            }
        }
        if (comp.size() == 1) {
            if (g.edge(x, x)) lengths.push_back(1);
            continue;
        }
        // Stitch shortest paths v0 -> v1 -> ... -> v0; paths between members
        // of one component never leave it.
        int total = 0;
        for (std::size_t i = 0; i < comp.size(); ++i)
            total += bfs_distance(comp[i], comp[(i + 1) % comp.size()]);
        lengths.push_back(total);
    }
    return lengths;
}

Shop canonicalize_impl(const Shop& f, bool a_side) {
    const char* label = a_side ? "canonicalize_a" : "canonicalize_e";
    const int n = f.domain_size();
    if (n < 2) throw ValidationError(std::string(label) + ": domain must have at least two elements");
    ShopShape shape = detect_shape(f);
    const std::vector<int>& witnesses = a_side ? shape.a_witnesses : shape.e_witnesses;
    if (witnesses.empty())
        throw ValidationError(std::string(label) + ": " + f.to_string()
                              + (a_side ? " is not an A-shop" : " is not an E-shop"));

    const int b = witnesses.front();
    const Shop h = power(f, n);
    const ShopDigraph g = digraph_of(h);
    const std::uint32_t without_b = h.full_mask() & ~(1u << b);

    const PruneResult pruned = prune(g, without_b, /*remove_sources=*/a_side);
    long long c = pruned.rounds == 0 ? 1 : pruned.rounds;
    for (int len : covering_cycle_lengths(g, pruned.remaining))
        c = std::lcm(c, static_cast<long long>(len));

    const Shop candidate_base = power(h, static_cast<int>(c));
    for (const Shop& cand : surjective_subshops(candidate_base)) {
        if (a_side ? canonical_a_form(cand).has_value() : canonical_e_form(cand).has_value())
            return cand;
    }

    // The cycle choice above can in principle miss; any closure member of
    // the right form is equally valid.
    for (const Shop& cand : Dsm::closure(n, {f}).members()) {
        if (a_side ? canonical_a_form(cand).has_value() : canonical_e_form(cand).has_value())
            return cand;
    }
    throw Error(std::string(label) + ": no canonical form found in the closure of "
                + f.to_string());
}

} // namespace

Shop canonicalize_a(const Shop& f) { return canonicalize_impl(f, true); }
Shop canonicalize_e(const Shop& f) { return canonicalize_impl(f, false); }

} // namespace pefo
