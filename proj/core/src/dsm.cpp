#include "pefo/dsm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "pefo/structure.hpp"
#include "shop_universe.hpp"

namespace pefo {

Dsm::Dsm(int n, std::vector<Shop> members) : n_(n), members_(std::move(members)) {
    for (const Shop& f : members_)
        if (f.domain_size() != n)
            throw ValidationError("monoid member " + f.to_string()
                                  + " has the wrong domain size");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!contains(Shop::identity(n)))
        throw ValidationError("monoid does not contain the identity shop");
}

bool Dsm::contains(const Shop& f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

Dsm Dsm::closure(int n, const std::vector<Shop>& generators) {
    // Small domains go through the precomputed composition table.
    if (n <= detail::ShopUniverse::max_domain) {
        const auto& u = detail::ShopUniverse::get(n);
        std::vector<int> seeds;
        seeds.reserve(generators.size());
        for (const Shop& g : generators) {
            if (g.domain_size() != n)
                throw ValidationError("closure: generator " + g.to_string()
                                      + " has the wrong domain size");
            seeds.push_back(u.id_of(g));
        }
        const std::vector<int> ids = seeds.size() == 1 ? u.singleton_closure[static_cast<std::size_t>(seeds[0])]
                                                       : u.closure_ids(seeds);
        std::vector<Shop> members;
        members.reserve(ids.size());
        for (int id : ids) members.push_back(u.shops[static_cast<std::size_t>(id)]);
        return Dsm(n, std::move(members));
    }

    std::vector<Shop> members;
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::size_t> work;
    auto add = [&](Shop s) {
        if (seen.insert(s.key()).second) {
            members.push_back(std::move(s));
            work.push_back(members.size() - 1);
        }
    };

    add(Shop::identity(n));
    for (const Shop& g : generators) {
        if (g.domain_size() != n)
            throw ValidationError("closure: generator " + g.to_string()
                                  + " has the wrong domain size");
        add(g);
    }

    while (!work.empty()) {
        const Shop f = members[work.front()];
        work.pop_front();
        for (Shop& sub : surjective_subshops(f)) add(std::move(sub));
        // members grows while we iterate; composing f with the newcomers too
        // is redundant but harmless.
        for (std::size_t gi = 0; gi < members.size(); ++gi) {
            const Shop g = members[gi];
            add(compose(f, g));
            add(compose(g, f));
        }
    }
    return Dsm(n, std::move(members));
}

Dsm she_monoid(const Structure& b, int cap) {
    const int n = b.domain_size();
    std::vector<Shop> members;
    for (const Shop& f : enumerate_shops(n, cap))
        if (is_she(f, b)) members.push_back(f);
    Dsm d(n, std::move(members));
    if (n <= 3 && !verify_dsm_closed(d))
        throw Error("she monoid failed its closure check");
    return d;
}

bool verify_dsm_closed(const Dsm& d) {
    if (!d.contains(Shop::identity(d.domain_size()))) return false;
    for (const Shop& f : d.members())
        for (const Shop& sub : surjective_subshops(f))
            if (!d.contains(sub)) return false;
    for (const Shop& f : d.members())
        for (const Shop& g : d.members())
            if (!d.contains(compose(f, g))) return false;
    return true;
}

Dsm dsm_inverse(const Dsm& d) {
    std::vector<Shop> members;
    members.reserve(d.size());
    for (const Shop& f : d.members()) members.push_back(inverse(f));
    Dsm inv(d.domain_size(), std::move(members));
    if (d.domain_size() <= 3 && !verify_dsm_closed(inv))
        throw Error("inverse monoid failed its closure check");
    return inv;
}

bool is_permutation_subgroup(const Dsm& d) {
    return std::all_of(d.members().begin(), d.members().end(), is_permutation_shop);
}

std::string BlockPermutationBound::describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        out << (i ? " " : "") << "{";
        for (std::size_t j = 0; j < blocks[i].size(); ++j)
            out << (j ? "," : "") << blocks[i][j];
        out << "}";
    }
    out << " maps:";
    for (const auto& m : block_maps) {
        out << " [";
        for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << i << "->" << m[i];
        out << "]";
    }
    return out.str();
}

namespace {

// All set partitions of {0,...,n-1} as restricted-growth strings, in
// lexicographic order.
void each_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == n) {
            visit(rgs, max_used + 1);
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            rgs[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, std::max(max_used, v));
        }
    };
    rec(rec, 1, 0);
}

} // namespace

std::optional<BlockPermutationBound> is_block_permutation_bounded(const Dsm& d) {
    const int n = d.domain_size();
    if (n < 2) return std::nullopt;

    std::optional<BlockPermutationBound> found;
    each_partition(n, [&](const std::vector<int>& rgs, int block_count) {
        if (found || block_count < 2 || block_count == n) return;
        std::vector<std::uint32_t> block_mask(static_cast<std::size_t>(block_count), 0);
        for (int x = 0; x < n; ++x)
            block_mask[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])] |= 1u << x;

        std::vector<std::vector<int>> maps;
        for (const Shop& g : d.members()) {
            std::vector<int> map(static_cast<std::size_t>(block_count), -1);
            bool fits = true;
            for (int i = 0; i < block_count && fits; ++i) {
                std::uint32_t image = 0;
                for (int x = 0; x < n; ++x)
                    if (rgs[static_cast<std::size_t>(x)] == i) image |= g.image(x);
                fits = false;
                for (int j = 0; j < block_count; ++j)
                    if (!(image & ~block_mask[static_cast<std::size_t>(j)])) {
                        map[static_cast<std::size_t>(i)] = j;
                        fits = true;
                        break;
                    }
            }
            if (!fits) return; // some image straddles blocks; partition fails
            maps.push_back(std::move(map));
        }

        BlockPermutationBound bound;
        for (int i = 0; i < block_count; ++i) {
            std::vector<int> block;
            for (int x = 0; x < n; ++x)
                if (rgs[static_cast<std::size_t>(x)] == i) block.push_back(x);
            bound.blocks.push_back(std::move(block));
        }
        std::sort(maps.begin(), maps.end());
        maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
        bound.block_maps = std::move(maps);
        found = std::move(bound);
    });
    return found;
}

namespace {

std::vector<Shop> minimal_generators_fast(const Dsm& d) {
    const auto& u = detail::ShopUniverse::get(d.domain_size());
    std::vector<int> target;
    target.reserve(d.size());
    for (const Shop& f : d.members()) target.push_back(u.id_of(f));

    for (int id : target)
        if (u.singleton_closure[static_cast<std::size_t>(id)] == target)
            return {u.shops[static_cast<std::size_t>(id)]};
    if (d.size() <= 64) {
        for (std::size_t i = 0; i < target.size(); ++i)
            for (std::size_t j = i + 1; j < target.size(); ++j)
                if (u.closure_ids({target[i], target[j]}) == target)
                    return {u.shops[static_cast<std::size_t>(target[i])],
                            u.shops[static_cast<std::size_t>(target[j])]};
    }
    std::vector<int> gen_ids;
    std::vector<int> current = u.closure_ids({});
    while (current != target) {
        auto it = std::find_if(target.begin(), target.end(), [&](int id) {
            return !std::binary_search(current.begin(), current.end(), id);
        });
        if (it == target.end())
            throw Error("minimal_generators: generated monoid escapes its target");
        gen_ids.push_back(*it);
        current = u.closure_ids(gen_ids);
    }
    std::vector<Shop> gens;
    gens.reserve(gen_ids.size());
    for (int id : gen_ids) gens.push_back(u.shops[static_cast<std::size_t>(id)]);
    return gens;
}

} // namespace

std::vector<Shop> minimal_generators(const Dsm& d) {
    const int n = d.domain_size();
    if (n <= detail::ShopUniverse::max_domain) return minimal_generators_fast(d);

    for (const Shop& f : d.members())
        if (Dsm::closure(n, {f}) == d) return {f};
    if (d.size() <= 48) {
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                std::vector<Shop> pair{d.members()[i], d.members()[j]};
                if (Dsm::closure(n, pair) == d) return pair;
            }
    }
    // Greedy cover: repeatedly adopt the first member not yet generated.
    std::vector<Shop> gens;
    Dsm current = Dsm::closure(n, {});
    while (current != d) {
        auto it = std::find_if(d.members().begin(), d.members().end(),
                               [&](const Shop& f) { return !current.contains(f); });
        if (it == d.members().end())
            throw Error("minimal_generators: generated monoid escapes its target");
        gens.push_back(*it);
        current = Dsm::closure(n, gens);
    }
    return gens;
}

std::string generator_notation(const Dsm& d) {
    std::string out = "<";
    const auto gens = minimal_generators(d);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += gens[i].to_string();
    }
    out += ">";
    return out;
}

} // namespace pefo
