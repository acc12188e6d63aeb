#include "shop_universe.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace pefo::detail {

namespace {

ShopUniverse build(int n) {
    ShopUniverse u;
    u.n = n;
    u.shops = enumerate_shops(n, ShopUniverse::max_domain);
    const int count = static_cast<int>(u.shops.size());
    u.index.reserve(u.shops.size() * 2);
    for (int i = 0; i < count; ++i) u.index.emplace(u.shops[static_cast<std::size_t>(i)].key(), i);
    u.identity_id = u.id_of(Shop::identity(n));

    u.compose_table.assign(static_cast<std::size_t>(count), std::vector<int>(static_cast<std::size_t>(count), 0));
    for (int g = 0; g < count; ++g)
        for (int f = 0; f < count; ++f)
            u.compose_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                u.id_of(compose(u.shops[static_cast<std::size_t>(g)], u.shops[static_cast<std::size_t>(f)]));

    u.subshops.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto& subs = u.subshops[static_cast<std::size_t>(i)];
        for (const Shop& s : surjective_subshops(u.shops[static_cast<std::size_t>(i)]))
            subs.push_back(u.id_of(s));
        std::sort(subs.begin(), subs.end());
    }

    u.singleton_closure.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        u.singleton_closure[static_cast<std::size_t>(i)] = u.closure_ids({i});
    return u;
}

} // namespace

const ShopUniverse& ShopUniverse::get(int n) {
    if (n < 1 || n > max_domain)
        throw ValidationError("shop universe: domain size " + std::to_string(n)
                              + " out of range");
    static std::mutex mutex;
    static std::map<int, ShopUniverse> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build(n)).first;
    return it->second;
}

std::vector<int> ShopUniverse::closure_ids(const std::vector<int>& seeds) const {
    std::vector<char> in(shops.size(), 0);
    std::vector<int> members;
    auto add = [&](int id) {
        if (!in[static_cast<std::size_t>(id)]) {
            in[static_cast<std::size_t>(id)] = 1;
            members.push_back(id);
        }
    };
    add(identity_id);
    for (int s : seeds) add(s);
    // members grows while we scan it; every pair ends up composed.
    for (std::size_t wi = 0; wi < members.size(); ++wi) {
        const int f = members[wi];
        for (int sub : subshops[static_cast<std::size_t>(f)]) add(sub);
        for (std::size_t gi = 0; gi <= wi; ++gi) {
            const int g = members[gi];
            add(compose_table[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)]);
            add(compose_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace pefo::detail
