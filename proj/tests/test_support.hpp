#pragma once

#include <map>
#include <string>
#include <vector>

#include "pefo/evaluate.hpp"
#include "pefo/structure.hpp"

namespace pefo::testing {

// {0,1} with a single unary relation U = {1}.
inline Structure u_structure() {
    return Structure(Signature({{"U", 1}}), 2, {{{1}}});
}

// All tuples of the given arity over {0,...,n-1}, lexicographically.
inline std::vector<Tuple> all_tuples(int n, int arity) {
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(arity), 0);
    while (true) {
        out.push_back(t);
        int pos = arity - 1;
        while (pos >= 0 && ++t[static_cast<std::size_t>(pos)] == n) {
            t[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// All permutations of {0,...,n-1} as images vectors.
inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Whether the map x -> perm[x] preserves every relation of b.
inline bool permutation_preserves(const std::vector<int>& perm, const Structure& b) {
    for (int rel = 0; rel < b.signature().size(); ++rel)
        for (const Tuple& t : b.tuples(rel)) {
            Tuple image(t.size());
            for (std::size_t i = 0; i < t.size(); ++i)
                image[i] = perm[static_cast<std::size_t>(t[i])];
            if (!b.holds(rel, image)) return false;
        }
    return true;
}

inline std::map<std::string, int> bind_vars(const std::vector<std::string>& vars, const Tuple& t) {
    std::map<std::string, int> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = t[i];
    return env;
}

} // namespace pefo::testing
