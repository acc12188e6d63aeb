#include "pefo/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "pefo/shape.hpp"

namespace pefo {

namespace {

Structure digraph(int n, std::vector<Tuple> edges) {
    return Structure(Signature({{"E", 2}}), n, {std::move(edges)});
}

Structure make_clique(const std::vector<int>& params) {
    if (params.size() != 1)
        throw ValidationError("fixture clique takes one parameter (size)");
    int k = params[0];
    if (k < 1) throw ValidationError("fixture clique: size must be positive");
    std::vector<Tuple> edges;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (x != y) edges.push_back({x, y});
    return digraph(k, std::move(edges));
}

Structure make_nae(const std::vector<int>& params) {
    if (params.size() != 1)
        throw ValidationError("fixture nae takes one parameter (domain size)");
    int k = params[0];
    if (k < 1) throw ValidationError("fixture nae: domain size must be positive");
    std::vector<Tuple> tuples;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (!(a == b && b == c)) tuples.push_back({a, b, c});
    return Structure(Signature({{"R_NAE", 3}}), k, {std::move(tuples)});
}

Structure make_k2_plus_k1(const std::vector<int>& params) {
    if (!params.empty()) throw ValidationError("fixture k2_plus_k1 takes no parameters");
    return digraph(3, {{0, 1}, {1, 0}});
}

Structure make_multipartite(const std::vector<int>& params) {
    if (params.empty())
        throw ValidationError("fixture multipartite takes one or more block sizes");
    int n = 0;
    for (int s : params) {
        if (s < 1) throw ValidationError("fixture multipartite: block sizes must be positive");
        n += s;
    }
    std::vector<int> block_of(static_cast<std::size_t>(n));
    int next = 0;
    for (std::size_t b = 0; b < params.size(); ++b)
        for (int i = 0; i < params[b]; ++i) block_of[static_cast<std::size_t>(next++)] = static_cast<int>(b);
    std::vector<Tuple> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (block_of[static_cast<std::size_t>(x)] != block_of[static_cast<std::size_t>(y)])
                edges.push_back({x, y});
    return digraph(n, std::move(edges));
}

} // namespace

Structure fixture(const std::string& name, const std::vector<int>& params) {
    if (name == "clique") return make_clique(params);
    if (name == "nae") return make_nae(params);
    if (name == "k2_plus_k1") return make_k2_plus_k1(params);
    if (name == "multipartite") return make_multipartite(params);
    throw ValidationError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"clique", "k2_plus_k1", "multipartite", "nae"};
}

Structure complement_digraph(const Structure& b) {
    if (b.signature().size() != 1 || b.signature().symbol(0).arity != 2)
        throw ValidationError("complement_digraph requires a single binary relation");
    const int n = b.domain_size();
    std::vector<Tuple> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int pair[2] = {x, y};
            if (!b.holds(0, pair)) edges.push_back({x, y});
        }
    return Structure(b.signature(), n, {std::move(edges)});
}

Structure quotient(const Structure& b, const Shop& f) {
    if (f.domain_size() != b.domain_size())
        throw ValidationError("quotient: shop and structure domain sizes differ");
    ShopShape shape = detect_shape(f);
    if (!shape.is_equivalence)
        throw ValidationError("quotient: shop " + f.to_string()
                              + " is not an equivalence relation");
    if (!is_she(f, b))
        throw ValidationError("quotient: shop " + f.to_string()
                              + " does not preserve the structure");

    const int n = b.domain_size();
    // Classes ordered by least member.
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    int classes = 0;
    for (int x = 0; x < n; ++x) {
        if (class_of[static_cast<std::size_t>(x)] != -1) continue;
        for (int y = x; y < n; ++y)
            if (f.maps(x, y)) class_of[static_cast<std::size_t>(y)] = classes;
        ++classes;
    }

    std::vector<std::vector<Tuple>> interpretation;
    for (int rel = 0; rel < b.signature().size(); ++rel) {
        std::vector<Tuple> projected;
        for (const Tuple& t : b.tuples(rel)) {
            Tuple image(t.size());
            std::transform(t.begin(), t.end(), image.begin(),
                           [&](int v) { return class_of[static_cast<std::size_t>(v)]; });
            projected.push_back(std::move(image));
        }
        interpretation.push_back(std::move(projected));
    }
    return Structure(b.signature(), classes, std::move(interpretation));
}

} // namespace pefo
