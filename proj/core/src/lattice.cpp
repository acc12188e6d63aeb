#include "pefo/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pefo {

namespace {

std::vector<std::uint64_t> member_keys(const Dsm& d) {
    std::vector<std::uint64_t> keys;
    keys.reserve(d.size());
    for (const Shop& f : d.members()) keys.push_back(f.key());
    return keys;
}

bool subset_of(const Dsm& a, const Dsm& b) {
    if (a.size() > b.size()) return false;
    return std::all_of(a.members().begin(), a.members().end(),
                       [&](const Shop& f) { return b.contains(f); });
}

} // namespace

DsmLattice enumerate_dsms(int n, int cap) {
    if (n < 1) throw ValidationError("enumerate_dsms: domain size must be positive");
    if (n > cap)
        throw CapError("enumerate_dsms: domain size " + std::to_string(n)
                       + " exceeds cap " + std::to_string(cap));

    std::vector<Dsm> nodes;
    std::set<std::vector<std::uint64_t>> seen;
    auto add = [&](Dsm d) {
        if (seen.insert(member_keys(d)).second) {
            nodes.push_back(std::move(d));
            return true;
        }
        return false;
    };

    add(Dsm::closure(n, {}));
    for (const Shop& f : enumerate_shops(n, std::max(n, Shop::default_enumeration_cap)))
        add(Dsm::closure(n, {f}));

    // Close the node set under pairwise joins (union, then closure).
    std::set<std::pair<std::size_t, std::size_t>> joined;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t count = nodes.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = i + 1; j < count; ++j) {
                if (!joined.insert({i, j}).second) continue;
                if (subset_of(nodes[i], nodes[j]) || subset_of(nodes[j], nodes[i])) continue;
                std::vector<Shop> gens = nodes[i].members();
                gens.insert(gens.end(), nodes[j].members().begin(), nodes[j].members().end());
                if (add(Dsm::closure(n, gens))) changed = true;
            }
        }
    }

    std::sort(nodes.begin(), nodes.end(), [](const Dsm& a, const Dsm& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });

    DsmLattice lattice;
    lattice.domain_size = n;
    lattice.nodes = std::move(nodes);

    // Hasse covers by direct triple scan.
    const auto& ns = lattice.nodes;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t j = 0; j < ns.size(); ++j) {
            if (i == j || ns[i].size() >= ns[j].size()) continue;
            if (!subset_of(ns[i], ns[j])) continue;
            bool covered = true;
            for (std::size_t k = 0; k < ns.size() && covered; ++k) {
                if (k == i || k == j) continue;
                if (ns[k].size() <= ns[i].size() || ns[k].size() >= ns[j].size()) continue;
                if (subset_of(ns[i], ns[k]) && subset_of(ns[k], ns[j])) covered = false;
            }
            if (covered)
                lattice.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    std::sort(lattice.edges.begin(), lattice.edges.end());
    return lattice;
}

std::string export_dot(const DsmLattice& lattice, const std::map<int, std::string>& labels) {
    std::ostringstream out;
    out << "digraph dsm_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << generator_notation(lattice.nodes[i]);
        auto it = labels.find(static_cast<int>(i));
        if (it != labels.end()) out << "\\n" << it->second;
        out << "\"];\n";
    }
    for (const auto& [lo, hi] : lattice.edges) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace pefo
