#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pefo/error.hpp"

namespace pefo {

struct RelationSymbol {
    std::string name;
    int arity = 0;

    bool operator==(const RelationSymbol&) const = default;
};

// Ordered list of relation symbols; names are unique, arities positive.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<RelationSymbol> relations);

    int size() const noexcept { return static_cast<int>(relations_.size()); }
    const RelationSymbol& symbol(int i) const { return relations_[static_cast<std::size_t>(i)]; }
    const std::vector<RelationSymbol>& relations() const noexcept { return relations_; }
    std::optional<int> index_of(std::string_view name) const;

    bool operator==(const Signature&) const = default;

private:
    std::vector<RelationSymbol> relations_;
};

using Tuple = std::vector<int>;

// An immutable finite relational structure over the domain {0,...,n-1}.
// Tuple sets are stored sorted and deduplicated, so lookups are binary
// searches and serialization is canonical.
class Structure {
public:
    Structure(Signature signature, int domain_size,
              std::vector<std::vector<Tuple>> interpretation);

    int domain_size() const noexcept { return domain_size_; }
    const Signature& signature() const noexcept { return signature_; }
    const std::vector<Tuple>& tuples(int relation) const {
        return tuples_[static_cast<std::size_t>(relation)];
    }
    bool holds(int relation, std::span<const int> args) const;

    // Canonical form: relations sorted by name, tuples lexicographically.
    std::string serialize() const;

    // Compares canonical forms (relation order in the signature is ignored).
    bool operator==(const Structure& other) const;

private:
    Signature signature_;
    int domain_size_;
    std::vector<std::vector<Tuple>> tuples_;
};

// Reads the line-oriented structure file format:
//
//   # comment
//   domain 3
//   rel E 2
//   0 1
//   1 0
//   end
//
// Reports syntax errors, arity mismatches, out-of-domain elements and
// duplicate relation names with their source position.
Structure parse_structure(std::string_view text);

} // namespace pefo
