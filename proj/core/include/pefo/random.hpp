#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pefo/formula.hpp"
#include "pefo/structure.hpp"

namespace pefo {

// Deterministic generator: the same seed produces the same stream on every
// platform, so seeded runs are reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed == 0 ? 0x9e3779b97f4a7c15ull : seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool chance_one_in(int n) { return below(n) == 0; }

private:
    std::uint64_t state_;
};

struct FormulaGenOptions {
    int max_quantifiers = 4;
    int max_atoms = 3;
    // Allowed free variables; atoms may use them alongside bound ones.
    std::vector<std::string> free_vars;
    // Probability of a constant argument is 1 in constant_one_in; zero or
    // negative keeps the formula constant-free (the pure fragment).
    int constant_one_in = 0;
};

// A random prefix of quantifiers over a random and/or tree of atoms. With no
// free variables the result is a sentence.
FormulaPtr random_formula(Rng& rng, const Signature& sig, int domain_size,
                          const FormulaGenOptions& options = {});

// A structure with a single binary relation E over a domain of 1..max_n
// elements, each pair present with chance 1/2.
Structure random_binary_structure(Rng& rng, int max_n = 3);

} // namespace pefo
