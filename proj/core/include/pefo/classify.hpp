#pragma once

#include <optional>
#include <string>

#include "pefo/dsm.hpp"
#include "pefo/structure.hpp"

namespace pefo {

enum class Verdict { logspace, np_complete, conp_complete, pspace_complete };
enum class Certainty { theorem, conjectured_hardness };

std::string to_string(Verdict v);
std::string to_string(Certainty c);

// A complexity verdict with its derivation: the shop witnesses that carry
// the upper bound and the evidence behind the hardness side.
struct Classification {
    Verdict verdict = Verdict::logspace;
    Certainty certainty = Certainty::theorem;
    int domain_size = 0;
    std::size_t she_count = 0;
    std::optional<Shop> a_witness; // a member with a full image, if any
    std::optional<Shop> e_witness; // a member with a common image element, if any
    bool permutation_subgroup = false;
    std::optional<BlockPermutationBound> block_bound;
    std::string rule;     // which case fired
    std::string evidence; // hardness evidence, when applicable
    std::string note;
};

// The verdict determined by a monoid: both an A-shop and an E-shop present
// gives Logspace, an A-shop alone NP-complete, an E-shop alone
// coNP-complete, neither PSPACE-complete. On domains of at most three
// elements every verdict is theorem grade; beyond that the hardness half is
// conjectured, except that PSPACE-hardness stays theorem grade when the
// monoid is a permutation subgroup or bounded by block permutations.
Classification classify_monoid(const Dsm& d);

// classify_monoid over she_monoid(b); single-element structures go straight
// to Logspace (sentence evaluation degenerates to a boolean sentence value
// problem).
Classification classify(const Structure& b, int cap = Shop::default_enumeration_cap);

// With equality in the fragment every preserving shop is a permutation, so
// any structure with at least two elements lands at PSPACE-complete.
Classification classify_with_equality(const Structure& b);

// Human-readable derivation of a classification.
std::string explain(const Classification& c);

// Flat key=value rendering for scripts.
std::string machine_report(const Classification& c);

} // namespace pefo
