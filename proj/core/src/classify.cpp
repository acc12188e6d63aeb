#include "pefo/classify.hpp"

#include <sstream>

#include "pefo/shape.hpp"

namespace pefo {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::logspace: return "Logspace";
    case Verdict::np_complete: return "NP-complete";
    case Verdict::conp_complete: return "coNP-complete";
    case Verdict::pspace_complete: return "PSPACE-complete";
    }
    return "?";
}

std::string to_string(Certainty c) {
    return c == Certainty::theorem ? "theorem" : "conjectured-hardness";
}

Classification classify_monoid(const Dsm& d) {
    Classification c;
    c.domain_size = d.domain_size();
    c.she_count = d.size();

    for (const Shop& f : d.members()) {
        const ShopShape s = detect_shape(f);
        if (!c.a_witness && s.is_a_shop()) c.a_witness = f;
        if (!c.e_witness && s.is_e_shop()) c.e_witness = f;
        if (c.a_witness && c.e_witness) break;
    }

    const int n = d.domain_size();
    if (n == 1) {
        c.verdict = Verdict::logspace;
        c.certainty = Certainty::theorem;
        c.rule = "single-element domain";
        c.note = "quantifiers are vacuous; this is a boolean sentence value problem";
        return c;
    }

    const bool small = n <= 3;
    if (c.a_witness && c.e_witness) {
        c.verdict = Verdict::logspace;
        c.certainty = Certainty::theorem;
        c.rule = "A-shop and E-shop both present";
    } else if (c.a_witness) {
        c.verdict = Verdict::np_complete;
        c.certainty = small ? Certainty::theorem : Certainty::conjectured_hardness;
        c.rule = "A-shop present, no E-shop";
        c.evidence = small ? "three-element case analysis"
                           : "NP membership is theorem grade; completeness is conjectured";
    } else if (c.e_witness) {
        c.verdict = Verdict::conp_complete;
        c.certainty = small ? Certainty::theorem : Certainty::conjectured_hardness;
        c.rule = "E-shop present, no A-shop";
        c.evidence = small ? "three-element case analysis"
                           : "coNP membership is theorem grade; completeness is conjectured";
    } else {
        c.verdict = Verdict::pspace_complete;
        c.rule = "neither an A-shop nor an E-shop";
        c.permutation_subgroup = is_permutation_subgroup(d);
        if (c.permutation_subgroup) {
            c.certainty = Certainty::theorem;
            c.evidence = "the monoid is a permutation subgroup";
        } else {
            c.block_bound = is_block_permutation_bounded(d);
            if (c.block_bound) {
                c.certainty = Certainty::theorem;
                c.evidence = "the monoid is bounded by block permutations over "
                             + c.block_bound->describe();
            } else if (small) {
                c.certainty = Certainty::theorem;
                c.evidence = "three-element case analysis";
            } else {
                c.certainty = Certainty::conjectured_hardness;
                c.evidence = "PSPACE membership is theorem grade; hardness is conjectured";
            }
        }
    }
    return c;
}

Classification classify(const Structure& b, int cap) {
    return classify_monoid(she_monoid(b, cap));
}

Classification classify_with_equality(const Structure& b) {
    Classification c;
    c.domain_size = b.domain_size();
    if (b.domain_size() == 1) {
        c.verdict = Verdict::logspace;
        c.certainty = Certainty::theorem;
        c.rule = "single-element domain";
        c.note = "quantifiers are vacuous; this is a boolean sentence value problem";
        return c;
    }
    c.verdict = Verdict::pspace_complete;
    c.certainty = Certainty::theorem;
    c.rule = "equality in the fragment";
    c.evidence = "the graph of equality forces every preserving shop to be a permutation";
    return c;
}

std::string explain(const Classification& c) {
    std::ostringstream out;
    out << "verdict: " << to_string(c.verdict) << "\n";
    out << "certainty: " << to_string(c.certainty) << "\n";
    out << "domain-size: " << c.domain_size << "\n";
    if (c.she_count > 0) out << "she-count: " << c.she_count << "\n";
    out << "a-shop-witness: " << (c.a_witness ? c.a_witness->to_string() : "none") << "\n";
    out << "e-shop-witness: " << (c.e_witness ? c.e_witness->to_string() : "none") << "\n";
    out << "rule: " << c.rule << "\n";
    if (!c.evidence.empty()) out << "evidence: " << c.evidence << "\n";
    if (!c.note.empty()) out << "note: " << c.note << "\n";
    return out.str();
}

std::string machine_report(const Classification& c) {
    std::ostringstream out;
    out << "verdict=" << to_string(c.verdict) << "\n";
    out << "certainty=" << to_string(c.certainty) << "\n";
    out << "domain_size=" << c.domain_size << "\n";
    out << "she_count=" << c.she_count << "\n";
    out << "a_witness=" << (c.a_witness ? c.a_witness->to_string() : "none") << "\n";
    out << "e_witness=" << (c.e_witness ? c.e_witness->to_string() : "none") << "\n";
    out << "permutation_subgroup=" << (c.permutation_subgroup ? 1 : 0) << "\n";
    out << "block_bound=" << (c.block_bound ? c.block_bound->describe() : "none") << "\n";
    out << "rule=" << c.rule << "\n";
    return out.str();
}

} // namespace pefo
