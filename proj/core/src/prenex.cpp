#include "pefo/prenex.hpp"

#include <map>
#include <set>
#include <sstream>

namespace pefo {

FormulaPtr PrenexFormula::to_formula() const {
    FormulaPtr f = matrix;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        if (it->restriction)
            f = Formula::quantified_in(it->quantifier, it->variable, *it->restriction, f);
        else
            f = Formula::quantified(it->quantifier, it->variable, f);
    }
    return f;
}

std::string PrenexFormula::to_string() const {
    return pefo::to_string(to_formula());
}

namespace {

struct NameScan {
    std::map<std::string, int> bound_count;
    std::set<std::string> free_names;
    std::set<std::string> all_names;
};

void scan_names(const FormulaPtr& f, std::set<std::string>& bound, NameScan& out) {
    switch (f->kind()) {
    case Formula::Kind::truth:
        break;
    case Formula::Kind::atom:
    case Formula::Kind::equality:
        for (const Term& t : f->terms()) {
            if (t.is_constant()) continue;
            out.all_names.insert(t.name);
            if (!bound.count(t.name)) out.free_names.insert(t.name);
        }
        break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        for (const FormulaPtr& p : f->parts()) scan_names(p, bound, out);
        break;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        out.all_names.insert(f->variable());
        ++out.bound_count[f->variable()];
        const bool fresh = bound.insert(f->variable()).second;
        scan_names(f->body(), bound, out);
        if (fresh) bound.erase(f->variable());
        break;
    }
    }
}

struct Renamer {
    const NameScan& scan;
    std::set<std::string> taken;
    int counter = 0;

    bool needs_rename(const std::string& name) const {
        auto it = scan.bound_count.find(name);
        return (it != scan.bound_count.end() && it->second > 1) || scan.free_names.count(name);
    }

    std::string fresh() {
        std::string name;
        do {
            name = "v#" + std::to_string(++counter);
        } while (taken.count(name));
        taken.insert(name);
        return name;
    }

    FormulaPtr apply(const FormulaPtr& f, std::map<std::string, std::string>& active) {
        switch (f->kind()) {
        case Formula::Kind::truth:
            return f;
        case Formula::Kind::atom:
        case Formula::Kind::equality: {
            bool touched = false;
            std::vector<Term> terms = f->terms();
            for (Term& t : terms) {
                if (t.is_constant()) continue;
                auto it = active.find(t.name);
                if (it != active.end() && it->second != t.name) {
                    t = Term::variable(it->second);
                    touched = true;
                }
            }
            if (!touched) return f;
            if (f->kind() == Formula::Kind::atom)
                return Formula::atom(f->relation(), std::move(terms), f->pos());
            return Formula::equality(terms[0], terms[1], f->pos());
        }
        case Formula::Kind::conjunction:
        case Formula::Kind::disjunction: {
            std::vector<FormulaPtr> parts;
            parts.reserve(f->parts().size());
            for (const FormulaPtr& p : f->parts()) parts.push_back(apply(p, active));
            return f->kind() == Formula::Kind::conjunction
                       ? Formula::conjunction(std::move(parts))
                       : Formula::disjunction(std::move(parts));
        }
        case Formula::Kind::exists:
        case Formula::Kind::forall: {
            if (f->restriction())
                throw ValidationError("prenex: input contains a restricted quantifier");
            const std::string& var = f->variable();
            const std::string replacement = needs_rename(var) ? fresh() : var;
            auto previous = active.find(var);
            std::optional<std::string> saved;
            if (previous != active.end()) saved = previous->second;
            active[var] = replacement;
            FormulaPtr body = apply(f->body(), active);
            if (saved)
                active[var] = *saved;
            else
                active.erase(var);
            const Quantifier q =
                f->kind() == Formula::Kind::exists ? Quantifier::exists : Quantifier::forall;
            return Formula::quantified(q, replacement, std::move(body), f->pos());
        }
        }
        throw Error("prenex rename: unreachable");
    }
};

PrenexFormula hoist(const FormulaPtr& f) {
    switch (f->kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::atom:
    case Formula::Kind::equality:
        return {{}, f};
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
        PrenexFormula out;
        std::vector<FormulaPtr> matrices;
        for (const FormulaPtr& p : f->parts()) {
            PrenexFormula sub = hoist(p);
            out.prefix.insert(out.prefix.end(), sub.prefix.begin(), sub.prefix.end());
            matrices.push_back(std::move(sub.matrix));
        }
        out.matrix = f->kind() == Formula::Kind::conjunction
                         ? Formula::conjunction(std::move(matrices))
                         : Formula::disjunction(std::move(matrices));
        return out;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        PrenexFormula sub = hoist(f->body());
        const Quantifier q =
            f->kind() == Formula::Kind::exists ? Quantifier::exists : Quantifier::forall;
        sub.prefix.insert(sub.prefix.begin(), PrefixEntry{q, f->variable(), std::nullopt});
        return sub;
    }
    }
    throw Error("prenex hoist: unreachable");
}

} // namespace

PrenexFormula prenex(const FormulaPtr& f) {
    NameScan scan;
    {
        std::set<std::string> bound;
        scan_names(f, bound, scan);
    }
    Renamer renamer{scan, scan.all_names, 0};
    std::map<std::string, std::string> active;
    return hoist(renamer.apply(f, active));
}

} // namespace pefo
