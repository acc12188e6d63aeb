#include "pefo/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pefo {

FormulaPtr Formula::truth() {
    static const FormulaPtr instance = std::shared_ptr<Formula>(new Formula());
    return instance;
}

FormulaPtr Formula::atom(std::string relation, std::vector<Term> args, SourcePos pos) {
    if (relation.empty()) throw ValidationError("atom: empty relation name");
    if (args.empty()) throw ValidationError("atom: relations have positive arity");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::atom;
    f->relation_ = std::move(relation);
    f->terms_ = std::move(args);
    f->pos_ = pos;
    return f;
}

FormulaPtr Formula::equality(Term lhs, Term rhs, SourcePos pos) {
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::equality;
    f->terms_ = {std::move(lhs), std::move(rhs)};
    f->pos_ = pos;
    f->uses_equality_ = true;
    return f;
}

FormulaPtr Formula::conjunction(std::vector<FormulaPtr> parts) {
    if (parts.empty()) return truth();
    if (parts.size() == 1) return parts.front();
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::conjunction;
    f->uses_equality_ = std::any_of(parts.begin(), parts.end(),
                                    [](const FormulaPtr& p) { return p->uses_equality(); });
    f->parts_ = std::move(parts);
    return f;
}

FormulaPtr Formula::disjunction(std::vector<FormulaPtr> parts) {
    if (parts.empty())
        throw ValidationError("disjunction: empty disjunction is falsity, which the "
                              "fragment cannot express");
    if (parts.size() == 1) return parts.front();
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = Kind::disjunction;
    f->uses_equality_ = std::any_of(parts.begin(), parts.end(),
                                    [](const FormulaPtr& p) { return p->uses_equality(); });
    f->parts_ = std::move(parts);
    return f;
}

FormulaPtr Formula::quantified(Quantifier q, std::string variable, FormulaPtr body,
                               SourcePos pos) {
    if (variable.empty()) throw ValidationError("quantifier: empty variable name");
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = q == Quantifier::exists ? Kind::exists : Kind::forall;
    f->variable_ = std::move(variable);
    f->uses_equality_ = body->uses_equality();
    f->parts_ = {std::move(body)};
    f->pos_ = pos;
    return f;
}

FormulaPtr Formula::quantified_in(Quantifier q, std::string variable,
                                  std::vector<int> restriction, FormulaPtr body) {
    if (restriction.empty())
        throw ValidationError("quantifier restriction must be a non-empty domain subset");
    std::sort(restriction.begin(), restriction.end());
    restriction.erase(std::unique(restriction.begin(), restriction.end()), restriction.end());
    auto f = std::shared_ptr<Formula>(new Formula());
    f->kind_ = q == Quantifier::exists ? Kind::exists : Kind::forall;
    f->variable_ = std::move(variable);
    f->restriction_ = std::move(restriction);
    f->uses_equality_ = body->uses_equality();
    f->parts_ = {std::move(body)};
    return f;
}

namespace {

void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                  std::vector<std::string>& out, std::set<std::string>& seen) {
    auto visit_term = [&](const Term& t) {
        if (t.is_constant() || bound.count(t.name)) return;
        if (seen.insert(t.name).second) out.push_back(t.name);
    };
    switch (f->kind()) {
    case Formula::Kind::truth:
        break;
    case Formula::Kind::atom:
    case Formula::Kind::equality:
        for (const Term& t : f->terms()) visit_term(t);
        break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        for (const FormulaPtr& p : f->parts()) collect_free(p, bound, out, seen);
        break;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        const bool fresh = bound.insert(f->variable()).second;
        collect_free(f->body(), bound, out, seen);
        if (fresh) bound.erase(f->variable());
        break;
    }
    }
}

} // namespace

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound;
    std::set<std::string> seen;
    std::vector<std::string> out;
    collect_free(f, bound, out, seen);
    return out;
}

bool is_sentence(const FormulaPtr& f) { return free_variables(f).empty(); }

bool uses_constants(const FormulaPtr& f) {
    switch (f->kind()) {
    case Formula::Kind::truth:
        return false;
    case Formula::Kind::atom:
    case Formula::Kind::equality:
        return std::any_of(f->terms().begin(), f->terms().end(),
                           [](const Term& t) { return t.is_constant(); });
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
        return std::any_of(f->parts().begin(), f->parts().end(), uses_constants);
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        return uses_constants(f->body());
    }
    return false;
}

namespace {

std::string term_text(const Term& t) {
    return t.is_constant() ? "@" + std::to_string(t.value) : t.name;
}

// Precedence levels: 0 = may contain a bare quantifier, 1 = disjunction
// context, 2 = conjunction context.
void print(const FormulaPtr& f, int level, std::ostringstream& out) {
    switch (f->kind()) {
    case Formula::Kind::truth:
        out << "true";
        break;
    case Formula::Kind::atom: {
        out << f->relation() << "(";
        for (std::size_t i = 0; i < f->terms().size(); ++i) {
            if (i) out << ",";
            out << term_text(f->terms()[i]);
        }
        out << ")";
        break;
    }
    case Formula::Kind::equality:
        out << term_text(f->terms()[0]) << " = " << term_text(f->terms()[1]);
        break;
    case Formula::Kind::conjunction: {
        for (std::size_t i = 0; i < f->parts().size(); ++i) {
            if (i) out << " & ";
            print(f->parts()[i], 3, out);
        }
        break;
    }
    case Formula::Kind::disjunction: {
        const bool parens = level >= 2;
        if (parens) out << "(";
        for (std::size_t i = 0; i < f->parts().size(); ++i) {
            if (i) out << " | ";
            print(f->parts()[i], 2, out);
        }
        if (parens) out << ")";
        break;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        const bool parens = level >= 1;
        if (parens) out << "(";
        out << (f->kind() == Formula::Kind::exists ? "exists " : "forall ") << f->variable();
        if (f->restriction()) {
            out << " in {";
            const auto& r = *f->restriction();
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out << ",";
                out << r[i];
            }
            out << "}";
        }
        out << " ";
        print(f->body(), 0, out);
        if (parens) out << ")";
        break;
    }
    }
}

} // namespace

std::string to_string(const FormulaPtr& f) {
    std::ostringstream out;
    print(f, 0, out);
    return out.str();
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
    case Formula::Kind::truth:
        return true;
    case Formula::Kind::atom:
        if (a->relation() != b->relation()) return false;
        [[fallthrough]];
    case Formula::Kind::equality:
        return a->terms() == b->terms();
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
        if (a->parts().size() != b->parts().size()) return false;
        for (std::size_t i = 0; i < a->parts().size(); ++i)
            if (!structurally_equal(a->parts()[i], b->parts()[i])) return false;
        return true;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall:
        return a->variable() == b->variable() && a->restriction() == b->restriction()
               && structurally_equal(a->body(), b->body());
    }
    return false;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& variable,
                      const Term& replacement) {
    switch (f->kind()) {
    case Formula::Kind::truth:
        return f;
    case Formula::Kind::atom:
    case Formula::Kind::equality: {
        bool touched = false;
        std::vector<Term> terms = f->terms();
        for (Term& t : terms)
            if (!t.is_constant() && t.name == variable) {
                t = replacement;
                touched = true;
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
        bool touched = false;
        for (const FormulaPtr& p : f->parts()) {
            FormulaPtr q = substitute(p, variable, replacement);
            touched |= q.get() != p.get();
            parts.push_back(std::move(q));
        }
        if (!touched) return f;
        return f->kind() == Formula::Kind::conjunction
                   ? Formula::conjunction(std::move(parts))
                   : Formula::disjunction(std::move(parts));
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        if (f->variable() == variable) return f; // bound below, not free
        FormulaPtr body = substitute(f->body(), variable, replacement);
        if (body.get() == f->body().get()) return f;
        const Quantifier q =
            f->kind() == Formula::Kind::exists ? Quantifier::exists : Quantifier::forall;
        if (f->restriction())
            return Formula::quantified_in(q, f->variable(), *f->restriction(), std::move(body));
        return Formula::quantified(q, f->variable(), std::move(body), f->pos());
    }
    }
    throw Error("substitute: unreachable");
}

} // namespace pefo
