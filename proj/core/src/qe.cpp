#include "pefo/qe.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pefo/evaluate.hpp"

namespace pefo {

std::string Engine::describe() const {
    std::ostringstream out;
    switch (kind) {
    case Kind::brute:
        out << "brute";
        break;
    case Kind::forall_subst:
        out << "forall-subst(b=" << b << ", witness=" << witness->to_string() << ")";
        break;
    case Kind::exists_subst:
        out << "exists-subst(b=" << b << ", witness=" << witness->to_string() << ")";
        break;
    case Kind::forall_exists_subst:
        out << "forall-exists-subst(b=" << b << ", b'=" << b_prime
            << ", witness=" << witness->to_string() << ")";
        break;
    case Kind::a_reduce:
        out << "A-reduce(witness=" << witness->to_string() << ")";
        break;
    case Kind::e_reduce:
        out << "E-reduce(witness=" << witness->to_string() << ")";
        break;
    case Kind::ae_logspace:
        out << "AE-logspace(b=" << b << ", b'=" << b_prime
            << ", witness=" << witness->to_string() << ")";
        break;
    }
    return out.str();
}

Engine Engine::brute() { return Engine{}; }

Engine Engine::forall_subst(int n, int b) {
    return Engine{Kind::forall_subst, b, -1, Shop::forall_at(n, b)};
}

Engine Engine::exists_subst(int n, int b) {
    return Engine{Kind::exists_subst, b, -1, Shop::exists_at(n, b)};
}

Engine Engine::forall_exists_subst(int n, int b, int b_prime) {
    return Engine{Kind::forall_exists_subst, b, b_prime,
                  Shop::forall_exists_at(n, b, b_prime)};
}

Engine Engine::a_reduce(Shop canonical) {
    if (!canonical_a_form(canonical))
        throw ValidationError("a_reduce engine: " + canonical.to_string()
                              + " is not in canonical A form");
    return Engine{Kind::a_reduce, -1, -1, std::move(canonical)};
}

Engine Engine::e_reduce(Shop canonical) {
    if (!canonical_e_form(canonical))
        throw ValidationError("e_reduce engine: " + canonical.to_string()
                              + " is not in canonical E form");
    return Engine{Kind::e_reduce, -1, -1, std::move(canonical)};
}

Engine Engine::ae_logspace(int n, int b, int b_prime) {
    return Engine{Kind::ae_logspace, b, b_prime, Shop::forall_exists_at(n, b, b_prime)};
}

namespace {

void reject_restrictions(const PrenexFormula& f, const char* who) {
    for (const PrefixEntry& e : f.prefix)
        if (e.restriction)
            throw ValidationError(std::string(who) + ": input already carries a "
                                  "restricted quantifier");
}

} // namespace

PrenexFormula reduce_forall(const PrenexFormula& f, int b) {
    reject_restrictions(f, "reduce_forall");
    PrenexFormula out;
    out.matrix = f.matrix;
    for (const PrefixEntry& e : f.prefix) {
        if (e.quantifier == Quantifier::forall)
            out.matrix = substitute(out.matrix, e.variable, Term::constant(b));
        else
            out.prefix.push_back(e);
    }
    return out;
}

PrenexFormula reduce_exists(const PrenexFormula& f, int b) {
    reject_restrictions(f, "reduce_exists");
    PrenexFormula out;
    out.matrix = f.matrix;
    for (const PrefixEntry& e : f.prefix) {
        if (e.quantifier == Quantifier::exists)
            out.matrix = substitute(out.matrix, e.variable, Term::constant(b));
        else
            out.prefix.push_back(e);
    }
    return out;
}

PrenexFormula reduce_forall_exists(const PrenexFormula& f, int b, int b_prime) {
    reject_restrictions(f, "reduce_forall_exists");
    PrenexFormula out;
    out.matrix = f.matrix;
    for (const PrefixEntry& e : f.prefix)
        out.matrix = substitute(out.matrix, e.variable,
                                Term::constant(e.quantifier == Quantifier::forall ? b
                                                                                  : b_prime));
    return out;
}

PrenexFormula reduce_a(const PrenexFormula& f, const Shop& g) {
    reject_restrictions(f, "reduce_a");
    const auto form = canonical_a_form(g);
    if (!form)
        throw ValidationError("reduce_a: " + g.to_string() + " is not in canonical A form");
    PrenexFormula out;
    out.matrix = f.matrix;
    for (const PrefixEntry& e : f.prefix) {
        if (e.quantifier == Quantifier::forall)
            out.matrix = substitute(out.matrix, e.variable, Term::constant(form->b));
        else
            out.prefix.push_back(PrefixEntry{Quantifier::exists, e.variable, form->kept});
    }
    return out;
}

PrenexFormula reduce_e(const PrenexFormula& f, const Shop& g) {
    reject_restrictions(f, "reduce_e");
    const auto form = canonical_e_form(g);
    if (!form)
        throw ValidationError("reduce_e: " + g.to_string() + " is not in canonical E form");
    PrenexFormula out;
    out.matrix = f.matrix;
    for (const PrefixEntry& e : f.prefix) {
        if (e.quantifier == Quantifier::exists)
            out.matrix = substitute(out.matrix, e.variable, Term::constant(form->b));
        else
            out.prefix.push_back(PrefixEntry{Quantifier::forall, e.variable, form->kept});
    }
    return out;
}

Engine select_engine(const Dsm& d) {
    const int n = d.domain_size();
    const Shop* first_a = nullptr;
    const Shop* first_e = nullptr;
    for (const Shop& f : d.members()) {
        const ShopShape s = detect_shape(f);
        if (!first_a && s.is_a_shop()) first_a = &f;
        if (!first_e && s.is_e_shop()) first_e = &f;
        if (first_a && first_e) break;
    }
    if (first_a && first_e) {
        // The composition is again a member and carries both witnesses; its
        // forall-exists sub-shop justifies full substitution.
        const Shop composed = compose(*first_a, *first_e);
        const ShopShape s = detect_shape(composed);
        return Engine::ae_logspace(n, s.a_witnesses.front(), s.e_witnesses.front());
    }
    if (first_a) return Engine::a_reduce(canonicalize_a(*first_a));
    if (first_e) return Engine::e_reduce(canonicalize_e(*first_e));
    return Engine::brute();
}

namespace {

bool eval_prefix(const Structure& b, const PrenexFormula& f, std::size_t i,
                 std::map<std::string, int>& env) {
    if (i == f.prefix.size()) return evaluate_bruteforce(b, f.matrix, env);
    const PrefixEntry& e = f.prefix[i];
    const bool existential = e.quantifier == Quantifier::exists;
    auto try_value = [&](int v) {
        env[e.variable] = v;
        const bool r = eval_prefix(b, f, i + 1, env);
        env.erase(e.variable);
        return r;
    };
    if (e.restriction) {
        for (int v : *e.restriction) {
            if (v < 0 || v >= b.domain_size())
                throw EvalError("restriction element " + std::to_string(v) + " out of domain");
            if (try_value(v) == existential) return existential;
        }
    } else {
        for (int v = 0; v < b.domain_size(); ++v)
            if (try_value(v) == existential) return existential;
    }
    return !existential;
}

void verify_engine(const Engine& engine, const Structure& b) {
    if (engine.kind == Engine::Kind::brute) return;
    if (!engine.witness) throw ValidationError("engine carries no witness shop");
    const Shop& w = *engine.witness;
    if (w.domain_size() != b.domain_size())
        throw ValidationError("engine witness " + w.to_string()
                              + " has the wrong domain size for this structure");
    switch (engine.kind) {
    case Engine::Kind::forall_subst:
        if (w != Shop::forall_at(b.domain_size(), engine.b))
            throw ValidationError("engine witness does not match its forall pattern");
        break;
    case Engine::Kind::exists_subst:
        if (w != Shop::exists_at(b.domain_size(), engine.b))
            throw ValidationError("engine witness does not match its exists pattern");
        break;
    case Engine::Kind::forall_exists_subst:
    case Engine::Kind::ae_logspace:
        if (w != Shop::forall_exists_at(b.domain_size(), engine.b, engine.b_prime))
            throw ValidationError("engine witness does not match its forall-exists pattern");
        break;
    case Engine::Kind::a_reduce:
        if (!canonical_a_form(w))
            throw ValidationError("engine witness is not in canonical A form");
        break;
    case Engine::Kind::e_reduce:
        if (!canonical_e_form(w))
            throw ValidationError("engine witness is not in canonical E form");
        break;
    case Engine::Kind::brute:
        break;
    }
    if (!is_she(w, b))
        throw ValidationError("engine witness " + w.to_string()
                              + " does not preserve the structure; refusing an unsound "
                              "reduction");
}

} // namespace

bool evaluate_prenex_bruteforce(const Structure& b, const PrenexFormula& f) {
    std::map<std::string, int> env;
    return eval_prefix(b, f, 0, env);
}

bool evaluate(const Structure& b, const FormulaPtr& sentence,
              const std::optional<Engine>& engine_opt) {
    const auto free = free_variables(sentence);
    if (!free.empty())
        throw ValidationError("evaluate: not a sentence, free variable '" + free.front()
                              + "'");
    // The reduction lemmas cover the pure fragment: no equality atoms, no
    // domain constants. Other sentences evaluate by brute force; forcing an
    // engine on them is an error, not a silent fallback.
    const bool pure = !sentence->uses_equality() && !uses_constants(sentence);
    Engine engine;
    if (engine_opt) {
        engine = *engine_opt;
        if (!pure && engine.kind != Engine::Kind::brute)
            throw ValidationError("evaluate: reduction engines require an equality-free, "
                                  "constant-free sentence");
    } else {
        engine = pure ? select_engine(she_monoid(b)) : Engine::brute();
    }
    verify_engine(engine, b);

    PrenexFormula pf = prenex(sentence);
    switch (engine.kind) {
    case Engine::Kind::brute:
        break;
    case Engine::Kind::forall_subst:
        pf = reduce_forall(pf, engine.b);
        break;
    case Engine::Kind::exists_subst:
        pf = reduce_exists(pf, engine.b);
        break;
    case Engine::Kind::forall_exists_subst:
    case Engine::Kind::ae_logspace:
        pf = reduce_forall_exists(pf, engine.b, engine.b_prime);
        break;
    case Engine::Kind::a_reduce:
        pf = reduce_a(pf, *engine.witness);
        break;
    case Engine::Kind::e_reduce:
        pf = reduce_e(pf, *engine.witness);
        break;
    }
    return evaluate_prenex_bruteforce(b, pf);
}

} // namespace pefo
