#include "pefo/evaluate.hpp"

#include <algorithm>
#include <set>

namespace pefo {

Relation::Relation(int arity_, std::vector<Tuple> tuples_)
    : arity(arity_), tuples(std::move(tuples_)) {
    if (arity < 1) throw ValidationError("relation arity must be positive");
    for (const Tuple& t : tuples)
        if (static_cast<int>(t.size()) != arity)
            throw ValidationError("relation tuple length differs from arity");
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

bool Relation::contains(std::span<const int> t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t,
                               [](const Tuple& a, std::span<const int> key) {
                                   return std::lexicographical_compare(a.begin(), a.end(),
                                                                       key.begin(), key.end());
                               });
    return it != tuples.end() && std::equal(it->begin(), it->end(), t.begin(), t.end());
}

namespace {

// Persistent assignment: a parent chain living on the evaluation stack.
struct EnvNode {
    const EnvNode* parent;
    const std::string* name;
    int value;
};

const int* lookup(const EnvNode* env, const std::string& name) {
    for (; env; env = env->parent)
        if (*env->name == name) return &env->value;
    return nullptr;
}

int resolve(const Structure& b, const Term& t, const EnvNode* env) {
    if (t.is_constant()) {
        if (t.value < 0 || t.value >= b.domain_size())
            throw EvalError("constant @" + std::to_string(t.value) + " out of domain 0.."
                            + std::to_string(b.domain_size() - 1));
        return t.value;
    }
    if (const int* v = lookup(env, t.name)) return *v;
    throw EvalError("unbound variable '" + t.name + "'");
}

bool eval(const Structure& b, const Formula& f, const EnvNode* env) {
    switch (f.kind()) {
    case Formula::Kind::truth:
        return true;
    case Formula::Kind::atom: {
        auto rel = b.signature().index_of(f.relation());
        if (!rel) throw EvalError("unknown relation symbol '" + f.relation() + "'");
        if (b.signature().symbol(*rel).arity != static_cast<int>(f.terms().size()))
            throw EvalError("relation " + f.relation() + " used with the wrong arity");
        std::vector<int> args(f.terms().size());
        for (std::size_t i = 0; i < args.size(); ++i)
            args[i] = resolve(b, f.terms()[i], env);
        return b.holds(*rel, args);
    }
    case Formula::Kind::equality:
        return resolve(b, f.terms()[0], env) == resolve(b, f.terms()[1], env);
    case Formula::Kind::conjunction:
        for (const FormulaPtr& p : f.parts())
            if (!eval(b, *p, env)) return false;
        return true;
    case Formula::Kind::disjunction:
        for (const FormulaPtr& p : f.parts())
            if (eval(b, *p, env)) return true;
        return false;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        const bool existential = f.kind() == Formula::Kind::exists;
        auto try_value = [&](int v) {
            EnvNode node{env, &f.variable(), v};
            return eval(b, *f.body(), &node);
        };
        if (f.restriction()) {
            for (int v : *f.restriction()) {
                if (v < 0 || v >= b.domain_size())
                    throw EvalError("restriction element " + std::to_string(v)
                                    + " out of domain");
                if (try_value(v) == existential) return existential;
            }
        } else {
            for (int v = 0; v < b.domain_size(); ++v)
                if (try_value(v) == existential) return existential;
        }
        return !existential;
    }
    }
    throw Error("eval: unreachable");
}

} // namespace

bool evaluate_bruteforce(const Structure& b, const FormulaPtr& f,
                         const std::map<std::string, int>& env) {
    std::vector<EnvNode> base;
    base.reserve(env.size());
    const EnvNode* head = nullptr;
    for (const auto& [name, value] : env) {
        if (value < 0 || value >= b.domain_size())
            throw EvalError("assignment " + name + " = " + std::to_string(value)
                            + " out of domain");
        base.push_back({head, &name, value});
        head = &base.back();
    }
    return eval(b, *f, head);
}

Relation extension(const Structure& b, const FormulaPtr& f,
                   const std::vector<std::string>& free_vars) {
    if (free_vars.empty())
        throw ValidationError("extension: the free-variable list must be non-empty");
    {
        std::set<std::string> declared(free_vars.begin(), free_vars.end());
        if (declared.size() != free_vars.size())
            throw ValidationError("extension: duplicate free variable");
        for (const std::string& v : free_variables(f))
            if (!declared.count(v))
                throw EvalError("extension: variable '" + v + "' is free in the formula "
                                "but missing from the free-variable list");
    }

    const int n = b.domain_size();
    const std::size_t k = free_vars.size();
    std::vector<Tuple> tuples;
    Tuple point(k, 0);
    std::vector<EnvNode> chain(k);
    while (true) {
        const EnvNode* head = nullptr;
        for (std::size_t i = 0; i < k; ++i) {
            chain[i] = {head, &free_vars[i], point[i]};
            head = &chain[i];
        }
        if (eval(b, *f, head)) tuples.push_back(point);
        // Ascending odometer keeps the tuple set sorted by construction.
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && ++point[static_cast<std::size_t>(pos)] == n) {
            point[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return Relation(static_cast<int>(k), std::move(tuples));
}

} // namespace pefo
