#include "pefo/random.hpp"

namespace pefo {

namespace {

FormulaPtr random_tree(Rng& rng, const Signature& sig, int domain_size,
                       const std::vector<std::string>& vars, int constant_one_in,
                       int atoms) {
    if (atoms <= 1 || rng.chance_one_in(3)) {
        const int rel = rng.below(sig.size());
        const RelationSymbol& sym = sig.symbol(rel);
        std::vector<Term> args;
        args.reserve(static_cast<std::size_t>(sym.arity));
        for (int i = 0; i < sym.arity; ++i) {
            const bool want_constant =
                vars.empty() || (constant_one_in > 0 && rng.chance_one_in(constant_one_in));
            if (want_constant)
                args.push_back(Term::constant(rng.below(domain_size)));
            else
                args.push_back(Term::variable(vars[static_cast<std::size_t>(rng.below(
                    static_cast<int>(vars.size())))]));
        }
        return Formula::atom(sym.name, std::move(args));
    }
    const int left = 1 + rng.below(atoms - 1);
    std::vector<FormulaPtr> parts;
    parts.push_back(random_tree(rng, sig, domain_size, vars, constant_one_in, left));
    parts.push_back(random_tree(rng, sig, domain_size, vars, constant_one_in, atoms - left));
    return rng.chance_one_in(2) ? Formula::conjunction(std::move(parts))
                                : Formula::disjunction(std::move(parts));
}

} // namespace

FormulaPtr random_formula(Rng& rng, const Signature& sig, int domain_size,
                          const FormulaGenOptions& options) {
    if (sig.size() == 0) return Formula::truth();
    int quantifiers = rng.below(options.max_quantifiers + 1);
    // A constant-free formula needs at least one variable in scope.
    if (quantifiers == 0 && options.free_vars.empty() && options.constant_one_in <= 0)
        quantifiers = 1;
    std::vector<std::string> vars = options.free_vars;
    std::vector<std::pair<Quantifier, std::string>> prefix;
    for (int i = 0; i < quantifiers; ++i) {
        std::string name = "x" + std::to_string(i + 1);
        prefix.emplace_back(rng.chance_one_in(2) ? Quantifier::forall : Quantifier::exists,
                            name);
        vars.push_back(std::move(name));
    }
    const int atoms = 1 + rng.below(options.max_atoms);
    FormulaPtr body =
        random_tree(rng, sig, domain_size, vars, options.constant_one_in, atoms);
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
        body = Formula::quantified(it->first, it->second, std::move(body));
    return body;
}

Structure random_binary_structure(Rng& rng, int max_n) {
    const int n = 1 + rng.below(max_n);
    std::vector<Tuple> edges;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rng.chance_one_in(2)) edges.push_back({x, y});
    return Structure(Signature({{"E", 2}}), n, {std::move(edges)});
}

} // namespace pefo
