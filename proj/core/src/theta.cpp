#include "pefo/theta.hpp"

#include <algorithm>

namespace pefo {

namespace {

void check_tuple(const Structure& b, const Tuple& r, const char* who) {
    if (r.empty()) throw ValidationError(std::string(who) + ": tuple must be non-empty");
    for (int v : r)
        if (v < 0 || v >= b.domain_size())
            throw ValidationError(std::string(who) + ": tuple component "
                                  + std::to_string(v) + " out of domain");
}

// Conjunction of the positive facts of `elements`, rendered over the given
// variable names (one per position): an atom R(vars[i1],...,vars[ia]) occurs
// iff R holds on (elements[i1],...,elements[ia]).
FormulaPtr facts_conjunction(const Structure& b, const Tuple& elements,
                             const std::vector<std::string>& vars) {
    const int l = static_cast<int>(elements.size());
    std::vector<FormulaPtr> atoms;
    for (int rel = 0; rel < b.signature().size(); ++rel) {
        const RelationSymbol& sym = b.signature().symbol(rel);
        const auto arity = static_cast<std::size_t>(sym.arity);
        std::vector<int> idx(arity, 0);
        std::vector<int> probe(arity);
        while (true) {
            for (std::size_t i = 0; i < arity; ++i)
                probe[i] = elements[static_cast<std::size_t>(idx[i])];
            if (b.holds(rel, probe)) {
                std::vector<Term> args;
                args.reserve(arity);
                for (std::size_t i = 0; i < arity; ++i)
                    args.push_back(Term::variable(vars[static_cast<std::size_t>(idx[i])]));
                atoms.push_back(Formula::atom(sym.name, std::move(args)));
            }
            int pos = static_cast<int>(arity) - 1;
            while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == l) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return Formula::conjunction(std::move(atoms));
}

std::vector<std::string> numbered(const std::string& stem, int from, int count) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(from + i));
    return names;
}

FormulaPtr wrap(Quantifier q, const std::vector<std::string>& vars, FormulaPtr body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = Formula::quantified(q, *it, std::move(body));
    return body;
}

} // namespace

FormulaPtr canonical_conjunction(const Structure& b, const Tuple& r) {
    check_tuple(b, r, "canonical_conjunction");
    return facts_conjunction(b, r, numbered("v", 0, static_cast<int>(r.size())));
}

std::vector<std::string> theta_free_vars(int k) { return numbered("u", 1, k); }

FormulaPtr theta_tuple_eq(const Structure& b, const Tuple& r) {
    check_tuple(b, r, "theta_tuple_eq");
    const int n = b.domain_size();
    const int k = static_cast<int>(r.size());
    const auto u = theta_free_vars(k);
    const auto v = numbered("v", 1, n);

    Tuple enumeration(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) enumeration[static_cast<std::size_t>(i)] = i;

    std::vector<FormulaPtr> body;
    body.push_back(facts_conjunction(b, enumeration, v));

    // forall w (w = v1 | ... | vn): the v's exhaust the domain.
    std::vector<FormulaPtr> cases;
    for (const std::string& vi : v)
        cases.push_back(Formula::equality(Term::variable("w"), Term::variable(vi)));
    body.push_back(Formula::quantified(Quantifier::forall, "w",
                                       Formula::disjunction(std::move(cases))));

    // u_i = v_{r_i + 1}: the free variables pick out the images of r.
    for (int i = 0; i < k; ++i)
        body.push_back(Formula::equality(
            Term::variable(u[static_cast<std::size_t>(i)]),
            Term::variable(v[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])])));

    return wrap(Quantifier::exists, v, Formula::conjunction(std::move(body)));
}

FormulaPtr theta_tuple(const Structure& b, const Tuple& r) {
    check_tuple(b, r, "theta_tuple");
    const int n = b.domain_size();
    if (n > 4)
        throw CapError("theta_tuple: the inner disjunction has n^n disjuncts; "
                       "domains above four elements are not supported");
    const int k = static_cast<int>(r.size());
    const auto u = theta_free_vars(k);
    const auto v = numbered("v", 1, n);
    const auto w = numbered("w", 1, n);

    std::vector<std::string> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    std::vector<std::string> uvw = uv;
    uvw.insert(uvw.end(), w.begin(), w.end());

    Tuple rs = r;
    for (int i = 0; i < n; ++i) rs.push_back(i);

    // One disjunct per assignment tuple t, enumerated lexicographically.
    std::vector<FormulaPtr> disjuncts;
    Tuple rst = rs;
    rst.resize(rs.size() + static_cast<std::size_t>(n), 0);
    while (true) {
        disjuncts.push_back(facts_conjunction(b, rst, uvw));
        int pos = n - 1;
        while (pos >= 0 && ++rst[rs.size() + static_cast<std::size_t>(pos)] == n) {
            rst[rs.size() + static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    FormulaPtr inner = wrap(Quantifier::forall, w, Formula::disjunction(std::move(disjuncts)));
    FormulaPtr body = Formula::conjunction({facts_conjunction(b, rs, uv), std::move(inner)});
    return wrap(Quantifier::exists, v, std::move(body));
}

FormulaPtr theta_relation(const Structure& b, const Relation& s) {
    if (s.tuples.empty())
        throw ValidationError("theta_relation: the empty relation is not definable in "
                              "this fragment");
    std::vector<FormulaPtr> disjuncts;
    disjuncts.reserve(s.tuples.size());
    for (const Tuple& r : s.tuples) disjuncts.push_back(theta_tuple(b, r));
    return Formula::disjunction(std::move(disjuncts));
}

bool preserves(const Shop& f, const Relation& s) {
    std::vector<std::vector<int>> options(static_cast<std::size_t>(s.arity));
    std::vector<std::size_t> idx(static_cast<std::size_t>(s.arity));
    std::vector<int> image(static_cast<std::size_t>(s.arity));
    for (const Tuple& t : s.tuples) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            options[i].clear();
            for (int y = 0; y < f.domain_size(); ++y)
                if (f.maps(t[i], y)) options[i].push_back(y);
        }
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i) image[i] = options[i][idx[i]];
            if (!s.contains(image)) return false;
            int pos = s.arity - 1;
            while (pos >= 0) {
                auto p = static_cast<std::size_t>(pos);
                if (++idx[p] < options[p].size()) break;
                idx[p] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return true;
}

} // namespace pefo
