#pragma once

#include <optional>
#include <string>

#include "pefo/dsm.hpp"
#include "pefo/prenex.hpp"
#include "pefo/shape.hpp"
#include "pefo/structure.hpp"

namespace pefo {

// An evaluation strategy justified by a shop preserving the target
// structure. The witness shop is re-verified against the structure at
// evaluation time; an unsound pairing is an error, never a silent fallback.
struct Engine {
    enum class Kind {
        brute,
        forall_subst,        // universal variables become @b
        exists_subst,        // existential variables become @b
        forall_exists_subst, // both substitutions at once
        a_reduce,            // universals become @b, existentials restrict to kept
        e_reduce,            // existentials become @b, universals restrict to kept
        ae_logspace,         // both substitutions, witnessed via a composition
    };

    Kind kind = Kind::brute;
    int b = -1;
    int b_prime = -1;
    std::optional<Shop> witness;

    std::string describe() const;

    static Engine brute();
    static Engine forall_subst(int n, int b);
    static Engine exists_subst(int n, int b);
    static Engine forall_exists_subst(int n, int b, int b_prime);
    static Engine a_reduce(Shop canonical);
    static Engine e_reduce(Shop canonical);
    static Engine ae_logspace(int n, int b, int b_prime);
};

// Deletes every universal prefix entry, substituting @b in the matrix.
PrenexFormula reduce_forall(const PrenexFormula& f, int b);

// Deletes every existential prefix entry, substituting @b in the matrix.
PrenexFormula reduce_exists(const PrenexFormula& f, int b);

// Eliminates the whole prefix; the result is a variable-free matrix.
PrenexFormula reduce_forall_exists(const PrenexFormula& f, int b, int b_prime);

// g must be in canonical A form: universals become @b, existentials are
// restricted to the kept part. Applied outermost-in.
PrenexFormula reduce_a(const PrenexFormula& f, const Shop& g);

// Dual: existentials become @b, universals are restricted to the kept part.
PrenexFormula reduce_e(const PrenexFormula& f, const Shop& g);

// Strategy choice from the monoid of a structure, first match wins:
// A- and E-shops both present -> ae_logspace via their composition; an
// A-shop only -> a_reduce on its canonical form; an E-shop only ->
// e_reduce; otherwise brute force. The substitution engines remain
// available for explicit use. Witnesses break ties toward least index.
Engine select_engine(const Dsm& d);

// Restriction-aware brute force over a prenex formula.
bool evaluate_prenex_bruteforce(const Structure& b, const PrenexFormula& f);

// Prenexes the sentence, applies the engine's reductions and evaluates the
// residual by brute force over the (restricted) domains. Agrees with
// evaluate_bruteforce on every sound engine. Engines default to
// select_engine over the structure's monoid.
bool evaluate(const Structure& b, const FormulaPtr& sentence,
              const std::optional<Engine>& engine = {});

} // namespace pefo
