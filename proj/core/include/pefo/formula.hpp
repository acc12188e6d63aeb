#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pefo/error.hpp"

namespace pefo {

enum class Quantifier { exists, forall };

struct SourcePos {
    int line = 0;
    int column = 0;
};

// An atom argument: a variable or a domain constant (written @k).
struct Term {
    enum class Kind { variable, constant };

    Kind kind = Kind::variable;
    std::string name; // variable spelling, when kind == variable
    int value = 0;    // domain element, when kind == constant

    static Term variable(std::string n) { return Term{Kind::variable, std::move(n), 0}; }
    static Term constant(int v) { return Term{Kind::constant, {}, v}; }

    bool is_constant() const noexcept { return kind == Kind::constant; }
    bool operator==(const Term&) const = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST for the positive fragment: relation atoms, equality atoms
// (the extended fragment), conjunction, disjunction and both quantifiers.
// There is no negation node, and no falsity; the designated truth node
// stands in for the empty conjunction. Quantifiers may carry a non-empty
// domain restriction (these never come from surface syntax; the reduction
// engines introduce them).
class Formula {
public:
    enum class Kind { truth, atom, equality, conjunction, disjunction, exists, forall };

    static FormulaPtr truth();
    static FormulaPtr atom(std::string relation, std::vector<Term> args, SourcePos pos = {});
    static FormulaPtr equality(Term lhs, Term rhs, SourcePos pos = {});
    // An empty part list collapses to the truth node, a singleton to itself.
    static FormulaPtr conjunction(std::vector<FormulaPtr> parts);
    // Rejects the empty list: the fragment cannot express falsity.
    static FormulaPtr disjunction(std::vector<FormulaPtr> parts);
    static FormulaPtr quantified(Quantifier q, std::string variable, FormulaPtr body,
                                 SourcePos pos = {});
    static FormulaPtr quantified_in(Quantifier q, std::string variable,
                                    std::vector<int> restriction, FormulaPtr body);

    Kind kind() const noexcept { return kind_; }
    const std::string& relation() const noexcept { return relation_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::string& variable() const noexcept { return variable_; }
    const std::optional<std::vector<int>>& restriction() const noexcept { return restriction_; }
    const std::vector<FormulaPtr>& parts() const noexcept { return parts_; }
    const FormulaPtr& body() const { return parts_.front(); }
    SourcePos pos() const noexcept { return pos_; }

    bool is_quantifier() const noexcept {
        return kind_ == Kind::exists || kind_ == Kind::forall;
    }
    // True when an equality atom occurs anywhere in the subtree.
    bool uses_equality() const noexcept { return uses_equality_; }

private:
    Formula() = default;

    Kind kind_ = Kind::truth;
    std::string relation_;
    std::vector<Term> terms_;
    std::string variable_;
    std::optional<std::vector<int>> restriction_;
    std::vector<FormulaPtr> parts_;
    SourcePos pos_;
    bool uses_equality_ = false;
};

// Free variables in order of first occurrence.
std::vector<std::string> free_variables(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

// True when a domain constant occurs anywhere in the subtree. Constants (and
// equality) put a formula outside the pure fragment the reduction engines
// cover.
bool uses_constants(const FormulaPtr& f);

// Grammar-compatible rendering; restrictions print as `exists u in {1,2}`
// (debug form, not part of the surface grammar).
std::string to_string(const FormulaPtr& f);

// Structural equality, ignoring source positions.
bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Replaces free occurrences of a variable; shared subtrees without the
// variable are reused.
FormulaPtr substitute(const FormulaPtr& f, const std::string& variable, const Term& replacement);

} // namespace pefo
