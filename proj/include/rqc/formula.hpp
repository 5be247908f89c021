#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rqc {

/// Connectives of the propositional language. `And`/`Or` are n-ary (arity >= 2),
/// `Not` is unary, `Implies`/`Iff` are binary.
enum class Kind : std::uint8_t { True, False, Atom, Not, And, Or, Implies, Iff };

/// Returns true iff `name` is a well-formed atom name: `[A-Za-z_][A-Za-z0-9_]*`
/// and not one of the reserved words `not`, `true`, `false`.
bool is_valid_atom_name(std::string_view name);

/// An immutable propositional formula with value semantics. Copies share the
/// underlying tree; two formulas compare equal iff they are structurally
/// identical. Safe for concurrent read-only use.
class Formula {
public:
    static Formula constant(bool value);
    static Formula atom(std::string name);            // throws Error on invalid name
    static Formula negate(Formula operand);
    static Formula conj(std::vector<Formula> parts);   // arity >= 2
    static Formula disj(std::vector<Formula> parts);   // arity >= 2
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula iff(Formula lhs, Formula rhs);

    Kind kind() const noexcept;
    /// Atom name; valid only when kind() == Kind::Atom.
    const std::string& atom_name() const;
    /// Children in declaration order; empty for atoms and constants.
    const std::vector<Formula>& children() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    std::size_t hash() const noexcept;

    /// Renders the formula in the concrete grammar with minimal parentheses.
    /// parse_formula(to_string()) reproduces the exact tree.
    std::string to_string() const;

    /// Names of all atoms occurring in the formula, sorted.
    std::set<std::string> atoms() const;
    void collect_atoms(std::set<std::string>& out) const;

    struct Node; // implementation detail, defined in formula.cpp

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// An insertion-ordered, duplicate-free set of formulas (structural equality).
/// Order is preserved so derived artifacts (witnesses, reports) stay
/// deterministic across runs.
class FormulaSet {
public:
    FormulaSet() = default;
    explicit FormulaSet(std::vector<Formula> items);

    /// Adds `f` unless an equal formula is already present. Returns true if added.
    bool add(Formula f);
    bool contains(const Formula& f) const;

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }
    const Formula& operator[](std::size_t i) const { return items_[i]; }

    /// Set union preserving left-to-right insertion order.
    static FormulaSet unite(const FormulaSet& a, const FormulaSet& b);

    /// |a △ b| under structural equality.
    static std::size_t symmetric_difference_size(const FormulaSet& a, const FormulaSet& b);

    std::set<std::string> atoms() const;
    void collect_atoms(std::set<std::string>& out) const;

    bool operator==(const FormulaSet& other) const;

private:
    std::vector<Formula> items_;
};

} // namespace rqc
