#include "rqc/formula.hpp"

#include "rqc/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace rqc {

struct Formula::Node {
    Kind kind;
    std::string atom;            // Kind::Atom only
    std::vector<Formula> children;
    std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(Kind kind, const std::string& atom, const std::vector<Formula>& children) {
    std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ULL + 1;
    if (kind == Kind::Atom) {
        h = mix(h, std::hash<std::string>{}(atom));
    }
    for (const Formula& c : children) {
        h = mix(h, c.hash());
    }
    return h;
}

std::shared_ptr<const Formula::Node> make_node(Kind kind, std::string atom,
                                               std::vector<Formula> children) {
    auto node = std::make_shared<Formula::Node>();
    node->kind = kind;
    node->atom = std::move(atom);
    node->children = std::move(children);
    node->hash = node_hash(node->kind, node->atom, node->children);
    return node;
}

constexpr int precedence_of(Kind kind) {
    switch (kind) {
    case Kind::Iff: return 0;
    case Kind::Implies: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Not: return 4;
    default: return 5; // atoms and constants
    }
}

} // namespace

bool is_valid_atom_name(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    if (name == "not" || name == "true" || name == "false") {
        return false;
    }
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && name.front() != '_') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Formula Formula::constant(bool value) {
    // The two constants are shared singletons; cheap and keeps equality fast.
    static const Formula true_formula{make_node(Kind::True, {}, {})};
    static const Formula false_formula{make_node(Kind::False, {}, {})};
    return value ? true_formula : false_formula;
}

Formula Formula::atom(std::string name) {
    if (!is_valid_atom_name(name)) {
        throw Error("invalid atom name: '" + name + "'");
    }
    return Formula{make_node(Kind::Atom, std::move(name), {})};
}

Formula Formula::negate(Formula operand) {
    return Formula{make_node(Kind::Not, {}, {std::move(operand)})};
}

Formula Formula::conj(std::vector<Formula> parts) {
    if (parts.size() < 2) {
        throw Error("conjunction requires at least two operands");
    }
    return Formula{make_node(Kind::And, {}, std::move(parts))};
}

Formula Formula::disj(std::vector<Formula> parts) {
    if (parts.size() < 2) {
        throw Error("disjunction requires at least two operands");
    }
    return Formula{make_node(Kind::Or, {}, std::move(parts))};
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return conj(std::vector<Formula>{std::move(lhs), std::move(rhs)});
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return disj(std::vector<Formula>{std::move(lhs), std::move(rhs)});
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula{make_node(Kind::Implies, {}, {std::move(lhs), std::move(rhs)})};
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    return Formula{make_node(Kind::Iff, {}, {std::move(lhs), std::move(rhs)})};
}

Kind Formula::kind() const noexcept {
    return node_->kind;
}

const std::string& Formula::atom_name() const {
    if (node_->kind != Kind::Atom) {
        throw Error("atom_name() called on a non-atom formula");
    }
    return node_->atom;
}

const std::vector<Formula>& Formula::children() const {
    return node_->children;
}

std::size_t Formula::hash() const noexcept {
    return node_->hash;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (node_->kind != other.node_->kind || node_->hash != other.node_->hash) {
        return false;
    }
    if (node_->kind == Kind::Atom) {
        return node_->atom == other.node_->atom;
    }
    const auto& a = node_->children;
    const auto& b = other.node_->children;
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

namespace {

void render(const Formula& f, std::string& out);

// A child is parenthesized when its operator binds looser than the parent's,
// and additionally when reparsing flat/associative syntax would reshape the
// tree: nested And under And (same for Or), and an Implies/Iff in its own
// left operand (both are right-associative in the grammar).
void render_child(const Formula& child, Kind parent, bool first_operand, std::string& out) {
    bool parens = false;
    int pc = precedence_of(child.kind());
    int pp = precedence_of(parent);
    if (pc < pp) {
        parens = true;
    } else if (pc == pp) {
        if (parent == Kind::And || parent == Kind::Or) {
            parens = true;
        } else if ((parent == Kind::Implies || parent == Kind::Iff) && first_operand) {
            parens = true;
        }
    }
    if (parens) {
        out += '(';
        render(child, out);
        out += ')';
    } else {
        render(child, out);
    }
}

void render(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case Kind::True:
        out += "true";
        return;
    case Kind::False:
        out += "false";
        return;
    case Kind::Atom:
        out += f.atom_name();
        return;
    case Kind::Not:
        out += '!';
        render_child(f.children()[0], Kind::Not, true, out);
        return;
    case Kind::And:
    case Kind::Or: {
        const char* op = f.kind() == Kind::And ? " & " : " | ";
        bool first = true;
        for (const Formula& c : f.children()) {
            if (!first) {
                out += op;
            }
            render_child(c, f.kind(), first, out);
            first = false;
        }
        return;
    }
    case Kind::Implies:
    case Kind::Iff: {
        render_child(f.children()[0], f.kind(), true, out);
        out += f.kind() == Kind::Implies ? " -> " : " <-> ";
        render_child(f.children()[1], f.kind(), false, out);
        return;
    }
    }
}

} // namespace

std::string Formula::to_string() const {
    std::string out;
    render(*this, out);
    return out;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
    if (node_->kind == Kind::Atom) {
        out.insert(node_->atom);
        return;
    }
    for (const Formula& c : node_->children) {
        c.collect_atoms(out);
    }
}

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
}

FormulaSet::FormulaSet(std::vector<Formula> items) {
    items_.reserve(items.size());
    for (Formula& f : items) {
        add(std::move(f));
    }
}

bool FormulaSet::add(Formula f) {
    if (contains(f)) {
        return false;
    }
    items_.push_back(std::move(f));
    return true;
}

bool FormulaSet::contains(const Formula& f) const {
    return std::find(items_.begin(), items_.end(), f) != items_.end();
}

FormulaSet FormulaSet::unite(const FormulaSet& a, const FormulaSet& b) {
    FormulaSet out = a;
    for (const Formula& f : b) {
        out.add(f);
    }
    return out;
}

std::size_t FormulaSet::symmetric_difference_size(const FormulaSet& a, const FormulaSet& b) {
    std::size_t count = 0;
    for (const Formula& f : a) {
        if (!b.contains(f)) {
            ++count;
        }
    }
    for (const Formula& f : b) {
        if (!a.contains(f)) {
            ++count;
        }
    }
    return count;
}

std::set<std::string> FormulaSet::atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
}

void FormulaSet::collect_atoms(std::set<std::string>& out) const {
    for (const Formula& f : items_) {
        f.collect_atoms(out);
    }
}

bool FormulaSet::operator==(const FormulaSet& other) const {
    // Order-insensitive set equality.
    if (items_.size() != other.items_.size()) {
        return false;
    }
    for (const Formula& f : items_) {
        if (!other.contains(f)) {
            return false;
        }
    }
    return true;
}

} // namespace rqc
