#include "rqc/solver.hpp"

#include "rqc/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace rqc {

bool eval(const Formula& f, const Assignment& v) {
    switch (f.kind()) {
    case Kind::True:
        return true;
    case Kind::False:
        return false;
    case Kind::Atom: {
        auto it = v.find(f.atom_name());
        if (it == v.end()) {
            throw Error("unassigned atom: '" + f.atom_name() + "'");
        }
        return it->second;
    }
    case Kind::Not:
        return !eval(f.children()[0], v);
    case Kind::And:
        for (const Formula& c : f.children()) {
            if (!eval(c, v)) {
                return false;
            }
        }
        return true;
    case Kind::Or:
        for (const Formula& c : f.children()) {
            if (eval(c, v)) {
                return true;
            }
        }
        return false;
    case Kind::Implies:
        return !eval(f.children()[0], v) || eval(f.children()[1], v);
    case Kind::Iff:
        return eval(f.children()[0], v) == eval(f.children()[1], v);
    }
    throw Error("unreachable formula kind");
}

namespace {

// Clause representation: literal +v / -v for 1-based variable v.
using Clause = std::vector<int>;

// Result of encoding a subformula: either a literal, or a constant folded
// away during encoding.
struct EncodedLit {
    enum class Tag { Lit, True, False } tag;
    int lit = 0;

    static EncodedLit of(int l) { return {Tag::Lit, l}; }
    static EncodedLit constant(bool b) { return {b ? Tag::True : Tag::False, 0}; }
    bool is_true() const { return tag == Tag::True; }
    bool is_false() const { return tag == Tag::False; }
    bool is_lit() const { return tag == Tag::Lit; }

    EncodedLit negated() const {
        if (tag == Tag::Lit) {
            return of(-lit);
        }
        return constant(tag == Tag::False);
    }
};

/// Definitional (Tseitin-style) clausifier. Original atoms take the lowest
/// variable indices; subformula definitions get fresh variables above them,
/// so witnesses are recovered by projecting onto the original range.
class Clausifier {
public:
    int var_for_atom(const std::string& name) {
        auto it = atom_vars_.find(name);
        if (it != atom_vars_.end()) {
            return it->second;
        }
        int v = fresh_var();
        atom_vars_.emplace(name, v);
        atom_names_.push_back(name);
        return v;
    }

    int fresh_var() { return ++var_count_; }

    void add_clause(Clause c) { clauses_.push_back(std::move(c)); }

    /// Asserts `f` as a top-level conjunct. Returns false if the formula
    /// folded to the constant false (the set is unsatisfiable outright).
    bool assert_formula(const Formula& f) {
        EncodedLit e = encode(f);
        if (e.is_false()) {
            return false;
        }
        if (e.is_lit()) {
            add_clause({e.lit});
        }
        return true;
    }

    EncodedLit encode(const Formula& f) {
        switch (f.kind()) {
        case Kind::True:
            return EncodedLit::constant(true);
        case Kind::False:
            return EncodedLit::constant(false);
        case Kind::Atom:
            return EncodedLit::of(var_for_atom(f.atom_name()));
        case Kind::Not:
            return encode(f.children()[0]).negated();
        case Kind::And:
        case Kind::Or:
            return encode_nary(f);
        case Kind::Implies: {
            EncodedLit a = encode(f.children()[0]);
            EncodedLit b = encode(f.children()[1]);
            if (a.is_false() || b.is_true()) {
                return EncodedLit::constant(true);
            }
            if (a.is_true()) {
                return b;
            }
            if (b.is_false()) {
                return a.negated();
            }
            int v = fresh_var();
            add_clause({-v, -a.lit, b.lit});
            add_clause({v, a.lit});
            add_clause({v, -b.lit});
            return EncodedLit::of(v);
        }
        case Kind::Iff: {
            EncodedLit a = encode(f.children()[0]);
            EncodedLit b = encode(f.children()[1]);
            if (a.is_true()) {
                return b;
            }
            if (a.is_false()) {
                return b.negated();
            }
            if (b.is_true()) {
                return a;
            }
            if (b.is_false()) {
                return a.negated();
            }
            int v = fresh_var();
            add_clause({-v, -a.lit, b.lit});
            add_clause({-v, a.lit, -b.lit});
            add_clause({v, a.lit, b.lit});
            add_clause({v, -a.lit, -b.lit});
            return EncodedLit::of(v);
        }
        }
        throw Error("unreachable formula kind");
    }

    int var_count() const { return var_count_; }
    int atom_count() const { return static_cast<int>(atom_names_.size()); }
    const std::vector<std::string>& atom_names() const { return atom_names_; }
    std::vector<Clause>& clauses() { return clauses_; }

private:
    EncodedLit encode_nary(const Formula& f) {
        bool is_and = f.kind() == Kind::And;
        std::vector<int> lits;
        for (const Formula& c : f.children()) {
            EncodedLit e = encode(c);
            if (e.is_lit()) {
                lits.push_back(e.lit);
            } else if (e.is_true() != is_and) {
                // false child of And / true child of Or decides the node.
                return EncodedLit::constant(!is_and);
            }
            // Neutral constants (true in And, false in Or) drop out.
        }
        if (lits.empty()) {
            return EncodedLit::constant(is_and);
        }
        if (lits.size() == 1) {
            return EncodedLit::of(lits.front());
        }
        int v = fresh_var();
        if (is_and) {
            Clause back{v};
            for (int l : lits) {
                add_clause({-v, l});
                back.push_back(-l);
            }
            add_clause(std::move(back));
        } else {
            Clause fwd{-v};
            for (int l : lits) {
                add_clause({v, -l});
                fwd.push_back(l);
            }
            add_clause(std::move(fwd));
        }
        return EncodedLit::of(v);
    }

    int var_count_ = 0;
    std::map<std::string, int> atom_vars_;
    std::vector<std::string> atom_names_; // index = var - 1 for atom variables
    std::vector<Clause> clauses_;
};

/// Complete DPLL over a clause set. Deterministic: branches on the lowest
/// unassigned variable, trying true before false.
class Dpll {
public:
    Dpll(std::vector<Clause> clauses, int var_count)
        : clauses_(std::move(clauses)), values_(static_cast<std::size_t>(var_count) + 1, 0) {}

    bool solve() { return search(); }

    /// Value of variable v in the found model; unassigned variables default
    /// to false (every clause is already satisfied, so any completion works).
    bool value(int v) const { return values_[static_cast<std::size_t>(v)] > 0; }

private:
    // values_: 0 unassigned, +1 true, -1 false.
    bool lit_true(int lit) const {
        int v = values_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v > 0 : v < 0;
    }
    bool lit_false(int lit) const {
        int v = values_[static_cast<std::size_t>(std::abs(lit))];
        return lit > 0 ? v < 0 : v > 0;
    }

    void assign(int lit) {
        values_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? 1 : -1;
        trail_.push_back(std::abs(lit));
    }

    void backtrack_to(std::size_t mark) {
        while (trail_.size() > mark) {
            values_[static_cast<std::size_t>(trail_.back())] = 0;
            trail_.pop_back();
        }
    }

    /// Unit propagation to fixpoint. Returns false on conflict.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Clause& c : clauses_) {
                int unassigned = 0;
                int unit = 0;
                bool satisfied = false;
                for (int lit : c) {
                    if (lit_true(lit)) {
                        satisfied = true;
                        break;
                    }
                    if (!lit_false(lit)) {
                        ++unassigned;
                        unit = lit;
                        if (unassigned > 1) {
                            break;
                        }
                    }
                }
                if (satisfied) {
                    continue;
                }
                if (unassigned == 0) {
                    return false;
                }
                if (unassigned == 1) {
                    assign(unit);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool all_clauses_satisfied() const {
        for (const Clause& c : clauses_) {
            bool satisfied = false;
            for (int lit : c) {
                if (lit_true(lit)) {
                    satisfied = true;
                    break;
                }
            }
            if (!satisfied) {
                return false;
            }
        }
        return true;
    }

    int pick_branch_var() const {
        for (std::size_t v = 1; v < values_.size(); ++v) {
            if (values_[v] == 0) {
                return static_cast<int>(v);
            }
        }
        return 0;
    }

    bool search() {
        std::size_t mark = trail_.size();
        if (!propagate()) {
            backtrack_to(mark);
            return false;
        }
        if (all_clauses_satisfied()) {
            return true;
        }
        int v = pick_branch_var();
        if (v == 0) {
            // Total assignment with an unsatisfied clause: propagate() would
            // have reported the conflict, so this is unreachable; be safe.
            backtrack_to(mark);
            return false;
        }
        for (int phase : {v, -v}) {
            std::size_t inner = trail_.size();
            assign(phase);
            if (search()) {
                return true;
            }
            backtrack_to(inner);
        }
        backtrack_to(mark);
        return false;
    }

    std::vector<Clause> clauses_;
    std::vector<int> values_;
    std::vector<int> trail_;
};

/// Shared solving core: clausify all formulas, run DPLL, and on success
/// project the model onto `model_atoms` (atoms absent from the clause set
/// default to false; any completion satisfies the already-satisfied clauses).
SatResult solve(const FormulaSet& fs, const std::set<std::string>& model_atoms) {
    Clausifier clausifier;
    // Register original atoms first so they occupy the low variable range.
    for (const std::string& name : model_atoms) {
        clausifier.var_for_atom(name);
    }
    for (const Formula& f : fs) {
        if (!clausifier.assert_formula(f)) {
            return {false, std::nullopt};
        }
    }
    Dpll dpll(std::move(clausifier.clauses()), clausifier.var_count());
    if (!dpll.solve()) {
        return {false, std::nullopt};
    }
    Assignment model;
    const auto& names = clausifier.atom_names();
    for (int v = 1; v <= clausifier.atom_count(); ++v) {
        model[names[static_cast<std::size_t>(v) - 1]] = dpll.value(v);
    }
    return {true, std::move(model)};
}

} // namespace

SatResult is_satisfiable(const FormulaSet& fs) {
    return solve(fs, fs.atoms());
}

EntailmentResult entails(const FormulaSet& premises, const FormulaSet& conclusions) {
    std::set<std::string> atoms = premises.atoms();
    conclusions.collect_atoms(atoms);
    for (const Formula& c : conclusions) {
        FormulaSet query = premises;
        query.add(Formula::negate(c));
        SatResult refutation = solve(query, atoms);
        if (refutation.satisfiable) {
            return {false, std::move(refutation.model)};
        }
    }
    return {true, std::nullopt};
}

RpVerdict check_default_rp(const RpInstance& inst) {
    FormulaSet premises = FormulaSet::unite(inst.k, inst.s);
    EntailmentResult ent = entails(premises, inst.r);
    SatResult sat = is_satisfiable(premises);

    RpVerdict verdict;
    verdict.entails = ent.entails;
    verdict.consistent = sat.satisfiable;
    if (!ent.entails) {
        verdict.witness = std::move(ent.countermodel);
    } else if (sat.satisfiable) {
        verdict.witness = std::move(sat.model);
    }
    if (inst.r.empty()) {
        verdict.notes.push_back("requirement set R is empty; entailment holds trivially");
    }
    if (!sat.satisfiable) {
        verdict.notes.push_back(
            "K and S are inconsistent; entailment holds vacuously and proves nothing");
    }
    return verdict;
}

} // namespace rqc
