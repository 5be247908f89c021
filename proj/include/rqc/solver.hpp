#pragma once

#include "rqc/formula.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rqc {

/// A total truth assignment over atom names.
using Assignment = std::map<std::string, bool>;

/// Truth-functional evaluation of `f` under `v`. Throws Error if `v` leaves
/// any atom of `f` unassigned.
bool eval(const Formula& f, const Assignment& v);

struct SatResult {
    bool satisfiable;
    /// Present iff satisfiable. Assigns every atom occurring in the input;
    /// auxiliary atoms introduced by clausification never appear.
    std::optional<Assignment> model;
};

/// Decides satisfiability of the conjunction of `fs` exactly: definitional
/// clausification followed by complete backtracking search with unit
/// propagation. The empty set is satisfiable with the empty model.
SatResult is_satisfiable(const FormulaSet& fs);

struct EntailmentResult {
    bool entails;
    /// Present iff !entails: satisfies all premises and falsifies the first
    /// failing conclusion (in input order). Assigns every atom occurring in
    /// premises or conclusions.
    std::optional<Assignment> countermodel;
};

/// True iff premises ∪ {¬c} is unsatisfiable for every conclusion c.
/// An empty conclusion set is entailed trivially.
EntailmentResult entails(const FormulaSet& premises, const FormulaSet& conclusions);

/// An instance of the requirements problem: domain knowledge K, candidate
/// specification S, requirements R.
struct RpInstance {
    FormulaSet k;
    FormulaSet s;
    FormulaSet r;
};

struct RpVerdict {
    bool entails;
    bool consistent;
    /// Countermodel when entails is false; otherwise a model of K ∪ S when
    /// consistent is true; otherwise absent.
    std::optional<Assignment> witness;
    /// Diagnostic remarks (empty R, vacuous entailment under inconsistency).
    std::vector<std::string> notes;
};

/// Decides both conditions of the problem independently:
/// K,S ⊢ R and K ∪ S satisfiable.
RpVerdict check_default_rp(const RpInstance& inst);

} // namespace rqc
