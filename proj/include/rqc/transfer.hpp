#pragma once

#include "rqc/formula.hpp"
#include "rqc/network.hpp"
#include "rqc/solver.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rqc {

/// One role's assumption/requirement sets, plus (for maker and evaluator)
/// the specification and an opaque product marker.
struct ArtifactSets {
    RoleId owner;
    FormulaSet k;
    FormulaSet r;
    std::optional<FormulaSet> s;
    std::optional<std::string> product;
};

/// A deterministic model of what gets lost, distorted, or silently filled in
/// when one party's sets reach another party.
struct TransferMap {
    FormulaSet drops;
    std::vector<std::pair<Formula, Formula>> substitutions; // unique keys
    FormulaSet additions;                                   // folded into k
};

/// Throws Error if drops and additions overlap, substitution keys repeat,
/// or a substitution key is also dropped.
void check_invariants(const TransferMap& t);

/// Maps k, r (and s when present) elementwise: dropped members vanish,
/// substituted members are rewritten, additions join the receiver's k.
/// Ownership moves to `new_owner`; a requester owner carries no s/product.
ArtifactSets apply_transfer(const ArtifactSets& src, const TransferMap& t, RoleId new_owner);

/// Size of the symmetric difference of the two owners' sets:
/// |k△k| + |r△r|, plus |s△s| when both sides carry a specification.
std::size_t divergence(const ArtifactSets& a, const ArtifactSets& b);

/// Runs the requirements-problem check from the evaluator's interpretation:
/// K = ev.k, S = *ev.s, R = ev.r. Pass means entails and consistent; this is
/// the verdict the enactment consumes when OtV is discharged.
/// Throws Error unless ev is evaluator-owned with a specification present.
RpVerdict validate_as_evaluator(const ArtifactSets& ev);

} // namespace rqc
