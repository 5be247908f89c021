#pragma once

#include "rqc/network.hpp"
#include "rqc/rational.hpp"

#include <optional>
#include <string>

namespace rqc {

/// Expected benefit and expected cost of one role, in value units.
/// Costs are nonnegative.
struct RoleEcon {
    Rational eb;
    Rational ec;
};

/// Economic expectations of all three roles.
struct EconProfile {
    RoleEcon requester;
    RoleEcon maker;
    RoleEcon evaluator;

    const RoleEcon& for_role(RoleId role) const;
};

/// Expected value of a role: expected benefit minus expected cost.
Rational expected_value(const EconProfile& p, RoleId role);

/// Value each role actually experienced, for comparison against its
/// expectations once an enactment has run its course.
struct RealizedValue {
    Rational requester;
    Rational maker;
    Rational evaluator;

    const Rational& for_role(RoleId role) const;
};

/// Realized minus expected value; zero means expectations were met exactly.
Rational expectation_gap(const RealizedValue& v, const EconProfile& p, RoleId role);

struct RoleViability {
    Rational expected_value;
    bool viable; // strictly positive expected value
};

struct ViabilityReport {
    RoleViability requester;
    RoleViability maker;
    RoleViability evaluator;
    bool entry_feasible; // all three roles viable

    const RoleViability& for_role(RoleId role) const;
};

/// A role is viable iff its expected benefits strictly outweigh its expected
/// costs; equality is non-viable. Contract entry is feasible iff all three
/// roles are viable.
ViabilityReport viability(const EconProfile& p);

struct BudgetReport {
    bool pass;      // EB(maker) + EB(evaluator) <= EC(requester)
    Rational slack; // EC(requester) - EB(maker) - EB(evaluator)
};

/// The requester's willingness to bear cost caps what the maker and the
/// evaluator can expect to gain. Non-strict: exact equality passes.
BudgetReport budget_check(const EconProfile& p);

/// A marginal change in a role's expectations.
struct Delta {
    Rational db;
    Rational dc;
};

enum class MarginalSituation : std::uint8_t {
    GainDominant,  // dB/dC > 1
    CostDominant,  // 0 <= dB/dC < 1
    Balanced,      // dB/dC = 1
    NegativeRatio, // dB/dC < 0
};

std::string to_string(MarginalSituation s);

struct MarginalReport {
    MarginalSituation situation;
    Rational ratio;
    std::optional<std::string> note;
};

/// Classifies dB/dC into the four marginal situations. Throws Error when
/// dC = 0. A ratio of exactly zero reports CostDominant with a note.
MarginalReport marginal_situation(const Delta& d);

/// The eight interest cases, labelled clockwise in the (dC, dB) plane,
/// plus the two boundary markers for exact axis/diagonal hits.
enum class InterestCase : std::uint8_t {
    A, // dC>0, dB>0, dB>dC
    B, // dC>0, dB>0, dB<dC
    C, // dC>0, dB<0, |dB|<dC
    D, // dC>0, dB<0, |dB|>dC
    E, // dC<0, dB<0, |dB|>|dC|
    F, // dC<0, dB<0, |dB|<|dC|
    G, // dC<0, dB>0, dB<|dC|
    H, // dC<0, dB>0, dB>|dC|
    Stationary,       // dB = dC = 0
    OnAxisOrDiagonal, // any other exact axis or diagonal point
};

std::string to_string(InterestCase c);

bool is_boundary(InterestCase c);

/// True exactly for the four value-increasing cases A, F, G, H.
bool is_value_increasing(InterestCase c);

struct InterestReport {
    InterestCase label;
    Rational dv; // dB - dC, the change in expected value
};

/// Labels a delta with its interest case. dv > 0 exactly for the labels
/// A, F, G and H; boundary deltas get a marker instead of a case.
InterestReport interest_case(const Delta& d);

struct CoupledConflict {
    Rational requester_ratio; // dEB_R / (dEB_M + dEB_V)
    bool flagged;
};

struct ConflictReport {
    Rational requester_ratio;
    Rational maker_ratio;
    Rational evaluator_ratio;
    /// Requester ratio < 1 while maker and evaluator ratios > 1.
    bool flagged;
    std::optional<CoupledConflict> coupled;
};

/// Scans the three roles' marginal ratios for the misalignment pattern in
/// which the maker and the evaluator gain from rising costs while the
/// requester loses. With `coupled`, the budget identity is used to rewrite
/// the requester's denominator as the change in maker-plus-evaluator
/// benefits, and both the raw and the rewritten ratios are reported.
/// Throws Error on any zero denominator.
ConflictReport conflict_scan(const Delta& requester, const Delta& maker,
                             const Delta& evaluator, bool coupled);

} // namespace rqc
