#include "rqc/alignment.hpp"

#include "rqc/error.hpp"

namespace rqc {

const RoleEcon& EconProfile::for_role(RoleId role) const {
    switch (role) {
    case RoleId::Requester: return requester;
    case RoleId::Maker: return maker;
    case RoleId::Evaluator: return evaluator;
    }
    throw Error("unknown role");
}

const RoleViability& ViabilityReport::for_role(RoleId role) const {
    switch (role) {
    case RoleId::Requester: return requester;
    case RoleId::Maker: return maker;
    case RoleId::Evaluator: return evaluator;
    }
    throw Error("unknown role");
}

Rational expected_value(const EconProfile& p, RoleId role) {
    const RoleEcon& e = p.for_role(role);
    return e.eb - e.ec;
}

const Rational& RealizedValue::for_role(RoleId role) const {
    switch (role) {
    case RoleId::Requester: return requester;
    case RoleId::Maker: return maker;
    case RoleId::Evaluator: return evaluator;
    }
    throw Error("unknown role");
}

Rational expectation_gap(const RealizedValue& v, const EconProfile& p, RoleId role) {
    return v.for_role(role) - expected_value(p, role);
}

ViabilityReport viability(const EconProfile& p) {
    auto one = [&p](RoleId role) {
        Rational ev = expected_value(p, role);
        return RoleViability{ev, ev > Rational(0)};
    };
    ViabilityReport report{one(RoleId::Requester), one(RoleId::Maker), one(RoleId::Evaluator),
                           false};
    report.entry_feasible =
        report.requester.viable && report.maker.viable && report.evaluator.viable;
    return report;
}

BudgetReport budget_check(const EconProfile& p) {
    Rational slack = p.requester.ec - p.maker.eb - p.evaluator.eb;
    return {slack >= Rational(0), slack};
}

std::string to_string(MarginalSituation s) {
    switch (s) {
    case MarginalSituation::GainDominant: return "GainDominant";
    case MarginalSituation::CostDominant: return "CostDominant";
    case MarginalSituation::Balanced: return "Balanced";
    case MarginalSituation::NegativeRatio: return "NegativeRatio";
    }
    return "?";
}

MarginalReport marginal_situation(const Delta& d) {
    if (d.dc == Rational(0)) {
        throw Error("marginal situation undefined: dC = 0");
    }
    Rational ratio = d.db / d.dc;
    if (ratio > Rational(1)) {
        return {MarginalSituation::GainDominant, ratio, std::nullopt};
    }
    if (ratio == Rational(1)) {
        return {MarginalSituation::Balanced, ratio, std::nullopt};
    }
    if (ratio < Rational(0)) {
        return {MarginalSituation::NegativeRatio, ratio, std::nullopt};
    }
    if (ratio == Rational(0)) {
        return {MarginalSituation::CostDominant, ratio,
                "benefit change is exactly zero"};
    }
    return {MarginalSituation::CostDominant, ratio, std::nullopt};
}

std::string to_string(InterestCase c) {
    switch (c) {
    case InterestCase::A: return "A";
    case InterestCase::B: return "B";
    case InterestCase::C: return "C";
    case InterestCase::D: return "D";
    case InterestCase::E: return "E";
    case InterestCase::F: return "F";
    case InterestCase::G: return "G";
    case InterestCase::H: return "H";
    case InterestCase::Stationary: return "Stationary";
    case InterestCase::OnAxisOrDiagonal: return "OnAxisOrDiagonal";
    }
    return "?";
}

bool is_boundary(InterestCase c) {
    return c == InterestCase::Stationary || c == InterestCase::OnAxisOrDiagonal;
}

bool is_value_increasing(InterestCase c) {
    return c == InterestCase::A || c == InterestCase::F || c == InterestCase::G ||
           c == InterestCase::H;
}

InterestReport interest_case(const Delta& d) {
    const Rational zero(0);
    Rational dv = d.db - d.dc;

    if (d.db == zero && d.dc == zero) {
        return {InterestCase::Stationary, dv};
    }
    // Axis hits and exact diagonal hits are boundaries, never cases.
    if (d.db == zero || d.dc == zero || d.db == d.dc || d.db == -d.dc) {
        return {InterestCase::OnAxisOrDiagonal, dv};
    }

    Rational adb = boost::abs(d.db);
    Rational adc = boost::abs(d.dc);
    InterestCase label;
    if (d.dc > zero) {
        if (d.db > zero) {
            label = d.db > d.dc ? InterestCase::A : InterestCase::B;
        } else {
            label = adb < adc ? InterestCase::C : InterestCase::D;
        }
    } else {
        if (d.db < zero) {
            label = adb > adc ? InterestCase::E : InterestCase::F;
        } else {
            label = d.db < adc ? InterestCase::G : InterestCase::H;
        }
    }
    return {label, dv};
}

ConflictReport conflict_scan(const Delta& requester, const Delta& maker,
                             const Delta& evaluator, bool coupled) {
    const Rational zero(0);
    const Rational one(1);
    if (requester.dc == zero || maker.dc == zero || evaluator.dc == zero) {
        throw Error("conflict scan undefined: some role has dC = 0");
    }
    ConflictReport report{requester.db / requester.dc, maker.db / maker.dc,
                          evaluator.db / evaluator.dc, false, std::nullopt};
    report.flagged = report.requester_ratio < one && report.maker_ratio > one &&
                     report.evaluator_ratio > one;
    if (coupled) {
        Rational denom = maker.db + evaluator.db;
        if (denom == zero) {
            throw Error("coupled conflict scan undefined: dEB_M + dEB_V = 0");
        }
        Rational coupled_ratio = requester.db / denom;
        report.coupled = CoupledConflict{
            coupled_ratio,
            coupled_ratio < one && report.maker_ratio > one && report.evaluator_ratio > one};
    }
    return report;
}

} // namespace rqc
