#include "rqc/contract.hpp"

#include "rqc/error.hpp"

namespace rqc {

namespace {

constexpr RightKind all_rights[] = {RightKind::RtR, RightKind::RtRS, RightKind::RtRV};
constexpr ObligationKind all_obligations[] = {ObligationKind::OtR, ObligationKind::OtV,
                                              ObligationKind::OtRS, ObligationKind::OtRV};
constexpr RoleId all_roles[] = {RoleId::Requester, RoleId::Maker, RoleId::Evaluator};

} // namespace

std::string to_string(GateCondition c) {
    switch (c) {
    case GateCondition::C1Defines: return "C1_defines";
    case GateCondition::C2Enacted: return "C2_enacted";
    case GateCondition::C3Exercised: return "C3_exercised";
    case GateCondition::Applicability: return "Applicability";
    }
    return "?";
}

ConditionReport check_defines(const ContractDoc& c) {
    std::string missing;
    for (RightKind r : all_rights) {
        if (!c.declared_rights.count(r)) {
            missing += (missing.empty() ? "" : ", ") + to_string(r);
        }
    }
    for (ObligationKind o : all_obligations) {
        if (!c.declared_obligations.count(o)) {
            missing += (missing.empty() ? "" : ", ") + to_string(o);
        }
    }
    if (missing.empty()) {
        return {true, "all seven clauses declared"};
    }
    return {false, "missing clauses: " + missing};
}

ConditionReport check_enacted(const ContractDoc& c) {
    std::string unbound;
    for (RoleId role : all_roles) {
        if (!c.bindings.count(role)) {
            unbound += (unbound.empty() ? "" : ", ") + to_string(role);
        }
    }
    if (unbound.empty()) {
        return {true, "every role has a bound party"};
    }
    return {false, "unbound roles: " + unbound};
}

RoleStatus requirement_status(const std::string& proposition, const ContractDoc& c,
                              const EnactmentState& st) {
    RoleStatus status;
    status.explanations[GateCondition::C1Defines] = check_defines(c);
    status.explanations[GateCondition::C2Enacted] = check_enacted(c);

    bool exercised = st.fired.count(std::string(canon::exercise_rtr_full)) > 0;
    bool registered = c.requested.count(proposition) > 0;
    {
        std::string detail;
        if (exercised && registered) {
            detail = "right to request exercised and '" + proposition + "' registered";
        } else {
            if (!exercised) {
                detail = "right to request not fully exercised";
            }
            if (!registered) {
                detail += (detail.empty() ? "" : "; ");
                detail += "'" + proposition + "' not requested";
            }
        }
        status.explanations[GateCondition::C3Exercised] = {exercised && registered, detail};
    }

    bool applicable = c.applicability == Applicability::Applicable;
    status.explanations[GateCondition::Applicability] = {
        applicable, applicable ? "contract applicable" : "contract terminated"};

    for (GateCondition cond : {GateCondition::C1Defines, GateCondition::C2Enacted,
                               GateCondition::C3Exercised, GateCondition::Applicability}) {
        if (!status.explanations[cond].passed) {
            status.failed_conditions.push_back(cond);
        }
    }
    status.granted = status.failed_conditions.empty();
    return status;
}

ContractDoc apply_event(const ContractDoc& c, const LifecycleEvent& event,
                        const AcceptabilityPolicy& policy) {
    if (std::holds_alternative<Terminate>(event)) {
        ContractDoc next = c;
        next.applicability = Applicability::Terminated;
        return next;
    }
    if (std::holds_alternative<Reinstate>(event)) {
        throw Error("termination is final; reinstate is not supported");
    }

    const auto& request = std::get<Request>(event);
    if (c.applicability == Applicability::Terminated) {
        throw Error("cannot request '" + request.proposition + "': contract terminated");
    }
    if (!c.r_r.atoms().count(request.proposition)) {
        throw Error("cannot request '" + request.proposition +
                    "': not mentioned in the requirement set");
    }
    if (policy && !policy(request.proposition)) {
        throw Error("request for '" + request.proposition +
                    "' rejected by the acceptability policy");
    }
    ContractDoc next = c;
    next.requested.insert(request.proposition);
    return next;
}

} // namespace rqc
