#pragma once

#include "rqc/enactment.hpp"
#include "rqc/formula.hpp"
#include "rqc/network.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace rqc {

struct Party {
    std::string id;
    std::string display_name;
};

enum class Applicability : std::uint8_t { Applicable, Terminated };

/// A requirements contract as enacted: which of the seven clauses it
/// declares, who fills each role, whether it is still applicable, and the
/// requester's communicated sets plus the registry of propositions for
/// which the right to request has been exercised.
///
/// Values are immutable by convention; apply_event returns a new document.
struct ContractDoc {
    std::set<RightKind> declared_rights;
    std::set<ObligationKind> declared_obligations;
    std::map<RoleId, Party> bindings;
    Applicability applicability = Applicability::Applicable;
    std::set<std::string> requested;                        // atom names
    std::map<std::string, std::string> request_timestamps;  // optional, opaque
    FormulaSet k_r;
    FormulaSet r_r;
};

struct ConditionReport {
    bool passed;
    std::string detail;
};

/// Passes iff all three rights and all four obligations are declared.
ConditionReport check_defines(const ContractDoc& c);

/// Passes iff every role has a bound party; one party may fill several roles.
ConditionReport check_enacted(const ContractDoc& c);

enum class GateCondition : std::uint8_t { C1Defines, C2Enacted, C3Exercised, Applicability };

std::string to_string(GateCondition c);

struct RoleStatus {
    bool granted;
    std::vector<GateCondition> failed_conditions;          // empty iff granted
    std::map<GateCondition, ConditionReport> explanations; // detail for all four
};

/// Whether `proposition` currently holds the role of requirement: the
/// contract defines all seven clauses, is enacted, the right to request has
/// been fully exercised in `st`, the proposition is registered, and the
/// contract is still applicable. The decision never looks at what the
/// proposition is about.
RoleStatus requirement_status(const std::string& proposition, const ContractDoc& c,
                              const EnactmentState& st);

// Contract lifecycle events.
struct Terminate {};
struct Request {
    std::string proposition;
};
struct Reinstate {};
using LifecycleEvent = std::variant<Terminate, Request, Reinstate>;

/// Optional acceptability hook consulted by request(p); absent means every
/// registered proposition is acceptable.
using AcceptabilityPolicy = std::function<bool(const std::string&)>;

/// Applies a lifecycle event, returning the updated document.
/// terminate is final; request(p) demands an applicable contract, a
/// proposition mentioned in the requester's requirement set, and policy
/// approval; reinstate is always rejected.
ContractDoc apply_event(const ContractDoc& c, const LifecycleEvent& event,
                        const AcceptabilityPolicy& policy = {});

} // namespace rqc
