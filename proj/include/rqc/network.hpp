#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rqc {

enum class RoleId : std::uint8_t { Requester, Maker, Evaluator };

/// The three rights a requirements contract defines.
enum class RightKind : std::uint8_t { RtR, RtRS, RtRV };

/// The four obligations a requirements contract defines.
enum class ObligationKind : std::uint8_t { OtR, OtV, OtRS, OtRV };

std::string to_string(RoleId role);
std::string to_string(RightKind right);
std::string to_string(ObligationKind obligation);

enum class ExercisePhase : std::uint8_t { Initial, Full };

// Event payloads. An event is an expectation, an action on a contract
// clause (accept / exercise / discharge), an artifact production, or a
// value outcome.
struct Expectation {
    RoleId holder;
};
struct AcceptRight {
    RightKind right;
};
struct AcceptObligation {
    ObligationKind obligation;
};
struct ExerciseRight {
    RightKind right;
    ExercisePhase phase = ExercisePhase::Full;
};
struct DischargeObligation {
    ObligationKind obligation;
};
struct ProduceArtifact {
    std::string artifact;
};
struct ValueOutcome {
    std::string tag;
};

using EventKind = std::variant<Expectation, AcceptRight, AcceptObligation, ExerciseRight,
                               DischargeObligation, ProduceArtifact, ValueOutcome>;

struct EventNode {
    std::string id;
    EventKind kind;
    RoleId role; // the role whose party performs or holds the event
};

/// "is necessary for": the target cannot happen unless the source has.
/// A RequiresPass guard additionally demands a recorded validation pass.
enum class LinkGuard : std::uint8_t { None, RequiresPass };

struct Link {
    std::string source;
    std::string target;
    LinkGuard guard = LinkGuard::None;
};

struct Network {
    std::vector<EventNode> events; // declaration order, used for deterministic output
    std::vector<Link> links;

    const EventNode* find(std::string_view id) const;
    bool has_event(std::string_view id) const { return find(id) != nullptr; }
};

/// Canonical event ids of the requirements-contract network.
namespace canon {
inline constexpr std::string_view expect_requester = "E_R";
inline constexpr std::string_view expect_maker = "E_P";
inline constexpr std::string_view expect_evaluator = "E_V";
inline constexpr std::string_view accept_rtr = "accept_RtR";
inline constexpr std::string_view accept_otr = "accept_OtR";
inline constexpr std::string_view accept_otv = "accept_OtV";
inline constexpr std::string_view accept_otrs = "accept_OtRS";
inline constexpr std::string_view accept_rtrs = "accept_RtRS";
inline constexpr std::string_view accept_otrv = "accept_OtRV";
inline constexpr std::string_view accept_rtrv = "accept_RtRV";
inline constexpr std::string_view exercise_rtr_initial = "exercise_RtR_initial";
inline constexpr std::string_view exercise_rtr_full = "exercise_RtR_full";
inline constexpr std::string_view exercise_rtrs = "exercise_RtRS";
inline constexpr std::string_view exercise_rtrv = "exercise_RtRV";
inline constexpr std::string_view discharge_otr = "discharge_OtR";
inline constexpr std::string_view discharge_otv = "discharge_OtV";
inline constexpr std::string_view produce_kr_rr = "produce_KR_RR";
inline constexpr std::string_view produce_outputs = "produce_outputs";
inline constexpr std::string_view value_pr = "value_PR";
inline constexpr std::string_view value_otr = "value_OtR";
inline constexpr std::string_view value_otv = "value_OtV";
} // namespace canon

/// The fixed requirements-contract network: three expectations, the
/// acceptance of the seven contract clauses, a two-phase exercise of the
/// right to request, the production/validation chain, and the three value
/// outcomes. Acyclic; validation-pass guards sit on the two links out of
/// discharge_OtV that lead to requester value and maker remuneration.
Network canonical_network();

/// A structural finding from validate_network. `code` is one of
/// duplicate-id, dangling-link, self-loop, cycle, unreachable.
struct Diagnostic {
    std::string code;
    std::string message;
    std::vector<std::string> subjects; // offending event ids
};

/// Reports duplicate ids, dangling link endpoints, self-loops, cycles, and
/// events unreachable from every source-less event. Empty iff the network
/// invariants hold.
std::vector<Diagnostic> validate_network(const Network& n);

} // namespace rqc
