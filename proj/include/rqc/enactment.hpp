#pragma once

#include "rqc/network.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rqc {

enum class Verdict : std::uint8_t { Pass, Fail };

std::string to_string(Verdict v);

/// State of one contract enactment. Values are immutable: fire() returns a
/// new state. The fired set is always downward closed under the network's
/// links, and `validation` is set exactly while discharge_OtV is fired.
struct EnactmentState {
    std::set<std::string> fired;
    std::optional<Verdict> validation;
    unsigned retry_count = 0;
};

/// Whether a failed validation loops back to exercising the right to
/// request, and how many times.
struct RetryPolicy {
    bool enabled = true;
    unsigned max_retries = 3;
};

/// Events not yet fired whose link sources are all fired (and whose
/// pass-guarded links see a recorded pass). Returned in network declaration
/// order. Precondition: validate_network(n) is empty.
std::vector<std::string> enabled_events(const Network& n, const EnactmentState& st);

/// Fires `event`, returning the successor state. Throws Error if the event
/// is unknown or not enabled, or if `verdict` is missing/extraneous
/// (a verdict accompanies exactly the discharge of OtV).
///
/// Discharging OtV with Fail while retries remain rolls the production
/// segment (exercise_RtR_full through discharge_OtV) out of the fired set
/// and increments retry_count; with retries exhausted or retry disabled the
/// failure is recorded as final and pass-guarded links stay closed.
EnactmentState fire(const Network& n, const EnactmentState& st, std::string_view event,
                    std::optional<Verdict> verdict = std::nullopt,
                    const RetryPolicy& policy = {});

struct ScheduleEntry {
    std::string event;
    std::optional<Verdict> verdict;
};

struct TraceStep {
    std::size_t index;
    std::string event;
    std::optional<Verdict> verdict;
    std::size_t fired_after; // |fired| in the resulting state
    bool ok;
    std::string violation; // set when !ok
};

struct Trace {
    std::vector<TraceStep> steps;
    std::optional<std::size_t> violation_index; // first violating schedule index
    EnactmentState final_state;                 // state reached before any violation
};

/// Folds fire() over the schedule, stopping at the first violation.
Trace simulate(const Network& n, const std::vector<ScheduleEntry>& schedule,
               const RetryPolicy& policy = {});

/// Line-oriented rendering: one event per line with index, event id,
/// resulting fired-count and verdict if any.
std::string render_trace(const Trace& trace);

} // namespace rqc
