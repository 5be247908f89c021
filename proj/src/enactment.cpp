#include "rqc/enactment.hpp"

#include "rqc/error.hpp"

#include <algorithm>
#include <deque>

namespace rqc {

std::string to_string(Verdict v) {
    return v == Verdict::Pass ? "pass" : "fail";
}

namespace {

bool is_validation_discharge(const EventNode& e) {
    const auto* d = std::get_if<DischargeObligation>(&e.kind);
    return d != nullptr && d->obligation == ObligationKind::OtV;
}

bool link_open(const Link& l, const EnactmentState& st) {
    if (!st.fired.count(l.source)) {
        return false;
    }
    return l.guard != LinkGuard::RequiresPass || st.validation == Verdict::Pass;
}

bool event_enabled(const Network& n, const EnactmentState& st, const EventNode& e) {
    if (st.fired.count(e.id)) {
        return false;
    }
    for (const Link& l : n.links) {
        if (l.target == e.id && !link_open(l, st)) {
            return false;
        }
    }
    return true;
}

/// Events reachable from `start` along links, including `start` itself.
std::set<std::string> descendants(const Network& n, std::string_view start) {
    std::set<std::string> seen;
    std::deque<std::string> frontier;
    seen.insert(std::string(start));
    frontier.push_back(std::string(start));
    while (!frontier.empty()) {
        std::string v = std::move(frontier.front());
        frontier.pop_front();
        for (const Link& l : n.links) {
            if (l.source == v && seen.insert(l.target).second) {
                frontier.push_back(l.target);
            }
        }
    }
    return seen;
}

std::set<std::string> ancestors(const Network& n, std::string_view start) {
    std::set<std::string> seen;
    std::deque<std::string> frontier;
    seen.insert(std::string(start));
    frontier.push_back(std::string(start));
    while (!frontier.empty()) {
        std::string v = std::move(frontier.front());
        frontier.pop_front();
        for (const Link& l : n.links) {
            if (l.target == v && seen.insert(l.source).second) {
                frontier.push_back(l.source);
            }
        }
    }
    return seen;
}

/// The production segment re-run on a validation failure: everything at or
/// after the full exercise of the right to request that is also at or before
/// the validation discharge.
std::set<std::string> retry_segment(const Network& n, std::string_view validation_event) {
    if (!n.has_event(canon::exercise_rtr_full)) {
        return {};
    }
    std::set<std::string> down = descendants(n, canon::exercise_rtr_full);
    std::set<std::string> up = ancestors(n, validation_event);
    std::set<std::string> segment;
    std::set_intersection(down.begin(), down.end(), up.begin(), up.end(),
                          std::inserter(segment, segment.begin()));
    return segment;
}

} // namespace

std::vector<std::string> enabled_events(const Network& n, const EnactmentState& st) {
    std::vector<std::string> out;
    for (const EventNode& e : n.events) {
        if (event_enabled(n, st, e)) {
            out.push_back(e.id);
        }
    }
    return out;
}

EnactmentState fire(const Network& n, const EnactmentState& st, std::string_view event,
                    std::optional<Verdict> verdict, const RetryPolicy& policy) {
    const EventNode* node = n.find(event);
    if (node == nullptr) {
        throw Error("unknown event id: '" + std::string(event) + "'");
    }
    if (st.fired.count(node->id)) {
        throw Error("event '" + node->id + "' already fired");
    }
    if (!event_enabled(n, st, *node)) {
        std::string missing;
        std::string gated;
        for (const Link& l : n.links) {
            if (l.target != node->id || link_open(l, st)) {
                continue;
            }
            if (!st.fired.count(l.source)) {
                missing += (missing.empty() ? "" : ", ") + l.source;
            } else {
                gated += (gated.empty() ? "" : ", ") + l.source;
            }
        }
        std::string reason;
        if (!missing.empty()) {
            reason = "unfired predecessors: " + missing;
        }
        if (!gated.empty()) {
            reason += (reason.empty() ? "" : "; ");
            reason += "requires validation pass from: " + gated;
        }
        throw Error("event '" + node->id + "' is not enabled (" + reason + ")");
    }

    bool wants_verdict = is_validation_discharge(*node);
    if (wants_verdict && !verdict) {
        throw Error("event '" + node->id + "' requires a pass/fail verdict");
    }
    if (!wants_verdict && verdict) {
        throw Error("event '" + node->id + "' does not take a verdict");
    }

    EnactmentState next = st;
    if (!wants_verdict) {
        next.fired.insert(node->id);
        return next;
    }

    if (*verdict == Verdict::Pass) {
        next.fired.insert(node->id);
        next.validation = Verdict::Pass;
        return next;
    }

    if (policy.enabled && st.retry_count < policy.max_retries) {
        // Loop back: the production segment becomes re-firable. The
        // discharge itself is not recorded, so no verdict is retained.
        for (const std::string& id : retry_segment(n, node->id)) {
            next.fired.erase(id);
        }
        next.validation = std::nullopt;
        ++next.retry_count;
        return next;
    }

    // Final failure: recorded; pass-guarded links stay closed.
    next.fired.insert(node->id);
    next.validation = Verdict::Fail;
    return next;
}

Trace simulate(const Network& n, const std::vector<ScheduleEntry>& schedule,
               const RetryPolicy& policy) {
    Trace trace;
    EnactmentState state;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const ScheduleEntry& entry = schedule[i];
        TraceStep step;
        step.index = i;
        step.event = entry.event;
        step.verdict = entry.verdict;
        try {
            state = fire(n, state, entry.event, entry.verdict, policy);
            step.fired_after = state.fired.size();
            step.ok = true;
        } catch (const Error& e) {
            step.fired_after = state.fired.size();
            step.ok = false;
            step.violation = e.what();
            trace.steps.push_back(std::move(step));
            trace.violation_index = i;
            break;
        }
        trace.steps.push_back(std::move(step));
    }
    trace.final_state = std::move(state);
    return trace;
}

std::string render_trace(const Trace& trace) {
    std::string out;
    for (const TraceStep& step : trace.steps) {
        out += std::to_string(step.index);
        out += ' ';
        out += step.event;
        if (step.ok) {
            out += " fired=" + std::to_string(step.fired_after);
            if (step.verdict) {
                out += " verdict=" + to_string(*step.verdict);
            }
        } else {
            out += " violation: " + step.violation;
        }
        out += '\n';
    }
    return out;
}

} // namespace rqc
