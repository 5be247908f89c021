#include "rqc/network.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rqc {

std::string to_string(RoleId role) {
    switch (role) {
    case RoleId::Requester: return "requester";
    case RoleId::Maker: return "maker";
    case RoleId::Evaluator: return "evaluator";
    }
    return "?";
}

std::string to_string(RightKind right) {
    switch (right) {
    case RightKind::RtR: return "RtR";
    case RightKind::RtRS: return "RtRS";
    case RightKind::RtRV: return "RtRV";
    }
    return "?";
}

std::string to_string(ObligationKind obligation) {
    switch (obligation) {
    case ObligationKind::OtR: return "OtR";
    case ObligationKind::OtV: return "OtV";
    case ObligationKind::OtRS: return "OtRS";
    case ObligationKind::OtRV: return "OtRV";
    }
    return "?";
}

const EventNode* Network::find(std::string_view id) const {
    for (const EventNode& e : events) {
        if (e.id == id) {
            return &e;
        }
    }
    return nullptr;
}

Network canonical_network() {
    using namespace canon;
    Network n;
    auto add = [&n](std::string_view id, EventKind kind, RoleId role) {
        n.events.push_back({std::string(id), std::move(kind), role});
    };

    add(expect_requester, Expectation{RoleId::Requester}, RoleId::Requester);
    add(expect_maker, Expectation{RoleId::Maker}, RoleId::Maker);
    add(expect_evaluator, Expectation{RoleId::Evaluator}, RoleId::Evaluator);
    add(exercise_rtr_initial, ExerciseRight{RightKind::RtR, ExercisePhase::Initial},
        RoleId::Requester);
    add(accept_otrs, AcceptObligation{ObligationKind::OtRS}, RoleId::Requester);
    add(accept_rtrs, AcceptRight{RightKind::RtRS}, RoleId::Maker);
    add(accept_otrv, AcceptObligation{ObligationKind::OtRV}, RoleId::Requester);
    add(accept_rtrv, AcceptRight{RightKind::RtRV}, RoleId::Evaluator);
    add(accept_otr, AcceptObligation{ObligationKind::OtR}, RoleId::Maker);
    add(accept_otv, AcceptObligation{ObligationKind::OtV}, RoleId::Evaluator);
    add(accept_rtr, AcceptRight{RightKind::RtR}, RoleId::Requester);
    add(exercise_rtr_full, ExerciseRight{RightKind::RtR, ExercisePhase::Full},
        RoleId::Requester);
    add(produce_kr_rr, ProduceArtifact{"K^R,R^R"}, RoleId::Requester);
    add(discharge_otr, DischargeObligation{ObligationKind::OtR}, RoleId::Maker);
    add(produce_outputs, ProduceArtifact{"K^P,R^P,S^P,P^P"}, RoleId::Maker);
    add(discharge_otv, DischargeObligation{ObligationKind::OtV}, RoleId::Evaluator);
    add(exercise_rtrv, ExerciseRight{RightKind::RtRV}, RoleId::Evaluator);
    add(value_otv, ValueOutcome{"V(A(OtV))"}, RoleId::Evaluator);
    add(value_pr, ValueOutcome{"V(P^R)"}, RoleId::Requester);
    add(exercise_rtrs, ExerciseRight{RightKind::RtRS}, RoleId::Maker);
    add(value_otr, ValueOutcome{"V(A(OtR))"}, RoleId::Maker);

    auto link = [&n](std::string_view s, std::string_view t,
                     LinkGuard g = LinkGuard::None) {
        n.links.push_back({std::string(s), std::string(t), g});
    };

    // Grounding the acceptance of the right to request: the requester's
    // expectation plus both accepted obligations.
    link(expect_requester, accept_rtr);
    link(accept_otr, accept_rtr);
    link(accept_otv, accept_rtr);

    // Initial exercise communicates enough to ground the obligations.
    link(expect_requester, exercise_rtr_initial);
    link(exercise_rtr_initial, accept_otr);
    link(exercise_rtr_initial, accept_otv);

    // Obligations need an expectation of value and a remuneration right,
    // which in turn needs the matching remuneration obligation accepted.
    link(expect_maker, accept_otr);
    link(expect_evaluator, accept_otv);
    link(accept_otrs, accept_rtrs);
    link(accept_rtrs, accept_otr);
    link(accept_otrv, accept_rtrv);
    link(accept_rtrv, accept_otv);

    // Full exercise requires everything accepted.
    link(accept_otr, exercise_rtr_full);
    link(accept_otv, exercise_rtr_full);
    link(accept_rtr, exercise_rtr_full);

    // Production and validation chain.
    link(exercise_rtr_full, produce_kr_rr);
    link(produce_kr_rr, discharge_otr);
    link(discharge_otr, produce_outputs);
    link(produce_outputs, discharge_otv);

    // Evaluator remuneration follows discharge regardless of the verdict.
    link(discharge_otv, exercise_rtrv);
    link(exercise_rtrv, value_otv);

    // Requester value and maker remuneration require a validation pass.
    link(discharge_otv, value_pr, LinkGuard::RequiresPass);
    link(discharge_otv, exercise_rtrs, LinkGuard::RequiresPass);
    link(exercise_rtrs, value_otr);

    return n;
}

namespace {

struct IdGraph {
    std::vector<std::string> ids;                       // unique ids, first-seen order
    std::map<std::string, int, std::less<>> index;
    std::vector<std::vector<int>> out;
    std::vector<int> in_degree;
};

IdGraph build_graph(const Network& n) {
    IdGraph g;
    for (const EventNode& e : n.events) {
        if (g.index.emplace(e.id, static_cast<int>(g.ids.size())).second) {
            g.ids.push_back(e.id);
        }
    }
    g.out.resize(g.ids.size());
    g.in_degree.assign(g.ids.size(), 0);
    for (const Link& l : n.links) {
        auto s = g.index.find(l.source);
        auto t = g.index.find(l.target);
        if (s == g.index.end() || t == g.index.end() || s->second == t->second) {
            continue; // dangling and self-loops reported separately
        }
        g.out[static_cast<std::size_t>(s->second)].push_back(t->second);
        ++g.in_degree[static_cast<std::size_t>(t->second)];
    }
    return g;
}

} // namespace

std::vector<Diagnostic> validate_network(const Network& n) {
    std::vector<Diagnostic> out;

    std::set<std::string> seen;
    std::set<std::string> reported_dup;
    for (const EventNode& e : n.events) {
        if (!seen.insert(e.id).second && reported_dup.insert(e.id).second) {
            out.push_back({"duplicate-id", "event id '" + e.id + "' declared more than once",
                           {e.id}});
        }
    }

    for (const Link& l : n.links) {
        std::vector<std::string> missing;
        if (!seen.count(l.source)) {
            missing.push_back(l.source);
        }
        if (!seen.count(l.target)) {
            missing.push_back(l.target);
        }
        if (!missing.empty()) {
            out.push_back({"dangling-link",
                           "link " + l.source + " -> " + l.target +
                               " references undeclared event(s)",
                           std::move(missing)});
        } else if (l.source == l.target) {
            out.push_back({"self-loop", "event '" + l.source + "' is linked to itself",
                           {l.source}});
        }
    }

    IdGraph g = build_graph(n);
    const std::size_t count = g.ids.size();

    // Cycle detection: iterative DFS with colors; report each cycle once by
    // walking back through the parent chain.
    std::vector<int> color(count, 0); // 0 white, 1 grey, 2 black
    std::vector<int> parent(count, -1);
    std::set<int> in_cycle;
    for (std::size_t root = 0; root < count; ++root) {
        if (color[root] != 0) {
            continue;
        }
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < g.out[static_cast<std::size_t>(v)].size()) {
                int w = g.out[static_cast<std::size_t>(v)][next++];
                if (color[static_cast<std::size_t>(w)] == 0) {
                    color[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    stack.push_back({w, 0});
                } else if (color[static_cast<std::size_t>(w)] == 1) {
                    std::vector<std::string> members{g.ids[static_cast<std::size_t>(w)]};
                    in_cycle.insert(w);
                    for (int x = v; x != w && x != -1;
                         x = parent[static_cast<std::size_t>(x)]) {
                        members.push_back(g.ids[static_cast<std::size_t>(x)]);
                        in_cycle.insert(x);
                    }
                    std::sort(members.begin(), members.end());
                    std::string msg = "cycle through {";
                    for (std::size_t i = 0; i < members.size(); ++i) {
                        msg += (i ? ", " : "") + members[i];
                    }
                    msg += "}";
                    out.push_back({"cycle", std::move(msg), std::move(members)});
                }
            } else {
                color[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }

    // Reachability from source-less events. Events already implicated in a
    // cycle are skipped here; the cycle diagnostic is the root cause.
    std::deque<int> frontier;
    std::vector<bool> reach(count, false);
    for (std::size_t v = 0; v < count; ++v) {
        if (g.in_degree[v] == 0) {
            reach[v] = true;
            frontier.push_back(static_cast<int>(v));
        }
    }
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        for (int w : g.out[static_cast<std::size_t>(v)]) {
            if (!reach[static_cast<std::size_t>(w)]) {
                reach[static_cast<std::size_t>(w)] = true;
                frontier.push_back(w);
            }
        }
    }
    for (std::size_t v = 0; v < count; ++v) {
        if (!reach[v] && !in_cycle.count(static_cast<int>(v))) {
            out.push_back({"unreachable",
                           "event '" + g.ids[v] + "' is not reachable from any source-less event",
                           {g.ids[v]}});
        }
    }

    return out;
}

} // namespace rqc
