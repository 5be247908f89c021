#include "rqc/commands.hpp"

#include "rqc/error.hpp"


namespace rqc {

using nlohmann::ordered_json;

namespace {

ordered_json formulas_to_json(const FormulaSet& fs) {
    ordered_json out = ordered_json::array();
    for (const Formula& f : fs) {
        out.push_back(f.to_string());
    }
    return out;
}

std::string formulas_to_text(const FormulaSet& fs) {
    std::string out;
    for (const Formula& f : fs) {
        out += (out.empty() ? "" : "; ") + f.to_string();
    }
    return out.empty() ? "(empty)" : out;
}

ordered_json assignment_to_json(const Assignment& a) {
    ordered_json out = ordered_json::object();
    for (const auto& [atom, value] : a) {
        out[atom] = value;
    }
    return out;
}

std::string assignment_to_text(const Assignment& a) {
    std::string out;
    for (const auto& [atom, value] : a) {
        out += (out.empty() ? "" : " ") + atom + "=" + (value ? "true" : "false");
    }
    return out.empty() ? "(empty)" : out;
}

const char* caveat_note =
    "the verdict reflects only the formalized relationships among the stated "
    "propositions, not what the propositions are about";

const FormulaSet* select_section(const ContractDocument& doc, const std::string& name,
                                 const char* flag) {
    if (name == "kR") {
        return &doc.contract.k_r;
    }
    if (name == "rR") {
        return &doc.contract.r_r;
    }
    if (name == "s") {
        return &doc.spec_s;
    }
    if (name == "none") {
        return nullptr;
    }
    throw Error(std::string(flag) + ": unknown section '" + name +
                "' (expected kR, rR, s or none)");
}

} // namespace

Report cmd_check_rp(const ContractDocument& doc, const CheckRpOptions& opts) {
    RpInstance inst;
    if (const FormulaSet* k = select_section(doc, opts.k_from, "--k")) {
        inst.k = *k;
    }
    if (const FormulaSet* s = select_section(doc, opts.s_from, "--s")) {
        inst.s = *s;
    }
    if (const FormulaSet* r = select_section(doc, opts.r_from, "--r")) {
        inst.r = *r;
    }

    RpVerdict verdict = check_default_rp(inst);
    bool pass = verdict.entails && verdict.consistent;

    Report report;
    report.exit_code = pass ? 0 : 1;
    ordered_json& j = report.data;
    j["command"] = "check-rp";
    j["k"] = formulas_to_json(inst.k);
    j["s"] = formulas_to_json(inst.s);
    j["r"] = formulas_to_json(inst.r);
    j["entails"] = verdict.entails;
    j["consistent"] = verdict.consistent;
    j["pass"] = pass;
    if (verdict.witness) {
        j["witness"] = {{"kind", verdict.entails ? "model" : "countermodel"},
                        {"assignment", assignment_to_json(*verdict.witness)}};
    } else {
        j["witness"] = nullptr;
    }
    ordered_json notes = ordered_json::array();
    for (const std::string& note : verdict.notes) {
        notes.push_back(note);
    }
    notes.push_back(caveat_note);
    j["notes"] = notes;

    std::string& t = report.text;
    t += std::string("check-rp: ") + (pass ? "PASS" : "FAIL") +
         " (entails=" + (verdict.entails ? "true" : "false") +
         ", consistent=" + (verdict.consistent ? "true" : "false") + ")\n";
    t += "K: " + formulas_to_text(inst.k) + "\n";
    t += "S: " + formulas_to_text(inst.s) + "\n";
    t += "R: " + formulas_to_text(inst.r) + "\n";
    if (verdict.witness) {
        t += std::string("witness (") + (verdict.entails ? "model of K and S" : "countermodel") +
             "): " + assignment_to_text(*verdict.witness) + "\n";
    }
    for (const auto& note : j["notes"]) {
        t += "note: " + note.get<std::string>() + "\n";
    }
    return report;
}

Report cmd_gate(const ContractDocument& doc, const std::optional<std::string>& prop) {
    Network network = canonical_network();
    Trace trace = simulate(network, doc.schedule);

    std::vector<std::string> propositions;
    if (prop) {
        propositions.push_back(*prop);
    } else {
        propositions.assign(doc.contract.requested.begin(), doc.contract.requested.end());
    }

    Report report;
    ordered_json& j = report.data;
    j["command"] = "gate";
    ordered_json results = ordered_json::array();
    bool all_granted = true;
    std::string lines;
    for (const std::string& name : propositions) {
        RoleStatus status = requirement_status(name, doc.contract, trace.final_state);
        all_granted = all_granted && status.granted;

        ordered_json entry;
        entry["proposition"] = name;
        entry["granted"] = status.granted;
        ordered_json failed = ordered_json::array();
        std::string failed_text;
        for (GateCondition c : status.failed_conditions) {
            failed.push_back(to_string(c));
            failed_text += (failed_text.empty() ? "" : ",") + to_string(c);
        }
        entry["failed"] = failed;
        ordered_json conditions = ordered_json::object();
        for (const auto& [cond, cr] : status.explanations) {
            conditions[to_string(cond)] = {{"passed", cr.passed}, {"detail", cr.detail}};
        }
        entry["conditions"] = conditions;
        auto ts = doc.contract.request_timestamps.find(name);
        if (ts != doc.contract.request_timestamps.end()) {
            entry["timestamp"] = ts->second;
        }
        results.push_back(std::move(entry));

        lines += name + (status.granted ? " GRANTED" : " DENIED(" + failed_text + ")") + "\n";
    }
    j["results"] = results;
    j["pass"] = all_granted;

    ordered_json notes = ordered_json::array();
    if (propositions.empty()) {
        notes.push_back("no propositions requested; nothing to gate");
    }
    if (trace.violation_index) {
        notes.push_back("schedule violation at index " +
                        std::to_string(*trace.violation_index) +
                        "; gate evaluated against the state reached before it");
    }
    j["notes"] = notes;

    report.text = lines;
    for (const auto& note : notes) {
        report.text += "note: " + note.get<std::string>() + "\n";
    }
    report.exit_code = all_granted ? 0 : 1;
    return report;
}

namespace {

ordered_json network_to_json(const Network& n) {
    ordered_json events = ordered_json::array();
    for (const EventNode& e : n.events) {
        ordered_json entry;
        entry["id"] = e.id;
        std::visit(
            [&entry](const auto& kind) {
                using T = std::decay_t<decltype(kind)>;
                if constexpr (std::is_same_v<T, Expectation>) {
                    entry["kind"] = "expectation";
                } else if constexpr (std::is_same_v<T, AcceptRight>) {
                    entry["kind"] = "accept";
                    entry["clause"] = to_string(kind.right);
                } else if constexpr (std::is_same_v<T, AcceptObligation>) {
                    entry["kind"] = "accept";
                    entry["clause"] = to_string(kind.obligation);
                } else if constexpr (std::is_same_v<T, ExerciseRight>) {
                    entry["kind"] = "exercise";
                    entry["clause"] = to_string(kind.right);
                    entry["phase"] =
                        kind.phase == ExercisePhase::Initial ? "initial" : "full";
                } else if constexpr (std::is_same_v<T, DischargeObligation>) {
                    entry["kind"] = "discharge";
                    entry["clause"] = to_string(kind.obligation);
                } else if constexpr (std::is_same_v<T, ProduceArtifact>) {
                    entry["kind"] = "artifact";
                    entry["artifact"] = kind.artifact;
                } else if constexpr (std::is_same_v<T, ValueOutcome>) {
                    entry["kind"] = "outcome";
                    entry["tag"] = kind.tag;
                }
            },
            e.kind);
        entry["role"] = to_string(e.role);
        events.push_back(std::move(entry));
    }
    ordered_json links = ordered_json::array();
    for (const Link& l : n.links) {
        ordered_json entry;
        entry["source"] = l.source;
        entry["target"] = l.target;
        if (l.guard == LinkGuard::RequiresPass) {
            entry["guard"] = "pass";
        }
        links.push_back(std::move(entry));
    }
    return {{"events", std::move(events)}, {"links", std::move(links)}};
}

} // namespace

Report cmd_enact(const ContractDocument& doc, const RetryPolicy& policy) {
    Network network = canonical_network();
    std::vector<Diagnostic> diagnostics = validate_network(network);
    Trace trace = simulate(network, doc.schedule, policy);

    Report report;
    ordered_json& j = report.data;
    j["command"] = "enact";
    ordered_json diag = ordered_json::array();
    for (const Diagnostic& d : diagnostics) {
        diag.push_back({{"code", d.code}, {"message", d.message}, {"subjects", d.subjects}});
    }
    j["diagnostics"] = diag;
    j["network"] = network_to_json(network);

    ordered_json steps = ordered_json::array();
    for (const TraceStep& step : trace.steps) {
        ordered_json entry;
        entry["index"] = step.index;
        entry["event"] = step.event;
        if (step.verdict) {
            entry["verdict"] = to_string(*step.verdict);
        }
        entry["fired"] = step.fired_after;
        entry["ok"] = step.ok;
        if (!step.ok) {
            entry["violation"] = step.violation;
        }
        steps.push_back(std::move(entry));
    }
    j["trace"] = steps;
    if (trace.violation_index) {
        j["violation"] = {{"index", *trace.violation_index},
                          {"message", trace.steps.back().violation}};
    } else {
        j["violation"] = nullptr;
    }
    j["retries"] = trace.final_state.retry_count;
    j["validation"] = trace.final_state.validation
                          ? ordered_json(to_string(*trace.final_state.validation))
                          : ordered_json(nullptr);

    bool pass = diagnostics.empty() && !trace.violation_index;
    j["pass"] = pass;
    report.exit_code = pass ? 0 : 1;

    report.text = render_trace(trace);
    if (trace.violation_index) {
        report.text += "violation at index " + std::to_string(*trace.violation_index) + "\n";
    }
    report.text += std::string("enact: ") + (pass ? "PASS" : "FAIL") + " (fired " +
                   std::to_string(trace.final_state.fired.size()) + "/" +
                   std::to_string(network.events.size()) + " events, retries " +
                   std::to_string(trace.final_state.retry_count) + ")\n";
    return report;
}

Report cmd_align(const ContractDocument& doc, bool coupled) {
    if (!doc.economics) {
        throw DocumentError("economics", "document has no economics section");
    }
    const EconomicsDoc& econ = *doc.economics;
    EconProfile profile = econ.profile();
    ViabilityReport via = viability(profile);
    BudgetReport budget = budget_check(profile);

    Report report;
    ordered_json& j = report.data;
    j["command"] = "align";
    std::string text;

    ordered_json roles = ordered_json::object();
    std::vector<std::string> delta_notes;
    for (RoleId role : {RoleId::Requester, RoleId::Maker, RoleId::Evaluator}) {
        const RoleEconDoc& re = econ.for_role(role);
        const RoleViability& rv = via.for_role(role);
        ordered_json entry;
        entry["eb"] = to_string(re.eb);
        entry["ec"] = to_string(re.ec);
        entry["expected_value"] = to_string(rv.expected_value);
        entry["viable"] = rv.viable;
        text += to_string(role) + ": E=" + to_string(rv.expected_value) +
                (rv.viable ? " viable" : " NOT viable");
        if (re.delta) {
            ordered_json d;
            d["db"] = to_string(re.delta->db);
            d["dc"] = to_string(re.delta->dc);
            InterestReport interest = interest_case(*re.delta);
            d["interest_case"] = to_string(interest.label);
            d["dv"] = to_string(interest.dv);
            try {
                MarginalReport marginal = marginal_situation(*re.delta);
                d["ratio"] = to_string(marginal.ratio);
                d["situation"] = to_string(marginal.situation);
                if (marginal.note) {
                    d["situation_note"] = *marginal.note;
                }
                text += " case=" + to_string(interest.label) +
                        " ratio=" + to_string(marginal.ratio);
            } catch (const Error&) {
                d["ratio"] = nullptr;
                d["situation"] = nullptr;
                delta_notes.push_back("marginal situation undefined for " + to_string(role) +
                                      ": dC = 0");
                text += " case=" + to_string(interest.label) + " ratio=undefined";
            }
            entry["delta"] = std::move(d);
        } else {
            entry["delta"] = nullptr;
        }
        text += "\n";
        roles[to_string(role)] = std::move(entry);
    }
    j["roles"] = std::move(roles);
    j["entry_feasible"] = via.entry_feasible;
    j["budget"] = {{"pass", budget.pass}, {"slack", to_string(budget.slack)}};
    text += std::string("entry feasible: ") + (via.entry_feasible ? "yes" : "no") + "\n";
    text += std::string("budget: ") + (budget.pass ? "PASS" : "FAIL") +
            " (slack " + to_string(budget.slack) + ")\n";

    bool conflict_flagged = false;
    bool have_all_deltas =
        econ.requester.delta && econ.maker.delta && econ.evaluator.delta;
    if (have_all_deltas) {
        try {
            ConflictReport conflict = conflict_scan(*econ.requester.delta, *econ.maker.delta,
                                                    *econ.evaluator.delta, coupled);
            ordered_json c;
            c["requester_ratio"] = to_string(conflict.requester_ratio);
            c["maker_ratio"] = to_string(conflict.maker_ratio);
            c["evaluator_ratio"] = to_string(conflict.evaluator_ratio);
            c["flagged"] = conflict.flagged;
            conflict_flagged = conflict.flagged;
            text += std::string("conflict: ") + (conflict.flagged ? "FLAGGED" : "none") +
                    " (ratios R=" + to_string(conflict.requester_ratio) +
                    " M=" + to_string(conflict.maker_ratio) +
                    " V=" + to_string(conflict.evaluator_ratio) + ")\n";
            if (conflict.coupled) {
                c["coupled"] = {{"requester_ratio", to_string(conflict.coupled->requester_ratio)},
                                {"flagged", conflict.coupled->flagged}};
                conflict_flagged = conflict_flagged || conflict.coupled->flagged;
                text += std::string("coupled conflict: ") +
                        (conflict.coupled->flagged ? "FLAGGED" : "none") +
                        " (requester ratio " + to_string(conflict.coupled->requester_ratio) +
                        ")\n";
            } else {
                c["coupled"] = nullptr;
            }
            j["conflict"] = std::move(c);
        } catch (const Error& e) {
            j["conflict"] = nullptr;
            delta_notes.push_back(std::string("conflict scan not performed: ") + e.what());
            text += "conflict: not performed\n";
        }
    } else {
        j["conflict"] = nullptr;
    }

    ordered_json notes = ordered_json::array();
    for (const std::string& n : delta_notes) {
        notes.push_back(n);
    }
    j["notes"] = notes;
    j["assumptions"] = {
        "each party is taken to maximise the value it will actually receive",
        "actual value is taken to track expected value closely",
        "at contracting time, maximising expected value stands in for maximising actual value",
    };

    bool pass = via.entry_feasible && budget.pass && !conflict_flagged;
    j["pass"] = pass;
    report.exit_code = pass ? 0 : 1;
    for (const std::string& n : delta_notes) {
        text += "note: " + n + "\n";
    }
    text += std::string("align: ") + (pass ? "PASS" : "FAIL") + "\n";
    report.text = text;
    return report;
}

Report cmd_validate(const ContractDocument& doc) {
    // Schema and content checks already ran in the loader; what remains is
    // the network validation and a summary.
    Network network = canonical_network();
    std::vector<Diagnostic> diagnostics = validate_network(network);

    Report report;
    ordered_json& j = report.data;
    j["command"] = "validate";
    ordered_json diag = ordered_json::array();
    for (const Diagnostic& d : diagnostics) {
        diag.push_back({{"code", d.code}, {"message", d.message}, {"subjects", d.subjects}});
    }
    j["network_diagnostics"] = diag;
    j["counts"] = {{"kR", doc.contract.k_r.size()},
                   {"rR", doc.contract.r_r.size()},
                   {"s", doc.spec_s.size()},
                   {"requested", doc.contract.requested.size()},
                   {"transfers", doc.transfers.size()},
                   {"schedule", doc.schedule.size()}};
    bool pass = diagnostics.empty();
    j["pass"] = pass;
    report.exit_code = pass ? 0 : 1;
    report.text = std::string("validate: ") + (pass ? "OK" : "network diagnostics present") +
                  "\n";
    return report;
}

} // namespace rqc
