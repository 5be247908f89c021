#include "rqc/document.hpp"

#include "rqc/error.hpp"
#include "rqc/parse.hpp"

#include <json.hpp>

#include <istream>
#include <iterator>
#include <set>

namespace rqc {

using nlohmann::json;

const RoleEconDoc& EconomicsDoc::for_role(RoleId role) const {
    switch (role) {
    case RoleId::Requester: return requester;
    case RoleId::Maker: return maker;
    case RoleId::Evaluator: return evaluator;
    }
    throw Error("unknown role");
}

EconProfile EconomicsDoc::profile() const {
    return {{requester.eb, requester.ec}, {maker.eb, maker.ec}, {evaluator.eb, evaluator.ec}};
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw DocumentError(path, message);
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    return j;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(path, "unknown key '" + key + "'");
        }
    }
}

const json* optional_field(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json& required_field(const json& obj, const char* key, const std::string& path) {
    const json* f = optional_field(obj, key);
    if (f == nullptr) {
        fail(path, "missing required key '" + std::string(key) + "'");
    }
    return *f;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

Formula get_formula(const json& j, const std::string& path) {
    std::string text = get_string(j, path);
    try {
        return parse_formula(text);
    } catch (const ParseError& e) {
        fail(path, std::string("formula parse error at ") + e.what());
    }
}

FormulaSet get_formula_set(const json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array of formula strings");
    }
    FormulaSet out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.add(get_formula(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or an 'n/d' string");
}

RoleId get_role(const json& j, const std::string& path) {
    std::string name = get_string(j, path);
    if (name == "requester") {
        return RoleId::Requester;
    }
    if (name == "maker") {
        return RoleId::Maker;
    }
    if (name == "evaluator") {
        return RoleId::Evaluator;
    }
    fail(path, "unknown role '" + name + "' (expected requester, maker or evaluator)");
}

void parse_contract_section(const json& j, ContractDoc& out, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"rights", "obligations", "bindings", "applicability"}, path);

    const json& rights = required_field(j, "rights", path);
    if (!rights.is_array()) {
        fail(path + ".rights", "expected an array");
    }
    for (std::size_t i = 0; i < rights.size(); ++i) {
        std::string p = path + ".rights[" + std::to_string(i) + "]";
        std::string name = get_string(rights[i], p);
        if (name == "RtR") {
            out.declared_rights.insert(RightKind::RtR);
        } else if (name == "RtRS") {
            out.declared_rights.insert(RightKind::RtRS);
        } else if (name == "RtRV") {
            out.declared_rights.insert(RightKind::RtRV);
        } else {
            fail(p, "unknown right '" + name + "' (expected RtR, RtRS or RtRV)");
        }
    }

    const json& obligations = required_field(j, "obligations", path);
    if (!obligations.is_array()) {
        fail(path + ".obligations", "expected an array");
    }
    for (std::size_t i = 0; i < obligations.size(); ++i) {
        std::string p = path + ".obligations[" + std::to_string(i) + "]";
        std::string name = get_string(obligations[i], p);
        if (name == "OtR") {
            out.declared_obligations.insert(ObligationKind::OtR);
        } else if (name == "OtV") {
            out.declared_obligations.insert(ObligationKind::OtV);
        } else if (name == "OtRS") {
            out.declared_obligations.insert(ObligationKind::OtRS);
        } else if (name == "OtRV") {
            out.declared_obligations.insert(ObligationKind::OtRV);
        } else {
            fail(p, "unknown obligation '" + name + "' (expected OtR, OtV, OtRS or OtRV)");
        }
    }

    const json& bindings = required_field(j, "bindings", path);
    require_object(bindings, path + ".bindings");
    reject_unknown_keys(bindings, {"requester", "maker", "evaluator"}, path + ".bindings");
    for (const auto& [key, value] : bindings.items()) {
        std::string p = path + ".bindings." + key;
        RoleId role = key == "requester" ? RoleId::Requester
                      : key == "maker"   ? RoleId::Maker
                                         : RoleId::Evaluator;
        Party party;
        if (value.is_string()) {
            party.id = value.get<std::string>();
            party.display_name = party.id;
        } else if (value.is_object()) {
            reject_unknown_keys(value, {"id", "name"}, p);
            party.id = get_string(required_field(value, "id", p), p + ".id");
            if (const json* name = optional_field(value, "name")) {
                party.display_name = get_string(*name, p + ".name");
            } else {
                party.display_name = party.id;
            }
        } else {
            fail(p, "expected a party id string or an object {id, name}");
        }
        if (party.id.empty()) {
            fail(p, "party id must be nonempty");
        }
        out.bindings[role] = std::move(party);
    }

    std::string applicability =
        get_string(required_field(j, "applicability", path), path + ".applicability");
    if (applicability == "applicable") {
        out.applicability = Applicability::Applicable;
    } else if (applicability == "terminated") {
        out.applicability = Applicability::Terminated;
    } else {
        fail(path + ".applicability",
             "unknown value '" + applicability + "' (expected applicable or terminated)");
    }
}

void parse_propositions_section(const json& j, ContractDocument& out, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"kR", "rR", "s", "requested"}, path);

    out.contract.k_r = get_formula_set(required_field(j, "kR", path), path + ".kR");
    out.contract.r_r = get_formula_set(required_field(j, "rR", path), path + ".rR");
    if (const json* s = optional_field(j, "s")) {
        out.spec_s = get_formula_set(*s, path + ".s");
    }

    const json& requested = required_field(j, "requested", path);
    if (!requested.is_array()) {
        fail(path + ".requested", "expected an array");
    }
    std::set<std::string> r_atoms = out.contract.r_r.atoms();
    for (std::size_t i = 0; i < requested.size(); ++i) {
        std::string p = path + ".requested[" + std::to_string(i) + "]";
        const json& entry = requested[i];
        std::string name;
        std::string timestamp;
        if (entry.is_string()) {
            name = entry.get<std::string>();
        } else if (entry.is_object()) {
            reject_unknown_keys(entry, {"name", "timestamp"}, p);
            name = get_string(required_field(entry, "name", p), p + ".name");
            if (const json* ts = optional_field(entry, "timestamp")) {
                timestamp = get_string(*ts, p + ".timestamp");
            }
        } else {
            fail(p, "expected an atom name or an object {name, timestamp}");
        }
        if (!is_valid_atom_name(name)) {
            fail(p, "invalid atom name '" + name + "'");
        }
        if (!r_atoms.count(name)) {
            fail(p, "requested atom '" + name + "' does not occur in rR");
        }
        out.contract.requested.insert(name);
        if (!timestamp.empty()) {
            out.contract.request_timestamps[name] = timestamp;
        }
    }
}

RoleEconDoc parse_role_econ(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"eb", "ec", "db", "dc"}, path);
    RoleEconDoc out;
    out.eb = get_rational(required_field(j, "eb", path), path + ".eb");
    out.ec = get_rational(required_field(j, "ec", path), path + ".ec");
    if (out.ec < Rational(0)) {
        fail(path + ".ec", "expected cost must be nonnegative");
    }
    const json* db = optional_field(j, "db");
    const json* dc = optional_field(j, "dc");
    if ((db == nullptr) != (dc == nullptr)) {
        fail(path, "db and dc must be given together");
    }
    if (db != nullptr) {
        out.delta = Delta{get_rational(*db, path + ".db"), get_rational(*dc, path + ".dc")};
    }
    return out;
}

void parse_economics_section(const json& j, ContractDocument& out, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, {"requester", "maker", "evaluator"}, path);
    EconomicsDoc econ;
    econ.requester = parse_role_econ(required_field(j, "requester", path), path + ".requester");
    econ.maker = parse_role_econ(required_field(j, "maker", path), path + ".maker");
    econ.evaluator = parse_role_econ(required_field(j, "evaluator", path), path + ".evaluator");
    out.economics = std::move(econ);
}

void parse_transfers_section(const json& j, ContractDocument& out, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        const json& entry = j[i];
        require_object(entry, p);
        reject_unknown_keys(entry, {"from-role", "to-role", "drops", "substitutions", "additions"},
                            p);
        TransferDoc doc;
        doc.from = get_role(required_field(entry, "from-role", p), p + ".from-role");
        doc.to = get_role(required_field(entry, "to-role", p), p + ".to-role");
        if (const json* drops = optional_field(entry, "drops")) {
            doc.map.drops = get_formula_set(*drops, p + ".drops");
        }
        if (const json* subs = optional_field(entry, "substitutions")) {
            if (!subs->is_array()) {
                fail(p + ".substitutions", "expected an array");
            }
            for (std::size_t k = 0; k < subs->size(); ++k) {
                std::string sp = p + ".substitutions[" + std::to_string(k) + "]";
                const json& sub = (*subs)[k];
                require_object(sub, sp);
                reject_unknown_keys(sub, {"from", "to"}, sp);
                doc.map.substitutions.emplace_back(
                    get_formula(required_field(sub, "from", sp), sp + ".from"),
                    get_formula(required_field(sub, "to", sp), sp + ".to"));
            }
        }
        if (const json* additions = optional_field(entry, "additions")) {
            doc.map.additions = get_formula_set(*additions, p + ".additions");
        }
        try {
            check_invariants(doc.map);
        } catch (const Error& e) {
            fail(p, e.what());
        }
        out.transfers.push_back(std::move(doc));
    }
}

void parse_schedule_section(const json& j, ContractDocument& out, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    Network canonical = canonical_network();
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = path + "[" + std::to_string(i) + "]";
        const json& entry = j[i];
        require_object(entry, p);
        reject_unknown_keys(entry, {"event", "verdict"}, p);
        ScheduleEntry se;
        se.event = get_string(required_field(entry, "event", p), p + ".event");
        if (!canonical.has_event(se.event)) {
            fail(p + ".event", "unknown event id '" + se.event + "'");
        }
        if (const json* verdict = optional_field(entry, "verdict")) {
            std::string v = get_string(*verdict, p + ".verdict");
            if (v == "pass") {
                se.verdict = Verdict::Pass;
            } else if (v == "fail") {
                se.verdict = Verdict::Fail;
            } else {
                fail(p + ".verdict", "unknown verdict '" + v + "' (expected pass or fail)");
            }
        }
        out.schedule.push_back(std::move(se));
    }
}

} // namespace

ContractDocument load_document_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("", std::string("invalid JSON: ") + e.what());
    }
    require_object(j, "document");
    reject_unknown_keys(j, {"contract", "propositions", "economics", "transfers", "schedule"},
                        "document");

    ContractDocument out;
    parse_contract_section(required_field(j, "contract", "document"), out.contract, "contract");
    parse_propositions_section(required_field(j, "propositions", "document"), out,
                               "propositions");
    if (const json* econ = optional_field(j, "economics")) {
        parse_economics_section(*econ, out, "economics");
    }
    if (const json* transfers = optional_field(j, "transfers")) {
        parse_transfers_section(*transfers, out, "transfers");
    }
    if (const json* schedule = optional_field(j, "schedule")) {
        parse_schedule_section(*schedule, out, "schedule");
    }
    return out;
}

ContractDocument load_document(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_document_text(text);
}

} // namespace rqc
