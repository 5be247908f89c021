#pragma once

#include "rqc/document.hpp"
#include "rqc/enactment.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rqc {

/// Result of one subcommand: a machine-readable object, a human rendering
/// of the same content, and the process exit code (0 = all checks pass,
/// 1 = at least one check fails). Input errors surface as exceptions and
/// map to exit code 2 at the CLI boundary.
struct Report {
    nlohmann::ordered_json data;
    std::string text;
    int exit_code = 0;
};

/// Section selection for cmd_check_rp: each slot of the (K, S, R) triple is
/// fed from one of the propositions lists `kR`, `rR`, `s`, or `none`.
struct CheckRpOptions {
    std::string k_from = "kR";
    std::string s_from = "s";
    std::string r_from = "rR";
};

Report cmd_check_rp(const ContractDocument& doc, const CheckRpOptions& opts = {});

/// Gates every requested proposition (or just `prop` when given) against the
/// contract and the state reached by simulating the document's schedule.
Report cmd_gate(const ContractDocument& doc,
                const std::optional<std::string>& prop = std::nullopt);

Report cmd_enact(const ContractDocument& doc, const RetryPolicy& policy = {});

Report cmd_align(const ContractDocument& doc, bool coupled = false);

Report cmd_validate(const ContractDocument& doc);

} // namespace rqc
