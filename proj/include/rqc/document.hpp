#pragma once

#include "rqc/alignment.hpp"
#include "rqc/contract.hpp"
#include "rqc/enactment.hpp"
#include "rqc/transfer.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rqc {

struct RoleEconDoc {
    Rational eb;
    Rational ec;
    std::optional<Delta> delta;
};

struct EconomicsDoc {
    RoleEconDoc requester;
    RoleEconDoc maker;
    RoleEconDoc evaluator;

    const RoleEconDoc& for_role(RoleId role) const;
    EconProfile profile() const;
};

struct TransferDoc {
    RoleId from;
    RoleId to;
    TransferMap map;
};

/// A parsed, validated contract document. The loader is strict: unknown
/// keys are rejected, every formula string must parse, requested atoms must
/// appear in rR, costs must be nonnegative, transfer maps must satisfy
/// their invariants, and schedule events must exist in the canonical
/// network. Any violation raises DocumentError with the offending path.
struct ContractDocument {
    ContractDoc contract;
    FormulaSet spec_s; // propositions.s: the specification set under check
    std::optional<EconomicsDoc> economics;
    std::vector<TransferDoc> transfers;
    std::vector<ScheduleEntry> schedule;
};

ContractDocument load_document(std::istream& in);
ContractDocument load_document_text(const std::string& text);

} // namespace rqc
