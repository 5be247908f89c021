#include "rqc/transfer.hpp"

#include "rqc/error.hpp"

namespace rqc {

void check_invariants(const TransferMap& t) {
    for (const Formula& f : t.additions) {
        if (t.drops.contains(f)) {
            throw Error("transfer map drops and additions overlap on '" + f.to_string() + "'");
        }
    }
    FormulaSet keys;
    for (const auto& sub : t.substitutions) {
        if (!keys.add(sub.first)) {
            throw Error("duplicate substitution key '" + sub.first.to_string() + "'");
        }
        if (t.drops.contains(sub.first)) {
            throw Error("substitution key '" + sub.first.to_string() + "' is also dropped");
        }
    }
}

namespace {

FormulaSet map_set(const FormulaSet& src, const TransferMap& t) {
    FormulaSet out;
    for (const Formula& f : src) {
        if (t.drops.contains(f)) {
            continue;
        }
        bool substituted = false;
        for (const auto& [from, to] : t.substitutions) {
            if (f == from) {
                out.add(to);
                substituted = true;
                break;
            }
        }
        if (!substituted) {
            out.add(f);
        }
    }
    return out;
}

} // namespace

ArtifactSets apply_transfer(const ArtifactSets& src, const TransferMap& t, RoleId new_owner) {
    check_invariants(t);
    ArtifactSets out;
    out.owner = new_owner;
    out.k = map_set(src.k, t);
    for (const Formula& f : t.additions) {
        out.k.add(f);
    }
    out.r = map_set(src.r, t);
    if (new_owner != RoleId::Requester) {
        if (src.s) {
            out.s = map_set(*src.s, t);
        }
        out.product = src.product;
    }
    return out;
}

std::size_t divergence(const ArtifactSets& a, const ArtifactSets& b) {
    std::size_t d = FormulaSet::symmetric_difference_size(a.k, b.k) +
                    FormulaSet::symmetric_difference_size(a.r, b.r);
    if (a.s && b.s) {
        d += FormulaSet::symmetric_difference_size(*a.s, *b.s);
    }
    return d;
}

RpVerdict validate_as_evaluator(const ArtifactSets& ev) {
    if (ev.owner != RoleId::Evaluator) {
        throw Error("validation runs on evaluator-owned sets, got owner '" +
                    to_string(ev.owner) + "'");
    }
    if (!ev.s) {
        throw Error("validation requires a specification set");
    }
    return check_default_rp({ev.k, *ev.s, ev.r});
}

} // namespace rqc
