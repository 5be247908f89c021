#include "rqc/transfer.hpp"

#include "oracles.hpp"
#include "rqc/enactment.hpp"
#include "rqc/error.hpp"
#include "rqc/parse.hpp"

#include <doctest.h>

using namespace rqc;
using namespace rqc::testing;

namespace {

FormulaSet fs(std::initializer_list<const char*> texts) {
    FormulaSet out;
    for (const char* t : texts) {
        out.add(parse_formula(t));
    }
    return out;
}

ArtifactSets requester_sets() {
    return {RoleId::Requester, fs({"p1", "p1 & p2 -> p3"}), fs({"p3"}), std::nullopt,
            std::nullopt};
}

} // namespace

TEST_CASE("identity transfer changes only the owner") {
    ArtifactSets src = requester_sets();
    ArtifactSets out = apply_transfer(src, {}, RoleId::Maker);
    CHECK(out.owner == RoleId::Maker);
    CHECK(out.k == src.k);
    CHECK(out.r == src.r);
    CHECK_FALSE(out.s.has_value());
}

TEST_CASE("drops remove formulas elementwise") {
    ArtifactSets src{RoleId::Requester, {}, fs({"p1", "p2", "p3"}), std::nullopt, std::nullopt};
    TransferMap t;
    t.drops = fs({"p2"});
    ArtifactSets out = apply_transfer(src, t, RoleId::Maker);
    CHECK(out.r.size() == 2);
    CHECK(out.r == fs({"p1", "p3"}));
}

TEST_CASE("substitutions rewrite matching members") {
    ArtifactSets src{RoleId::Requester, {}, fs({"p3"}), std::nullopt, std::nullopt};
    TransferMap t;
    t.substitutions.emplace_back(parse_formula("p3"), parse_formula("p3 & p4"));
    ArtifactSets out = apply_transfer(src, t, RoleId::Maker);
    CHECK(out.r == fs({"p3 & p4"}));
}

TEST_CASE("additions are unstated assumptions joining k") {
    ArtifactSets src = requester_sets();
    TransferMap t;
    t.additions = fs({"q"});
    ArtifactSets out = apply_transfer(src, t, RoleId::Maker);
    CHECK(out.k == fs({"p1", "p1 & p2 -> p3", "q"}));
    CHECK(out.r == src.r); // additions never touch r
}

TEST_CASE("specification and product travel to maker and evaluator only") {
    ArtifactSets maker{RoleId::Maker, fs({"p1"}), fs({"p3"}), fs({"p2"}),
                       std::string("build-7")};
    ArtifactSets to_eval = apply_transfer(maker, {}, RoleId::Evaluator);
    REQUIRE(to_eval.s.has_value());
    CHECK(*to_eval.s == fs({"p2"}));
    CHECK(to_eval.product == "build-7");

    ArtifactSets back = apply_transfer(maker, {}, RoleId::Requester);
    CHECK_FALSE(back.s.has_value());
    CHECK_FALSE(back.product.has_value());
}

TEST_CASE("transfer map invariants are enforced") {
    TransferMap overlap;
    overlap.drops = fs({"p1"});
    overlap.additions = fs({"p1"});
    CHECK_THROWS_AS(check_invariants(overlap), Error);

    TransferMap dup;
    dup.substitutions.emplace_back(parse_formula("p1"), parse_formula("p2"));
    dup.substitutions.emplace_back(parse_formula("p1"), parse_formula("p3"));
    CHECK_THROWS_AS(check_invariants(dup), Error);

    TransferMap dropped_key;
    dropped_key.drops = fs({"p1"});
    dropped_key.substitutions.emplace_back(parse_formula("p1"), parse_formula("p2"));
    CHECK_THROWS_AS(check_invariants(dropped_key), Error);

    CHECK_THROWS_AS(apply_transfer(requester_sets(), overlap, RoleId::Maker), Error);
}

TEST_CASE("divergence counts symmetric differences") {
    ArtifactSets a = requester_sets();
    CHECK(divergence(a, a) == 0);

    // One dropped formula.
    TransferMap drop1;
    drop1.drops = fs({"p1"});
    CHECK(divergence(a, apply_transfer(a, drop1, RoleId::Maker)) == 1);

    // Drop one and substitute another for a formula not in the source:
    // one missing, one removed, one added.
    TransferMap t;
    t.drops = fs({"p1"});
    t.substitutions.emplace_back(parse_formula("p3"), parse_formula("p3 & p4"));
    CHECK(divergence(a, apply_transfer(a, t, RoleId::Maker)) == 3);
}

TEST_CASE("divergence includes s only when both sides carry it") {
    ArtifactSets m1{RoleId::Maker, fs({"p1"}), fs({"p3"}), fs({"p2"}), std::nullopt};
    ArtifactSets m2{RoleId::Maker, fs({"p1"}), fs({"p3"}), fs({"p2", "p5"}), std::nullopt};
    CHECK(divergence(m1, m2) == 1);

    ArtifactSets no_s{RoleId::Maker, fs({"p1"}), fs({"p3"}), std::nullopt, std::nullopt};
    CHECK(divergence(m1, no_s) == 0);
}

TEST_CASE("divergence is a metric on uniformly shaped artifact sets") {
    FormulaGen gen(31337, 3);
    auto random_sets = [&gen](bool with_s) {
        ArtifactSets out{RoleId::Maker, gen.formula_set(3, 1), gen.formula_set(3, 1),
                         std::nullopt, std::nullopt};
        if (with_s) {
            out.s = gen.formula_set(3, 1);
        }
        return out;
    };
    auto content_equal = [](const ArtifactSets& x, const ArtifactSets& y) {
        bool s_equal = x.s.has_value() == y.s.has_value() &&
                       (!x.s.has_value() || *x.s == *y.s);
        return x.k == y.k && x.r == y.r && s_equal;
    };
    for (int i = 0; i < 400; ++i) {
        bool with_s = gen.pick(2) == 0;
        ArtifactSets a = random_sets(with_s);
        ArtifactSets b = random_sets(with_s);
        ArtifactSets c = random_sets(with_s);
        CAPTURE(i);
        CHECK(divergence(a, a) == 0);
        CHECK((divergence(a, b) == 0) == content_equal(a, b));
        CHECK(divergence(a, b) == divergence(b, a));
        CHECK(divergence(a, c) <= divergence(a, b) + divergence(b, c));
    }
}

TEST_CASE("empty transfer map is the identity on k, r and s") {
    FormulaGen gen(555, 3);
    for (int i = 0; i < 100; ++i) {
        ArtifactSets src{RoleId::Maker, gen.formula_set(3, 2), gen.formula_set(3, 2),
                         gen.formula_set(2, 1), std::string("prod")};
        ArtifactSets out = apply_transfer(src, {}, RoleId::Evaluator);
        CHECK(out.k == src.k);
        CHECK(out.r == src.r);
        REQUIRE(out.s.has_value());
        CHECK(*out.s == *src.s);
    }
}

TEST_CASE("the evaluator validates from its own interpretation") {
    ArtifactSets ev{RoleId::Evaluator, fs({"p1", "p1 & p2 -> p3"}), fs({"p3"}), fs({"p2"}),
                    std::nullopt};
    RpVerdict verdict = validate_as_evaluator(ev);
    CHECK(verdict.entails);
    CHECK(verdict.consistent);

    SUBCASE("an inconsistent specification fails consistency") {
        ArtifactSets bad = ev;
        bad.s = fs({"p2", "!p1"});
        RpVerdict v = validate_as_evaluator(bad);
        CHECK_FALSE(v.consistent);
    }

    SUBCASE("a dropped assumption breaks entailment") {
        TransferMap lossy;
        lossy.drops = fs({"p1"});
        ArtifactSets degraded = apply_transfer(ev, lossy, RoleId::Evaluator);
        RpVerdict v = validate_as_evaluator(degraded);
        CHECK_FALSE(v.entails);
        CHECK(v.consistent);
    }

    SUBCASE("preconditions") {
        ArtifactSets wrong_owner = ev;
        wrong_owner.owner = RoleId::Maker;
        CHECK_THROWS_AS(validate_as_evaluator(wrong_owner), Error);

        ArtifactSets no_spec = ev;
        no_spec.s = std::nullopt;
        CHECK_THROWS_AS(validate_as_evaluator(no_spec), Error);
    }
}

TEST_CASE("the verdict depends only on evaluator-owned sets") {
    ArtifactSets requester = requester_sets();
    ArtifactSets ev{RoleId::Evaluator, fs({"p1", "p1 & p2 -> p3"}), fs({"p3"}), fs({"p2"}),
                    std::nullopt};
    RpVerdict before = validate_as_evaluator(ev);
    // The requester revises its sets; without a new transfer nothing changes.
    requester.k = fs({"!p1"});
    RpVerdict after = validate_as_evaluator(ev);
    CHECK(before.entails == after.entails);
    CHECK(before.consistent == after.consistent);
}

TEST_CASE("a transferred validation verdict feeds the enactment") {
    // Requester communicates; the maker works from a distorted copy and
    // produces a specification; the evaluator interprets and validates; the
    // result becomes the discharge verdict.
    ArtifactSets requester = requester_sets();
    ArtifactSets maker = apply_transfer(requester, {}, RoleId::Maker);
    maker.s = fs({"p2"});
    maker.product = "increment-1";
    ArtifactSets evaluator = apply_transfer(maker, {}, RoleId::Evaluator);
    RpVerdict verdict = validate_as_evaluator(evaluator);
    Verdict discharge = verdict.entails && verdict.consistent ? Verdict::Pass : Verdict::Fail;
    CHECK(discharge == Verdict::Pass);

    Network n = canonical_network();
    std::vector<ScheduleEntry> schedule;
    for (const std::string& id : kahn_order(n)) {
        ScheduleEntry entry{id, std::nullopt};
        if (id == canon::discharge_otv) {
            entry.verdict = discharge;
        }
        schedule.push_back(std::move(entry));
    }
    Trace trace = simulate(n, schedule);
    CHECK_FALSE(trace.violation_index.has_value());
    CHECK(trace.final_state.fired.count(std::string(canon::value_pr)));
}
