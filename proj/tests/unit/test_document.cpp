#include "rqc/document.hpp"

#include "rqc/error.hpp"

#include <doctest.h>

using namespace rqc;

namespace {

const char* minimal_doc = R"({
  "contract": {
    "rights": ["RtR", "RtRS", "RtRV"],
    "obligations": ["OtR", "OtV", "OtRS", "OtRV"],
    "bindings": {"requester": "q", "maker": "m", "evaluator": "v"},
    "applicability": "applicable"
  },
  "propositions": {
    "kR": ["p1", "p1 & p2 -> p3"],
    "rR": ["p3"],
    "requested": ["p3"]
  }
})";

std::string doc_with(const std::string& propositions, const std::string& extra = "") {
    return R"({
  "contract": {
    "rights": ["RtR", "RtRS", "RtRV"],
    "obligations": ["OtR", "OtV", "OtRS", "OtRV"],
    "bindings": {"requester": "q", "maker": "m", "evaluator": "v"},
    "applicability": "applicable"
  },
  "propositions": )" +
           propositions + extra + "\n}";
}

} // namespace

TEST_CASE("a minimal document loads") {
    ContractDocument doc = load_document_text(minimal_doc);
    CHECK(doc.contract.declared_rights.size() == 3);
    CHECK(doc.contract.declared_obligations.size() == 4);
    CHECK(doc.contract.bindings.at(RoleId::Maker).id == "m");
    CHECK(doc.contract.applicability == Applicability::Applicable);
    CHECK(doc.contract.k_r.size() == 2);
    CHECK(doc.contract.r_r.size() == 1);
    CHECK(doc.contract.requested == std::set<std::string>{"p3"});
    CHECK(doc.spec_s.empty());
    CHECK_FALSE(doc.economics.has_value());
    CHECK(doc.transfers.empty());
    CHECK(doc.schedule.empty());
}

TEST_CASE("a full document loads") {
    std::string text = doc_with(
        R"({"kR": ["p1"], "rR": ["p3"], "s": ["p2"], "requested": [{"name": "p3", "timestamp": "2020-03-03"}]})",
        R"(,
  "economics": {
    "requester": {"eb": "10", "ec": 4, "db": "1", "dc": "2"},
    "maker": {"eb": "5", "ec": "2"},
    "evaluator": {"eb": "3/2", "ec": "1/3"}
  },
  "transfers": [
    {"from-role": "requester", "to-role": "maker",
     "drops": ["p1"], "substitutions": [{"from": "p3", "to": "p3 & p4"}], "additions": ["q"]}
  ],
  "schedule": [{"event": "E_R"}, {"event": "discharge_OtV", "verdict": "pass"}])");
    ContractDocument doc = load_document_text(text);
    CHECK(doc.spec_s.size() == 1);
    CHECK(doc.contract.request_timestamps.at("p3") == "2020-03-03");
    REQUIRE(doc.economics.has_value());
    CHECK(doc.economics->requester.eb == Rational(10));
    CHECK(doc.economics->requester.ec == Rational(4));
    REQUIRE(doc.economics->requester.delta.has_value());
    CHECK(doc.economics->requester.delta->dc == Rational(2));
    CHECK_FALSE(doc.economics->maker.delta.has_value());
    CHECK(doc.economics->evaluator.eb == Rational(3, 2));
    REQUIRE(doc.transfers.size() == 1);
    CHECK(doc.transfers[0].from == RoleId::Requester);
    CHECK(doc.transfers[0].to == RoleId::Maker);
    CHECK(doc.transfers[0].map.drops.size() == 1);
    REQUIRE(doc.schedule.size() == 2);
    CHECK(doc.schedule[1].verdict == Verdict::Pass);
}

TEST_CASE("unknown keys are rejected with their path") {
    CHECK_THROWS_WITH_AS(load_document_text(R"({"contract": {}, "propositions": {}, "zz": 1})"),
                         doctest::Contains("unknown key 'zz'"), DocumentError);

    std::string bad_contract = R"({
      "contract": {"rights": [], "obligations": [], "bindings": {}, "applicability": "applicable", "extra": 0},
      "propositions": {"kR": [], "rR": [], "requested": []}
    })";
    CHECK_THROWS_WITH_AS(load_document_text(bad_contract),
                         doctest::Contains("contract: unknown key 'extra'"), DocumentError);

    std::string bad_econ = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "economics": {"requester": {"eb": 1, "ec": 0, "cap": 9},
                    "maker": {"eb": 1, "ec": 0}, "evaluator": {"eb": 1, "ec": 0}})");
    CHECK_THROWS_WITH_AS(load_document_text(bad_econ),
                         doctest::Contains("economics.requester: unknown key 'cap'"),
                         DocumentError);
}

TEST_CASE("missing sections and keys are reported") {
    CHECK_THROWS_WITH_AS(load_document_text(R"({"propositions": {}})"),
                         doctest::Contains("missing required key 'contract'"), DocumentError);
    CHECK_THROWS_WITH_AS(load_document_text(doc_with(R"({"rR": [], "requested": []})")),
                         doctest::Contains("missing required key 'kR'"), DocumentError);
}

TEST_CASE("malformed formulas are reported with their location") {
    try {
        load_document_text(doc_with(R"({"kR": ["p1 &"], "rR": [], "requested": []})"));
        FAIL("expected DocumentError");
    } catch (const DocumentError& e) {
        CHECK(e.path() == "propositions.kR[0]");
        CHECK(std::string(e.what()).find("1:5") != std::string::npos);
    }
}

TEST_CASE("invalid JSON is an input error") {
    CHECK_THROWS_AS(load_document_text("{"), DocumentError);
    CHECK_THROWS_AS(load_document_text("[1, 2]"), DocumentError);
}

TEST_CASE("requested atoms must occur in the requirement set") {
    CHECK_THROWS_WITH_AS(
        load_document_text(doc_with(R"({"kR": [], "rR": ["p3"], "requested": ["p9"]})")),
        doctest::Contains("does not occur in rR"), DocumentError);
    CHECK_THROWS_WITH_AS(
        load_document_text(doc_with(R"({"kR": [], "rR": ["p3"], "requested": ["9x"]})")),
        doctest::Contains("invalid atom name"), DocumentError);
}

TEST_CASE("economics validation") {
    std::string negative_cost = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "economics": {"requester": {"eb": 1, "ec": -1},
                    "maker": {"eb": 1, "ec": 0}, "evaluator": {"eb": 1, "ec": 0}})");
    CHECK_THROWS_WITH_AS(load_document_text(negative_cost), doctest::Contains("nonnegative"),
                         DocumentError);

    std::string lone_delta = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "economics": {"requester": {"eb": 1, "ec": 0, "db": 1},
                    "maker": {"eb": 1, "ec": 0}, "evaluator": {"eb": 1, "ec": 0}})");
    CHECK_THROWS_WITH_AS(load_document_text(lone_delta),
                         doctest::Contains("db and dc must be given together"), DocumentError);

    std::string float_value = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "economics": {"requester": {"eb": 1.5, "ec": 0},
                    "maker": {"eb": 1, "ec": 0}, "evaluator": {"eb": 1, "ec": 0}})");
    CHECK_THROWS_WITH_AS(load_document_text(float_value),
                         doctest::Contains("expected an integer or an 'n/d' string"),
                         DocumentError);

    std::string missing_role = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "economics": {"requester": {"eb": 1, "ec": 0}, "maker": {"eb": 1, "ec": 0}})");
    CHECK_THROWS_WITH_AS(load_document_text(missing_role),
                         doctest::Contains("missing required key 'evaluator'"), DocumentError);
}

TEST_CASE("enumerated values are checked") {
    std::string bad_right = R"({
      "contract": {"rights": ["RtX"], "obligations": [], "bindings": {}, "applicability": "applicable"},
      "propositions": {"kR": [], "rR": [], "requested": []}
    })";
    CHECK_THROWS_WITH_AS(load_document_text(bad_right), doctest::Contains("unknown right"),
                         DocumentError);

    std::string bad_applicability = R"({
      "contract": {"rights": [], "obligations": [], "bindings": {}, "applicability": "paused"},
      "propositions": {"kR": [], "rR": [], "requested": []}
    })";
    CHECK_THROWS_WITH_AS(load_document_text(bad_applicability),
                         doctest::Contains("expected applicable or terminated"), DocumentError);

    std::string bad_role = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "transfers": [{"from-role": "customer", "to-role": "maker"}])");
    CHECK_THROWS_WITH_AS(load_document_text(bad_role), doctest::Contains("unknown role"),
                         DocumentError);
}

TEST_CASE("schedule entries must reference canonical events") {
    std::string unknown_event = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "schedule": [{"event": "warp_drive"}])");
    CHECK_THROWS_WITH_AS(load_document_text(unknown_event),
                         doctest::Contains("unknown event id"), DocumentError);

    std::string bad_verdict = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "schedule": [{"event": "discharge_OtV", "verdict": "maybe"}])");
    CHECK_THROWS_WITH_AS(load_document_text(bad_verdict),
                         doctest::Contains("expected pass or fail"), DocumentError);
}

TEST_CASE("transfer map invariants are checked at load") {
    std::string overlap = doc_with(R"({"kR": [], "rR": [], "requested": []})", R"(,
      "transfers": [{"from-role": "requester", "to-role": "maker",
                     "drops": ["p1"], "additions": ["p1"]}])");
    CHECK_THROWS_WITH_AS(load_document_text(overlap), doctest::Contains("overlap"),
                         DocumentError);
}

TEST_CASE("bindings accept strings or id/name objects") {
    std::string object_binding = R"({
      "contract": {
        "rights": [], "obligations": [],
        "bindings": {"requester": {"id": "q1", "name": "Quality First"}},
        "applicability": "applicable"
      },
      "propositions": {"kR": [], "rR": [], "requested": []}
    })";
    ContractDocument doc = load_document_text(object_binding);
    CHECK(doc.contract.bindings.at(RoleId::Requester).id == "q1");
    CHECK(doc.contract.bindings.at(RoleId::Requester).display_name == "Quality First");

    std::string empty_id = R"({
      "contract": {"rights": [], "obligations": [], "bindings": {"maker": ""},
                   "applicability": "applicable"},
      "propositions": {"kR": [], "rR": [], "requested": []}
    })";
    CHECK_THROWS_WITH_AS(load_document_text(empty_id), doctest::Contains("nonempty"),
                         DocumentError);
}
