#include <doctest.h>

#include <leadsto/codes.hpp>
#include <leadsto/decide.hpp>
#include <leadsto/diagram.hpp>
#include <leadsto/invariants.hpp>

#include "corpus.hpp"
#include "helpers.hpp"

#include <json.hpp>

#include <map>
#include <string>

using namespace leadsto;
using namespace leadsto::testsupport;

namespace {

Decision one_part(Answer a, Family fam, int m) {
    Decision d;
    d.answer = a;
    d.target.family = FamilyTarget{fam, m};
    PartDecision p;
    p.answer = a;
    d.parts.push_back(p);
    if (a == Answer::Yes) d.yes_part = 0;
    return d;
}

} // namespace

TEST_SUITE("decide") {

TEST_CASE("exhaustive oracle on the worked examples") {
    auto yes = oracle_decide(load_diagram("torus2_5"), FamilyTarget{Family::Torus2, 3});
    CHECK(yes.answer == Answer::Yes);
    REQUIRE(yes.yes_part >= 0);
    const auto& p = yes.parts[yes.yes_part];
    REQUIRE(p.assignment_cert.has_value());
    auto reached = apply_assignment(load_diagram("torus2_5"), p.assignment_cert->states);
    CHECK(signature_of(reached) == reference_signature({Family::Torus2, 3}));

    CHECK(oracle_decide(load_diagram("unknot"), FamilyTarget{Family::Torus2, 3}).answer ==
          Answer::No);
    CHECK(oracle_decide(load_diagram("torus2_7"), FamilyTarget{Family::Twist, 4}).answer ==
          Answer::No);
}

TEST_CASE("oracle no-answers carry the exhausted reason") {
    auto no = oracle_decide(load_diagram("torus2_3"), FamilyTarget{Family::Torus2, 5});
    CHECK(no.answer == Answer::No);
    REQUIRE(no.parts.size() == 1);
    CHECK(no.parts[0].no_reason == NoReason::ExhaustedAssignments);
    CHECK(no.parts[0].via_oracle);
}

TEST_CASE("oracle respects its budget") {
    CHECK_THROWS_AS(
        (void)oracle_decide(load_diagram("torus2_9"), FamilyTarget{Family::Torus2, 3}, 8),
        BudgetExceeded);
}

TEST_CASE("reaching the target with the empty assignment") {
    // A diagram that already is the target: least assignment is all-Keep.
    auto dec = oracle_decide(load_diagram("torus2_3"), FamilyTarget{Family::Torus2, 3});
    REQUIRE(dec.answer == Answer::Yes);
    const auto& cert = dec.parts[dec.yes_part].assignment_cert;
    REQUIRE(cert.has_value());
    for (auto s : cert->states) CHECK(s == CrossingState::Keep);
}

TEST_CASE("oracle census of the trefoil") {
    auto census = oracle_census(load_diagram("torus2_3"));
    long long total = 0;
    std::map<std::string, long long> by_name;
    for (const auto& entry : census) {
        total += entry.count;
        by_name[classify_signature(entry.signature, 3)] += entry.count;
    }
    CHECK(total == 64); // 4^3 assignments
    CHECK(by_name["torus2(3)"] == 2);
    CHECK(by_name["torus2(2)"] == 6);
    CHECK(by_name["unknot"] == 39);
    CHECK(by_name["unlink-2"] == 16);
    CHECK(by_name["unlink-3"] == 1);
}

TEST_CASE("oracle census of the one-crossing kink") {
    auto census = oracle_census(parse_gauss("O1+U1+"));
    std::map<std::string, long long> by_name;
    for (const auto& entry : census)
        by_name[classify_signature(entry.signature, 2)] += entry.count;
    CHECK(by_name["unknot"] == 3);  // keep, exchange, one smoothing
    CHECK(by_name["unlink-2"] == 1);
}

TEST_CASE("structural torus decisions") {
    SUBCASE("long torus diagrams contain the smaller cycle") {
        auto dec = decide_torus(load_diagram("torus2_7"), 5);
        CHECK(dec.answer == Answer::Yes);
        REQUIRE(dec.yes_part >= 0);
        const auto& p = dec.parts[dec.yes_part];
        REQUIRE(p.minor_cert.has_value());
        CHECK_FALSE(p.via_oracle);
        CHECK(verify_minor_witness(p.minor_cert->tait_graph, p.minor_cert->witness));
        CHECK(verify_decision(dec));
    }
    SUBCASE("a summed diagram succeeds through one part") {
        auto dec = decide_torus(load_diagram("nonstrong_sum6"), 3);
        CHECK(dec.answer == Answer::Yes);
        CHECK(dec.parts.size() == 2);
        CHECK(verify_decision(dec));
    }
    SUBCASE("a short diagram cannot reach a longer torus link") {
        auto dec = decide_torus(load_diagram("torus2_3"), 5);
        CHECK(dec.answer == Answer::No);
        REQUIRE(dec.parts.size() == 1);
        CHECK(dec.parts[0].no_reason == NoReason::ExhaustedAssignments);
        CHECK(dec.parts[0].via_oracle);
    }
}

TEST_CASE("structural twist decisions") {
    SUBCASE("torus-minimal projections are structural noes") {
        auto dec = decide_twist(load_diagram("torus2_9"), 5);
        CHECK(dec.answer == Answer::No);
        REQUIRE(dec.parts.size() == 1);
        CHECK(dec.parts[0].no_reason == NoReason::TorusMinimalProjection);
        CHECK_FALSE(dec.parts[0].via_oracle); // no enumeration at 9 crossings
    }
    SUBCASE("a twist diagram answers yes for its own parameter") {
        auto dec = decide_twist(load_diagram("twist_6"), 6);
        CHECK(dec.answer == Answer::Yes);
        CHECK(verify_decision(dec));
    }
    SUBCASE("the figure-eight reaches the four-crossing twist knot") {
        auto dec = decide_twist(load_diagram("figure_eight"), 4);
        CHECK(dec.answer == Answer::Yes);
        CHECK(verify_decision(dec));
    }
}

TEST_CASE("the three-crossing twist target routes to the torus engine") {
    auto dec = decide_twist(load_diagram("torus2_5"), 3);
    CHECK(dec.answer == Answer::Yes);
    REQUIRE(dec.target.family.has_value());
    CHECK(dec.target.family->family == Family::Twist);
    CHECK(dec.target.family->m == 3);
    CHECK_FALSE(dec.note.empty());
    // Same verdicts as the torus engine on a spread of inputs.
    for (const char* name : {"torus2_3", "torus2_4", "twist_4", "figure_eight"}) {
        CAPTURE(name);
        CHECK(decide_twist(load_diagram(name), 3).answer ==
              decide_torus(load_diagram(name), 3).answer);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((void)decide_torus(load_diagram("torus2_3"), 2), std::invalid_argument);
    CHECK_THROWS_AS((void)decide_twist(load_diagram("torus2_3"), 2), std::invalid_argument);
}

TEST_CASE("running out of both structure and budget") {
    // m exceeds every minor in the Tait graphs and the part is larger than
    // the oracle budget: the only honest answer is undecided.
    auto dec = decide_torus(load_diagram("torus2_5"), 6, /*budget=*/4);
    CHECK(dec.answer == Answer::UndecidedBudget);
}

TEST_CASE("combining per-part decisions") {
    auto no = one_part(Answer::No, Family::Torus2, 3);
    auto yes = one_part(Answer::Yes, Family::Torus2, 3);
    auto und = one_part(Answer::UndecidedBudget, Family::Torus2, 3);
    CHECK(combine_parts({no, yes}).answer == Answer::Yes);
    CHECK(combine_parts({no, yes}).yes_part == 1);
    CHECK(combine_parts({no, no}).answer == Answer::No);
    CHECK(combine_parts({und, no}).answer == Answer::UndecidedBudget);
    CHECK(combine_parts({yes, und}).answer == Answer::Yes);
    CHECK_THROWS_AS((void)combine_parts({}), std::invalid_argument);
}

TEST_CASE("composite diagrams decide as the disjunction of their parts") {
    auto sum = connected_sum(load_diagram("torus2_3"), 0, load_diagram("figure_eight"), 0);
    auto torus = decide_torus(sum, 3);
    CHECK(torus.answer == Answer::Yes);
    CHECK(torus.parts.size() == 2);
    auto twist = decide_twist(sum, 4);
    CHECK(twist.answer == Answer::Yes);
    CHECK(twist.parts.size() == 2);
    // Neither part alone reaches both targets: the trefoil part carries the
    // torus answer, the figure-eight part the twist answer.
    auto t = decide_twist(load_diagram("torus2_3"), 4);
    CHECK(t.answer == Answer::No);
    auto f = decide_torus(load_diagram("figure_eight"), 3);
    CHECK(f.answer == Answer::Yes); // the figure-eight does smooth to a trefoil
}

TEST_CASE("decision documents") {
    auto dec = decide_torus(load_diagram("torus2_7"), 5);
    auto j = decision_to_json(dec);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("answer") == "yes");
    CHECK(j.at("target").at("family") == "torus2");
    CHECK(j.at("target").at("m") == 5);
    REQUIRE(j.at("parts").is_array());
    const auto& part = j.at("parts").at(0);
    CHECK(part.contains("crossings"));
    CHECK(part.contains("pd"));
    CHECK(part.at("certificate").at("kind") == "minor-witness");
    // Byte determinism.
    CHECK(j.dump(2) == decision_to_json(decide_torus(load_diagram("torus2_7"), 5)).dump(2));

    auto no = decide_twist(load_diagram("torus2_9"), 5);
    auto jn = decision_to_json(no);
    CHECK(jn.at("parts").at(0).at("certificate").at("kind") == "structural-no");
    CHECK(jn.at("parts").at(0).at("certificate").at("reason") ==
          "torus-minimal-projection");
}

TEST_CASE("verification catches tampered certificates") {
    SUBCASE("assignment certificates") {
        auto dec = oracle_decide(load_diagram("torus2_5"), FamilyTarget{Family::Torus2, 3});
        REQUIRE(dec.answer == Answer::Yes);
        REQUIRE(verify_decision(dec));
        auto& cert = dec.parts[dec.yes_part].assignment_cert;
        REQUIRE(cert.has_value());
        REQUIRE(!cert->states.empty());
        cert->states[0] = cert->states[0] == CrossingState::SmoothA
                              ? CrossingState::SmoothB
                              : CrossingState::SmoothA;
        std::string why;
        CHECK_FALSE(verify_decision(dec, &why));
        CHECK_FALSE(why.empty());
    }
    SUBCASE("minor certificates") {
        auto dec = decide_torus(load_diagram("torus2_7"), 5);
        REQUIRE(dec.answer == Answer::Yes);
        REQUIRE(verify_decision(dec));
        auto& cert = dec.parts[dec.yes_part].minor_cert;
        REQUIRE(cert.has_value());
        REQUIRE(cert->witness.branch_sets.size() >= 2);
        cert->witness.branch_sets[1].push_back(cert->witness.branch_sets[0][0]);
        CHECK_FALSE(verify_decision(dec));
    }
}

} // TEST_SUITE
