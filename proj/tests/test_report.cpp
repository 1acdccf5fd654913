#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "knotcord/report.hpp"

using namespace knotcord;

TEST_CASE("seifert document parsing accepts numbers and decimal strings") {
    const SeifertMatrix v =
        parse_seifert_document(R"({"seifert": [[21, "53"], ["52", 21]]})");
    CHECK(v.matrix().at(0, 1) == 53);
    CHECK(v.matrix().at(1, 0) == 52);

    // huge entries survive as strings
    const SeifertMatrix big = parse_seifert_document(
        R"({"seifert": [[0, "100000000000000000000000001"], ["100000000000000000000000000", 0]]})");
    CHECK(big.matrix().at(0, 1) - big.matrix().at(1, 0) == 1);
}

TEST_CASE("seifert document parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_seifert_document("not json"), InputError);
    CHECK_THROWS_AS(parse_seifert_document(R"({"matrix": []})"), InputError);
    CHECK_THROWS_AS(parse_seifert_document(R"({"seifert": [[1.5, 0], [0, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_seifert_document(R"({"seifert": [["x", 0], [0, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_seifert_document(R"({"seifert": [[1, 1, 0], [0, 1, 0]]})"),
                    SeifertFormError);
    // the spec's invalid example: skew part vanishes
    try {
        parse_seifert_document(R"({"seifert": [[1, 1], [1, 1]]})");
        FAIL("expected SeifertFormError");
    } catch (const SeifertFormError& e) {
        CHECK(std::string(e.what()).find("det(V - V^T)") != std::string::npos);
    }
}

TEST_CASE("analyze report on the counterexample") {
    const Report r = cmd_analyze(parse_seifert_document(R"({"seifert": [[21,53],[52,21]]})"));
    CHECK(r.json["schema"] == 1);
    CHECK(r.json["alexander"]["polynomial"] == "2315t^2 - 4631t + 2315");
    CHECK(r.json["alexander"]["at_1"] == "-1");
    CHECK(r.json["alexander"]["at_minus_1"] == "9261");
    CHECK(r.json["homology"]["display"] == "Z_3 + Z_9 + Z_7 + Z_49");
    CHECK(r.json["verdict"]["algebraic_order"] == "order-4");
    CHECK(r.json["verdict"]["status"] == "unresolved");
    CHECK(r.json["rules"][0]["rule"] == "theorem-1.2");
    CHECK(r.json["rules"][0]["fires"] == false);
    CHECK(r.text.find("unresolved") != std::string::npos);
}

TEST_CASE("reports round-trip through their JSON dump") {
    const Report r = cmd_analyze(parse_seifert_document(R"({"seifert": [[-1,1],[0,-1]]})"));
    CHECK(Json::parse(r.json.dump()) == r.json);
    const Report d = cmd_double(5);
    CHECK(Json::parse(d.json.dump(2)) == d.json);
}

TEST_CASE("analyze of the trefoil fires the gate") {
    const Report r = cmd_analyze(parse_seifert_document(R"({"seifert": [[-1,1],[0,-1]]})"));
    CHECK(r.json["verdict"]["infinite_order"] == true);
    CHECK(r.json["rules"][0]["fires"] == true);
    CHECK(r.json["rules"][0]["witnesses"][0]["p"] == 3);
    CHECK(r.json["rules"][0]["witnesses"][0]["n"] == 1);
}

TEST_CASE("double reports") {
    const Report a2 = cmd_double(2);
    CHECK(a2.json["clause"] == "corollary-4.4(b)");
    CHECK(a2.json["status"] == "algebraically-slice");
    CHECK(a2.json["note"] == "the 2-twisted double of the unknot is slice");

    const Report a5 = cmd_double(5);
    CHECK(a5.json["clause"] == "corollary-4.4(d)");
    CHECK(a5.json["infinite_order"] == true);
    bool has45 = false;
    for (const auto& rule : a5.json["rules"])
        if (rule["rule"] == "corollary-4.5") has45 = true;
    CHECK(has45);

    const Report neg = cmd_double(-3);
    CHECK(neg.json["clause"] == "corollary-4.4(a)");
    CHECK(neg.json["infinite_order"] == true);

    const Report table = cmd_double_table(-10, 12);
    CHECK(table.json["rows"].size() == 23);
    CHECK_THROWS_AS(cmd_double_table(5, 4), InputError);
}

TEST_CASE("twobridge report") {
    const Report r = cmd_twobridge(21, 8);
    CHECK(r.json["infinite_order"] == true);
    CHECK(r.json["rules"][0]["rule"] == "corollary-4.2");
    CHECK(r.json["gate_witnesses"].size() == 2); // (3,1) and (7,1)
    CHECK_THROWS_AS(cmd_twobridge(4, 1), InvalidBridgeParams);
}

TEST_CASE("metab report with structure checks and certificates") {
    MetabParams params;
    params.p = 3;
    params.n = 1;
    params.k = 1;
    params.check_structure = true;
    params.run_replay = true;
    const Report r = cmd_metab(params);
    CHECK(r.json["enumeration"]["count"].get<std::size_t>() > 0);
    CHECK(r.json["structure_failures"] == 0);
    for (const auto& m : r.json["metabolizers"]) {
        CHECK(m["structure"]["all_pass"] == true);
        CHECK(m["certificate"]["levels"].size() == 1);
        CHECK(m["certificate"]["levels"][0]["resultant"] != "0");
    }
}

TEST_CASE("metab reports are byte-identical across runs") {
    MetabParams params;
    params.p = 7;
    params.n = 1;
    params.k = 1;
    params.run_replay = true;
    const Report a = cmd_metab(params);
    const Report b = cmd_metab(params);
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.text == b.text);

    params.threads = 1; // thread count must not affect the report
    const Report c = cmd_metab(params);
    CHECK(a.json.dump() == c.json.dump());
}

TEST_CASE("metab budget surfaces as BudgetExceeded") {
    MetabParams params;
    params.p = 3;
    params.n = 5;
    params.k = 2;
    CHECK_THROWS_AS(cmd_metab(params), BudgetExceeded);
}
