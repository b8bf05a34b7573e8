#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "ilo/json_io.hpp"

using namespace ilo;

namespace {

json reload(const json& j) { return json::parse(j.dump()); }

json read_fixture(const char* name) {
    std::ifstream in(std::string(ILO_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("canonical serialization round-trips byte for byte", "[json]") {
    IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
    IloModel z4 = from_group(cyclic_group(4));
    for (const IloModel& m : {r3, z4}) {
        std::string bytes = model_to_json(m).dump();
        IloModel back = model_from_json(json::parse(bytes));
        CHECK(back.d == m.d);
        CHECK(back.unit == m.unit);
        CHECK(model_to_json(back).dump() == bytes);
    }
}

TEST_CASE("documents round-trip through their parsers", "[json]") {
    SECTION("groups") {
        FiniteGroup g = catalog_group("D4");
        FiniteGroup back = group_from_json(reload(group_to_json(g)));
        CHECK(back.mult == g.mult);
    }
    SECTION("alexander data") {
        AlexanderDatum a{cyclic_group(5), {0, 2, 4, 1, 3}};
        AlexanderDatum back = alexander_from_json(reload(alexander_to_json(a)));
        CHECK(back.f == a.f);
        CHECK(back.group.mult == a.group.mult);
    }
    SECTION("split epis of all three kinds") {
        FiniteGroup z6 = cyclic_group(6), z2 = cyclic_group(2);
        GroupSplitEpi ge = make_group_split_epi(z6, z2, {0, 1, 0, 1, 0, 1}, {0, 3});
        auto back = split_epi_from_json(reload(split_epi_to_json(ge)));
        CHECK(std::get<GroupSplitEpi>(back).kernel == ge.kernel);

        IloModel total = make_model(
            make_table(3, [](int x, int y) { return ((2 * (x - y)) % 3 + 3) % 3; }), 0);
        IloModel point = make_model(OpTable(1, {0}), 0);
        ModelSplitEpi me = make_model_split_epi(total, point, {0, 0, 0}, {0});
        auto mback = split_epi_from_json(reload(split_epi_to_json(me)));
        CHECK(std::get<ModelSplitEpi>(mback).total.d == total.d);

        BraceSplitEpi be = make_brace_split_epi(trivial_brace(z6), trivial_brace(z2),
                                                {0, 1, 0, 1, 0, 1}, {0, 3});
        auto bback = split_epi_from_json(reload(split_epi_to_json(be)));
        CHECK(std::get<BraceSplitEpi>(bback).kernel == be.kernel);
    }
    SECTION("relations") {
        IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
        std::vector<std::pair<int, int>> full;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) full.emplace_back(x, y);
        ReflexiveRelation r = make_relation(r3, full);
        ReflexiveRelation back = relation_from_json(reload(relation_to_json(r)));
        CHECK(back.pairs == r.pairs);
    }
    SECTION("internal operations") {
        InternalOpDatum d{cyclic_group(3),
                          make_table(3, [](int x, int y) { return (2 * x + y) % 3; })};
        InternalOpDatum back = internal_from_json(reload(internal_to_json(d)));
        CHECK(back.op == d.op);
    }
    SECTION("braces") {
        SkewBrace b = opposite_brace(symmetric3_group());
        SkewBrace back = brace_from_json(reload(brace_to_json(b)));
        CHECK(back.dg.circ.mult == b.dg.circ.mult);
    }
    SECTION("pullback reports carry the closure trace") {
        IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
        IloModel point = trivial_quandle(1);
        ModelSplitEpi leg = make_model_split_epi(r3, point, {0, 0, 0}, {0});
        json rep = pullback_report_to_json(make_pullback(leg, leg));
        CHECK(rep.at("size") == 9);
        CHECK(rep.at("jointly_strongly_epic") == true);
        CHECK(rep.at("closure").size() == 9);
    }
}

TEST_CASE("units are normalized to 0 on ingestion", "[json]") {
    // the Z2 model written with its unit at 1
    json j;
    j["kind"] = "ilo";
    j["order"] = 2;
    j["d"] = json::array({json::array({1, 0}), json::array({0, 1})});
    j["unit"] = 1;
    TableDoc doc = parse_table_doc(j);
    CHECK(doc.unit == std::optional<int>(0));
    REQUIRE(doc.relabeling.has_value());
    CHECK(*doc.relabeling == std::vector<int>{1, 0});
    CHECK(doc.d == OpTable(2, {0, 1, 1, 0}));
}

TEST_CASE("malformed documents are rejected", "[json]") {
    CHECK_THROWS_MATCHES(model_from_json(json{{"kind", "group"}}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::bad_input;
                         }));
    json j;
    j["kind"] = "ilo";
    j["order"] = 2;
    j["d"] = json::array({json::array({0, 7}), json::array({1, 0})});
    CHECK_THROWS_MATCHES(model_from_json(j), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_table;
                         }));
}

TEST_CASE("shipped fixtures parse and classify as documented", "[json]") {
    SECTION("z2.json is a hypersubtraction") {
        TableDoc doc = parse_table_doc(read_fixture("z2.json"));
        FlagSet f = classify(doc.d, doc.unit);
        CHECK(f.test(StructureClass::Hypersubtraction));
    }
    SECTION("z3_scaled.json is hyper-Slominski but not a hypersubtraction") {
        TableDoc doc = parse_table_doc(read_fixture("z3_scaled.json"));
        FlagSet f = classify(doc.d, doc.unit);
        CHECK(f.test(StructureClass::HyperSlominski));
        CHECK_FALSE(f.test(StructureClass::Hypersubtraction));
    }
    SECTION("r3.json is a latin quandle") {
        IloModel m = model_from_json(read_fixture("r3.json"));
        CHECK(m.flags.test(StructureClass::Quandle));
        CHECK(m.flags.test(StructureClass::Latin));
    }
    SECTION("z6_mod2_epi.json verifies as a group hyperindex") {
        auto epi = std::get<GroupSplitEpi>(split_epi_from_json(read_fixture("z6_mod2_epi.json")));
        IndexWitness w = group_index(epi);
        CHECK(w.is_hyperindex);
        CHECK(rho_inverse_ok(epi, w));
    }
    SECTION("z3_scaled_epi.json is an index but not a hyperindex") {
        auto epi =
            std::get<ModelSplitEpi>(split_epi_from_json(read_fixture("z3_scaled_epi.json")));
        IndexWitness w = model_index(epi);
        CHECK(w.is_index);
        CHECK_FALSE(w.is_hyperindex);
    }
    SECTION("s3_opposite_sign_epi.json carries two distinct hyperindexes") {
        auto epi =
            std::get<BraceSplitEpi>(split_epi_from_json(read_fixture("s3_opposite_sign_epi.json")));
        auto [ws, wc] = brace_indexes(epi);
        CHECK(ws.is_hyperindex);
        CHECK(wc.is_hyperindex);
        CHECK(ws.gamma_carrier != wc.gamma_carrier);
    }
}
