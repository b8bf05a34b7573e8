#include <catch2/catch_amalgamated.hpp>

#include "ilo/constructions.hpp"
#include "ilo/enumeration.hpp"

using namespace ilo;

TEST_CASE("group models", "[constructions]") {
    CHECK(from_group(cyclic_group(2)).d == OpTable(2, {0, 1, 1, 0}));
    CHECK(from_group(cyclic_group(3)).d.at(2, 1) == 1);
    IloModel s3 = from_group(symmetric3_group());
    CHECK(s3.flags.test(StructureClass::Hypersubtraction));
    CHECK(s3.flags.test(StructureClass::Latin));
    CHECK_FALSE(s3.flags.test(StructureClass::Symmetric));
}

TEST_CASE("group catalog sanity", "[constructions]") {
    const auto& cat = group_catalog();
    CHECK(cat.size() == 25);  // Z1..Z16, Z2xZ2, Z2xZ4, D3..D6, Q8, S3, A4
    for (const auto& g : cat) {
        CHECK(g.unit == 0);
        CHECK(group_law(g.mult).ok);
        CHECK(g.op(g.inverse(3 % g.order), 3 % g.order) == 0);
    }
    CHECK(catalog_group("Q8").order == 8);
    CHECK(is_abelian(catalog_group("Z2xZ4")));
    CHECK_FALSE(is_abelian(catalog_group("D4")));
    CHECK(has_exponent_two(catalog_group("Z2xZ2")));
    CHECK_FALSE(has_exponent_two(catalog_group("Z4")));
}

TEST_CASE("Alexander models", "[constructions]") {
    SECTION("doubling on Z5") {
        IloModel m = alexander({cyclic_group(5), {0, 2, 4, 1, 3}});
        CHECK(m.d.at(3, 1) == 0);
        CHECK(m.flags.test(StructureClass::Autonomous));
    }
    SECTION("doubling on Z3 gives 2x - y") {
        IloModel m = alexander({cyclic_group(3), {0, 2, 1}});
        CHECK(m.d == make_table(3, [](int x, int y) { return ((2 * x - y) % 3 + 3) % 3; }));
        CHECK(m.flags.test(StructureClass::Latin));
    }
    SECTION("doubling on Z4 is not an automorphism") {
        CHECK_THROWS_MATCHES(alexander({cyclic_group(4), {0, 2, 0, 2}}), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::not_automorphism;
                             }));
    }
    SECTION("nonabelian bases are rejected") {
        CHECK_THROWS_MATCHES(alexander({symmetric3_group(), {0, 1, 2, 3, 4, 5}}), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::not_abelian;
                             }));
    }
}

TEST_CASE("conjugation quandles", "[constructions]") {
    SECTION("abelian groups give the trivial quandle") {
        IloModel m = conjugation_quandle(cyclic_group(4));
        CHECK(m.d == trivial_quandle(4).d);
    }
    SECTION("in S3, (12) conjugated by (13) is (23)") {
        FiniteGroup s3 = symmetric3_group();
        IloModel m = conjugation_quandle(s3);
        int swap01 = permutation_index(s3, {1, 0, 2});
        int swap02 = permutation_index(s3, {2, 1, 0});
        int swap12 = permutation_index(s3, {0, 2, 1});
        CHECK(m.d.at(swap01, swap02) == swap12);
        CHECK(m.flags.test(StructureClass::Quandle));
    }
    SECTION("one-point group") {
        CHECK(conjugation_quandle(cyclic_group(1)).order() == 1);
    }
}

TEST_CASE("trivial quandles", "[constructions]") {
    CHECK(trivial_quandle(2).d == OpTable(2, {0, 0, 1, 1}));
    CHECK(trivial_quandle(1).d == OpTable(1, {0}));
    CHECK(trivial_quandle(1).flags.test(StructureClass::Latin));
    CHECK_FALSE(trivial_quandle(3).flags.test(StructureClass::Latin));
}

TEST_CASE("products", "[constructions]") {
    SECTION("trivial times trivial is trivial") {
        IloModel p = product(trivial_quandle(2), trivial_quandle(2));
        CHECK(p.d == trivial_quandle(4).d);
    }
    SECTION("Z2 x Z3 is the Z6 model up to isomorphism") {
        IloModel p = product(from_group(cyclic_group(2)), from_group(cyclic_group(3)));
        IloModel z6 = from_group(cyclic_group(6));
        auto iso = are_isomorphic(p, z6);
        REQUIRE(iso.has_value());
        // the witness transports the table
        CHECK(relabel(p.d, iso->map) == z6.d);
    }
    SECTION("R3 x R3 is a latin quandle of order 9") {
        IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
        IloModel p = product(r3, r3);
        CHECK(p.order() == 9);
        CHECK(p.flags.test(StructureClass::Latin));
        CHECK(p.flags.test(StructureClass::Quandle));
    }
}

TEST_CASE("subalgebra closure", "[constructions]") {
    IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
    CHECK(subalgebra_closure(r3, {0}) == std::vector<int>{0});
    CHECK(subalgebra_closure(r3, {0, 1}) == std::vector<int>{0, 1, 2});
    CHECK(subalgebra_closure(r3, {}).empty());
    CHECK(subalgebra_closure(from_group(cyclic_group(5)), {}) == std::vector<int>{0});
    SECTION("trace starts at the seeds") {
        std::vector<int> trace = subalgebra_closure_trace(r3, {1, 0});
        REQUIRE(trace.size() == 3);
        CHECK(trace[0] == 0);
        CHECK(trace[1] == 1);
        CHECK(trace[2] == 2);
    }
}
