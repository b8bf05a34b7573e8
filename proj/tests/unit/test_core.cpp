#include <catch2/catch_amalgamated.hpp>

#include "ilo/constructions.hpp"
#include "ilo/enumeration.hpp"

using namespace ilo;

namespace {

OpTable z3_difference() {
    return make_table(3, [](int x, int y) { return ((x - y) % 3 + 3) % 3; });
}

}  // namespace

TEST_CASE("adjoint inverts the left translations", "[core]") {
    SECTION("first projection has the second projection as adjoint") {
        OpTable first = make_table(2, [](int x, int) { return x; });
        OpTable adj = adjoint(first);
        CHECK(adj == make_table(2, [](int, int y) { return y; }));
    }
    SECTION("difference mod 3 has addition as adjoint") {
        OpTable adj = adjoint(z3_difference());
        CHECK(adj == make_table(3, [](int x, int y) { return (x + y) % 3; }));
    }
    SECTION("a constant table has no adjoint") {
        OpTable zero(2, 0);
        try {
            adjoint(zero);
            FAIL("expected non_invertible_translation");
        } catch (const error& e) {
            CHECK(e.code() == errc::non_invertible_translation);
            CHECK(e.detail() == std::optional<int>(0));
        }
    }
}

TEST_CASE("classify returns exactly the satisfied classes", "[core]") {
    SECTION("sum mod 2") {
        FlagSet f = classify(make_table(2, [](int x, int y) { return (x + y) % 2; }));
        for (StructureClass c :
             {StructureClass::Ilo, StructureClass::Latin, StructureClass::Symmetric,
              StructureClass::Involutive, StructureClass::Slominski,
              StructureClass::HyperSlominski, StructureClass::Subtraction,
              StructureClass::Hypersubtraction, StructureClass::GroupDerived})
            CHECK(f.test(c));
        CHECK_FALSE(f.test(StructureClass::Prequandle));
        CHECK_FALSE(f.test(StructureClass::Quandle));
    }
    SECTION("trivial quandle of order 3") {
        FlagSet f = trivial_quandle(3).flags;
        for (StructureClass c : {StructureClass::Ilo, StructureClass::Prequandle,
                                 StructureClass::Quandle, StructureClass::Autonomous,
                                 StructureClass::Involutive})
            CHECK(f.test(c));
        CHECK_FALSE(f.test(StructureClass::Latin));
        CHECK_FALSE(f.test(StructureClass::Symmetric));
        CHECK_FALSE(f.test(StructureClass::Slominski));
        CHECK_FALSE(f.test(StructureClass::GroupDerived));
    }
    SECTION("a subtraction that is not invertible") {
        OpTable t(3, 0);
        for (int x = 0; x < 3; ++x) {
            t.at(x, x) = 0;
            t.at(x, 0) = x;
        }
        FlagSet f = classify(t);
        CHECK(f.test(StructureClass::Subtraction));
        CHECK(f.bits == FlagSet{1u << static_cast<int>(StructureClass::Subtraction)}.bits);
    }
    SECTION("the one-point model is in every class") {
        FlagSet f = classify(OpTable(1, 0));
        for (int c = 0; c < kStructureClassCount; ++c)
            CHECK(f.test(static_cast<StructureClass>(c)));
    }
}

TEST_CASE("duality", "[core]") {
    SECTION("an involution on the group model of Z3") {
        IloModel m = make_model(z3_difference(), 0);
        IloModel dd = dual(dual(m));
        CHECK(dd.d == m.d);
        CHECK(dd.unit == m.unit);
    }
    SECTION("the trivial quandle is self-dual") {
        IloModel t2 = trivial_quandle(2);
        CHECK(dual(t2).d == t2.d);
        CHECK(t2.flags.test(StructureClass::Involutive));
    }
    SECTION("dual tables of the Z3 model") {
        IloModel d1 = dual(make_model(z3_difference(), 0));
        CHECK(d1.d == make_table(3, [](int x, int y) { return (x + y) % 3; }));
        CHECK(d1.adj == make_table(3, [](int x, int y) { return ((y - x) % 3 + 3) % 3; }));
        CHECK(d1.flags.test(StructureClass::Ilo));
    }
}

TEST_CASE("associativity equivalences", "[core]") {
    SECTION("group model") {
        AssocReport r = check_associativity_equivalence(make_model(z3_difference(), 0));
        CHECK(r.all_equal());
        CHECK(r.associative);
    }
    SECTION("trivial quandle of order 3") {
        AssocReport r = check_associativity_equivalence(trivial_quandle(3));
        CHECK(r.all_equal());
        CHECK(r.associative);
    }
    SECTION("2x + y mod 3 fails every condition") {
        OpTable t = make_table(3, [](int x, int y) { return (2 * x + y) % 3; });
        IloModel m = make_model(t);
        CHECK(m.adj == make_table(3, [](int x, int y) { return (x + 2 * y) % 3; }));
        AssocReport r = check_associativity_equivalence(m);
        CHECK(r.all_equal());
        CHECK_FALSE(r.associative);
    }
}

TEST_CASE("commutativity equivalences", "[core]") {
    CHECK(check_commutativity_equivalence(make_model(z3_difference(), 0)).commutative);
    CommutReport s3 = check_commutativity_equivalence(from_group(symmetric3_group()));
    CHECK(s3.all_equal());
    CHECK_FALSE(s3.commutative);
    CommutReport tq = check_commutativity_equivalence(trivial_quandle(2));
    CHECK(tq.all_equal());
    CHECK_FALSE(tq.commutative);
}

TEST_CASE("Slominski identities", "[core]") {
    CHECK(check_slominski_identities(from_group(cyclic_group(4))).all_true());
    OpTable scaled = make_table(3, [](int x, int y) { return (2 * (x - y) % 3 + 3) % 3; });
    IloModel m = make_model(scaled, 0);
    CHECK(m.adj == make_table(3, [](int x, int y) { return (x + 2 * y) % 3; }));
    CHECK(check_slominski_identities(m).all_true());
    CHECK_THROWS_MATCHES(check_slominski_identities(trivial_quandle(2)), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_slominski;
                         }));
}

TEST_CASE("ILO axioms hold exhaustively at small orders", "[core][property]") {
    for (int n = 1; n <= 3; ++n) {
        enumerate(EnumerationRequest{n, StructureClass::Ilo, false, {}},
                  [&](const OpTable& t, std::optional<int>) {
                      OpTable adj = adjoint(t);
                      for (int x = 0; x < n; ++x)
                          for (int z = 0; z < n; ++z) {
                              REQUIRE(t.at(adj.at(x, z), x) == z);   // i
                              REQUIRE(adj.at(x, t.at(z, x)) == z);   // ii
                          }
                      // iii: x∘y = t ⟺ y = d(t, x)
                      for (int x = 0; x < n; ++x)
                          for (int y = 0; y < n; ++y)
                              REQUIRE(t.at(adj.at(x, y), x) == y);
                  });
    }
}
