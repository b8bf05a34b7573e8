#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "ilo/constructions.hpp"
#include "ilo/enumeration.hpp"

using namespace ilo;

namespace {

// Independent oracle: odometer over all n^(n*n) tables, no DFS involved.
template <class P>
long long brute_count(int n, P pred) {
    long long count = 0;
    std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
    while (true) {
        OpTable t(n, cells);
        if (pred(t)) ++count;
        std::size_t k = 0;
        for (; k < cells.size(); ++k) {
            if (++cells[k] < n) break;
            cells[k] = 0;
        }
        if (k == cells.size()) break;
    }
    return count;
}

}  // namespace

TEST_CASE("labeled counts agree with brute force", "[enumeration]") {
    SECTION("order-2 ILO models") {
        long long oracle = brute_count(2, [](const OpTable& t) {
            return columns_are_permutations(t);
        });
        CHECK(oracle == 4);
        CHECK(count_models(2, StructureClass::Ilo) == oracle);
    }
    SECTION("order-2 hypersubtraction is unique") {
        long long oracle = brute_count(2, [](const OpTable& t) {
            return columns_are_permutations(t) && t.at(0, 0) == 0 && t.at(1, 1) == 0 &&
                   t.at(1, 0) == 1;
        });
        CHECK(oracle == 1);
        std::vector<OpTable> got;
        enumerate(EnumerationRequest{2, StructureClass::Hypersubtraction, false, {}},
                  [&](const OpTable& t, std::optional<int> u) {
                      got.push_back(t);
                      CHECK(u == std::optional<int>(0));
                  });
        REQUIRE(got.size() == 1);
        CHECK(got[0] == OpTable(2, {0, 1, 1, 0}));
    }
    SECTION("order-3 quandles: 5 labeled in 3 classes") {
        long long oracle = brute_count(3, [](const OpTable& t) {
            return columns_are_permutations(t) && idempotent_diagonal(t) &&
                   right_self_distributive(t);
        });
        CHECK(oracle == 5);
        std::vector<IloModel> models;
        enumerate(EnumerationRequest{3, StructureClass::Quandle, false, {}},
                  [&](const OpTable& t, std::optional<int>) { models.push_back(make_model(t)); });
        CHECK(static_cast<long long>(models.size()) == oracle);
        auto classes = iso_classes(models);
        CHECK(classes.size() == 3);
        long long total = 0;
        for (const auto& c : classes) total += c.count;
        CHECK(total == oracle);
    }
    SECTION("order-3 subtractions need no invertibility") {
        long long oracle = brute_count(3, [](const OpTable& t) {
            for (int x = 0; x < 3; ++x)
                if (t.at(x, x) != 0 || t.at(x, 0) != x) return false;
            return true;
        });
        CHECK(oracle == 81);
        CHECK(count_models(3, StructureClass::Subtraction) == oracle);
    }
}

TEST_CASE("streams are lexicographic and shards partition them", "[enumeration]") {
    std::vector<OpTable> whole;
    enumerate(EnumerationRequest{3, StructureClass::Ilo, false, {}},
              [&](const OpTable& t, std::optional<int>) { whole.push_back(t); });
    CHECK(whole.size() == 216);
    CHECK(std::is_sorted(whole.begin(), whole.end()));
    CHECK(std::adjacent_find(whole.begin(), whole.end()) == whole.end());

    std::set<std::vector<int>> merged;
    std::size_t total = 0;
    for (int i = 0; i < 2; ++i)
        enumerate(EnumerationRequest{3, StructureClass::Ilo, false, std::pair{i, 2}},
                  [&](const OpTable& t, std::optional<int>) {
                      ++total;
                      CHECK(merged.insert(t.cells).second);
                  });
    CHECK(total == whole.size());
    for (const auto& t : whole) CHECK(merged.count(t.cells) == 1);
}

TEST_CASE("enumeration caps", "[enumeration]") {
    CHECK_THROWS_MATCHES(count_models(6, StructureClass::Ilo), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::order_too_large;
                         }));
    SECTION("ILO_MAX_ORDER overrides the cap") {
        setenv("ILO_MAX_ORDER", "2", 1);
        CHECK_THROWS_AS(count_models(3, StructureClass::Ilo), error);
        unsetenv("ILO_MAX_ORDER");
        CHECK(count_models(3, StructureClass::Ilo) == 216);
    }
}

TEST_CASE("isomorphism search", "[enumeration]") {
    IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
    SECTION("identity witness for equal tables") {
        IloModel same = make_model(make_table(3, [](int x, int y) {
            return ((2 * x - y) % 3 + 3) % 3;
        }));
        auto iso = are_isomorphic(r3, same);
        REQUIRE(iso.has_value());
        CHECK(iso->map == identity_permutation(3));
    }
    SECTION("a latin and a non-latin model are never isomorphic") {
        CHECK_FALSE(are_isomorphic(trivial_quandle(3), r3).has_value());
    }
    SECTION("relabelings are recognized with a valid witness") {
        std::vector<int> sigma{1, 0, 2};
        IloModel moved = make_model(relabel(r3.d, sigma));
        auto iso = are_isomorphic(r3, moved);
        REQUIRE(iso.has_value());
        CHECK(relabel(r3.d, iso->map) == moved.d);
    }
    SECTION("pruning never changes the verdict") {
        std::vector<IloModel> models;
        enumerate(EnumerationRequest{3, StructureClass::Ilo, false, {}},
                  [&](const OpTable& t, std::optional<int>) {
                      if (models.size() < 40) models.push_back(make_model(t));
                  });
        for (std::size_t i = 0; i < models.size(); i += 7)
            for (std::size_t j = 0; j < models.size(); j += 11) {
                bool pruned = are_isomorphic(models[i], models[j], true).has_value();
                bool plain = are_isomorphic(models[i], models[j], false).has_value();
                REQUIRE(pruned == plain);
            }
    }
}

TEST_CASE("canonical forms and iso classes", "[enumeration]") {
    SECTION("the four order-2 ILO models fall into three classes") {
        std::vector<IloModel> models;
        enumerate(EnumerationRequest{2, StructureClass::Ilo, false, {}},
                  [&](const OpTable& t, std::optional<int>) { models.push_back(make_model(t)); });
        auto classes = iso_classes(models);
        REQUIRE(classes.size() == 3);
        std::multiset<long long> sizes;
        for (const auto& c : classes) sizes.insert(c.count);
        CHECK(sizes == std::multiset<long long>{1, 1, 2});
        // pairwise search agrees with the canonical-form partition
        for (const auto& a : models)
            for (const auto& b : models)
                CHECK((canonical_form(a.d) == canonical_form(b.d)) ==
                      are_isomorphic(a, b).has_value());
    }
    SECTION("canonical form is invariant under relabeling") {
        IloModel r3 = alexander({cyclic_group(3), {0, 2, 1}});
        for (const auto& sigma : all_permutations(3))
            CHECK(canonical_form(relabel(r3.d, sigma)) == canonical_form(r3.d));
    }
    SECTION("singleton input gives one class of count 1") {
        auto classes = iso_classes({trivial_quandle(3)});
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].count == 1);
    }
}

TEST_CASE("latin prequandle sweep counts", "[enumeration]") {
    long long counts[6] = {0, 1, 0, 1, 2, 48};
    for (int n = 1; n <= 5; ++n) {
        long long c = 0;
        enumerate_latin_prequandles(n, [&](const OpTable&) { ++c; });
        CHECK(c == counts[n]);
    }
}
