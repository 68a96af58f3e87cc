#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meandrics/arch.hpp"

#include <algorithm>
#include <set>

using namespace meandrics;

TEST_CASE("catalan numbers: closed form and recurrence anchors") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    // (2p)! / ((p+1)! p!) agrees with the cached recurrence
    for (int p = 0; p <= 20; ++p)
        CHECK(catalan(p) == factorial(2 * p) / (factorial(p + 1) * factorial(p)));
}

TEST_CASE("enumeration yields exactly the Catalan count of valid configs") {
    for (int n = 1; n <= 10; ++n) {
        BigInt count = 0;
        std::set<std::string> seen;
        for_each_arch(n, [&](const ArchConfig& a) {
            ++count;
            CHECK(a.is_valid());
            seen.insert(a.dyck());
        });
        CHECK(count == catalan(n));
        CHECK(BigInt(static_cast<long>(seen.size())) == catalan(n));
    }
}

TEST_CASE("enumeration order is lexicographic on the parenthesis word") {
    auto all = enumerate_arches(5);
    for (size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1].dyck() < all[i].dyck());
}

TEST_CASE("small orders match the hand-enumerated configurations") {
    auto one = enumerate_arches(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].match == std::vector<int>{1, 0});

    auto two = enumerate_arches(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].match == std::vector<int>{3, 2, 1, 0});  // nested
    CHECK(two[1].match == std::vector<int>{1, 0, 3, 2});  // side by side
}

TEST_CASE("parenthesis word round-trips") {
    for (int n : {1, 2, 3, 4, 6}) {
        for (const auto& a : enumerate_arches(n)) {
            CHECK(arch_from_dyck(a.dyck()) == a);
        }
    }
    CHECK_THROWS_AS(arch_from_dyck("(()"), ValidationError);
    CHECK_THROWS_AS(arch_from_dyck("())("), ValidationError);
    CHECK_THROWS_AS(arch_from_dyck("(a)b"), ValidationError);
}

TEST_CASE("rainbow matches its defining formula") {
    CHECK(rainbow(1).match == std::vector<int>{1, 0});
    CHECK(rainbow(2).match == std::vector<int>{3, 2, 1, 0});
    auto r5 = rainbow(5);
    CHECK(r5.match[0] == 9);
    CHECK(r5.match[4] == 5);
    CHECK(r5.is_valid());
}

TEST_CASE("gluing: hand-traced loop counts") {
    CHECK(glue_components(rainbow(3), rainbow(3)) == 3);
    auto nested = arch_from_dyck("(())");
    auto side = arch_from_dyck("()()");
    CHECK(glue_components(nested, side) == 1);
    CHECK(glue_components(side, nested) == 1);
    CHECK(glue_components(side, side) == 2);
    CHECK_THROWS_AS(glue_components(rainbow(2), rainbow(3)), ValidationError);
}

TEST_CASE("gluing is symmetric and bounded, with equality iff mirror match") {
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_arches(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                int c = glue_components(a, b);
                CHECK(c == glue_components(b, a));
                CHECK(c >= 1);
                CHECK(c <= n);
                // n loops exactly when every arch of a is closed by its own
                // mirror image, i.e. the two configurations coincide.
                CHECK((c == n) == (a == b));
            }
        }
    }
}

TEST_CASE("winding counts center-spanning arches") {
    for (int n = 1; n <= 6; ++n) CHECK(winding(rainbow(n)) == n);
    CHECK(winding(arch_from_dyck("()()")) == 0);
    CHECK(winding(arch_from_dyck("(())")) == 2);
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : enumerate_arches(n)) {
            int w = winding(a);
            CHECK(w >= 0);
            CHECK(w <= n);
            CHECK((w - n) % 2 == 0);
        }
    }
}
