#include <doctest.h>

#include <stdexcept>

#include "bookcoh/indexing.hpp"

using namespace bookcoh;

namespace {

IndexPair pair(std::vector<int> i, std::vector<int> j, int n) {
    return IndexPair(MultisetIndex(std::move(i)), IncreasingIndex(std::move(j)), n);
}

}  // namespace

TEST_SUITE_BEGIN("indexing");

TEST_CASE("complement") {
    CHECK(complement(IncreasingIndex({1, 3}), 4).entries() == std::vector<int>{2});
    CHECK(complement(IncreasingIndex({}), 3).entries() == std::vector<int>{1, 2});
    CHECK(complement(IncreasingIndex({1, 2}), 3).entries() == std::vector<int>{});
    CHECK_THROWS_AS(complement(IncreasingIndex({5}), 3), std::out_of_range);
}

TEST_CASE("max of the empty index is below every integer") {
    CHECK(IndexMax::bottom() < IndexMax::of(-100));
    CHECK(IndexMax::bottom() == IndexMax::bottom());
    CHECK(MultisetIndex({}).max().is_bottom());
    CHECK(MultisetIndex({2, 2}).max() == IndexMax::of(2));
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(pair({1}, {1}, 3)));        // max I = 1 <= max Jc = 2
    CHECK_FALSE(is_admissible(pair({2}, {2}, 3)));  // max Jc = 1 < 2
    CHECK(is_admissible(pair({}, {1, 2}, 3)));      // max empty = bottom
    CHECK(is_admissible(pair({}, {}, 2)));
    CHECK_FALSE(is_admissible(pair({1}, {1}, 2)));  // Jc empty, I not
}

TEST_CASE("merge_sign") {
    CHECK(merge_sign(IncreasingIndex({1}), IncreasingIndex({2})) == 1);
    CHECK(merge_sign(IncreasingIndex({2}), IncreasingIndex({1})) == -1);
    CHECK(merge_sign(IncreasingIndex({1, 3}), IncreasingIndex({2})) == -1);
    CHECK(merge_sign(IncreasingIndex({1}), IncreasingIndex({1})) == 0);
    CHECK(merge_sign(IncreasingIndex({}), IncreasingIndex({1, 2})) == 1);
}

TEST_CASE("good_to_bad") {
    CHECK(good_to_bad(pair({1}, {1}, 3)) == pair({1, 2}, {1, 2}, 3));
    CHECK(good_to_bad(pair({}, {}, 3)) == pair({2}, {2}, 3));
    CHECK(good_to_bad(pair({1, 1}, {2}, 3)) == pair({1, 1, 1}, {1, 2}, 3));
    CHECK_THROWS_AS(good_to_bad(pair({2}, {2}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(good_to_bad(pair({}, {1, 2}, 3)), std::domain_error);
}

TEST_CASE("bad_to_good") {
    auto [p1, m1] = bad_to_good(pair({2}, {2}, 3));
    CHECK(p1 == pair({}, {}, 3));
    CHECK(m1 == 2);
    auto [p2, m2] = bad_to_good(pair({1, 2}, {1, 2}, 3));
    CHECK(p2 == pair({1}, {1}, 3));
    CHECK(m2 == 2);
    auto [p3, m3] = bad_to_good(pair({1, 1, 1}, {1, 2}, 3));
    CHECK(p3 == pair({1, 1}, {2}, 3));
    CHECK(m3 == 1);
    CHECK_THROWS_AS(bad_to_good(pair({1}, {1}, 3)), std::invalid_argument);
}

TEST_CASE("enumerate_pairs") {
    CHECK(enumerate_pairs(1, 1, 3, false).size() == 4);
    auto adm = enumerate_pairs(1, 1, 3, true);
    REQUIRE(adm.size() == 3);
    CHECK(adm[0] == pair({1}, {1}, 3));
    CHECK(adm[1] == pair({2}, {1}, 3));
    CHECK(adm[2] == pair({1}, {2}, 3));
    CHECK(enumerate_pairs(2, 2, 3, true).empty());
    CHECK(enumerate_pairs(5, 1, 3, false).empty());
}

TEST_CASE("enumeration is J-outer I-inner lexicographic") {
    auto all = enumerate_pairs(1, 2, 3, false);
    REQUIRE(all.size() == 6);  // J in {(1),(2)}, I in {(1,1),(1,2),(2,2)}
    CHECK(all[0] == pair({1, 1}, {1}, 3));
    CHECK(all[1] == pair({1, 2}, {1}, 3));
    CHECK(all[2] == pair({2, 2}, {1}, 3));
    CHECK(all[3] == pair({1, 1}, {2}, 3));
}

TEST_CASE("admissibility matches the explicit case analysis for n up to 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (int l = 0; l <= 4; ++l)
                for (const IndexPair& p : enumerate_pairs(k, l, n, false)) {
                    bool expected;
                    if (!p.J.contains(n - 1)) {
                        // max Jc = n-1, so any I qualifies
                        expected = true;
                    } else {
                        int r = n - 1;
                        while (r - 1 >= 1 && p.J.contains(r - 1))
                            --r;
                        bool meets = false;
                        for (int i = r; i <= n - 1; ++i)
                            if (p.I.contains(i))
                                meets = true;
                        expected = !meets;
                    }
                    CHECK(is_admissible(p) == expected);
                }
}

TEST_CASE("exhaustive bijection and counting for n up to 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= std::min(n - 1, 5); ++k)
            for (int l = 0; l <= 6; ++l) {
                if (!(k == n - 1 && l == 0)) {
                    auto adm = enumerate_pairs(k, l, n, true);
                    auto up_all = enumerate_pairs(k + 1, l + 1, n, false);
                    auto up_adm = enumerate_pairs(k + 1, l + 1, n, true);
                    CHECK(adm.size() == up_all.size() - up_adm.size());
                    for (const IndexPair& p : adm) {
                        IndexPair q = good_to_bad(p);
                        CHECK_FALSE(is_admissible(q));
                        CHECK(bad_to_good(q).first == p);
                    }
                }
                if (!(k == n && l == 1)) {
                    auto all = enumerate_pairs(k, l, n, false);
                    auto adm = enumerate_pairs(k, l, n, true);
                    auto prev = enumerate_pairs(k - 1, l - 1, n, true);
                    CHECK(adm.size() + prev.size() == all.size());
                }
            }
}

TEST_SUITE_END();
