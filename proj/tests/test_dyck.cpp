#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ddyck/dyck.hpp"

using namespace ddyck;

namespace {

Int filtered_count(int n, int d) {
    Int c = 0;
    for_each_dyck(n, [&](const DyckPath& p) {
        if (is_d_dyck(p, d)) ++c;
    });
    return c;
}

Int pruned_count(int n, int d) {
    Int c = 0;
    for_each_d_dyck(n, d, [&](const DyckPath&) { ++c; });
    return c;
}

}  // namespace

TEST_CASE("parsing accepts balanced words and reports what is wrong otherwise") {
    CHECK(parse_path("").semilength() == 0);
    CHECK(parse_path("UUDD").semilength() == 2);

    CHECK_THROWS_WITH_AS(parse_path("UDDU"), doctest::Contains("below the axis"), Error);
    CHECK_THROWS_WITH_AS(parse_path("UUD"), doctest::Contains("unequal"), Error);
    CHECK_THROWS_WITH_AS(parse_path("UUDDD"), doctest::Contains("below the axis"), Error);
    CHECK_THROWS_WITH_AS(parse_path("UXDD"), doctest::Contains("only 'U' and 'D'"), Error);
    try {
        parse_path("UDX");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadCharacter);
    }
}

TEST_CASE("valley and peak vectors trace the corner heights left to right") {
    // Semilength-14 member of the d=2 family with four valleys.
    DyckPath p = parse_path("UDUUUDUUUUDUUUDUUUDDDDDDDDDD");
    CHECK(p.semilength() == 14);
    CHECK(p.valleys() == std::vector<int>{0, 2, 5, 7});
    CHECK(is_d_dyck(p, 2));

    CHECK(parse_path("UUUDDD").valleys().empty());
    CHECK(parse_path("UDUDUD").valleys() == std::vector<int>{0, 0});
    CHECK(parse_path("UD").peaks() == std::vector<int>{1});
    CHECK(parse_path("UDUD").peaks() == std::vector<int>{1, 1});
    CHECK(parse_path("UUDDUUUUDDUUUUUDDUDDDDDD").peaks() == std::vector<int>{2, 4, 7, 6});
}

TEST_CASE("the d-restriction compares consecutive valleys only") {
    DyckPath two_low_valleys = parse_path("UDUDUD");  // valleys (0,0)
    CHECK(is_d_dyck(two_low_valleys, 0));
    CHECK_FALSE(is_d_dyck(two_low_valleys, 2));
    CHECK(is_d_dyck(two_low_valleys, -1));

    // At most one valley qualifies for every d.
    CHECK(is_d_dyck(parse_path("UUDD"), 100));
    CHECK(is_d_dyck(parse_path("UUDUUDDD"), 100));

    // Very negative d accepts everything.
    for (int n = 0; n <= 6; ++n)
        for_each_dyck(n, [&](const DyckPath& p) { CHECK(is_d_dyck(p, -2 * n)); });

    // Tightening d shrinks the family (once 2+ valleys are in play).
    for (int n = 0; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckPath& p) {
            if (is_d_dyck(p, 2)) CHECK(is_d_dyck(p, 1));
        });
}

TEST_CASE("every nonempty path has one more peak than valleys") {
    for (int n = 1; n <= 7; ++n)
        for_each_dyck(n, [&](const DyckPath& p) {
            CHECK(p.peaks().size() == p.valleys().size() + 1);
        });
}

TEST_CASE("enumeration is exhaustive, duplicate-free, and lexicographic") {
    const Int catalan_small[11] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == catalan_small[n]);

    std::vector<std::string> words;
    for_each_dyck(3, [&](const DyckPath& p) { words.push_back(p.word()); });
    CHECK(words.size() == 5);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::set<std::string>(words.begin(), words.end()).size() == 5);
    CHECK(words.front() == "UUUDDD");  // U sorts before D
    CHECK(words.back() == "UDUDUD");

    Int total = 0;
    for_each_dyck(9, [&](const DyckPath&) { ++total; });
    CHECK(total == catalan(9));
}

TEST_CASE("pruned generation agrees with filtering the full family") {
    for (int d : {-1, 0, 1, 2, 3})
        for (int n = 0; n <= 8; ++n) CHECK(pruned_count(n, d) == filtered_count(n, d));

    // Same order, too: pruning must not reshuffle.
    std::vector<std::string> pruned, filtered;
    for_each_d_dyck(6, 2, [&](const DyckPath& p) { pruned.push_back(p.word()); });
    for_each_dyck(6, [&](const DyckPath& p) {
        if (is_d_dyck(p, 2)) filtered.push_back(p.word());
    });
    CHECK(pruned == filtered);
}

TEST_CASE("the closed-form count matches enumeration and its special cases") {
    CHECK(count_d_dyck(0, 2) == 1);
    CHECK(count_d_dyck(3, 2) == 4);
    CHECK(count_d_dyck(4, 2) == 7);
    CHECK(count_d_dyck(5, 2) == 12);

    for (int d = 1; d <= 5; ++d)
        for (int n = 0; n <= 9; ++n) CHECK(count_d_dyck(n, d) == filtered_count(n, d));

    // d = 1 collapses to powers of two.
    for (int n = 1; n <= 12; ++n) CHECK(count_d_dyck(n, 1) == Int(1) << (n - 1));

    CHECK_THROWS_AS(count_d_dyck(5, 0), Error);
    CHECK_THROWS_AS(count_d_dyck(5, -2), Error);
}

TEST_CASE("reflect reverses the word, swaps steps, and reverses valleys") {
    DyckPath p = parse_path("UUDDUUUDUUUUDUUUDUDDDDDDDD");
    CHECK(p.valleys() == std::vector<int>{0, 2, 5, 7});
    DyckPath r = reflect(p);
    CHECK(r.word() == "UUUUUUUUDUDDDUDDDDUDDDUUDD");
    CHECK(r.valleys() == std::vector<int>{7, 5, 2, 0});
    CHECK(reflect(r) == p);

    CHECK(reflect(parse_path("UD")).word() == "UD");
    for (int n = 0; n <= 8; ++n)
        for_each_dyck(n, [&](const DyckPath& q) { CHECK(reflect(reflect(q)) == q); });
}

TEST_CASE("run factorization recovers the maximal U/D runs") {
    RunFactorization runs = run_factorization(parse_path("UUUUDDUUUUUDUDDDDDDD"));
    CHECK(runs == RunFactorization{{4, 2}, {5, 1}, {1, 7}});
    CHECK(run_factorization(parse_path("UUDD")) == RunFactorization{{2, 2}});
    CHECK(run_factorization(parse_path("")).empty());

    // Reconstruction invariant on a mixed sample.
    for (const char* w : {"UDUD", "UUDUDD", "UUUDDDUD", "UDUUDD"}) {
        std::string rebuilt;
        for (auto [a, b] : run_factorization(parse_path(w))) {
            rebuilt.append(static_cast<std::size_t>(a), 'U');
            rebuilt.append(static_cast<std::size_t>(b), 'D');
        }
        CHECK(rebuilt == w);
    }
}
