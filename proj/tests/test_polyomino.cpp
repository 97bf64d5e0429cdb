#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ddyck/polyomino.hpp"

using namespace ddyck;

TEST_CASE("altitude vectors are validated on construction") {
    CHECK(Dccp({0}, {1}).area() == 1);
    CHECK(Dccp({0, 0, 2, 5}, {2, 4, 7, 6}).area() == 12);

    CHECK_THROWS_AS(Dccp({}, {}), Error);                  // no columns
    CHECK_THROWS_AS(Dccp({1}, {2}), Error);                // first column must start at 0
    CHECK_THROWS_AS(Dccp({0, 0}, {2}), Error);             // length mismatch
    CHECK_THROWS_AS(Dccp({0, 1}, {2, 1}), Error);          // empty second column
    CHECK_THROWS_AS(Dccp({0, 2, 1}, {3, 3, 3}), Error);    // decreasing tail
    CHECK_THROWS_AS(Dccp({0, 2}, {2, 4}), Error);          // columns share no edge
    CHECK_THROWS_AS(Dccp({0, -1}, {2, 4}), Error);         // negative altitude
    try {
        Dccp({0, 2}, {2, 4});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidPolyomino);
    }
}

TEST_CASE("the d-restriction exempts the first gap and short polyominoes") {
    CHECK(is_d_restricted(Dccp({0, 0, 2, 4}, {2, 3, 5, 6}), 2));
    CHECK_FALSE(is_d_restricted(Dccp({0, 0, 1, 4}, {2, 3, 5, 6}), 2));
    CHECK(is_d_restricted(Dccp({0}, {3}), 100));
    CHECK(is_d_restricted(Dccp({0, 0}, {2, 3}), 100));  // two columns, first gap exempt
}

TEST_CASE("paths and polyominoes exchange valley/peak data") {
    // Valleys (0,2,5), peaks (2,4,7,6).
    DyckPath p = parse_path("UUDDUUUUDDUUUUUDDUDDDDDD");
    Dccp q = path_to_polyomino(p);
    CHECK(q.a() == std::vector<int>{0, 0, 2, 5});
    CHECK(q.b() == std::vector<int>{2, 4, 7, 6});
    CHECK(q.area() == p.semilength());
    CHECK(polyomino_to_path(q) == p);

    Dccp single = path_to_polyomino(parse_path("UD"));
    CHECK(single.a() == std::vector<int>{0});
    CHECK(single.b() == std::vector<int>{1});

    // Descending valleys (2,0) have no image.
    CHECK_THROWS_AS(path_to_polyomino(parse_path("UUUDUDDDUD")), Error);
    // Nor does the empty path.
    CHECK_THROWS_AS(path_to_polyomino(parse_path("")), Error);
}

TEST_CASE("roundtrip holds across the enumerated families") {
    for (int d = 0; d <= 3; ++d)
        for (int n = 1; n <= 8; ++n)
            for_each_d_polyomino(n, d, [&](const Dccp& q) {
                CHECK(q.area() == n);
                CHECK(is_d_restricted(q, d));
                CHECK(path_to_polyomino(polyomino_to_path(q)) == q);
            });
}

TEST_CASE("enumeration counts match the path family") {
    Int c = 0;
    for_each_d_polyomino(5, 2, [&](const Dccp&) { ++c; });
    CHECK(c == 12);

    c = 0;
    for_each_d_polyomino(1, 7, [&](const Dccp& q) {
        ++c;
        CHECK(q.area() == 1);
    });
    CHECK(c == 1);

    // Area 7, d = 2, exactly three columns: the classic 15-member family.
    Int three_col = 0;
    for_each_d_polyomino(7, 2, [&](const Dccp& q) {
        if (q.columns() == 3) ++three_col;
    });
    CHECK(three_col == 15);
}

TEST_CASE("internal path length is column + altitude + 1") {
    Dccp q({0, 0, 2, 5}, {2, 4, 7, 6});
    CHECK(ipl(q, CellCoord{0, 0}) == 1);
    CHECK(ipl(q, CellCoord{1, 3}) == 5);
    CHECK(ipl(q, CellCoord{3, 5}) == 9);
    CHECK(tipl(q) == 61);

    CHECK_THROWS_AS(ipl(q, CellCoord{0, 2}), Error);   // above column 1
    CHECK_THROWS_AS(ipl(q, CellCoord{3, 4}), Error);   // below column 4
    CHECK_THROWS_AS(ipl(q, CellCoord{4, 0}), Error);   // no such column
    try {
        ipl(q, CellCoord{4, 0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CellNotInPolyomino);
    }

    // A single column of height m totals 1 + 2 + ... + m.
    for (int m : {1, 2, 7, 50}) CHECK(tipl(Dccp({0}, {m})) == Int(m) * (m + 1) / 2);

    // Both area-2 polyominoes weigh 3.
    CHECK(tipl(Dccp({0}, {2})) == 3);
    CHECK(tipl(Dccp({0, 0}, {1, 1})) == 3);
}

TEST_CASE("breadth-first search agrees with the closed form cell by cell") {
    for (int d : {0, 2})
        for (int n = 1; n <= 6; ++n)
            for_each_d_polyomino(n, d, [&](const Dccp& q) {
                for (int col = 0; col < q.columns(); ++col)
                    for (int alt = q.a()[col]; alt < q.b()[col]; ++alt) {
                        CellCoord c{col, alt};
                        CHECK(ipl(q, c) == ipl_bfs(q, c));
                    }
            });
}

TEST_CASE("total path length sums match the pinned values") {
    CHECK(total_tipl(1, 2) == 1);
    CHECK(total_tipl(2, 2) == 6);
    CHECK(total_tipl(5, 2) == 165);
    CHECK(total_tipl(8, 2) == 2081);
    CHECK(total_tipl(0, 2) == 0);
}

TEST_CASE("wire serialization is compact and canonical") {
    CHECK(serialize(Dccp({0, 0, 2, 5}, {2, 4, 7, 6})) == "{\"a\":[0,0,2,5],\"b\":[2,4,7,6]}");
    CHECK(serialize(Dccp({0}, {1})) == "{\"a\":[0],\"b\":[1]}");
}
