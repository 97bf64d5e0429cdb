// Directed column-convex polyominoes encoded by altitude vectors, the
// d-restriction, the bijection with non-decreasing Dyck paths, and internal
// path length (closed form + BFS oracle).
#pragma once

#include <functional>
#include <vector>

#include "ddyck/dyck.hpp"
#include "ddyck/types.hpp"

namespace ddyck {

// Column i (1-based) occupies rows a_i .. b_i - 1; a_1 = 0 anchors the
// origin cell at (column 0, altitude 0).
class Dccp {
  public:
    // Validates: k >= 1, a_1 = 0, b_i > a_i, a_2 >= 0, a_2 <= ... <= a_k,
    // and a_{i+1} < b_i (consecutive columns share an edge). Throws
    // Error(InvalidPolyomino).
    Dccp(std::vector<int> initial, std::vector<int> final);

    const std::vector<int>& a() const { return a_; }
    const std::vector<int>& b() const { return b_; }
    int columns() const { return static_cast<int>(a_.size()); }
    int area() const;

    bool operator==(const Dccp& other) const { return a_ == other.a_ && b_ == other.b_; }

  private:
    std::vector<int> a_, b_;
};

struct CellCoord {
    int column;    // 0-based
    int altitude;  // row index, a[column] <= altitude < b[column]
};

bool is_d_restricted(const Dccp& p, int d);

// A = (0, valleys...), B = peaks. Requires a nonempty path with
// non-decreasing valleys (throws Error(NotNonDecreasing), or
// Error(InvalidPolyomino) for the empty path).
Dccp path_to_polyomino(const DyckPath& p);
DyckPath polyomino_to_path(const Dccp& q);

// All d-restricted polyominoes of area n (d >= 0), via the path bijection;
// yields nothing at n = 0.
void for_each_d_polyomino(int n, int d, const std::function<void(const Dccp&)>& visit);

// Internal path length of a cell: column + altitude + 1 (origin cell = 1).
// Directedness makes this the exact minimum number of cells on a north/east
// walk from the origin. Throws Error(CellNotInPolyomino).
int ipl(const Dccp& q, const CellCoord& c);

// Same value computed by breadth-first search over north/east cell moves;
// the independent check on the closed form.
int ipl_bfs(const Dccp& q, const CellCoord& c);

Int tipl(const Dccp& q);

// Sum of tipl over every d-restricted polyomino of area n.
Int total_tipl(int n, int d);

// Compact wire form: {"a":[0,0,2,5],"b":[2,4,7,6]}
std::string serialize(const Dccp& q);

}  // namespace ddyck
