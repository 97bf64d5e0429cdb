#include "ddyck/polyomino.hpp"

#include <deque>
#include <map>
#include <string>

namespace ddyck {

Dccp::Dccp(std::vector<int> initial, std::vector<int> final)
    : a_(std::move(initial)), b_(std::move(final)) {
    if (a_.empty() || a_.size() != b_.size())
        throw Error(ErrorCode::InvalidPolyomino,
                    "altitude vectors must be nonempty and of equal length");
    if (a_[0] != 0)
        throw Error(ErrorCode::InvalidPolyomino, "first initial altitude must be 0");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (b_[i] <= a_[i])
            throw Error(ErrorCode::InvalidPolyomino,
                        "column " + std::to_string(i + 1) + " is empty (b <= a)");
        if (i >= 1 && a_[i] < 0)
            throw Error(ErrorCode::InvalidPolyomino, "initial altitudes must be >= 0");
        if (i >= 2 && a_[i] < a_[i - 1])
            throw Error(ErrorCode::InvalidPolyomino,
                        "initial altitudes must be non-decreasing from the second column");
        if (i >= 1 && a_[i] >= b_[i - 1])
            throw Error(ErrorCode::InvalidPolyomino,
                        "columns " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            " share no edge");
    }
}

int Dccp::area() const {
    int total = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) total += b_[i] - a_[i];
    return total;
}

bool is_d_restricted(const Dccp& p, int d) {
    const std::vector<int>& a = p.a();
    // One or two columns always qualify; otherwise every gap from the second
    // column on must be at least d (the a_2 - a_1 gap is exempt).
    for (std::size_t i = 2; i < a.size(); ++i)
        if (a[i] - a[i - 1] < d) return false;
    return true;
}

Dccp path_to_polyomino(const DyckPath& p) {
    if (p.semilength() == 0)
        throw Error(ErrorCode::InvalidPolyomino, "the empty path has no polyomino image");
    const std::vector<int>& v = p.valleys();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1])
            throw Error(ErrorCode::NotNonDecreasing,
                        "path has a descending valley pair, no polyomino image");
    std::vector<int> a;
    a.reserve(v.size() + 1);
    a.push_back(0);
    a.insert(a.end(), v.begin(), v.end());
    return Dccp(std::move(a), p.peaks());
}

DyckPath polyomino_to_path(const Dccp& q) {
    // Inverse of A = (0, valleys), B = peaks: climb to each peak, descend to
    // the next valley, finish on the axis.
    std::string w;
    int height = 0;
    for (int i = 0; i < q.columns(); ++i) {
        int peak = q.b()[i];
        int next = (i + 1 < q.columns()) ? q.a()[i + 1] : 0;
        w.append(static_cast<std::size_t>(peak - height), 'U');
        w.append(static_cast<std::size_t>(peak - next), 'D');
        height = next;
    }
    return DyckPath(std::move(w));
}

void for_each_d_polyomino(int n, int d, const std::function<void(const Dccp&)>& visit) {
    if (d < 0)
        throw Error(ErrorCode::UnsupportedD, "polyomino enumeration requires d >= 0");
    for_each_d_dyck(n, d, [&](const DyckPath& p) {
        if (p.semilength() > 0) visit(path_to_polyomino(p));
    });
}

namespace {

void check_cell(const Dccp& q, const CellCoord& c) {
    if (c.column < 0 || c.column >= q.columns() || c.altitude < q.a()[c.column] ||
        c.altitude >= q.b()[c.column])
        throw Error(ErrorCode::CellNotInPolyomino,
                    "no cell at column " + std::to_string(c.column) + ", altitude " +
                        std::to_string(c.altitude));
}

}  // namespace

int ipl(const Dccp& q, const CellCoord& c) {
    check_cell(q, c);
    return c.column + c.altitude + 1;
}

int ipl_bfs(const Dccp& q, const CellCoord& c) {
    check_cell(q, c);
    // Plain BFS over cells with north/east moves, distances counted in cells
    // entered (origin = 1).
    std::map<std::pair<int, int>, int> dist;
    std::deque<std::pair<int, int>> queue;
    dist[{0, 0}] = 1;
    queue.push_back({0, 0});
    while (!queue.empty()) {
        auto [col, alt] = queue.front();
        queue.pop_front();
        int here = dist[{col, alt}];
        if (col == c.column && alt == c.altitude) return here;
        std::pair<int, int> steps[2] = {{col, alt + 1}, {col + 1, alt}};
        for (auto [ncol, nalt] : steps) {
            if (ncol >= q.columns() || nalt < q.a()[ncol] || nalt >= q.b()[ncol]) continue;
            if (dist.emplace(std::make_pair(ncol, nalt), here + 1).second)
                queue.push_back({ncol, nalt});
        }
    }
    throw Error(ErrorCode::CellNotInPolyomino, "cell unreachable from the origin");
}

std::string serialize(const Dccp& q) {
    auto list = [](const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    return "{\"a\":" + list(q.a()) + ",\"b\":" + list(q.b()) + "}";
}

Int tipl(const Dccp& q) {
    Int total = 0;
    for (int col = 0; col < q.columns(); ++col)
        for (int alt = q.a()[col]; alt < q.b()[col]; ++alt)
            total += ipl(q, CellCoord{col, alt});
    return total;
}

Int total_tipl(int n, int d) {
    Int total = 0;
    for_each_d_polyomino(n, d, [&](const Dccp& q) { total += tipl(q); });
    return total;
}

}  // namespace ddyck
