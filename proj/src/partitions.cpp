#include "ddyck/partitions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ddyck {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 0) throw Error(ErrorCode::InvalidPartition, "ground set size must be >= 0");
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    std::size_t covered = 0;
    for (std::vector<int>& b : blocks_) {
        if (b.empty()) throw Error(ErrorCode::InvalidPartition, "blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || x > n_)
                throw Error(ErrorCode::InvalidPartition,
                            "element " + std::to_string(x) + " outside 1.." + std::to_string(n_));
            if (seen[static_cast<std::size_t>(x)])
                throw Error(ErrorCode::InvalidPartition,
                            "element " + std::to_string(x) + " appears twice");
            seen[static_cast<std::size_t>(x)] = 1;
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n_))
        throw Error(ErrorCode::InvalidPartition, "blocks do not cover 1.." + std::to_string(n_));
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) { return x[0] < y[0]; });
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return blocks_ < o.blocks_;
}

ArcSet graph_representation(const SetPartition& p) {
    ArcSet arcs;
    for (const std::vector<int>& b : p.blocks())
        for (std::size_t i = 1; i < b.size(); ++i) arcs.emplace_back(b[i - 1], b[i]);
    return arcs;
}

bool is_non_crossing(const SetPartition& p) {
    ArcSet arcs = graph_representation(p);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            if (c < a) { std::swap(a, c); std::swap(b, d); }
            if (a < c && c < b && b < d) return false;
        }
    return true;
}

SetPartition phi(const DyckPath& p) {
    const std::string& w = p.word();
    std::vector<int> stack;
    std::vector<std::vector<int>> blocks;
    int label = 0;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == 'U') {
            stack.push_back(++label);
            ++i;
        } else {
            // One maximal D run closes one block.
            std::vector<int> block;
            while (i < w.size() && w[i] == 'D') {
                block.push_back(stack.back());
                stack.pop_back();
                ++i;
            }
            blocks.push_back(std::move(block));
        }
    }
    return SetPartition(p.semilength(), std::move(blocks));
}

DyckPath phi_inverse(const SetPartition& p) {
    // block_of[x] = index of x's block; close a block at its maximum.
    std::vector<int> block_of(static_cast<std::size_t>(p.n()) + 1, -1);
    for (std::size_t bi = 0; bi < p.blocks().size(); ++bi)
        for (int x : p.blocks()[bi]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(bi);
    std::string w;
    std::vector<int> stack;
    for (int x = 1; x <= p.n(); ++x) {
        w.push_back('U');
        stack.push_back(x);
        const std::vector<int>& b = p.blocks()[static_cast<std::size_t>(block_of[static_cast<std::size_t>(x)])];
        if (x == b.back()) {
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (stack.empty() || block_of[static_cast<std::size_t>(stack.back())] !=
                                         block_of[static_cast<std::size_t>(x)])
                    throw Error(ErrorCode::CrossingPartition,
                                "blocks interleave, partition is crossing");
                stack.pop_back();
                w.push_back('D');
            }
        }
    }
    return DyckPath(std::move(w));
}

SetPartition reverse_partition(const SetPartition& p) {
    std::vector<std::vector<int>> blocks = p.blocks();
    for (std::vector<int>& b : blocks)
        for (int& x : b) x = p.n() + 1 - x;
    return SetPartition(p.n(), std::move(blocks));
}

namespace {

// Shared block condition: every middle block B_i (1 < i < k, 1-based) has at
// least d elements exceeding max(B_{i+1}).
bool middle_blocks_ok(const SetPartition& p, int d) {
    const std::vector<std::vector<int>>& bs = p.blocks();
    for (std::size_t i = 1; i + 1 < bs.size(); ++i) {
        int next_max = bs[i + 1].back();
        long long above = 0;
        for (int x : bs[i])
            if (x > next_max) ++above;
        if (above < d) return false;
    }
    return true;
}

}  // namespace

bool is_ncd_member(const SetPartition& p, int d) {
    if (d < 1)
        throw Error(ErrorCode::UnsupportedD, "restricted non-crossing membership requires d >= 1");
    return is_non_crossing(p) && middle_blocks_ok(p, d);
}

bool is_restricted_partition(const SetPartition& p, int d) {
    if (d < 0) throw Error(ErrorCode::UnsupportedD, "restricted membership requires d >= 0");
    return middle_blocks_ok(p, d);
}

SetPartition d_dyck_to_ncd(const DyckPath& p, int d) {
    if (d < 1)
        throw Error(ErrorCode::UnsupportedD, "the path/partition bijection requires d >= 1");
    if (!is_d_dyck(p, d)) throw Error(ErrorCode::NotDDyck, "path is not d-Dyck for d = " + std::to_string(d));
    return reverse_partition(phi(reflect(p)));
}

DyckPath ncd_to_d_dyck(const SetPartition& p, int d) {
    if (!is_ncd_member(p, d))
        throw Error(ErrorCode::NotNcdMember,
                    "partition is not a restricted non-crossing member for d = " + std::to_string(d));
    return reflect(phi_inverse(reverse_partition(p)));
}

namespace {

void rgs(int n, int i, int blocks_used, std::vector<int>& assign,
         const std::function<void(const SetPartition&)>& visit) {
    if (i == n) {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(blocks_used));
        for (int x = 0; x < n; ++x) blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(x)])].push_back(x + 1);
        visit(SetPartition(n, std::move(blocks)));
        return;
    }
    for (int b = 0; b <= blocks_used; ++b) {
        assign[static_cast<std::size_t>(i)] = b;
        rgs(n, i + 1, std::max(blocks_used, b + 1), assign, visit);
    }
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    if (n <= 0) {
        visit(SetPartition(0, {}));
        return;
    }
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    rgs(n, 0, 0, assign, visit);
}

std::string serialize(const SetPartition& p) {
    std::string out = "[";
    for (std::size_t bi = 0; bi < p.blocks().size(); ++bi) {
        if (bi) out += ',';
        out += '[';
        for (std::size_t i = 0; i < p.blocks()[bi].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(p.blocks()[bi][i]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

Int bell_d(int n, int d) {
    if (d < 0) throw Error(ErrorCode::UnsupportedD, "restricted Bell numbers require d >= 0");
    // Operation-local memo keeps the function re-entrant; the recursion only
    // ever moves n downward.
    std::map<int, Int> memo;
    std::function<Int(int)> rec = [&](int m) -> Int {
        if (m <= 1) return 1;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (int k = 0; k <= m - 1; ++k) total += binomial(m - 1, k) * rec(k - d);
        memo.emplace(m, total);
        return total;
    };
    return rec(n);
}

}  // namespace ddyck
