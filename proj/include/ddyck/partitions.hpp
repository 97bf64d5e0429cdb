// Set partitions of [n]: canonical block form, arc diagrams and the
// crossing test, the D-run/U-label bijection with Dyck paths, reversal,
// restricted membership (with and without non-crossingness), enumeration,
// and the restricted Bell recurrence.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ddyck/dyck.hpp"
#include "ddyck/types.hpp"

namespace ddyck {

// Blocks kept sorted internally and ordered by minimum element, so block
// indices are well-defined (the membership conditions depend on them).
class SetPartition {
  public:
    // Accepts blocks in any order; sorts and validates (disjoint, nonempty,
    // union = {1..n}). Throws Error(InvalidPartition).
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator<(const SetPartition& o) const;  // for set-valued oracle comparisons

  private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// Arcs join numerically consecutive elements within each block; always
// exactly n - #blocks of them.
using ArcSet = std::vector<std::pair<int, int>>;

ArcSet graph_representation(const SetPartition& p);

// True iff no two arcs interleave as a < c < b < d.
bool is_non_crossing(const SetPartition& p);

// Label the U steps 1..n left to right; each maximal D run closes its
// stack-matched U steps, whose labels form one block.
SetPartition phi(const DyckPath& p);

// Inverse: emit U for 1..n, and at each block maximum emit that block's D
// run. A stack mismatch while closing is exactly a crossing; throws
// Error(CrossingPartition).
DyckPath phi_inverse(const SetPartition& p);

// Element map l -> n+1-l, blocks recanonicalized; an involution.
SetPartition reverse_partition(const SetPartition& p);

// Membership in NC_d (d >= 1): non-crossing, and every middle block B_i
// (1 < i < k) has at least d elements above max(B_{i+1}).
bool is_ncd_member(const SetPartition& p, int d);

// Same block condition without the non-crossing requirement (d >= 0).
bool is_restricted_partition(const SetPartition& p, int d);

// reverse . phi . reflect and its inverse; the semilength-preserving
// bijection between d-Dyck paths and NC_d (d >= 1). Throw Error(NotDDyck) /
// Error(NotNcdMember) when the argument is outside the family.
SetPartition d_dyck_to_ncd(const DyckPath& p, int d);
DyckPath ncd_to_d_dyck(const SetPartition& p, int d);

// All B(n) set partitions, in restricted-growth-string order.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);

// Compact wire form, blocks in canonical order: [[1,2],[3,12,13],[6]]
std::string serialize(const SetPartition& p);

// Restricted Bell number by the recurrence
// B_d(n) = sum_{k=0}^{n-1} C(n-1,k) B_d(k-d), with B_d(m) = 1 for m <= 1.
Int bell_d(int n, int d);

}  // namespace ddyck
