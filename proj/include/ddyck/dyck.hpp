// Dyck paths and the d-restricted family: parsing, valley/peak statistics,
// enumeration, the closed-form count, reflection and run factorization.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ddyck/types.hpp"

namespace ddyck {

// A balanced U/D word that never dips below the axis. Valley and peak
// heights are computed once at construction; instances are immutable.
class DyckPath {
  public:
    // Validates the word; throws Error(BadCharacter | NotBalanced | DipsBelowAxis).
    explicit DyckPath(std::string word);

    const std::string& word() const { return word_; }
    int semilength() const { return static_cast<int>(word_.size() / 2); }

    // Heights of DU corners (valleys) and UD corners (peaks), left to right.
    const std::vector<int>& valleys() const { return valleys_; }
    const std::vector<int>& peaks() const { return peaks_; }

    bool operator==(const DyckPath& other) const { return word_ == other.word_; }

  private:
    std::string word_;
    std::vector<int> valleys_;
    std::vector<int> peaks_;
};

// Maximal-run decomposition U^{a_1}D^{b_1}...U^{a_m}D^{b_m}.
using RunFactorization = std::vector<std::pair<int, int>>;

DyckPath parse_path(const std::string& word);

// True iff the path has at most one valley or every consecutive valley pair
// rises by at least d. Any integer d is allowed; d very negative accepts
// every Dyck path.
bool is_d_dyck(const DyckPath& p, int d);

// Closed-form count of d-Dyck paths of semilength n, d >= 1 only (throws
// Error(UnsupportedD) otherwise; d = 0 is served by enumeration or the
// generating function). Sum over k of C(n-(d-1)(k-1), 2k); the upper limit
// floor((n+d-2)/d) is clamped to >= 0 so n=0 yields 1 (the empty path).
Int count_d_dyck(int n, int d);

// All Dyck paths of semilength n, lexicographic in the word with U < D.
void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit);

// All d-Dyck paths of semilength n, same order, generated directly with
// pruning on the valley condition (not by filtering).
void for_each_d_dyck(int n, int d, const std::function<void(const DyckPath&)>& visit);

Int catalan(int n);

// Word reversed with U and D swapped; an involution that reverses the
// valley vector.
DyckPath reflect(const DyckPath& p);

RunFactorization run_factorization(const DyckPath& p);

}  // namespace ddyck
