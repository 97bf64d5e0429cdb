// Shared scalar type and error taxonomy for the ddyck library.
#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddyck {

// Counts and coefficients overflow 64 bits quickly (Bell numbers, series
// tails), so everything countable is a cpp_int.
using Int = boost::multiprecision::cpp_int;

enum class ErrorCode {
    BadCharacter,         // path word contains something other than 'U'/'D'
    NotBalanced,          // unequal numbers of U and D steps
    DipsBelowAxis,        // some prefix has more D than U
    UnsupportedD,         // d outside the domain of the requested operation
    NotNonDecreasing,     // path has a descending valley pair (no polyomino image)
    InvalidPolyomino,     // altitude vectors violate the column invariants
    CellNotInPolyomino,   // cell coordinate outside the column range
    NonUnitConstantTerm,  // series expansion needs a +-1 denominator constant
    InvalidPartition,     // blocks fail the partition-of-[n] invariants
    CrossingPartition,    // arc diagram has a crossing where none is allowed
    NotDDyck,             // path fails the d-restriction
    NotNcdMember,         // partition fails restricted non-crossing membership
};

// Single exception type: callers that care about the reason switch on code(),
// everyone else just sees what().
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// C(a,b) with the zero-extension used throughout: 0 whenever b < 0, a < 0 or
// b > a, and C(a,0) = 1 for a >= 0.
Int binomial(long long a, long long b);

}  // namespace ddyck
