#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvlab {

/// All Hilbert-function arithmetic is exact unsigned 64-bit. Overflow is a
/// hard error, never a wraparound: a wrapped value would poison every
/// certificate downstream.
using Nat = std::uint64_t;

struct ArithmeticOverflow : std::overflow_error {
    explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// One term C(top, bottom) of a binomial expansion.
struct BinomialTerm {
    Nat top = 0;
    unsigned bottom = 0;
    friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// The d-binomial expansion of a positive integer n:
///   n = C(n_d, d) + C(n_{d-1}, d-1) + ... + C(n_j, j)
/// with n_d > n_{d-1} > ... > n_j >= j >= 1 and consecutive descending
/// bottoms. Such an expansion exists and is unique; macaulay_rep builds it
/// greedily and the test suite checks uniqueness against an exhaustive
/// search oracle.
struct BinomialExpansion {
    std::vector<BinomialTerm> terms;
    unsigned target_degree = 0;

    std::string to_string() const;  // "C(5,3)+C(2,2)+C(1,1)"
    friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

/// Exact binomial coefficient with the zero convention: C(m,c) = 0 whenever
/// c < 0 or m < c. Throws ArithmeticOverflow if the value does not fit in
/// 64 bits.
Nat binomial(Nat n, std::int64_t k);

/// Greedy d-binomial expansion of n. Requires n >= 1 and d >= 1.
BinomialExpansion macaulay_rep(Nat n, unsigned d);

/// Sum of the expansion's terms; inverse of macaulay_rep.
Nat expansion_value(const BinomialExpansion& e);

/// The shifted sum: each C(top, bottom) becomes C(top + top_shift,
/// bottom + bottom_shift), terms evaluated under the zero convention.
Nat shifted_value(const BinomialExpansion& e, int bottom_shift, int top_shift);

/// Maximal admissible Hilbert-function value in degree d+1 given value n in
/// degree d (shift +1/+1). By convention all bounds on n = 0 are 0.
Nat macaulay_next(Nat n, unsigned d);

/// Forced value in degree d-1 under maximal growth (shift -1/-1).
Nat macaulay_prev(Nat n, unsigned d);

/// Upper bound for the restriction to a general hyperplane (shift 0/-1).
Nat green_restrict(Nat n, unsigned d);

/// Value forced in degree d+s after maximal growth from degree d with no
/// new generators (shift +s/+s). Requires s >= 1.
Nat gotzmann_persistence(Nat n, unsigned d, unsigned s);

}  // namespace hvlab
