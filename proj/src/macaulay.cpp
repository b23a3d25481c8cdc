#include "hvlab/macaulay.hpp"

#include <limits>
#include <sstream>

namespace hvlab {

namespace {

using u128 = unsigned __int128;

constexpr Nat kNatMax = std::numeric_limits<Nat>::max();

// C(n,k) for 0 <= k <= n, capped: returns cap+1 as soon as the exact value
// exceeds cap. Never throws; used to probe greedy tops without tripping the
// overflow contract.
Nat binomial_capped(Nat n, Nat k, Nat cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 acc = 1;
    for (Nat i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: partial products are C(n-k+i, i)
        if (acc > cap) return cap == kNatMax ? kNatMax : cap + 1;
    }
    return static_cast<Nat>(acc);
}

}  // namespace

Nat binomial(Nat n, std::int64_t k) {
    if (k < 0) return 0;
    const Nat kk = static_cast<Nat>(k);
    if (kk > n) return 0;
    const Nat v = binomial_capped(n, kk, kNatMax);
    if (v == kNatMax && binomial_capped(n, kk, kNatMax - 1) == kNatMax) {
        std::ostringstream msg;
        msg << "binomial(" << n << "," << k << ") exceeds the 64-bit range";
        throw ArithmeticOverflow(msg.str());
    }
    return v;
}

std::string BinomialExpansion::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << '+';
        out << "C(" << terms[i].top << ',' << terms[i].bottom << ')';
    }
    return out.str();
}

BinomialExpansion macaulay_rep(Nat n, unsigned d) {
    if (n == 0) throw DomainError("macaulay_rep: n must be positive");
    if (d == 0) throw DomainError("macaulay_rep: degree must be positive");
    BinomialExpansion rep;
    rep.target_degree = d;
    Nat remaining = n;
    Nat prev_top = kNatMax;
    for (unsigned bottom = d; remaining > 0; --bottom) {
        // largest top with C(top, bottom) <= remaining; C(bottom,bottom)=1
        // guarantees one exists.
        Nat top = bottom;
        while (top + 1 < prev_top && binomial_capped(top + 1, bottom, remaining) <= remaining)
            ++top;
        remaining -= binomial_capped(top, bottom, remaining);
        rep.terms.push_back({top, bottom});
        prev_top = top;
        if (bottom == 1) break;
    }
    if (remaining != 0)
        throw DomainError("macaulay_rep: expansion did not terminate");  // unreachable
    return rep;
}

Nat expansion_value(const BinomialExpansion& e) {
    return shifted_value(e, 0, 0);
}

Nat shifted_value(const BinomialExpansion& e, int bottom_shift, int top_shift) {
    Nat sum = 0;
    for (const BinomialTerm& t : e.terms) {
        const std::int64_t c = static_cast<std::int64_t>(t.bottom) + bottom_shift;
        std::int64_t m;
        if (top_shift < 0 && t.top < static_cast<Nat>(-static_cast<std::int64_t>(top_shift))) {
            m = -1;  // negative top: zero by convention
        } else {
            if (top_shift > 0 && t.top > kNatMax - static_cast<Nat>(top_shift))
                throw ArithmeticOverflow("shifted_value: shifted top exceeds the 64-bit range");
            m = static_cast<std::int64_t>(t.top + top_shift);
        }
        Nat term = 0;
        if (m >= 0 && c <= m) term = binomial(static_cast<Nat>(m), c);
        if (term > kNatMax - sum)
            throw ArithmeticOverflow("shifted_value: sum exceeds the 64-bit range");
        sum += term;
    }
    return sum;
}

Nat macaulay_next(Nat n, unsigned d) {
    if (d == 0) throw DomainError("macaulay_next: degree must be positive");
    if (n == 0) return 0;
    return shifted_value(macaulay_rep(n, d), +1, +1);
}

Nat macaulay_prev(Nat n, unsigned d) {
    if (d == 0) throw DomainError("macaulay_prev: degree must be positive");
    if (n == 0) return 0;
    return shifted_value(macaulay_rep(n, d), -1, -1);
}

Nat green_restrict(Nat n, unsigned d) {
    if (d == 0) throw DomainError("green_restrict: degree must be positive");
    if (n == 0) return 0;
    return shifted_value(macaulay_rep(n, d), 0, -1);
}

Nat gotzmann_persistence(Nat n, unsigned d, unsigned s) {
    if (d == 0) throw DomainError("gotzmann_persistence: degree must be positive");
    if (s == 0) throw DomainError("gotzmann_persistence: shift must be positive");
    if (n == 0) return 0;
    if (s > static_cast<unsigned>(std::numeric_limits<int>::max()))
        throw DomainError("gotzmann_persistence: shift too large");
    const int shift = static_cast<int>(s);
    return shifted_value(macaulay_rep(n, d), shift, shift);
}

}  // namespace hvlab
