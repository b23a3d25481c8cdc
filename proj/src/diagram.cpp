#include "hvlab/diagram.hpp"

#include <algorithm>

namespace hvlab {

HVector Diagram::mid_candidate() const {
    return HVector(std::vector<Nat>(mid.begin() + 1, mid.end()));
}

namespace {

void check_enumeration_preconditions(const HVector& top) {
    if (top.socle_degree() < 3)
        throw DomainError("diagram enumeration needs socle degree >= 3");
    if (!is_symmetric(top)) throw DomainError("diagram enumeration needs a symmetric h-vector");
    if (top[top.socle_degree()] != 1)
        throw DomainError("diagram enumeration needs top socle dimension 1");
}

// Per-position bounds for the mid row: Green's bound caps the bot row from
// above, which bounds mid from below; bot >= 0 bounds mid from above.
struct MidBounds {
    std::vector<Nat> lo;  // indices 0..e
    std::vector<Nat> hi;
};

MidBounds mid_bounds(const HVector& top) {
    const unsigned e = top.socle_degree();
    MidBounds b;
    b.lo.assign(e + 1, 0);
    b.hi.assign(e + 1, 0);
    b.lo[0] = b.hi[0] = 0;
    for (unsigned d = 1; d <= e; ++d) {
        const Nat cap = green_restrict(top[d], d);
        b.lo[d] = top[d] > cap ? top[d] - cap : 0;
        b.hi[d] = top[d];
    }
    return b;
}

// Enumerates symmetric candidates M = (1, M_1, ..., M_{e-1}=1) whose mid row
// respects the bounds, ascending lexicographically, and calls f(M).
template <typename F>
void for_each_candidate(const HVector& top, F&& f) {
    const unsigned e = top.socle_degree();
    const MidBounds bounds = mid_bounds(top);
    if (bounds.lo[1] > 1 || bounds.hi[1] < 1) return;       // mid_1 = 1 infeasible
    if (bounds.lo[e] > top[e] || bounds.hi[e] < top[e]) return;  // mid_e = top_e forced

    const unsigned free_count = (e - 1) / 2;  // M_1 .. M_{(e-1)/2}
    std::vector<Nat> lo(free_count + 1, 0), hi(free_count + 1, 0);
    for (unsigned i = 1; i <= free_count; ++i) {
        // M_i occupies mid positions i+1 and e-i.
        lo[i] = std::max(bounds.lo[i + 1], bounds.lo[e - i]);
        hi[i] = std::min(bounds.hi[i + 1], bounds.hi[e - i]);
        if (lo[i] > hi[i]) return;
    }

    std::vector<Nat> m(free_count + 1, 0);
    auto emit = [&]() {
        std::vector<Nat> candidate(e, 0);
        candidate[0] = 1;
        candidate[e - 1] = top[e];
        for (unsigned i = 1; i <= free_count; ++i) {
            candidate[i] = m[i];
            candidate[e - 1 - i] = m[i];
        }
        f(HVector(std::move(candidate)));
    };
    // odometer over the free entries, most significant first
    unsigned level = 1;
    if (free_count == 0) {
        emit();
        return;
    }
    for (unsigned i = 1; i <= free_count; ++i) m[i] = lo[i];
    while (true) {
        emit();
        level = free_count;
        while (level >= 1 && m[level] == hi[level]) {
            m[level] = lo[level];
            --level;
        }
        if (level == 0) break;
        ++m[level];
    }
}

}  // namespace

std::vector<Nat> mid_row_of(const HVector& top, const HVector& candidate) {
    const unsigned e = top.socle_degree();
    if (candidate.socle_degree() != e - 1)
        throw DomainError("mid candidate must have socle degree one below the top row");
    std::vector<Nat> mid(e + 1, 0);
    for (unsigned d = 1; d <= e; ++d) mid[d] = candidate[d - 1];
    return mid;
}

std::vector<HVector> diagram_mid_candidates(const HVector& top) {
    check_enumeration_preconditions(top);
    std::vector<HVector> out;
    for_each_candidate(top, [&](HVector m) { out.push_back(std::move(m)); });
    return out;
}

std::vector<Diagram> enumerate_diagrams(const HVector& top) {
    check_enumeration_preconditions(top);
    const unsigned e = top.socle_degree();
    std::vector<Diagram> out;
    for_each_candidate(top, [&](const HVector& candidate) {
        if (!is_o_sequence(candidate)) return;
        std::vector<Nat> mid = mid_row_of(top, candidate);
        std::vector<Nat> bot(e + 1, 0);
        for (unsigned d = 0; d <= e; ++d) bot[d] = top[d] - mid[d];
        if (first_growth_violation(bot)) return;
        out.push_back({top, std::move(mid), std::move(bot)});
    });
    return out;
}

Nat detect_forced_socle(Nat h_below, Nat h_at, Nat h_above, unsigned d) {
    if (h_below == 0 || h_at == 0 || h_above == 0)
        throw DomainError("detect_forced_socle: values must be positive");
    const Nat prev = macaulay_prev(h_at, d);
    const Nat next = macaulay_next(h_at, d);
    if (prev <= h_below && next == h_above) return h_below - prev;
    return 0;
}

}  // namespace hvlab
