#pragma once

#include "hvlab/factbase.hpp"

#include <vector>

namespace hvlab {

/// Three-row decomposition of a symmetric h-vector `top` of socle degree e:
///   top = mid + bot pointwise,
///   mid = a Gorenstein candidate shifted up one degree
///         (mid_0 = 0, mid_1 = 1, mid_e = top_e; (mid_1..mid_e) symmetric),
///   bot = the hyperplane restriction row
///         (bot_d <= green_restrict(top_d, d); bot is an O-sequence).
struct Diagram {
    HVector top;
    std::vector<Nat> mid;  // length e+1
    std::vector<Nat> bot;  // length e+1

    /// The Gorenstein candidate carried by the middle row: (mid_1, ..., mid_e).
    HVector mid_candidate() const;
};

/// All diagrams over `top` satisfying every Diagram invariant, with the
/// middle candidate additionally required to be a symmetric O-sequence.
/// Deterministic lexicographic order on the mid row. Requires top symmetric
/// with top_e = 1 and e >= 3.
std::vector<Diagram> enumerate_diagrams(const HVector& top);

/// The relaxed candidate set behind refute_by_enumeration: every symmetric
/// middle candidate within the Green lower bounds and 0 <= bot, with no
/// O-sequence requirements on either row. Same order as enumerate_diagrams.
std::vector<HVector> diagram_mid_candidates(const HVector& top);

/// Row completion: the mid row (0, 1, M_1, ..., M_{e-1}) of a candidate M.
std::vector<Nat> mid_row_of(const HVector& top, const HVector& candidate);

/// Socle dimension forced by maximal growth: alpha = h_below -
/// macaulay_prev(h_at, d) when macaulay_prev(h_at, d) <= h_below and
/// macaulay_next(h_at, d) = h_above; otherwise 0 (no conclusion).
Nat detect_forced_socle(Nat h_below, Nat h_at, Nat h_above, unsigned d);

}  // namespace hvlab
