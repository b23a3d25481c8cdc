#pragma once

#include "hvlab/macaulay.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hvlab {

/// h-vector of an artinian standard graded algebra: entry 0 is 1, all
/// entries are nonnegative, trailing zeros are stripped on construction so
/// the last entry is positive. Internal zeros are legal (bottom rows of
/// diagrams end in forced zeros, and their tails show up here).
class HVector {
public:
    HVector() : entries_{1} {}  // the h-vector of the ground field
    explicit HVector(std::vector<Nat> entries);

    /// Parses the canonical comma-separated form, e.g. "1,12,11,12,1".
    /// Whitespace and leading zeros are rejected: the text is used as a
    /// canonical key for facts and certificates.
    static HVector parse(std::string_view text);

    unsigned socle_degree() const { return static_cast<unsigned>(entries_.size() - 1); }
    Nat codimension() const { return entries_.size() > 1 ? entries_[1] : 0; }
    Nat operator[](unsigned degree) const { return entries_.at(degree); }
    Nat value_or_zero(unsigned degree) const {
        return degree < entries_.size() ? entries_[degree] : 0;
    }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Nat>& entries() const { return entries_; }
    std::string to_string() const;

    friend bool operator==(const HVector&, const HVector&) = default;
    friend bool operator<(const HVector& a, const HVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Nat> entries_;
};

/// First degree d >= 1 with row[d+1] > macaulay_next(row[d], d), under the
/// convention that all bounds on 0 are 0 (so a positive entry after a zero
/// is itself a violation). Empty when the row is an O-sequence.
std::optional<unsigned> first_growth_violation(const std::vector<Nat>& row);
std::optional<unsigned> first_growth_violation(const HVector& h);

bool is_o_sequence(const HVector& h);
bool is_symmetric(const HVector& h);

/// Builder for the symmetric candidates (1,r,h2,r,1) and (1,r,h2,h2,r,1).
/// socle_degree must be 4 or 5.
HVector symmetric_candidate(unsigned socle_degree, Nat r, Nat h2);

/// Gorenstein h-vector of socle degree e+1 obtained from a level h-vector
/// of socle degree e: g_i = h_i + h_{e+1-i} for 1 <= i <= e, g_0 = g_{e+1} = 1.
/// Levelness of the input is not checked here; it is a provenance attribute
/// of the fact base.
HVector trivial_extension(const HVector& level_h);

/// Candidate level h-vector h_i = min(C(r-1+i, i), t*C(r-1+e-i, e-i)).
HVector compressed_level_candidate(Nat r, Nat type, unsigned socle_degree);

/// Decomposition test for a level h-vector against a level quotient of type
/// one less and the same socle degree: the reverse of the difference,
/// (h_e - q_e, h_{e-1} - q_{e-1}, ..., h_1 - q_1), must be an O-sequence.
/// Preconditions (equal socle degrees, h >= q pointwise, h_e - q_e = 1) are
/// rejected with DomainError. Returns false when the decomposition is
/// arithmetically impossible.
bool level_decomposition_check(const HVector& h, const HVector& quotient);

/// Reverse difference used by level_decomposition_check, exposed for
/// reporting (certificates inline it).
std::vector<Nat> reverse_difference(const HVector& h, const HVector& quotient);

enum class VarietyKind { Line, Conic, Plane, QuadricSurface };

/// Hilbert function of the variety's coordinate ring in degree d:
/// line d+1, conic C(d+2,2)-C(d,2), plane C(d+2,2),
/// quadric surface C(d+3,3)-C(d+1,3).
Nat variety_hf(VarietyKind kind, unsigned d);

/// Hyperplane sections lift: a line section comes from a plane, a conic
/// section from a quadric surface.
VarietyKind section_lift(VarietyKind section);

std::string variety_name(VarietyKind kind);
std::optional<VarietyKind> variety_from_name(std::string_view name);

}  // namespace hvlab
