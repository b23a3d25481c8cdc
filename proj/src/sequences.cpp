#include "hvlab/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace hvlab {

HVector::HVector(std::vector<Nat> entries) : entries_(std::move(entries)) {
    while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
    if (entries_.empty()) throw DomainError("h-vector must be nonempty");
    if (entries_.front() != 1) throw DomainError("h-vector must start with 1");
    if (entries_.back() == 0) throw DomainError("h-vector must end with a positive entry");
}

HVector HVector::parse(std::string_view text) {
    std::vector<Nat> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (field.empty())
            throw DomainError("h-vector syntax: empty entry in '" + std::string(text) + "'");
        if (field.size() > 1 && field.front() == '0')
            throw DomainError("h-vector syntax: leading zero in '" + std::string(text) + "'");
        Nat value = 0;
        const char* first = field.data();
        const char* last = field.data() + field.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw DomainError("h-vector syntax: bad entry '" + std::string(field) + "'");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return HVector(std::move(entries));
}

std::string HVector::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    return out.str();
}

std::optional<unsigned> first_growth_violation(const std::vector<Nat>& row) {
    for (unsigned d = 1; d + 1 < row.size(); ++d) {
        const Nat bound = macaulay_next(row[d], d);
        if (row[d + 1] > bound) return d;
    }
    return std::nullopt;
}

std::optional<unsigned> first_growth_violation(const HVector& h) {
    return first_growth_violation(h.entries());
}

bool is_o_sequence(const HVector& h) {
    return !first_growth_violation(h).has_value();
}

bool is_symmetric(const HVector& h) {
    const auto& e = h.entries();
    for (std::size_t i = 0, j = e.size() - 1; i < j; ++i, --j)
        if (e[i] != e[j]) return false;
    return true;
}

HVector symmetric_candidate(unsigned socle_degree, Nat r, Nat h2) {
    if (r == 0 || h2 == 0) throw DomainError("symmetric_candidate: entries must be positive");
    if (socle_degree == 4) return HVector({1, r, h2, r, 1});
    if (socle_degree == 5) return HVector({1, r, h2, h2, r, 1});
    throw DomainError("symmetric_candidate: socle degree must be 4 or 5");
}

HVector trivial_extension(const HVector& level_h) {
    const unsigned e = level_h.socle_degree();
    std::vector<Nat> out;
    out.reserve(e + 2);
    out.push_back(1);
    for (unsigned i = 1; i <= e; ++i) {
        const Nat a = level_h[i];
        const Nat b = level_h[e + 1 - i];
        if (a > std::numeric_limits<Nat>::max() - b)
            throw ArithmeticOverflow("trivial_extension: entry exceeds the 64-bit range");
        out.push_back(a + b);
    }
    out.push_back(1);
    return HVector(std::move(out));
}

HVector compressed_level_candidate(Nat r, Nat type, unsigned socle_degree) {
    if (r == 0 || type == 0 || socle_degree == 0)
        throw DomainError("compressed_level_candidate: parameters must be positive");
    std::vector<Nat> out;
    out.reserve(socle_degree + 1);
    for (unsigned i = 0; i <= socle_degree; ++i) {
        const Nat full = binomial(r - 1 + i, static_cast<std::int64_t>(i));
        const Nat dual = binomial(r - 1 + socle_degree - i,
                                  static_cast<std::int64_t>(socle_degree - i));
        if (type != 0 && dual > std::numeric_limits<Nat>::max() / type)
            throw ArithmeticOverflow("compressed_level_candidate: entry exceeds the 64-bit range");
        out.push_back(std::min(full, type * dual));
    }
    return HVector(std::move(out));
}

std::vector<Nat> reverse_difference(const HVector& h, const HVector& quotient) {
    const unsigned e = h.socle_degree();
    if (quotient.socle_degree() != e)
        throw DomainError("level_decomposition_check: socle degrees differ");
    for (unsigned d = 0; d <= e; ++d)
        if (h[d] < quotient[d])
            throw DomainError("level_decomposition_check: quotient exceeds h in degree " +
                              std::to_string(d));
    if (h[e] - quotient[e] != 1)
        throw DomainError("level_decomposition_check: top-degree difference must be 1");
    std::vector<Nat> rd;
    rd.reserve(e);
    for (unsigned d = e; d >= 1; --d) rd.push_back(h[d] - quotient[d]);
    return rd;
}

bool level_decomposition_check(const HVector& h, const HVector& quotient) {
    return !first_growth_violation(reverse_difference(h, quotient)).has_value();
}

Nat variety_hf(VarietyKind kind, unsigned d) {
    switch (kind) {
        case VarietyKind::Line:
            return static_cast<Nat>(d) + 1;
        case VarietyKind::Conic:
            return binomial(d + 2, 2) - binomial(d, 2);
        case VarietyKind::Plane:
            return binomial(d + 2, 2);
        case VarietyKind::QuadricSurface:
            return binomial(d + 3, 3) - binomial(d + 1, 3);
    }
    throw DomainError("variety_hf: unknown variety");
}

VarietyKind section_lift(VarietyKind section) {
    switch (section) {
        case VarietyKind::Line: return VarietyKind::Plane;
        case VarietyKind::Conic: return VarietyKind::QuadricSurface;
        default: throw DomainError("section_lift: expected a line or conic section");
    }
}

std::string variety_name(VarietyKind kind) {
    switch (kind) {
        case VarietyKind::Line: return "line";
        case VarietyKind::Conic: return "conic";
        case VarietyKind::Plane: return "plane";
        case VarietyKind::QuadricSurface: return "quadric_surface";
    }
    throw DomainError("variety_name: unknown variety");
}

std::optional<VarietyKind> variety_from_name(std::string_view name) {
    if (name == "line") return VarietyKind::Line;
    if (name == "conic") return VarietyKind::Conic;
    if (name == "plane") return VarietyKind::Plane;
    if (name == "quadric_surface") return VarietyKind::QuadricSurface;
    return std::nullopt;
}

}  // namespace hvlab
