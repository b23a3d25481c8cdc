#pragma once

#include "hvlab/certificate.hpp"

namespace hvlab {

struct ClassificationCell {
    Nat r = 0;
    Nat h2 = 0;
    Status status = Status::Open;
    std::string provenance;
};

struct ClassificationTable {
    unsigned socle_degree = 0;
    Nat max_codimension = 0;
    std::optional<Nat> min_nonunimodal_codimension;
    std::vector<ClassificationCell> cells;  // r ascending, h2 ascending

    std::size_t count(Status s) const;
    bool has_open_cells() const;
};

/// Status of every symmetric candidate (r, h2), 1 <= r <= max_codimension,
/// 1 <= h2 <= C(r+1,2): seeds the fact base, runs the shipped plans, closes
/// under the derivation rules (bound max(30, max_codimension)) and queries
/// status_of. Also reports the least codimension with a nonunimodal
/// Gorenstein cell.
ClassificationTable classify(unsigned socle_degree, Nat max_codimension, const FactSet& seeds,
                             const std::vector<CasePlan>& plans);

std::string render_table(const ClassificationTable& table);
std::string render_json(const ClassificationTable& table);
std::string render_csv(const ClassificationTable& table);

}  // namespace hvlab
