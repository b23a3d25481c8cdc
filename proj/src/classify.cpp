#include "hvlab/classify.hpp"

#include <algorithm>
#include <sstream>

namespace hvlab {

namespace {

std::string cell_provenance(const FactSet& fs, const HVector& h, Status status) {
    if (status == Status::NotOSequence) {
        if (auto rec = fs.find(h); rec && rec->provenance) return rec->provenance->to_string();
        const auto d = first_growth_violation(h);
        return "macaulay-violation:degree-" + std::to_string(d ? *d : 0);
    }
    if (auto rec = fs.find(h); rec && rec->provenance) return rec->provenance->to_string();
    if (status == Status::Gorenstein) return "citation:\"are Gorenstein in socle degrees\"";
    return "none";
}

}  // namespace

std::size_t ClassificationTable::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(),
                      [&](const ClassificationCell& c) { return c.status == s; }));
}

bool ClassificationTable::has_open_cells() const { return count(Status::Open) > 0; }

ClassificationTable classify(unsigned socle_degree, Nat max_codimension, const FactSet& seeds,
                             const std::vector<CasePlan>& plans) {
    if (socle_degree != 4 && socle_degree != 5)
        throw DomainError("classify: socle degree must be 4 or 5");
    if (max_codimension == 0) throw DomainError("classify: max codimension must be positive");

    const Nat bound = std::max<Nat>(30, max_codimension);
    FactSet fs = apply_closure(seeds, bound);
    // Plans of either socle degree feed the table: the socle-degree-5
    // refutations lean on socle-degree-4 facts.
    for (const CasePlan& plan : plans) {
        const Certificate cert = run_case_plan(plan, fs);
        fs = add_fact(fs, {cert.target(), Status::NotGorenstein,
                           Provenance::certificate(plan.id)});
    }
    fs = apply_closure(fs, bound);

    ClassificationTable table;
    table.socle_degree = socle_degree;
    table.max_codimension = max_codimension;
    for (Nat r = 1; r <= max_codimension; ++r) {
        const Nat cap = binomial(r + 1, 2);
        for (Nat h2 = 1; h2 <= cap; ++h2) {
            const HVector h = symmetric_candidate(socle_degree, r, h2);
            const Status status = status_of(fs, h);
            table.cells.push_back({r, h2, status, cell_provenance(fs, h, status)});
            if (status == Status::Gorenstein && h2 < r &&
                (!table.min_nonunimodal_codimension || r < *table.min_nonunimodal_codimension))
                table.min_nonunimodal_codimension = r;
        }
    }
    return table;
}

std::string render_table(const ClassificationTable& table) {
    std::ostringstream out;
    out << "socle degree " << table.socle_degree << ", codimension 1.."
        << table.max_codimension << "\n";
    out << "min nonunimodal Gorenstein codimension: ";
    if (table.min_nonunimodal_codimension)
        out << *table.min_nonunimodal_codimension << "\n";
    else
        out << "none\n";
    // one line per codimension, runs of equal status compressed
    std::size_t i = 0;
    while (i < table.cells.size()) {
        const Nat r = table.cells[i].r;
        out << "r=" << r << ":";
        while (i < table.cells.size() && table.cells[i].r == r) {
            const Status s = table.cells[i].status;
            const Nat from = table.cells[i].h2;
            Nat to = from;
            while (i + 1 < table.cells.size() && table.cells[i + 1].r == r &&
                   table.cells[i + 1].status == s) {
                ++i;
                to = table.cells[i].h2;
            }
            out << " " << from;
            if (to != from) out << "-" << to;
            out << ":" << status_token(s);
            ++i;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_json(const ClassificationTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ClassificationCell& c : table.cells)
        rows.push_back({{"h2", c.h2},
                        {"provenance", c.provenance},
                        {"r", c.r},
                        {"status", status_name(c.status)}});
    nlohmann::json doc = {{"format", "hvclassify-v1"},
                          {"max_codimension", table.max_codimension},
                          {"rows", rows},
                          {"socle_degree", table.socle_degree}};
    if (table.min_nonunimodal_codimension)
        doc["min_nonunimodal_codimension"] = *table.min_nonunimodal_codimension;
    else
        doc["min_nonunimodal_codimension"] = nullptr;
    return doc.dump(2) + "\n";
}

std::string render_csv(const ClassificationTable& table) {
    std::ostringstream out;
    out << "r,h2,status,provenance\n";
    for (const ClassificationCell& c : table.cells) {
        std::string prov = c.provenance;
        std::string quoted;
        quoted.reserve(prov.size() + 2);
        quoted.push_back('"');
        for (char ch : prov) {
            if (ch == '"') quoted.push_back('"');
            quoted.push_back(ch);
        }
        quoted.push_back('"');
        out << c.r << ',' << c.h2 << ',' << status_name(c.status) << ',' << quoted << "\n";
    }
    return out.str();
}

}  // namespace hvlab
