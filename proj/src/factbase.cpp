#include "hvlab/factbase.hpp"

#include <algorithm>
#include <sstream>

namespace hvlab {

std::string status_name(Status s) {
    switch (s) {
        case Status::Gorenstein: return "Gorenstein";
        case Status::NotGorenstein: return "NotGorenstein";
        case Status::NotOSequence: return "NotOSequence";
        case Status::Open: return "Open";
    }
    throw DomainError("status_name: unknown status");
}

std::string status_token(Status s) {
    switch (s) {
        case Status::Gorenstein: return "G";
        case Status::NotGorenstein: return "NG";
        case Status::NotOSequence: return "NOS";
        case Status::Open: return "OPEN";
    }
    throw DomainError("status_token: unknown status");
}

std::optional<Status> status_from_token(std::string_view token) {
    if (token == "G") return Status::Gorenstein;
    if (token == "NG") return Status::NotGorenstein;
    if (token == "NOS") return Status::NotOSequence;
    if (token == "OPEN") return Status::Open;
    return std::nullopt;
}

std::optional<Status> status_from_name(std::string_view name) {
    if (name == "Gorenstein") return Status::Gorenstein;
    if (name == "NotGorenstein") return Status::NotGorenstein;
    if (name == "NotOSequence") return Status::NotOSequence;
    if (name == "Open") return Status::Open;
    return std::nullopt;
}

Provenance Provenance::citation(std::string anchor) {
    return {Kind::Citation, std::move(anchor), std::nullopt};
}

Provenance Provenance::trivial_extension_of(HVector seed) {
    return {Kind::TrivialExtensionOf, {}, std::move(seed)};
}

Provenance Provenance::closure_from(HVector source, std::string rule_id) {
    return {Kind::ClosureFrom, std::move(rule_id), std::move(source)};
}

Provenance Provenance::certificate(std::string certificate_id) {
    return {Kind::Certificate, std::move(certificate_id), std::nullopt};
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string unquote(std::string_view s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ParseError("citation text must be double-quoted");
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;
            if (i + 1 >= s.size()) throw ParseError("dangling escape in citation text");
        }
        out.push_back(s[i]);
    }
    return out;
}

}  // namespace

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::Citation:
            return "citation:" + quote(text);
        case Kind::TrivialExtensionOf:
            return "trivial-ext:" + source->to_string();
        case Kind::ClosureFrom:
            return "closure:" + source->to_string() + ":" + text;
        case Kind::Certificate:
            return "certificate:" + text;
    }
    throw DomainError("Provenance::to_string: unknown kind");
}

Provenance Provenance::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("provenance must be <kind>:<payload>");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view payload = text.substr(colon + 1);
    if (kind == "citation") return citation(unquote(payload));
    if (kind == "trivial-ext") return trivial_extension_of(HVector::parse(payload));
    if (kind == "certificate") {
        if (payload.empty()) throw ParseError("certificate provenance needs an id");
        return certificate(std::string(payload));
    }
    if (kind == "closure") {
        const std::size_t split = payload.rfind(':');
        if (split == std::string_view::npos)
            throw ParseError("closure provenance must be closure:<hvector>:<rule>");
        return closure_from(HVector::parse(payload.substr(0, split)),
                            std::string(payload.substr(split + 1)));
    }
    throw ParseError("unknown provenance kind '" + std::string(kind) + "'");
}

std::optional<FactRecord> FactSet::find(const HVector& h) const {
    auto it = records_.find(h.to_string());
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

bool FactSet::contains(const HVector& h) const {
    return records_.count(h.to_string()) > 0;
}

namespace {

void validate_record(const FactRecord& rec) {
    const bool oseq = is_o_sequence(rec.hvector);
    if (rec.status == Status::NotOSequence && oseq)
        throw DomainError("fact " + rec.hvector.to_string() +
                          ": NotOSequence recorded for an O-sequence");
    if ((rec.status == Status::Gorenstein || rec.status == Status::NotGorenstein) && !oseq)
        throw DomainError("fact " + rec.hvector.to_string() + ": " + status_name(rec.status) +
                          " recorded for a non-O-sequence");
    if (rec.status != Status::Open && !rec.provenance)
        throw DomainError("fact " + rec.hvector.to_string() + ": missing provenance");
}

}  // namespace

// Shared insertion with the precedence/conflict contract. Exposed through
// the FactSet friend declaration so seeding and closure can batch inserts.
bool insert_record_changed(FactSet& fs, const FactRecord& rec, const std::string& log_prefix) {
    validate_record(rec);
    const std::string key = rec.hvector.to_string();
    auto it = fs.records_.find(key);
    if (it == fs.records_.end()) {
        fs.records_.emplace(key, rec);
        fs.log_.push_back(log_prefix + key + " " + status_token(rec.status));
        return true;
    }
    const Status existing = it->second.status;
    if (existing == rec.status) return false;  // idempotent, first provenance wins
    if (rec.status == Status::Open) return false;  // concrete statuses never downgrade
    if (existing == Status::Open) {
        it->second = rec;
        fs.log_.push_back(log_prefix + key + " " + status_token(rec.status) + " (was OPEN)");
        return true;
    }
    throw StatusConflict("status conflict for " + key + ": " + status_name(existing) +
                         " vs " + status_name(rec.status));
}

namespace {

void insert_record(FactSet& fs, const FactRecord& rec, const std::string& log_prefix) {
    insert_record_changed(fs, rec, log_prefix);
}

}  // namespace

FactSet add_fact(const FactSet& fs, const FactRecord& rec) {
    FactSet out = fs;
    insert_record(out, rec, "add: ");
    return out;
}

namespace {

// Shape helpers for the closure rules. A rule-eligible record is
// (1,r,a,r,1) or (1,r,a,a,r,1) with r,a >= 1.
struct CandidateShape {
    unsigned socle_degree;  // 4 or 5
    Nat r;
    Nat h2;
};

std::optional<CandidateShape> match_shape(const HVector& h) {
    const auto& e = h.entries();
    if (e.size() == 5 && e[0] == 1 && e[4] == 1 && e[1] == e[3] && e[1] >= 1 && e[2] >= 1)
        return CandidateShape{4, e[1], e[2]};
    if (e.size() == 6 && e[0] == 1 && e[5] == 1 && e[1] == e[4] && e[2] == e[3] && e[1] >= 1 &&
        e[2] >= 1)
        return CandidateShape{5, e[1], e[2]};
    return std::nullopt;
}

}  // namespace

FactSet apply_closure(const FactSet& fs, Nat max_codimension) {
    FactSet out = fs;
    std::vector<HVector> worklist;

    auto derive = [&](const HVector& target, Status status, const HVector& source,
                      const char* rule) {
        if (insert_record_changed(out, {target, status, Provenance::closure_from(source, rule)},
                                  std::string("closure ") + rule + ": "))
            worklist.push_back(target);
    };

    // U: the unimodal rule, materialized once within the bound. F1/F2 from a
    // unimodal record only reach other unimodal records, so these never need
    // to enter the worklist.
    static const char* kUnimodalAnchor = "are Gorenstein in socle degrees";
    for (Nat r = 1; r <= max_codimension; ++r) {
        const Nat cap = binomial(r + 1, 2);
        for (Nat h2 = r; h2 <= cap; ++h2)
            for (unsigned e : {4u, 5u})
                insert_record_changed(out,
                                      {symmetric_candidate(e, r, h2), Status::Gorenstein,
                                       Provenance::citation(kUnimodalAnchor)},
                                      "closure U: ");
    }

    for (const auto& [key, rec] : out.records()) worklist.push_back(rec.hvector);

    for (std::size_t i = 0; i < worklist.size(); ++i) {
        const HVector h = worklist[i];
        const auto rec = out.find(h);
        const auto shape = match_shape(h);
        if (!rec || !shape) continue;
        const auto [e, r, h2] = *shape;
        if (rec->status == Status::Gorenstein) {
            if (h2 >= r) continue;  // unimodal: everything F1/F2 reaches exists already
            if (r <= max_codimension) {
                const Nat cap = binomial(r + 1, 2);
                for (Nat b = h2 + 1; b <= cap; ++b)
                    derive(symmetric_candidate(e, r, b), Status::Gorenstein, h,
                           e == 4 ? "F1" : "F1p");
            }
            if (r + 1 <= max_codimension)
                derive(symmetric_candidate(e, r + 1, h2 + 1), Status::Gorenstein, h,
                       e == 4 ? "F2" : "F2p");
        } else if (rec->status == Status::NotGorenstein) {
            if (r <= max_codimension) {
                for (Nat a = 1; a < h2; ++a) {
                    const HVector target = symmetric_candidate(e, r, a);
                    if (is_o_sequence(target))
                        derive(target, Status::NotGorenstein, h, "C1");
                }
            }
            if (r >= 2 && h2 >= 2 && r - 1 <= max_codimension) {
                const HVector target = symmetric_candidate(e, r - 1, h2 - 1);
                if (is_o_sequence(target))
                    derive(target, Status::NotGorenstein, h, "C2");
            }
        }
    }
    return out;
}

Status status_of(const FactSet& fs, const HVector& h) {
    if (!is_o_sequence(h)) return Status::NotOSequence;
    if (auto rec = fs.find(h)) return rec->status;
    if (auto shape = match_shape(h); shape && is_symmetric(h)) {
        const auto [e, r, h2] = *shape;
        if (h2 >= r && h2 <= binomial(r + 1, 2)) return Status::Gorenstein;
    }
    return Status::Open;
}

namespace {

void seed(FactSet& fs, const char* hv, Status status, Provenance prov) {
    insert_record(fs, {HVector::parse(hv), status, std::move(prov)}, "seed: ");
}

void seed_trivial_extension(FactSet& fs, const char* level_seed) {
    const HVector level = HVector::parse(level_seed);
    insert_record(fs, {trivial_extension(level), Status::Gorenstein,
                       Provenance::trivial_extension_of(level)},
                  "seed: ");
}

}  // namespace

FactSet seed_citation_facts() {
    FactSet fs;

    // Gorenstein, cited directly.
    seed(fs, "1,13,12,13,1", Status::Gorenstein, Provenance::citation("socle degree 4"));
    seed(fs, "1,18,16,16,18,1", Status::Gorenstein,
         Provenance::citation("$(1,18,16,16,18,1)$ is a Gorenstein $h$-vector"));

    // Gorenstein, built by trivial extension from cited level seeds.
    seed_trivial_extension(fs, "1,3,6,10,14");     // -> 1,17,16,16,17,1
    seed_trivial_extension(fs, "1,4,9,16");        // -> 1,20,18,20,1
    seed_trivial_extension(fs, "1,4,10,19");       // -> 1,23,20,23,1
    seed_trivial_extension(fs, "1,4,10,20");       // -> 1,24,20,24,1
    seed_trivial_extension(fs, "1,4,9,16,24");     // -> 1,28,25,25,28,1
    seed_trivial_extension(fs, "1,4,9,16,25");     // -> 1,29,25,25,29,1

    // Not Gorenstein, cited without a replayable certificate.
    seed(fs, "1,16,14,14,16,1", Status::NotGorenstein,
         Provenance::citation("while $(1,16,14,14,16,1)$ is not"));
    seed(fs, "1,18,15,18,1", Status::NotGorenstein,
         Provenance::citation("we can show that $(1,18,15,18,1)$ does not exist"));
    seed(fs, "1,27,23,23,27,1", Status::NotGorenstein,
         Provenance::citation("shows that $(1,27,23,23,27,1)$ does not exist"));
    for (Nat r = 10; r <= 23; ++r) {
        // (1,r,r-4,r,1); below r = 10 these fail Macaulay growth outright.
        insert_record(fs, {symmetric_candidate(4, r, r - 4), Status::NotGorenstein,
                           Provenance::citation("$r - h_2 = 4$ exists if and only if $r \\geq 24$")},
                      "seed: ");
    }

    // Open cases.
    seed(fs, "1,18,16,18,1", Status::Open,
         Provenance::citation("the first open case for $(1,r,r-2,r,1)$ is $(1,18,16,18,1)$"));
    seed(fs, "1,19,17,19,1", Status::Open,
         Provenance::citation("the only other open case is $(1,19,17,19,1)$"));
    seed(fs, "1,26,23,23,26,1", Status::Open,
         Provenance::citation("the only open cases are $(1,26,23,23,26,1)$ and $(1,27,24,24,27,1)$"));
    seed(fs, "1,27,24,24,27,1", Status::Open,
         Provenance::citation("the only open cases are $(1,26,23,23,26,1)$ and $(1,27,24,24,27,1)$"));
    seed(fs, "1,28,24,24,28,1", Status::Open,
         Provenance::citation("the only open case is $(1,28,24,24,28,1)$"));

    return fs;
}

FactSet seed_paper_facts() {
    FactSet fs = seed_citation_facts();
    seed(fs, "1,12,11,12,1", Status::NotGorenstein,
         Provenance::certificate("prop-1-12-11-12-1"));
    seed(fs, "1,17,15,17,1", Status::NotGorenstein,
         Provenance::certificate("thm1-1-17-15-17-1"));
    seed(fs, "1,16,15,15,16,1", Status::NotGorenstein,
         Provenance::certificate("h1-1-16-15-15-16-1"));
    seed(fs, "1,17,15,15,17,1", Status::NotGorenstein,
         Provenance::certificate("h2-1-17-15-15-17-1"));
    seed(fs, "1,25,22,22,25,1", Status::NotGorenstein,
         Provenance::certificate("thm2-1-25-22-22-25-1"));
    return fs;
}

std::string export_facts(const FactSet& fs) {
    std::ostringstream out;
    out << "hvfacts-v1\n";
    for (const auto& [key, rec] : fs.records()) {
        out << "hvector=" << key << " status=" << status_token(rec.status);
        if (rec.provenance) out << " prov=" << rec.provenance->to_string();
        out << "\n";
    }
    return out.str();
}

namespace {

// Splits on single spaces but keeps quoted citation payloads intact.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' ) in_quotes = !in_quotes;
        if (c == '\\' && in_quotes && i + 1 < line.size()) {
            current.push_back(c);
            current.push_back(line[++i]);
            continue;
        }
        if (c == ' ' && !in_quotes) {
            if (!current.empty()) fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (in_quotes) throw ParseError("unterminated quote");
    if (!current.empty()) fields.push_back(std::move(current));
    return fields;
}

}  // namespace

FactSet import_facts(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("line 1: empty fact file");
    ++line_no;
    if (line != "hvfacts-v1")
        throw ParseError("line 1: expected version header 'hvfacts-v1', got '" + line + "'");

    FactSet fs;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            std::optional<HVector> hv;
            std::optional<Status> status;
            std::optional<Provenance> prov;
            for (const std::string& field : split_fields(line)) {
                const std::size_t eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("field '" + field + "' is not key=value");
                const std::string keyname = field.substr(0, eq);
                const std::string value = field.substr(eq + 1);
                if (keyname == "hvector") {
                    hv = HVector::parse(value);
                } else if (keyname == "status") {
                    status = status_from_token(value);
                    if (!status) throw ParseError("unknown status token '" + value + "'");
                } else if (keyname == "prov") {
                    prov = Provenance::parse(value);
                } else {
                    throw ParseError("unknown key '" + keyname + "'");
                }
            }
            if (!hv) throw ParseError("missing hvector=");
            if (!status) throw ParseError("missing status=");
            insert_record(fs, {*hv, *status, prov}, "import: ");
        } catch (const StatusConflict&) {
            throw;
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return fs;
}

}  // namespace hvlab
