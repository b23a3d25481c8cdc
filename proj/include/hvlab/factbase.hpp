#pragma once

#include "hvlab/sequences.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hvlab {

enum class Status { Gorenstein, NotGorenstein, NotOSequence, Open };

std::string status_name(Status s);    // "Gorenstein", "NotGorenstein", ...
std::string status_token(Status s);   // "G", "NG", "NOS", "OPEN"
std::optional<Status> status_from_token(std::string_view token);
std::optional<Status> status_from_name(std::string_view name);

/// Where a fact comes from. Chains terminate at a Citation (a quote anchor
/// into the source text) or a Certificate (a replayable case plan).
struct Provenance {
    enum class Kind { Citation, TrivialExtensionOf, ClosureFrom, Certificate };

    Kind kind = Kind::Citation;
    std::string text;               // citation anchor, rule id, or certificate id
    std::optional<HVector> source;  // trivial-extension seed or closure source

    static Provenance citation(std::string anchor);
    static Provenance trivial_extension_of(HVector seed);
    static Provenance closure_from(HVector source, std::string rule_id);
    static Provenance certificate(std::string certificate_id);

    std::string to_string() const;
    static Provenance parse(std::string_view text);

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct FactRecord {
    HVector hvector;
    Status status = Status::Open;
    std::optional<Provenance> provenance;  // required unless status is Open
};

struct StatusConflict : std::runtime_error {
    explicit StatusConflict(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable map from canonical h-vector text to its record, plus a
/// monotone derivation log. Mutating operations return new values.
class FactSet {
public:
    std::optional<FactRecord> find(const HVector& h) const;
    bool contains(const HVector& h) const;
    std::size_t size() const { return records_.size(); }
    const std::map<std::string, FactRecord>& records() const { return records_; }
    const std::vector<std::string>& log() const { return log_; }

private:
    std::map<std::string, FactRecord> records_;
    std::vector<std::string> log_;

    friend FactSet add_fact(const FactSet&, const FactRecord&);
    friend FactSet apply_closure(const FactSet&, Nat);
    friend FactSet seed_citation_facts();
    friend FactSet seed_paper_facts();
    friend FactSet import_facts(const std::string&);
    friend bool insert_record_changed(FactSet&, const FactRecord&, const std::string&);
};

/// The shipped seed set: cited Gorenstein and non-Gorenstein facts, the
/// trivial-extension constructions, the open cases, and the five
/// certificate-backed refutations.
FactSet seed_paper_facts();

/// Seeds without the five Certificate-provenance records; the replay tests
/// rebuild those by running the shipped plans.
FactSet seed_citation_facts();

/// Inserts or idempotently confirms. Open never downgrades a concrete
/// status; a conflicting concrete status is a StatusConflict. Records must
/// respect the status invariant (NotOSequence iff the vector fails
/// Macaulay growth).
FactSet add_fact(const FactSet& fs, const FactRecord& rec);

/// Least fixed point of the derivation rules, bounded at max_codimension:
///   U   unimodal symmetric candidates are Gorenstein (e in {4,5},
///       r <= h2 <= C(r+1,2));
///   F1  Gorenstein (1,r,a,r,1) gives (1,r,b,r,1) for a <= b <= C(r+1,2);
///   F2  Gorenstein (1,r,a,r,1) gives (1,r+1,a+1,r+1,1);
///   F1p/F2p  the socle-degree-5 analogues;
///   C1  NotGorenstein (1,r,b,...) gives NotGorenstein (1,r,a,...), a <= b;
///   C2  NotGorenstein (1,r+1,a+1,...) gives NotGorenstein (1,r,a,...).
/// Contrapositive targets are inserted only when they are O-sequences.
FactSet apply_closure(const FactSet& fs, Nat max_codimension = 30);

/// NotOSequence when Macaulay growth fails; otherwise the stored status;
/// otherwise the unimodal rule for symmetric candidates of socle degree 4
/// or 5; otherwise Open.
Status status_of(const FactSet& fs, const HVector& h);

/// Line-delimited canonical text with the `hvfacts-v1` header; records
/// sorted lexicographically by canonical h-vector text, byte-identical for
/// equal fact sets.
std::string export_facts(const FactSet& fs);

/// Inverse of export_facts. Rejects unknown keys and malformed lines with
/// the line number; conflicting duplicates raise StatusConflict.
FactSet import_facts(const std::string& text);

}  // namespace hvlab
