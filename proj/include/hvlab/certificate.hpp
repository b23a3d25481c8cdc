#pragma once

#include "hvlab/diagram.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hvlab {

struct PlanCheckFailure : std::runtime_error {
    explicit PlanCheckFailure(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteCover : std::runtime_error {
    explicit IncompleteCover(const std::string& what) : std::runtime_error(what) {}
};

// ---- case plans ------------------------------------------------------------
//
// A plan is the data skeleton of a nonexistence argument; the engine
// recomputes every number it implies and refuses to emit a certificate on
// any mismatch. Leaves close a (points, value) case of the saturation
// interval.

struct DiagramElimination {
    HVector candidate;  // the middle row's Gorenstein candidate
    Status status;      // NotGorenstein or NotOSequence
};

struct UniqueDiagramStep {
    std::vector<DiagramElimination> eliminate;
    std::optional<HVector> survivor_mid;  // absent when every diagram dies
};

struct ForcedSocleLeaf {};  // socle forced at degree e-2 by maximal growth

struct SaturationSocleLeaf {
    std::vector<unsigned> saturated_degrees;  // e, optionally followed by e-1
    unsigned socle_degree;
    std::string citation;
};

struct LevelDecompositionLeaf {
    HVector quotient;
    std::string citation;
};

struct GotzmannPointCountLeaf {};  // persistence pins the point count, off-case

struct MacaulayViolationLeaf {};  // growth violation on the extended top row

using CaseLeaf = std::variant<ForcedSocleLeaf, SaturationSocleLeaf, LevelDecompositionLeaf,
                              GotzmannPointCountLeaf, MacaulayViolationLeaf>;

struct PlanCase {
    Nat points = 0;
    Nat value = 0;
    CaseLeaf leaf;
};

struct GeometricArgument {
    unsigned growth_degree = 0;       // maximal growth growth_degree -> +1 on bot
    VarietyKind section;              // Line or Conic
    std::string gotzmann_citation;
    std::string saturation_citation;  // for the lifted variety's bound
    std::vector<PlanCase> cases;
};

struct CasePlan {
    std::string id;
    HVector target;
    Status conclusion = Status::NotGorenstein;
    std::string notes;
    UniqueDiagramStep unique_diagram;
    std::optional<GeometricArgument> geometry;

    static CasePlan parse(const nlohmann::json& doc);
    static CasePlan parse_text(const std::string& text);
    static CasePlan load_file(const std::string& path);
};

/// Loads every *.json plan in a directory, sorted by id.
std::vector<CasePlan> load_plans(const std::string& dir);

// ---- certificates ----------------------------------------------------------

/// A fully instantiated, replayable trace. The JSON document is the
/// certificate: verification recomputes every number in it from the target,
/// the bound calculus and the fact set, and serialization is canonical
/// (sorted keys, no floats) so equal certificates are byte-identical.
class Certificate {
public:
    explicit Certificate(nlohmann::json doc) : doc_(std::move(doc)) {}

    const nlohmann::json& doc() const { return doc_; }
    HVector target() const;
    Status conclusion() const;
    std::string engine() const;   // "case_plan" or "enumeration"
    std::string plan_id() const;  // empty for enumeration certificates

    std::string canonical_text() const;
    static Certificate parse_text(const std::string& text);
    static Certificate load_file(const std::string& path);

private:
    nlohmann::json doc_;
};

/// Validates the plan against recomputation and the fact set, and emits the
/// certificate. Throws PlanCheckFailure naming the first failing step, or
/// IncompleteCover when a case split misses a value.
Certificate run_case_plan(const CasePlan& plan, const FactSet& fs);

struct RefutationResult {
    std::optional<Certificate> certificate;
    std::vector<Diagram> survivors;  // populated when inconclusive
    bool refuted() const { return certificate.has_value(); }
};

/// Eliminates every relaxed diagram candidate by a fact-base lookup or an
/// explicit bottom-row growth violation. Never returns a false refutation:
/// a surviving candidate means Inconclusive. Survivor collection stops at
/// max_survivors; refutation requires zero survivors regardless.
RefutationResult refute_by_enumeration(const HVector& top, const FactSet& fs,
                                       std::size_t max_survivors = 16);

/// Recomputes every arithmetic check in the trace against fs. Axiom steps
/// must be in the fixed whitelist {gotzmann_line, gotzmann_conic,
/// saturation_bound, saturation_socle} with verified numeric hypotheses.
/// Returns false with a first-failure report instead of throwing.
bool verify_certificate(const Certificate& cert, const FactSet& fs,
                        std::string* first_failure = nullptr);

}  // namespace hvlab
