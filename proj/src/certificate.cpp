#include "hvlab/certificate.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace hvlab {

namespace {

using nlohmann::json;

// ---- json helpers ----------------------------------------------------------

Nat get_nat(const json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<Nat>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<Nat>(j.get<std::int64_t>());
    throw ParseError(std::string(what) + " must be a nonnegative integer");
}

Nat field_nat(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return get_nat(j.at(key), key);
}

std::string field_str(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ParseError(std::string("missing string field '") + key + "'");
    return j.at(key).get<std::string>();
}

std::vector<Nat> row_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Nat> row;
    row.reserve(j.size());
    for (const auto& v : j) row.push_back(get_nat(v, what));
    return row;
}

HVector hv_from_json(const json& j, const char* what) {
    return HVector(row_from_json(j, what));
}

json json_row(const std::vector<Nat>& row) {
    json out = json::array();
    for (Nat v : row) out.push_back(v);
    return out;
}

json json_hv(const HVector& h) { return json_row(h.entries()); }

// ---- shared builder --------------------------------------------------------

struct FactUse {
    std::string hvector;
    Status status;
    bool operator<(const FactUse& o) const {
        return hvector != o.hvector ? hvector < o.hvector : status < o.status;
    }
};

json facts_used_json(const std::set<FactUse>& used) {
    json out = json::array();
    for (const FactUse& f : used)
        out.push_back({{"hvector", json_hv(HVector::parse(f.hvector))},
                       {"status", status_name(f.status)}});
    return out;
}

json contradiction_step(const std::string& reason) {
    return {{"kind", "contradiction"}, {"reason", reason}};
}

[[noreturn]] void plan_fail(const std::string& step, const std::string& what) {
    throw PlanCheckFailure("step " + step + ": " + what);
}

// Runs the plan and emits the certificate document; every number is
// recomputed here, so the verifier can rebuild and compare byte for byte.
json build_case_plan_certificate(const CasePlan& plan, const FactSet& fs) {
    const HVector& top = plan.target;
    const unsigned e = top.socle_degree();
    std::set<FactUse> used;

    json steps = json::array();

    // unique_diagram -----------------------------------------------------
    const std::vector<Diagram> diagrams = enumerate_diagrams(top);
    json diagrams_json = json::array();
    for (const Diagram& d : diagrams)
        diagrams_json.push_back({{"bot", json_row(d.bot)}, {"mid", json_row(d.mid)}});

    json eliminated = json::array();
    const Diagram* survivor = nullptr;
    std::size_t next_elim = 0;
    for (const Diagram& d : diagrams) {
        const HVector cand = d.mid_candidate();
        if (plan.unique_diagram.survivor_mid && !survivor &&
            *plan.unique_diagram.survivor_mid == cand) {
            survivor = &d;
            continue;
        }
        if (next_elim >= plan.unique_diagram.eliminate.size())
            plan_fail("unique_diagram", "diagram with middle row " + cand.to_string() +
                                            " is neither the survivor nor eliminated");
        const DiagramElimination& el = plan.unique_diagram.eliminate[next_elim++];
        if (el.candidate != cand)
            plan_fail("unique_diagram", "expected elimination of " + cand.to_string() +
                                            ", plan lists " + el.candidate.to_string());
        if (el.status != Status::NotGorenstein && el.status != Status::NotOSequence)
            plan_fail("unique_diagram", "eliminations must be NotGorenstein or NotOSequence");
        const Status actual = status_of(fs, cand);
        if (actual != el.status)
            plan_fail("unique_diagram", "fact base gives " + status_name(actual) + " for " +
                                            cand.to_string() + ", plan needs " +
                                            status_name(el.status));
        eliminated.push_back({{"candidate", json_hv(cand)},
                              {"kind", "db_lookup"},
                              {"status", status_name(el.status)}});
        used.insert({cand.to_string(), el.status});
    }
    if (next_elim != plan.unique_diagram.eliminate.size())
        plan_fail("unique_diagram", "plan eliminates a middle row no diagram produces");
    if (plan.unique_diagram.survivor_mid && !survivor)
        plan_fail("unique_diagram", "declared survivor " +
                                        plan.unique_diagram.survivor_mid->to_string() +
                                        " is not an enumerated diagram");

    json ud = {{"diagrams", diagrams_json},
               {"eliminated", eliminated},
               {"kind", "unique_diagram"}};
    if (survivor) {
        ud["survivor_bot"] = json_row(survivor->bot);
        ud["survivor_mid"] = json_row(survivor->mid);
    }
    steps.push_back(ud);

    if (!survivor) {
        if (plan.geometry)
            plan_fail("unique_diagram", "plan continues although every diagram is eliminated");
        steps.push_back(contradiction_step("no admissible diagram"));
    } else {
        if (!plan.geometry)
            plan_fail("unique_diagram",
                      "a diagram survives but the plan has no geometric argument");
        const GeometricArgument& g = *plan.geometry;
        const Diagram& D = *survivor;

        // max_growth -------------------------------------------------------
        const unsigned d = g.growth_degree;
        if (d < 1 || d > e - 2)
            plan_fail("max_growth", "growth degree must lie in [1, e-2]");
        const Nat from = D.bot[d];
        const Nat to = D.bot[d + 1];
        const Nat bound = macaulay_next(from, d);
        if (to != bound)
            plan_fail("max_growth", "bottom row grows " + std::to_string(from) + " -> " +
                                        std::to_string(to) + " at degree " + std::to_string(d) +
                                        ", Macaulay bound is " + std::to_string(bound));
        steps.push_back({{"bound", bound},
                         {"degree", d},
                         {"kind", "max_growth"},
                         {"value_from", from},
                         {"value_to", to}});

        // gotzmann persistence (axiom) --------------------------------------
        if (g.section != VarietyKind::Line && g.section != VarietyKind::Conic)
            plan_fail("gotzmann", "section must be a line or a conic");
        if (g.gotzmann_citation.empty()) plan_fail("gotzmann", "axiom step needs a citation");
        if (from != variety_hf(g.section, d))
            plan_fail("gotzmann", "bottom row value " + std::to_string(from) + " at degree " +
                                      std::to_string(d) + " is not the " +
                                      variety_name(g.section) + " value");
        json persisted = json::array();
        for (unsigned k = d + 1; k <= e + 2; ++k) {
            const Nat v = gotzmann_persistence(from, d, k - d);
            if (v != variety_hf(g.section, k))
                plan_fail("gotzmann", "persistence value at degree " + std::to_string(k) +
                                          " differs from the " + variety_name(g.section) +
                                          " value");
            if (k <= e - 1 && v != D.bot[k])
                plan_fail("gotzmann", "bottom row departs from persistence at degree " +
                                          std::to_string(k));
            persisted.push_back({{"degree", k}, {"value", v}});
        }
        steps.push_back({{"axiom", true},
                         {"citation", g.gotzmann_citation},
                         {"degree", d},
                         {"kind", std::string("gotzmann_") + variety_name(g.section)},
                         {"persisted", persisted},
                         {"start_value", from}});

        // saturation_bound (axiom) ------------------------------------------
        const VarietyKind lifted = section_lift(g.section);
        if (g.saturation_citation.empty())
            plan_fail("saturation_bound", "axiom step needs a citation");
        const Nat base = variety_hf(lifted, e);
        const Nat upper = macaulay_next(top[e - 1], e - 1);
        if (base > upper)
            plan_fail("saturation_bound", "saturation interval is empty");
        const Nat max_points = upper - base;
        steps.push_back({{"axiom", true},
                         {"base_value", base},
                         {"citation", g.saturation_citation},
                         {"kind", "saturation_bound"},
                         {"max_points", max_points},
                         {"upper_bound", upper},
                         {"variety", variety_name(lifted)}});

        // case_split ---------------------------------------------------------
        std::set<std::pair<Nat, Nat>> seen;
        json cases = json::array();
        for (const PlanCase& c : g.cases) {
            if (c.points > max_points)
                plan_fail("case_split", "case points " + std::to_string(c.points) +
                                            " exceeds the saturation maximum " +
                                            std::to_string(max_points));
            if (c.value < base + c.points || c.value > upper)
                plan_fail("case_split", "case value " + std::to_string(c.value) +
                                            " lies outside [" + std::to_string(base + c.points) +
                                            ", " + std::to_string(upper) + "]");
            if (!seen.insert({c.points, c.value}).second)
                plan_fail("case_split", "duplicate case");

            json leaf;
            std::string reason;
            if (std::holds_alternative<ForcedSocleLeaf>(c.leaf)) {
                const unsigned fd = e - 1;
                const Nat below = top[e - 2];
                const Nat at = top[e - 1];
                const Nat nb = macaulay_next(at, fd);
                const Nat pb = macaulay_prev(at, fd);
                if (c.value != nb)
                    plan_fail("forced_socle", "case value is not maximal growth from degree " +
                                                  std::to_string(fd));
                if (pb > below || below - pb == 0)
                    plan_fail("forced_socle", "no socle is forced");
                const Nat alpha = below - pb;
                if (alpha != detect_forced_socle(below, at, c.value, fd))
                    plan_fail("forced_socle", "socle dimension mismatch");
                leaf = {{"alpha", alpha},       {"degree", fd},
                        {"h_above", c.value},   {"h_at", at},
                        {"h_below", below},     {"kind", "forced_socle"},
                        {"next_bound", nb},     {"prev_bound", pb}};
                reason = "socle in degree " + std::to_string(fd - 1);
            } else if (const auto* ss = std::get_if<SaturationSocleLeaf>(&c.leaf)) {
                if (ss->citation.empty())
                    plan_fail("saturation_socle", "axiom step needs a citation");
                if (ss->saturated_degrees.empty() || ss->saturated_degrees.front() != e)
                    plan_fail("saturation_socle", "saturation must start at the socle degree");
                json sat_entries = json::array();
                unsigned expected = e;
                for (unsigned k : ss->saturated_degrees) {
                    if (k != expected)
                        plan_fail("saturation_socle", "saturated degrees must descend from e");
                    const Nat have = (k == e) ? c.value : top[k];
                    const Nat sat = variety_hf(lifted, k) + c.points;
                    if (have != sat)
                        plan_fail("saturation_socle",
                                  "degree " + std::to_string(k) + " value " +
                                      std::to_string(have) + " differs from saturated value " +
                                      std::to_string(sat));
                    sat_entries.push_back({{"degree", k}, {"have", have}, {"sat", sat}});
                    --expected;
                }
                const unsigned gdeg = ss->saturated_degrees.back() - 1;
                if (ss->socle_degree != gdeg)
                    plan_fail("saturation_socle",
                              "socle degree must sit just below the saturated range");
                const Nat sat_g = variety_hf(lifted, gdeg) + c.points;
                const Nat actual = top[gdeg];
                if (sat_g >= actual)
                    plan_fail("saturation_socle", "degree " + std::to_string(gdeg) +
                                                      " is saturated; no socle follows");
                leaf = {{"axiom", true},
                        {"citation", ss->citation},
                        {"kind", "saturation_socle"},
                        {"saturated", sat_entries},
                        {"socle", {{"actual", actual}, {"degree", gdeg}, {"sat", sat_g}}}};
                reason = "socle in degree " + std::to_string(gdeg);
            } else if (const auto* ld = std::get_if<LevelDecompositionLeaf>(&c.leaf)) {
                if (ld->citation.empty())
                    plan_fail("level_decomposition", "levelness of the quotient needs a citation");
                if (ld->quotient.socle_degree() != e)
                    plan_fail("level_decomposition", "quotient socle degree mismatch");
                for (unsigned k = 0; k <= e; ++k)
                    if (ld->quotient[k] != variety_hf(lifted, k) + c.points)
                        plan_fail("level_decomposition",
                                  "quotient is not the saturated Hilbert function at degree " +
                                      std::to_string(k));
                std::vector<Nat> full_row(top.entries().begin(), top.entries().begin() + e);
                full_row.push_back(c.value);
                HVector full(full_row);
                std::vector<Nat> rd;
                try {
                    rd = reverse_difference(full, ld->quotient);
                } catch (const DomainError& err) {
                    plan_fail("level_decomposition", err.what());
                }
                const auto viol = first_growth_violation(rd);
                if (!viol)
                    plan_fail("level_decomposition",
                              "reverse difference is an O-sequence; leaf cannot close");
                leaf = {{"citation", ld->citation},
                        {"full", json_hv(full)},
                        {"kind", "level_decomposition"},
                        {"quotient", json_hv(ld->quotient)},
                        {"reverse_difference", json_row(rd)},
                        {"violation_degree", *viol}};
                reason = "reverse difference fails Macaulay growth";
            } else if (std::holds_alternative<GotzmannPointCountLeaf>(c.leaf)) {
                const Nat nb = macaulay_next(top[e - 1], e - 1);
                if (c.value != nb)
                    plan_fail("gotzmann_point_count",
                              "case value is not maximal growth; persistence does not apply");
                json persisted_pc = json::array();
                std::optional<Nat> stable;
                for (unsigned k = e; k <= e + 2; ++k) {
                    const Nat growth = gotzmann_persistence(top[e - 1], e - 1, k - (e - 1));
                    const Nat vv = variety_hf(lifted, k);
                    if (growth < vv)
                        plan_fail("gotzmann_point_count", "persistence falls below the variety");
                    const Nat diff = growth - vv;
                    if (stable && *stable != diff)
                        plan_fail("gotzmann_point_count", "persistence residual is not stable");
                    stable = diff;
                    persisted_pc.push_back(
                        {{"degree", k}, {"growth_value", growth}, {"variety_value", vv}});
                }
                if (*stable == c.points)
                    plan_fail("gotzmann_point_count",
                              "persistence point count matches the case; leaf cannot close");
                leaf = {{"kind", "gotzmann_point_count"},
                        {"persisted", persisted_pc},
                        {"stable_points", *stable}};
                reason = "persistence forces " + std::to_string(*stable) +
                         " residual points, case assumes " + std::to_string(c.points);
            } else if (std::holds_alternative<MacaulayViolationLeaf>(c.leaf)) {
                std::vector<Nat> row(top.entries().begin(), top.entries().begin() + e);
                row.push_back(c.value);
                const auto viol = first_growth_violation(row);
                if (!viol)
                    plan_fail("macaulay_violation", "truncated row is an O-sequence");
                leaf = {{"degree", *viol},
                        {"exceeded_bound", macaulay_next(row[*viol], *viol)},
                        {"kind", "macaulay_violation"},
                        {"row", json_row(row)},
                        {"value", row[*viol + 1]}};
                reason = "growth violation on the truncated row";
            } else {
                plan_fail("case_split", "unknown leaf kind");
            }
            cases.push_back({{"points", c.points},
                             {"steps", json::array({leaf, contradiction_step(reason)})},
                             {"value", c.value}});
        }
        for (Nat p = 0; p <= max_points; ++p)
            for (Nat v = base + p; v <= upper; ++v)
                if (!seen.count({p, v}))
                    throw IncompleteCover(plan.id + ": case (points=" + std::to_string(p) +
                                          ", value=" + std::to_string(v) + ") is not covered");
        steps.push_back({{"cases", cases}, {"kind", "case_split"}});
    }

    return {{"conclusion", "NotGorenstein"},
            {"engine", "case_plan"},
            {"facts_used", facts_used_json(used)},
            {"format", "hvcert-v1"},
            {"plan_id", plan.id},
            {"steps", steps},
            {"target", json_hv(top)}};
}

json build_enumeration_certificate(const HVector& top, const FactSet& fs,
                                   std::size_t max_survivors,
                                   std::vector<Diagram>* survivors_out) {
    if (!is_symmetric(top))
        throw DomainError("refute_by_enumeration: target must be symmetric");
    if (!is_o_sequence(top))
        throw DomainError("refute_by_enumeration: target must be an O-sequence");
    const std::vector<HVector> candidates = diagram_mid_candidates(top);
    std::set<FactUse> used;

    json mids = json::array();
    for (const HVector& c : candidates) mids.push_back(json_hv(c));
    json steps = json::array({{{"kind", "candidates"}, {"mids", mids}}});

    std::vector<Diagram> survivors;
    for (const HVector& cand : candidates) {
        const Status st = status_of(fs, cand);
        if (st == Status::NotGorenstein || st == Status::NotOSequence) {
            steps.push_back({{"candidate", json_hv(cand)},
                             {"kind", "eliminate_fact"},
                             {"status", status_name(st)}});
            used.insert({cand.to_string(), st});
            continue;
        }
        std::vector<Nat> mid = mid_row_of(top, cand);
        std::vector<Nat> bot(top.size(), 0);
        for (unsigned k = 0; k < top.size(); ++k) bot[k] = top[k] - mid[k];
        if (const auto viol = first_growth_violation(bot)) {
            const unsigned d = *viol;
            steps.push_back({{"bot", json_row(bot)},
                             {"bound", macaulay_next(bot[d], d)},
                             {"candidate", json_hv(cand)},
                             {"degree", d},
                             {"kind", "eliminate_bot_violation"},
                             {"value", bot[d + 1]}});
            continue;
        }
        survivors.push_back({top, std::move(mid), std::move(bot)});
        if (survivors.size() >= max_survivors) break;
    }
    if (!survivors.empty()) {
        if (survivors_out) *survivors_out = std::move(survivors);
        return json();  // inconclusive, no certificate
    }
    steps.push_back(contradiction_step("every candidate eliminated"));
    return {{"conclusion", "NotGorenstein"},
            {"engine", "enumeration"},
            {"facts_used", facts_used_json(used)},
            {"format", "hvcert-v1"},
            {"steps", steps},
            {"target", json_hv(top)}};
}

// ---- plan extraction (certificate -> skeleton) ------------------------------

CaseLeaf leaf_from_json(const json& j) {
    const std::string kind = field_str(j, "kind");
    if (kind == "forced_socle") return ForcedSocleLeaf{};
    if (kind == "gotzmann_point_count") return GotzmannPointCountLeaf{};
    if (kind == "macaulay_violation") return MacaulayViolationLeaf{};
    if (kind == "saturation_socle") {
        SaturationSocleLeaf leaf;
        for (const auto& entry : j.at("saturated"))
            leaf.saturated_degrees.push_back(static_cast<unsigned>(field_nat(entry, "degree")));
        leaf.socle_degree = static_cast<unsigned>(field_nat(j.at("socle"), "degree"));
        leaf.citation = field_str(j, "citation");
        return leaf;
    }
    if (kind == "level_decomposition") {
        return LevelDecompositionLeaf{hv_from_json(j.at("quotient"), "quotient"),
                                      field_str(j, "citation")};
    }
    throw ParseError("unknown case leaf kind '" + kind + "'");
}

CasePlan plan_from_certificate(const json& doc) {
    CasePlan plan;
    plan.id = field_str(doc, "plan_id");
    plan.target = hv_from_json(doc.at("target"), "target");
    plan.conclusion = Status::NotGorenstein;

    const json& steps = doc.at("steps");
    if (!steps.is_array() || steps.empty()) throw ParseError("certificate has no steps");
    const json& ud = steps.at(0);
    if (field_str(ud, "kind") != "unique_diagram")
        throw ParseError("certificate must open with a unique_diagram step");
    for (const auto& el : ud.at("eliminated")) {
        const auto status = status_from_name(field_str(el, "status"));
        if (!status) throw ParseError("bad elimination status");
        plan.unique_diagram.eliminate.push_back(
            {hv_from_json(el.at("candidate"), "candidate"), *status});
    }
    if (ud.contains("survivor_mid")) {
        const std::vector<Nat> mid = row_from_json(ud.at("survivor_mid"), "survivor_mid");
        if (mid.size() < 2) throw ParseError("survivor mid row too short");
        plan.unique_diagram.survivor_mid =
            HVector(std::vector<Nat>(mid.begin() + 1, mid.end()));
    }

    if (!plan.unique_diagram.survivor_mid) return plan;  // contradiction-only tail

    if (steps.size() != 5) throw ParseError("geometric certificate must have five steps");
    GeometricArgument g;
    g.growth_degree = static_cast<unsigned>(field_nat(steps.at(1), "degree"));
    const std::string gk = field_str(steps.at(2), "kind");
    if (gk == "gotzmann_line")
        g.section = VarietyKind::Line;
    else if (gk == "gotzmann_conic")
        g.section = VarietyKind::Conic;
    else
        throw ParseError("unknown persistence step kind '" + gk + "'");
    g.gotzmann_citation = field_str(steps.at(2), "citation");
    if (field_str(steps.at(3), "kind") != "saturation_bound")
        throw ParseError("expected a saturation_bound step");
    g.saturation_citation = field_str(steps.at(3), "citation");
    if (field_str(steps.at(4), "kind") != "case_split")
        throw ParseError("expected a case_split step");
    for (const auto& c : steps.at(4).at("cases")) {
        const json& case_steps = c.at("steps");
        if (!case_steps.is_array() || case_steps.size() != 2)
            throw ParseError("every case must hold a leaf and a contradiction");
        g.cases.push_back({field_nat(c, "points"), field_nat(c, "value"),
                           leaf_from_json(case_steps.at(0))});
    }
    plan.geometry = std::move(g);
    return plan;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

// ---- CasePlan parsing --------------------------------------------------------

CasePlan CasePlan::parse(const json& doc) {
    if (field_str(doc, "format") != "hvplan-v1")
        throw ParseError("expected plan format hvplan-v1");
    CasePlan plan;
    plan.id = field_str(doc, "id");
    plan.target = hv_from_json(doc.at("target"), "target");
    if (field_str(doc, "conclusion") != "NotGorenstein")
        throw ParseError("plans must conclude NotGorenstein");
    plan.conclusion = Status::NotGorenstein;
    if (doc.contains("notes")) plan.notes = field_str(doc, "notes");

    const json& steps = doc.at("steps");
    if (!steps.is_array() || steps.empty()) throw ParseError("plan has no steps");
    if (field_str(steps.at(0), "kind") != "unique_diagram")
        throw ParseError("plans must open with a unique_diagram step");
    const json& ud = steps.at(0);
    for (const auto& el : ud.at("eliminate")) {
        const auto status = status_from_name(field_str(el, "status"));
        if (!status || (*status != Status::NotGorenstein && *status != Status::NotOSequence))
            throw ParseError("eliminations must be NotGorenstein or NotOSequence");
        plan.unique_diagram.eliminate.push_back(
            {hv_from_json(el.at("candidate"), "candidate"), *status});
    }
    if (ud.contains("survivor_mid") && !ud.at("survivor_mid").is_null())
        plan.unique_diagram.survivor_mid = hv_from_json(ud.at("survivor_mid"), "survivor_mid");

    if (steps.size() == 1) return plan;
    if (steps.size() != 5)
        throw ParseError("plans carry either one step or the full geometric argument");

    GeometricArgument g;
    if (field_str(steps.at(1), "kind") != "max_growth")
        throw ParseError("expected a max_growth step");
    g.growth_degree = static_cast<unsigned>(field_nat(steps.at(1), "degree"));
    const std::string gk = field_str(steps.at(2), "kind");
    if (gk == "gotzmann_line")
        g.section = VarietyKind::Line;
    else if (gk == "gotzmann_conic")
        g.section = VarietyKind::Conic;
    else
        throw ParseError("unknown persistence step kind '" + gk + "'");
    g.gotzmann_citation = field_str(steps.at(2), "citation");
    if (field_str(steps.at(3), "kind") != "saturation_bound")
        throw ParseError("expected a saturation_bound step");
    const auto declared = variety_from_name(field_str(steps.at(3), "variety"));
    if (!declared || *declared != section_lift(g.section))
        throw ParseError("saturation variety must be the section's lift");
    g.saturation_citation = field_str(steps.at(3), "citation");
    if (field_str(steps.at(4), "kind") != "case_split")
        throw ParseError("expected a case_split step");
    for (const auto& c : steps.at(4).at("cases")) {
        const json& leaf = c.at("leaf");
        const std::string lk = field_str(leaf, "kind");
        CaseLeaf parsed;
        if (lk == "forced_socle")
            parsed = ForcedSocleLeaf{};
        else if (lk == "gotzmann_point_count")
            parsed = GotzmannPointCountLeaf{};
        else if (lk == "macaulay_violation")
            parsed = MacaulayViolationLeaf{};
        else if (lk == "saturation_socle") {
            SaturationSocleLeaf ss;
            for (const auto& k : leaf.at("saturated_degrees"))
                ss.saturated_degrees.push_back(static_cast<unsigned>(get_nat(k, "degree")));
            ss.socle_degree = static_cast<unsigned>(field_nat(leaf, "socle_degree"));
            ss.citation = field_str(leaf, "citation");
            parsed = std::move(ss);
        } else if (lk == "level_decomposition") {
            parsed = LevelDecompositionLeaf{hv_from_json(leaf.at("quotient"), "quotient"),
                                            field_str(leaf, "citation")};
        } else if (lk == "db_lookup") {
            throw ParseError("db_lookup closes diagrams, not cases; "
                             "use a unique_diagram elimination");
        } else {
            throw ParseError("unknown case leaf kind '" + lk + "'");
        }
        g.cases.push_back({field_nat(c, "points"), field_nat(c, "value"), std::move(parsed)});
    }
    plan.geometry = std::move(g);
    return plan;
}

CasePlan CasePlan::parse_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("plan is not valid JSON: ") + e.what());
    }
    return parse(doc);
}

CasePlan CasePlan::load_file(const std::string& path) {
    try {
        return parse_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<CasePlan> load_plans(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<CasePlan> plans;
    if (!fs::is_directory(dir)) throw ParseError("plan directory '" + dir + "' not found");
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() == ".json")
            plans.push_back(CasePlan::load_file(entry.path().string()));
    }
    std::sort(plans.begin(), plans.end(),
              [](const CasePlan& a, const CasePlan& b) { return a.id < b.id; });
    return plans;
}

// ---- Certificate --------------------------------------------------------------

HVector Certificate::target() const { return hv_from_json(doc_.at("target"), "target"); }

Status Certificate::conclusion() const {
    const auto s = status_from_name(field_str(doc_, "conclusion"));
    if (!s) throw ParseError("bad certificate conclusion");
    return *s;
}

std::string Certificate::engine() const { return field_str(doc_, "engine"); }

std::string Certificate::plan_id() const {
    return doc_.contains("plan_id") ? field_str(doc_, "plan_id") : std::string();
}

std::string Certificate::canonical_text() const { return doc_.dump(2) + "\n"; }

Certificate Certificate::parse_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || doc.at("format") != "hvcert-v1")
        throw ParseError("expected certificate format hvcert-v1");
    return Certificate(std::move(doc));
}

Certificate Certificate::load_file(const std::string& path) {
    try {
        return parse_text(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Certificate run_case_plan(const CasePlan& plan, const FactSet& fs) {
    Certificate cert(build_case_plan_certificate(plan, fs));
    std::string why;
    if (!verify_certificate(cert, fs, &why))
        throw PlanCheckFailure(plan.id + ": freshly built certificate fails verification: " +
                               why);
    return cert;
}

RefutationResult refute_by_enumeration(const HVector& top, const FactSet& fs,
                                       std::size_t max_survivors) {
    RefutationResult result;
    json doc = build_enumeration_certificate(top, fs, max_survivors, &result.survivors);
    if (!doc.is_null()) result.certificate = Certificate(std::move(doc));
    return result;
}

bool verify_certificate(const Certificate& cert, const FactSet& fs,
                        std::string* first_failure) {
    auto fail = [&](const std::string& why) {
        if (first_failure) *first_failure = why;
        return false;
    };
    try {
        const json& doc = cert.doc();
        if (!doc.is_object() || field_str(doc, "format") != "hvcert-v1")
            return fail("not a hvcert-v1 document");
        if (field_str(doc, "conclusion") != "NotGorenstein")
            return fail("only NotGorenstein certificates exist");
        const std::string engine = field_str(doc, "engine");

        json rebuilt;
        if (engine == "case_plan") {
            rebuilt = build_case_plan_certificate(plan_from_certificate(doc), fs);
        } else if (engine == "enumeration") {
            std::vector<Diagram> survivors;
            rebuilt = build_enumeration_certificate(cert.target(), fs,
                                                    /*max_survivors=*/1, &survivors);
            if (rebuilt.is_null())
                return fail("target is not refutable by enumeration against this fact set");
        } else {
            return fail("unknown engine '" + engine + "'");
        }

        const std::string got = cert.canonical_text();
        const std::string want = Certificate(rebuilt).canonical_text();
        if (got != want) {
            std::istringstream a(got), b(want);
            std::string la, lb;
            std::size_t line = 0;
            while (std::getline(a, la) && std::getline(b, lb)) {
                ++line;
                if (la != lb)
                    return fail("recomputation differs at line " + std::to_string(line) +
                                ": certificate has '" + la + "', recomputation gives '" + lb +
                                "'");
            }
            return fail("certificate and recomputation differ in length");
        }
        return true;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

}  // namespace hvlab
