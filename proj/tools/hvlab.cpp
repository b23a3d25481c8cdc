// hvlab: exact bound calculus for Hilbert functions, a fact base with
// derivation rules, replayable nonexistence certificates, and the
// classification tables for symmetric candidates of socle degree 4 and 5.

#include "hvlab/classify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace hvlab;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUnproven = 2;
constexpr int kExitUsage = 64;

std::string default_data_dir() {
    if (const char* env = std::getenv("HVLAB_DATA")) return env;
#ifdef HVLAB_DEFAULT_DATA_DIR
    return HVLAB_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

FactSet load_facts(const std::string& facts_path) {
    if (facts_path.empty()) return seed_paper_facts();
    std::ifstream in(facts_path, std::ios::binary);
    if (!in) throw ParseError("cannot open facts file '" + facts_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_facts(buf.str());
}

std::vector<CasePlan> load_plan_dir(const std::string& plans_dir) {
    return load_plans(plans_dir.empty() ? default_data_dir() + "/plans" : plans_dir);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::string describe_diagram(const Diagram& d) {
    std::ostringstream out;
    out << "mid=";
    for (std::size_t i = 0; i < d.mid.size(); ++i) out << (i ? "," : "") << d.mid[i];
    out << " bot=";
    for (std::size_t i = 0; i < d.bot.size(); ++i) out << (i ? "," : "") << d.bot[i];
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Macaulay bound calculus and Gorenstein h-vector classification"};
    app.require_subcommand(1);

    // expand -----------------------------------------------------------------
    Nat expand_n = 0;
    unsigned expand_d = 0;
    auto* cmd_expand = app.add_subcommand("expand", "binomial expansion of N in degree D");
    cmd_expand->add_option("N", expand_n, "value to expand")->required();
    cmd_expand->add_option("-d,--degree", expand_d, "expansion degree")->required();

    // bound ------------------------------------------------------------------
    std::string bound_kind;
    Nat bound_n = 0;
    unsigned bound_d = 0;
    unsigned bound_s = 0;
    auto* cmd_bound = app.add_subcommand("bound", "growth/restriction/persistence bounds");
    cmd_bound->add_option("kind", bound_kind, "one of next|prev|green|persist")
        ->required()
        ->check(CLI::IsMember({"next", "prev", "green", "persist"}));
    cmd_bound->add_option("N", bound_n, "Hilbert function value")->required();
    cmd_bound->add_option("-d,--degree", bound_d, "degree of N")->required();
    auto* bound_s_opt = cmd_bound->add_option("-s,--shift", bound_s, "persistence shift");

    // check ------------------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "predicates on h-vectors");
    cmd_check->require_subcommand(1);
    std::string check_hv;
    auto* chk_oseq = cmd_check->add_subcommand("oseq", "Macaulay growth at every degree");
    chk_oseq->add_option("HVEC", check_hv, "comma-separated h-vector")->required();
    auto* chk_sym = cmd_check->add_subcommand("symmetric", "entrywise symmetry");
    chk_sym->add_option("HVEC", check_hv, "comma-separated h-vector")->required();
    std::string check_quot;
    auto* chk_ld = cmd_check->add_subcommand("level-decomp",
                                             "reverse-difference decomposition test");
    chk_ld->add_option("HVEC", check_hv, "level h-vector")->required();
    chk_ld->add_option("QUOT", check_quot, "level quotient of type one less")->required();

    // construct ----------------------------------------------------------------
    auto* cmd_construct = app.add_subcommand("construct", "h-vector constructions");
    cmd_construct->require_subcommand(1);
    std::string construct_hv;
    auto* con_te = cmd_construct->add_subcommand("trivial-ext",
                                                 "trivial extension of a level h-vector");
    con_te->add_option("HVEC", construct_hv, "level h-vector")->required();
    Nat cl_r = 0, cl_t = 0;
    unsigned cl_e = 0;
    auto* con_cl = cmd_construct->add_subcommand("compressed-level",
                                                 "truncated compressed level candidate");
    con_cl->add_option("-r,--codim", cl_r, "codimension")->required();
    con_cl->add_option("-t,--type", cl_t, "socle type")->required();
    con_cl->add_option("-e,--socle-degree", cl_e, "socle degree")->required();

    // classify -----------------------------------------------------------------
    unsigned classify_e = 0;
    Nat classify_max_r = 0;
    std::string classify_format = "table";
    std::string classify_facts;
    std::string classify_plans;
    auto* cmd_classify = app.add_subcommand("classify", "full status table for (r, h2)");
    cmd_classify->add_option("-e,--socle-degree", classify_e, "4 or 5")->required();
    cmd_classify->add_option("--max-codim", classify_max_r, "largest codimension")->required();
    cmd_classify->add_option("--format", classify_format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd_classify->add_option("--facts", classify_facts, "facts file (default: built-in seeds)");
    cmd_classify->add_option("--plans", classify_plans, "plan directory");

    // prove ----------------------------------------------------------------------
    std::string prove_hv;
    std::string prove_emit;
    std::string prove_facts;
    std::string prove_plans;
    Nat prove_bound = 30;
    auto* cmd_prove = app.add_subcommand("prove", "refute a symmetric candidate");
    cmd_prove->add_option("HVEC", prove_hv, "target h-vector")->required();
    cmd_prove->add_option("--emit-cert", prove_emit, "write the certificate here");
    cmd_prove->add_option("--facts", prove_facts, "facts file (default: built-in seeds)");
    cmd_prove->add_option("--plans", prove_plans, "plan directory");
    cmd_prove->add_option("--max-codim", prove_bound, "closure bound");

    // verify -----------------------------------------------------------------------
    std::string verify_path;
    std::string verify_facts;
    std::string verify_plans;
    Nat verify_bound = 30;
    auto* cmd_verify = app.add_subcommand("verify", "recheck a certificate");
    cmd_verify->add_option("CERT", verify_path, "certificate file")->required();
    cmd_verify->add_option("--facts", verify_facts, "facts file (default: built-in seeds)");
    cmd_verify->add_option("--plans", verify_plans, "plan directory");
    cmd_verify->add_option("--max-codim", verify_bound, "closure bound");

    // facts ---------------------------------------------------------------------------
    auto* cmd_facts = app.add_subcommand("facts", "inspect or move fact sets");
    cmd_facts->require_subcommand(1);
    std::string facts_path;
    std::string facts_out;
    std::string facts_format = "table";
    bool facts_closed = false;
    Nat facts_bound = 30;
    auto* f_list = cmd_facts->add_subcommand("list", "print records");
    f_list->add_option("--facts", facts_path, "facts file (default: built-in seeds)");
    f_list->add_option("--format", facts_format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));
    f_list->add_flag("--closed", facts_closed, "apply closure first");
    f_list->add_option("--max-codim", facts_bound, "closure bound");
    auto* f_export = cmd_facts->add_subcommand("export", "canonical fact file to stdout");
    f_export->add_option("--facts", facts_path, "facts file (default: built-in seeds)");
    f_export->add_option("-o,--output", facts_out, "write here instead of stdout");
    f_export->add_flag("--closed", facts_closed, "apply closure first");
    f_export->add_option("--max-codim", facts_bound, "closure bound");
    std::string facts_in;
    auto* f_import = cmd_facts->add_subcommand("import", "parse and validate a fact file");
    f_import->add_option("FILE", facts_in, "fact file")->required();
    f_import->add_option("-o,--output", facts_out, "re-export here (round-trip check)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_expand->parsed()) {
            std::cout << macaulay_rep(expand_n, expand_d).to_string() << "\n";
            return kExitOk;
        }

        if (cmd_bound->parsed()) {
            if (bound_kind == "persist") {
                if (bound_s_opt->count() == 0) {
                    std::cerr << "bound persist needs -s\n";
                    return kExitUsage;
                }
                std::cout << gotzmann_persistence(bound_n, bound_d, bound_s) << "\n";
            } else {
                if (bound_s_opt->count() != 0) {
                    std::cerr << "-s only applies to bound persist\n";
                    return kExitUsage;
                }
                if (bound_kind == "next")
                    std::cout << macaulay_next(bound_n, bound_d) << "\n";
                else if (bound_kind == "prev")
                    std::cout << macaulay_prev(bound_n, bound_d) << "\n";
                else
                    std::cout << green_restrict(bound_n, bound_d) << "\n";
            }
            return kExitOk;
        }

        if (chk_oseq->parsed()) {
            const HVector h = HVector::parse(check_hv);
            if (const auto d = first_growth_violation(h)) {
                std::cout << "not an O-sequence: entry " << h[*d + 1] << " at degree "
                          << (*d + 1) << " exceeds Macaulay bound "
                          << macaulay_next(h[*d], *d) << " from degree " << *d << "\n";
                return kExitUnproven;
            }
            std::cout << "O-sequence\n";
            return kExitOk;
        }
        if (chk_sym->parsed()) {
            const HVector h = HVector::parse(check_hv);
            std::cout << (is_symmetric(h) ? "symmetric" : "not symmetric") << "\n";
            return is_symmetric(h) ? kExitOk : kExitUnproven;
        }
        if (chk_ld->parsed()) {
            const HVector h = HVector::parse(check_hv);
            const HVector q = HVector::parse(check_quot);
            const std::vector<Nat> rd = reverse_difference(h, q);
            std::ostringstream rd_text;
            for (std::size_t i = 0; i < rd.size(); ++i) rd_text << (i ? "," : "") << rd[i];
            if (level_decomposition_check(h, q)) {
                std::cout << "admissible: reverse difference " << rd_text.str()
                          << " is an O-sequence\n";
                return kExitOk;
            }
            std::cout << "inadmissible: reverse difference " << rd_text.str()
                      << " fails Macaulay growth\n";
            return kExitUnproven;
        }

        if (con_te->parsed()) {
            std::cout << trivial_extension(HVector::parse(construct_hv)).to_string() << "\n";
            return kExitOk;
        }
        if (con_cl->parsed()) {
            std::cout << compressed_level_candidate(cl_r, cl_t, cl_e).to_string() << "\n";
            return kExitOk;
        }

        if (cmd_classify->parsed()) {
            const FactSet seeds = load_facts(classify_facts);
            const std::vector<CasePlan> plans = load_plan_dir(classify_plans);
            const ClassificationTable table =
                classify(classify_e, classify_max_r, seeds, plans);
            if (classify_format == "json")
                std::cout << render_json(table);
            else if (classify_format == "csv")
                std::cout << render_csv(table);
            else
                std::cout << render_table(table);
            return kExitOk;
        }

        if (cmd_prove->parsed()) {
            const HVector target = HVector::parse(prove_hv);
            FactSet fs = apply_closure(load_facts(prove_facts), prove_bound);
            std::optional<Certificate> cert;
            for (const CasePlan& plan : load_plan_dir(prove_plans)) {
                if (plan.target == target) {
                    cert = run_case_plan(plan, fs);
                    break;
                }
            }
            if (!cert) {
                RefutationResult res = refute_by_enumeration(target, fs);
                if (!res.refuted()) {
                    std::cout << "inconclusive: " << res.survivors.size()
                              << " diagram(s) survive\n";
                    for (const Diagram& d : res.survivors)
                        std::cout << "  " << describe_diagram(d) << "\n";
                    return kExitUnproven;
                }
                cert = std::move(res.certificate);
            }
            if (!prove_emit.empty()) write_text(prove_emit, cert->canonical_text());
            std::cout << "NotGorenstein: " << target.to_string();
            if (!cert->plan_id().empty()) std::cout << " (plan " << cert->plan_id() << ")";
            std::cout << "\n";
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            const Certificate cert = Certificate::load_file(verify_path);
            const FactSet fs = apply_closure(load_facts(verify_facts), verify_bound);
            std::string why;
            if (verify_certificate(cert, fs, &why)) {
                std::cout << "OK: certificate for " << cert.target().to_string()
                          << " verifies (" << status_name(cert.conclusion()) << ")\n";
                return kExitOk;
            }
            std::cout << "FAIL: " << why << "\n";
            return kExitUnproven;
        }

        if (f_list->parsed() || f_export->parsed()) {
            FactSet fs = load_facts(facts_path);
            if (facts_closed) fs = apply_closure(fs, facts_bound);
            if (f_export->parsed()) {
                const std::string text = export_facts(fs);
                if (facts_out.empty())
                    std::cout << text;
                else
                    write_text(facts_out, text);
                return kExitOk;
            }
            if (facts_format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& [key, rec] : fs.records())
                    rows.push_back({{"hvector", key},
                                    {"provenance",
                                     rec.provenance ? rec.provenance->to_string() : "none"},
                                    {"status", status_name(rec.status)}});
                std::cout << nlohmann::json({{"format", "hvfacts-v1"}, {"records", rows}})
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& [key, rec] : fs.records())
                    std::cout << key << "  " << status_name(rec.status) << "  "
                              << (rec.provenance ? rec.provenance->to_string() : "none")
                              << "\n";
            }
            return kExitOk;
        }
        if (f_import->parsed()) {
            std::ifstream in(facts_in, std::ios::binary);
            if (!in) throw ParseError("cannot open '" + facts_in + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            const FactSet fs = import_facts(buf.str());
            if (!facts_out.empty()) write_text(facts_out, export_facts(fs));
            std::cout << "imported " << fs.size() << " records\n";
            return kExitOk;
        }
    } catch (const PlanCheckFailure& e) {
        std::cerr << "plan check failure: " << e.what() << "\n";
        return kExitUnproven;
    } catch (const IncompleteCover& e) {
        std::cerr << "incomplete cover: " << e.what() << "\n";
        return kExitUnproven;
    } catch (const StatusConflict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
