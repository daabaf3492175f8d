#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "falc/canonical.hpp"
#include "falc/fixtures.hpp"
#include "falc/kb_format.hpp"
#include "falc/model_search.hpp"
#include "falc/semantics.hpp"
#include "falc/tbox_analysis.hpp"
#include "falc/transform.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

falc::Family parse_family(const std::string& name) {
    auto f = falc::family_from_string(name);
    if (!f)
        throw std::runtime_error(
            "unknown family '" + name +
            "' (expected zadeh, lukasiewicz/luk, product/prod, goedel/godel)");
    return *f;
}

// In JSON mode exactly one document goes to stdout and the human report is
// suppressed entirely.
struct Output {
    bool json_mode = false;
    json doc;
    void line(const std::string& s) {
        if (!json_mode) std::cout << s << "\n";
    }
    void finish() {
        if (json_mode) std::cout << doc.dump(2) << "\n";
    }
};

json axiom_check_json(const falc::AxiomCheck& chk) {
    return {{"axiom", falc::axiom_text(chk.axiom)},
            {"satisfied", chk.satisfied},
            {"achieved", chk.achieved.str()},
            {"required", chk.required.str()}};
}

int report_satisfaction(Output& out, const falc::SatisfactionReport& report) {
    out.doc["axioms"] = json::array();
    for (const falc::AxiomCheck& chk : report.per_axiom) {
        out.doc["axioms"].push_back(axiom_check_json(chk));
        out.line(std::string(chk.satisfied ? "ok       " : "VIOLATED ") +
                 falc::axiom_text(chk.axiom) + "   [achieved " +
                 chk.achieved.str() + ", required " +
                 (chk.axiom.kind == falc::AxiomKind::ConceptLeq ? "<= " : ">= ") +
                 chk.required.str() + "]");
    }
    for (const std::string& w : report.warnings) out.line("warning: " + w);
    out.doc["warnings"] = report.warnings;
    out.doc["satisfied"] = report.overall;
    out.line(report.overall ? "satisfied: all axioms hold"
                            : "not satisfied");
    out.finish();
    return report.overall ? 0 : 1;
}

int run_check_model(const std::string& kb_path, const std::string& model_path,
                    const std::string& family_name, bool strict,
                    bool allow_generated, bool json_mode) {
    falc::ParseOptions opts{allow_generated};
    falc::KnowledgeBase kb = falc::parse_kb(read_file(kb_path), opts);
    falc::FiniteInterpretation model =
        falc::parse_interpretation(read_file(model_path), opts);
    falc::Family family = parse_family(family_name);
    Output out{json_mode, {{"command", "check-model"}}};
    falc::SatisfactionReport report =
        falc::check_kb(model, family, kb, strict);
    return report_satisfaction(out, report);
}

int run_sat_search(const std::string& kb_path, const std::string& family_name,
                   std::size_t max_size,
                   const std::vector<unsigned long>& denominators,
                   std::optional<unsigned long long> budget, bool crisp_roles,
                   const std::string& out_path, bool allow_generated,
                   bool json_mode, bool quiet) {
    falc::ParseOptions opts{allow_generated};
    falc::KnowledgeBase kb = falc::parse_kb(read_file(kb_path), opts);
    falc::Family family = parse_family(family_name);
    falc::SearchBounds bounds;
    bounds.max_size = max_size;
    if (!denominators.empty()) bounds.denominators = denominators;
    bounds.node_budget = budget;
    bounds.crisp_roles = crisp_roles;

    falc::SearchProgress progress;
    if (!quiet)
        progress = [](std::size_t size, const falc::SearchStats& stats) {
            std::cerr << "progress: size=" << size
                      << " enumerated=" << stats.enumerated << "\n";
        };

    Output out{json_mode, {{"command", "sat-search"}}};
    falc::SearchOutcome outcome = falc::sat_search(kb, family, bounds, progress);
    out.doc["enumerated"] = outcome.stats.enumerated;
    out.doc["pruned"] = outcome.stats.pruned;
    out.doc["elapsed_seconds"] = outcome.stats.elapsed_seconds;
    out.doc["note"] = outcome.note;

    switch (outcome.status) {
        case falc::SearchStatus::Sat: {
            out.doc["status"] = "sat";
            std::string model_text = falc::serialize_interpretation(*outcome.model);
            out.doc["model"] = model_text;
            out.line("sat: model found (" +
                     std::to_string(outcome.stats.enumerated) +
                     " candidates examined)");
            if (!out_path.empty()) {
                write_file(out_path, model_text);
                out.doc["model_file"] = out_path;
                out.line("model written to " + out_path);
            } else if (!json_mode) {
                std::cout << model_text;
            }
            out.finish();
            return 0;
        }
        case falc::SearchStatus::UnsatWithinBounds:
            out.doc["status"] = "unsat-within-bounds";
            out.line("unsat-within-bounds: " + outcome.note);
            out.line("candidates examined: " +
                     std::to_string(outcome.stats.enumerated));
            out.finish();
            return 1;
        case falc::SearchStatus::BudgetExhausted:
            out.doc["status"] = "budget-exhausted";
            out.line("budget-exhausted (inconclusive): " + outcome.note);
            out.finish();
            return 1;
    }
    return 2;
}

int run_analyze(const std::string& kb_path, bool allow_generated,
                bool json_mode) {
    falc::ParseOptions opts{allow_generated};
    falc::KnowledgeBase kb = falc::parse_kb(read_file(kb_path), opts);
    falc::TBoxClassification cls = falc::classify_tbox(kb.tbox);
    Output out{json_mode, {{"command", "analyze"}}};
    out.doc["violations"] = json::array();
    for (const falc::Violation& v : cls.violations) {
        json jv = {{"kind", std::string(falc::violation_kind_name(v.kind))},
                   {"detail", v.detail}};
        if (!v.cycle.empty()) jv["cycle"] = v.cycle;
        out.doc["violations"].push_back(jv);
        out.line(std::string(falc::violation_kind_name(v.kind)) + ": " +
                 v.detail);
    }
    out.doc["acyclic"] = cls.acyclic;
    out.doc["unfoldable"] = cls.unfoldable;
    out.line(std::string("acyclic: ") + (cls.acyclic ? "yes" : "no"));
    out.line(std::string("unfoldable: ") + (cls.unfoldable ? "yes" : "no"));
    out.finish();
    return cls.unfoldable ? 0 : 1;
}

int run_unfold(const std::string& kb_path, const std::string& family_name,
               const std::string& encoding_name, const std::string& out_path,
               std::string trace_path, bool allow_generated, bool json_mode) {
    falc::ParseOptions opts{allow_generated};
    falc::KnowledgeBase kb = falc::parse_kb(read_file(kb_path), opts);
    falc::Family family = parse_family(family_name);
    falc::GciEncoding encoding;
    if (encoding_name == "tnorm")
        encoding = falc::GciEncoding::Tnorm;
    else if (encoding_name == "min")
        encoding = falc::GciEncoding::Min;
    else
        throw std::runtime_error("encoding must be 'tnorm' or 'min'");

    Output out{json_mode, {{"command", "unfold"}}};
    std::string trace_text;

    falc::TBoxClassification cls = falc::classify_tbox(kb.tbox);
    falc::KnowledgeBase work = kb;
    if (!cls.unfoldable) {
        auto [converted, trace] = falc::acyclic_to_unfoldable(kb, family);
        work = std::move(converted);
        trace_text += falc::serialize_trace(trace);
        out.line("absorbed sub-unit degrees: " +
                 std::to_string(trace.steps.size()) + " rewrite(s)");
    }
    auto [astar, trace] = falc::unfold_to_abox(work, encoding, family);
    trace_text += falc::serialize_trace(trace);

    std::string kb_text = falc::serialize_kb(astar);
    write_file(out_path, kb_text);
    if (trace_path.empty()) trace_path = out_path + ".trace";
    write_file(trace_path, trace_text);

    out.doc["output"] = out_path;
    out.doc["trace"] = trace_path;
    out.doc["abox_axioms"] = astar.abox.size();
    out.line("assertional core written to " + out_path + " (" +
             std::to_string(astar.abox.size()) + " axioms), trace to " +
             trace_path);
    out.line("note: generated names contain apostrophes; re-read such files "
             "with --allow-generated");
    out.finish();
    return 0;
}

int run_gadget(const std::string& alpha_text, unsigned long sweep,
               bool json_mode) {
    std::string err;
    auto alpha = falc::Degree::parse(alpha_text, &err);
    if (!alpha) throw std::runtime_error("bad --alpha: " + err);
    if (alpha->is_zero() || alpha->is_one())
        throw std::runtime_error(
            "no gadget for degree " + alpha->str() +
            ": degree-1 axioms pass through and degree-0 axioms are vacuous");

    falc::GadgetSpec g = falc::synthesize_gadget(*alpha);
    if (sweep == 0) sweep = 4;
    falc::GadgetReport report = falc::verify_gadget(g, sweep);

    Output out{json_mode, {{"command", "gadget"}}};
    out.doc["alpha"] = g.alpha.str();
    out.doc["gadget"] = falc::to_text(g.gadget);
    out.doc["gadget_unicode"] = falc::to_unicode(g.gadget);
    out.doc["bound"] = g.bound.str();
    out.doc["witness_input"] = g.witness_input.str();
    out.doc["verified"] = report.pass;
    out.doc["max_value"] = report.max_value.str();
    out.doc["points_checked"] = report.points_checked;

    out.line("alpha: " + g.alpha.str());
    out.line("gadget: " + falc::to_text(g.gadget));
    out.line("unicode: " + falc::to_unicode(g.gadget));
    out.line("bound: " + g.bound.str());
    out.line("witness-input: " + g.witness_input.str());
    if (report.pass) {
        out.line("verify: pass (max " + report.max_value.str() + " at " +
                 report.attained_at.str() + ", " +
                 std::to_string(report.points_checked) +
                 " inputs checked, all breakpoints covered)");
    } else {
        out.line("verify: FAIL at input " +
                 (report.counterexample ? report.counterexample->str()
                                        : std::string("?")));
    }
    out.finish();
    return report.pass ? 0 : 1;
}

int run_fmp_demo(const std::string& family_name, unsigned long depth,
                 std::size_t search_size,
                 std::vector<unsigned long> search_denominators,
                 bool json_mode) {
    falc::Family family = parse_family(family_name);
    falc::CanonicalModel model(family);
    falc::PrefixReport report = falc::verify_k2_prefix(model, depth);

    Output out{json_mode, {{"command", "fmp-demo"}}};
    out.doc["family"] = std::string(falc::family_name(family));
    out.doc["depth"] = depth;

    const unsigned long shown = 8;
    unsigned long printed = 0;
    for (const falc::PrefixIdentity& chk : report.checks) {
        bool interesting = !chk.holds || printed < 4 * shown;
        if (interesting && printed < 4 * shown + 64) {
            out.line(std::string(chk.holds ? "ok   " : "FAIL ") + "node " +
                     chk.node + ": " + chk.axiom + "   [" + chk.lhs + " vs " +
                     chk.rhs + "]");
            ++printed;
        }
    }
    if (report.checks.size() > printed)
        out.line("... (" + std::to_string(report.checks.size()) +
                 " identities checked in total)");
    out.doc["identities_checked"] = report.checks.size();
    out.doc["all_pass"] = report.all_pass;
    out.line(report.all_pass
                 ? "all identities pass exactly at every checked node"
                 : "IDENTITY FAILURES FOUND");

    if (search_denominators.empty()) search_denominators = {1, 2};
    falc::SearchBounds bounds;
    bounds.max_size = search_size;
    bounds.denominators = search_denominators;
    falc::SearchOutcome outcome =
        falc::sat_search(falc::k2(), family, bounds, {});
    bool unsat = outcome.status == falc::SearchStatus::UnsatWithinBounds;
    out.doc["bounded_search"] = {
        {"status", unsat ? "unsat-within-bounds" : "unexpected"},
        {"max_size", bounds.max_size},
        {"enumerated", outcome.stats.enumerated}};
    out.line("bounded search: " +
             std::string(unsat ? "no finite model" : "UNEXPECTED RESULT") +
             " up to size " + std::to_string(bounds.max_size) + " (" +
             std::to_string(outcome.stats.enumerated) +
             " candidates); this is a bounded corroboration of the "
             "no-finite-model result, not a proof");
    out.finish();
    return report.all_pass && unsat ? 0 : 1;
}

int run_fmp_forced_seq(const std::string& family_name, std::size_t n,
                       bool json_mode) {
    falc::Family family = parse_family(family_name);
    Output out{json_mode, {{"command", "fmp-forced-seq"}}};
    std::string lineout;
    json values = json::array();
    if (family == falc::Family::Lukasiewicz) {
        for (const falc::Degree& d : falc::forced_sequence_luk(n)) {
            if (!lineout.empty()) lineout += " ";
            lineout += d.str();
            values.push_back(d.str());
        }
    } else if (family == falc::Family::Product) {
        for (const falc::LogDyadic& d : falc::forced_sequence_product(n)) {
            if (!lineout.empty()) lineout += " ";
            lineout += d.str();
            values.push_back(d.str());
        }
    } else {
        throw std::runtime_error(
            "forced sequences exist for lukasiewicz and product only");
    }
    out.doc["values"] = values;
    out.line(lineout);
    out.finish();
    return 0;
}

int run_fmp_classify(const std::string& family_name,
                     const std::string& concept_text, unsigned long verify_depth,
                     unsigned long tolerance, bool json_mode) {
    falc::Family family = parse_family(family_name);
    falc::ConceptRef c = falc::parse_concept_text(concept_text);
    Output out{json_mode, {{"command", "fmp-classify"}}};
    std::string klass;
    if (family == falc::Family::Lukasiewicz) {
        klass = std::string(falc::tail_class_name(falc::tail_classify_luk(c)));
    } else if (family == falc::Family::Product) {
        klass =
            std::string(falc::tail_class_name(falc::tail_classify_product(c)));
    } else {
        throw std::runtime_error(
            "tail classification exists for lukasiewicz and product only");
    }
    out.doc["concept"] = falc::to_text(c);
    out.doc["class"] = klass;
    out.line(klass);

    if (verify_depth > 0) {
        if (family == falc::Family::Product && falc::contains_or(c))
            throw falc::UnsupportedEvaluation(
                "cannot verify against the Product model prefix: log-dyadic "
                "values are not closed under the Product t-conorm, so "
                "concepts containing 'or' cannot be evaluated there");
        falc::CanonicalModel model(family);
        falc::TailConsistency consistency =
            falc::classify_vs_prefix(model, c, verify_depth, tolerance);
        out.doc["prefix_consistent"] = consistency.consistent;
        if (consistency.crossover)
            out.doc["crossover_node"] = *consistency.crossover;
        out.line(consistency.consistent
                     ? "prefix evaluation consistent (settled from node " +
                           std::to_string(consistency.crossover.value_or(0)) +
                           ")"
                     : "PREFIX INCONSISTENT: " + consistency.detail);
        out.finish();
        return consistency.consistent ? 0 : 1;
    }
    out.finish();
    return 0;
}

int run_fmp_export(const std::string& family_name, unsigned long depth,
                   const std::string& out_path, bool json_mode) {
    falc::Family family = parse_family(family_name);
    falc::CanonicalModel model(family);
    std::string caveat;
    falc::FiniteInterpretation prefix = model.export_luk_prefix(depth, &caveat);
    std::string text = "# " + caveat + "\n" + falc::serialize_interpretation(prefix);
    Output out{json_mode, {{"command", "fmp-export"}}};
    if (out_path.empty()) {
        if (!json_mode) std::cout << text;
        out.doc["interpretation"] = text;
    } else {
        write_file(out_path, text);
        out.doc["output"] = out_path;
        out.line("prefix written to " + out_path);
    }
    out.doc["caveat"] = caveat;
    out.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"falc: exact-arithmetic model tools for fuzzy ALC"};
    app.require_subcommand(1);
    std::function<int()> action;

    // check-model
    {
        auto* cmd = app.add_subcommand(
            "check-model", "check a knowledge base against a model file");
        auto kb = std::make_shared<std::string>();
        auto model = std::make_shared<std::string>();
        auto family = std::make_shared<std::string>();
        auto strict = std::make_shared<bool>(false);
        auto allow = std::make_shared<bool>(false);
        auto jsonf = std::make_shared<bool>(false);
        cmd->add_option("--kb", *kb, "knowledge base file")->required();
        cmd->add_option("--model", *model, "interpretation file")->required();
        cmd->add_option("--family", *family, "operator family")->required();
        cmd->add_flag("--strict", *strict,
                      "error on names with no declared map");
        cmd->add_flag("--allow-generated", *allow,
                      "accept generated (primed) names in inputs");
        cmd->add_flag("--json", *jsonf, "machine-readable output");
        cmd->callback([=, &action] {
            action = [=] {
                return run_check_model(*kb, *model, *family, *strict, *allow,
                                       *jsonf);
            };
        });
    }

    // sat-search
    {
        auto* cmd = app.add_subcommand(
            "sat-search", "bounded brute-force satisfiability search");
        auto kb = std::make_shared<std::string>();
        auto family = std::make_shared<std::string>();
        auto max_size = std::make_shared<std::size_t>(1);
        auto denoms = std::make_shared<std::vector<unsigned long>>();
        auto budget = std::make_shared<unsigned long long>(0);
        auto crisp = std::make_shared<bool>(false);
        auto out_path = std::make_shared<std::string>();
        auto allow = std::make_shared<bool>(false);
        auto jsonf = std::make_shared<bool>(false);
        auto quiet = std::make_shared<bool>(false);
        cmd->add_option("--kb", *kb, "knowledge base file")->required();
        cmd->add_option("--family", *family, "operator family")->required();
        cmd->add_option("--max-size", *max_size, "largest domain size")
            ->required();
        cmd->add_option("--denominators", *denoms,
                        "grid denominators, e.g. 1,2,4")
            ->delimiter(',');
        cmd->add_option("--budget", *budget, "candidate budget (0 = none)");
        cmd->add_flag("--crisp-roles", *crisp, "restrict role degrees to {0,1}");
        cmd->add_option("--out", *out_path, "write a found model here");
        cmd->add_flag("--allow-generated", *allow,
                      "accept generated (primed) names in inputs");
        cmd->add_flag("--json", *jsonf, "machine-readable output");
        cmd->add_flag("--quiet", *quiet, "suppress progress lines");
        cmd->callback([=, &action] {
            action = [=] {
                std::optional<unsigned long long> b;
                if (*budget) b = *budget;
                return run_sat_search(*kb, *family, *max_size, *denoms, b,
                                      *crisp, *out_path, *allow, *jsonf,
                                      *quiet);
            };
        });
    }

    // analyze
    {
        auto* cmd =
            app.add_subcommand("analyze", "classify a TBox (acyclic/unfoldable)");
        auto kb = std::make_shared<std::string>();
        auto allow = std::make_shared<bool>(false);
        auto jsonf = std::make_shared<bool>(false);
        cmd->add_option("--kb", *kb, "knowledge base file")->required();
        cmd->add_flag("--allow-generated", *allow,
                      "accept generated (primed) names in inputs");
        cmd->add_flag("--json", *jsonf, "machine-readable output");
        cmd->callback([=, &action] {
            action = [=] { return run_analyze(*kb, *allow, *jsonf); };
        });
    }

    // unfold
    {
        auto* cmd = app.add_subcommand(
            "unfold", "eliminate an acyclic TBox into a pure ABox");
        auto kb = std::make_shared<std::string>();
        auto family = std::make_shared<std::string>();
        auto encoding = std::make_shared<std::string>("tnorm");
        auto out_path = std::make_shared<std::string>();
        auto trace_path = std::make_shared<std::string>();
        auto allow = std::make_shared<bool>(false);
        auto jsonf = std::make_shared<bool>(false);
        cmd->add_option("--kb", *kb, "knowledge base file")->required();
        cmd->add_option("--family", *family, "operator family")->required();
        cmd->add_option("--encoding", *encoding, "tnorm or min");
        cmd->add_option("--out", *out_path, "output ABox file")->required();
        cmd->add_option("--trace", *trace_path,
                        "trace file (default: <out>.trace)");
        cmd->add_flag("--allow-generated", *allow,
                      "accept generated (primed) names in inputs");
        cmd->add_flag("--json", *jsonf, "machine-readable output");
        cmd->callback([=, &action] {
            action = [=] {
                return run_unfold(*kb, *family, *encoding, *out_path,
                                  *trace_path, *allow, *jsonf);
            };
        });
    }

    // gadget
    {
        auto* cmd = app.add_subcommand(
            "gadget", "synthesize and verify a sub-unit degree absorber");
        auto alpha = std::make_shared<std::string>();
        auto sweep = std::make_shared<unsigned long>(4);
        auto jsonf = std::make_shared<bool>(false);
        cmd->add_option("--alpha", *alpha, "degree p/q with 0 < p/q < 1")
            ->required();
        cmd->add_option("--sweep", *sweep, "sweep density (points per 1/q)");
        cmd->add_flag("--json", *jsonf, "machine-readable output");
        cmd->callback([=, &action] {
            action = [=] { return run_gadget(*alpha, *sweep, *jsonf); };
        });
    }

    // fmp
    {
        auto* fmp = app.add_subcommand(
            "fmp", "the infinite-model machinery of the bundled KB");
        fmp->require_subcommand(1);

        auto* demo = fmp->add_subcommand(
            "demo", "verify the canonical model identities node by node");
        auto dfam = std::make_shared<std::string>();
        auto ddepth = std::make_shared<unsigned long>(100);
        auto dsize = std::make_shared<std::size_t>(2);
        auto ddenoms = std::make_shared<std::vector<unsigned long>>();
        auto djson = std::make_shared<bool>(false);
        demo->add_option("--family", *dfam, "lukasiewicz or product")
            ->required();
        demo->add_option("--depth", *ddepth, "nodes to check");
        demo->add_option("--search-size", *dsize,
                         "bounded-search size for the no-model summary");
        demo->add_option("--search-denominators", *ddenoms,
                         "bounded-search grid denominators")
            ->delimiter(',');
        demo->add_flag("--json", *djson, "machine-readable output");
        demo->callback([=, &action] {
            action = [=] {
                return run_fmp_demo(*dfam, *ddepth, *dsize, *ddenoms, *djson);
            };
        });

        auto* seq = fmp->add_subcommand(
            "forced-seq", "the degree sequence forced in every witnessed model");
        auto sfam = std::make_shared<std::string>();
        auto sn = std::make_shared<std::size_t>(4);
        auto sjson = std::make_shared<bool>(false);
        seq->add_option("--family", *sfam, "lukasiewicz or product")
            ->required();
        seq->add_option("-n,--length", *sn, "sequence length");
        seq->add_flag("--json", *sjson, "machine-readable output");
        seq->callback([=, &action] {
            action = [=] { return run_fmp_forced_seq(*sfam, *sn, *sjson); };
        });

        auto* cls = fmp->add_subcommand(
            "classify", "tail behavior of a concept on the canonical model");
        auto cfam = std::make_shared<std::string>();
        auto cconcept = std::make_shared<std::string>();
        auto cdepth = std::make_shared<unsigned long>(0);
        auto ctol = std::make_shared<unsigned long>(16);
        auto cjson = std::make_shared<bool>(false);
        cls->add_option("--family", *cfam, "lukasiewicz or product")
            ->required();
        cls->add_option("--concept", *cconcept, "concept expression")
            ->required();
        cls->add_option("--verify-depth", *cdepth,
                        "also check against evaluation at this many nodes");
        cls->add_option("--tolerance", *ctol,
                        "tolerance denominator for the prefix check");
        cls->add_flag("--json", *cjson, "machine-readable output");
        cls->callback([=, &action] {
            action = [=] {
                return run_fmp_classify(*cfam, *cconcept, *cdepth, *ctol,
                                        *cjson);
            };
        });

        auto* exp = fmp->add_subcommand(
            "export", "export a finite prefix of the canonical model");
        auto efam = std::make_shared<std::string>("lukasiewicz");
        auto edepth = std::make_shared<unsigned long>(8);
        auto eout = std::make_shared<std::string>();
        auto ejson = std::make_shared<bool>(false);
        exp->add_option("--family", *efam, "lukasiewicz (product is irrational)");
        exp->add_option("--depth", *edepth, "nodes to export");
        exp->add_option("--out", *eout, "output file (default: stdout)");
        exp->add_flag("--json", *ejson, "machine-readable output");
        exp->callback([=, &action] {
            action = [=] {
                return run_fmp_export(*efam, *edepth, *eout, *ejson);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const falc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        if (!e.expected.empty()) {
            std::cerr << "expected:";
            for (const std::string& t : e.expected) std::cerr << " " << t;
            std::cerr << "\n";
        }
        return 2;
    } catch (const falc::UnsupportedEvaluation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const falc::TransformError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
