#include "falc/transform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "falc/semantics.hpp"
#include "falc/tbox_analysis.hpp"

namespace falc {

FreshNames::FreshNames(const Signature& sig)
    : used_(sig.concepts.begin(), sig.concepts.end()) {
    used_.insert(sig.roles.begin(), sig.roles.end());
    used_.insert(sig.individuals.begin(), sig.individuals.end());
}

std::string FreshNames::fresh(const std::string& base) {
    std::string candidate = base + "'";
    for (unsigned k = 2; used_.count(candidate); ++k)
        candidate = base + "'" + std::to_string(k);
    used_.insert(candidate);
    return candidate;
}

GadgetSpec synthesize_gadget(const Degree& alpha, std::string atom_name) {
    if (alpha.is_zero() || alpha.is_one())
        throw TransformError(
            "no gadget for degree " + alpha.str() +
            ": degree-1 axioms pass through and degree-0 axioms are vacuous");
    long p = alpha.numerator().get_si();
    long q = alpha.denominator().get_si();
    ConceptRef atom_c = atomic(atom_name);
    GadgetSpec g;
    g.alpha = alpha;
    g.atom = std::move(atom_name);
    g.gadget = conj(nfold_and(atom_c, static_cast<unsigned>(p)),
                    neg(nfold_and(atom_c, static_cast<unsigned>(q))));
    g.witness_input = Degree(q - 1, q);
    g.bound = Degree(q - p, q);
    return g;
}

GadgetReport verify_gadget(const GadgetSpec& g, unsigned long sweep_n) {
    long q = g.alpha.denominator().get_si();
    long p = g.alpha.numerator().get_si();
    if (sweep_n < 1)
        throw TransformError("sweep density must be >= 1");

    std::vector<Degree> inputs;
    unsigned long steps = sweep_n * static_cast<unsigned long>(q);
    for (unsigned long k = 0; k <= steps; ++k)
        inputs.push_back(Degree(static_cast<long>(k), static_cast<long>(steps)));
    // Kink inputs of the two n-fold conjunctions; together with the
    // endpoints these cover every breakpoint of the piecewise-linear value.
    if (p > 1) inputs.push_back(Degree(p - 1, p));
    inputs.push_back(Degree(q - 1, q));
    std::sort(inputs.begin(), inputs.end());
    inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

    GadgetReport report;
    report.max_value = Degree::zero();
    report.attained_at = Degree::zero();
    FiniteInterpretation interp({"x"});
    for (const Degree& x : inputs) {
        interp.set_concept_default(g.atom, x);
        Degree v = eval_concept(interp, Family::Lukasiewicz, g.gadget, 0);
        ++report.points_checked;
        if (report.max_value < v) {
            report.max_value = v;
            report.attained_at = x;
        }
        if (g.bound < v) {
            report.counterexample = x;
            report.pass = false;
            return report;
        }
    }
    Degree at_witness;
    {
        interp.set_concept_default(g.atom, g.witness_input);
        at_witness = eval_concept(interp, Family::Lukasiewicz, g.gadget, 0);
    }
    report.pass = at_witness == g.bound && report.max_value == g.bound;
    if (!report.pass) report.counterexample = g.witness_input;
    return report;
}

namespace {

unsigned next_equiv_group(const KnowledgeBase& kb) {
    unsigned next = 0;
    for (const Axiom& ax : kb.tbox)
        if (ax.equiv) next = std::max(next, ax.equiv->group + 1);
    return next;
}

std::size_t kb_axiom_count(const KnowledgeBase& kb) {
    return kb.abox.size() + kb.tbox.size();
}

std::size_t kb_node_count(const KnowledgeBase& kb) {
    std::size_t total = 0;
    auto count = [&](const Axiom& ax) {
        total += node_count(ax.lhs) + node_count(ax.rhs);
    };
    for (const Axiom& ax : kb.abox) count(ax);
    for (const Axiom& ax : kb.tbox) count(ax);
    return total;
}

void fill_metrics(TransformTrace& trace, const KnowledgeBase& before,
                  const KnowledgeBase& after) {
    trace.axioms_before = kb_axiom_count(before);
    trace.axioms_after = kb_axiom_count(after);
    trace.nodes_before = kb_node_count(before);
    trace.nodes_after = kb_node_count(after);
}

std::string violations_text(const TBoxClassification& cls) {
    std::string out;
    for (const Violation& v : cls.violations) {
        if (!out.empty()) out += "; ";
        out += std::string(violation_kind_name(v.kind)) + ": " + v.detail;
    }
    return out;
}

}  // namespace

std::string step_kind_name(TransformStep::Kind k) {
    switch (k) {
        case TransformStep::Kind::DropVacuous: return "drop-vacuous";
        case TransformStep::Kind::Gadgetize: return "gadgetize";
        case TransformStep::Kind::EncodeTnorm: return "encode-tnorm";
        case TransformStep::Kind::EncodeMin: return "encode-min";
        case TransformStep::Kind::ExpandDefinition: return "expand-definition";
        case TransformStep::Kind::SubstituteAbox: return "substitute-abox";
        case TransformStep::Kind::DropDefinition: return "drop-definition";
    }
    return "?";
}

std::string serialize_trace(const TransformTrace& trace) {
    std::ostringstream out;
    for (const TransformStep& s : trace.steps) {
        out << step_kind_name(s.kind) << ": " << axiom_text(s.before) << " ==> ";
        if (s.after.empty()) out << "(removed)";
        for (std::size_t i = 0; i < s.after.size(); ++i) {
            if (i) out << " ; ";
            out << axiom_text(s.after[i]);
        }
        if (!s.fresh_names.empty()) {
            out << " [fresh";
            for (const std::string& n : s.fresh_names) out << " " << n;
            if (s.witness_value)
                out << ", witness " << s.witness_value->str();
            out << "]";
        }
        out << "\n";
    }
    out << "axioms: " << trace.axioms_before << " -> " << trace.axioms_after
        << ", concept nodes: " << trace.nodes_before << " -> "
        << trace.nodes_after << "\n";
    return out.str();
}

KnowledgeBase replay_trace(const KnowledgeBase& input,
                           const TransformTrace& trace) {
    KnowledgeBase kb = input;
    for (const TransformStep& s : trace.steps) {
        std::vector<Axiom>& list =
            s.before.kind == AxiomKind::GciGeq ? kb.tbox : kb.abox;
        auto it = std::find(list.begin(), list.end(), s.before);
        if (it == list.end())
            throw TransformError("trace replay: step input axiom not found: " +
                                 axiom_text(s.before));
        std::size_t pos = static_cast<std::size_t>(it - list.begin());
        std::size_t erase_count = 1;
        // Definition-unit steps consume the paired reverse half as well.
        bool unit_step = s.kind == TransformStep::Kind::EncodeTnorm ||
                         s.kind == TransformStep::Kind::EncodeMin ||
                         s.kind == TransformStep::Kind::ExpandDefinition ||
                         s.kind == TransformStep::Kind::DropDefinition;
        if (unit_step && s.before.equiv && pos + 1 < list.size() &&
            list[pos + 1].equiv &&
            list[pos + 1].equiv->group == s.before.equiv->group)
            erase_count = 2;
        list.erase(list.begin() + pos, list.begin() + pos + erase_count);
        list.insert(list.begin() + pos, s.after.begin(), s.after.end());
    }
    return kb;
}

std::pair<KnowledgeBase, TransformTrace> acyclic_to_unfoldable(
    const KnowledgeBase& kb, Family family) {
    TBoxClassification cls = classify_tbox(kb.tbox);
    if (!cls.acyclic)
        throw TransformError("input TBox is not acyclic: " +
                             violations_text(cls));
    if (family != Family::Lukasiewicz)
        throw UnsupportedFamilyError(
            "sub-unit inclusion degrees can only be absorbed under the "
            "Lukasiewicz family (the gadget construction is "
            "Lukasiewicz-specific)");

    KnowledgeBase out;
    out.abox = kb.abox;
    TransformTrace trace;
    FreshNames fresh(signature_of(kb));

    for (const Axiom& ax : kb.tbox) {
        if (ax.equiv || ax.bound.is_one()) {
            out.tbox.push_back(ax);
            continue;
        }
        if (ax.bound.is_zero()) {
            trace.steps.push_back(
                {TransformStep::Kind::DropVacuous, ax, {}, {}, std::nullopt});
            continue;
        }
        std::string atom_name = fresh.fresh("A");
        GadgetSpec g = synthesize_gadget(ax.bound, atom_name);
        Axiom replacement =
            Axiom::gci(ax.lhs, disj(ax.rhs, g.gadget), Degree::one());
        trace.steps.push_back({TransformStep::Kind::Gadgetize,
                               ax,
                               {replacement},
                               {atom_name},
                               g.witness_input});
        out.tbox.push_back(std::move(replacement));
    }
    fill_metrics(trace, kb, out);
    return {std::move(out), std::move(trace)};
}

namespace {

KnowledgeBase encode_gci(const KnowledgeBase& kb, std::size_t tbox_index,
                         Family family, FreshNames& fresh, GciEncoding enc,
                         TransformStep* step_out) {
    if (tbox_index >= kb.tbox.size())
        throw TransformError("tbox index out of range");
    const Axiom& ax = kb.tbox[tbox_index];
    if (ax.equiv)
        throw TransformError(
            "the encoding applies to inclusion axioms, not equivalence "
            "halves");
    if (!ax.bound.is_one())
        throw TransformError("the encoding applies to degree-1 inclusions; " +
                             axiom_text(ax) + " has degree " + ax.bound.str());
    if (family == Family::Zadeh)
        throw UnsupportedFamilyError(
            "degree-1 equivalences under the Kleene-Dienes implication are "
            "unsatisfiable at fractional values, so this encoding would not "
            "preserve satisfiability for the Zadeh family");
    if (enc == GciEncoding::Min && family == Family::Product)
        throw UnsupportedFamilyError(
            "min is not definable in the Product fragment (the residuum "
            "would need an implication constructor)");

    std::string atom_name = fresh.fresh("A");
    ConceptRef a = atomic(atom_name);
    ConceptRef rhs;
    if (enc == GciEncoding::Tnorm) {
        rhs = conj(a, ax.rhs);
    } else if (family == Family::Lukasiewicz) {
        // min{A, D} = A and (not A or D) under the Lukasiewicz connectives
        rhs = conj(a, disj(neg(a), ax.rhs));
    } else {  // Goedel: conjunction is min already
        rhs = conj(a, ax.rhs);
    }

    unsigned group = next_equiv_group(kb);
    Axiom primary = Axiom::gci(ax.lhs, rhs, Degree::one(), EquivHalf{group, true});
    Axiom reverse = Axiom::gci(rhs, ax.lhs, Degree::one(), EquivHalf{group, false});

    if (step_out)
        *step_out = {enc == GciEncoding::Tnorm ? TransformStep::Kind::EncodeTnorm
                                               : TransformStep::Kind::EncodeMin,
                     ax,
                     {primary, reverse},
                     {atom_name},
                     std::nullopt};

    KnowledgeBase out;
    out.abox = kb.abox;
    out.tbox.reserve(kb.tbox.size() + 1);
    for (std::size_t i = 0; i < kb.tbox.size(); ++i) {
        if (i == tbox_index) {
            out.tbox.push_back(primary);
            out.tbox.push_back(reverse);
        } else {
            out.tbox.push_back(kb.tbox[i]);
        }
    }
    return out;
}

}  // namespace

KnowledgeBase encode_gci_tnorm(const KnowledgeBase& kb, std::size_t tbox_index,
                               Family family, FreshNames& fresh,
                               TransformStep* step) {
    return encode_gci(kb, tbox_index, family, fresh, GciEncoding::Tnorm, step);
}

KnowledgeBase encode_gci_min(const KnowledgeBase& kb, std::size_t tbox_index,
                             Family family, FreshNames& fresh,
                             TransformStep* step) {
    return encode_gci(kb, tbox_index, family, fresh, GciEncoding::Min, step);
}

std::pair<KnowledgeBase, TransformTrace> unfold_to_abox(const KnowledgeBase& kb,
                                                        GciEncoding encoding,
                                                        Family family) {
    TBoxClassification cls = classify_tbox(kb.tbox);
    if (!cls.unfoldable)
        throw TransformError("input TBox is not unfoldable: " +
                             violations_text(cls));
    if (family == Family::Zadeh)
        throw UnsupportedFamilyError(
            "unfolding is unavailable for the Zadeh family: degree-1 "
            "equivalences under the Kleene-Dienes implication are "
            "unsatisfiable at fractional values");
    if (encoding == GciEncoding::Min && family == Family::Product)
        throw UnsupportedFamilyError(
            "min is not definable in the Product fragment");

    TransformTrace trace;
    KnowledgeBase work = kb;
    FreshNames fresh(signature_of(kb));

    // Step 1: each degree-1 inclusion A sub C becomes a definition of A.
    for (std::size_t i = 0; i < work.tbox.size(); ++i) {
        if (work.tbox[i].equiv) continue;
        TransformStep step;
        work = encode_gci(work, i, family, fresh, encoding, &step);
        trace.steps.push_back(std::move(step));
        ++i;  // skip the reverse half just inserted
    }

    // Collect definitions (unfoldable: unique atomic left-hand sides).
    struct Definition {
        std::string name;
        ConceptRef rhs;
        std::size_t primary_index;
    };
    std::vector<Definition> defs;
    for (std::size_t i = 0; i < work.tbox.size(); ++i) {
        const Axiom& ax = work.tbox[i];
        if (ax.equiv && !ax.equiv->primary) continue;
        defs.push_back({ax.lhs->name, ax.rhs, i});
    }

    // Leaves-first order: a definition comes after everything it uses, so
    // substituting previously finished definitions into it makes it final
    // in one pass.
    std::map<std::string, std::size_t> def_index;
    for (std::size_t i = 0; i < defs.size(); ++i)
        def_index[defs[i].name] = i;

    std::vector<std::size_t> order;
    std::vector<char> state(defs.size(), 0);  // 0 new, 1 visiting, 2 done
    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (state[i]) return;  // acyclicity rules out revisiting a "1"
        state[i] = 1;
        std::set<std::string> used, roles;
        collect_names(defs[i].rhs, used, roles);
        for (const std::string& n : used)
            if (auto it = def_index.find(n); it != def_index.end())
                self(self, it->second);
        state[i] = 2;
        order.push_back(i);
    };
    for (std::size_t i = 0; i < defs.size(); ++i) visit(visit, i);

    for (std::size_t i : order) {
        ConceptRef finished = defs[i].rhs;
        for (std::size_t j : order) {
            if (j == i) break;
            finished = substitute(finished, defs[j].name, defs[j].rhs);
        }
        if (!equal(finished, defs[i].rhs)) {
            const Axiom& old_primary = work.tbox[defs[i].primary_index];
            unsigned group = old_primary.equiv->group;
            Axiom primary = Axiom::gci(old_primary.lhs, finished, Degree::one(),
                                       EquivHalf{group, true});
            Axiom reverse = Axiom::gci(finished, old_primary.lhs, Degree::one(),
                                       EquivHalf{group, false});
            trace.steps.push_back({TransformStep::Kind::ExpandDefinition,
                                   old_primary,
                                   {primary, reverse},
                                   {},
                                   std::nullopt});
            work.tbox[defs[i].primary_index] = primary;
            work.tbox[defs[i].primary_index + 1] = reverse;
            defs[i].rhs = finished;
        }
    }

    for (std::size_t i : order)
        trace.final_definitions.emplace_back(defs[i].name, defs[i].rhs);

    // Step 2: substitute the finished definitions throughout the ABox.
    KnowledgeBase out;
    out.abox.reserve(work.abox.size());
    for (const Axiom& ax : work.abox) {
        if (ax.kind == AxiomKind::RoleGeq || !ax.lhs) {
            out.abox.push_back(ax);
            continue;
        }
        ConceptRef replaced = ax.lhs;
        for (const Definition& d : defs)
            replaced = substitute(replaced, d.name, d.rhs);
        if (equal(replaced, ax.lhs)) {
            out.abox.push_back(ax);
            continue;
        }
        Axiom rewritten = ax;
        rewritten.lhs = replaced;
        trace.steps.push_back({TransformStep::Kind::SubstituteAbox,
                               ax,
                               {rewritten},
                               {},
                               std::nullopt});
        out.abox.push_back(std::move(rewritten));
    }

    for (const Definition& d : defs)
        trace.steps.push_back({TransformStep::Kind::DropDefinition,
                               work.tbox[d.primary_index],
                               {},
                               {},
                               std::nullopt});

    fill_metrics(trace, kb, out);
    return {std::move(out), std::move(trace)};
}

FiniteInterpretation extend_model_for_trace(const TransformTrace& trace,
                                            FiniteInterpretation model,
                                            Family family) {
    for (const TransformStep& s : trace.steps) {
        switch (s.kind) {
            case TransformStep::Kind::Gadgetize: {
                // P2 direction: the gadget atom realizes the bound as a
                // constant, witnessed and finiteness-preserving.
                model.set_concept_default(s.fresh_names.at(0),
                                          *s.witness_value);
                break;
            }
            case TransformStep::Kind::EncodeTnorm: {
                // A(x) := D(x) => C(x); divisibility gives A ox D = min = C.
                Evaluator ev(model, family);
                const std::string& name = s.fresh_names.at(0);
                std::vector<Degree> vals;
                for (std::size_t x = 0; x < model.size(); ++x)
                    vals.push_back(implication(family,
                                               ev.eval(s.before.rhs, x),
                                               ev.eval(s.before.lhs, x)));
                model.set_concept_default(name, Degree::zero());
                for (std::size_t x = 0; x < model.size(); ++x)
                    model.set_concept_value(name, x, vals[x]);
                break;
            }
            case TransformStep::Kind::EncodeMin: {
                // A(x) := C(x); min{C, D} = C because C <= D holds.
                Evaluator ev(model, family);
                const std::string& name = s.fresh_names.at(0);
                std::vector<Degree> vals;
                for (std::size_t x = 0; x < model.size(); ++x)
                    vals.push_back(ev.eval(s.before.lhs, x));
                model.set_concept_default(name, Degree::zero());
                for (std::size_t x = 0; x < model.size(); ++x)
                    model.set_concept_value(name, x, vals[x]);
                break;
            }
            default:
                break;  // substitutions do not change values
        }
    }
    return model;
}

FiniteInterpretation redefine_for_unfold(const TransformTrace& trace,
                                         FiniteInterpretation astar_model,
                                         Family family) {
    // Final definitions contain no defined names, so their values in the
    // unfolded model are independent of the redefinition order.
    for (const auto& [name, rhs] : trace.final_definitions) {
        Evaluator ev(astar_model, family);
        std::vector<Degree> vals;
        for (std::size_t x = 0; x < astar_model.size(); ++x)
            vals.push_back(ev.eval(rhs, x));
        astar_model.set_concept_default(name, Degree::zero());
        for (std::size_t x = 0; x < astar_model.size(); ++x)
            astar_model.set_concept_value(name, x, vals[x]);
    }
    return astar_model;
}

}  // namespace falc
