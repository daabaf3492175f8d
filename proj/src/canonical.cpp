#include "falc/canonical.hpp"

#include <stdexcept>

namespace falc {

CanonicalModel::CanonicalModel(Family family) : family_(family) {
    if (family != Family::Lukasiewicz && family != Family::Product)
        throw std::domain_error(
            "canonical models exist for the Lukasiewicz and Product "
            "families only");
}

Degree CanonicalModel::luk_value(LukNode node) const {
    if (node.at_infinity) return Degree::one();
    if (node.index == 0) throw std::domain_error("node indices start at 1");
    if (auto it = luk_overrides_.find(node.index); it != luk_overrides_.end())
        return it->second;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, node.index);
    return Degree(mpq_class(den - 1, den));
}

LogDyadic CanonicalModel::product_value(unsigned long node) const {
    if (node == 0) throw std::domain_error("node indices start at 1");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, node - 1);
    return LogDyadic::pow2(mpq_class(-1, den));
}

void CanonicalModel::override_luk_value(unsigned long node, Degree value) {
    if (family_ != Family::Lukasiewicz)
        throw std::domain_error("value overrides exist for the Lukasiewicz "
                                "model only");
    luk_overrides_[node] = std::move(value);
}

Degree CanonicalModel::eval_luk(const ConceptRef& c, LukNode node) const {
    if (family_ != Family::Lukasiewicz)
        throw std::domain_error("eval_luk on a non-Lukasiewicz model");
    switch (c->kind) {
        case ConceptKind::Top:
            return Degree::one();
        case ConceptKind::Bottom:
            return Degree::zero();
        case ConceptKind::Atomic:
            return c->name == kAtom ? luk_value(node) : Degree::zero();
        case ConceptKind::And:
            return tnorm(Family::Lukasiewicz, eval_luk(c->left, node),
                         eval_luk(c->right, node));
        case ConceptKind::Or:
            return tconorm(Family::Lukasiewicz, eval_luk(c->left, node),
                           eval_luk(c->right, node));
        case ConceptKind::Not:
            return negation(Family::Lukasiewicz, eval_luk(c->left, node));
        case ConceptKind::Forall:
            // Unknown roles are constant 0, so the inf is exactly 1; the
            // model role reduces to the unique degree-1 successor.
            if (c->name != kRole) return Degree::one();
            return eval_luk(c->left, node.at_infinity
                                         ? node
                                         : LukNode::nat(node.index + 1));
        case ConceptKind::Exists:
            if (c->name != kRole) return Degree::zero();
            return eval_luk(c->left, node.at_infinity
                                         ? node
                                         : LukNode::nat(node.index + 1));
    }
    throw std::logic_error("bad concept kind");
}

LogDyadic CanonicalModel::eval_product(const ConceptRef& c,
                                       unsigned long node) const {
    if (family_ != Family::Product)
        throw std::domain_error("eval_product on a non-Product model");
    if (node == 0) throw std::domain_error("node indices start at 1");
    switch (c->kind) {
        case ConceptKind::Top:
            return LogDyadic::one();
        case ConceptKind::Bottom:
            return LogDyadic::zero();
        case ConceptKind::Atomic:
            return c->name == kAtom ? product_value(node) : LogDyadic::zero();
        case ConceptKind::And:
            return ld_tnorm(eval_product(c->left, node),
                            eval_product(c->right, node));
        case ConceptKind::Or:
            throw UnsupportedEvaluation(
                "disjunction is not supported on the Product canonical "
                "model: log-dyadic values are not closed under the Product "
                "t-conorm");
        case ConceptKind::Not:
            return ld_negation(eval_product(c->left, node));
        case ConceptKind::Forall:
            if (c->name != kRole) return LogDyadic::one();
            return eval_product(c->left, node + 1);
        case ConceptKind::Exists:
            if (c->name != kRole) return LogDyadic::zero();
            return eval_product(c->left, node + 1);
    }
    throw std::logic_error("bad concept kind");
}

FiniteInterpretation CanonicalModel::export_luk_prefix(
    unsigned long depth, std::string* caveat) const {
    if (family_ != Family::Lukasiewicz)
        throw UnsupportedEvaluation(
            "only the Lukasiewicz prefix exports exactly: the Product "
            "valuation 2^(-1/2^(i-1)) is irrational beyond node 1");
    if (depth == 0) throw std::domain_error("depth must be >= 1");
    std::vector<std::string> domain;
    for (unsigned long i = 1; i <= depth; ++i)
        domain.push_back("n" + std::to_string(i));
    FiniteInterpretation interp(std::move(domain));
    interp.set_individual(kIndividual, 0);
    interp.set_concept_default(kAtom, Degree::zero());
    interp.set_role_default(kRole, Degree::zero());
    for (unsigned long i = 1; i <= depth; ++i) {
        interp.set_concept_value(kAtom, i - 1, luk_value(LukNode::nat(i)));
        if (i < depth) interp.set_role_value(kRole, i - 1, i, Degree::one());
    }
    if (caveat)
        *caveat = "truncated prefix: node n" + std::to_string(depth) +
                  " has no successor, so the existential-successor axiom "
                  "fails there; this export is for inspection, not a model";
    return interp;
}

std::vector<Degree> forced_sequence_luk(std::size_t n) {
    std::vector<Degree> out;
    out.reserve(n);
    // a(1) = 1/2, a(k+1) = (a(k) + 1) / 2 -- closed form (2^k - 1) / 2^k.
    mpq_class a(1, 2);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(Degree(a));
        a = (a + 1) / 2;
    }
    return out;
}

std::vector<LogDyadic> forced_sequence_product(std::size_t n) {
    std::vector<LogDyadic> out;
    out.reserve(n);
    // exponents e(1) = -1, e(k+1) = e(k) / 2 (value recurrence: square root)
    mpq_class e(-1);
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(LogDyadic::pow2(e));
        e /= 2;
    }
    return out;
}

std::string_view tail_class_name(LukTailClass c) {
    return c == LukTailClass::Cond1LimitZero ? "Cond1" : "Cond2";
}

std::string_view tail_class_name(ProductTailClass c) {
    return c == ProductTailClass::IdenticallyZero ? "IdenticallyZero"
                                                  : "PositiveNondecreasingSupOne";
}

namespace {

LukTailClass classify_luk_basis(const ConceptRef& c) {
    switch (c->kind) {
        case ConceptKind::Top:
            return LukTailClass::Cond2LimitOne;
        case ConceptKind::Bottom:
            return LukTailClass::Cond1LimitZero;
        case ConceptKind::Atomic:
            return c->name == CanonicalModel::kAtom
                       ? LukTailClass::Cond2LimitOne
                       : LukTailClass::Cond1LimitZero;  // constant 0
        case ConceptKind::Not:
            return classify_luk_basis(c->left) == LukTailClass::Cond1LimitZero
                       ? LukTailClass::Cond2LimitOne
                       : LukTailClass::Cond1LimitZero;
        case ConceptKind::And:
            return classify_luk_basis(c->left) == LukTailClass::Cond2LimitOne &&
                           classify_luk_basis(c->right) ==
                               LukTailClass::Cond2LimitOne
                       ? LukTailClass::Cond2LimitOne
                       : LukTailClass::Cond1LimitZero;
        case ConceptKind::Forall:
            // The model role shifts the index; unknown roles give constant 1.
            if (c->name != CanonicalModel::kRole)
                return LukTailClass::Cond2LimitOne;
            return classify_luk_basis(c->left);
        case ConceptKind::Or:
        case ConceptKind::Exists:
            throw std::logic_error("classification expects the rewritten basis");
    }
    throw std::logic_error("bad concept kind");
}

}  // namespace

LukTailClass tail_classify_luk(const ConceptRef& c) {
    return classify_luk_basis(rewrite_to_not_and_forall(c));
}

ProductTailClass tail_classify_product(const ConceptRef& c) {
    switch (c->kind) {
        case ConceptKind::Top:
            return ProductTailClass::PositiveNondecreasingSupOne;
        case ConceptKind::Bottom:
            return ProductTailClass::IdenticallyZero;
        case ConceptKind::Atomic:
            return c->name == CanonicalModel::kAtom
                       ? ProductTailClass::PositiveNondecreasingSupOne
                       : ProductTailClass::IdenticallyZero;
        case ConceptKind::Not:
            // Strict negation: positive values collapse to 0, zero lifts to 1.
            return tail_classify_product(c->left) ==
                           ProductTailClass::IdenticallyZero
                       ? ProductTailClass::PositiveNondecreasingSupOne
                       : ProductTailClass::IdenticallyZero;
        case ConceptKind::And:
            return tail_classify_product(c->left) ==
                               ProductTailClass::PositiveNondecreasingSupOne &&
                           tail_classify_product(c->right) ==
                               ProductTailClass::PositiveNondecreasingSupOne
                       ? ProductTailClass::PositiveNondecreasingSupOne
                       : ProductTailClass::IdenticallyZero;
        case ConceptKind::Or:
            return tail_classify_product(c->left) ==
                               ProductTailClass::PositiveNondecreasingSupOne ||
                           tail_classify_product(c->right) ==
                               ProductTailClass::PositiveNondecreasingSupOne
                       ? ProductTailClass::PositiveNondecreasingSupOne
                       : ProductTailClass::IdenticallyZero;
        case ConceptKind::Forall:
            if (c->name != CanonicalModel::kRole)
                return ProductTailClass::PositiveNondecreasingSupOne;
            return tail_classify_product(c->left);
        case ConceptKind::Exists:
            if (c->name != CanonicalModel::kRole)
                return ProductTailClass::IdenticallyZero;
            return tail_classify_product(c->left);
    }
    throw std::logic_error("bad concept kind");
}

namespace {

void prefix_check(PrefixReport& report, std::string node, std::string axiom,
                  std::string lhs, std::string rhs, bool holds) {
    report.all_pass = report.all_pass && holds;
    report.checks.push_back(
        {std::move(node), std::move(axiom), std::move(lhs), std::move(rhs),
         holds});
}

void verify_luk_node(const CanonicalModel& m, PrefixReport& report,
                     LukNode node, const std::string& label) {
    ConceptRef a = atomic(CanonicalModel::kAtom);
    ConceptRef some_top = exists(CanonicalModel::kRole, top());
    ConceptRef all_a = forall(CanonicalModel::kRole, a);
    ConceptRef some_a = exists(CanonicalModel::kRole, a);

    Degree ex_top = m.eval_luk(some_top, node);
    prefix_check(report, label, "Top sub exists R.Top", ex_top.str(), "1",
                 ex_top.is_one());

    Degree fa = m.eval_luk(all_a, node);
    Degree ea = m.eval_luk(some_a, node);
    prefix_check(report, label, "forall R.A == exists R.A", fa.str(), ea.str(),
                 fa == ea);

    Degree lhs = m.eval_luk(a, node);
    Degree rhs = tnorm(Family::Lukasiewicz, fa, fa);
    prefix_check(report, label, "A == forall R.A and forall R.A", lhs.str(),
                 rhs.str(), lhs == rhs);
}

}  // namespace

PrefixReport verify_k2_prefix(const CanonicalModel& model,
                              unsigned long depth) {
    if (depth == 0) throw std::domain_error("depth must be >= 1");
    PrefixReport report;
    report.depth = depth;

    if (model.family() == Family::Lukasiewicz) {
        Degree a1 = model.luk_value(LukNode::nat(1));
        prefix_check(report, "1", "(a : A) = 1/2", a1.str(), "1/2",
                     a1 == Degree(1, 2));
        for (unsigned long i = 1; i <= depth; ++i)
            verify_luk_node(model, report, LukNode::nat(i), std::to_string(i));
        verify_luk_node(model, report, LukNode::infinity(), "inf");
        return report;
    }

    ConceptRef a = atomic(CanonicalModel::kAtom);
    ConceptRef some_top = exists(CanonicalModel::kRole, top());
    ConceptRef all_a = forall(CanonicalModel::kRole, a);
    ConceptRef some_a = exists(CanonicalModel::kRole, a);

    LogDyadic a1 = model.product_value(1);
    prefix_check(report, "1", "(a : A) = 1/2", a1.str(), "2^(-1)",
                 a1 == LogDyadic::pow2(-1));
    for (unsigned long i = 1; i <= depth; ++i) {
        std::string label = std::to_string(i);
        LogDyadic ex_top = model.eval_product(some_top, i);
        prefix_check(report, label, "Top sub exists R.Top", ex_top.str(), "1",
                     ex_top.is_one());
        LogDyadic fa = model.eval_product(all_a, i);
        LogDyadic ea = model.eval_product(some_a, i);
        prefix_check(report, label, "forall R.A == exists R.A", fa.str(),
                     ea.str(), fa == ea);
        LogDyadic lhs = model.eval_product(a, i);
        LogDyadic rhs = ld_tnorm(fa, fa);
        prefix_check(report, label, "A == forall R.A and forall R.A",
                     lhs.str(), rhs.str(), lhs == rhs);
    }
    return report;
}

TailConsistency classify_vs_prefix(const CanonicalModel& model,
                                   const ConceptRef& c, unsigned long depth,
                                   unsigned long tolerance_denominator) {
    if (depth == 0 || tolerance_denominator == 0)
        throw std::domain_error("depth and tolerance must be positive");
    TailConsistency out;
    mpq_class tol(1, tolerance_denominator);
    mpq_class high = 1 - tol;

    if (model.family() == Family::Lukasiewicz) {
        LukTailClass klass = tail_classify_luk(c);
        out.tail_class = tail_class_name(klass);
        std::vector<Degree> values;
        values.reserve(depth);
        for (unsigned long i = 1; i <= depth; ++i)
            values.push_back(model.eval_luk(c, LukNode::nat(i)));
        bool want_high = klass == LukTailClass::Cond2LimitOne;
        // Least node from which every later sampled value stays on the
        // classifier's side of the tolerance band.
        std::optional<unsigned long> crossover;
        for (unsigned long i = depth; i >= 1; --i) {
            const mpq_class& v = values[i - 1].value();
            bool ok = want_high ? cmp(v, high) >= 0 : cmp(v, tol) <= 0;
            if (!ok) break;
            crossover = i;
            if (i == 1) break;
        }
        out.crossover = crossover;
        out.consistent = crossover.has_value();
        if (!out.consistent)
            out.detail = "value at node " + std::to_string(depth) + " is " +
                         values.back().str() + ", inconsistent with " +
                         out.tail_class;
        return out;
    }

    ProductTailClass klass = tail_classify_product(c);
    out.tail_class = tail_class_name(klass);
    std::vector<LogDyadic> values;
    values.reserve(depth);
    for (unsigned long i = 1; i <= depth; ++i)
        values.push_back(model.eval_product(c, i));
    if (klass == ProductTailClass::IdenticallyZero) {
        for (unsigned long i = 1; i <= depth; ++i) {
            if (!values[i - 1].is_zero()) {
                out.consistent = false;
                out.detail = "nonzero value " + values[i - 1].str() +
                             " at node " + std::to_string(i);
                return out;
            }
        }
        out.consistent = true;
        out.crossover = 1;
        return out;
    }
    for (unsigned long i = 1; i <= depth; ++i) {
        if (values[i - 1].is_zero()) {
            out.consistent = false;
            out.detail = "zero value at node " + std::to_string(i);
            return out;
        }
        if (i > 1 && values[i - 1] < values[i - 2]) {
            out.consistent = false;
            out.detail = "decrease at node " + std::to_string(i);
            return out;
        }
    }
    std::optional<unsigned long> crossover;
    for (unsigned long i = depth; i >= 1; --i) {
        if (values[i - 1].compare_rational(high) == std::strong_ordering::less)
            break;
        crossover = i;
        if (i == 1) break;
    }
    out.crossover = crossover;
    out.consistent = crossover.has_value();
    if (!out.consistent)
        out.detail = "sup does not approach 1 within " +
                     std::to_string(depth) + " nodes";
    return out;
}

}  // namespace falc
