#include "falc/model_search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>

namespace falc {

std::vector<Degree> degree_grid(const std::vector<unsigned long>& denominators) {
    if (denominators.empty())
        throw std::domain_error("denominator set must be nonempty");
    std::vector<Degree> grid;
    for (unsigned long d : denominators) {
        if (d == 0) throw std::domain_error("zero denominator in grid");
        for (unsigned long k = 0; k <= d; ++k)
            grid.push_back(Degree(static_cast<long>(k), static_cast<long>(d)));
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

// The KB compiled against index tables: distinct subconcepts are
// hash-consed so evaluation can memoize per (node, element) in flat
// arrays.
struct Compiled {
    std::vector<std::string> concept_names;  // sorted
    std::vector<std::string> role_names;     // sorted
    std::vector<std::string> individual_names;

    struct Node {
        ConceptKind kind;
        int name_id = -1;  // concept or role index
        int c1 = -1, c2 = -1;
    };
    std::vector<Node> nodes;
    std::map<std::tuple<ConceptKind, int, int, int>, int> dedup;

    struct Check {
        AxiomKind kind;
        int indiv = -1, indiv2 = -1, role_id = -1;
        int lhs = -1, rhs = -1;
        Degree bound;
    };
    std::vector<Check> checks;

    int name_index(const std::vector<std::string>& table,
                   const std::string& name) const {
        auto it = std::lower_bound(table.begin(), table.end(), name);
        if (it == table.end() || *it != name) return -1;
        return static_cast<int>(it - table.begin());
    }

    int intern(const ConceptRef& c) {
        int name_id = -1;
        if (c->kind == ConceptKind::Atomic)
            name_id = name_index(concept_names, c->name);
        if (c->kind == ConceptKind::Forall || c->kind == ConceptKind::Exists)
            name_id = name_index(role_names, c->name);
        int c1 = c->left ? intern(c->left) : -1;
        int c2 = c->right ? intern(c->right) : -1;
        // Distinguish atomics by name, not just id (-1 covers unknowns).
        auto key = std::make_tuple(c->kind, name_id, c1, c2);
        auto it = dedup.find(key);
        if (it != dedup.end()) return it->second;
        nodes.push_back({c->kind, name_id, c1, c2});
        int id = static_cast<int>(nodes.size()) - 1;
        dedup.emplace(key, id);
        return id;
    }
};

Compiled compile(const KnowledgeBase& kb) {
    Compiled out;
    Signature sig = signature_of(kb);
    out.concept_names.assign(sig.concepts.begin(), sig.concepts.end());
    out.role_names.assign(sig.roles.begin(), sig.roles.end());
    out.individual_names.assign(sig.individuals.begin(), sig.individuals.end());

    auto add = [&](const Axiom& ax) {
        Compiled::Check chk;
        chk.kind = ax.kind;
        chk.bound = ax.bound;
        switch (ax.kind) {
            case AxiomKind::ConceptGeq:
            case AxiomKind::ConceptLeq:
                chk.indiv = out.name_index(out.individual_names, ax.individual);
                chk.lhs = out.intern(ax.lhs);
                break;
            case AxiomKind::RoleGeq:
                chk.indiv = out.name_index(out.individual_names, ax.individual);
                chk.indiv2 = out.name_index(out.individual_names, ax.individual2);
                chk.role_id = out.name_index(out.role_names, ax.role);
                break;
            case AxiomKind::GciGeq:
                chk.lhs = out.intern(ax.lhs);
                chk.rhs = out.intern(ax.rhs);
                break;
        }
        out.checks.push_back(std::move(chk));
    };
    for (const Axiom& ax : kb.abox) add(ax);
    for (const Axiom& ax : kb.tbox) add(ax);
    return out;
}

// Mutable search state for one domain size.
struct Candidate {
    std::size_t n = 0;
    const std::vector<Degree>* cgrid = nullptr;
    const std::vector<Degree>* rgrid = nullptr;
    std::vector<std::size_t> assign;           // individual -> element
    std::vector<std::uint16_t> cvals;          // concept*n + elem -> grid idx
    std::vector<std::uint16_t> rvals;          // (role*n + i)*n + j -> grid idx

    // memo per candidate, epoch-stamped
    std::vector<Degree> memo;
    std::vector<std::uint64_t> stamp;
    std::uint64_t epoch = 0;

    const Degree& cval(int concept_id, std::size_t e) const {
        return (*cgrid)[cvals[concept_id * n + e]];
    }
    const Degree& rval(int role_id, std::size_t i, std::size_t j) const {
        return (*rgrid)[rvals[(role_id * n + i) * n + j]];
    }
};

class CandidateEvaluator {
public:
    CandidateEvaluator(const Compiled& kb, Family f) : kb_(kb), family_(f) {}

    void reset(Candidate& cand) { cand.epoch++; }

    const Degree& eval(Candidate& cand, int node_id, std::size_t e) {
        std::size_t slot = node_id * cand.n + e;
        if (cand.stamp[slot] == cand.epoch) return cand.memo[slot];
        const Compiled::Node& nd = kb_.nodes[node_id];
        Degree out;
        switch (nd.kind) {
            case ConceptKind::Top: out = Degree::one(); break;
            case ConceptKind::Bottom: out = Degree::zero(); break;
            case ConceptKind::Atomic:
                out = nd.name_id >= 0 ? cand.cval(nd.name_id, e) : Degree::zero();
                break;
            case ConceptKind::And:
                out = tnorm(family_, eval(cand, nd.c1, e), eval(cand, nd.c2, e));
                break;
            case ConceptKind::Or:
                out = tconorm(family_, eval(cand, nd.c1, e), eval(cand, nd.c2, e));
                break;
            case ConceptKind::Not:
                out = negation(family_, eval(cand, nd.c1, e));
                break;
            case ConceptKind::Forall: {
                out = Degree::one();
                for (std::size_t y = 0; y < cand.n; ++y) {
                    Degree v = implication(
                        family_,
                        nd.name_id >= 0 ? cand.rval(nd.name_id, e, y)
                                        : Degree::zero(),
                        eval(cand, nd.c1, y));
                    if (v < out) out = std::move(v);
                }
                break;
            }
            case ConceptKind::Exists: {
                out = Degree::zero();
                for (std::size_t y = 0; y < cand.n; ++y) {
                    Degree v =
                        tnorm(family_,
                              nd.name_id >= 0 ? cand.rval(nd.name_id, e, y)
                                              : Degree::zero(),
                              eval(cand, nd.c1, y));
                    if (out < v) out = std::move(v);
                }
                break;
            }
        }
        cand.stamp[slot] = cand.epoch;
        cand.memo[slot] = std::move(out);
        return cand.memo[slot];
    }

    bool satisfied(Candidate& cand, const Compiled::Check& chk) {
        switch (chk.kind) {
            case AxiomKind::ConceptGeq:
                return eval(cand, chk.lhs, cand.assign[chk.indiv]) >= chk.bound;
            case AxiomKind::ConceptLeq:
                return eval(cand, chk.lhs, cand.assign[chk.indiv]) <= chk.bound;
            case AxiomKind::RoleGeq:
                return cand.rval(chk.role_id, cand.assign[chk.indiv],
                                 cand.assign[chk.indiv2]) >= chk.bound;
            case AxiomKind::GciGeq: {
                // inf over the domain with early exit below the bound
                for (std::size_t x = 0; x < cand.n; ++x) {
                    Degree v = implication(family_, eval(cand, chk.lhs, x),
                                           eval(cand, chk.rhs, x));
                    if (v < chk.bound) return false;
                }
                return true;
            }
        }
        return false;
    }

    bool all_satisfied(Candidate& cand) {
        for (const Compiled::Check& chk : kb_.checks)
            if (!satisfied(cand, chk)) return false;
        return true;
    }

private:
    const Compiled& kb_;
    Family family_;
};

// Allowed grid indices per cell after propagation; empty means refuted.
struct CellDomains {
    std::vector<std::vector<std::uint16_t>> concept_cells;  // c*n+e
    std::vector<std::vector<std::uint16_t>> role_cells;     // (r*n+i)*n+j
    bool empty_cell = false;
};

CellDomains propagate(const KnowledgeBase& kb, const Compiled& comp,
                      const std::vector<Degree>& cgrid,
                      const std::vector<Degree>& rgrid, std::size_t n,
                      const std::vector<std::size_t>& assign) {
    CellDomains out;
    std::vector<std::uint16_t> full_c(cgrid.size()), full_r(rgrid.size());
    for (std::size_t i = 0; i < cgrid.size(); ++i)
        full_c[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < rgrid.size(); ++i)
        full_r[i] = static_cast<std::uint16_t>(i);
    out.concept_cells.assign(comp.concept_names.size() * n, full_c);
    out.role_cells.assign(comp.role_names.size() * n * n, full_r);

    auto restrict_cell = [&](std::vector<std::uint16_t>& cell,
                             const std::vector<Degree>& grid,
                             const Degree& bound, bool lower) {
        std::erase_if(cell, [&](std::uint16_t g) {
            return lower ? grid[g] < bound : bound < grid[g];
        });
        if (cell.empty()) out.empty_cell = true;
    };

    for (const Axiom& ax : kb.abox) {
        switch (ax.kind) {
            case AxiomKind::ConceptGeq:
            case AxiomKind::ConceptLeq: {
                if (ax.lhs->kind != ConceptKind::Atomic) break;
                int c = comp.name_index(comp.concept_names, ax.lhs->name);
                int ind = comp.name_index(comp.individual_names, ax.individual);
                if (c < 0 || ind < 0) break;
                restrict_cell(out.concept_cells[c * n + assign[ind]], cgrid,
                              ax.bound, ax.kind == AxiomKind::ConceptGeq);
                break;
            }
            case AxiomKind::RoleGeq: {
                int r = comp.name_index(comp.role_names, ax.role);
                int i1 = comp.name_index(comp.individual_names, ax.individual);
                int i2 = comp.name_index(comp.individual_names, ax.individual2);
                if (r < 0 || i1 < 0 || i2 < 0) break;
                restrict_cell(
                    out.role_cells[(r * n + assign[i1]) * n + assign[i2]],
                    rgrid, ax.bound, true);
                break;
            }
            default:
                break;
        }
    }
    return out;
}

FiniteInterpretation materialize(const Compiled& comp,
                                 const std::vector<Degree>& cgrid,
                                 const std::vector<Degree>& rgrid,
                                 const Candidate& cand) {
    std::vector<std::string> domain;
    for (std::size_t i = 0; i < cand.n; ++i)
        domain.push_back("x" + std::to_string(i + 1));
    FiniteInterpretation interp(std::move(domain));
    for (std::size_t k = 0; k < comp.individual_names.size(); ++k)
        interp.set_individual(comp.individual_names[k], cand.assign[k]);
    for (std::size_t c = 0; c < comp.concept_names.size(); ++c) {
        interp.set_concept_default(comp.concept_names[c], Degree::zero());
        for (std::size_t e = 0; e < cand.n; ++e)
            interp.set_concept_value(comp.concept_names[c], e,
                                     cgrid[cand.cvals[c * cand.n + e]]);
    }
    for (std::size_t r = 0; r < comp.role_names.size(); ++r) {
        interp.set_role_default(comp.role_names[r], Degree::zero());
        for (std::size_t i = 0; i < cand.n; ++i)
            for (std::size_t j = 0; j < cand.n; ++j)
                interp.set_role_value(
                    comp.role_names[r], i, j,
                    rgrid[cand.rvals[(r * cand.n + i) * cand.n + j]]);
    }
    return interp;
}

mpz_class theoretical_count(std::size_t g, std::size_t gr, std::size_t c,
                            std::size_t r, std::size_t i, std::size_t n) {
    mpz_class total = 1;
    mpz_class base;
    mpz_ui_pow_ui(base.get_mpz_t(), g, c * n);
    total *= base;
    mpz_ui_pow_ui(base.get_mpz_t(), gr, r * n * n);
    total *= base;
    mpz_ui_pow_ui(base.get_mpz_t(), n, i);
    total *= base;
    return total;
}

}  // namespace

SearchOutcome sat_search(const KnowledgeBase& kb, Family f,
                         const SearchBounds& bounds,
                         const SearchProgress& progress) {
    auto start_time = std::chrono::steady_clock::now();
    SearchOutcome out;
    if (bounds.max_size == 0)
        throw std::domain_error("max domain size must be >= 1");

    std::vector<Degree> cgrid = degree_grid(bounds.denominators);
    std::vector<Degree> rgrid =
        bounds.crisp_roles ? degree_grid({1}) : cgrid;

    Compiled comp = compile(kb);
    CandidateEvaluator eval(comp, f);
    const std::size_t nc = comp.concept_names.size();
    const std::size_t nr = comp.role_names.size();
    const std::size_t ni = comp.individual_names.size();

    mpz_class theoretical_total = 0;
    bool emptied_by_propagation = false;

    auto finish_stats = [&]() {
        mpz_class pruned =
            theoretical_total - static_cast<unsigned long>(out.stats.enumerated);
        out.stats.pruned =
            pruned.fits_ulong_p() ? pruned.get_ui() : ~0ULL;
        out.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start_time)
                .count();
    };

    for (std::size_t n = 1; n <= bounds.max_size; ++n) {
        theoretical_total +=
            theoretical_count(cgrid.size(), rgrid.size(), nc, nr, ni, n);
        if (progress) progress(n, out.stats);

        Candidate cand;
        cand.n = n;
        cand.cgrid = &cgrid;
        cand.rgrid = &rgrid;
        cand.assign.assign(ni, 0);
        cand.cvals.assign(nc * n, 0);
        cand.rvals.assign(nr * n * n, 0);
        cand.memo.assign(comp.nodes.size() * n, Degree());
        cand.stamp.assign(comp.nodes.size() * n, 0);

        // Individual assignments, most significant first.
        while (true) {
            CellDomains cells = propagate(kb, comp, cgrid, rgrid, n, cand.assign);
            if (cells.empty_cell) {
                emptied_by_propagation = true;
            } else {
                // Odometer over concept and role cells, concept cells more
                // significant, each cell ascending through its allowed set.
                const std::size_t total_cells =
                    cells.concept_cells.size() + cells.role_cells.size();
                std::vector<std::size_t> pos(total_cells, 0);
                auto cell_list = [&](std::size_t k) -> const std::vector<std::uint16_t>& {
                    return k < cells.concept_cells.size()
                               ? cells.concept_cells[k]
                               : cells.role_cells[k - cells.concept_cells.size()];
                };
                auto apply = [&](std::size_t k) {
                    std::uint16_t v = cell_list(k)[pos[k]];
                    if (k < cells.concept_cells.size())
                        cand.cvals[k] = v;
                    else
                        cand.rvals[k - cells.concept_cells.size()] = v;
                };
                for (std::size_t k = 0; k < total_cells; ++k) apply(k);

                while (true) {
                    ++out.stats.enumerated;
                    if (bounds.node_budget &&
                        out.stats.enumerated > *bounds.node_budget) {
                        out.status = SearchStatus::BudgetExhausted;
                        out.note = "node budget exhausted before the bounds "
                                   "were covered";
                        finish_stats();
                        return out;
                    }
                    if ((out.stats.enumerated & 0xffff) == 0 && progress)
                        progress(n, out.stats);

                    eval.reset(cand);
                    if (eval.all_satisfied(cand)) {
                        FiniteInterpretation model =
                            materialize(comp, cgrid, rgrid, cand);
                        SatisfactionReport verify = check_kb(model, f, kb);
                        if (!verify.overall)
                            throw std::logic_error(
                                "search returned a model check_kb rejects");
                        out.status = SearchStatus::Sat;
                        out.model = std::move(model);
                        finish_stats();
                        return out;
                    }

                    // advance odometer (last cell least significant)
                    std::size_t k = total_cells;
                    while (k > 0) {
                        --k;
                        if (++pos[k] < cell_list(k).size()) {
                            apply(k);
                            break;
                        }
                        pos[k] = 0;
                        apply(k);
                        if (k == 0) {
                            k = total_cells + 1;  // overflow marker
                            break;
                        }
                    }
                    if (total_cells == 0 || k == total_cells + 1) break;
                }
            }

            // next individual assignment (last individual least significant)
            std::size_t k = ni;
            bool wrapped = true;
            while (k > 0) {
                --k;
                if (++cand.assign[k] < n) {
                    wrapped = false;
                    break;
                }
                cand.assign[k] = 0;
            }
            if (ni == 0 || wrapped) break;
        }
    }

    out.status = SearchStatus::UnsatWithinBounds;
    out.note = "no model within bounds (domain size <= " +
               std::to_string(bounds.max_size) + ", grid of " +
               std::to_string(cgrid.size()) +
               " degrees); this is a bounded claim and says nothing about "
               "larger domains or finer grids";
    if (emptied_by_propagation)
        out.note += "; constraint propagation emptied some candidate cells";
    finish_stats();
    return out;
}

Refutation refute_candidate(const KnowledgeBase& kb, Family f,
                            const FiniteInterpretation& interp) {
    Refutation out;
    out.report = check_kb(interp, f, kb);
    out.satisfied = out.report.overall;
    for (const AxiomCheck& chk : out.report.per_axiom) {
        if (!chk.satisfied) {
            out.first_violation = chk;
            break;
        }
    }
    return out;
}

}  // namespace falc
