#include "springerlab/wellsupport.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "springerlab/textio.hpp"

namespace springerlab {

std::vector<UnipotentClass> support(const VirtualRep& rep)
{
    std::set<UnipotentClass> classes;
    for (const auto& [bip, m] : rep.mult)
        classes.insert(springer_class(bip));
    return {classes.begin(), classes.end()};
}

SupportReport check_well_supported(const VirtualRep& rep)
{
    SupportReport r;
    if (rep.mult.empty()) {
        r.failures.push_back("empty representation");
        return r;
    }

    std::set<UnipotentClass> classes;
    std::set<UnipotentClass> carrier; // classes whose attached representation occurs
    for (const auto& [bip, m] : rep.mult) {
        if (bip.split())
            ++r.split_components;
        UnipotentClass cls = springer_class(bip);
        classes.insert(cls);
        if (is_distinguished(usymbol_of_bipartition(bip)))
            carrier.insert(cls);
    }
    r.support.assign(classes.begin(), classes.end());

    // The unique class that both carries its Springer representation and
    // dominates the whole support.
    for (const auto& cand : carrier) {
        bool top = true;
        for (const auto& cls : classes)
            if (!dominates(cand.lambda, cls.lambda)) {
                top = false;
                break;
            }
        if (top) {
            r.o0 = cand;
            break;
        }
    }
    if (!r.o0) {
        r.failures.push_back("no dominating class carries its Springer representation");
        return r;
    }

    const UnipotentClass top_cell_class = special_closure(*r.o0);
    for (const auto& [bip, m] : rep.mult) {
        UnipotentClass cell_class = cell_of(bip).special_class;
        if (!dominates(top_cell_class.lambda, cell_class.lambda))
            r.failures.push_back("component " + format_bipartition(bip) + " lies in cell of "
                                 + format_class(cell_class) + ", above cell of "
                                 + format_class(top_cell_class));
    }

    r.well_supported = r.failures.empty();
    r.specially = r.well_supported && is_special_class(*r.o0);
    return r;
}

namespace {

// Inputs swept per factor: every irreducible, or the special ones only.
// A factors contribute either all partitions of k or just the sign.
std::vector<FactorRep> factor_inputs(const GroupType& factor, bool special_only,
                                     bool sign_only_a, int* skipped)
{
    std::vector<FactorRep> out;
    if (factor.letter == Letter::A) {
        const int k = factor.weyl_rank();
        if (sign_only_a) {
            out.emplace_back(Partition(std::vector<int>(static_cast<size_t>(k), 1)));
        } else {
            for (const auto& sigma : enumerate_partitions(k))
                out.emplace_back(sigma);
        }
    } else {
        for (const auto& bip : enumerate_bipartitions(factor)) {
            if (bip.split()) {
                ++*skipped;
                continue;
            }
            if (special_only && !is_special_rep(bip))
                continue;
            out.emplace_back(bip);
        }
    }
    return out;
}

std::vector<std::vector<FactorRep>> input_tuples(const SubgroupSpec& sub, bool special_only,
                                                 bool sign_only_a, int* skipped)
{
    std::vector<std::vector<FactorRep>> tuples{{}};
    for (const auto& f : sub.factors) {
        auto options = factor_inputs(f, special_only, sign_only_a, skipped);
        std::vector<std::vector<FactorRep>> next;
        next.reserve(tuples.size() * options.size());
        for (const auto& t : tuples)
            for (const auto& o : options) {
                auto copy = t;
                copy.push_back(o);
                next.push_back(std::move(copy));
            }
        tuples = std::move(next);
    }
    return tuples;
}

std::string describe(const SubgroupSpec& sub, const std::vector<FactorRep>& reps)
{
    std::string s = format_subgroup(sub) + " of ";
    for (size_t i = 0; i < reps.size(); ++i) {
        if (i)
            s += " x ";
        s += format_factor_rep(reps[i]);
    }
    return s;
}

// The special representation of the cell of each factor input.
std::vector<FactorRep> cell_special_inputs(const std::vector<FactorRep>& reps)
{
    std::vector<FactorRep> out;
    out.reserve(reps.size());
    for (const auto& r : reps) {
        if (const auto* sigma = std::get_if<Partition>(&r))
            out.emplace_back(*sigma); // symmetric group: each representation is its own cell
        else
            out.emplace_back(special_member(std::get<Bipartition>(r)));
    }
    return out;
}

void guard_rank(const GroupType& group, const char* what)
{
    if (group.rank > harness_guard())
        throw rank_too_large(std::string(what) + ": rank " + std::to_string(group.rank)
                             + " exceeds guard " + std::to_string(harness_guard()));
}

} // namespace

HarnessReport verify_theorem_bs(const GroupType& group)
{
    guard_rank(group, "verify_theorem_bs");
    HarnessReport report;
    report.label = "theorem-bs " + format_group(group);
    for (const auto& sub : enumerate_dual_pseudo_levis(group)) {
        int skipped = 0;
        auto tuples = input_tuples(sub, /*special_only=*/true, /*sign_only_a=*/true, &skipped);
        report.skipped_degenerate += skipped;
        for (const auto& reps : tuples) {
            ++report.checked;
            SupportReport sr;
            try {
                sr = check_well_supported(induce(sub, reps));
            } catch (const degenerate_d_type&) {
                ++report.skipped_degenerate;
                continue;
            }
            if (!sr.well_supported) {
                report.failures.push_back(describe(sub, reps) + ": not well supported ("
                                          + (sr.failures.empty() ? "?" : sr.failures.front())
                                          + ")");
                continue;
            }
            if (sub.embedding == Embedding::LeviA && !sr.specially) {
                report.failures.push_back(describe(sub, reps)
                                          + ": Levi induction not specially well supported");
                continue;
            }
            ++report.passed;
        }
    }
    return report;
}

namespace {

// Componentwise joins of the factor labels over every orientation choice
// of the unordered type D factors. The cells of these pairs bound the
// cells of all induced components; for special inputs the single join is
// the truncated induction itself.
std::vector<Bipartition> join_bounds(const SubgroupSpec& sub, const std::vector<FactorRep>& reps)
{
    // Pair options per factor: both orientations of a type D label, and
    // all Littlewood-Richardson constituents of a symmetric-group one
    // (those are the labels reaching the first hyperoctahedral step).
    std::vector<std::vector<std::pair<Partition, Partition>>> options;
    for (size_t i = 0; i < reps.size(); ++i) {
        std::vector<std::pair<Partition, Partition>> opts;
        if (const auto* sigma = std::get_if<Partition>(&reps[i])) {
            const int k = sub.factors[i].weyl_rank();
            for (int a = 0; a <= k; ++a)
                for (const auto& alpha : enumerate_partitions(a))
                    for (const auto& beta : enumerate_partitions(k - a))
                        if (lr_coefficient(alpha, beta, *sigma))
                            opts.emplace_back(alpha, beta);
        } else {
            const auto& e = std::get<Bipartition>(reps[i]);
            opts.emplace_back(e.alpha, e.beta);
            if (sub.factors[i].letter == Letter::D && e.alpha != e.beta)
                opts.emplace_back(e.beta, e.alpha);
        }
        options.push_back(std::move(opts));
    }

    std::vector<std::pair<Partition, Partition>> joins{{Partition{}, Partition{}}};
    for (const auto& opts : options) {
        std::vector<std::pair<Partition, Partition>> next;
        for (const auto& acc : joins)
            for (const auto& o : opts)
                next.emplace_back(join(acc.first, o.first), join(acc.second, o.second));
        joins = std::move(next);
    }

    std::vector<Bipartition> bounds;
    for (const auto& j : joins) {
        Bipartition bound(sub.ambient, j.first, j.second);
        if (std::find(bounds.begin(), bounds.end(), bound) == bounds.end())
            bounds.push_back(bound);
    }
    return bounds;
}

} // namespace

HarnessReport verify_prop_ind_supp(const GroupType& group)
{
    guard_rank(group, "verify_prop_ind_supp");
    HarnessReport report;
    report.label = "prop-ind-supp " + format_group(group);
    for (const auto& sub : enumerate_dual_pseudo_levis(group)) {
        int skipped = 0;
        auto tuples = input_tuples(sub, /*special_only=*/false, /*sign_only_a=*/false, &skipped);
        report.skipped_degenerate += skipped;

        // Induced class per input cell, cached by the special
        // representations of the cell.
        std::map<std::vector<FactorRep>, UnipotentClass> cell_cache;

        for (const auto& reps : tuples) {
            ++report.checked;
            try {
                auto specials = cell_special_inputs(reps);
                auto it = cell_cache.find(specials);
                if (it == cell_cache.end()) {
                    SupportReport sr = check_well_supported(induce(sub, specials));
                    if (!sr.well_supported)
                        throw domain_error("induction of cell representatives not well "
                                           "supported for " + describe(sub, specials));
                    it = cell_cache.emplace(specials, *sr.o0).first;
                }
                const UnipotentClass& induced = it->second;

                // Cell bounds from the joins of the input's own labels.
                std::vector<UnipotentClass> cell_bounds;
                for (const auto& bound : join_bounds(sub, reps))
                    cell_bounds.push_back(cell_of(bound).special_class);

                VirtualRep v = induce(sub, reps);
                bool ok = true;
                for (const auto& [bip, m] : v.mult) {
                    UnipotentClass cls = springer_class(bip);
                    if (!dominates(induced.lambda, cls.lambda)) {
                        report.failures.push_back(describe(sub, reps) + ": component "
                                                  + format_bipartition(bip) + " has class "
                                                  + format_class(cls) + " not below "
                                                  + format_class(induced));
                        ok = false;
                        break;
                    }
                    if (cell_bounds.empty())
                        continue;
                    UnipotentClass cc = cell_of(bip).special_class;
                    bool cell_ok = false;
                    for (const auto& bound : cell_bounds)
                        if (dominates(bound.lambda, cc.lambda)) {
                            cell_ok = true;
                            break;
                        }
                    if (!cell_ok) {
                        report.failures.push_back(describe(sub, reps) + ": component "
                                                  + format_bipartition(bip) + " in cell of "
                                                  + format_class(cc)
                                                  + " above every join-bound cell");
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    ++report.passed;
            } catch (const degenerate_d_type&) {
                ++report.skipped_degenerate;
            }
        }
    }
    return report;
}

} // namespace springerlab
