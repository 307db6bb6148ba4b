#include "springerlab/gensupport.hpp"

#include <algorithm>
#include <string>

#include "springerlab/textio.hpp"

namespace springerlab {

namespace {

Partition staircase(int t)
{
    std::vector<int> parts;
    for (int i = t; i >= 1; --i)
        parts.push_back(i);
    return Partition(std::move(parts));
}

} // namespace

CuspidalDatum::CuspidalDatum(GroupType amb, int t_value, int sign_value)
    : ambient(amb)
    , t(t_value)
    , sign(sign_value)
{
    if (ambient.letter == Letter::A)
        throw domain_error("cuspidal data are modelled for types B/C/D");
    if (t < 0)
        throw domain_error("cuspidal datum needs t >= 0");
    if (sign != +1 && sign != -1)
        throw domain_error("defect sign must be +1 or -1");
    if (ambient.letter != Letter::C || t == 0)
        sign = +1;
    relative_weyl(); // validates the derived rank
}

int CuspidalDatum::defect() const
{
    switch (ambient.letter) {
    case Letter::B: return 1 + 2 * t;
    case Letter::C: return 1 + sign * 4 * t;
    default: return t == 0 ? 0 : 4 * t;
    }
}

GroupType CuspidalDatum::levi_weyl() const
{
    if (t == 0)
        throw domain_error("the cuspidal Levi is a torus at t = 0");
    switch (ambient.letter) {
    case Letter::B: return {Letter::B, 2 * t * t + 2 * t};
    case Letter::C: return {Letter::C, 8 * t * t + sign * 2 * t};
    default: return {Letter::D, 8 * t * t};
    }
}

GroupType CuspidalDatum::relative_weyl() const
{
    int r;
    Letter l;
    switch (ambient.letter) {
    case Letter::B:
        l = Letter::B;
        r = ambient.rank - (2 * t * t + 2 * t);
        break;
    case Letter::C:
        l = Letter::C;
        r = ambient.rank - (8 * t * t + sign * 2 * t);
        break;
    default:
        if (t == 0)
            return ambient;
        l = Letter::B;
        r = ambient.rank - 8 * t * t;
        break;
    }
    if (r < 0)
        throw domain_error("cuspidal datum t = " + std::to_string(t)
                           + " exceeds the rank of " + format_group(ambient));
    return {l, r};
}

Bipartition CuspidalDatum::levi_cell_rep() const
{
    const GroupType levi = levi_weyl();
    switch (ambient.letter) {
    case Letter::B: {
        Partition two_a = join(staircase(t), staircase(t));
        return Bipartition(levi, two_a, two_a);
    }
    case Letter::C: {
        Partition big = staircase(2 * t), small = staircase(2 * t - 1);
        if (sign > 0)
            return Bipartition(levi, join(big, big), join(big, small));
        return Bipartition(levi, join(big, small), join(small, small));
    }
    default: {
        Partition big = staircase(2 * t), small = staircase(2 * t - 1);
        return Bipartition(levi, join(big, big), join(small, small));
    }
    }
}

std::vector<CuspidalDatum> enumerate_cuspidal_data(const GroupType& group)
{
    std::vector<CuspidalDatum> out;
    out.emplace_back(group, 0);
    for (int t = 1;; ++t) {
        bool any = false;
        if (group.letter == Letter::C) {
            for (int sign : {+1, -1}) {
                try {
                    out.emplace_back(group, t, sign);
                    any = true;
                } catch (const domain_error&) {
                }
            }
        } else {
            try {
                out.emplace_back(group, t);
                any = true;
            } catch (const domain_error&) {
            }
        }
        if (!any)
            return out;
    }
}

namespace {

std::vector<int> run(int first, int step, int count)
{
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0, v = first; i < count; ++i, v += step)
        out.push_back(v);
    return out;
}

std::vector<int> shifted(const std::vector<int>& row, int shift)
{
    std::vector<int> out(row.size());
    for (size_t i = 0; i < row.size(); ++i)
        out[i] = row[i] + shift;
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

USymbol gamma_usymbol(const CuspidalDatum& datum, const USymbol& u)
{
    const GroupType relative = datum.relative_weyl();
    if (u.group != relative)
        throw group_mismatch("gamma: u-symbol belongs to " + format_group(u.group)
                             + ", datum expects " + format_group(relative));
    if (u.defect() != ordinary_defect(relative.letter))
        throw domain_error("gamma expects an ordinary-defect u-symbol");

    USymbol out;
    out.group = datum.ambient;
    const int t = datum.t;
    if (t == 0) {
        out.top = u.top;
        out.bottom = u.bottom;
        return out;
    }
    switch (datum.ambient.letter) {
    case Letter::B:
        out.top = concat(run(0, 2, 2 * t), shifted(u.top, 4 * t));
        out.bottom = u.bottom;
        break;
    case Letter::C:
        if (datum.sign > 0) {
            out.top = concat(run(0, 2, 4 * t), shifted(u.top, 8 * t));
            out.bottom = u.bottom;
        } else {
            // The bottom row of the input becomes an ambient top row; its
            // type C staircase offset of 1 is stripped in the process.
            out.top = shifted(u.bottom, -1);
            out.bottom = concat(run(1, 2, 4 * t - 2), shifted(u.top, 8 * t - 3));
        }
        break;
    default:
        out.top = concat(run(0, 2, 4 * t - 1), shifted(u.top, 8 * t - 2));
        out.bottom = u.bottom;
        break;
    }
    if (out.defect() != datum.defect())
        throw malformed_recipe("gamma image has defect " + std::to_string(out.defect())
                               + ", expected " + std::to_string(datum.defect()));
    return out;
}

GenPair gamma(const CuspidalDatum& datum, const USymbol& u)
{
    USymbol image = gamma_usymbol(datum, u);
    UnipotentClass cls = class_of_usymbol(image);
    return GenPair{std::move(image), std::move(cls)};
}

UnipotentClass osc_class(const CuspidalDatum& datum, const SubgroupSpec& wls,
                         const std::vector<FactorRep>& e1_cell)
{
    const GroupType relative = datum.relative_weyl();
    if (wls.ambient != relative)
        throw group_mismatch("osc_class: subgroup lives in " + format_group(wls.ambient)
                             + ", datum expects " + format_group(relative));

    // Truncated induction of the cell inside the relative Weyl group, as
    // the unique dominating carrier of the induced representation.
    std::vector<FactorRep> specials;
    specials.reserve(e1_cell.size());
    for (const auto& r : e1_cell) {
        if (const auto* sigma = std::get_if<Partition>(&r))
            specials.emplace_back(*sigma);
        else
            specials.emplace_back(special_member(std::get<Bipartition>(r)));
    }
    SupportReport sr = check_well_supported(induce(wls, specials));
    if (!sr.well_supported)
        throw domain_error("osc_class: induction inside the relative group is not well "
                           "supported");

    if (datum.t == 0)
        return *sr.o0;

    // Join with the Levi-level cell representation through the product
    // W(levi) x W_L^G inside the ambient Weyl group. The relative part may
    // be a non-special class, so the class-level join is used.
    const GroupType levi = datum.levi_weyl();
    Embedding e = datum.ambient.letter == Letter::D ? Embedding::DInBPseudo
                                                    : Embedding::SameLetterPseudo;
    SubgroupSpec product(datum.ambient, {levi, relative}, e);
    return induced_class(product, {FactorClass(springer_class(datum.levi_cell_rep())),
                                   FactorClass(*sr.o0)});
}

std::map<USymbol, long long> restriction_multiplicities(const CuspidalDatum& datum,
                                                        const SubgroupSpec& wls,
                                                        const std::vector<FactorRep>& e1)
{
    const GroupType relative = datum.relative_weyl();
    if (wls.ambient != relative)
        throw group_mismatch("restriction_multiplicities: subgroup lives in "
                             + format_group(wls.ambient) + ", datum expects "
                             + format_group(relative));
    VirtualRep v = induce(wls, e1);

    // Write every component's u-symbol at one common length so the images
    // stay comparable.
    int m = 0;
    for (const auto& [bip, mult] : v.mult)
        m = std::max(m, minimal_symbol_length(bip));
    std::map<USymbol, long long> out;
    for (const auto& [bip, mult] : v.mult)
        out[gamma_usymbol(datum, usymbol_of_bipartition(bip, m))] += mult;
    return out;
}

UnipotentClass unipotent_support(const CuspidalDatum& datum, const SubgroupSpec& wls,
                                 const std::vector<FactorRep>& e1)
{
    auto mults = restriction_multiplicities(datum, wls, e1);
    if (mults.empty())
        throw no_maximum("empty restriction");
    std::vector<UnipotentClass> classes;
    for (const auto& [u, m] : mults)
        classes.push_back(class_of_usymbol(u));
    for (const auto& cand : classes) {
        bool top = true;
        for (const auto& other : classes)
            if (!dominates(cand.lambda, other.lambda)) {
                top = false;
                break;
            }
        if (top)
            return cand;
    }
    throw no_maximum("restriction support has no dominance maximum");
}

std::vector<GenPair> ng_set(const CuspidalDatum& datum, const SubgroupSpec& wls,
                            const std::vector<FactorRep>& e1, const UnipotentClass& osc)
{
    std::vector<GenPair> out;
    for (const auto& [u, m] : restriction_multiplicities(datum, wls, e1)) {
        UnipotentClass cls = class_of_usymbol(u);
        if (cls == osc)
            out.push_back(GenPair{u, std::move(cls)});
    }
    return out;
}

CharsheafSupport charsheaf_support(const CuspidalDatum& datum, const SubgroupSpec& wls,
                                   const std::vector<FactorRep>& e1)
{
    CharsheafSupport cs{UnipotentClass(datum.ambient, Partition(std::vector<int>(
                            static_cast<size_t>(datum.ambient.N()), 1))),
                        osc_class(datum, wls, e1), false, {}, {}};
    cs.multiplicities = restriction_multiplicities(datum, wls, e1);
    if (cs.multiplicities.empty())
        throw no_maximum("empty restriction");

    std::vector<GenPair> pairs;
    for (const auto& [u, m] : cs.multiplicities)
        pairs.push_back(GenPair{u, class_of_usymbol(u)});

    bool found = false;
    for (const auto& cand : pairs) {
        bool top = true;
        for (const auto& other : pairs)
            if (!dominates(cand.cls.lambda, other.cls.lambda)) {
                top = false;
                break;
            }
        if (top) {
            cs.o_a = cand.cls;
            found = true;
            break;
        }
    }
    if (!found)
        throw no_maximum("restriction support has no dominance maximum");

    for (const auto& p : pairs)
        if (p.cls == cs.o_sc)
            cs.ng.push_back(p);
    cs.equals_osc = cs.o_a == cs.o_sc;
    return cs;
}

} // namespace springerlab
