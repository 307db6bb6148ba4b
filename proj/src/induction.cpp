#include "springerlab/induction.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace springerlab {

namespace {

const std::vector<Partition>& partitions_of(int n)
{
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_partitions(n)).first;
    return it->second;
}

} // namespace

long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    if (alpha.size() + beta.size() != gamma.size())
        return 0;
    if (alpha.length() > gamma.length())
        return 0;
    for (int i = 0; i < alpha.length(); ++i)
        if (alpha.part(i) > gamma.part(i))
            return 0;
    if (beta.empty())
        return 1;

    // Cells of gamma/alpha in reverse reading order: top row first, right
    // to left inside a row. Filling in this order keeps the ballot check
    // incremental and all constraining neighbours already placed.
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < gamma.length(); ++r)
        for (int c = gamma.part(r) - 1; c >= alpha.part(r); --c)
            cells.push_back({r, c});

    const int values = beta.length();
    std::vector<int> quota(static_cast<size_t>(values));
    for (int v = 0; v < values; ++v)
        quota[static_cast<size_t>(v)] = beta.part(v);
    std::vector<int> used(static_cast<size_t>(values), 0);
    std::vector<std::vector<int>> entry(static_cast<size_t>(gamma.length()));
    for (int r = 0; r < gamma.length(); ++r)
        entry[static_cast<size_t>(r)].assign(static_cast<size_t>(gamma.part(r)), 0);

    long long count = 0;
    auto fill = [&](auto&& self, size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int hi = values;
        if (c + 1 < gamma.part(r)) // right neighbour caps the value
            hi = std::min(hi, entry[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
        int lo = 1;
        if (r > 0 && c < gamma.part(r - 1) && c >= alpha.part(r - 1))
            lo = entry[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<size_t>(v - 1)] >= quota[static_cast<size_t>(v - 1)])
                continue;
            if (v > 1 && used[static_cast<size_t>(v - 2)] <= used[static_cast<size_t>(v - 1)])
                continue; // ballot violation
            ++used[static_cast<size_t>(v - 1)];
            entry[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            self(self, k + 1);
            --used[static_cast<size_t>(v - 1)];
        }
    };
    fill(fill, 0);
    return count;
}

SubgroupSpec::SubgroupSpec(GroupType amb, std::vector<GroupType> fs, Embedding e)
    : ambient(amb)
    , factors(std::move(fs))
    , embedding(e)
{
    if (ambient.letter == Letter::A)
        throw spec_mismatch("ambient group must be of type B, C or D");
    int total = 0;
    int a_count = 0, d_count = 0;
    for (const auto& f : factors) {
        total += f.weyl_rank();
        if (f.letter == Letter::A)
            ++a_count;
        if (f.letter == Letter::D)
            ++d_count;
    }
    if (total != ambient.rank)
        throw spec_mismatch("factor ranks sum to " + std::to_string(total) + ", ambient rank is "
                            + std::to_string(ambient.rank));
    switch (embedding) {
    case Embedding::LeviA:
        if (a_count != 1)
            throw spec_mismatch("LeviA embedding needs exactly one A factor");
        if (ambient.letter == Letter::D && d_count + a_count != static_cast<int>(factors.size()))
            throw spec_mismatch("cofactors of an A Levi in type D must be of type D");
        break;
    case Embedding::SameLetterPseudo:
        if (ambient.letter == Letter::D)
            throw spec_mismatch("same-letter products in type D are DInDPseudo");
        if (a_count || d_count)
            throw spec_mismatch("same-letter embedding takes hyperoctahedral factors only");
        break;
    case Embedding::DInBPseudo:
        if (a_count || d_count == 0)
            throw spec_mismatch("DInBPseudo embedding needs a type D factor");
        break;
    case Embedding::DInDPseudo:
        if (ambient.letter != Letter::D)
            throw spec_mismatch("D x D products require a type D ambient group");
        if (d_count != static_cast<int>(factors.size()))
            throw spec_mismatch("DInDPseudo embedding takes type D factors only");
        break;
    }
}

long long VirtualRep::total_multiplicity() const
{
    long long s = 0;
    for (const auto& [bip, m] : mult)
        s += m;
    return s;
}

namespace {

using OrderedPair = std::pair<Partition, Partition>;
using PairList = std::map<OrderedPair, long long>;

// Components of one factor, written as ordered pairs of the ambient
// hyperoctahedral tower (type D factors contribute both orientations).
PairList factor_pairs(const GroupType& factor, const FactorRep& rep)
{
    PairList out;
    if (factor.letter == Letter::A) {
        const auto* sigma = std::get_if<Partition>(&rep);
        if (!sigma)
            throw spec_mismatch("A factor takes a single partition");
        const int k = factor.weyl_rank();
        if (sigma->size() != k)
            throw spec_mismatch("A factor representation must be a partition of "
                                + std::to_string(k));
        for (int a = 0; a <= k; ++a)
            for (const auto& alpha : partitions_of(a))
                for (const auto& beta : partitions_of(k - a))
                    if (long long c = lr_coefficient(alpha, beta, *sigma))
                        out[{alpha, beta}] = c;
        return out;
    }
    const auto* bip = std::get_if<Bipartition>(&rep);
    if (!bip)
        throw spec_mismatch("classical factor takes a bipartition");
    if (bip->group != factor)
        throw spec_mismatch("factor representation labelled by the wrong group");
    if (factor.letter == Letter::D) {
        if (bip->split())
            throw degenerate_d_type("split type D factor representation");
        out[{bip->alpha, bip->beta}] = 1;
        out[{bip->beta, bip->alpha}] = 1;
        return out;
    }
    out[{bip->alpha, bip->beta}] = 1;
    return out;
}

PairList convolve(const PairList& x, const PairList& y)
{
    PairList out;
    for (const auto& [px, mx] : x) {
        for (const auto& [py, my] : y) {
            const int asize = px.first.size() + py.first.size();
            const int bsize = px.second.size() + py.second.size();
            for (const auto& alpha : partitions_of(asize)) {
                long long ca = lr_coefficient(px.first, py.first, alpha);
                if (!ca)
                    continue;
                for (const auto& beta : partitions_of(bsize)) {
                    long long cb = lr_coefficient(px.second, py.second, beta);
                    if (!cb)
                        continue;
                    out[{alpha, beta}] += mx * my * ca * cb;
                }
            }
        }
    }
    return out;
}

} // namespace

VirtualRep induce(const SubgroupSpec& sub, const std::vector<FactorRep>& reps)
{
    if (reps.size() != sub.factors.size())
        throw spec_mismatch("expected " + std::to_string(sub.factors.size())
                            + " factor representations, got " + std::to_string(reps.size()));
    PairList acc;
    acc[{Partition{}, Partition{}}] = 1;
    for (size_t i = 0; i < reps.size(); ++i)
        acc = convolve(acc, factor_pairs(sub.factors[i], reps[i]));

    VirtualRep out;
    out.group = sub.ambient;
    if (sub.ambient.letter == Letter::D) {
        for (const auto& [pair, m] : acc) {
            if (pair.first.parts() < pair.second.parts())
                continue; // folded into the canonical orientation
            if (pair.first != pair.second) {
                auto swapped = acc.find({pair.second, pair.first});
                if (swapped == acc.end() || swapped->second != m)
                    throw degenerate_d_type("asymmetric decomposition over a type D group");
            }
            out.mult[Bipartition(sub.ambient, pair.first, pair.second)] = m;
        }
        return out;
    }
    for (const auto& [pair, m] : acc)
        out.mult[Bipartition(sub.ambient, pair.first, pair.second)] = m;
    return out;
}

namespace {

Partition ones(int k)
{
    return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

struct OrientedPair {
    Partition alpha, beta;
};

OrientedPair oriented_factor(const GroupType& factor, const FactorRep& rep, bool require_special)
{
    if (factor.letter == Letter::A) {
        const auto* sigma = std::get_if<Partition>(&rep);
        if (!sigma)
            throw spec_mismatch("A factor takes a single partition");
        const int k = factor.weyl_rank();
        if (*sigma != ones(k))
            throw unsupported_j_induction("A factor truncated induction supports the sign "
                                          "representation only");
        return {ones((k + 1) / 2), ones(k / 2)};
    }
    const auto* bip = std::get_if<Bipartition>(&rep);
    if (!bip)
        throw spec_mismatch("classical factor takes a bipartition");
    if (bip->group != factor)
        throw spec_mismatch("factor representation labelled by the wrong group");
    if (require_special && !is_special_rep(*bip))
        throw domain_error("truncated induction requires special factor representations");
    if (factor.letter != Letter::D)
        return {bip->alpha, bip->beta};
    if (bip->split())
        throw degenerate_d_type("split type D factor representation");
    if (bip->alpha.size() == bip->beta.size())
        throw degenerate_d_type("type D orientation is ambiguous for equal-size halves");
    if (bip->alpha.size() > bip->beta.size())
        return {bip->alpha, bip->beta};
    return {bip->beta, bip->alpha};
}

Bipartition join_pairs(const SubgroupSpec& sub, const std::vector<OrientedPair>& pairs)
{
    Partition a, b;
    for (const auto& p : pairs) {
        a = join(a, p.alpha);
        b = join(b, p.beta);
    }
    return Bipartition(sub.ambient, std::move(a), std::move(b));
}

} // namespace

Bipartition j_induce(const SubgroupSpec& sub, const std::vector<FactorRep>& reps)
{
    if (reps.size() != sub.factors.size())
        throw spec_mismatch("expected " + std::to_string(sub.factors.size())
                            + " factor representations, got " + std::to_string(reps.size()));
    std::vector<OrientedPair> pairs;
    pairs.reserve(reps.size());
    for (size_t i = 0; i < reps.size(); ++i)
        pairs.push_back(oriented_factor(sub.factors[i], reps[i], /*require_special=*/true));
    return join_pairs(sub, pairs);
}

UnipotentClass induced_class(const SubgroupSpec& sub, const std::vector<FactorClass>& cls)
{
    if (cls.size() != sub.factors.size())
        throw spec_mismatch("expected " + std::to_string(sub.factors.size())
                            + " factor classes, got " + std::to_string(cls.size()));
    std::vector<OrientedPair> pairs;
    pairs.reserve(cls.size());
    for (size_t i = 0; i < cls.size(); ++i) {
        const GroupType& factor = sub.factors[i];
        if (factor.letter == Letter::A) {
            const auto* orbit = std::get_if<Partition>(&cls[i]);
            if (!orbit)
                throw spec_mismatch("A factor takes a partition class");
            const int k = factor.weyl_rank();
            if (*orbit != ones(k))
                throw unsupported_j_induction("A factor class induction supports the zero "
                                              "class only");
            pairs.push_back({ones((k + 1) / 2), ones(k / 2)});
            continue;
        }
        const auto* c = std::get_if<UnipotentClass>(&cls[i]);
        if (!c)
            throw spec_mismatch("classical factor takes a unipotent class");
        if (c->group != factor)
            throw spec_mismatch("factor class labelled by the wrong group");
        Bipartition e = bipartition_of_class(*c);
        pairs.push_back(oriented_factor(factor, FactorRep(e), /*require_special=*/false));
    }
    return springer_class(join_pairs(sub, pairs));
}

std::vector<SubgroupSpec> enumerate_dual_pseudo_levis(const GroupType& group)
{
    std::vector<SubgroupSpec> out;
    const int n = group.rank;
    auto levi_cofactor = [&](int r) -> GroupType {
        switch (group.letter) {
        case Letter::B: return {Letter::C, r};
        case Letter::C: return {Letter::B, r};
        default: return {Letter::D, r};
        }
    };
    switch (group.letter) {
    case Letter::B:
        for (int k = 1; 2 * k <= n; ++k)
            out.emplace_back(group,
                             std::vector<GroupType>{{Letter::C, k}, {Letter::C, n - k}},
                             Embedding::SameLetterPseudo);
        break;
    case Letter::C:
        for (int k = 2; k <= n; ++k) {
            std::vector<GroupType> fs{{Letter::D, k}};
            if (n - k > 0)
                fs.push_back({Letter::B, n - k});
            out.emplace_back(group, std::move(fs), Embedding::DInBPseudo);
        }
        break;
    case Letter::D:
        for (int k = 2; 2 * k <= n && n - k >= 2; ++k)
            out.emplace_back(group,
                             std::vector<GroupType>{{Letter::D, k}, {Letter::D, n - k}},
                             Embedding::DInDPseudo);
        break;
    default:
        throw domain_error("enumerate_dual_pseudo_levis: type B/C/D only");
    }
    // Maximal Levi shapes A_{k-1} x cofactor (A_0 is the Weyl group of the
    // GL_1 Levi factor).
    for (int k = 1; k <= n; ++k) {
        const int rest = n - k;
        if (group.letter == Letter::D && rest == 1)
            continue; // the SO(2) cofactor is a torus, not a D_1 group
        std::vector<GroupType> fs{{Letter::A, k - 1}};
        if (rest > 0)
            fs.push_back(levi_cofactor(rest));
        out.emplace_back(group, std::move(fs), Embedding::LeviA);
    }
    return out;
}

namespace {

long long weyl_order(const GroupType& g)
{
    auto factorial = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i)
            f *= i;
        return f;
    };
    switch (g.letter) {
    case Letter::A: return factorial(g.rank + 1);
    case Letter::B:
    case Letter::C: return factorial(g.rank) << g.rank;
    case Letter::D:
        return g.rank == 0 ? 1 : factorial(g.rank) << (g.rank - 1);
    }
    return 1;
}

} // namespace

long long weyl_index(const SubgroupSpec& sub)
{
    long long idx = weyl_order(sub.ambient);
    for (const auto& f : sub.factors)
        idx /= weyl_order(f);
    return idx;
}

} // namespace springerlab
