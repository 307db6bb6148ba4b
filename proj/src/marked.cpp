#include "springerlab/marked.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace springerlab {

MarkableContext::MarkableContext(GroupType g, Partition l, std::vector<int> m)
    : group(g)
    , lambda(std::move(l))
    , markable(std::move(m))
{
    for (size_t i = 0; i < markable.size(); ++i) {
        if (i && markable[i] <= markable[i - 1])
            throw invalid_marking("markable values must be strictly increasing");
        bool is_part = false;
        for (int j = 0; j < lambda.length(); ++j)
            if (lambda.part(j) == markable[i])
                is_part = true;
        if (!is_part)
            throw invalid_marking("markable value " + std::to_string(markable[i])
                                  + " is not a part of the partition");
    }
}

void validate_marking(const MarkableContext& ctx, const Marking& nu)
{
    for (size_t i = 0; i < nu.size(); ++i) {
        if (i && nu[i] <= nu[i - 1])
            throw invalid_marking("marking must be strictly increasing");
        if (!std::binary_search(ctx.markable.begin(), ctx.markable.end(), nu[i]))
            throw invalid_marking("marked value " + std::to_string(nu[i])
                                  + " is not markable");
    }
    if (nu.size() % 2 != 0 && ctx.group.letter != Letter::C)
        throw invalid_marking("markings of types B and D need an even number of values");
}

namespace {

// Blocks (c_1, d_1), (c_2, d_2), ... of a marking, with the type C leading
// 0 added when the length is odd.
std::vector<std::pair<int, int>> blocks(const Marking& nu)
{
    Marking padded = nu;
    if (padded.size() % 2 != 0)
        padded.insert(padded.begin(), 0);
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < padded.size(); i += 2)
        out.emplace_back(padded[i], padded[i + 1]);
    return out;
}

} // namespace

bool marking_leq(const MarkableContext& ctx, const Marking& a, const Marking& b)
{
    validate_marking(ctx, a);
    validate_marking(ctx, b);
    auto small = blocks(a);
    auto big = blocks(b);
    for (const auto& [c, d] : small) {
        bool nested = false;
        for (const auto& [lo, hi] : big)
            if (lo <= c && d <= hi) {
                nested = true;
                break;
            }
        if (!nested)
            return false;
    }
    return true;
}

std::vector<MarkedPartition> superminimal_markings(const MarkableContext& ctx)
{
    std::vector<MarkedPartition> out;
    if (ctx.group.letter == Letter::C && !ctx.markable.empty())
        out.push_back({ctx.lambda, Marking{ctx.markable.front()}});
    for (size_t i = 0; i + 1 < ctx.markable.size(); ++i)
        out.push_back({ctx.lambda, Marking{ctx.markable[i], ctx.markable[i + 1]}});
    return out;
}

CoxeterGenerators coxeter_generators(const MarkableContext& ctx)
{
    CoxeterGenerators g;
    for (const auto& m : superminimal_markings(ctx))
        g.generators.push_back(m.nu);
    g.rank = static_cast<int>(g.generators.size());
    return g;
}

namespace {

// Partition cut out by a subset of simple reflections of S_n: maximal runs
// of chosen generators of length r give cycles of length r+1.
Partition subset_cycle_type(int n, unsigned mask)
{
    std::vector<int> parts;
    int run = 0;
    for (int i = 0; i < n - 1; ++i) {
        if (mask & (1u << i)) {
            ++run;
        } else {
            if (run)
                parts.push_back(run + 1);
            run = 0;
        }
    }
    if (run)
        parts.push_back(run + 1);
    int covered = 0;
    for (int p : parts)
        covered += p;
    for (int i = covered; i < n; ++i)
        parts.push_back(1);
    return Partition(std::move(parts));
}

} // namespace

std::vector<IrrClassEntry> irr_class_bijection(const std::vector<int>& h_spec)
{
    for (int n : h_spec)
        if (n < 1 || n > 12)
            throw domain_error("irr_class_bijection: factor degrees must be in 1..12");

    // Subsets of simple reflections up to conjugacy = one partition per
    // factor; verified by direct enumeration of subsets.
    std::vector<std::vector<Partition>> per_factor;
    for (int n : h_spec) {
        std::set<Partition> seen;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
            seen.insert(subset_cycle_type(n, mask));
        std::vector<Partition> all = enumerate_partitions(n);
        if (seen.size() != all.size())
            throw domain_error("subset classes of S_" + std::to_string(n)
                               + " do not match partitions of " + std::to_string(n));
        per_factor.push_back(std::move(all));
    }

    std::vector<IrrClassEntry> out{{}};
    for (const auto& options : per_factor) {
        std::vector<IrrClassEntry> next;
        for (const auto& entry : out)
            for (const auto& p : options) {
                IrrClassEntry e = entry;
                e.subset_classes.push_back(p);
                // Truncated induction of sign from the parabolic of shape p
                // transposes the label; tensoring with sign transposes back.
                e.irreducible.push_back(conjugate(conjugate(p)));
                e.conjugacy.push_back(p);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace springerlab
