#include "springerlab/springer_cells.hpp"

#include <algorithm>
#include <string>

namespace springerlab {

namespace {

bool lex_less(const Partition& a, const Partition& b)
{
    return a.parts() < b.parts();
}

} // namespace

Bipartition::Bipartition(GroupType g, Partition a, Partition b)
    : group(g)
    , alpha(std::move(a))
    , beta(std::move(b))
{
    if (group.letter == Letter::A)
        throw domain_error("bipartitions label hyperoctahedral and type D groups only");
    if (alpha.size() + beta.size() != group.rank)
        throw size_mismatch("bipartition sizes sum to " + std::to_string(alpha.size() + beta.size())
                            + ", rank is " + std::to_string(group.rank));
    if (group.letter == Letter::D && lex_less(alpha, beta))
        std::swap(alpha, beta);
}

std::vector<Bipartition> enumerate_bipartitions(const GroupType& group)
{
    std::vector<Bipartition> out;
    for (int a = group.rank; a >= 0; --a) {
        for (const auto& alpha : enumerate_partitions(a)) {
            for (const auto& beta : enumerate_partitions(group.rank - a)) {
                if (group.letter == Letter::D && lex_less(alpha, beta))
                    continue; // unordered pair, canonical orientation only
                out.emplace_back(group, alpha, beta);
            }
        }
    }
    return out;
}

int minimal_symbol_length(const Bipartition& e)
{
    if (e.group.letter == Letter::D)
        return std::max({e.alpha.length(), e.beta.length(), 1});
    return std::max(e.alpha.length() - 1, e.beta.length());
}

Symbol symbol_of_bipartition(const Bipartition& e, int m)
{
    if (m < minimal_symbol_length(e))
        throw pad_too_small("symbol_of_bipartition: length " + std::to_string(m)
                            + " cannot hold the bipartition");
    const int top_count = e.group.letter == Letter::D ? m : m + 1;
    std::vector<int> a = e.alpha.ascending(top_count);
    std::vector<int> b = e.beta.ascending(m);
    Symbol s;
    s.group = e.group;
    s.xi.resize(a.size());
    s.eta.resize(b.size());
    for (size_t i = 0; i < a.size(); ++i)
        s.xi[i] = a[i] + static_cast<int>(i);
    for (size_t i = 0; i < b.size(); ++i)
        s.eta[i] = b[i] + static_cast<int>(i);
    return s;
}

Symbol symbol_of_bipartition(const Bipartition& e)
{
    return symbol_of_bipartition(e, minimal_symbol_length(e));
}

USymbol usymbol_of_bipartition(const Bipartition& e, int m)
{
    if (m < minimal_symbol_length(e))
        throw pad_too_small("usymbol_of_bipartition: length " + std::to_string(m)
                            + " cannot hold the bipartition");
    const int top_count = e.group.letter == Letter::D ? m : m + 1;
    const int bottom_offset = e.group.letter == Letter::C ? 1 : 0;
    std::vector<int> a = e.alpha.ascending(top_count);
    std::vector<int> b = e.beta.ascending(m);
    USymbol u;
    u.group = e.group;
    u.top.resize(a.size());
    u.bottom.resize(b.size());
    for (size_t i = 0; i < a.size(); ++i)
        u.top[i] = a[i] + 2 * static_cast<int>(i);
    for (size_t i = 0; i < b.size(); ++i)
        u.bottom[i] = b[i] + 2 * static_cast<int>(i) + bottom_offset;
    return u;
}

USymbol usymbol_of_bipartition(const Bipartition& e)
{
    return usymbol_of_bipartition(e, minimal_symbol_length(e));
}

namespace {

// Decode one u-symbol row back to partition parts.
Partition row_to_partition(const std::vector<int>& row, int offset)
{
    std::vector<int> asc(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
        asc[i] = row[i] - 2 * static_cast<int>(i) - offset;
        if (asc[i] < 0)
            throw malformed_recipe("u-symbol row does not decode to a partition");
    }
    return Partition::from_ascending(asc);
}

} // namespace

Bipartition bipartition_of_class(const UnipotentClass& cls)
{
    USymbol u = usymbol_of_class(cls);
    Partition a = row_to_partition(u.top, 0);
    Partition b = row_to_partition(u.bottom, cls.group.letter == Letter::C ? 1 : 0);
    return Bipartition(cls.group, std::move(a), std::move(b));
}

Symbol symbol_of_class(const UnipotentClass& cls)
{
    return symbol_of_bipartition(bipartition_of_class(cls));
}

UnipotentClass springer_class(const Bipartition& e)
{
    return class_of_usymbol(usymbol_of_bipartition(e));
}

bool is_special_rep(const Bipartition& e)
{
    return is_distinguished(symbol_of_bipartition(e));
}

bool is_special_class(const UnipotentClass& cls)
{
    return is_special_rep(bipartition_of_class(cls));
}

namespace {

// Strip the common leading zeros introduced by length normalization, so
// that members of one similarity class share one canonical multiset.
Symbol reduce_symbol(Symbol s)
{
    while (!s.xi.empty() && !s.eta.empty() && s.xi.front() == 0 && s.eta.front() == 0) {
        s.xi.erase(s.xi.begin());
        s.eta.erase(s.eta.begin());
        for (int& v : s.xi)
            --v;
        for (int& v : s.eta)
            --v;
    }
    return s;
}

// The distinguished arrangement of a symbol entry multiset.
Symbol distinguished_arrangement(const GroupType& group, const std::vector<int>& entries)
{
    Symbol d;
    d.group = group;
    for (size_t i = 0; i < entries.size(); ++i)
        (i % 2 == 0 ? d.xi : d.eta).push_back(entries[i]);
    return d;
}

Bipartition bipartition_of_symbol(const Symbol& s)
{
    std::vector<int> a(s.xi.size()), b(s.eta.size());
    for (size_t i = 0; i < s.xi.size(); ++i)
        a[i] = s.xi[i] - static_cast<int>(i);
    for (size_t i = 0; i < s.eta.size(); ++i)
        b[i] = s.eta[i] - static_cast<int>(i);
    return Bipartition(s.group, Partition::from_ascending(a), Partition::from_ascending(b));
}

} // namespace

Bipartition special_member(const Bipartition& e)
{
    Symbol s = reduce_symbol(symbol_of_bipartition(e));
    Symbol d = distinguished_arrangement(e.group, entry_multiset(s));
    return bipartition_of_symbol(d);
}

CellHandle cell_of(const Bipartition& e)
{
    Symbol s = reduce_symbol(symbol_of_bipartition(e));
    CellHandle h{e.group, springer_class(special_member(e)), entry_multiset(s)};
    return h;
}

bool cell_leq(const CellHandle& a, const CellHandle& b)
{
    if (a.group != b.group)
        throw group_mismatch("cell_leq: cells of different groups");
    return dominates(b.special_class.lambda, a.special_class.lambda);
}

std::vector<UnipotentClass> special_classes(const GroupType& group)
{
    std::vector<UnipotentClass> out;
    for (const auto& cls : enumerate_classes(group))
        if (is_special_class(cls))
            out.push_back(cls);
    return out;
}

UnipotentClass special_closure(const UnipotentClass& cls)
{
    std::vector<UnipotentClass> above;
    for (const auto& s : special_classes(cls.group))
        if (dominates(s.lambda, cls.lambda))
            above.push_back(s);
    for (const auto& candidate : above) {
        bool is_min = true;
        for (const auto& other : above)
            if (!dominates(other.lambda, candidate.lambda)) {
                is_min = false;
                break;
            }
        if (is_min)
            return candidate;
    }
    throw non_unique_minimum("special closure of the class is not unique");
}

} // namespace springerlab
