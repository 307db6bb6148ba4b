#include "springerlab/usymbols.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace springerlab {

int ordinary_defect(Letter letter)
{
    return letter == Letter::D ? 0 : 1;
}

namespace {

bool strictly_increasing(const std::vector<int>& v)
{
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            return false;
    return true;
}

// Shift added to the i-th entry (0-based) of the xi / eta row when passing
// from the raw recipe lists to the u-symbol rows.
int top_shift(Letter letter, int i)
{
    if (letter == Letter::C)
        return i == 0 ? 0 : i + 1;
    return i;
}

int bottom_shift(Letter letter, int i)
{
    if (letter == Letter::C)
        return i + 1;
    return i;
}

struct RecipeRows {
    std::vector<int> xi;
    std::vector<int> eta;
};

// lambda -> (xi, eta) of the parity-split recipe. In type C xi carries the
// extra leading entry coming from the prepended 1; the list need not be
// strictly increasing there.
RecipeRows recipe_rows(const UnipotentClass& cls)
{
    const Letter letter = cls.group.letter;
    int count = cls.lambda.length();
    if (letter == Letter::B) {
        if (count % 2 == 0)
            ++count; // cannot happen for a valid class, kept as a guard
    } else if (letter == Letter::C) {
        if (count % 2 != 0)
            ++count;
    } else {
        if (count % 2 != 0)
            throw malformed_recipe("type D class partition with an odd number of parts");
    }
    const int m = count / 2; // count is 2m+1 in type B, 2m otherwise

    std::vector<int> asc = cls.lambda.ascending(count);
    std::vector<int> shifted(asc.size());
    for (size_t i = 0; i < asc.size(); ++i)
        shifted[i] = asc[i] + static_cast<int>(i);

    std::vector<int> evens, odds;
    for (int v : shifted)
        (v % 2 == 0 ? evens : odds).push_back(v);
    if (static_cast<int>(evens.size()) != m)
        throw malformed_recipe("parity split of the shifted partition has "
                               + std::to_string(evens.size()) + " even entries, expected "
                               + std::to_string(m));
    if (letter == Letter::C)
        odds.insert(odds.begin(), 1);

    RecipeRows rows;
    rows.xi.reserve(odds.size());
    for (int v : odds)
        rows.xi.push_back((v - 1) / 2);
    rows.eta.reserve(evens.size());
    for (int v : evens)
        rows.eta.push_back(v / 2);
    return rows;
}

} // namespace

USymbol usymbol_of_class(const UnipotentClass& cls)
{
    const Letter letter = cls.group.letter;
    RecipeRows rows = recipe_rows(cls);

    USymbol u;
    u.group = cls.group;
    u.top.resize(rows.xi.size());
    u.bottom.resize(rows.eta.size());
    for (size_t i = 0; i < rows.xi.size(); ++i)
        u.top[i] = rows.xi[i] + top_shift(letter, static_cast<int>(i));
    for (size_t i = 0; i < rows.eta.size(); ++i)
        u.bottom[i] = rows.eta[i] + bottom_shift(letter, static_cast<int>(i));
    if (!strictly_increasing(u.top) || !strictly_increasing(u.bottom))
        throw malformed_recipe("u-symbol rows fail to be strictly increasing");
    return u;
}

namespace {

// Undo the staircase of one ordinary-shape arrangement and rebuild the
// class partition. Returns nothing when the arrangement is not in the
// image of the recipe.
std::optional<Partition> invert_rows(const GroupType& group, const std::vector<int>& top,
                                     const std::vector<int>& bottom)
{
    const Letter letter = group.letter;
    std::vector<int> xi(top.size()), eta(bottom.size());
    for (size_t i = 0; i < top.size(); ++i) {
        xi[i] = top[i] - top_shift(letter, static_cast<int>(i));
        if (xi[i] < 0)
            return std::nullopt;
    }
    for (size_t i = 0; i < bottom.size(); ++i) {
        eta[i] = bottom[i] - bottom_shift(letter, static_cast<int>(i));
        if (eta[i] < 0)
            return std::nullopt;
    }

    std::vector<int> odds(xi.size()), evens(eta.size());
    for (size_t i = 0; i < xi.size(); ++i)
        odds[i] = 2 * xi[i] + 1;
    for (size_t i = 0; i < eta.size(); ++i)
        evens[i] = 2 * eta[i];
    if (letter == Letter::C) {
        if (odds.empty() || odds.front() != 1)
            return std::nullopt;
        odds.erase(odds.begin());
    }

    std::vector<int> merged;
    merged.reserve(odds.size() + evens.size());
    std::merge(odds.begin(), odds.end(), evens.begin(), evens.end(), std::back_inserter(merged));
    if (!strictly_increasing(merged))
        return std::nullopt;

    std::vector<int> asc(merged.size());
    for (size_t i = 0; i < merged.size(); ++i) {
        asc[i] = merged[i] - static_cast<int>(i);
        if (asc[i] < 0)
            return std::nullopt;
    }
    Partition lambda = Partition::from_ascending(asc);
    if (lambda.size() != group.N())
        return std::nullopt;
    if (!valid_unipotent(group, lambda))
        return std::nullopt;
    return lambda;
}

std::optional<Partition> invert_ordinary(const USymbol& u)
{
    if (u.group.letter == Letter::D) {
        auto a = invert_rows(u.group, u.top, u.bottom);
        auto b = invert_rows(u.group, u.bottom, u.top);
        if (a && b && *a != *b)
            throw no_ordinary_representative("type D u-symbol inverts ambiguously");
        return a ? a : b;
    }
    return invert_rows(u.group, u.top, u.bottom);
}

USymbol pad_once(const USymbol& u)
{
    USymbol out;
    out.group = u.group;
    out.top.reserve(u.top.size() + 1);
    out.bottom.reserve(u.bottom.size() + 1);
    out.top.push_back(0);
    for (int v : u.top)
        out.top.push_back(v + 2);
    out.bottom.push_back(u.group.letter == Letter::C ? 1 : 0);
    for (int v : u.bottom)
        out.bottom.push_back(v + 2);
    return out;
}

} // namespace

UnipotentClass class_of_usymbol(const USymbol& u)
{
    const Letter letter = u.group.letter;
    std::vector<int> entries = entry_multiset(u);
    const int total = static_cast<int>(entries.size());
    const bool want_odd_total = letter != Letter::D;
    if (want_odd_total != (total % 2 != 0))
        throw no_ordinary_representative("entry count " + std::to_string(total)
                                         + " has no ordinary-defect arrangement in type "
                                         + std::string(1, letter_char(letter)));

    // Alternating assignment: the unique distinguished arrangement.
    USymbol d;
    d.group = u.group;
    for (int i = 0; i < total; ++i)
        (i % 2 == 0 ? d.top : d.bottom).push_back(entries[static_cast<size_t>(i)]);
    if (!strictly_increasing(d.top) || !strictly_increasing(d.bottom))
        throw no_ordinary_representative("entry multiset has no strictly increasing "
                                         "ordinary arrangement");

    for (int attempt = 0; attempt <= u.group.rank + 2; ++attempt) {
        if (auto lambda = invert_ordinary(d))
            return UnipotentClass(u.group, *lambda);
        d = pad_once(d);
    }
    throw no_ordinary_representative("u-symbol does not correspond to a unipotent class of "
                                     + std::string(1, letter_char(letter))
                                     + std::to_string(u.group.rank));
}

namespace {

bool interleaves(const std::vector<int>& a, const std::vector<int>& b)
{
    // a_1 <= b_1 <= a_2 <= b_2 <= ... over the indices that exist.
    for (size_t i = 0; i < b.size(); ++i) {
        if (i < a.size() && a[i] > b[i])
            return false;
        if (i + 1 < a.size() && b[i] > a[i + 1])
            return false;
    }
    return true;
}

} // namespace

bool is_distinguished(const Symbol& s)
{
    if (s.group.letter == Letter::D)
        return interleaves(s.xi, s.eta) || interleaves(s.eta, s.xi);
    return interleaves(s.xi, s.eta);
}

bool is_distinguished(const USymbol& u)
{
    if (u.group.letter == Letter::D)
        return interleaves(u.top, u.bottom) || interleaves(u.bottom, u.top);
    return interleaves(u.top, u.bottom);
}

std::vector<int> entry_multiset(const Symbol& s)
{
    std::vector<int> out;
    out.reserve(s.xi.size() + s.eta.size());
    out.insert(out.end(), s.xi.begin(), s.xi.end());
    out.insert(out.end(), s.eta.begin(), s.eta.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> entry_multiset(const USymbol& u)
{
    std::vector<int> out;
    out.reserve(u.top.size() + u.bottom.size());
    out.insert(out.end(), u.top.begin(), u.top.end());
    out.insert(out.end(), u.bottom.begin(), u.bottom.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool similar(const USymbol& a, const USymbol& b)
{
    return a.group.letter == b.group.letter && entry_multiset(a) == entry_multiset(b);
}

bool equivalent(const USymbol& a, const USymbol& b)
{
    if (a == b)
        return true;
    return a.group.letter == Letter::D && b.group.letter == Letter::D
        && a.group == b.group && a.top == b.bottom && a.bottom == b.top;
}

USymbol normalize_length(const USymbol& u, int m_target)
{
    int m = static_cast<int>(std::min(u.top.size(), u.bottom.size()));
    if (m_target < m)
        throw domain_error("normalize_length: target below current length");
    USymbol out = u;
    for (; m < m_target; ++m)
        out = pad_once(out);
    return out;
}

Symbol normalize_length(const Symbol& s, int m_target)
{
    int m = static_cast<int>(std::min(s.xi.size(), s.eta.size()));
    if (m_target < m)
        throw domain_error("normalize_length: target below current length");
    Symbol out = s;
    for (; m < m_target; ++m) {
        Symbol next;
        next.group = out.group;
        next.xi.push_back(0);
        for (int v : out.xi)
            next.xi.push_back(v + 1);
        next.eta.push_back(0);
        for (int v : out.eta)
            next.eta.push_back(v + 1);
        out = std::move(next);
    }
    return out;
}

bool usymbol_leq(const USymbol& a, const USymbol& b)
{
    if (a.group.letter != b.group.letter)
        throw shape_mismatch("usymbol_leq: group letters differ");
    if (a.top.size() != b.top.size() || a.bottom.size() != b.bottom.size())
        throw shape_mismatch("usymbol_leq: row shapes differ");
    std::vector<int> ma = entry_multiset(a), mb = entry_multiset(b);
    std::reverse(ma.begin(), ma.end());
    std::reverse(mb.begin(), mb.end());
    Partition pa{ma}, pb{mb};
    if (pa.size() != pb.size())
        throw shape_mismatch("usymbol_leq: entry sums differ");
    return dominates(pb, pa);
}

} // namespace springerlab
