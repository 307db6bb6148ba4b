#include "springerlab/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace springerlab {

namespace {

std::string trimmed(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return {};
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s)
{
    std::string t = trimmed(s);
    if (t.empty())
        throw parse_error("expected an integer");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw parse_error("not an integer: '" + t + "'");
    }
    if (pos != t.size())
        throw parse_error("trailing characters after integer: '" + t + "'");
    return v;
}

} // namespace

std::string format_partition(const Partition& p)
{
    std::string out = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.part(i));
    }
    return out + "]";
}

Partition parse_partition(const std::string& text)
{
    std::string t = trimmed(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw parse_error("partition must look like [5,3,1]: got '" + text + "'");
    std::string body = trimmed(t.substr(1, t.size() - 2));
    std::vector<int> parts;
    if (!body.empty()) {
        for (const auto& piece : split(body, ',')) {
            std::string item = trimmed(piece);
            size_t caret = item.find('^');
            if (caret == std::string::npos) {
                parts.push_back(parse_int(item));
            } else {
                int value = parse_int(item.substr(0, caret));
                int count = parse_int(item.substr(caret + 1));
                if (count < 0)
                    throw parse_error("negative exponent in '" + item + "'");
                for (int i = 0; i < count; ++i)
                    parts.push_back(value);
            }
        }
    }
    for (int v : parts)
        if (v < 0)
            throw parse_error("negative part in '" + text + "'");
    return Partition(std::move(parts));
}

std::string format_group(const GroupType& g)
{
    return std::string(1, letter_char(g.letter)) + std::to_string(g.rank);
}

GroupType parse_group(const std::string& text)
{
    std::string t = trimmed(text);
    if (t.size() < 2)
        throw parse_error("group must look like B5: got '" + text + "'");
    Letter l;
    try {
        l = letter_from_char(t[0]);
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
    int rank = parse_int(t.substr(1));
    try {
        return GroupType(l, rank);
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

std::string format_class(const UnipotentClass& cls)
{
    return format_group(cls.group) + ":" + format_partition(cls.lambda);
}

std::string format_bipartition(const Bipartition& e)
{
    return "(" + format_partition(e.alpha) + "," + format_partition(e.beta) + ")";
}

Bipartition parse_bipartition(const GroupType& group, const std::string& text)
{
    std::string t = trimmed(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error("bipartition must look like ([3],[2]): got '" + text + "'");
    std::string body = t.substr(1, t.size() - 2);
    size_t depth = 0, comma = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
        if (body[i] == '[')
            ++depth;
        else if (body[i] == ']')
            --depth;
        else if (body[i] == ',' && depth == 0) {
            comma = i;
            break;
        }
    }
    if (comma == std::string::npos)
        throw parse_error("bipartition must contain two partitions: got '" + text + "'");
    Partition a = parse_partition(body.substr(0, comma));
    Partition b = parse_partition(body.substr(comma + 1));
    try {
        return Bipartition(group, std::move(a), std::move(b));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

namespace {

std::string format_row(const std::vector<int>& row)
{
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(row[i]);
    }
    return out;
}

std::vector<int> parse_row(const std::string& s)
{
    std::vector<int> out;
    std::istringstream in(s);
    int v;
    while (in >> v)
        out.push_back(v);
    return out;
}

int sum(const std::vector<int>& v)
{
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

} // namespace

std::string format_usymbol(const USymbol& u)
{
    return std::string(1, letter_char(u.group.letter)) + ":(" + format_row(u.top) + " / "
        + format_row(u.bottom) + ")";
}

USymbol parse_usymbol(const std::string& text, std::optional<int> rank)
{
    std::string t = trimmed(text);
    size_t colon = t.find(':');
    if (colon == std::string::npos || colon == 0)
        throw parse_error("u-symbol must look like B:(0 5 / 2): got '" + text + "'");
    Letter l;
    try {
        l = letter_from_char(t[0]);
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
    std::string rest = trimmed(t.substr(colon + 1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
        throw parse_error("u-symbol rows must be parenthesised: got '" + text + "'");
    std::string body = rest.substr(1, rest.size() - 2);
    size_t slash = body.find('/');
    if (slash == std::string::npos)
        throw parse_error("u-symbol needs a '/' between rows: got '" + text + "'");
    USymbol u;
    u.top = parse_row(body.substr(0, slash));
    u.bottom = parse_row(body.substr(slash + 1));
    int r;
    if (rank) {
        r = *rank;
    } else {
        // Recover the rank from the entry sum of an ordinary-defect symbol.
        if (u.defect() != ordinary_defect(l))
            throw parse_error("rank required for u-symbols of non-ordinary defect");
        const int m = static_cast<int>(u.bottom.size());
        const int total = sum(u.top) + sum(u.bottom);
        int N;
        switch (l) {
        case Letter::B: N = 2 * (total - 2 * m * m) + 1; break;
        case Letter::C: N = 2 * (total - 2 * m * m - m); break;
        default: N = 2 * (total - 2 * m * m + 2 * m); break;
        }
        if (N < 0 || (l == Letter::B ? (N - 1) % 2 != 0 : N % 2 != 0))
            throw parse_error("u-symbol entries do not match any rank");
        r = l == Letter::B ? (N - 1) / 2 : N / 2;
    }
    try {
        u.group = GroupType(l, r);
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
    return u;
}

std::string format_subgroup(const SubgroupSpec& sub)
{
    std::string out = format_group(sub.ambient) + " <= ";
    for (size_t i = 0; i < sub.factors.size(); ++i) {
        if (i)
            out += 'x';
        out += format_group(sub.factors[i]);
    }
    return out;
}

SubgroupSpec parse_subgroup(const std::string& text)
{
    size_t arrow = text.find("<=");
    if (arrow == std::string::npos)
        throw parse_error("subgroup must look like 'B5 <= C2xC3': got '" + text + "'");
    GroupType ambient = parse_group(text.substr(0, arrow));
    std::vector<GroupType> factors;
    for (const auto& piece : split(trimmed(text.substr(arrow + 2)), 'x'))
        factors.push_back(parse_group(piece));
    bool has_a = false, has_d = false, all_d = !factors.empty();
    for (const auto& f : factors) {
        has_a |= f.letter == Letter::A;
        has_d |= f.letter == Letter::D;
        all_d &= f.letter == Letter::D;
    }
    Embedding e;
    if (has_a)
        e = Embedding::LeviA;
    else if (ambient.letter == Letter::D)
        e = all_d ? Embedding::DInDPseudo : Embedding::DInBPseudo;
    else if (has_d)
        e = Embedding::DInBPseudo;
    else
        e = Embedding::SameLetterPseudo;
    try {
        return SubgroupSpec(ambient, std::move(factors), e);
    } catch (const domain_error& err) {
        throw parse_error(err.what());
    }
}

std::string format_factor_rep(const FactorRep& rep)
{
    if (const auto* p = std::get_if<Partition>(&rep))
        return format_partition(*p);
    return format_bipartition(std::get<Bipartition>(rep));
}

std::vector<FactorRep> parse_factor_reps(const SubgroupSpec& sub, const std::string& text)
{
    auto pieces = split(text, ';');
    if (pieces.size() != sub.factors.size())
        throw parse_error("expected " + std::to_string(sub.factors.size())
                          + " factor representations separated by ';'");
    std::vector<FactorRep> out;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const GroupType& f = sub.factors[i];
        if (f.letter == Letter::A)
            out.emplace_back(parse_partition(pieces[i]));
        else
            out.emplace_back(parse_bipartition(f, pieces[i]));
    }
    return out;
}

std::string format_virtual_rep(const VirtualRep& rep)
{
    std::string out;
    for (const auto& [bip, m] : rep.mult) {
        if (!out.empty())
            out += " + ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += format_bipartition(bip);
    }
    return out.empty() ? "0" : out;
}

} // namespace springerlab
