#include "springerlab/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace springerlab {

Partition::Partition(std::vector<int> parts)
{
    for (int p : parts)
        if (p < 0)
            throw domain_error("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    size_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

Partition Partition::from_ascending(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

std::vector<int> Partition::ascending(int count) const
{
    if (count < length())
        throw pad_too_small("ascending(): count " + std::to_string(count)
                            + " < number of parts " + std::to_string(length()));
    std::vector<int> out(static_cast<size_t>(count), 0);
    for (int i = 0; i < length(); ++i)
        out[static_cast<size_t>(count - 1 - i)] = parts_[static_cast<size_t>(i)];
    return out;
}

int sigma_prefix(const Partition& lambda, int i)
{
    if (i < 0)
        throw domain_error("sigma_prefix: negative index");
    int n = std::min(i, lambda.length());
    int s = 0;
    for (int k = 0; k < n; ++k)
        s += lambda.part(k);
    return s;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw size_mismatch("dominates: partitions of unequal size ("
                            + std::to_string(lambda.size()) + " vs "
                            + std::to_string(mu.size()) + ")");
    return prefix_leq(mu, lambda);
}

bool prefix_leq(const Partition& a, const Partition& b)
{
    int len = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb)
            return false;
    }
    return true;
}

Partition join(const Partition& lambda, const Partition& mu)
{
    int len = std::max(lambda.length(), mu.length());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        parts[static_cast<size_t>(i)] = lambda.part(i) + mu.part(i);
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts(static_cast<size_t>(lambda.part(0)));
    for (size_t i = 0; i < parts.size(); ++i) {
        int count = 0;
        for (int j = 0; j < lambda.length(); ++j)
            if (lambda.part(j) > static_cast<int>(i))
                ++count;
        parts[i] = count;
    }
    return Partition(std::move(parts));
}

char letter_char(Letter l)
{
    return static_cast<char>(l);
}

Letter letter_from_char(char c)
{
    switch (c) {
    case 'A': case 'a': return Letter::A;
    case 'B': case 'b': return Letter::B;
    case 'C': case 'c': return Letter::C;
    case 'D': case 'd': return Letter::D;
    default: throw domain_error(std::string("unknown group letter '") + c + "'");
    }
}

GroupType::GroupType(Letter l, int r)
    : letter(l)
    , rank(r)
{
    if (rank < 0)
        throw domain_error("group rank must be nonnegative");
    if (letter == Letter::D && rank < 2)
        throw domain_error("type D requires rank >= 2");
}

int GroupType::N() const
{
    switch (letter) {
    case Letter::B: return 2 * rank + 1;
    case Letter::C:
    case Letter::D: return 2 * rank;
    default: throw domain_error("N() undefined for type A factors");
    }
}

bool valid_unipotent(const GroupType& group, const Partition& lambda)
{
    if (lambda.size() != group.N())
        throw size_mismatch("valid_unipotent: |lambda| = " + std::to_string(lambda.size())
                            + " but N = " + std::to_string(group.N()));
    const bool even_constrained = group.letter != Letter::C;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        bool part_even = parts[i] % 2 == 0;
        size_t mult = j - i;
        if (part_even == even_constrained && mult % 2 != 0)
            return false;
        i = j;
    }
    return true;
}

UnipotentClass::UnipotentClass(GroupType g, Partition l)
    : group(g)
    , lambda(std::move(l))
{
    if (group.letter == Letter::A)
        throw domain_error("unipotent classes are only modelled for types B/C/D");
    if (!valid_unipotent(group, lambda))
        throw domain_error("partition fails the type " + std::string(1, letter_char(group.letter))
                           + " multiplicity constraint");
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& sink)
{
    if (remaining == 0) {
        sink(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, sink);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw domain_error("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n == 0 ? 1 : n, prefix,
                    [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

std::vector<UnipotentClass> enumerate_classes(const GroupType& group)
{
    if (group.rank > enumeration_guard())
        throw rank_too_large("enumerate_classes: rank " + std::to_string(group.rank)
                             + " exceeds guard " + std::to_string(enumeration_guard()));
    std::vector<UnipotentClass> out;
    for (const auto& p : enumerate_partitions(group.N()))
        if (valid_unipotent(group, p))
            out.emplace_back(group, p);
    return out;
}

namespace {

int env_guard()
{
    if (const char* s = std::getenv("SPRINGERLAB_GUARD")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0)
            return static_cast<int>(v);
    }
    return 0;
}

} // namespace

int enumeration_guard()
{
    return std::max(30, env_guard());
}

int harness_guard()
{
    return std::max(6, env_guard());
}

} // namespace springerlab
