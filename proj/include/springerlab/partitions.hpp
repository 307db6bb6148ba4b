#pragma once

#include <compare>
#include <vector>

#include "springerlab/errors.hpp"

namespace springerlab {

// A partition: weakly decreasing nonnegative integers. Stored descending
// with trailing zeros stripped, so partitions that agree after zero
// stripping compare equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_ascending(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 0-based; parts beyond the stored length read as 0.
    int part(int i) const
    {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }

    // The parts in ascending order, zero-padded on the left to `count`
    // entries. Requires count >= length().
    std::vector<int> ascending(int count) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    // Descending lexicographic order on the part lists.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Sum of the i largest parts; saturates at size() for large i.
int sigma_prefix(const Partition& lambda, int i);

// True iff lambda >= mu in the dominance order. Sizes must agree.
bool dominates(const Partition& lambda, const Partition& mu);

// Prefix-sum comparison without the equal-size requirement:
// sigma_i(a) <= sigma_i(b) for all i.
bool prefix_leq(const Partition& a, const Partition& b);

// Partwise sum with parts aligned by rank order (largest with largest).
Partition join(const Partition& lambda, const Partition& mu);

// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

enum class Letter : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char letter_char(Letter l);
Letter letter_from_char(char c);

// Classical group type. B_n/C_n accept rank >= 0 (rank 0 is the trivial
// group, which shows up as an identity factor and as a derived relative
// Weyl group); D_n requires rank >= 2. Letter A is only meaningful as a
// subgroup factor: A_k carries the symmetric group S_{k+1}.
struct GroupType {
    Letter letter = Letter::B;
    int rank = 1;

    GroupType() = default;
    GroupType(Letter l, int r);

    // 2n+1 in type B, 2n in types C and D.
    int N() const;

    // Rank contributed inside an ambient group: k+1 for A_k, rank otherwise.
    int weyl_rank() const { return letter == Letter::A ? rank + 1 : rank; }

    friend bool operator==(const GroupType&, const GroupType&) = default;
    friend std::strong_ordering operator<=>(const GroupType&, const GroupType&) = default;
};

// Parity criterion: types B and D need even parts with even multiplicity,
// type C needs odd parts with even multiplicity. Throws size_mismatch when
// |lambda| != N.
bool valid_unipotent(const GroupType& group, const Partition& lambda);

struct UnipotentClass {
    GroupType group;
    Partition lambda;

    UnipotentClass(GroupType g, Partition l);

    friend bool operator==(const UnipotentClass&, const UnipotentClass&) = default;
    friend std::strong_ordering operator<=>(const UnipotentClass&, const UnipotentClass&) = default;
};

// All valid class partitions of N, in descending lexicographic order.
std::vector<UnipotentClass> enumerate_classes(const GroupType& group);

// All partitions of n, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

// Rank ceiling for the exhaustive enumerations; SPRINGERLAB_GUARD raises it.
int enumeration_guard();
// Rank ceiling for the verification harness sweeps; SPRINGERLAB_GUARD raises it.
int harness_guard();

} // namespace springerlab
