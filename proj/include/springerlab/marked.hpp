#pragma once

#include <vector>

#include "springerlab/partitions.hpp"

namespace springerlab {

// A class partition together with the increasing list of its markable part
// values. The markability rule is supplied by the caller.
struct MarkableContext {
    GroupType group;
    Partition lambda;
    std::vector<int> markable; // strictly increasing part values of lambda

    MarkableContext(GroupType g, Partition l, std::vector<int> m);
};

// A marking: a strictly increasing sublist of the markable values.
using Marking = std::vector<int>;

struct MarkedPartition {
    Partition lambda;
    Marking nu;
};

// Checks membership and the evenness convention (type C markings of odd
// length absorb a leading 0; other types require even length).
void validate_marking(const MarkableContext& ctx, const Marking& nu);

// a <= b in the block order: every consecutive block (c, d) of a nests
// inside some block of b.
bool marking_leq(const MarkableContext& ctx, const Marking& a, const Marking& b);

// The minimal nonempty markings: consecutive pairs, plus the singleton of
// the smallest markable value in type C.
std::vector<MarkedPartition> superminimal_markings(const MarkableContext& ctx);

// The superminimal markings as independent order-two generators.
struct CoxeterGenerators {
    std::vector<Marking> generators;
    int rank = 0;
};

CoxeterGenerators coxeter_generators(const MarkableContext& ctx);

// Irreducible representations, subset classes and conjugacy classes of a
// product of symmetric groups all carry the same partition-tuple labels.
struct IrrClassEntry {
    std::vector<Partition> subset_classes; // cycle type cut out by the subset
    std::vector<Partition> irreducible;    // sign tensor truncated induction of sign
    std::vector<Partition> conjugacy;      // class of the subset product
};

// h_spec lists the symmetric group degrees. Bijectivity of the three
// labellings is checked; counts agree with the product of partition counts.
std::vector<IrrClassEntry> irr_class_bijection(const std::vector<int>& h_spec);

} // namespace springerlab
