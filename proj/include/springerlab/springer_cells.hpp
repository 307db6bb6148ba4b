#pragma once

#include <vector>

#include "springerlab/usymbols.hpp"

namespace springerlab {

// Pair of partitions labelling an irreducible representation of a
// classical Weyl group; |alpha| + |beta| equals the rank. Type D pairs are
// unordered: they are stored with the lexicographically larger half first,
// and alpha == beta marks the unsplit label of a degenerate pair.
struct Bipartition {
    GroupType group;
    Partition alpha;
    Partition beta;

    Bipartition(GroupType g, Partition a, Partition b);

    bool split() const { return group.letter == Letter::D && alpha == beta; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    friend std::strong_ordering operator<=>(const Bipartition&, const Bipartition&) = default;
};

std::vector<Bipartition> enumerate_bipartitions(const GroupType& group);

int minimal_symbol_length(const Bipartition& e);

// Rows alpha_i + (i-1) / beta_i + (i-1) over the ascending zero-padded
// halves. Throws pad_too_small when m cannot hold the parts.
Symbol symbol_of_bipartition(const Bipartition& e, int m);
Symbol symbol_of_bipartition(const Bipartition& e);

// Rows alpha_i + 2(i-1) / beta_i + 2(i-1), with the type C bottom row
// offset by one more.
USymbol usymbol_of_bipartition(const Bipartition& e, int m);
USymbol usymbol_of_bipartition(const Bipartition& e);

// The representation attached to (O, 1): decodes the class's u-symbol.
Bipartition bipartition_of_class(const UnipotentClass& cls);

// The Irr(W)-symbol of the Springer representation of the class. For types
// B and D this equals the raw recipe output; in type C the recipe lists are
// not a well-formed symbol and the decoded representation is used instead.
Symbol symbol_of_class(const UnipotentClass& cls);

// nu: the class underlying the image of the representation.
UnipotentClass springer_class(const Bipartition& e);

bool is_special_rep(const Bipartition& e);
bool is_special_class(const UnipotentClass& cls);

// A two-sided cell, keyed by the symbol similarity class of its members
// and ordered through its special class.
struct CellHandle {
    GroupType group;
    UnipotentClass special_class;
    std::vector<int> multiset; // entries of the fully reduced symbol

    friend bool operator==(const CellHandle&, const CellHandle&) = default;
    friend std::strong_ordering operator<=>(const CellHandle&, const CellHandle&) = default;
};

CellHandle cell_of(const Bipartition& e);

// The special representation of the cell: the distinguished member of the
// symbol similarity class.
Bipartition special_member(const Bipartition& e);

bool cell_leq(const CellHandle& a, const CellHandle& b);

// Smallest special class whose closure contains cls; the minimum is
// asserted unique.
UnipotentClass special_closure(const UnipotentClass& cls);

std::vector<UnipotentClass> special_classes(const GroupType& group);

} // namespace springerlab
