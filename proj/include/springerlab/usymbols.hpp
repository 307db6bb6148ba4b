#pragma once

#include <vector>

#include "springerlab/partitions.hpp"

namespace springerlab {

// Two-row array attached to an irreducible Weyl-group representation.
// Rows are strictly increasing; subtracting the staircase (i-1) from a row
// recovers the ascending parts of the corresponding bipartition half.
// Shape is (m+1, m) in types B/C and (m, m) in type D.
struct Symbol {
    GroupType group;
    std::vector<int> xi;
    std::vector<int> eta;

    int length() const { return static_cast<int>(eta.size()); }

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

// Two-row array attached to a pair (class, local system). Ordinary pairs
// (those in the image of the plain Springer correspondence) have defect 1
// in types B/C, defect 0 in type D; the generalized correspondence blocks
// carry other defects. Rows of a type D u-symbol are unordered.
struct USymbol {
    GroupType group;
    std::vector<int> top;
    std::vector<int> bottom;

    int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }

    friend bool operator==(const USymbol&, const USymbol&) = default;
    friend std::strong_ordering operator<=>(const USymbol&, const USymbol&) = default;
};

int ordinary_defect(Letter letter);

// The row-shift recipe: partition to u-symbol via the parity split of
// lambda_i + (i-1). Throws malformed_recipe if the split does not have the
// expected shape or a row comes out non-strict.
USymbol usymbol_of_class(const UnipotentClass& cls);

// Inverts the recipe. Any u-symbol whose entry multiset matches a class
// u-symbol is accepted: the multiset is rearranged into its distinguished
// representative first, and non-ordinary defects are resolved through the
// alternating assignment. Throws no_ordinary_representative when that
// fails.
UnipotentClass class_of_usymbol(const USymbol& u);

bool is_distinguished(const Symbol& s);
bool is_distinguished(const USymbol& u);

// All entries of both rows, sorted ascending.
std::vector<int> entry_multiset(const Symbol& s);
std::vector<int> entry_multiset(const USymbol& u);

// Same entries with the same multiplicities; defects may differ.
bool similar(const USymbol& a, const USymbol& b);

// Equality up to the type D row swap.
bool equivalent(const USymbol& a, const USymbol& b);

// The representative of the same equivalence class with the short row
// lengthened to m_target. Idempotent at equal length.
USymbol normalize_length(const USymbol& u, int m_target);
Symbol normalize_length(const Symbol& s, int m_target);

// Entry-multiset dominance (as descending partitions) between u-symbols of
// equal shape: a <= b. Throws shape_mismatch otherwise.
bool usymbol_leq(const USymbol& a, const USymbol& b);

} // namespace springerlab
