#pragma once

#include <map>
#include <variant>
#include <vector>

#include "springerlab/springer_cells.hpp"

namespace springerlab {

// How a product of smaller groups sits inside the ambient group's dual.
// LeviA covers the A_{k-1} x X_{n-k} Levi shapes; the pseudo kinds cover
// the centralizer shapes C_k x C_{n-k} (ambient B), D_k x B_{n-k} (ambient
// C, and ambient D for the cuspidal-datum chains) and D_k x D_{n-k}
// (ambient D).
enum class Embedding { LeviA, SameLetterPseudo, DInBPseudo, DInDPseudo };

struct SubgroupSpec {
    GroupType ambient;
    std::vector<GroupType> factors;
    Embedding embedding = Embedding::SameLetterPseudo;

    SubgroupSpec(GroupType amb, std::vector<GroupType> fs, Embedding e);
};

// One representation per factor: a partition of k for an A_{k-1} factor
// (the symmetric group S_k), a bipartition otherwise.
using FactorRep = std::variant<Partition, Bipartition>;

struct VirtualRep {
    GroupType group;
    std::map<Bipartition, long long> mult;

    long long total_multiplicity() const;
};

// Number of Littlewood-Richardson skew tableaux of shape gamma/alpha and
// content beta. Zero when the sizes do not add up.
long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

// Full decomposition of the induced representation, with multiplicities.
VirtualRep induce(const SubgroupSpec& sub, const std::vector<FactorRep>& reps);

// Truncated induction of a product of special representations: the unique
// component attaining the componentwise join bound. A factors accept the
// sign representation only.
Bipartition j_induce(const SubgroupSpec& sub, const std::vector<FactorRep>& reps);

using FactorClass = std::variant<Partition, UnipotentClass>;

// Induction of classes: truncated induction of the attached Springer
// representations. A factors accept the zero class [1^k] only.
UnipotentClass induced_class(const SubgroupSpec& sub, const std::vector<FactorClass>& cls);

// Maximal Levi and pseudo-Levi shapes of the dual group, every k.
std::vector<SubgroupSpec> enumerate_dual_pseudo_levis(const GroupType& group);

// Index [W(ambient) : W(factors)] as a plain integer.
long long weyl_index(const SubgroupSpec& sub);

} // namespace springerlab
