#pragma once

#include <map>
#include <optional>

#include "springerlab/wellsupport.hpp"

namespace springerlab {

// One block of the generalized Springer correspondence for a classical
// ambient group: the cuspidal pair lives on a Levi determined by t (and a
// defect sign in type C), with relative Weyl group W_L^G acting.
struct CuspidalDatum {
    GroupType ambient;
    int t = 0;
    int sign = +1; // type C only; +1 picks d = 1+4t, -1 picks d = 1-4t

    CuspidalDatum(GroupType amb, int t_value, int sign_value = +1);

    // The block's u-symbol defect.
    int defect() const;
    // Weyl group of the cuspidal Levi (t >= 1).
    GroupType levi_weyl() const;
    // Relative Weyl group W_L^G.
    GroupType relative_weyl() const;
    // Image of the cuspidal cell's special representation under truncated
    // induction to the Levi's own Weyl group.
    Bipartition levi_cell_rep() const;

    friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;
};

// All data with nonnegative derived rank for the group, t = 0 first.
std::vector<CuspidalDatum> enumerate_cuspidal_data(const GroupType& group);

struct GenPair {
    USymbol usym;
    UnipotentClass cls;

    friend bool operator==(const GenPair&, const GenPair&) = default;
};

// The block's embedding of ordinary u-symbols: prepends the staircase run
// and shifts the long row. Identity at t = 0.
USymbol gamma_usymbol(const CuspidalDatum& datum, const USymbol& u_relative);

// Same, with the class recovered through the entry multiset.
GenPair gamma(const CuspidalDatum& datum, const USymbol& u_relative);

// The class attached to a cell of the block: joins the Levi-level cell
// representation with the truncated induction of the cell of e1 through
// wls (a subgroup of the relative Weyl group).
UnipotentClass osc_class(const CuspidalDatum& datum, const SubgroupSpec& wls,
                         const std::vector<FactorRep>& e1_cell);

// Multiplicities of the block members in the restriction determined by
// (wls, e1): induce inside the relative Weyl group and push through gamma.
std::map<USymbol, long long> restriction_multiplicities(const CuspidalDatum& datum,
                                                        const SubgroupSpec& wls,
                                                        const std::vector<FactorRep>& e1);

// The dominance maximum among the restricted classes. Throws no_maximum
// when the support is not totally bounded (possible through unordered
// type D factor labels).
UnipotentClass unipotent_support(const CuspidalDatum& datum, const SubgroupSpec& wls,
                                 const std::vector<FactorRep>& e1);

// Members of the restriction supported on the given class.
std::vector<GenPair> ng_set(const CuspidalDatum& datum, const SubgroupSpec& wls,
                            const std::vector<FactorRep>& e1, const UnipotentClass& osc);

struct CharsheafSupport {
    UnipotentClass o_a;   // dominance-maximum class among the restriction
    UnipotentClass o_sc;  // class attached to the cell
    bool equals_osc = false;
    std::map<USymbol, long long> multiplicities;
    std::vector<GenPair> ng; // members supported on o_sc
};

// Runs the whole pipeline and checks the unique-maximum property; throws
// no_maximum if the dominance maximum fails to exist.
CharsheafSupport charsheaf_support(const CuspidalDatum& datum, const SubgroupSpec& wls,
                                   const std::vector<FactorRep>& e1);

} // namespace springerlab
