#include <doctest.h>

#include "springerlab/gensupport.hpp"
#include "springerlab/textio.hpp"

using namespace springerlab;

namespace {

Partition P(std::vector<int> v)
{
    return Partition(std::move(v));
}

Bipartition bip(Letter l, int rank, std::vector<int> a, std::vector<int> b)
{
    return Bipartition(GroupType(l, rank), P(std::move(a)), P(std::move(b)));
}

UnipotentClass cls(Letter l, int rank, std::vector<int> parts)
{
    return UnipotentClass(GroupType(l, rank), P(std::move(parts)));
}

USymbol u(Letter l, int rank, std::vector<int> top, std::vector<int> bottom)
{
    USymbol out;
    out.group = GroupType(l, rank);
    out.top = std::move(top);
    out.bottom = std::move(bottom);
    return out;
}

SubgroupSpec full_group(const GroupType& g)
{
    return SubgroupSpec(g, {g},
                        g.letter == Letter::D ? Embedding::DInDPseudo
                                              : Embedding::SameLetterPseudo);
}

FactorRep trivial_rep(const GroupType& g)
{
    if (g.letter == Letter::A)
        return FactorRep(P({g.weyl_rank()}));
    return FactorRep(Bipartition(g, P({g.rank}), P({})));
}

} // namespace

TEST_CASE("cuspidal datum table")
{
    CuspidalDatum b5(GroupType{Letter::B, 5}, 1);
    CHECK(b5.relative_weyl() == GroupType{Letter::B, 1});
    CHECK(b5.defect() == 3);
    CHECK(b5.levi_weyl() == GroupType{Letter::B, 4});
    CHECK(b5.levi_cell_rep() == bip(Letter::B, 4, {2}, {2}));

    CuspidalDatum c10(GroupType{Letter::C, 10}, 1, +1);
    CHECK(c10.relative_weyl() == GroupType{Letter::C, 0});
    CHECK(c10.defect() == 5);
    CHECK(c10.levi_weyl() == GroupType{Letter::C, 10});
    CHECK(c10.levi_cell_rep() == bip(Letter::C, 10, {4, 2}, {3, 1}));

    CuspidalDatum c7(GroupType{Letter::C, 7}, 1, -1);
    CHECK(c7.relative_weyl() == GroupType{Letter::C, 1});
    CHECK(c7.defect() == -3);
    CHECK(c7.levi_weyl() == GroupType{Letter::C, 6});
    CHECK(c7.levi_cell_rep() == bip(Letter::C, 6, {3, 1}, {2}));

    CuspidalDatum d8(GroupType{Letter::D, 8}, 1);
    CHECK(d8.relative_weyl() == GroupType{Letter::B, 0});
    CHECK(d8.defect() == 4);
    CHECK(d8.levi_weyl() == GroupType{Letter::D, 8});
    CHECK(d8.levi_cell_rep() == bip(Letter::D, 8, {4, 2}, {2}));

    CHECK_THROWS_AS(CuspidalDatum(GroupType{Letter::B, 3}, 1), domain_error);

    auto data = enumerate_cuspidal_data({Letter::B, 5});
    CHECK(data.size() == 2);
    CHECK(data[0].t == 0);
    CHECK(data[1].t == 1);
}

TEST_CASE("gamma on the pinned witnesses")
{
    CuspidalDatum b5(GroupType{Letter::B, 5}, 1);
    USymbol triv = usymbol_of_bipartition(bip(Letter::B, 1, {1}, {}));
    CHECK(triv == u(Letter::B, 1, {1}, {}));
    GenPair g = gamma(b5, triv);
    CHECK(g.usym == u(Letter::B, 5, {0, 2, 5}, {}));
    CHECK(g.usym.defect() == 3);
    CHECK(g.cls == cls(Letter::B, 5, {7, 3, 1}));

    // t = 0 is the identity embedding.
    CuspidalDatum t0(GroupType{Letter::B, 5}, 0);
    USymbol w = usymbol_of_class(cls(Letter::B, 5, {7, 3, 1}));
    CHECK(gamma(t0, w).usym == w);

    // Negative-defect branch in type C.
    CuspidalDatum c7(GroupType{Letter::C, 7}, 1, -1);
    GenPair gt = gamma(c7, usymbol_of_bipartition(bip(Letter::C, 1, {1}, {})));
    CHECK(gt.usym == u(Letter::C, 7, {}, {1, 3, 6}));
    CHECK(gt.cls == cls(Letter::C, 7, {8, 4, 2}));
    GenPair gs = gamma(c7, usymbol_of_bipartition(bip(Letter::C, 1, {}, {1})));
    CHECK(gs.usym == u(Letter::C, 7, {1}, {1, 3, 5, 7}));
    CHECK(gs.cls == cls(Letter::C, 7, {6, 4, 2, 1, 1}));

    CHECK_THROWS_AS(gamma(b5, usymbol_of_bipartition(bip(Letter::B, 2, {2}, {}))),
                    group_mismatch);
}

TEST_CASE("osc_class")
{
    CuspidalDatum b5(GroupType{Letter::B, 5}, 1);
    GroupType b1{Letter::B, 1};
    CHECK(osc_class(b5, full_group(b1), {trivial_rep(b1)}) == cls(Letter::B, 5, {7, 3, 1}));

    CuspidalDatum c7(GroupType{Letter::C, 7}, 1, -1);
    GroupType c1{Letter::C, 1};
    CHECK(osc_class(c7, full_group(c1), {trivial_rep(c1)}) == cls(Letter::C, 7, {8, 4, 2}));
    CHECK(osc_class(c7, full_group(c1), {FactorRep(bip(Letter::C, 1, {}, {1}))})
          == cls(Letter::C, 7, {6, 6, 2}));

    // s central: the cell of the trivial representation induces the
    // regular class.
    CuspidalDatum t0(GroupType{Letter::B, 3}, 0);
    GroupType b3{Letter::B, 3};
    CHECK(osc_class(t0, full_group(b3), {trivial_rep(b3)}) == cls(Letter::B, 3, {7}));
}

TEST_CASE("restriction multiplicities and the support pipeline")
{
    CuspidalDatum b5(GroupType{Letter::B, 5}, 1);
    GroupType b1{Letter::B, 1};
    auto mults = restriction_multiplicities(b5, full_group(b1), {trivial_rep(b1)});
    REQUIRE(mults.size() == 1);
    CHECK(mults.begin()->second == 1);
    CHECK(class_of_usymbol(mults.begin()->first) == cls(Letter::B, 5, {7, 3, 1}));

    CharsheafSupport cs = charsheaf_support(b5, full_group(b1), {trivial_rep(b1)});
    CHECK(cs.o_a == cls(Letter::B, 5, {7, 3, 1}));
    CHECK(cs.o_sc == cls(Letter::B, 5, {7, 3, 1}));
    CHECK(cs.equals_osc);
    CHECK(!cs.ng.empty());

    CHECK(unipotent_support(b5, full_group(b1), {trivial_rep(b1)}) == cs.o_a);
    CHECK(ng_set(b5, full_group(b1), {trivial_rep(b1)}, cs.o_sc).size() == cs.ng.size());
    CHECK(ng_set(b5, full_group(b1), {trivial_rep(b1)},
                 cls(Letter::B, 5, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}))
              .empty());

    // t = 0 with an A Levi: the support is the balanced class.
    CuspidalDatum t0(GroupType{Letter::B, 3}, 0);
    SubgroupSpec a2(GroupType{Letter::B, 3}, {GroupType{Letter::A, 2}}, Embedding::LeviA);
    CharsheafSupport sign_cs = charsheaf_support(t0, a2, {FactorRep(P({1, 1, 1}))});
    CHECK(sign_cs.o_a == springer_class(bip(Letter::B, 3, {1, 1}, {1})));
    CHECK(sign_cs.equals_osc);
}

TEST_CASE("an empty restriction onto the cell class exists in type C")
{
    // The sign representation of C_1 inside the negative-defect block of
    // C_7: its restriction misses the cell class entirely.
    CuspidalDatum c7(GroupType{Letter::C, 7}, 1, -1);
    GroupType c1{Letter::C, 1};
    CharsheafSupport cs = charsheaf_support(c7, full_group(c1),
                                            {FactorRep(bip(Letter::C, 1, {}, {1}))});
    CHECK(cs.o_a == cls(Letter::C, 7, {6, 4, 2, 1, 1}));
    CHECK(cs.o_sc == cls(Letter::C, 7, {6, 6, 2}));
    CHECK_FALSE(cs.equals_osc);
    CHECK(cs.ng.empty());
    CHECK(dominates(cs.o_sc.lambda, cs.o_a.lambda));
}

TEST_CASE("gamma image similarity with the cell class")
{
    // gamma(trivial) lands in the similarity class of the u-symbol of the
    // cell class, for every datum of small rank.
    for (const auto& g : {GroupType{Letter::B, 5}, GroupType{Letter::B, 6},
                          GroupType{Letter::C, 6}, GroupType{Letter::C, 7},
                          GroupType{Letter::C, 10}, GroupType{Letter::D, 8},
                          GroupType{Letter::D, 9}}) {
        for (const auto& datum : enumerate_cuspidal_data(g)) {
            if (datum.t == 0)
                continue;
            GroupType rel = datum.relative_weyl();
            USymbol image = gamma_usymbol(datum, usymbol_of_bipartition(
                                                     Bipartition(rel, P({rel.rank}), P({}))));
            UnipotentClass osc = osc_class(datum, full_group(rel), {trivial_rep(rel)});
            USymbol osc_u = usymbol_of_class(osc);
            auto count = [](const USymbol& s) {
                return static_cast<int>(s.top.size() + s.bottom.size());
            };
            auto pad = [](USymbol& s) {
                s = normalize_length(
                    s, static_cast<int>(std::min(s.top.size(), s.bottom.size())) + 1);
            };
            while (count(osc_u) < count(image))
                pad(osc_u);
            while (count(image) < count(osc_u))
                pad(image);
            CHECK(similar(image, osc_u));
            CHECK(class_of_usymbol(image) == osc);
        }
    }
}

TEST_CASE("restriction multiplicities are conserved")
{
    // The block embedding is injective, so the total multiplicity matches
    // the plain induction inside the relative Weyl group.
    CuspidalDatum c8(GroupType{Letter::C, 8}, 1, -1);
    GroupType rel = c8.relative_weyl();
    REQUIRE(rel == GroupType{Letter::C, 2});
    SubgroupSpec wls(rel, {{Letter::C, 1}, {Letter::C, 1}}, Embedding::SameLetterPseudo);
    std::vector<FactorRep> e1{FactorRep(bip(Letter::C, 1, {1}, {})),
                              FactorRep(bip(Letter::C, 1, {}, {1}))};
    auto mults = restriction_multiplicities(c8, wls, e1);
    VirtualRep v = induce(wls, e1);
    CHECK(mults.size() == v.mult.size());
    long long total = 0;
    for (const auto& [u, m] : mults)
        total += m;
    CHECK(total == v.total_multiplicity());
}

TEST_CASE("restrictions through unordered D labels can lack a support")
{
    // Both orientations of the D factor contribute, and the resulting
    // classes [4,2,1,1] and [3,3,2] are incomparable.
    CuspidalDatum datum(GroupType{Letter::C, 4}, 0);
    SubgroupSpec wls(GroupType{Letter::C, 4},
                     {GroupType{Letter::D, 2}, GroupType{Letter::B, 2}},
                     Embedding::DInBPseudo);
    std::vector<FactorRep> e1{FactorRep(bip(Letter::D, 2, {1, 1}, {})),
                              FactorRep(bip(Letter::B, 2, {}, {2}))};
    auto mults = restriction_multiplicities(datum, wls, e1);
    CHECK(mults.size() == 3);
    CHECK_THROWS_AS(charsheaf_support(datum, wls, e1), no_maximum);
}

TEST_CASE("gamma commutes with length normalization")
{
    for (const auto& g : {GroupType{Letter::B, 6}, GroupType{Letter::C, 8},
                          GroupType{Letter::D, 9}}) {
        for (const auto& datum : enumerate_cuspidal_data(g)) {
            if (datum.t == 0)
                continue;
            GroupType rel = datum.relative_weyl();
            for (const auto& e : enumerate_bipartitions(rel)) {
                USymbol base = usymbol_of_bipartition(e);
                int m = static_cast<int>(std::min(base.top.size(), base.bottom.size()));
                USymbol g0 = gamma_usymbol(datum, base);
                USymbol g2 = gamma_usymbol(datum, normalize_length(base, m + 2));
                int gm = static_cast<int>(std::min(g0.top.size(), g0.bottom.size()));
                CHECK(g2 == normalize_length(g0, gm + 2));
                CHECK(class_of_usymbol(g2) == class_of_usymbol(g0));
            }
        }
    }
}
