#include <doctest.h>

#include <set>

#include "springerlab/textio.hpp"
#include "springerlab/wellsupport.hpp"

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

VirtualRep single(const Bipartition& e)
{
    VirtualRep v;
    v.group = e.group;
    v.mult[e] = 1;
    return v;
}

} // namespace

TEST_CASE("support")
{
    Bipartition e = bip(Letter::B, 5, {3}, {2});
    auto s = support(single(e));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == cls(Letter::B, 5, {7, 3, 1}));

    SubgroupSpec d4(GroupType{Letter::B, 4}, {GroupType{Letter::D, 4}},
                    Embedding::DInBPseudo);
    VirtualRep v = induce(d4, {FactorRep(bip(Letter::D, 4, {2, 1}, {1}))});
    auto sv = support(v);
    std::set<UnipotentClass> expect{springer_class(bip(Letter::B, 4, {2, 1}, {1})),
                                    springer_class(bip(Letter::B, 4, {1}, {2, 1}))};
    CHECK(std::set<UnipotentClass>(sv.begin(), sv.end()) == expect);

    // Monotone under adding components.
    VirtualRep w = v;
    w.mult[bip(Letter::B, 4, {4}, {})] = 1;
    CHECK(support(w).size() >= sv.size());
}

TEST_CASE("check_well_supported on singletons")
{
    SupportReport r = check_well_supported(single(bip(Letter::B, 5, {3}, {2})));
    CHECK(r.well_supported);
    CHECK(r.specially);
    REQUIRE(r.o0.has_value());
    CHECK(*r.o0 == cls(Letter::B, 5, {7, 3, 1}));

    // A lone non-carrier component leaves no carrier class.
    SupportReport bad = check_well_supported(single(bip(Letter::B, 2, {1, 1}, {})));
    CHECK_FALSE(bad.well_supported);
}

TEST_CASE("chain representation is well supported")
{
    SubgroupSpec chain(GroupType{Letter::B, 5},
                       {GroupType{Letter::C, 2}, GroupType{Letter::C, 2},
                        GroupType{Letter::B, 1}},
                       Embedding::SameLetterPseudo);
    VirtualRep v = induce(chain, {FactorRep(bip(Letter::C, 2, {1}, {1})),
                                  FactorRep(bip(Letter::C, 2, {1}, {1})),
                                  FactorRep(bip(Letter::B, 1, {1}, {}))});
    SupportReport r = check_well_supported(v);
    CHECK(r.well_supported);
    REQUIRE(r.o0.has_value());
    CHECK(*r.o0 == cls(Letter::B, 5, {7, 3, 1}));
}

TEST_CASE("incomparable carriers are rejected")
{
    // The class poset of B_3 is a chain; B_4 is the smallest type B rank
    // with incomparable classes.
    auto incomparable = [](const GroupType& g) {
        std::vector<std::pair<UnipotentClass, UnipotentClass>> out;
        auto classes = enumerate_classes(g);
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size(); ++j)
                if (!dominates(classes[i].lambda, classes[j].lambda)
                    && !dominates(classes[j].lambda, classes[i].lambda))
                    out.emplace_back(classes[i], classes[j]);
        return out;
    };
    CHECK(incomparable({Letter::B, 3}).empty());
    auto pairs = incomparable({Letter::B, 4});
    REQUIRE(!pairs.empty());

    VirtualRep v;
    v.group = GroupType{Letter::B, 4};
    v.mult[bipartition_of_class(pairs[0].first)] = 1;
    v.mult[bipartition_of_class(pairs[0].second)] = 1;
    SupportReport r = check_well_supported(v);
    CHECK_FALSE(r.well_supported);
}

TEST_CASE("theorem-bs harness")
{
    for (const auto& g : {GroupType{Letter::B, 4}, GroupType{Letter::C, 3},
                          GroupType{Letter::D, 4}}) {
        HarnessReport r = verify_theorem_bs(g);
        CHECK(r.ok());
        CHECK(r.checked > 0);
        CHECK(r.passed > 0);
        if (!r.ok())
            for (const auto& f : r.failures)
                MESSAGE(f);
    }
}

TEST_CASE("prop-ind-supp harness")
{
    for (const auto& g : {GroupType{Letter::B, 3}, GroupType{Letter::C, 3},
                          GroupType{Letter::D, 4}}) {
        HarnessReport r = verify_prop_ind_supp(g);
        CHECK(r.ok());
        CHECK(r.checked > 0);
        if (!r.ok())
            for (const auto& f : r.failures)
                MESSAGE(f);
    }
}

TEST_CASE("special-piece components sit in the top cell")
{
    SubgroupSpec cc(GroupType{Letter::B, 4},
                    {GroupType{Letter::C, 2}, GroupType{Letter::C, 2}},
                    Embedding::SameLetterPseudo);
    for (const auto& e1 : enumerate_bipartitions({Letter::C, 2})) {
        if (!is_special_rep(e1))
            continue;
        for (const auto& e2 : enumerate_bipartitions({Letter::C, 2})) {
            if (!is_special_rep(e2))
                continue;
            VirtualRep v = induce(cc, {FactorRep(e1), FactorRep(e2)});
            SupportReport r = check_well_supported(v);
            REQUIRE(r.well_supported);
            UnipotentClass top = special_closure(*r.o0);
            for (const auto& [e, m] : v.mult)
                if (special_closure(springer_class(e)) == top)
                    CHECK(cell_of(e).special_class == top);
        }
    }
}

TEST_CASE("rank guard")
{
    CHECK_THROWS_AS(verify_theorem_bs({Letter::B, 20}), rank_too_large);
}
