#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "topnil/rector.hpp"

using namespace topnil;

namespace {

// R = F_2[x] with the standard action, the Sigma_3 / Z/2 catalog shape
UnstablePresentation r_f2x()
{
    RingPtr r = GradedRing::make(Prime::checked(2), {{"x", 1, Parity::Even}});
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(r, std::vector<Element>{});
    u.action = SteenrodAction::empty(r);
    u.action.sq[0][1] = Element::parse(r, "x^2");
    return u;
}

UnstablePresentation q8_presentation()
{
    RingPtr r = GradedRing::make(Prime::checked(2), {{"x", 1, Parity::Even},
                                                     {"y", 1, Parity::Even},
                                                     {"e", 4, Parity::Even}});
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(
        r, std::vector<Element>{Element::parse(r, "x^2 + x*y + y^2"),
                                Element::parse(r, "x^2*y + x*y^2")});
    u.action = SteenrodAction::empty(r);
    u.action.sq[0][1] = Element::parse(r, "x^2");
    u.action.sq[1][1] = Element::parse(r, "y^2");
    u.action.sq[2][4] = Element::parse(r, "e^2");
    return u;
}

UnstablePresentation d8_presentation()
{
    RingPtr r = GradedRing::make(Prime::checked(2), {{"x", 1, Parity::Even},
                                                     {"y", 1, Parity::Even},
                                                     {"w", 2, Parity::Even}});
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(
        r, std::vector<Element>{Element::parse(r, "x*y")});
    u.action = SteenrodAction::empty(r);
    u.action.sq[0][1] = Element::parse(r, "x^2");
    u.action.sq[1][1] = Element::parse(r, "y^2");
    u.action.sq[2][1] = Element::parse(r, "w*x + w*y");
    u.action.sq[2][2] = Element::parse(r, "w^2");
    return u;
}

RectorPair make_pair(const std::string& name, Prime p, int rank,
                     std::vector<std::string> image_exprs, bool central)
{
    UnstablePresentation he = standard_he(p, rank);
    RectorPair pr;
    pr.name = name;
    pr.rank = rank;
    pr.central_flag = central;
    for (const auto& s : image_exprs)
        pr.images.push_back(Element::parse(he.ring(), s));
    return pr;
}

std::vector<RectorPair> d8_pairs()
{
    Prime two = Prime::checked(2);
    return {
        make_pair("triv", two, 0, {"", "", ""}, true),
        make_pair("z", two, 1, {"", "", "t1^2"}, true),
        make_pair("r1", two, 1, {"", "t1", ""}, false),
        make_pair("r2", two, 1, {"t1", "", ""}, false),
        make_pair("v1", two, 2, {"", "t1", "t2^2 + t1*t2"}, false),
        make_pair("v2", two, 2, {"t1", "", "t2^2 + t1*t2"}, false),
    };
}

}  // namespace

TEST_CASE("kernel of a pair")
{
    UnstablePresentation r = r_f2x();
    Prime two = Prime::checked(2);

    SUBCASE("finite catalog restriction has trivial kernel")
    {
        RectorPair pr = make_pair("c2", two, 1, {"t1"}, true);
        auto ker = kernel_of_pair(r, pr);
        CHECK(ker.size() == 1);  // only the zero element
    }
    SUBCASE("projection-dual pair has a rank-1 kernel")
    {
        RectorPair pr = make_pair("proj", two, 2, {"t1"}, false);
        auto ker = kernel_of_pair(r, pr);
        CHECK(ker.size() == 2);
        bool has = false;
        for (const auto& e : ker)
            if (e == std::vector<int>{0, 1})
                has = true;
        CHECK(has);
    }
    SUBCASE("the zero augmentation has full kernel")
    {
        RectorPair pr = make_pair("zero", two, 1, {""}, false);
        CHECK(kernel_of_pair(r, pr).size() == 2);
    }
}

TEST_CASE("rec functor")
{
    UnstablePresentation r = r_f2x();
    Prime two = Prime::checked(2);

    SUBCASE("identity on trivial-kernel pairs")
    {
        RectorPair pr = make_pair("c2", two, 1, {"t1"}, true);
        RectorPair q = rec(r, pr);
        CHECK(q.rank == 1);
        CHECK(q.images[0] == pr.images[0]);
    }
    SUBCASE("projection-dual collapses to rank 1")
    {
        RectorPair pr = make_pair("proj", two, 2, {"t1"}, false);
        RectorPair q = rec(r, pr);
        CHECK(q.rank == 1);
        CHECK(is_finite_pair(r, q));
    }
    SUBCASE("zero augmentation collapses to rank 0")
    {
        RectorPair pr = make_pair("zero", two, 1, {""}, false);
        RectorPair q = rec(r, pr);
        CHECK(q.rank == 0);
    }
}

TEST_CASE("finiteness, two routes cross-checked")
{
    Prime two = Prime::checked(2);
    SUBCASE("identity pair on H_E^*")
    {
        UnstablePresentation r = r_f2x();
        CHECK(is_finite_pair(r, make_pair("id", two, 1, {"t1"}, true)));
    }
    SUBCASE("integral extension F_2[x^2] in F_2[x]")
    {
        RingPtr ring = GradedRing::make(two, {{"w", 2, Parity::Even}});
        UnstablePresentation r;
        r.algebra = std::make_shared<PresentedAlgebra>(ring, std::vector<Element>{});
        r.action = SteenrodAction::empty(ring);
        r.action.sq[0][2] = Element::parse(ring, "w^2");
        CHECK(is_finite_pair(r, make_pair("sq", two, 1, {"t1^2"}, true)));
    }
    SUBCASE("projection-dual is not finite")
    {
        UnstablePresentation r = r_f2x();
        CHECK_FALSE(is_finite_pair(r, make_pair("proj", two, 2, {"t1"}, false)));
    }
}

TEST_CASE("sum pair with a central subgroup")
{
    // C = E (rank 1) inside R = F_2[x]: the kernel of f boxplus g is the
    // antidiagonal copy of C, and rec recovers (E, f)
    UnstablePresentation r = r_f2x();
    Prime two = Prime::checked(2);
    RectorPair e = make_pair("c2", two, 1, {"t1"}, true);
    RectorPair sum = sum_pair_with_central_subgroup(r, e, Matrix{{1}});
    CHECK(sum.rank == 2);
    auto ker = kernel_of_pair(r, sum);
    REQUIRE(ker.size() == 2);
    bool antidiag = false;
    for (const auto& k : ker)
        if (k == std::vector<int>{1, 1})
            antidiag = true;
    CHECK(antidiag);
    RectorPair q = rec(r, sum);
    CHECK(q.rank == 1);
    CHECK(pairs_isomorphic(r, q, e));
}

TEST_CASE("poset structure")
{
    UnstablePresentation r = r_f2x();
    Prime two = Prime::checked(2);
    RectorPair triv = make_pair("triv", two, 0, {""}, true);
    RectorPair c2 = make_pair("c2", two, 1, {"t1"}, true);
    CHECK(poset_leq(r, c2, c2));
    CHECK(poset_leq(r, triv, c2));
    CHECK_FALSE(poset_leq(r, c2, triv));

    // two rank-1 pairs with different images over F_2[x,y]
    RingPtr ring = GradedRing::make(two, {{"x", 1, Parity::Even}, {"y", 1, Parity::Even}});
    UnstablePresentation r2;
    r2.algebra = std::make_shared<PresentedAlgebra>(ring, std::vector<Element>{});
    r2.action = SteenrodAction::empty(ring);
    r2.action.sq[0][1] = Element::parse(ring, "x^2");
    r2.action.sq[1][1] = Element::parse(ring, "y^2");
    RectorPair p1 = make_pair("p1", two, 1, {"t1", ""}, false);
    RectorPair p2 = make_pair("p2", two, 1, {"", "t1"}, false);
    CHECK_FALSE(poset_leq(r2, p1, p2));
    CHECK_FALSE(poset_leq(r2, p2, p1));
}

TEST_CASE("maximal central element")
{
    UnstablePresentation r = r_f2x();
    Prime two = Prime::checked(2);
    std::vector<RectorPair> pairs{make_pair("triv", two, 0, {""}, true),
                                  make_pair("c2", two, 1, {"t1"}, true)};
    CentralPoset cp = maximal_central(r, pairs, OracleKind::GroupBacked);
    CHECK(cp.rank == 1);
    CHECK(pairs[cp.maximum].name == "c2");

    // circ monotonicity: E <= E o C and C <= E o C
    size_t join = circ(r, pairs, 0, 1);
    CHECK(poset_leq(r, pairs[0], pairs[join]));
    CHECK(poset_leq(r, pairs[1], pairs[join]));
}

TEST_CASE("defect-zero category comparison")
{
    Prime two = Prime::checked(2);
    SUBCASE("Q8 catalog pairs: true")
    {
        UnstablePresentation q8 = q8_presentation();
        std::vector<RectorPair> pairs{make_pair("triv", two, 0, {"", "", ""}, true),
                                      make_pair("z", two, 1, {"", "", "t1^4"}, true)};
        CentralPoset cp = maximal_central(q8, pairs, OracleKind::GroupBacked);
        CHECK(cp.rank == 1);
        CHECK(defect_zero_category_check(q8, pairs, cp.maximum));
    }
    SUBCASE("D8 catalog pairs: false")
    {
        UnstablePresentation d8 = d8_presentation();
        std::vector<RectorPair> pairs = d8_pairs();
        CentralPoset cp = maximal_central(d8, pairs, OracleKind::GroupBacked);
        CHECK(cp.rank == 1);
        CHECK(pairs[cp.maximum].name == "z");
        CHECK_FALSE(defect_zero_category_check(d8, pairs, cp.maximum));
    }
    SUBCASE("H_E^* with the identity center: true")
    {
        RingPtr ring =
            GradedRing::make(two, {{"u", 1, Parity::Even}, {"v", 1, Parity::Even}});
        UnstablePresentation he;
        he.algebra = std::make_shared<PresentedAlgebra>(ring, std::vector<Element>{});
        he.action = SteenrodAction::empty(ring);
        he.action.sq[0][1] = Element::parse(ring, "u^2");
        he.action.sq[1][1] = Element::parse(ring, "v^2");
        std::vector<RectorPair> pairs{
            make_pair("triv", two, 0, {"", ""}, true),
            make_pair("l1", two, 1, {"t1", ""}, true),
            make_pair("l2", two, 1, {"", "t1"}, true),
            make_pair("l3", two, 1, {"t1", "t1"}, true),
            make_pair("full", two, 2, {"t1", "t2"}, true),
        };
        CentralPoset cp = maximal_central(he, pairs, OracleKind::GroupBacked);
        CHECK(cp.rank == 2);
        CHECK(defect_zero_category_check(he, pairs, cp.maximum));
    }
}

TEST_CASE("D8 poset shape: reflections sit below exactly one Klein pair")
{
    UnstablePresentation d8 = d8_presentation();
    std::vector<RectorPair> pairs = d8_pairs();
    // r1 = (0, t, 0) lies below v1 = (0, t1, t2^2 + t1 t2) but not below v2
    CHECK(poset_leq(d8, pairs[2], pairs[4]));
    CHECK_FALSE(poset_leq(d8, pairs[2], pairs[5]));
    CHECK(poset_leq(d8, pairs[3], pairs[5]));
    CHECK_FALSE(poset_leq(d8, pairs[3], pairs[4]));
    // the center maps into both Kleins, uniquely
    CHECK(poset_morphisms(d8, pairs[1], pairs[4]).size() == 1);
    CHECK(poset_morphisms(d8, pairs[1], pairs[5]).size() == 1);
    // Klein automorphisms: 2 = N(V)/C(V)
    CHECK(poset_morphisms(d8, pairs[4], pairs[4]).size() == 2);
}
