#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "topnil/groups.hpp"

using namespace topnil;

namespace {

std::vector<int> ranks_of(const std::vector<ElAbClass>& classes)
{
    std::vector<int> r;
    for (const auto& c : classes)
        r.push_back(c.rank);
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

TEST_CASE("group constructors")
{
    CHECK(PermGroup::cyclic(4).order() == 4);
    CHECK(PermGroup::dihedral(4).order() == 8);
    CHECK(PermGroup::quaternion8().order() == 8);
    CHECK(PermGroup::symmetric(3).order() == 6);
    CHECK(PermGroup::elementary_abelian(2, 3).order() == 8);
    CHECK(PermGroup::semidihedral16().order() == 16);
    CHECK(PermGroup::by_name("D8xD8").order() == 64);

    // Q8 sanity: a unique involution
    PermGroup q8 = PermGroup::quaternion8();
    int involutions = 0;
    for (const auto& e : q8.elements())
        if (!e.is_identity() && element_order(e) == 2)
            ++involutions;
    CHECK(involutions == 1);

    // SD16 sanity: s r s^{-1} = r^3
    PermGroup sd = PermGroup::semidihedral16();
    CHECK(is_p_group(sd, 2));
}

TEST_CASE("elementary abelian classes match the subgroup lattices")
{
    SUBCASE("D8: ranks {0,1,1,1,2,2}")
    {
        auto classes = elementary_abelian_classes(PermGroup::dihedral(4), Prime::checked(2));
        CHECK(ranks_of(classes) == std::vector<int>{0, 1, 1, 1, 2, 2});
        // class sizes: center is its own class; reflections split 2 + 2
        std::vector<int> rank1_sizes;
        for (const auto& c : classes)
            if (c.rank == 1)
                rank1_sizes.push_back(c.class_size);
        std::sort(rank1_sizes.begin(), rank1_sizes.end());
        CHECK(rank1_sizes == std::vector<int>{1, 2, 2});
    }
    SUBCASE("Q8: only the trivial class and the central C2")
    {
        auto classes = elementary_abelian_classes(PermGroup::quaternion8(), Prime::checked(2));
        CHECK(ranks_of(classes) == std::vector<int>{0, 1});
    }
    SUBCASE("Sigma_3 at p = 2: one class of C2 with three conjugates")
    {
        auto classes = elementary_abelian_classes(PermGroup::symmetric(3), Prime::checked(2));
        REQUIRE(ranks_of(classes) == std::vector<int>{0, 1});
        CHECK(classes[1].class_size == 3);
    }
}

TEST_CASE("Quillen category structure")
{
    Prime two = Prime::checked(2);
    QuillenCat cat = quillen_category(PermGroup::dihedral(4), two);
    // locate the center class (rank 1, class size 1) and a Klein class
    size_t center = 0, klein = 0, reflection = 0;
    bool found_center = false, found_klein = false, found_refl = false;
    for (size_t i = 0; i < cat.objects.size(); ++i) {
        if (cat.objects[i].rank == 1 && cat.objects[i].class_size == 1 && !found_center) {
            center = i;
            found_center = true;
        }
        if (cat.objects[i].rank == 1 && cat.objects[i].class_size == 2 && !found_refl) {
            reflection = i;
            found_refl = true;
        }
        if (cat.objects[i].rank == 2 && !found_klein) {
            klein = i;
            found_klein = true;
        }
    }
    REQUIRE(found_center);
    REQUIRE(found_klein);
    REQUIRE(found_refl);

    CHECK(cat.hom_count(center, klein) == 1);
    CHECK(cat.hom_count(klein, klein) == 2);  // N(V)/C(V) = C2
    CHECK(cat.hom_count(klein, center) == 0);

    // identity morphism always present
    for (size_t i = 0; i < cat.objects.size(); ++i)
        CHECK(cat.hom_count(i, i) >= 1);

    // the reflection class maps into exactly one Klein class
    size_t klein_targets = 0;
    for (size_t j = 0; j < cat.objects.size(); ++j)
        if (cat.objects[j].rank == 2 && cat.leq(reflection, j))
            ++klein_targets;
    CHECK(klein_targets == 1);
}

TEST_CASE("O_{p'}")
{
    CHECK(o_p_prime(PermGroup::symmetric(3), Prime::checked(2)).size() == 3);
    CHECK(o_p_prime(PermGroup::symmetric(3), Prime::checked(3)).size() == 1);
    CHECK(o_p_prime(PermGroup::quaternion8(), Prime::checked(2)).size() == 1);
    CHECK(o_p_prime(PermGroup::cyclic(9), Prime::checked(3)).size() == 1);
}

TEST_CASE("cohomological center and p-central defect")
{
    Prime two = Prime::checked(2);

    SUBCASE("Sigma_3 at p = 2: rank-1 center")
    {
        PermGroup s3 = PermGroup::symmetric(3);
        auto classes = elementary_abelian_classes(s3, two);
        size_t c = cohomological_center_class(s3, two);
        CHECK(classes[c].rank == 1);
        CHECK(p_central_defect(s3, two) == 0);
    }
    SUBCASE("Q8: center Z(Q8), defect 0")
    {
        PermGroup q8 = PermGroup::quaternion8();
        auto classes = elementary_abelian_classes(q8, two);
        size_t c = cohomological_center_class(q8, two);
        CHECK(classes[c].rank == 1);
        CHECK(p_central_defect(q8, two) == 0);
    }
    SUBCASE("D8: central C2, defect 1")
    {
        PermGroup d8 = PermGroup::dihedral(4);
        auto classes = elementary_abelian_classes(d8, two);
        size_t c = cohomological_center_class(d8, two);
        CHECK(classes[c].rank == 1);
        CHECK(classes[c].class_size == 1);
        // representative lies in the group-theoretic center
        ElementList z = center_elements(d8);
        for (const auto& e : classes[c].rep)
            CHECK(std::binary_search(z.begin(), z.end(), e));
        CHECK(p_central_defect(d8, two) == 1);
    }
    SUBCASE("defect is additive on D8 x D8")
    {
        CHECK(p_central_defect(PermGroup::by_name("D8xD8"), two) == 2);
    }
}

TEST_CASE("centralizers")
{
    Prime two = Prime::checked(2);
    PermGroup s3 = PermGroup::symmetric(3);
    auto s3_classes = elementary_abelian_classes(s3, two);
    REQUIRE(s3_classes.size() == 2);
    CHECK(centralizer(s3, s3_classes[1].rep).size() == 2);  // C_{S3}(C2) = C2

    PermGroup d8 = PermGroup::dihedral(4);
    auto d8_classes = elementary_abelian_classes(d8, two);
    for (const auto& c : d8_classes) {
        if (c.rank == 1 && c.class_size == 1)
            CHECK(centralizer(d8, c.rep).size() == 8);  // center: C(Z) = D8
        if (c.rank == 2)
            CHECK(centralizer(d8, c.rep).size() == 4);  // Klein: C(V) = V
    }
}

TEST_CASE("Betti numbers over F_pG")
{
    SUBCASE("Z/2: periodic resolution")
    {
        auto b = betti_numbers(PermGroup::cyclic(2), Prime::checked(2), 6);
        CHECK(b == std::vector<long long>{1, 1, 1, 1, 1, 1, 1});
    }
    SUBCASE("Z/4: period-2 resolution still gives 1,1,1,...")
    {
        auto b = betti_numbers(PermGroup::cyclic(4), Prime::checked(2), 6);
        CHECK(b == std::vector<long long>{1, 1, 1, 1, 1, 1, 1});
    }
    SUBCASE("Q8: pattern 1,2,2,1 of period 4")
    {
        auto b = betti_numbers(PermGroup::quaternion8(), Prime::checked(2), 8);
        CHECK(b == std::vector<long long>{1, 2, 2, 1, 1, 2, 2, 1, 1});
    }
    SUBCASE("Klein four: dimensions n + 1")
    {
        auto b = betti_numbers(PermGroup::elementary_abelian(2, 2), Prime::checked(2), 5);
        CHECK(b == std::vector<long long>{1, 2, 3, 4, 5, 6});
    }
    SUBCASE("D8: dimensions n + 1")
    {
        auto b = betti_numbers(PermGroup::dihedral(4), Prime::checked(2), 5);
        CHECK(b == std::vector<long long>{1, 2, 3, 4, 5, 6});
    }
    SUBCASE("Z/3 and Z/9 at p = 3")
    {
        auto b3 = betti_numbers(PermGroup::cyclic(3), Prime::checked(3), 5);
        CHECK(b3 == std::vector<long long>{1, 1, 1, 1, 1, 1});
        auto b9 = betti_numbers(PermGroup::cyclic(9), Prime::checked(3), 5);
        CHECK(b9 == std::vector<long long>{1, 1, 1, 1, 1, 1});
    }
    SUBCASE("non-p-groups are rejected")
    {
        CHECK_THROWS_AS(betti_numbers(PermGroup::symmetric(3), Prime::checked(2), 3),
                        TopnilError);
    }
}
