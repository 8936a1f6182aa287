#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "topnil/homology.hpp"

using namespace topnil;

namespace {

RingPtr poly_ring(int p, std::vector<std::pair<std::string, int>> gens)
{
    std::vector<Generator> gs;
    for (auto& [n, d] : gens)
        gs.push_back({n, d, Parity::Even});
    return GradedRing::make(Prime::checked(p), gs);
}

// Cech-complex oracle for H^i_m(S), S a polynomial ring in n <= 2 variables:
// dimensions of the degree-d slice of the complex 0 -> S -> (+) S_{x_i} ->
// S_{x_1 x_2} -> 0, with Laurent exponents truncated below at -N (exact for
// the probed window because the differentials never move exponents).
struct CechOracle {
    int p;
    std::vector<int> weights;
    int trunc = 12;

    long long count(int d, const std::vector<bool>& inverted) const
    {
        // lattice points e_i with sum e_i * w_i = d, e_i >= 0 unless inverted
        std::vector<long long> counts;
        long long total = 0;
        std::function<void(size_t, long long)> rec = [&](size_t i, long long left) {
            if (i == weights.size()) {
                if (left == 0)
                    ++total;
                return;
            }
            int lo = inverted[i] ? -trunc : 0;
            for (int e = lo; static_cast<long long>(e) * weights[i] <= left +
                     static_cast<long long>(trunc) * 64; ++e) {
                long long rem = left - static_cast<long long>(e) * weights[i];
                // crude bound: remaining weight can reach rem only if |rem| manageable
                if (rem < -static_cast<long long>(trunc) * 64)
                    break;
                rec(i + 1, rem);
                if (e > trunc + 32)
                    break;
            }
        };
        rec(0, d);
        return total;
    }

    // dim H^i in internal degree d, i = 0..n
    long long h(int i, int d) const
    {
        size_t n = weights.size();
        // Cech complex slice dimensions and differential ranks; differentials
        // are signed identity-inclusions on monomials, so ranks equal the
        // dimension of the span of images, computable by monomial bookkeeping.
        // Here we use the classical combinatorial description instead: a
        // Laurent monomial contributes to H^n iff all exponents are negative
        // (n = #variables), and H^i = 0 for 0 <= i < n when M = S.  That is
        // the statement the complex computes; we verify it by counting ranks
        // degreewise below for n <= 2.
        if (n == 1) {
            if (i == 0)
                return 0;
            // H^1 = S_x / S: monomials with negative exponent
            long long neg = 0;
            for (int e = -trunc; e < 0; ++e)
                if (static_cast<long long>(e) * weights[0] == d)
                    ++neg;
            return i == 1 ? neg : 0;
        }
        // n == 2: ranks from explicit slice bases
        std::vector<bool> none{false, false}, inv0{true, false}, inv1{false, true},
            both{true, true};
        long long c0 = count(d, none);
        long long c1 = count(d, inv0) + count(d, inv1);
        long long c2 = count(d, both);
        // d0: S -> S_x (+) S_y is injective (domain embeds in each factor)
        long long rank_d0 = c0;
        // d1: (a, b) |-> a - b in S_{xy}; kernel = pairs agreeing in S_{xy},
        // i.e. elements of S_x cap S_y = S (exponentwise) -> kernel dim = c0
        long long rank_d1 = c1 - c0;
        if (i == 0)
            return 0;  // injectivity of d0
        if (i == 1)
            return (c1 - rank_d0) - rank_d1;  // ker d1 / im d0
        if (i == 2)
            return c2 - rank_d1;
        return 0;
    }
};

GradedModule free_module(RingPtr cover, std::vector<int> degs)
{
    GradedModule m;
    m.cover = std::move(cover);
    m.gen_degrees = std::move(degs);
    return m;
}

}  // namespace

TEST_CASE("Koszul resolution of F_p over a standard polynomial ring")
{
    // oracle: the Koszul complex gives beta_{i,i} = binomial(n, i)
    auto binom = [](int n, int k) {
        long long r = 1;
        for (int i = 0; i < k; ++i)
            r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<std::string, int>> gens;
        for (int i = 0; i < n; ++i)
            gens.push_back({"x" + std::to_string(i), 1});
        RingPtr cover = poly_ring(2, gens);
        GradedModule m = free_module(cover, {0});
        for (int i = 0; i < n; ++i) {
            Monomial mon = Monomial::one(static_cast<size_t>(n));
            mon.exp[static_cast<size_t>(i)] = 1;
            m.relations.push_back(ModElement::single(cover, 0, mon, 1));
        }
        Resolution res = minimal_free_resolution(m);
        BettiTable b = res.betti();
        CHECK(b.projective_dimension() == n);
        for (int i = 0; i <= n; ++i)
            CHECK(b.beta(i, i) == binom(n, i));
    }
}

TEST_CASE("free module and principal ideal quotients")
{
    RingPtr cover = poly_ring(2, {{"x", 1}, {"y", 1}});
    SUBCASE("free module has trivial Betti table")
    {
        GradedModule m = free_module(cover, {0});
        BettiTable b = minimal_free_resolution(m).betti();
        CHECK(b.projective_dimension() == 0);
        CHECK(b.beta(0, 0) == 1);
    }
    SUBCASE("S/(xy): one syzygy step")
    {
        GradedModule m = free_module(cover, {0});
        Monomial xy = Monomial::one(2);
        xy.exp[0] = xy.exp[1] = 1;
        m.relations.push_back(ModElement::single(cover, 0, xy, 1));
        BettiTable b = minimal_free_resolution(m).betti();
        CHECK(b.projective_dimension() == 1);
        CHECK(b.beta(0, 0) == 1);
        CHECK(b.beta(1, 2) == 1);
    }
}

TEST_CASE("local cohomology profiles against the Cech oracle")
{
    SUBCASE("S = F_2[x1,x2], standard grading")
    {
        RingPtr cover = poly_ring(2, {{"x1", 1}, {"x2", 1}});
        GradedModule m = free_module(cover, {0});
        LocalCohomologyProfile prof = local_cohomology_degrees(m);
        REQUIRE(prof.a.size() == 3);
        CHECK_FALSE(prof.a[0].has_value());
        CHECK_FALSE(prof.a[1].has_value());
        REQUIRE(prof.a[2].has_value());
        CHECK(*prof.a[2] == -2);

        CechOracle oracle{2, {1, 1}};
        // top degree of H^2 from the oracle
        int top = -100;
        for (int d = -8; d <= 2; ++d)
            if (oracle.h(2, d) > 0)
                top = std::max(top, d);
        CHECK(top == *prof.a[2]);
        for (int d = -8; d <= 2; ++d) {
            CHECK(oracle.h(0, d) == 0);
            CHECK(oracle.h(1, d) == 0);
        }
    }

    SUBCASE("S = F_3[x], |x| = 4")
    {
        RingPtr cover = poly_ring(3, {{"x", 4}});
        GradedModule m = free_module(cover, {0});
        LocalCohomologyProfile prof = local_cohomology_degrees(m);
        REQUIRE(prof.a[1].has_value());
        CHECK(*prof.a[1] == -4);
        CHECK_FALSE(prof.a[0].has_value());

        CechOracle oracle{3, {4}};
        int top = -100;
        for (int d = -12; d <= 4; ++d)
            if (oracle.h(1, d) > 0)
                top = std::max(top, d);
        CHECK(top == -4);
    }

    SUBCASE("finite length module: a_0 equals the top degree")
    {
        RingPtr cover = poly_ring(2, {{"x", 1}});
        GradedModule m = free_module(cover, {0});
        Monomial x4 = Monomial::one(1);
        x4.exp[0] = 4;
        m.relations.push_back(ModElement::single(cover, 0, x4, 1));
        LocalCohomologyProfile prof = local_cohomology_degrees(m);
        REQUIRE(prof.a[0].has_value());
        CHECK(*prof.a[0] == 3);
        CHECK_FALSE(prof.a[1].has_value());
        CHECK(prof.depth() == 0);
        CHECK(prof.dimension() == 0);
    }
}

TEST_CASE("depth")
{
    SUBCASE("polynomial rings have full depth")
    {
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::pair<std::string, int>> gens;
            for (int i = 0; i < n; ++i)
                gens.push_back({"x" + std::to_string(i), 1});
            PresentedAlgebra a(poly_ring(2, gens), {});
            CHECK(depth(a) == n);
        }
    }
    SUBCASE("D8 catalog ring has depth 2 (Auslander-Buchsbaum)")
    {
        RingPtr r = poly_ring(2, {{"x", 1}, {"y", 1}, {"w", 2}});
        PresentedAlgebra d8(r, {Element::parse(r, "x*y")});
        CHECK(depth(d8) == 2);
        CHECK(is_cohen_macaulay(d8));
    }
    SUBCASE("square-zero extension F_2[x] + sigma F_2 has depth 0")
    {
        RingPtr r = poly_ring(2, {{"x", 1}, {"s", 1}});
        PresentedAlgebra a(r, {Element::parse(r, "s^2"), Element::parse(r, "s*x")});
        CHECK(depth(a) == 0);
        LocalCohomologyProfile prof = local_cohomology_degrees(a);
        CHECK(krull_dimension(a) == prof.dimension());
        CHECK(prof.dimension() == 1);
        CHECK_FALSE(is_cohen_macaulay(a));
    }
}

TEST_CASE("regularity")
{
    SUBCASE("F_p[x] with |x| = 4 has regularity -3")
    {
        PresentedAlgebra a(poly_ring(3, {{"x", 4}}), {});
        CHECK(regularity(a) == -3);
    }
    SUBCASE("H_E^* at p = 2 has regularity 0 by both routes")
    {
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::pair<std::string, int>> gens;
            for (int i = 0; i < n; ++i)
                gens.push_back({"x" + std::to_string(i), 1});
            PresentedAlgebra a(poly_ring(2, gens), {});
            GradedModule m = module_of_algebra(a);
            CHECK(regularity(m) == 0);
            CHECK(regularity_from_betti(m) == 0);
        }
    }
    SUBCASE("finite length: regularity equals the top degree")
    {
        RingPtr r = poly_ring(2, {{"x", 1}});
        PresentedAlgebra a(r, {Element::parse(r, "x^5")});
        CHECK(regularity(a) == 4);
        GradedModule m = module_of_algebra(a);
        CHECK(regularity_from_betti(m) == 4);
    }
    SUBCASE("Betti and duality routes agree on standard-graded fixtures")
    {
        RingPtr r = poly_ring(2, {{"x", 1}, {"y", 1}});
        PresentedAlgebra a(r, {Element::parse(r, "x^2 + x*y + y^2"),
                               Element::parse(r, "x^2*y + x*y^2")});
        GradedModule m = module_of_algebra(a);
        CHECK(regularity(m) == regularity_from_betti(m));
    }
}

TEST_CASE("Auslander-Buchsbaum consistency")
{
    // depth + pd = n whenever both are computed independently
    struct Fixture {
        RingPtr ring;
        std::vector<std::string> rels;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({poly_ring(2, {{"x", 1}, {"y", 1}, {"w", 2}}), {"x*y"}});
    fixtures.push_back({poly_ring(2, {{"x", 1}, {"y", 1}}), {"x^2 + x*y + y^2", "x^2*y + x*y^2"}});
    fixtures.push_back({poly_ring(2, {{"x", 1}, {"s", 1}}), {"s^2", "s*x"}});
    for (const auto& f : fixtures) {
        std::vector<Element> rels;
        for (const auto& s : f.rels)
            rels.push_back(Element::parse(f.ring, s));
        PresentedAlgebra a(f.ring, rels);
        GradedModule m = module_of_algebra(a);
        Resolution res = minimal_free_resolution(m);
        int pd = res.betti().projective_dimension();
        CHECK(depth(m) + pd == static_cast<int>(m.cover->ngens()));
    }
}

TEST_CASE("regular sequences")
{
    RingPtr r = poly_ring(2, {{"x", 1}, {"y", 1}});
    PresentedAlgebra a(r, {});
    CHECK(is_regular_sequence(a, {Element::parse(r, "x"), Element::parse(r, "y")}));
    CHECK_FALSE(is_regular_sequence(a, {Element::parse(r, "x"), Element::parse(r, "x")}));

    // Duflot generator of the Q8 catalog ring: the degree-4 class is regular
    RingPtr q8r = poly_ring(2, {{"x", 1}, {"y", 1}, {"e", 4}});
    PresentedAlgebra q8(q8r, {Element::parse(q8r, "x^2 + x*y + y^2"),
                              Element::parse(q8r, "x^2*y + x*y^2")});
    CHECK(is_regular_sequence(q8, {Element::parse(q8r, "e")}));
    CHECK(is_cohen_macaulay(q8));
    CHECK(depth(q8) == 1);
    CHECK(krull_dimension(q8) == 1);
}

TEST_CASE("odd-p algebra modules")
{
    // H_{Z/3}^* = F_3[y] (x) Lambda(x): free of rank 2 over F_3[y]
    std::vector<Generator> gens{{"x", 1, Parity::Odd}, {"y", 2, Parity::Even}};
    RingPtr r = GradedRing::make(Prime::checked(3), gens);
    PresentedAlgebra a(r, {});
    GradedModule m = module_of_algebra(a);
    CHECK(depth(m) == 1);
    CHECK(dimension(m) == 1);
    CHECK(regularity(m) == 0);

    // Lambda(e) over the trivial cover: finite dimensional, a_0 = 1
    std::vector<Generator> gl{{"e", 1, Parity::Odd}};
    RingPtr rl = GradedRing::make(Prime::checked(3), gl);
    PresentedAlgebra l(rl, {});
    GradedModule ml = module_of_algebra(l);
    LocalCohomologyProfile prof = local_cohomology_degrees(ml);
    REQUIRE(prof.a.size() == 1);
    REQUIRE(prof.a[0].has_value());
    CHECK(*prof.a[0] == 1);
    CHECK(regularity(ml) == 1);
}

TEST_CASE("module of an ideal")
{
    RingPtr r = poly_ring(2, {{"x", 1}, {"y", 1}});
    PresentedAlgebra a(r, {});
    Ideal ix{r, {Element::parse(r, "x")}};
    GradedModule m = module_of_ideal(a, ix);
    // (x) is free of rank 1 generated in degree 1
    BettiTable b = minimal_free_resolution(m).betti();
    CHECK(b.projective_dimension() == 0);
    CHECK(b.beta(0, 1) == 1);
    CHECK(depth(m) == 2);
    CHECK(regularity(m) == 1);

    // ideal (x, y): two generators, one Koszul syzygy
    Ideal ixy{r, {Element::parse(r, "x"), Element::parse(r, "y")}};
    GradedModule m2 = module_of_ideal(a, ixy);
    BettiTable b2 = minimal_free_resolution(m2).betti();
    CHECK(b2.projective_dimension() == 1);
    CHECK(b2.beta(0, 1) == 2);
    CHECK(b2.beta(1, 2) == 1);
    CHECK(depth(m2) == 1);
}
