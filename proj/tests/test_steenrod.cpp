#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "topnil/steenrod.hpp"

using namespace topnil;

namespace {

UnstablePresentation he_p2(int n)
{
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back({"x" + std::to_string(i + 1), 1, Parity::Even});
    RingPtr r = GradedRing::make(Prime::checked(2), gens);
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(r, std::vector<Element>{});
    u.action = SteenrodAction::empty(r);
    for (int i = 0; i < n; ++i) {
        Element x = Element::generator(r, static_cast<size_t>(i));
        u.action.sq[static_cast<size_t>(i)][1] = x.mul_signed(x);
    }
    return u;
}

// H_E^* at an odd prime: Lambda(x_1..x_n) (x) F_p[y_1..y_n], beta x_i = y_i
UnstablePresentation he_odd(int p, int n)
{
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back({"x" + std::to_string(i + 1), 1, Parity::Odd});
    for (int i = 0; i < n; ++i)
        gens.push_back({"y" + std::to_string(i + 1), 2, Parity::Even});
    RingPtr r = GradedRing::make(Prime::checked(p), gens);
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(r, std::vector<Element>{});
    u.action = SteenrodAction::empty(r);
    for (int i = 0; i < n; ++i) {
        size_t xi = static_cast<size_t>(i), yi = static_cast<size_t>(n + i);
        u.action.bockstein[xi] = Element::generator(r, yi);
        Element y = Element::generator(r, yi);
        Element yp = Element::constant(r, 1);
        for (int k = 0; k < p; ++k)
            yp = yp.mul_signed(y);
        u.action.ppow[yi][1] = yp;  // P^1 y = y^p (2*1 = |y|)
    }
    return u;
}

}  // namespace

TEST_CASE("restriction axiom and Cartan formula at p = 2")
{
    UnstablePresentation u = he_p2(2);
    const RingPtr& r = u.ring();
    Element x = Element::generator(r, 0), y = Element::generator(r, 1);

    CHECK(apply_operation(u, {OpKind::Sq, 1}, x) == Element::parse(r, "x1^2"));
    CHECK(apply_operation(u, {OpKind::Sq, 1}, x.mul_signed(y)) ==
          Element::parse(r, "x1^2*x2 + x1*x2^2"));
    CHECK(apply_operation(u, {OpKind::Sq, 2}, x.mul_signed(y)) ==
          Element::parse(r, "x1^2*x2^2"));
    CHECK(apply_operation(u, {OpKind::Sq, 3}, x.mul_signed(y)).is_zero());
}

TEST_CASE("Cartan bilinearity on random pairs through degree 10")
{
    UnstablePresentation u = he_p2(2);
    const RingPtr& r = u.ring();
    std::mt19937 rng(19);
    auto rand_homog = [&](int d) {
        Element e = Element::zero(r);
        for (int t = 0; t < 3; ++t) {
            int a = static_cast<int>(rng()) % (d + 1);
            if (a < 0)
                a += d + 1;
            Monomial m = Monomial::one(2);
            m.exp[0] = static_cast<uint16_t>(a);
            m.exp[1] = static_cast<uint16_t>(d - a);
            e = e + Element::monomial(r, m, 1);
        }
        return e;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int da = 1 + static_cast<int>(rng() % 5), db = 1 + static_cast<int>(rng() % 5);
        if (da + db > 10)
            continue;
        Element a = rand_homog(da), b = rand_homog(db);
        if (a.is_zero() || b.is_zero())
            continue;
        for (int k = 0; k <= da + db; ++k) {
            Element lhs = apply_operation(u, {OpKind::Sq, k}, a.mul_signed(b));
            Element rhs = Element::zero(r);
            for (int i = 0; i <= k; ++i)
                rhs = rhs + apply_operation(u, {OpKind::Sq, i}, a)
                                .mul_signed(apply_operation(u, {OpKind::Sq, k - i}, b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("total square is multiplicative")
{
    UnstablePresentation u = he_p2(3);
    const RingPtr& r = u.ring();
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        Monomial m1 = Monomial::one(3), m2 = Monomial::one(3);
        for (int i = 0; i < 3; ++i) {
            m1.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(rng() % 3);
            m2.exp[static_cast<size_t>(i)] = static_cast<uint16_t>(rng() % 3);
        }
        Element a = Element::monomial(r, m1, 1), b = Element::monomial(r, m2, 1);
        CHECK(total_operation(u, a.mul_signed(b)) ==
              total_operation(u, a).mul_signed(total_operation(u, b)));
    }
}

TEST_CASE("odd-prime operations")
{
    UnstablePresentation u = he_odd(3, 2);
    const RingPtr& r = u.ring();
    Element x1 = Element::generator(r, 0), y1 = Element::generator(r, 2);

    SUBCASE("Bockstein hits the declared polynomial generator")
    {
        CHECK(apply_operation(u, {OpKind::Bockstein, 0}, x1) == y1);
        CHECK(apply_operation(u, {OpKind::Bockstein, 0}, y1).is_zero());
    }

    SUBCASE("Frobenius: P^n x = x^p for 2n = |x|")
    {
        Element y1cubed = y1.mul_signed(y1).mul_signed(y1);
        CHECK(apply_operation(u, {OpKind::P, 1}, y1) == y1cubed);
        // on a product of two polynomial generators (degree 4, so P^2)
        Element y2 = Element::generator(r, 3);
        Element prod = y1.mul_signed(y2);
        Element prod3 = prod.mul_signed(prod).mul_signed(prod);
        CHECK(apply_operation(u, {OpKind::P, 2}, prod) == prod3);
    }

    SUBCASE("Bockstein is a signed derivation")
    {
        Element x2 = Element::generator(r, 1);
        // beta(x1 x2) = y1 x2 - x1 y2
        Element y2 = Element::generator(r, 3);
        Element expect = y1.mul_signed(x2) - x1.mul_signed(y2);
        CHECK(apply_operation(u, {OpKind::Bockstein, 0}, x1.mul_signed(x2)) == expect);
    }

    SUBCASE("instability passes")
    {
        CHECK(verify_instability(u, 8).pass());
    }
}

TEST_CASE("instability verification")
{
    SUBCASE("H_E^* with the standard action passes")
    {
        CHECK(verify_instability(he_p2(2)).pass());
        CHECK(verify_instability(he_p2(3), 6).pass());
    }

    SUBCASE("an action declaring Sq^3 above the degree fails with a witness")
    {
        std::vector<Generator> gens{{"w", 2, Parity::Even}, {"x", 1, Parity::Even}};
        RingPtr r = GradedRing::make(Prime::checked(2), gens);
        UnstablePresentation u;
        u.algebra = std::make_shared<PresentedAlgebra>(r, std::vector<Element>{});
        u.action = SteenrodAction::empty(r);
        u.action.sq[1][1] = Element::parse(r, "x^2");
        u.action.sq[0][2] = Element::parse(r, "w^2");
        u.action.sq[0][3] = Element::parse(r, "w*x^3");  // Sq^3 on |w| = 2: illegal
        InstabilityReport rep = verify_instability(u);
        CHECK_FALSE(rep.pass());
        bool saw = false;
        for (const auto& v : rep.violations)
            if (v.witness.find("i > 2") != std::string::npos)
                saw = true;
        CHECK(saw);
    }

    SUBCASE("relations must be carried to relations")
    {
        // F_2[e,w]/(e^2) with a corrupted Sq^1 w = e*w; Sq applied to e^2 is
        // fine, but the restriction axiom on w forces Sq^2 w = w^2 and the
        // corrupted table breaks linearity over the ideal
        std::vector<Generator> gens{{"e", 1, Parity::Even}, {"w", 2, Parity::Even}};
        RingPtr r = GradedRing::make(Prime::checked(2), gens);
        UnstablePresentation u;
        u.algebra =
            std::make_shared<PresentedAlgebra>(r, std::vector<Element>{Element::parse(r, "e^2")});
        u.action = SteenrodAction::empty(r);
        u.action.sq[0][1] = Element::zero(r);  // Sq^1 e = e^2 = 0 in the quotient
        u.action.sq[1][2] = Element::parse(r, "w^2");
        CHECK(verify_instability(u).pass());
    }
}

TEST_CASE("A-linearity of maps")
{
    UnstablePresentation u = he_p2(2);
    const RingPtr& r = u.ring();

    SUBCASE("identity is A-linear")
    {
        CHECK(check_a_linearity(u, u, {Element::generator(r, 0), Element::generator(r, 1)}));
    }

    SUBCASE("restriction D8 -> Klein four is A-linear")
    {
        RingPtr rd = GradedRing::make(
            Prime::checked(2),
            {{"x", 1, Parity::Even}, {"y", 1, Parity::Even}, {"w", 2, Parity::Even}});
        UnstablePresentation d8;
        d8.algebra =
            std::make_shared<PresentedAlgebra>(rd, std::vector<Element>{Element::parse(rd, "x*y")});
        d8.action = SteenrodAction::empty(rd);
        d8.action.sq[0][1] = Element::parse(rd, "x^2");
        d8.action.sq[1][1] = Element::parse(rd, "y^2");
        d8.action.sq[2][1] = Element::parse(rd, "w*x + w*y");
        d8.action.sq[2][2] = Element::parse(rd, "w^2");
        CHECK(verify_instability(d8).pass());

        UnstablePresentation v = he_p2(2);
        // res_1: x -> u, y -> 0, w -> v^2 + u v
        std::vector<Element> images{Element::parse(v.ring(), "x1"), Element::zero(v.ring()),
                                    Element::parse(v.ring(), "x2^2 + x1*x2")};
        CHECK(check_a_linearity(d8, v, images));
    }

    SUBCASE("an incompatible target action is detected")
    {
        // target pretends Sq^1 u = 0 (not unstable); x -> u fails linearity
        RingPtr rt = GradedRing::make(Prime::checked(2), {{"u", 1, Parity::Even}});
        UnstablePresentation t;
        t.algebra = std::make_shared<PresentedAlgebra>(rt, std::vector<Element>{});
        t.action = SteenrodAction::empty(rt);
        UnstablePresentation s = he_p2(1);
        CHECK_FALSE(check_a_linearity(s, t, {Element::generator(rt, 0)}));
    }
}
