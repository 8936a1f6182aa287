#include "topnil/steenrod.hpp"

#include <functional>
#include <sstream>

namespace topnil {

SteenrodAction SteenrodAction::empty(const RingPtr& ring)
{
    SteenrodAction a;
    a.sq.resize(ring->ngens());
    a.bockstein.assign(ring->ngens(), Element::zero(ring));
    a.ppow.resize(ring->ngens());
    return a;
}

std::string SteenrodOp::str() const
{
    switch (kind) {
        case OpKind::Sq:
            return "Sq^" + std::to_string(index);
        case OpKind::P:
            return "P^" + std::to_string(index);
        case OpKind::Bockstein:
            return "beta";
    }
    return "?";
}

namespace {

// total operation on one generator: g + (declared values of Sq^i / P^i on g)
Element total_on_generator(const UnstablePresentation& u, size_t i)
{
    const auto& ring = u.ring();
    Element t = Element::generator(ring, i);
    if (ring->p() == 2) {
        for (const auto& [k, v] : u.action.sq[i]) {
            require(k >= 1, "Sq^0 is implicit");
            t = t + v;
        }
    }
    else {
        for (const auto& [k, v] : u.action.ppow[i]) {
            require(k >= 1, "P^0 is implicit");
            t = t + v;
        }
    }
    return t;
}

// Bockstein as a signed derivation (odd p; Sq^1 covers p = 2)
Element bockstein_of(const UnstablePresentation& u, const Element& e)
{
    const auto& ring = u.ring();
    const auto& alg = *u.algebra;
    require(ring->p() != 2, "bockstein_of is only used at odd primes");
    Element out = Element::zero(ring);
    for (const auto& t : e.terms()) {
        // ordered factors f_j = g_j^{a_j}:
        //   beta(f_1...f_k) = sum_j (-1)^{|f_1...f_{j-1}|} f_1..f_{j-1} beta(f_j) f_{j+1}..f_k
        // with beta(g^a) = a g^{a-1} beta(g); products taken in factor order
        int prefix_deg = 0;
        for (size_t j = 0; j < ring->ngens(); ++j) {
            int a = t.mon.exp[j];
            if (a) {
                const Element& bg = u.action.bockstein[j];
                if (!bg.is_zero()) {
                    Monomial prefix = Monomial::one(ring->ngens());
                    Monomial suffix = Monomial::one(ring->ngens());
                    for (size_t k = 0; k < j; ++k)
                        prefix.exp[k] = t.mon.exp[k];
                    for (size_t k = j + 1; k < ring->ngens(); ++k)
                        suffix.exp[k] = t.mon.exp[k];
                    Monomial gpow = Monomial::one(ring->ngens());
                    gpow.exp[j] = static_cast<uint16_t>(a - 1);

                    Element piece = Element::monomial(ring, prefix, t.coeff)
                                        .mul_signed(Element::monomial(ring, gpow, 1))
                                        .mul_signed(bg)
                                        .mul_signed(Element::monomial(ring, suffix, 1))
                                        .scaled(a);
                    if (prefix_deg % 2 == 1)
                        piece = piece.scaled(-1);
                    out = out + piece;
                }
            }
            prefix_deg += a * ring->gen(j).degree;
        }
    }
    return alg.nf(out);
}

}  // namespace

Element total_operation(const UnstablePresentation& u, const Element& e)
{
    const auto& ring = u.ring();
    const auto& alg = *u.algebra;
    Element out = Element::zero(ring);
    for (const auto& t : e.terms()) {
        Element acc = Element::constant(ring, t.coeff);
        for (size_t i = 0; i < ring->ngens() && !acc.is_zero(); ++i) {
            int a = t.mon.exp[i];
            if (!a)
                continue;
            Element tg = total_on_generator(u, i);
            for (int k = 0; k < a; ++k)
                acc = alg.nf(acc.mul_signed(tg));
        }
        out = out + acc;
    }
    return alg.nf(out);
}

Element apply_operation(const UnstablePresentation& u, SteenrodOp op, const Element& e)
{
    const auto& ring = u.ring();
    const auto& alg = *u.algebra;
    Element en = alg.nf(e);
    if (en.is_zero())
        return en;
    require(en.is_homogeneous(), "operation on inhomogeneous element");
    int d = en.degree();
    switch (op.kind) {
        case OpKind::Sq: {
            require(ring->p() == 2, "Sq^i lives at p = 2");
            require(op.index >= 0, "negative operation index");
            if (op.index == 0)
                return en;
            return total_operation(u, en).homogeneous_part(d + op.index);
        }
        case OpKind::P: {
            require(ring->p() != 2, "P^i lives at odd primes");
            require(op.index >= 0, "negative operation index");
            if (op.index == 0)
                return en;
            return total_operation(u, en).homogeneous_part(d + 2 * op.index * (ring->p() - 1));
        }
        case OpKind::Bockstein: {
            if (ring->p() == 2) {
                return total_operation(u, en).homogeneous_part(d + 1);
            }
            return bockstein_of(u, en);
        }
    }
    fail("unreachable");
}

namespace {

int default_bound(const UnstablePresentation& u)
{
    int top = 1;
    for (const auto& g : u.ring()->gens())
        top = std::max(top, g.degree);
    return 2 * top;
}

std::vector<Monomial> standard_monomials_through(const PresentedAlgebra& a, int bound)
{
    const auto& ring = *a.ring();
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(ring.ngens());
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == ring.ngens()) {
            if (!cur.is_one()) {
                Element m = Element::monomial(a.ring(), cur, 1);
                if (a.nf(m) == m)
                    out.push_back(cur);
            }
            return;
        }
        int dg = ring.gen(i).degree;
        int cap = left / dg;
        if (ring.odd(i))
            cap = std::min(cap, 1);
        for (int k = 0; k <= cap; ++k) {
            cur.exp[i] = static_cast<uint16_t>(k);
            rec(i + 1, left - k * dg);
        }
        cur.exp[i] = 0;
    };
    rec(0, bound);
    return out;
}

}  // namespace

InstabilityReport verify_instability(const UnstablePresentation& u, int degree_bound)
{
    const auto& ring = u.ring();
    const auto& alg = *u.algebra;
    int bound = degree_bound > 0 ? degree_bound : default_bound(u);
    InstabilityReport rep;
    auto flag = [&](const std::string& s) { rep.violations.push_back({s}); };

    // declared generator values must be homogeneous of the right degree
    for (size_t i = 0; i < ring->ngens(); ++i) {
        int d = ring->gen(i).degree;
        if (ring->p() == 2) {
            for (const auto& [k, v] : u.action.sq[i])
                if (!v.is_zero() && (!v.is_homogeneous() || v.degree() != d + k))
                    flag("Sq^" + std::to_string(k) + "(" + ring->gen(i).name +
                         ") has wrong degree");
        }
        else {
            const Element& b = u.action.bockstein[i];
            if (!b.is_zero() && (!b.is_homogeneous() || b.degree() != d + 1))
                flag("beta(" + ring->gen(i).name + ") has wrong degree");
            for (const auto& [k, v] : u.action.ppow[i])
                if (!v.is_zero() &&
                    (!v.is_homogeneous() || v.degree() != d + 2 * k * (ring->p() - 1)))
                    flag("P^" + std::to_string(k) + "(" + ring->gen(i).name +
                         ") has wrong degree");
        }
    }
    if (!rep.violations.empty())
        return rep;

    for (const auto& mon : standard_monomials_through(alg, bound)) {
        Element x = Element::monomial(u.algebra->ring(), mon, 1);
        int d = mon.degree(*ring);
        Element total = total_operation(u, x);
        if (ring->p() == 2) {
            // instability: no components above degree 2d
            for (const auto& t : total.terms())
                if (t.mon.degree(*ring) > 2 * d)
                    flag("Sq^i(" + x.str() + ") nonzero for i > " + std::to_string(d));
            // restriction axiom: Sq^d x = x^2
            Element sq_top = total.homogeneous_part(2 * d);
            Element xsq = alg.nf(x.mul_signed(x));
            if (!(sq_top == xsq))
                flag("Sq^{|x|}(" + x.str() + ") != x^2");
        }
        else {
            for (const auto& t : total.terms()) {
                int shift = t.mon.degree(*ring) - d;
                // shift = 2i(p-1); instability requires 2i <= d
                if (shift > d * (ring->p() - 1))
                    flag("P^i(" + x.str() + ") nonzero for 2i > " + std::to_string(d));
            }
            if (d % 2 == 0) {
                Element p_top = total.homogeneous_part(d + d * (ring->p() - 1));
                Element xp = Element::constant(u.algebra->ring(), 1);
                for (int k = 0; k < ring->p(); ++k)
                    xp = alg.nf(xp.mul_signed(x));
                if (!(p_top == xp))
                    flag("P^{|x|/2}(" + x.str() + ") != x^p");
            }
            // for 2i + 1 > |x| the condition beta P^i x = 0 is subsumed: either
            // 2i > |x| (covered by the total-P bound) or 2i = |x| with x of
            // even degree, where beta(x^p) = 0 holds in characteristic p
            // beta^2 = 0
            Element bb = bockstein_of(u, bockstein_of(u, x));
            if (!bb.is_zero())
                flag("beta^2(" + x.str() + ") != 0");
        }
    }

    // relations carried to relations
    for (const auto& rel : alg.relations()) {
        Element tot = total_operation(u, rel);
        if (!alg.nf(tot).is_zero())
            flag("total operation does not preserve the relation " + rel.str());
        if (ring->p() != 2) {
            if (!alg.nf(bockstein_of(u, rel)).is_zero())
                flag("Bockstein does not preserve the relation " + rel.str());
        }
    }
    return rep;
}

std::string InstabilityReport::str() const
{
    if (pass())
        return "pass";
    std::ostringstream os;
    for (const auto& v : violations)
        os << "violation: " << v.witness << "\n";
    return os.str();
}

bool check_a_linearity(const UnstablePresentation& source, const UnstablePresentation& target,
                       const std::vector<Element>& images, int degree_bound)
{
    const auto& sring = source.ring();
    int bound = degree_bound > 0 ? degree_bound : default_bound(source);
    auto map_elem = [&](const Element& e) {
        return apply_ring_map(images, *target.algebra, e);
    };
    for (size_t i = 0; i < sring->ngens(); ++i) {
        Element g = Element::generator(sring, i);
        std::vector<SteenrodOp> ops;
        if (sring->p() == 2) {
            for (int k = 1; k <= bound; ++k)
                ops.push_back({OpKind::Sq, k});
        }
        else {
            ops.push_back({OpKind::Bockstein, 0});
            for (int k = 1; 2 * k * (sring->p() - 1) <= 2 * bound; ++k)
                ops.push_back({OpKind::P, k});
        }
        for (const auto& op : ops) {
            Element lhs = map_elem(apply_operation(source, op, g));
            Element rhs = apply_operation(target, op, map_elem(g));
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

}  // namespace topnil
