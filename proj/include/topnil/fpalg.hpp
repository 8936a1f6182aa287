#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topnil/fp.hpp"

namespace topnil {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

struct Generator {
    std::string name;
    int degree = 1;
    Parity parity = Parity::Even;
};

/// A graded-commutative F_p-algebra's free frame: the prime and an ordered
/// list of generators with degrees and parities.  At p = 2 every generator is
/// even-type (squares need not vanish); at odd p the parity matches the
/// degree parity and odd generators square to zero.
class GradedRing {
public:
    static std::shared_ptr<const GradedRing> make(Prime p, std::vector<Generator> gens);

    int p() const { return p_.value; }
    Prime prime() const { return p_; }
    const std::vector<Generator>& gens() const { return gens_; }
    size_t ngens() const { return gens_.size(); }
    const Generator& gen(size_t i) const { return gens_[i]; }
    bool odd(size_t i) const { return gens_[i].parity == Parity::Odd; }
    int index_of(const std::string& name) const;  // -1 if absent

private:
    GradedRing(Prime p, std::vector<Generator> gens);
    Prime p_;
    std::vector<Generator> gens_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

/// Exponent vector over all generators of a ring.  Odd-generator exponents
/// stay <= 1 in user-facing elements; the Groebner layer may exceed that
/// transiently before reduction by the square relations.
struct Monomial {
    std::vector<uint16_t> exp;

    static Monomial one(size_t n) { return Monomial{std::vector<uint16_t>(n, 0)}; }
    bool is_one() const;
    int degree(const GradedRing& r) const;
    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial div(const Monomial& m) const;  // requires divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Monomial orders.  All are graded by the ring's weighted degree and refined
/// by reverse lexicographic comparison in the declared generator order.  The
/// block variant makes every monomial touching the first `block` variables
/// larger than any monomial free of them (elimination order).
struct MonomialOrder {
    size_t elim_block = 0;  // 0 = plain graded revlex
    // returns <0, 0, >0 like a three-way comparison; a "greater" monomial leads
    int cmp(const GradedRing& r, const Monomial& a, const Monomial& b) const;
};

struct Term {
    Monomial mon;
    int coeff = 0;  // normalized 0..p-1, nonzero in stored elements
};

/// F_p-linear combination of monomials, terms sorted descending in a fixed
/// graded revlex order.  Signed multiplication implements the Koszul rule;
/// the Groebner layer works sign-free (see DESIGN NOTES in fpalg.cpp).
class Element {
public:
    Element() = default;
    explicit Element(RingPtr ring);
    static Element zero(RingPtr ring) { return Element(std::move(ring)); }
    static Element constant(RingPtr ring, int c);
    static Element generator(RingPtr ring, size_t i);
    static Element monomial(RingPtr ring, Monomial m, int c);
    static Element parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int degree() const;  // requires nonzero, homogeneous
    Element homogeneous_part(int d) const;
    int top_degree() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(int c) const;

    /// Graded-commutative product (Koszul signs, odd squares vanish).
    Element mul_signed(const Element& o) const;
    /// Plain commutative product; used by the ideal-theoretic layer.
    Element mul_plain(const Element& o) const;
    Element mul_plain_term(const Monomial& m, int c) const;

    Element monic(const MonomialOrder& ord) const;
    const Term& lead(const MonomialOrder& ord) const;  // requires nonzero

    bool operator==(const Element& o) const;
    std::string str() const;

    void sort_terms(const MonomialOrder& ord);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize(const MonomialOrder& ord);
    friend class GroebnerBasis;
    friend Element substitute(const Element&, const RingPtr&, const std::vector<Element>&, bool);
};

/// Substitute images for all generators of e's ring; images live in `target`.
/// `sign_exact` selects the signed product (true) or plain product (false).
Element substitute(const Element& e, const RingPtr& target, const std::vector<Element>& images,
                   bool sign_exact);

struct Ideal {
    RingPtr ring;
    std::vector<Element> gens;  // homogeneous
};

/// Reduced Groebner basis in the sign-free commutative model of the ring:
/// odd-generator squares are adjoined to every working ideal, so normal forms
/// of honest elements never contain an odd square.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Element> gens, MonomialOrder ord = {});

    const std::vector<Element>& basis() const { return basis_; }
    const MonomialOrder& order() const { return ord_; }
    const RingPtr& ring() const { return ring_; }

    Element normal_form(const Element& e) const;
    bool contains(const Element& e) const { return normal_form(e).is_zero(); }
    std::vector<Monomial> leading_monomials() const;
    /// Minimal generators of the leading-term ideal.
    std::vector<Monomial> staircase() const;

private:
    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<Element> basis_;
    void buchberger(std::vector<Element> gens);
    void interreduce();
};

/// Generators (degree, parity) + homogeneous relations; connected by
/// construction (no degree-0 generators).
class PresentedAlgebra {
public:
    PresentedAlgebra(RingPtr ring, std::vector<Element> relations);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Element>& relations() const { return relations_; }
    const GroebnerBasis& gb() const;

    Element nf(const Element& e) const { return gb().normal_form(e); }
    bool is_zero_element(const Element& e) const { return gb().contains(e); }
    int top_relation_degree() const;

private:
    RingPtr ring_;
    std::vector<Element> relations_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
};

struct HilbertSeries {
    // numerator / prod_i (1 - t^{denominator_degrees[i]}), common factors cancelled
    std::vector<long long> numerator;     // coefficient of t^k at index k
    std::vector<int> denominator_degrees;
    std::vector<long long> coefficients(int up_to) const;
    std::string str() const;
};

// --- operations ---------------------------------------------------------

Element multiply(const Element& a, const Element& b);  // signed product

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder ord = {});

HilbertSeries hilbert_series(const PresentedAlgebra& a);

/// Degreewise dimension of the algebra (from the staircase).
std::vector<long long> graded_dimensions(const PresentedAlgebra& a, int up_to);

int krull_dimension(const PresentedAlgebra& a);

/// Kernel of the map source -> target determined by generator images
/// (checked to respect degrees and relations).  At odd p the generators of
/// the returned ideal are sign-corrected so they lie in the honest
/// graded-commutative kernel; this requires every image to be sign-coherent
/// (all monomials of one image share their odd support), which holds for
/// every catalog map and is enforced here.
Ideal kernel_of_ring_map(const std::vector<Element>& images, const PresentedAlgebra& source,
                         const PresentedAlgebra& target);

/// Evaluate the map on an element of the source (signed, then reduced in target).
Element apply_ring_map(const std::vector<Element>& images, const PresentedAlgebra& target,
                       const Element& e);

Ideal intersect_ideals(const PresentedAlgebra& a, const Ideal& i, const Ideal& j);

/// Ideal quotient (I : f) inside the presented algebra.
Ideal colon_ideal(const PresentedAlgebra& a, const Ideal& i, const Element& f);

/// Membership of v in the subalgebra of `target` generated by `subalg_gens`.
bool subalgebra_contains(const PresentedAlgebra& target, const std::vector<Element>& subalg_gens,
                         const Element& v);

struct NilpotencyOptions {
    int power_cap = 64;
};

/// Is g nilpotent in a?  Tests powers up to a Hilbert-motivated bound and
/// errors beyond the cap rather than answering silently.
bool is_nilpotent(const PresentedAlgebra& a, const Element& g, NilpotencyOptions opt = {});

/// Largest d with rad(a)^d != 0, where rad is generated by the odd
/// generators and the nilpotent even generators.
int radical_nilpotence_degree(const PresentedAlgebra& a, NilpotencyOptions opt = {});

/// a (x) b with b's generators appended after a's.
PresentedAlgebra tensor_product(const PresentedAlgebra& a, const PresentedAlgebra& b);

}  // namespace topnil
