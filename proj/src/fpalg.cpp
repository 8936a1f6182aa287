#include "topnil/fpalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

// DESIGN NOTES
//
// Ideal-theoretic computations (normal forms, Hilbert data, dimensions,
// kernels, intersections) run in the sign-free commutative model: all
// generators commute and each odd generator carries an explicit square-zero
// relation.  Signed (Koszul) arithmetic is used for element products and for
// Steenrod evaluation.  The two models agree on every subspace-level question
// as long as relation sets are sign-coherent, which validate-time checks
// enforce; see sign_coherent() below.

namespace topnil {

// --- GradedRing -----------------------------------------------------------

GradedRing::GradedRing(Prime p, std::vector<Generator> gens) : p_(p), gens_(std::move(gens)) {}

std::shared_ptr<const GradedRing> GradedRing::make(Prime p, std::vector<Generator> gens)
{
    std::set<std::string> names;
    for (const auto& g : gens) {
        require(g.degree > 0, "generator degree must be positive: " + g.name);
        require(names.insert(g.name).second, "duplicate generator name: " + g.name);
        if (p.value == 2) {
            require(g.parity == Parity::Even, "at p = 2 all generators are even-type: " + g.name);
        }
        else {
            bool deg_even = g.degree % 2 == 0;
            require((g.parity == Parity::Even) == deg_even,
                    "at odd p parity must match degree parity: " + g.name);
        }
    }
    return std::shared_ptr<const GradedRing>(new GradedRing(p, std::move(gens)));
}

int GradedRing::index_of(const std::string& name) const
{
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

// --- Monomial --------------------------------------------------------------

bool Monomial::is_one() const
{
    for (auto e : exp)
        if (e)
            return false;
    return true;
}

int Monomial::degree(const GradedRing& r) const
{
    int d = 0;
    for (size_t i = 0; i < exp.size(); ++i)
        d += static_cast<int>(exp[i]) * r.gen(i).degree;
    return d;
}

bool Monomial::divides(const Monomial& m) const
{
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > m.exp[i])
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const
{
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i)
        r.exp[i] = static_cast<uint16_t>(r.exp[i] + m.exp[i]);
    return r;
}

Monomial Monomial::div(const Monomial& m) const
{
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) {
        require(r.exp[i] >= m.exp[i], "monomial division failure");
        r.exp[i] = static_cast<uint16_t>(r.exp[i] - m.exp[i]);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i)
        r.exp[i] = std::max(r.exp[i], b.exp[i]);
    return r;
}

int MonomialOrder::cmp(const GradedRing& r, const Monomial& a, const Monomial& b) const
{
    if (elim_block > 0) {
        int da = 0, db = 0;
        for (size_t i = 0; i < elim_block; ++i) {
            da += static_cast<int>(a.exp[i]) * r.gen(i).degree;
            db += static_cast<int>(b.exp[i]) * r.gen(i).degree;
        }
        if (da != db)
            return da < db ? -1 : 1;
    }
    int da = a.degree(r), db = b.degree(r);
    if (da != db)
        return da < db ? -1 : 1;
    // reverse lexicographic: the monomial with the smaller exponent at the
    // last differing generator is the larger one
    for (size_t i = a.exp.size(); i-- > 0;) {
        if (a.exp[i] != b.exp[i])
            return a.exp[i] < b.exp[i] ? 1 : -1;
    }
    return 0;
}

// --- Element ---------------------------------------------------------------

namespace {

const MonomialOrder kDefaultOrder{};

int koszul_sign(const GradedRing& r, const Monomial& a, const Monomial& b)
{
    // (-1)^{#inversions between odd supports}, multiplying a * b
    int inv = 0;
    for (size_t j = 0; j < b.exp.size(); ++j) {
        if (!r.odd(j) || b.exp[j] == 0)
            continue;
        for (size_t i = j + 1; i < a.exp.size(); ++i)
            if (r.odd(i) && a.exp[i])
                ++inv;
    }
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Element::Element(RingPtr ring) : ring_(std::move(ring)) {}

Element Element::constant(RingPtr ring, int c)
{
    Element e(ring);
    int cc = fp_norm(c, ring->p());
    if (cc)
        e.terms_.push_back({Monomial::one(ring->ngens()), cc});
    return e;
}

Element Element::generator(RingPtr ring, size_t i)
{
    require(i < ring->ngens(), "generator index out of range");
    Monomial m = Monomial::one(ring->ngens());
    m.exp[i] = 1;
    return monomial(std::move(ring), std::move(m), 1);
}

Element Element::monomial(RingPtr ring, Monomial m, int c)
{
    Element e(ring);
    int cc = fp_norm(c, ring->p());
    if (cc)
        e.terms_.push_back({std::move(m), cc});
    return e;
}

bool Element::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = terms_[0].mon.degree(*ring_);
    for (const auto& t : terms_)
        if (t.mon.degree(*ring_) != d)
            return false;
    return true;
}

int Element::degree() const
{
    require(!terms_.empty(), "degree of zero element");
    return terms_[0].mon.degree(*ring_);
}

int Element::top_degree() const
{
    int d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mon.degree(*ring_));
    return d;
}

Element Element::homogeneous_part(int d) const
{
    Element r(ring_);
    for (const auto& t : terms_)
        if (t.mon.degree(*ring_) == d)
            r.terms_.push_back(t);
    return r;
}

void Element::normalize(const MonomialOrder& ord)
{
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return ord.cmp(*ring_, a.mon, b.mon) > 0;
    });
    std::vector<Term> out;
    const int p = ring_->p();
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mon == t.mon)
            out.back().coeff = fp_add(out.back().coeff, t.coeff, p);
        else
            out.push_back(t);
        if (!out.empty() && out.back().coeff == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

void Element::sort_terms(const MonomialOrder& ord)
{
    normalize(ord);
}

Element Element::operator+(const Element& o) const
{
    require(ring_ == o.ring_, "mismatched rings in addition");
    Element r(ring_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize(kDefaultOrder);
    return r;
}

Element Element::operator-(const Element& o) const
{
    return *this + o.scaled(-1);
}

Element Element::scaled(int c) const
{
    Element r(ring_);
    int cc = fp_norm(c, ring_->p());
    if (cc == 0)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff = fp_mul(t.coeff, cc, ring_->p());
    return r;
}

Element Element::mul_signed(const Element& o) const
{
    require(ring_ == o.ring_, "mismatched rings in product");
    const auto& r = *ring_;
    Element out(ring_);
    for (const auto& ta : terms_) {
        for (const auto& tb : o.terms_) {
            if (r.p() != 2) {
                bool clash = false;
                for (size_t i = 0; i < r.ngens(); ++i)
                    if (r.odd(i) && ta.mon.exp[i] && tb.mon.exp[i]) {
                        clash = true;
                        break;
                    }
                if (clash)
                    continue;
            }
            int c = fp_mul(ta.coeff, tb.coeff, r.p());
            if (r.p() != 2)
                c = fp_mul(c, koszul_sign(r, ta.mon, tb.mon) == 1 ? 1 : r.p() - 1, r.p());
            out.terms_.push_back({ta.mon.times(tb.mon), c});
        }
    }
    out.normalize(kDefaultOrder);
    return out;
}

Element Element::mul_plain(const Element& o) const
{
    require(ring_ == o.ring_, "mismatched rings in product");
    Element out(ring_);
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_)
            out.terms_.push_back({ta.mon.times(tb.mon), fp_mul(ta.coeff, tb.coeff, ring_->p())});
    out.normalize(kDefaultOrder);
    return out;
}

Element Element::mul_plain_term(const Monomial& m, int c) const
{
    Element out(ring_);
    int cc = fp_norm(c, ring_->p());
    if (cc == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) {
        t.mon = t.mon.times(m);
        t.coeff = fp_mul(t.coeff, cc, ring_->p());
    }
    return out;
}

Element Element::monic(const MonomialOrder& ord) const
{
    require(!terms_.empty(), "monic of zero element");
    Element r = *this;
    r.normalize(ord);
    int inv = fp_inv(r.terms_[0].coeff, ring_->p());
    for (auto& t : r.terms_)
        t.coeff = fp_mul(t.coeff, inv, ring_->p());
    return r;
}

const Term& Element::lead(const MonomialOrder&) const
{
    require(!terms_.empty(), "lead of zero element");
    return terms_[0];
}

bool Element::operator==(const Element& o) const
{
    return ring_ == o.ring_ && terms_.size() == o.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                      [](const Term& a, const Term& b) { return a.mon == b.mon && a.coeff == b.coeff; });
}

std::string Element::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        bool printed = false;
        if (t.coeff != 1 || t.mon.is_one()) {
            os << t.coeff;
            printed = true;
        }
        for (size_t i = 0; i < t.mon.exp.size(); ++i) {
            if (!t.mon.exp[i])
                continue;
            if (printed)
                os << "*";
            os << ring_->gen(i).name;
            if (t.mon.exp[i] > 1)
                os << "^" << t.mon.exp[i];
            printed = true;
        }
    }
    return os.str();
}

// --- element parser --------------------------------------------------------

namespace {

struct ElemParser {
    const std::string& s;
    size_t i = 0;
    RingPtr ring;

    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool peek(char c)
    {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c)
    {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }
    long long integer()
    {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        require(i > start, "expected integer in '" + s + "' at position " + std::to_string(start));
        return std::stoll(s.substr(start, i - start));
    }
    std::string name()
    {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
            ++i;
        require(i > start, "expected name in '" + s + "' at position " + std::to_string(start));
        return s.substr(start, i - start);
    }

    Element factor()
    {
        skip_ws();
        require(i < s.size(), "unexpected end of element expression: " + s);
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            return Element::constant(ring, static_cast<int>(fp_norm(integer(), ring->p())));
        std::string g = name();
        int idx = ring->index_of(g);
        require(idx >= 0, "unknown generator '" + g + "' in '" + s + "'");
        long long e = 1;
        if (eat('^'))
            e = integer();
        Element r = Element::constant(ring, 1);
        Element gen = Element::generator(ring, static_cast<size_t>(idx));
        for (long long k = 0; k < e; ++k)
            r = r.mul_signed(gen);
        return r;
    }

    Element term()
    {
        Element r = factor();
        while (eat('*'))
            r = r.mul_signed(factor());
        return r;
    }

    Element expr()
    {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Element r = term();
        if (neg)
            r = r.scaled(-1);
        while (true) {
            skip_ws();
            if (i >= s.size())
                break;
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                fail("unexpected character '" + std::string(1, s[i]) + "' in '" + s + "'");
        }
        return r;
    }
};

}  // namespace

Element Element::parse(RingPtr ring, const std::string& text)
{
    std::string trimmed = text;
    ElemParser p{trimmed, 0, ring};
    p.skip_ws();
    if (p.i >= trimmed.size())
        return Element::zero(ring);
    return p.expr();
}

Element substitute(const Element& e, const RingPtr& target, const std::vector<Element>& images,
                   bool sign_exact)
{
    require(images.size() == e.ring()->ngens(), "substitute: one image per generator required");
    Element out = Element::zero(target);
    for (const auto& t : e.terms()) {
        Element m = Element::constant(target, t.coeff);
        for (size_t i = 0; i < t.mon.exp.size() && !m.is_zero(); ++i)
            for (int k = 0; k < t.mon.exp[i] && !m.is_zero(); ++k)
                m = sign_exact ? m.mul_signed(images[i]) : m.mul_plain(images[i]);
        out = out + m;
    }
    return out;
}

// --- Groebner --------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Element> gens, MonomialOrder ord)
    : ring_(std::move(ring)), ord_(ord)
{
    // square-zero relations of odd generators join the working ideal
    if (ring_->p() != 2) {
        for (size_t i = 0; i < ring_->ngens(); ++i) {
            if (ring_->odd(i)) {
                Monomial sq = Monomial::one(ring_->ngens());
                sq.exp[i] = 2;
                gens.push_back(Element::monomial(ring_, sq, 1));
            }
        }
    }
    buchberger(std::move(gens));
}

Element GroebnerBasis::normal_form(const Element& e) const
{
    require(e.ring() == ring_, "normal form: element from another ring");
    Element rem = Element::zero(ring_);
    Element cur = e;
    cur.sort_terms(ord_);
    while (!cur.is_zero()) {
        const Term lt = cur.lead(ord_);
        bool reduced = false;
        for (const auto& g : basis_) {
            const Term& glt = g.lead(ord_);
            if (glt.mon.divides(lt.mon)) {
                Monomial q = lt.mon.div(glt.mon);
                int c = fp_mul(lt.coeff, fp_inv(glt.coeff, ring_->p()), ring_->p());
                cur = cur - g.mul_plain_term(q, c);
                cur.sort_terms(ord_);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Element::monomial(ring_, lt.mon, lt.coeff);
            cur = cur - Element::monomial(ring_, lt.mon, lt.coeff);
            cur.sort_terms(ord_);
        }
    }
    rem.sort_terms(ord_);
    return rem;
}

void GroebnerBasis::buchberger(std::vector<Element> gens)
{
    for (auto& g : gens) {
        g.sort_terms(ord_);
        if (!g.is_zero())
            basis_.push_back(g.monic(ord_));
    }
    // drop exact duplicates up front
    std::sort(basis_.begin(), basis_.end(), [&](const Element& a, const Element& b) {
        return ord_.cmp(*ring_, a.lead(ord_).mon, b.lead(ord_).mon) < 0;
    });
    basis_.erase(std::unique(basis_.begin(), basis_.end(),
                             [](const Element& a, const Element& b) { return a == b; }),
                 basis_.end());

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis_.size(); ++i)
        for (size_t j = i + 1; j < basis_.size(); ++j)
            pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree first
        size_t best = 0;
        int best_deg = -1;
        for (size_t k = 0; k < pairs.size(); ++k) {
            const auto& [i, j] = pairs[k];
            Monomial l = Monomial::lcm(basis_[i].lead(ord_).mon, basis_[j].lead(ord_).mon);
            int d = l.degree(*ring_);
            if (best_deg < 0 || d < best_deg) {
                best_deg = d;
                best = k;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        const Monomial& mi = basis_[i].lead(ord_).mon;
        const Monomial& mj = basis_[j].lead(ord_).mon;
        Monomial l = Monomial::lcm(mi, mj);
        // Buchberger's coprimality criterion
        if (l.degree(*ring_) == mi.degree(*ring_) + mj.degree(*ring_)) {
            Monomial prod = mi.times(mj);
            if (prod == l)
                continue;
        }
        Element s = basis_[i].mul_plain_term(l.div(mi), 1) -
                    basis_[j].mul_plain_term(l.div(mj), 1);
        s.sort_terms(ord_);
        Element r = normal_form(s);
        if (!r.is_zero()) {
            r = r.monic(ord_);
            for (size_t k = 0; k < basis_.size(); ++k)
                pairs.emplace_back(k, basis_.size());
            basis_.push_back(std::move(r));
        }
    }
    interreduce();
}

void GroebnerBasis::interreduce()
{
    // remove members whose lead is divisible by another lead, then tail-reduce
    std::vector<Element> kept;
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Monomial& mi = basis_[i].lead(ord_).mon;
        bool redundant = false;
        for (size_t j = 0; j < basis_.size(); ++j) {
            if (i == j)
                continue;
            const Monomial& mj = basis_[j].lead(ord_).mon;
            if (mj.divides(mi) && !(mi == mj && j > i)) {
                if (!(mi == mj) || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant)
            kept.push_back(basis_[i]);
    }
    basis_ = std::move(kept);
    for (size_t i = 0; i < basis_.size(); ++i) {
        std::vector<Element> others;
        for (size_t j = 0; j < basis_.size(); ++j)
            if (j != i)
                others.push_back(basis_[j]);
        Element rem = Element::zero(ring_);
        Element cur = basis_[i];
        cur.sort_terms(ord_);
        while (!cur.is_zero()) {
            const Term lt = cur.lead(ord_);
            bool reduced = false;
            for (const auto& g : others) {
                const Term& glt = g.lead(ord_);
                if (glt.mon.divides(lt.mon)) {
                    Monomial q = lt.mon.div(glt.mon);
                    int c = fp_mul(lt.coeff, fp_inv(glt.coeff, ring_->p()), ring_->p());
                    cur = cur - g.mul_plain_term(q, c);
                    cur.sort_terms(ord_);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                rem = rem + Element::monomial(ring_, lt.mon, lt.coeff);
                cur = cur - Element::monomial(ring_, lt.mon, lt.coeff);
                cur.sort_terms(ord_);
            }
        }
        rem.sort_terms(ord_);
        require(!rem.is_zero(), "interreduce produced zero basis member");
        basis_[i] = rem.monic(ord_);
    }
    std::sort(basis_.begin(), basis_.end(), [&](const Element& a, const Element& b) {
        return ord_.cmp(*ring_, a.lead(ord_).mon, b.lead(ord_).mon) < 0;
    });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const
{
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const auto& g : basis_)
        out.push_back(g.lead(ord_).mon);
    return out;
}

std::vector<Monomial> GroebnerBasis::staircase() const
{
    std::vector<Monomial> lm = leading_monomials();
    std::vector<Monomial> out;
    for (size_t i = 0; i < lm.size(); ++i) {
        bool min = true;
        for (size_t j = 0; j < lm.size(); ++j)
            if (i != j && lm[j].divides(lm[i]) && !(lm[i] == lm[j] && j > i)) {
                min = false;
                break;
            }
        if (min)
            out.push_back(lm[i]);
    }
    return out;
}

// --- PresentedAlgebra ------------------------------------------------------

PresentedAlgebra::PresentedAlgebra(RingPtr ring, std::vector<Element> relations)
    : ring_(std::move(ring)), relations_(std::move(relations))
{
    for (const auto& r : relations_) {
        require(r.ring() == ring_, "relation from another ring");
        require(r.is_homogeneous(), "relations must be homogeneous");
        require(r.is_zero() || r.degree() > 0, "relation in degree 0 breaks connectivity");
    }
}

const GroebnerBasis& PresentedAlgebra::gb() const
{
    if (!gb_)
        gb_ = std::make_shared<const GroebnerBasis>(ring_, relations_);
    return *gb_;
}

int PresentedAlgebra::top_relation_degree() const
{
    int d = 0;
    for (const auto& r : relations_)
        if (!r.is_zero())
            d = std::max(d, r.degree());
    return d;
}

// --- signed multiply entry point -------------------------------------------

Element multiply(const Element& a, const Element& b)
{
    return a.mul_signed(b);
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder ord)
{
    for (const auto& g : ideal.gens)
        require(g.is_homogeneous(), "groebner_basis requires homogeneous generators");
    return GroebnerBasis(ideal.ring, ideal.gens, ord);
}

// --- Hilbert series ---------------------------------------------------------

namespace {

using Poly = std::vector<long long>;  // integer polynomial in t

Poly poly_sub(Poly a, const Poly& b)
{
    a.resize(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

Poly poly_shift(const Poly& a, int d)
{
    if (a.empty())
        return {};
    Poly r(a.size() + static_cast<size_t>(d), 0);
    for (size_t i = 0; i < a.size(); ++i)
        r[i + static_cast<size_t>(d)] = a[i];
    return r;
}

// divide a by (1 - t^d); returns quotient if exact
std::optional<Poly> poly_div_one_minus(const Poly& a, int d)
{
    if (a.empty())
        return Poly{};
    // q = a / (1 - t^d): q_i = a_i + q_{i-d}
    Poly q(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        long long v = a[i];
        if (i >= static_cast<size_t>(d))
            v += q[i - static_cast<size_t>(d)];
        q[i] = v;
    }
    // remainder check: (1 - t^d) * q == a requires top d coefficients of q to vanish
    size_t n = q.size();
    for (size_t i = n >= static_cast<size_t>(d) ? n - static_cast<size_t>(d) : 0; i < n; ++i)
        if (q[i] != 0)
            return std::nullopt;
    while (!q.empty() && q.back() == 0)
        q.pop_back();
    return q;
}

// numerator of HS(S/monomial ideal) over prod (1 - t^{deg gen}); classical
// pivot recursion on the minimal generators
Poly staircase_numerator(const GradedRing& ring, std::vector<Monomial> gens)
{
    // prune non-minimal generators
    std::vector<Monomial> min;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) {
                keep = false;
                break;
            }
        if (keep)
            min.push_back(gens[i]);
    }
    if (min.empty())
        return Poly{1};
    for (const auto& m : min)
        if (m.is_one())
            return Poly{};
    // pick the generator of largest degree as pivot
    size_t piv = 0;
    for (size_t i = 1; i < min.size(); ++i)
        if (min[i].degree(ring) > min[piv].degree(ring))
            piv = i;
    Monomial m = min[piv];
    std::vector<Monomial> rest;
    for (size_t i = 0; i < min.size(); ++i)
        if (i != piv)
            rest.push_back(min[i]);
    // N(I) = N(I') - t^{|m|} N(I' : m)
    std::vector<Monomial> colon;
    for (const auto& g : rest) {
        Monomial q = Monomial::one(m.exp.size());
        for (size_t i = 0; i < m.exp.size(); ++i)
            q.exp[i] = static_cast<uint16_t>(g.exp[i] > m.exp[i] ? g.exp[i] - m.exp[i] : 0);
        colon.push_back(q);
    }
    Poly a = staircase_numerator(ring, rest);
    Poly b = staircase_numerator(ring, colon);
    return poly_sub(a, poly_shift(b, m.degree(ring)));
}

}  // namespace

std::vector<long long> HilbertSeries::coefficients(int up_to) const
{
    Poly num = numerator;
    num.resize(static_cast<size_t>(up_to) + 1, 0);
    std::vector<long long> c(num.begin(), num.begin() + up_to + 1);
    for (int d : denominator_degrees) {
        // multiply by 1/(1 - t^d): prefix sums with stride d
        for (size_t i = static_cast<size_t>(d); i <= static_cast<size_t>(up_to); ++i)
            c[i] += c[i - static_cast<size_t>(d)];
    }
    return c;
}

std::string HilbertSeries::str() const
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (size_t i = 0; i < numerator.size(); ++i) {
        if (numerator[i] == 0)
            continue;
        if (!first)
            os << (numerator[i] > 0 ? " + " : " - ");
        else if (numerator[i] < 0)
            os << "-";
        first = false;
        long long a = std::llabs(numerator[i]);
        if (a != 1 || i == 0)
            os << a;
        if (i >= 1) {
            os << "t";
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    os << ")";
    for (int d : denominator_degrees)
        os << "/(1-t^" << d << ")";
    return os.str();
}

HilbertSeries hilbert_series(const PresentedAlgebra& a)
{
    const auto& ring = *a.ring();
    Poly num = staircase_numerator(ring, a.gb().staircase());
    std::vector<int> denom;
    for (size_t i = 0; i < ring.ngens(); ++i)
        denom.push_back(ring.gen(i).degree);
    std::sort(denom.begin(), denom.end());
    // cancel factors dividing the numerator, smallest degree first
    std::vector<int> kept;
    for (int d : denom) {
        auto q = poly_div_one_minus(num, d);
        if (q)
            num = *q;
        else
            kept.push_back(d);
    }
    HilbertSeries hs;
    hs.numerator = std::move(num);
    hs.denominator_degrees = std::move(kept);
    // sanity: expansion must be non-negative through a small window
    for (long long c : hs.coefficients(24))
        require(c >= 0, "Hilbert series expansion went negative; presentation is inconsistent");
    return hs;
}

std::vector<long long> graded_dimensions(const PresentedAlgebra& a, int up_to)
{
    return hilbert_series(a).coefficients(up_to);
}

int krull_dimension(const PresentedAlgebra& a)
{
    const auto& ring = *a.ring();
    std::vector<Monomial> stairs = a.gb().staircase();
    size_t n = ring.ngens();
    require(n <= 20, "krull_dimension: too many generators for subset enumeration");
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        // is the variable set `mask` independent (no staircase gen supported in it)?
        bool independent = true;
        for (const auto& m : stairs) {
            bool inside = true;
            for (size_t i = 0; i < n; ++i)
                if (m.exp[i] && !(mask & (1u << i))) {
                    inside = false;
                    break;
                }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// --- ring maps, kernels, intersections --------------------------------------

namespace {

// monomials of an element all share one odd support
bool sign_coherent(const Element& e)
{
    const auto& r = *e.ring();
    if (r.p() == 2 || e.is_zero())
        return true;
    std::vector<bool> support;
    bool first = true;
    for (const auto& t : e.terms()) {
        std::vector<bool> s(r.ngens(), false);
        for (size_t i = 0; i < r.ngens(); ++i)
            s[i] = r.odd(i) && t.mon.exp[i] > 0;
        if (first) {
            support = s;
            first = false;
        }
        else if (s != support)
            return false;
    }
    return true;
}

// combined ring: target generators first (eliminated), then source generators
struct GraphRing {
    RingPtr mixed;
    size_t ntarget;
    RingPtr source;
    RingPtr target;
};

GraphRing make_graph_ring(const PresentedAlgebra& source, const PresentedAlgebra& target)
{
    std::vector<Generator> gens;
    for (const auto& g : target.ring()->gens())
        gens.push_back({"T#" + g.name, g.degree, g.parity});
    for (const auto& g : source.ring()->gens())
        gens.push_back({"S#" + g.name, g.degree, g.parity});
    GraphRing gr;
    gr.mixed = GradedRing::make(source.ring()->prime(), std::move(gens));
    gr.ntarget = target.ring()->ngens();
    gr.source = source.ring();
    gr.target = target.ring();
    return gr;
}

Element lift_to_mixed(const GraphRing& gr, const Element& e, bool from_target)
{
    size_t off = from_target ? 0 : gr.ntarget;
    size_t n = gr.mixed->ngens();
    Element out = Element::zero(gr.mixed);
    for (const auto& t : e.terms()) {
        Monomial m = Monomial::one(n);
        for (size_t i = 0; i < t.mon.exp.size(); ++i)
            m.exp[off + i] = t.mon.exp[i];
        out = out + Element::monomial(gr.mixed, std::move(m), t.coeff);
    }
    return out;
}

// extract an element supported purely on the source block
std::optional<Element> project_to_source(const GraphRing& gr, const Element& e)
{
    Element out = Element::zero(gr.source);
    for (const auto& t : e.terms()) {
        Monomial m = Monomial::one(gr.source->ngens());
        for (size_t i = 0; i < gr.ntarget; ++i)
            if (t.mon.exp[i])
                return std::nullopt;
        for (size_t i = gr.ntarget; i < t.mon.exp.size(); ++i)
            m.exp[i - gr.ntarget] = t.mon.exp[i];
        out = out + Element::monomial(gr.source, std::move(m), t.coeff);
    }
    return out;
}

}  // namespace

Element apply_ring_map(const std::vector<Element>& images, const PresentedAlgebra& target,
                       const Element& e)
{
    Element v = substitute(e, target.ring(), images, /*sign_exact=*/true);
    return target.nf(v);
}

Ideal kernel_of_ring_map(const std::vector<Element>& images, const PresentedAlgebra& source,
                         const PresentedAlgebra& target)
{
    const auto& sring = source.ring();
    require(images.size() == sring->ngens(), "kernel_of_ring_map: one image per generator");
    for (size_t i = 0; i < images.size(); ++i) {
        require(images[i].ring() == target.ring(), "image in wrong ring");
        if (!images[i].is_zero())
            require(images[i].is_homogeneous() && images[i].degree() == sring->gen(i).degree,
                    "map does not preserve degrees at generator " + sring->gen(i).name);
        require(sign_coherent(images[i]),
                "odd-p kernel computation requires sign-coherent generator images");
    }
    // the map must carry relations to relations
    for (const auto& rel : source.relations()) {
        Element v = apply_ring_map(images, target, rel);
        require(v.is_zero(), "map does not respect relations: image of '" + rel.str() +
                                 "' is '" + v.str() + "'");
    }

    GraphRing gr = make_graph_ring(source, target);
    std::vector<Element> gens;
    for (const auto& rel : target.relations())
        gens.push_back(lift_to_mixed(gr, rel, true));
    for (size_t i = 0; i < sring->ngens(); ++i) {
        Element ai = Element::generator(gr.mixed, gr.ntarget + i);
        gens.push_back(ai - lift_to_mixed(gr, images[i], true));
    }
    MonomialOrder elim{gr.ntarget};
    GroebnerBasis gb(gr.mixed, std::move(gens), elim);

    Ideal out{sring, {}};
    for (const auto& g : gb.basis()) {
        auto e = project_to_source(gr, g);
        if (!e)
            continue;
        Element r = source.nf(*e);
        if (!r.is_zero())
            out.gens.push_back(r);
    }

    // sign correction at odd p: rescale each monomial m by the unit comparing
    // the Koszul-exact evaluation of m with the plain one, so the returned
    // generators really lie in the graded-commutative kernel
    if (sring->p() != 2) {
        for (auto& g : out.gens) {
            Element fixed = Element::zero(sring);
            for (const auto& t : g.terms()) {
                Element mono = Element::monomial(sring, t.mon, 1);
                Element vs = substitute(mono, target.ring(), images, true);
                Element vp = substitute(mono, target.ring(), images, false);
                int c = t.coeff;
                if (!vp.is_zero()) {
                    // vs == +-vp when images are sign-coherent
                    if (!(vs == vp)) {
                        require(vs == vp.scaled(-1),
                                "kernel sign correction failed: images not sign-coherent");
                        c = fp_neg(c, sring->p());
                    }
                }
                fixed = fixed + Element::monomial(sring, t.mon, c);
            }
            // the corrected generator must genuinely die under the signed map
            Element check = apply_ring_map(images, target, fixed);
            require(check.is_zero(), "kernel generator fails signed evaluation after correction");
            g = fixed;
        }
    }
    return out;
}

Ideal intersect_ideals(const PresentedAlgebra& a, const Ideal& i, const Ideal& j)
{
    require(i.ring == a.ring() && j.ring == a.ring(), "intersect_ideals: ring mismatch");
    // auxiliary degree-0-style variable handled as an honest block: build a
    // ring with t first, eliminate it.  t gets degree 1 and every generator
    // of tI + (1-t)J is made homogeneous by hand is unnecessary: we use the
    // weighted order with an elimination block, which only needs t > rest.
    std::vector<Generator> gens;
    gens.push_back({"t#", 1, Parity::Even});
    for (const auto& g : a.ring()->gens())
        gens.push_back({g.name, g.degree, g.parity});
    RingPtr mixed = GradedRing::make(a.ring()->prime(), gens);

    enum class Lift { Plain, TimesT, TimesOneMinusT };
    auto lift = [&](const Element& e, Lift mode) {
        Element out = Element::zero(mixed);
        for (const auto& t : e.terms()) {
            Monomial m = Monomial::one(mixed->ngens());
            for (size_t k = 0; k < t.mon.exp.size(); ++k)
                m.exp[k + 1] = t.mon.exp[k];
            Monomial mt = m;
            mt.exp[0] = 1;
            switch (mode) {
                case Lift::Plain:
                    out = out + Element::monomial(mixed, m, t.coeff);
                    break;
                case Lift::TimesT:
                    out = out + Element::monomial(mixed, mt, t.coeff);
                    break;
                case Lift::TimesOneMinusT:
                    out = out + Element::monomial(mixed, m, t.coeff);
                    out = out + Element::monomial(mixed, mt, fp_neg(t.coeff, mixed->p()));
                    break;
            }
        }
        return out;
    };

    // t*(I + rels) + (1-t)*(J + rels) = rels + t*I + (1-t)*J as ideals
    std::vector<Element> work;
    for (const auto& rel : a.relations())
        work.push_back(lift(rel, Lift::Plain));
    for (const auto& g : i.gens)
        work.push_back(lift(g, Lift::TimesT));
    for (const auto& g : j.gens)
        work.push_back(lift(g, Lift::TimesOneMinusT));

    MonomialOrder elim{1};
    GroebnerBasis gb(mixed, std::move(work), elim);

    Ideal out{a.ring(), {}};
    for (const auto& g : gb.basis()) {
        bool has_t = false;
        Element e = Element::zero(a.ring());
        for (const auto& t : g.terms()) {
            if (t.mon.exp[0]) {
                has_t = true;
                break;
            }
            Monomial m = Monomial::one(a.ring()->ngens());
            for (size_t k = 1; k < t.mon.exp.size(); ++k)
                m.exp[k - 1] = t.mon.exp[k];
            e = e + Element::monomial(a.ring(), std::move(m), t.coeff);
        }
        if (has_t)
            continue;
        Element r = a.nf(e);
        if (!r.is_zero())
            out.gens.push_back(r);
    }

    // verify membership both ways on generators
    GroebnerBasis gi(a.ring(), [&] {
        std::vector<Element> g = a.relations();
        g.insert(g.end(), i.gens.begin(), i.gens.end());
        return g;
    }());
    GroebnerBasis gj(a.ring(), [&] {
        std::vector<Element> g = a.relations();
        g.insert(g.end(), j.gens.begin(), j.gens.end());
        return g;
    }());
    for (const auto& g : out.gens)
        require(gi.contains(g) && gj.contains(g),
                "intersection generator fails membership cross-check");
    return out;
}

Ideal colon_ideal(const PresentedAlgebra& a, const Ideal& i, const Element& f)
{
    require(!f.is_zero(), "colon by zero");
    // lift to the free polynomial ring: ((I + rels) : f) there equals the
    // colon in the quotient
    Ideal lifted{a.ring(), a.relations()};
    lifted.gens.insert(lifted.gens.end(), i.gens.begin(), i.gens.end());
    if (a.ring()->p() != 2) {
        for (size_t k = 0; k < a.ring()->ngens(); ++k)
            if (a.ring()->odd(k)) {
                Monomial sq = Monomial::one(a.ring()->ngens());
                sq.exp[k] = 2;
                lifted.gens.push_back(Element::monomial(a.ring(), sq, 1));
            }
    }
    Ideal fid{a.ring(), {f}};
    PresentedAlgebra free_alg(a.ring(), {});
    Ideal meet = intersect_ideals(free_alg, lifted, fid);
    // divide each generator by f in the free commutative ring
    MonomialOrder ord{};
    Ideal out{a.ring(), {}};
    for (const auto& g : meet.gens) {
        Element cur = g;
        Element q = Element::zero(a.ring());
        Element fm = f;
        fm.sort_terms(ord);
        while (!cur.is_zero()) {
            const Term& lt = cur.lead(ord);
            const Term& fl = fm.lead(ord);
            require(fl.mon.divides(lt.mon), "colon division failed");
            Monomial qm = lt.mon.div(fl.mon);
            int c = fp_mul(lt.coeff, fp_inv(fl.coeff, a.ring()->p()), a.ring()->p());
            q = q + Element::monomial(a.ring(), qm, c);
            cur = cur - fm.mul_plain_term(qm, c);
            cur.sort_terms(ord);
        }
        Element r = a.nf(q);
        if (!r.is_zero())
            out.gens.push_back(r);
    }
    return out;
}

bool subalgebra_contains(const PresentedAlgebra& target, const std::vector<Element>& subalg_gens,
                         const Element& v)
{
    // tag-variable membership: eliminate the target block; v lies in the
    // subalgebra iff its normal form only involves tags
    std::vector<Generator> gens;
    for (const auto& g : target.ring()->gens())
        gens.push_back({g.name, g.degree, g.parity});
    int tag0 = static_cast<int>(gens.size());
    for (size_t i = 0; i < subalg_gens.size(); ++i) {
        require(!subalg_gens[i].is_zero() && subalg_gens[i].is_homogeneous(),
                "subalgebra generators must be nonzero homogeneous");
        Parity par = Parity::Even;
        if (target.ring()->p() != 2 && subalg_gens[i].degree() % 2 == 1)
            par = Parity::Odd;
        gens.push_back({"z#" + std::to_string(i), subalg_gens[i].degree(), par});
    }
    RingPtr mixed = GradedRing::make(target.ring()->prime(), gens);
    size_t nt = target.ring()->ngens();

    auto lift_target = [&](const Element& e) {
        Element out = Element::zero(mixed);
        for (const auto& t : e.terms()) {
            Monomial m = Monomial::one(mixed->ngens());
            for (size_t k = 0; k < t.mon.exp.size(); ++k)
                m.exp[k] = t.mon.exp[k];
            out = out + Element::monomial(mixed, std::move(m), t.coeff);
        }
        return out;
    };

    std::vector<Element> work;
    for (const auto& rel : target.relations())
        work.push_back(lift_target(rel));
    for (size_t i = 0; i < subalg_gens.size(); ++i)
        work.push_back(Element::generator(mixed, tag0 + i) - lift_target(subalg_gens[i]));
    MonomialOrder elim{nt};
    GroebnerBasis gb(mixed, std::move(work), elim);

    Element r = gb.normal_form(lift_target(target.nf(v)));
    for (const auto& t : r.terms())
        for (size_t k = 0; k < nt; ++k)
            if (t.mon.exp[k])
                return false;
    return true;
}

bool is_nilpotent(const PresentedAlgebra& a, const Element& g, NilpotencyOptions opt)
{
    require(!g.is_zero() && g.is_homogeneous() && g.degree() > 0,
            "nilpotency test wants a positive-degree homogeneous element");
    int top = a.top_relation_degree();
    long long bound =
        std::max<long long>(2, (static_cast<long long>(std::max(top, 1)) *
                                    static_cast<long long>(a.ring()->ngens()) +
                                g.degree() - 1) /
                                   g.degree());
    require(bound <= opt.power_cap,
            "nilpotency bound " + std::to_string(bound) + " exceeds cap " +
                std::to_string(opt.power_cap));
    Element pw = a.nf(g);
    for (long long k = 1; k <= bound; ++k) {
        if (pw.is_zero())
            return true;
        pw = a.nf(pw.mul_signed(g));
    }
    return pw.is_zero();
}

int radical_nilpotence_degree(const PresentedAlgebra& a, NilpotencyOptions opt)
{
    const auto& ring = *a.ring();
    std::vector<Element> rad;
    std::vector<int> nilpotency_order;  // least k with g^k = 0
    for (size_t i = 0; i < ring.ngens(); ++i) {
        Element g = Element::generator(a.ring(), i);
        bool nil = ring.odd(i) || is_nilpotent(a, g, opt);
        if (!nil)
            continue;
        rad.push_back(g);
        Element pw = a.nf(g);
        int k = 1;
        while (!pw.is_zero()) {
            pw = a.nf(pw.mul_signed(g));
            ++k;
        }
        nilpotency_order.push_back(k);
    }
    if (rad.empty())
        return 0;

    // rad^d != 0 iff some product of d radical generators survives; exponents
    // beyond a generator's nilpotency order are pointless
    int best = 0;
    std::function<void(size_t, int, const Element&)> walk = [&](size_t idx, int total,
                                                                const Element& acc) {
        if (acc.is_zero())
            return;
        best = std::max(best, total);
        if (idx == rad.size())
            return;
        walk(idx + 1, total, acc);
        Element cur = acc;
        for (int k = 1; k <= nilpotency_order[idx] - 1; ++k) {
            cur = a.nf(cur.mul_signed(rad[idx]));
            if (cur.is_zero())
                break;
            walk(idx + 1, total + k, cur);
        }
    };
    walk(0, 0, Element::constant(a.ring(), 1));
    return best;
}

PresentedAlgebra tensor_product(const PresentedAlgebra& a, const PresentedAlgebra& b)
{
    require(a.ring()->p() == b.ring()->p(), "tensor product needs equal primes");
    std::vector<Generator> gens;
    for (const auto& g : a.ring()->gens())
        gens.push_back(g);
    for (const auto& g : b.ring()->gens()) {
        Generator h = g;
        while (true) {
            bool clash = false;
            for (const auto& e : gens)
                if (e.name == h.name)
                    clash = true;
            if (!clash)
                break;
            h.name += "'";
        }
        gens.push_back(h);
    }
    RingPtr ring = GradedRing::make(a.ring()->prime(), gens);
    size_t na = a.ring()->ngens();

    auto lift = [&](const Element& e, size_t off) {
        Element out = Element::zero(ring);
        for (const auto& t : e.terms()) {
            Monomial m = Monomial::one(ring->ngens());
            for (size_t k = 0; k < t.mon.exp.size(); ++k)
                m.exp[k + off] = t.mon.exp[k];
            out = out + Element::monomial(ring, std::move(m), t.coeff);
        }
        return out;
    };
    std::vector<Element> rels;
    for (const auto& r : a.relations())
        rels.push_back(lift(r, 0));
    for (const auto& r : b.relations())
        rels.push_back(lift(r, na));
    return PresentedAlgebra(ring, rels);
}

}  // namespace topnil
