#include "topnil/d0.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace topnil {

namespace {

// linear form sum l_i * v_i over the chosen generator block of H_C
Element linear_form(const RingPtr& he_ring, const std::vector<int>& l, int rank, int block)
{
    Element out = Element::zero(he_ring);
    for (int i = 0; i < rank; ++i)
        if (l[static_cast<size_t>(i)])
            out = out + Element::generator(he_ring, static_cast<size_t>(block == 0 ? i
                                                                                   : rank + i))
                            .scaled(l[static_cast<size_t>(i)]);
    return out;
}

int subspace_dim(const std::vector<std::vector<int>>& vecs, int p)
{
    if (vecs.empty())
        return 0;
    std::vector<std::vector<int>> m = vecs;
    size_t rows = m.size(), cols = m[0].size();
    size_t rr = 0;
    int rank = 0;
    for (size_t c = 0; c < cols && rr < rows; ++c) {
        size_t piv = rr;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rr]);
        int inv = fp_inv(m[rr][c], p);
        for (size_t j = 0; j < cols; ++j)
            m[rr][j] = fp_mul(m[rr][j], inv, p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rr || m[r][c] == 0)
                continue;
            int f = m[r][c];
            for (size_t j = 0; j < cols; ++j)
                m[r][j] = fp_sub(m[r][j], fp_mul(f, m[rr][j], p), p);
        }
        ++rr;
        ++rank;
    }
    return rank;
}

}  // namespace

DuflotData duflot_data(const UnstablePresentation& r, const RectorPair& center,
                       const std::vector<Element>& catalog_lifts)
{
    DuflotData out;
    out.center_rank = center.rank;
    int p = r.ring()->p();
    int c = center.rank;
    if (c == 0) {
        out.e_value = 0;
        out.hyp_duflot = true;
        require(catalog_lifts.empty(), "trivial center admits no Duflot lifts");
        return out;
    }
    UnstablePresentation he = standard_he(r.ring()->prime(), c);
    std::vector<Element> image_gens;
    for (const auto& img : center.images)
        if (!img.is_zero())
            image_gens.push_back(img);

    const int exponent_cap = 7;
    auto powered_in_image = [&](const Element& form, long long power) {
        Element v = Element::constant(he.ring(), 1);
        for (long long k = 0; k < power; ++k)
            v = v.mul_signed(form);
        return subalgebra_contains(*he.algebra, image_gens, v);
    };

    long long total_vectors = 1;
    for (int i = 0; i < c; ++i)
        total_vectors *= p;
    auto all_vectors = [&]() {
        std::vector<std::vector<int>> vs;
        for (long long code = 1; code < total_vectors; ++code) {
            std::vector<int> v(static_cast<size_t>(c));
            long long cc = code;
            for (int i = 0; i < c; ++i) {
                v[static_cast<size_t>(i)] = static_cast<int>(cc % p);
                cc /= p;
            }
            vs.push_back(v);
        }
        return vs;
    };

    if (p == 2) {
        // dims of W_j = { l : (linear form l)^{2^j} in im }
        std::vector<int> dims;
        long long power = 1;
        for (int j = 0; j <= exponent_cap; ++j) {
            std::vector<std::vector<int>> qual;
            for (const auto& v : all_vectors())
                if (powered_in_image(linear_form(he.ring(), v, c, 0), power))
                    qual.push_back(v);
            dims.push_back(subspace_dim(qual, p));
            if (dims.back() == c)
                break;
            power *= 2;
        }
        require(dims.back() == c, "image not of Borel shape: powers do not exhaust H_C^1");
        int prev = 0;
        for (size_t j = 0; j < dims.size(); ++j) {
            for (int k = 0; k < dims[j] - prev; ++k)
                out.exponents.push_back(static_cast<int>(j));
            prev = dims[j];
        }
        for (int j : out.exponents)
            out.e_value += (1LL << j) - 1;
        out.hyp_duflot = true;
    }
    else {
        // exterior lines present in the image
        std::vector<std::vector<int>> x_qual;
        for (const auto& v : all_vectors())
            if (subalgebra_contains(*he.algebra, image_gens, linear_form(he.ring(), v, c, 0)))
                x_qual.push_back(v);
        out.full_lines = subspace_dim(x_qual, p);
        int b = c - out.full_lines;
        // y-side flag dims
        std::vector<int> dims;
        long long power = 1;
        for (int j = 0; j <= exponent_cap; ++j) {
            std::vector<std::vector<int>> qual;
            for (const auto& v : all_vectors())
                if (powered_in_image(linear_form(he.ring(), v, c, 1), power))
                    qual.push_back(v);
            dims.push_back(subspace_dim(qual, p));
            if (dims.back() == c)
                break;
            power *= p;
        }
        require(dims.back() == c, "image not of Borel shape: y-powers do not exhaust");
        // the full lines account for out.full_lines of dims[0]
        require(dims[0] >= out.full_lines, "Borel shape inconsistency");
        int prev = out.full_lines;
        std::vector<int> exps;
        for (size_t j = 0; j < dims.size(); ++j) {
            for (int k = 0; k < dims[j] - prev; ++k)
                exps.push_back(static_cast<int>(j));
            prev = dims[j];
        }
        require(static_cast<int>(exps.size()) == b, "Borel exponent count mismatch");
        out.exponents = exps;
        for (int j : out.exponents) {
            long long a = 2;
            for (int k = 0; k < j; ++k)
                a *= p;
            out.e_value += a - 1;  // a_i = 2 p^{j_i}
        }
        out.hyp_duflot = out.full_lines == 0;
    }

    // validate the catalog lifts: right count, right degrees, images generate
    // the image subalgebra
    out.lifts = catalog_lifts;
    size_t expected = out.exponents.size() +
                      (p == 2 ? 0 : static_cast<size_t>(2 * out.full_lines));
    require(out.lifts.size() == expected,
            "Duflot lift count mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(out.lifts.size()));
    std::vector<Element> lift_images;
    for (const auto& l : out.lifts) {
        require(!l.is_zero() && l.is_homogeneous(), "Duflot lifts must be nonzero homogeneous");
        Element img = apply_ring_map(center.images, *he.algebra, l);
        require(!img.is_zero(), "Duflot lift restricts to zero");
        lift_images.push_back(img);
    }
    for (const auto& img : lift_images)
        require(subalgebra_contains(*he.algebra, image_gens, img),
                "Duflot lift image escapes the restriction image");
    for (const auto& g : image_gens)
        require(subalgebra_contains(*he.algebra, lift_images, g),
                "Duflot lift images fail to generate the restriction image");
    return out;
}

EntryAnalysis analyze_pairs(const CatalogEntry& e)
{
    EntryAnalysis out;
    CentralPoset cp = maximal_central(e.algebra, e.pairs, OracleKind::Catalog);
    out.center_index = cp.maximum;
    out.center_rank = cp.rank;
    for (const auto& pr : e.pairs)
        out.max_rank = std::max(out.max_rank, pr.rank);
    out.defect = out.max_rank - out.center_rank;
    return out;
}

namespace {

/// pairs strictly above the center (excluding pairs isomorphic to it)
std::vector<size_t> pairs_strictly_above_center(const CatalogEntry& e, size_t center_idx)
{
    std::vector<size_t> out;
    for (size_t i = 0; i < e.pairs.size(); ++i) {
        if (i == center_idx)
            continue;
        if (!poset_leq(e.algebra, e.pairs[center_idx], e.pairs[i]))
            continue;
        if (pairs_isomorphic(e.algebra, e.pairs[i], e.pairs[center_idx]))
            continue;
        out.push_back(i);
    }
    return out;
}

const CatalogComponent* component_at(const CatalogEntry& e, const std::string& pair_name)
{
    for (const auto& c : e.components)
        if (c.pair_name == pair_name)
            return &c;
    return nullptr;
}

}  // namespace

CEssData cess(const Catalog& cat, const CatalogEntry& e)
{
    CEssData out;
    EntryAnalysis an = analyze_pairs(e);
    std::vector<size_t> above = pairs_strictly_above_center(e, an.center_index);
    if (above.empty()) {
        // empty product: CEss(R) = R.  Guard against an incomplete pair list:
        // by the Quillen-dimension identity the defect is visible in the
        // Krull dimension
        require(krull_dimension(*e.algebra.algebra) == an.center_rank,
                "entry " + e.id + ": no pairs above the center but the Krull dimension "
                "exceeds the center rank; pair data incomplete");
        out.whole_ring = true;
        out.zero = false;
        const PresentedAlgebra& a = *e.algebra.algebra;
        LocalCohomologyProfile prof = local_cohomology_degrees(a);
        out.dim = prof.dimension();
        out.depth = prof.depth();
        out.cohen_macaulay = out.dim == out.depth;
        return out;
    }
    std::optional<Ideal> meet;
    for (size_t idx : above) {
        const CatalogComponent* comp = component_at(e, e.pairs[idx].name);
        require(comp != nullptr, "entry " + e.id + ": missing component data for pair '" +
                                     e.pairs[idx].name + "'");
        const CatalogEntry& t = cat.resolve(comp->tref);
        std::vector<Element> rho = component_images(cat, e, *comp);
        require(check_a_linearity(e.algebra, t.algebra, rho),
                "component map at '" + comp->pair_name + "' of " + e.id + " is not A-linear");
        Ideal ker = kernel_of_ring_map(rho, *e.algebra.algebra, *t.algebra.algebra);
        if (!meet)
            meet = ker;
        else
            meet = intersect_ideals(*e.algebra.algebra, *meet, ker);
    }
    out.ideal = *meet;
    out.zero = out.ideal.gens.empty();
    if (!out.zero) {
        GradedModule m = module_of_ideal(*e.algebra.algebra, out.ideal);
        LocalCohomologyProfile prof = local_cohomology_degrees(m);
        out.dim = prof.dimension();
        out.depth = prof.depth();
        out.cohen_macaulay = out.dim == out.depth;
    }
    return out;
}

std::optional<long long> e_indec(const Catalog& cat, const CatalogEntry& e,
                                 const CEssData& cess_data, const DuflotData& duflot)
{
    (void)cat;
    if (cess_data.zero)
        return std::nullopt;
    const PresentedAlgebra& a = *e.algebra.algebra;

    // route 1: predicted value e(R) + a_c(R) + c(R)
    LocalCohomologyProfile prof = local_cohomology_degrees(a);
    int c = duflot.center_rank;
    require(static_cast<size_t>(c) < prof.a.size() && prof.a[static_cast<size_t>(c)].has_value(),
            "a_{c(R)}(R) vanishes; Duflot/center data inconsistent for " + e.id);
    long long predicted = duflot.e_value + *prof.a[static_cast<size_t>(c)] + c;

    // route 2: direct top degree of Q_B CEss = CEss / (lifts) CEss
    Ideal lift_ideal{a.ring(), duflot.lifts};
    int slack = 6;
    long long top = -1;
    int bound = static_cast<int>(predicted) + slack;
    require(bound >= 0, "negative degree bound for Q_B CEss");
    std::vector<long long> hf_num, hf_den;
    if (cess_data.whole_ring) {
        // Q_B R = R/(lifts)
        std::vector<Element> rels = a.relations();
        for (const auto& l : duflot.lifts)
            rels.push_back(l);
        PresentedAlgebra q(a.ring(), rels);
        hf_num = graded_dimensions(q, bound);
        hf_den.assign(hf_num.size(), 0);
    }
    else {
        // HF(CEss)_d - HF(lifts * CEss)_d
        std::vector<Element> rels_i = a.relations();
        for (const auto& g : cess_data.ideal.gens)
            rels_i.push_back(g);
        PresentedAlgebra mod_i(a.ring(), rels_i);
        std::vector<long long> hf_r = graded_dimensions(a, bound);
        std::vector<long long> hf_mod_i = graded_dimensions(mod_i, bound);

        std::vector<Element> prod_gens;
        for (const auto& l : duflot.lifts)
            for (const auto& g : cess_data.ideal.gens)
                prod_gens.push_back(a.nf(l.mul_signed(g)));
        std::vector<Element> rels_p = a.relations();
        for (const auto& g : prod_gens)
            if (!g.is_zero())
                rels_p.push_back(g);
        PresentedAlgebra mod_p(a.ring(), rels_p);
        std::vector<long long> hf_mod_p = graded_dimensions(mod_p, bound);

        hf_num.resize(static_cast<size_t>(bound) + 1);
        hf_den.assign(static_cast<size_t>(bound) + 1, 0);
        for (int d = 0; d <= bound; ++d) {
            long long ideal_d = hf_r[static_cast<size_t>(d)] - hf_mod_i[static_cast<size_t>(d)];
            long long prod_d = hf_r[static_cast<size_t>(d)] - hf_mod_p[static_cast<size_t>(d)];
            hf_num[static_cast<size_t>(d)] = ideal_d - prod_d;
        }
    }
    for (int d = 0; d <= bound; ++d)
        if (hf_num[static_cast<size_t>(d)] - (hf_den.empty() ? 0 : hf_den[static_cast<size_t>(d)]) >
            0)
            top = d;
    require(top == predicted, "e_indec cross-check failed for " + e.id + ": direct top degree " +
                                  std::to_string(top) + " vs e + a_c + c = " +
                                  std::to_string(predicted));

    // freeness of CEss over the Duflot algebra, by Hilbert-series divisibility
    if (!duflot.lifts.empty()) {
        std::vector<long long> lhs, qb = hf_num;
        // HF(CEss) must equal HF(B) * HF(Q_B CEss); polynomial lifts give
        // geometric factors, square-zero lifts give (1 + t^d)
        std::vector<long long> hfb(static_cast<size_t>(bound) + 1, 0);
        hfb[0] = 1;
        for (const auto& l : duflot.lifts) {
            int dl = l.degree();
            bool square_zero = a.nf(l.mul_signed(l)).is_zero();
            if (square_zero) {
                for (int d = bound; d >= dl; --d)
                    hfb[static_cast<size_t>(d)] += hfb[static_cast<size_t>(d - dl)];
            }
            else {
                for (int d = dl; d <= bound; ++d)
                    hfb[static_cast<size_t>(d)] += hfb[static_cast<size_t>(d - dl)];
            }
        }
        std::vector<long long> conv(static_cast<size_t>(bound) + 1, 0);
        for (int i = 0; i <= bound; ++i)
            for (int j = 0; i + j <= bound; ++j)
                conv[static_cast<size_t>(i + j)] +=
                    hfb[static_cast<size_t>(i)] * qb[static_cast<size_t>(j)];
        std::vector<long long> hf_cess(static_cast<size_t>(bound) + 1, 0);
        if (cess_data.whole_ring)
            hf_cess = graded_dimensions(a, bound);
        else {
            std::vector<Element> rels_i = a.relations();
            for (const auto& g : cess_data.ideal.gens)
                rels_i.push_back(g);
            PresentedAlgebra mod_i(a.ring(), rels_i);
            std::vector<long long> hf_r = graded_dimensions(a, bound);
            std::vector<long long> hf_mod_i = graded_dimensions(mod_i, bound);
            for (int d = 0; d <= bound; ++d)
                hf_cess[static_cast<size_t>(d)] =
                    hf_r[static_cast<size_t>(d)] - hf_mod_i[static_cast<size_t>(d)];
        }
        for (int d = 0; d <= bound; ++d)
            require(conv[static_cast<size_t>(d)] == hf_cess[static_cast<size_t>(d)],
                    "CEss is not Hilbert-free over the Duflot algebra for " + e.id);
        (void)lhs;
    }
    return top;
}

D0Bound d0_upper_bound(const Catalog& cat, const CatalogEntry& e)
{
    EntryAnalysis an = analyze_pairs(e);
    std::vector<size_t> comps = pairs_strictly_above_center(e, an.center_index);
    comps.insert(comps.begin(), an.center_index);

    D0Bound out;
    bool any = false;
    for (size_t idx : comps) {
        const RectorPair& pr = e.pairs[idx];
        const CatalogComponent* comp = component_at(e, pr.name);
        require(comp != nullptr,
                "entry " + e.id + ": missing component data for pair '" + pr.name + "'");
        const CatalogEntry& t = cat.resolve(comp->tref);
        std::vector<Element> rho = component_images(cat, e, *comp);
        require(check_a_linearity(e.algebra, t.algebra, rho),
                "component map at '" + comp->pair_name + "' of " + e.id + " is not A-linear");

        ComponentCertificate cert;
        cert.pair_name = pr.name;
        cert.tref = comp->tref;
        EntryAnalysis tan = analyze_pairs(t);
        cert.center_rank = tan.center_rank;
        cert.depth = depth(*t.algebra.algebra);
        cert.qualifying = cert.depth == cert.center_rank;
        if (cert.qualifying) {
            DuflotData dd =
                duflot_data(t.algebra, t.pairs[tan.center_index], t.duflot_lifts);
            // group cohomology always admits a polynomial Duflot algebra
            // (split off the elementary abelian factor), so grouplike entries
            // pass even with exterior classes in the image
            require(dd.hyp_duflot || t.grouplike,
                    "component '" + pr.name + "' of " + e.id +
                        " violates the polynomial-Duflot hypothesis");
            cert.e_value = dd.e_value;
            cert.regularity = regularity(*t.algebra.algebra);
            cert.bound = cert.e_value + cert.regularity;
            // finite-group shortcut cross-check: reg = 0
            if (!t.group_name.empty())
                require(cert.regularity == 0,
                        "finite-group component has nonzero regularity: " + t.id);
            if (!any || cert.bound > out.value) {
                out.value = cert.bound;
                out.witness = pr.name;
            }
            any = true;
        }
        out.components.push_back(cert);
    }
    require(any, "no qualifying component for the d0 bound of " + e.id);
    return out;
}

// --- d0 calculus ---------------------------------------------------------------

namespace {

constexpr long long kInf = 1LL << 60;

struct ExprParser {
    const std::string& s;
    size_t i = 0;
    const Catalog& cat;

    void skip()
    {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ','))
            ++i;
    }
    bool lit(const std::string& w)
    {
        skip();
        if (s.compare(i, w.size(), w) == 0) {
            i += w.size();
            return true;
        }
        return false;
    }
    std::string ident()
    {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                                s[i] == '(' || s[i] == ')'))
        {
            // identifiers stop before structural parens; tensor trefs keep theirs
            if (s[i] == '(' || s[i] == ')')
                break;
            ++i;
        }
        require(i > start, "expected identifier in d0 expression at " + std::to_string(start));
        return s.substr(start, i - start);
    }
    long long integer()
    {
        skip();
        size_t start = i;
        if (i < s.size() && s[i] == '-')
            ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        require(i > start, "expected integer in d0 expression");
        return std::stoll(s.substr(start, i - start));
    }

    D0Interval expr()
    {
        skip();
        if (lit("atom:")) {
            std::string id = ident();
            const CatalogEntry& e = cat.entry(id);
            require(e.atom.has_value(), "entry " + id + " carries no certified d0 atom");
            return {e.atom->lo, e.atom->hi};
        }
        if (lit("topdeg(")) {
            long long n = integer();
            require(lit(")"), "expected ) after topdeg");
            return {0, n};
        }
        if (lit("tensor(")) {
            D0Interval acc{0, 0};
            bool first = true;
            while (true) {
                D0Interval v = expr();
                acc.lo += v.lo;
                acc.hi = acc.hi >= kInf || v.hi >= kInf ? kInf : acc.hi + v.hi;
                first = false;
                skip();
                if (lit(")"))
                    break;
                require(i < s.size(), "unterminated tensor(...)");
            }
            require(!first, "empty tensor(...)");
            return acc;
        }
        if (lit("suspend(")) {
            long long n = integer();
            D0Interval v = expr();
            require(lit(")"), "expected ) after suspend");
            return {v.lo + n, v.hi >= kInf ? kInf : v.hi + n};
        }
        if (lit("sub_of(")) {
            D0Interval v = expr();
            require(lit(")"), "expected ) after sub_of");
            return {0, v.hi};
        }
        if (lit("contains(")) {
            D0Interval v = expr();
            require(lit(")"), "expected ) after contains");
            return {v.lo, kInf};
        }
        if (lit("extension(")) {
            D0Interval a = expr();
            D0Interval b = expr();
            require(lit(")"), "expected ) after extension");
            return {0, std::max(a.hi, b.hi)};
        }
        if (lit("meet(")) {
            D0Interval a = expr();
            D0Interval b = expr();
            require(lit(")"), "expected ) after meet");
            D0Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
            require(r.lo <= r.hi, "empty meet in d0 expression");
            return r;
        }
        fail("unparsed d0 expression near '" + s.substr(i, 24) + "'");
    }
};

}  // namespace

D0Interval d0_calculus(const Catalog& cat, const std::string& expr)
{
    require(!expr.empty(), "empty d0 expression");
    ExprParser p{expr, 0, cat};
    D0Interval v = p.expr();
    p.skip();
    require(p.i == expr.size(), "trailing garbage in d0 expression");
    require(v.hi < kInf, "d0 expression has no finite upper bound");
    require(v.lo >= 0, "d0 lower bound below zero");
    return v;
}

long long hspace_bound(const CatalogEntry& e)
{
    require(e.hspace, "entry " + e.id + " is not flagged as an H-space presentation");
    const PresentedAlgebra& a = *e.algebra.algebra;
    const RingPtr& ring = a.ring();
    int p = ring->p();

    // relations must be pure powers gen^k of distinct generators
    std::map<size_t, long long> trunc;  // generator index -> exponent k
    for (const auto& rel : a.relations()) {
        require(rel.terms().size() == 1, "H-space shape needs pure-power relations");
        const Term& t = rel.terms()[0];
        size_t which = 0;
        int found = 0;
        for (size_t i = 0; i < ring->ngens(); ++i)
            if (t.mon.exp[i]) {
                which = i;
                ++found;
            }
        require(found == 1 && t.coeff == 1, "H-space shape needs pure-power relations");
        require(trunc.emplace(which, t.mon.exp[which]).second,
                "repeated truncation of one generator");
    }
    auto is_power_of = [](long long v, int base) {
        while (v > 1 && v % base == 0)
            v /= base;
        return v == 1;
    };
    long long d = 0;
    if (p == 2) {
        for (const auto& [idx, k] : trunc) {
            require(is_power_of(k, 2), "truncation exponent is not a 2-power");
            d += static_cast<long long>(ring->gen(idx).degree) * (k - 1);
        }
    }
    else {
        // odd form with k = 0 under the polynomial-Duflot hypothesis: no odd
        // generator may support a nonzero Bockstein
        for (size_t i = 0; i < ring->ngens(); ++i)
            if (ring->odd(i))
                require(e.algebra.action.bockstein[i].is_zero(),
                        "odd-p H-space input with nonzero Bockstein on an exterior class is "
                        "rejected (polynomial-Duflot hypothesis)");
        for (size_t i = 0; i < ring->ngens(); ++i)
            if (ring->odd(i))
                d += ring->gen(i).degree;
        for (const auto& [idx, k] : trunc) {
            require(!ring->odd(idx), "truncated generators must be even");
            require(is_power_of(k, p), "truncation exponent is not a p-power");
            d += static_cast<long long>(ring->gen(idx).degree) * (k - 1);
        }
    }
    return d;
}

}  // namespace topnil
