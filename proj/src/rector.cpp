#include "topnil/rector.hpp"

#include <algorithm>
#include <mutex>
#include <functional>
#include <map>
#include <set>

namespace topnil {

namespace {
UnstablePresentation build_standard_he(Prime p, int rank);
}

// one shared instance per (p, rank): Element equality and PresentedAlgebra
// membership are keyed on the ring pointer
UnstablePresentation standard_he(Prime p, int rank)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, UnstablePresentation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p.value, rank);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_standard_he(p, rank)).first;
    return it->second;
}

namespace {

UnstablePresentation build_standard_he(Prime p, int rank)
{
    std::vector<Generator> gens;
    if (p.value == 2) {
        for (int i = 0; i < rank; ++i)
            gens.push_back({"t" + std::to_string(i + 1), 1, Parity::Even});
    }
    else {
        for (int i = 0; i < rank; ++i)
            gens.push_back({"x" + std::to_string(i + 1), 1, Parity::Odd});
        for (int i = 0; i < rank; ++i)
            gens.push_back({"y" + std::to_string(i + 1), 2, Parity::Even});
    }
    RingPtr ring = GradedRing::make(p, gens);
    UnstablePresentation u;
    u.algebra = std::make_shared<PresentedAlgebra>(ring, std::vector<Element>{});
    u.action = SteenrodAction::empty(ring);
    if (p.value == 2) {
        for (int i = 0; i < rank; ++i) {
            Element t = Element::generator(ring, static_cast<size_t>(i));
            u.action.sq[static_cast<size_t>(i)][1] = t.mul_signed(t);
        }
    }
    else {
        for (int i = 0; i < rank; ++i) {
            size_t xi = static_cast<size_t>(i), yi = static_cast<size_t>(rank + i);
            u.action.bockstein[xi] = Element::generator(ring, yi);
            Element y = Element::generator(ring, yi);
            Element yp = Element::constant(ring, 1);
            for (int k = 0; k < p.value; ++k)
                yp = yp.mul_signed(y);
            u.action.ppow[yi][1] = yp;
        }
    }
    return u;
}

/// Restriction H_E(rank) -> H_{Z/p} along the element e in F_p^rank: the
/// generator images of the composite pair.
std::vector<Element> restrict_along_element(const UnstablePresentation& he_big,
                                            const UnstablePresentation& he_one,
                                            const std::vector<int>& e)
{
    const RingPtr& big = he_big.ring();
    const RingPtr& one = he_one.ring();
    int p = big->p();
    int rank = p == 2 ? static_cast<int>(big->ngens())
                      : static_cast<int>(big->ngens()) / 2;
    std::vector<Element> images;
    if (p == 2) {
        for (int i = 0; i < rank; ++i)
            images.push_back(Element::generator(one, 0).scaled(e[static_cast<size_t>(i)]));
    }
    else {
        for (int i = 0; i < rank; ++i)
            images.push_back(Element::generator(one, 0).scaled(e[static_cast<size_t>(i)]));
        for (int i = 0; i < rank; ++i)
            images.push_back(Element::generator(one, 1).scaled(e[static_cast<size_t>(i)]));
    }
    return images;
}

/// iota^*: H_V -> H_E for the linear map iota: E -> V given by the
/// (rank_V x rank_E) matrix m.
std::vector<Element> dual_images(Prime p, const Matrix& m, int rank_e, int rank_v,
                                 const RingPtr& he_e)
{
    std::vector<Element> images;
    if (p.value == 2) {
        for (int j = 0; j < rank_v; ++j) {
            Element img = Element::zero(he_e);
            for (int i = 0; i < rank_e; ++i)
                if (m[static_cast<size_t>(j)][static_cast<size_t>(i)])
                    img = img + Element::generator(he_e, static_cast<size_t>(i))
                                    .scaled(m[static_cast<size_t>(j)][static_cast<size_t>(i)]);
            images.push_back(img);
        }
    }
    else {
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < rank_v; ++j) {
                Element img = Element::zero(he_e);
                for (int i = 0; i < rank_e; ++i) {
                    int c = m[static_cast<size_t>(j)][static_cast<size_t>(i)];
                    if (c)
                        img = img +
                              Element::generator(he_e,
                                                 static_cast<size_t>(pass == 0 ? i : rank_e + i))
                                  .scaled(c);
                }
                images.push_back(img);
            }
    }
    return images;
}

int matrix_rank_fp(Matrix m, int p)
{
    if (m.empty())
        return 0;
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

void enumerate_matrices(int p, int rows, int cols, const std::function<void(const Matrix&)>& fn)
{
    long long total = 1;
    for (int i = 0; i < rows * cols; ++i) {
        total *= p;
        require(total <= 2'000'000, "matrix enumeration too large");
    }
    Matrix m(static_cast<size_t>(rows), std::vector<int>(static_cast<size_t>(cols), 0));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == rows * cols) {
            fn(m);
            return;
        }
        for (int v = 0; v < p; ++v) {
            m[static_cast<size_t>(pos / cols)][static_cast<size_t>(pos % cols)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
}

}  // namespace

std::vector<std::vector<int>> kernel_of_pair(const UnstablePresentation& r,
                                             const RectorPair& pair)
{
    int p = r.ring()->p();
    require(pair.images.size() == r.ring()->ngens(), "pair image count mismatch");
    UnstablePresentation he_big = standard_he(r.ring()->prime(), pair.rank);
    UnstablePresentation he_one = standard_he(r.ring()->prime(), 1);

    int bound = std::max(2 * std::max(r.algebra->top_relation_degree(), 1), 2);

    std::vector<std::vector<int>> kernel;
    long long total = 1;
    for (int i = 0; i < pair.rank; ++i)
        total *= p;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> e(static_cast<size_t>(pair.rank));
        long long c = code;
        for (int i = 0; i < pair.rank; ++i) {
            e[static_cast<size_t>(i)] = static_cast<int>(c % p);
            c /= p;
        }
        std::vector<Element> res = restrict_along_element(he_big, he_one, e);
        // composite on generators (a ring map vanishes on the positive part
        // iff it kills the generators; products are checked as well, per the
        // stated contract)
        bool trivial = true;
        std::vector<Element> composite;
        for (const auto& img : pair.images) {
            Element v = apply_ring_map(res, *he_one.algebra, img);
            composite.push_back(v);
            if (!v.is_zero())
                trivial = false;
        }
        if (trivial) {
            for (size_t a = 0; a < composite.size() && trivial; ++a)
                for (size_t b = a; b < composite.size() && trivial; ++b) {
                    if (r.ring()->gen(a).degree + r.ring()->gen(b).degree > bound)
                        continue;
                    if (!composite[a].mul_signed(composite[b]).is_zero())
                        trivial = false;
                }
        }
        if (trivial)
            kernel.push_back(e);
    }
    // subgroup property
    auto in_kernel = [&](const std::vector<int>& v) {
        return std::find(kernel.begin(), kernel.end(), v) != kernel.end();
    };
    for (const auto& a : kernel)
        for (const auto& b : kernel) {
            std::vector<int> s(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                s[i] = fp_add(a[i], b[i], p);
            require(in_kernel(s), "pair kernel is not a subgroup: inconsistent presentation");
        }
    return kernel;
}

RectorPair rec(const UnstablePresentation& r, const RectorPair& pair)
{
    int p = r.ring()->p();
    std::vector<std::vector<int>> ker = kernel_of_pair(r, pair);
    int kdim = 0;
    {
        Matrix km;
        for (const auto& v : ker)
            km.push_back(v);
        kdim = ker.empty() ? 0 : matrix_rank_fp(km, p);
    }
    if (kdim == 0)
        return pair;
    int new_rank = pair.rank - kdim;

    // annihilator of the kernel inside the dual space: rows l with l.k = 0
    std::vector<std::vector<int>> ann;
    {
        // solve l * K^T = 0 by enumerating the dual space (rank <= 4 here)
        long long total = 1;
        for (int i = 0; i < pair.rank; ++i)
            total *= p;
        for (long long code = 1; code < total; ++code) {
            std::vector<int> l(static_cast<size_t>(pair.rank));
            long long c = code;
            for (int i = 0; i < pair.rank; ++i) {
                l[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            bool kills = true;
            for (const auto& k : ker) {
                int dot = 0;
                for (size_t i = 0; i < l.size(); ++i)
                    dot = fp_add(dot, fp_mul(l[i], k[i], p), p);
                if (dot) {
                    kills = false;
                    break;
                }
            }
            if (kills) {
                Matrix trial = ann;
                trial.push_back(l);
                if (matrix_rank_fp(trial, p) > static_cast<int>(ann.size()))
                    ann.push_back(l);
            }
            if (static_cast<int>(ann.size()) == new_rank)
                break;
        }
        require(static_cast<int>(ann.size()) == new_rank, "kernel annihilator rank mismatch");
    }
    // complete ann to a basis of the dual space
    Matrix full = ann;
    for (int i = 0; i < pair.rank && static_cast<int>(full.size()) < pair.rank; ++i) {
        std::vector<int> unit(static_cast<size_t>(pair.rank), 0);
        unit[static_cast<size_t>(i)] = 1;
        Matrix trial = full;
        trial.push_back(unit);
        if (matrix_rank_fp(trial, p) > static_cast<int>(full.size()))
            full.push_back(unit);
    }
    // change of coordinates: s_k = sum_i full[k][i] t_i; express t_i = (full^{-1}) s
    // invert full over F_p
    int n = pair.rank;
    Matrix inv = matrix_identity(n);
    {
        Matrix a = full;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            while (piv < n && a[static_cast<size_t>(piv)][static_cast<size_t>(c)] == 0)
                ++piv;
            require(piv < n, "basis completion failed");
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
            std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(c)]);
            int s = fp_inv(a[static_cast<size_t>(c)][static_cast<size_t>(c)], p);
            for (int j = 0; j < n; ++j) {
                a[static_cast<size_t>(c)][static_cast<size_t>(j)] =
                    fp_mul(a[static_cast<size_t>(c)][static_cast<size_t>(j)], s, p);
                inv[static_cast<size_t>(c)][static_cast<size_t>(j)] =
                    fp_mul(inv[static_cast<size_t>(c)][static_cast<size_t>(j)], s, p);
            }
            for (int rr = 0; rr < n; ++rr) {
                if (rr == c || a[static_cast<size_t>(rr)][static_cast<size_t>(c)] == 0)
                    continue;
                int f = a[static_cast<size_t>(rr)][static_cast<size_t>(c)];
                for (int j = 0; j < n; ++j) {
                    a[static_cast<size_t>(rr)][static_cast<size_t>(j)] =
                        fp_sub(a[static_cast<size_t>(rr)][static_cast<size_t>(j)],
                               fp_mul(f, a[static_cast<size_t>(c)][static_cast<size_t>(j)], p), p);
                    inv[static_cast<size_t>(rr)][static_cast<size_t>(j)] =
                        fp_sub(inv[static_cast<size_t>(rr)][static_cast<size_t>(j)],
                               fp_mul(f, inv[static_cast<size_t>(c)][static_cast<size_t>(j)], p),
                               p);
                }
            }
        }
    }
    // substitute t_i -> sum_k inv[i][k] s_k in a rank-n ring, then check that
    // only s_1..s_{new_rank} appear and project
    UnstablePresentation he_n = standard_he(r.ring()->prime(), n);
    UnstablePresentation he_new = standard_he(r.ring()->prime(), new_rank);
    std::vector<Element> subst;
    if (p == 2) {
        for (int i = 0; i < n; ++i) {
            Element img = Element::zero(he_n.ring());
            for (int k = 0; k < n; ++k)
                if (inv[static_cast<size_t>(i)][static_cast<size_t>(k)])
                    img = img + Element::generator(he_n.ring(), static_cast<size_t>(k))
                                    .scaled(inv[static_cast<size_t>(i)][static_cast<size_t>(k)]);
            subst.push_back(img);
        }
    }
    else {
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i < n; ++i) {
                Element img = Element::zero(he_n.ring());
                for (int k = 0; k < n; ++k) {
                    int c = inv[static_cast<size_t>(i)][static_cast<size_t>(k)];
                    if (c)
                        img = img + Element::generator(
                                        he_n.ring(),
                                        static_cast<size_t>(pass == 0 ? k : n + k))
                                        .scaled(c);
                }
                subst.push_back(img);
            }
    }
    RectorPair out;
    out.name = pair.name + "/ker";
    out.rank = new_rank;
    out.central_flag = pair.central_flag;
    for (const auto& img : pair.images) {
        Element moved = substitute(img, he_n.ring(), subst, /*sign_exact=*/true);
        // drop to the rank-new_rank ring: variables s_{new_rank+1..} must be absent
        Element small = Element::zero(he_new.ring());
        for (const auto& t : moved.terms()) {
            Monomial m = Monomial::one(he_new.ring()->ngens());
            bool ok = true;
            if (p == 2) {
                for (int i = 0; i < n; ++i) {
                    if (t.mon.exp[static_cast<size_t>(i)] && i >= new_rank)
                        ok = false;
                    else if (i < new_rank)
                        m.exp[static_cast<size_t>(i)] = t.mon.exp[static_cast<size_t>(i)];
                }
            }
            else {
                for (int pass = 0; pass < 2; ++pass)
                    for (int i = 0; i < n; ++i) {
                        uint16_t ex = t.mon.exp[static_cast<size_t>(pass == 0 ? i : n + i)];
                        if (!ex)
                            continue;
                        if (i >= new_rank)
                            ok = false;
                        else
                            m.exp[static_cast<size_t>(pass == 0 ? i : new_rank + i)] = ex;
                    }
            }
            require(ok, "rec: image does not factor through the quotient");
            small = small + Element::monomial(he_new.ring(), m, t.coeff);
        }
        out.images.push_back(small);
    }
    return out;
}

bool is_finite_pair(const UnstablePresentation& r, const RectorPair& pair)
{
    int p = r.ring()->p();
    bool kernel_trivial;
    {
        std::vector<std::vector<int>> ker = kernel_of_pair(r, pair);
        kernel_trivial = ker.size() == 1;  // only 0
        (void)p;
    }
    // independent route: Groebner fiber dimension
    UnstablePresentation he = standard_he(r.ring()->prime(), pair.rank);
    std::vector<Element> fiber_gens;
    for (const auto& img : pair.images)
        if (!img.is_zero())
            fiber_gens.push_back(img);
    PresentedAlgebra fiber(he.ring(), fiber_gens);
    bool finite_fiber = krull_dimension(fiber) == 0;

    require(kernel_trivial == finite_fiber,
            "finiteness routes disagree on pair '" + pair.name + "': presentation bug");
    return kernel_trivial;
}

std::vector<Matrix> poset_morphisms(const UnstablePresentation& r, const RectorPair& e,
                                    const RectorPair& v)
{
    Prime p = r.ring()->prime();
    UnstablePresentation he_e = standard_he(p, e.rank);
    std::vector<Matrix> out;
    if (e.rank == 0) {
        // the empty monomorphism; compatible iff nothing to check
        out.push_back(Matrix{});
        return out;
    }
    enumerate_matrices(p.value, v.rank, e.rank, [&](const Matrix& m) {
        if (matrix_rank_fp(m, p.value) != e.rank)
            return;
        std::vector<Element> iota_star = dual_images(p, m, e.rank, v.rank, he_e.ring());
        for (size_t g = 0; g < e.images.size(); ++g) {
            Element lhs = substitute(v.images[g], he_e.ring(), iota_star, /*sign_exact=*/true);
            if (!(lhs == e.images[g]))
                return;
        }
        out.push_back(m);
    });
    return out;
}

bool poset_leq(const UnstablePresentation& r, const RectorPair& e, const RectorPair& v)
{
    return !poset_morphisms(r, e, v).empty();
}

bool pairs_isomorphic(const UnstablePresentation& r, const RectorPair& a, const RectorPair& b)
{
    return a.rank == b.rank && poset_leq(r, a, b) && poset_leq(r, b, a);
}

RectorPair sum_pair_with_central_subgroup(const UnstablePresentation& r, const RectorPair& e,
                                          const Matrix& embedding)
{
    Prime p = r.ring()->prime();
    int re = e.rank;
    int rc = embedding.empty() ? 0 : static_cast<int>(embedding[0].size());
    UnstablePresentation he_sum = standard_he(p, re + rc);
    // mu: E (+) C -> E, (x, c) |-> x + iota(c); mu^* t_i = t_i + sum_k N[i][k] u_k
    std::vector<Element> mu_star;
    auto build = [&](int i, int block) {
        // block 0: the x/t variables, block 1: the odd-p y variables
        Element img = Element::generator(
            he_sum.ring(), static_cast<size_t>(block == 0 ? i : (re + rc) + i));
        for (int k = 0; k < rc; ++k) {
            int c = embedding[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (c)
                img = img + Element::generator(he_sum.ring(),
                                               static_cast<size_t>(block == 0
                                                                       ? re + k
                                                                       : (re + rc) + re + k))
                                .scaled(c);
        }
        return img;
    };
    if (p.value == 2) {
        for (int i = 0; i < re; ++i)
            mu_star.push_back(build(i, 0));
    }
    else {
        for (int i = 0; i < re; ++i)
            mu_star.push_back(build(i, 0));
        for (int i = 0; i < re; ++i)
            mu_star.push_back(build(i, 1));
    }
    RectorPair out;
    out.name = e.name + "+C";
    out.rank = re + rc;
    out.central_flag = false;
    for (const auto& img : e.images)
        out.images.push_back(substitute(img, he_sum.ring(), mu_star, /*sign_exact=*/true));
    return out;
}

size_t circ(const UnstablePresentation& r, const std::vector<RectorPair>& pairs, size_t e_idx,
            size_t c_idx)
{
    require(pairs[c_idx].central_flag, "circ requires a central second argument");
    const RectorPair& e = pairs[e_idx];
    const RectorPair& c = pairs[c_idx];
    int p = r.ring()->p();
    std::optional<size_t> found;
    for (size_t v = 0; v < pairs.size(); ++v) {
        std::vector<Matrix> me = poset_morphisms(r, e, pairs[v]);
        if (me.empty())
            continue;
        std::vector<Matrix> mc = poset_morphisms(r, c, pairs[v]);
        if (mc.empty())
            continue;
        // spanning condition: im(iota_E) + im(iota_C) = V for some choice
        bool spans = false;
        for (const auto& a : me) {
            for (const auto& b : mc) {
                Matrix rows;
                for (int i = 0; i < e.rank; ++i) {
                    std::vector<int> col(static_cast<size_t>(pairs[v].rank));
                    for (int j = 0; j < pairs[v].rank; ++j)
                        col[static_cast<size_t>(j)] =
                            a[static_cast<size_t>(j)][static_cast<size_t>(i)];
                    rows.push_back(col);
                }
                for (int i = 0; i < c.rank; ++i) {
                    std::vector<int> col(static_cast<size_t>(pairs[v].rank));
                    for (int j = 0; j < pairs[v].rank; ++j)
                        col[static_cast<size_t>(j)] =
                            b[static_cast<size_t>(j)][static_cast<size_t>(i)];
                    rows.push_back(col);
                }
                if (!rows.empty() && matrix_rank_fp(rows, p) == pairs[v].rank) {
                    spans = true;
                    break;
                }
                if (rows.empty() && pairs[v].rank == 0)
                    spans = true;
            }
            if (spans)
                break;
        }
        if (!spans)
            continue;
        if (found) {
            require(pairs_isomorphic(r, pairs[*found], pairs[v]),
                    "circ join is not unique up to isomorphism");
            continue;
        }
        found = v;
    }
    require(found.has_value(), "no join found for circ in the supplied skeleton");
    return *found;
}

CentralPoset maximal_central(const UnstablePresentation& r, const std::vector<RectorPair>& pairs,
                             OracleKind oracle)
{
    CentralPoset out;
    out.oracle = oracle;
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].central_flag)
            out.central.push_back(i);
    require(!out.central.empty(), "no central pair flagged (the trivial pair is always central)");

    // subgroup closure (Lemma 3.5 shape): anything below a central pair is central
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].central_flag)
            continue;
        for (size_t c : out.central)
            require(!poset_leq(r, pairs[i], pairs[c]),
                    "oracle violates subgroup-closure of centrality: pair '" + pairs[i].name +
                        "' sits below central '" + pairs[c].name + "'");
    }
    // closure under circ, and the maximum
    for (size_t a : out.central)
        for (size_t b : out.central) {
            size_t j = circ(r, pairs, a, b);
            require(pairs[j].central_flag, "circ of central pairs is not central");
        }
    size_t best = out.central[0];
    for (size_t c : out.central)
        if (pairs[c].rank > pairs[best].rank)
            best = c;
    for (size_t c : out.central)
        require(poset_leq(r, pairs[c], pairs[best]),
                "central pair '" + pairs[c].name + "' does not map into the maximum");
    // uniqueness up to isomorphism among maximal-rank central pairs
    for (size_t c : out.central)
        if (pairs[c].rank == pairs[best].rank)
            require(pairs_isomorphic(r, pairs[c], pairs[best]),
                    "two non-isomorphic maximal central pairs");
    out.maximum = best;
    out.rank = pairs[best].rank;
    return out;
}

bool defect_zero_category_check(const UnstablePresentation& r,
                                const std::vector<RectorPair>& pairs, size_t center_idx)
{
    const RectorPair& center = pairs[center_idx];
    int p = r.ring()->p();
    int c = center.rank;
    // subspace image of each pair inside C via a witness monomorphism
    std::vector<std::vector<std::vector<int>>> images;  // per pair: basis rows of im
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::vector<Matrix> ms = poset_morphisms(r, pairs[i], center);
        if (ms.empty())
            return false;  // a pair above the center: not defect 0
        // all witnesses must give the same subspace, or hom-counting below fails
        std::vector<std::vector<int>> basis;
        for (int k = 0; k < pairs[i].rank; ++k) {
            std::vector<int> col(static_cast<size_t>(c));
            for (int j = 0; j < c; ++j)
                col[static_cast<size_t>(j)] = ms[0][static_cast<size_t>(j)][static_cast<size_t>(k)];
            basis.push_back(col);
        }
        images.push_back(basis);
    }
    // essential surjectivity: the images exhaust the subspaces of C
    std::set<std::set<std::vector<int>>> hit;
    auto span_of = [&](const std::vector<std::vector<int>>& basis) {
        std::set<std::vector<int>> span;
        std::vector<int> zero(static_cast<size_t>(c), 0);
        span.insert(zero);
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<std::vector<int>> next = span;
            for (const auto& v : span)
                for (const auto& b : basis) {
                    std::vector<int> s(v.size());
                    for (size_t k = 0; k < v.size(); ++k)
                        s[k] = fp_add(v[k], b[k], p);
                    if (next.insert(s).second)
                        grew = true;
                }
            span = std::move(next);
        }
        return span;
    };
    for (const auto& b : images)
        hit.insert(span_of(b));
    // count all subspaces of F_p^c by brute force over spans of element subsets
    std::set<std::set<std::vector<int>>> all_subspaces;
    {
        std::vector<std::vector<int>> vectors;
        long long total = 1;
        for (int i = 0; i < c; ++i)
            total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> v(static_cast<size_t>(c));
            long long cc = code;
            for (int i = 0; i < c; ++i) {
                v[static_cast<size_t>(i)] = static_cast<int>(cc % p);
                cc /= p;
            }
            vectors.push_back(v);
        }
        // subspaces = spans of all subsets of a spanning set; enumerate spans
        // of up to c vectors
        std::function<void(size_t, std::vector<std::vector<int>>&)> rec =
            [&](size_t start, std::vector<std::vector<int>>& chosen) {
                all_subspaces.insert(span_of(chosen));
                if (chosen.size() == static_cast<size_t>(c))
                    return;
                for (size_t k = start; k < vectors.size(); ++k) {
                    chosen.push_back(vectors[k]);
                    rec(k + 1, chosen);
                    chosen.pop_back();
                }
            };
        std::vector<std::vector<int>> chosen;
        rec(0, chosen);
    }
    if (hit != all_subspaces)
        return false;
    // fullness and faithfulness: hom counts match the subspace poset
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = 0; j < pairs.size(); ++j) {
            size_t n = poset_morphisms(r, pairs[i], pairs[j]).size();
            auto si = span_of(images[i]);
            auto sj = span_of(images[j]);
            bool contained = std::includes(sj.begin(), sj.end(), si.begin(), si.end());
            size_t expected = contained ? 1 : 0;
            if (n != expected)
                return false;
        }
    return true;
}

}  // namespace topnil
