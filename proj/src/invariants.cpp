#include "topnil/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace topnil {

Matrix matrix_identity(int n)
{
    Matrix m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b, int p)
{
    size_t n = a.size();
    Matrix c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (!a[i][k])
                continue;
            for (size_t j = 0; j < n; ++j)
                c[i][j] = fp_add(c[i][j], fp_mul(a[i][k], b[k][j], p), p);
        }
    return c;
}

bool matrix_invertible(const Matrix& m, int p)
{
    Matrix a = m;
    size_t n = a.size();
    size_t rank = 0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = rank;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(a[piv], a[rank]);
        int inv = fp_inv(a[rank][c], p);
        for (size_t j = 0; j < n; ++j)
            a[rank][j] = fp_mul(a[rank][j], inv, p);
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            int f = a[r][c];
            for (size_t j = 0; j < n; ++j)
                a[r][j] = fp_sub(a[r][j], fp_mul(f, a[rank][j], p), p);
        }
        ++rank;
    }
    return rank == n;
}

std::vector<Matrix> LinearRep::elements() const
{
    for (const auto& g : gens)
        require(matrix_invertible(g, p.value), "representation matrix is singular");
    std::set<Matrix> seen;
    std::vector<Matrix> frontier{matrix_identity(dim)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                Matrix h = matrix_mul(g, f, p.value);
                if (seen.insert(h).second)
                    next.push_back(h);
            }
        frontier = std::move(next);
        require(seen.size() <= 1u << 16, "matrix group too large");
    }
    return std::vector<Matrix>(seen.begin(), seen.end());
}

bool rep_is_p_group(const LinearRep& rep)
{
    long long n = rep.order();
    while (n % rep.p.value == 0)
        n /= rep.p.value;
    return n == 1;
}

namespace {

// F[V] in the internal grading: degree 1 per variable at p = 2, degree 2 at
// odd p (parity rules force even degrees there; the doubling flag records it)
RingPtr poly_ring_n(Prime p, int n, const std::string& stem)
{
    int unit = p.value == 2 ? 1 : 2;
    std::vector<Generator> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back({stem + std::to_string(i + 1), unit, Parity::Even});
    return GradedRing::make(p, gens);
}

int internal_degree_unit(const LinearRep& rep)
{
    return rep.p.value == 2 ? 1 : 2;
}

/// substitution action of a matrix on a polynomial: x_i -> sum_j m[j][i] x_j
Element act_matrix(const Element& f, const Matrix& m, const RingPtr& ring)
{
    std::vector<Element> images;
    size_t n = m.size();
    for (size_t i = 0; i < n; ++i) {
        Element img = Element::zero(ring);
        for (size_t j = 0; j < n; ++j)
            if (m[j][i])
                img = img + Element::generator(ring, j).scaled(m[j][i]);
        images.push_back(img);
    }
    return substitute(f, ring, images, /*sign_exact=*/false);
}

std::vector<Monomial> degree_monomials(const RingPtr& ring, int d)
{
    std::vector<Monomial> out;
    size_t n = ring->ngens();
    Monomial cur = Monomial::one(n);
    int unit = ring->gen(0).degree;  // uniform
    if (d % unit != 0)
        return out;
    int steps = d / unit;
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == n) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur.exp[i] = static_cast<uint16_t>(k);
            rec(i + 1, left - k);
        }
        cur.exp[i] = 0;
    };
    rec(0, steps);
    return out;
}

size_t row_reduce_fp(std::vector<std::vector<int>>& rows, int p)
{
    size_t rank = 0;
    if (rows.empty())
        return 0;
    size_t ncols = rows[0].size();
    size_t rr = 0;
    for (size_t c = 0; c < ncols && rr < rows.size(); ++c) {
        size_t piv = rr;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rr]);
        int inv = fp_inv(rows[rr][c], p);
        for (size_t cc = 0; cc < ncols; ++cc)
            rows[rr][cc] = fp_mul(rows[rr][cc], inv, p);
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rr || rows[r2][c] == 0)
                continue;
            int f = rows[r2][c];
            for (size_t cc = 0; cc < ncols; ++cc)
                rows[r2][cc] = fp_sub(rows[r2][cc], fp_mul(f, rows[rr][cc], p), p);
        }
        ++rr;
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace

InvariantRingApprox invariants_up_to(const LinearRep& rep, int degree_bound)
{
    require(degree_bound >= 1, "invariants_up_to needs a degree bound >= 1");
    InvariantRingApprox out;
    out.rep = rep;
    out.degree_bound = degree_bound;
    out.polynomial_ring = poly_ring_n(rep.p, rep.dim, "x");
    out.grading_doubled_for_cohomology = rep.p.value != 2;
    const RingPtr& ring = out.polynomial_ring;
    int p = rep.p.value;
    int unit = internal_degree_unit(rep);

    out.invariant_dims.assign(static_cast<size_t>(degree_bound) + 1, 0);
    out.invariant_dims[0] = 1;

    // span of products of accepted generators, maintained degreewise
    std::map<int, std::vector<std::vector<int>>> subalgebra_rows;  // reduced
    std::map<int, std::vector<Monomial>> monos_of;

    auto coords = [&](const Element& f, const std::vector<Monomial>& basis) {
        std::vector<int> row(basis.size(), 0);
        for (const auto& t : f.terms()) {
            bool found = false;
            for (size_t k = 0; k < basis.size(); ++k)
                if (basis[k] == t.mon) {
                    row[k] = t.coeff;
                    found = true;
                    break;
                }
            require(found, "coordinate lookup failure");
        }
        return row;
    };

    for (int step = 1; step <= degree_bound; ++step) {
        int d = step * unit;
        std::vector<Monomial> basis = degree_monomials(ring, d);
        monos_of[d] = basis;

        // invariant subspace: common kernel of (action - id) over the generators
        std::vector<std::vector<int>> constraints;
        for (const auto& g : rep.gens) {
            for (size_t k = 0; k < basis.size(); ++k) {
                Element m = Element::monomial(ring, basis[k], 1);
                Element diff = act_matrix(m, g, ring) - m;
                std::vector<int> col = coords(diff, basis);
                // constraint rows are indexed by target monomials; build as
                // columns of the big constraint matrix
                constraints.push_back(std::move(col));
            }
        }
        // kernel of the map c -> sum_k c_k * constraints_k, per generator block
        // assemble: unknowns = basis coefficients; rows = (gen, target monomial)
        size_t nb = basis.size();
        std::vector<std::vector<int>> mat(nb, std::vector<int>(rep.gens.size() * nb, 0));
        for (size_t gi = 0; gi < rep.gens.size(); ++gi)
            for (size_t k = 0; k < nb; ++k)
                for (size_t t = 0; t < nb; ++t)
                    mat[k][gi * nb + t] = constraints[gi * nb + k][t];
        // kernel via augmentation
        std::vector<std::vector<int>> aug;
        for (size_t k = 0; k < nb; ++k) {
            std::vector<int> row = mat[k];
            row.resize(rep.gens.size() * nb + nb, 0);
            row[rep.gens.size() * nb + k] = 1;
            aug.push_back(std::move(row));
        }
        row_reduce_fp(aug, p);
        std::vector<Element> invariants;
        for (const auto& row : aug) {
            bool zero_left = true;
            for (size_t c = 0; c < rep.gens.size() * nb; ++c)
                if (row[c]) {
                    zero_left = false;
                    break;
                }
            if (!zero_left)
                continue;
            Element f = Element::zero(ring);
            for (size_t k = 0; k < nb; ++k)
                if (row[rep.gens.size() * nb + k])
                    f = f + Element::monomial(ring, basis[k], row[rep.gens.size() * nb + k]);
            if (!f.is_zero())
                invariants.push_back(f);
        }
        out.invariant_dims[static_cast<size_t>(step)] = static_cast<long long>(invariants.size());

        // span of all products prod gen_i^{e_i} of total degree exactly d
        std::vector<std::vector<int>>& sub_rows = subalgebra_rows[d];
        sub_rows.clear();
        {
            std::function<void(size_t, int, const Element&)> genrec =
                [&](size_t i, int left, const Element& acc) {
                    if (left == 0) {
                        sub_rows.push_back(coords(acc, basis));
                        return;
                    }
                    if (i == out.generators.size())
                        return;
                    genrec(i + 1, left, acc);
                    Element cur = acc;
                    int gd = out.generators[i].degree();
                    for (int k = 1; k * gd <= left; ++k) {
                        cur = cur.mul_plain(out.generators[i]);
                        genrec(i + 1, left - k * gd, cur);
                    }
                };
            genrec(0, d, Element::constant(ring, 1));
            row_reduce_fp(sub_rows, p);
        }

        // new candidate generators: invariants beyond the generated span
        for (const auto& f : invariants) {
            std::vector<std::vector<int>> trial = sub_rows;
            trial.push_back(coords(f, basis));
            size_t before = sub_rows.size();
            if (row_reduce_fp(trial, p) > before) {
                out.generators.push_back(f.monic(MonomialOrder{}));
                sub_rows = trial;
            }
        }
    }
    return out;
}

PresentedAlgebra InvariantRingApprox::presented() const
{
    std::vector<Generator> gens;
    for (size_t i = 0; i < generators.size(); ++i)
        gens.push_back({"z" + std::to_string(i + 1), generators[i].degree(), Parity::Even});
    RingPtr zring = GradedRing::make(rep.p, gens);
    PresentedAlgebra free_target(polynomial_ring, {});
    PresentedAlgebra free_source(zring, {});
    Ideal rel = kernel_of_ring_map(generators, free_source, free_target);
    return PresentedAlgebra(zring, rel.gens);
}

std::vector<Element> dickson_generators(int n, Prime p)
{
    require(n >= 1, "Dickson invariants need n >= 1");
    RingPtr ring = poly_ring_n(p, n, "x");
    // f(X) = prod_{v in V} (X - l_v), l_v = sum v_i x_i; coefficients indexed
    // by the X-power
    long long vn = 1;
    for (int i = 0; i < n; ++i)
        vn *= p.value;
    std::vector<Element> coeffs{Element::constant(ring, 1)};  // polynomial "1" in X
    for (long long code = 0; code < vn; ++code) {
        Element lv = Element::zero(ring);
        long long c = code;
        for (int i = 0; i < n; ++i) {
            int vi = static_cast<int>(c % p.value);
            c /= p.value;
            if (vi)
                lv = lv + Element::generator(ring, static_cast<size_t>(i)).scaled(vi);
        }
        // multiply the X-polynomial by (X - lv)
        std::vector<Element> next(coeffs.size() + 1, Element::zero(ring));
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] = next[k + 1] + coeffs[k];
            next[k] = next[k] - coeffs[k].mul_plain(lv);
        }
        coeffs = std::move(next);
    }
    // the fundamental equation: nonzero coefficients only at X-powers p^i
    std::vector<Element> dickson;
    std::set<long long> ppowers;
    for (long long q = 1; q <= vn; q *= p.value)
        ppowers.insert(q);
    for (size_t k = 0; k + 1 < coeffs.size(); ++k) {
        if (ppowers.count(static_cast<long long>(k))) {
            continue;
        }
        require(coeffs[k].is_zero(),
                "Dickson expansion has a non-p-power coefficient; computation error");
    }
    for (long long q = 1; q < vn; q *= p.value) {
        Element c = coeffs[static_cast<size_t>(q)];
        require(!c.is_zero(), "vanishing Dickson coefficient");
        dickson.push_back(c.monic(MonomialOrder{}));
    }
    // invariance verified on a generating set of GL_n(F_p): the elementary
    // transvection, the transposition and n-cycle permutation matrices, and
    // diag(g, 1, ..., 1) for g a generator of F_p^* (Gaussian elimination
    // shows these generate)
    std::vector<Matrix> gl_gens;
    if (n >= 2) {
        Matrix t = matrix_identity(n);
        t[0][1] = 1;
        gl_gens.push_back(t);
        Matrix swap01 = matrix_identity(n);
        std::swap(swap01[0], swap01[1]);
        gl_gens.push_back(swap01);
        Matrix cshift(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            cshift[static_cast<size_t>((i + 1) % n)][static_cast<size_t>(i)] = 1;
        gl_gens.push_back(cshift);
    }
    if (p.value > 2) {
        int g = 2;
        auto mult_order = [&](int a) {
            int k = 1, cur = a;
            while (cur != 1) {
                cur = fp_mul(cur, a, p.value);
                ++k;
            }
            return k;
        };
        while (mult_order(g) != p.value - 1)
            ++g;
        Matrix sc = matrix_identity(n);
        sc[0][0] = g;
        gl_gens.push_back(sc);
    }
    for (const auto& c : dickson)
        for (const auto& g : gl_gens)
            require(act_matrix(c, g, ring) == c, "Dickson invariant fails invariance check");
    return dickson;
}

LinearRep pointwise_stabilizer(const LinearRep& rep, const std::vector<std::vector<int>>& basis)
{
    LinearRep out{rep.p, rep.dim, {}};
    for (const auto& m : rep.elements()) {
        bool fixes = true;
        for (const auto& u : basis) {
            for (size_t i = 0; i < static_cast<size_t>(rep.dim) && fixes; ++i) {
                int v = 0;
                for (size_t j = 0; j < static_cast<size_t>(rep.dim); ++j)
                    v = fp_add(v, fp_mul(m[i][j], u[j], rep.p.value), rep.p.value);
                if (v != fp_norm(u[i], rep.p.value))
                    fixes = false;
            }
            if (!fixes)
                break;
        }
        if (fixes)
            out.gens.push_back(m);
    }
    if (out.gens.empty())
        out.gens.push_back(matrix_identity(rep.dim));
    return out;
}

namespace {

std::vector<std::vector<int>> fixed_space(const LinearRep& rep)
{
    int p = rep.p.value, n = rep.dim;
    // common kernel of (g - id) over the generators
    std::vector<std::vector<int>> rows;
    for (const auto& g : rep.gens)
        for (int i = 0; i < n; ++i) {
            std::vector<int> row(static_cast<size_t>(n), 0);
            for (int j = 0; j < n; ++j)
                row[static_cast<size_t>(j)] =
                    fp_sub(g[static_cast<size_t>(i)][static_cast<size_t>(j)], i == j ? 1 : 0, p);
            rows.push_back(std::move(row));
        }
    // kernel via augmentation on the transpose
    std::vector<std::vector<int>> aug;
    for (int j = 0; j < n; ++j) {
        std::vector<int> row;
        for (const auto& r : rows)
            row.push_back(r[static_cast<size_t>(j)]);
        row.resize(rows.size() + static_cast<size_t>(n), 0);
        row[rows.size() + static_cast<size_t>(j)] = 1;
        aug.push_back(std::move(row));
    }
    row_reduce_fp(aug, p);
    std::vector<std::vector<int>> basis;
    for (const auto& row : aug) {
        bool zero_left = true;
        for (size_t c = 0; c < rows.size(); ++c)
            if (row[c]) {
                zero_left = false;
                break;
            }
        if (!zero_left)
            continue;
        std::vector<int> v(row.begin() + static_cast<long>(rows.size()), row.end());
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Element restrict_to_subspace(const Element& f, const std::vector<std::vector<int>>& basis,
                             const RingPtr& restricted_ring)
{
    // x_i |-> sum_k basis[k][i] u_k
    std::vector<Element> images;
    size_t n = f.ring()->ngens();
    for (size_t i = 0; i < n; ++i) {
        Element img = Element::zero(restricted_ring);
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k][i])
                img = img + Element::generator(restricted_ring, k).scaled(basis[k][i]);
        images.push_back(img);
    }
    return substitute(f, restricted_ring, images, false);
}

InvariantCenter rector_center_invariants(const LinearRep& rep, const InvariantRingApprox& inv)
{
    InvariantCenter out;
    out.fixed_basis = fixed_space(rep);
    out.rank = static_cast<int>(out.fixed_basis.size());
    if (rep.order() > 1)
        require(out.rank < rep.dim, "faithful nontrivial action cannot fix everything");
    if (rep_is_p_group(rep) && rep.order() > 1)
        require(out.rank > 0, "p-group actions have nonzero fixed spaces");
    out.restricted_ring = poly_ring_n(rep.p, std::max(out.rank, 1), "u");
    for (const auto& g : inv.generators)
        out.restriction_images.push_back(
            out.rank == 0 ? Element::zero(out.restricted_ring)
                          : restrict_to_subspace(g, out.fixed_basis, out.restricted_ring));
    return out;
}

InvariantRingApprox t_component_invariants(const LinearRep& rep,
                                           const std::vector<std::vector<int>>& basis,
                                           int degree_bound)
{
    LinearRep stab = pointwise_stabilizer(rep, basis);
    return invariants_up_to(stab, degree_bound);
}

}  // namespace topnil
