#include "topnil/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace topnil {

// --- Perm ---------------------------------------------------------------------

Perm Perm::identity(int degree)
{
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::compose(const Perm& o) const
{
    require(degree() == o.degree(), "permutation degree mismatch");
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[i] = img_[static_cast<size_t>(o.img_[i])];
    return Perm(std::move(img));
}

Perm Perm::inverse() const
{
    std::vector<int> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        img[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    return Perm(std::move(img));
}

bool Perm::is_identity() const
{
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i))
            return false;
    return true;
}

int element_order(const Perm& g)
{
    Perm cur = g;
    int n = 1;
    while (!cur.is_identity()) {
        cur = cur.compose(g);
        ++n;
        require(n < 1 << 20, "element order runaway");
    }
    return n;
}

ElementList closure(int degree, const std::vector<Perm>& gens)
{
    std::set<Perm> seen;
    std::vector<Perm> frontier{Perm::identity(degree)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                Perm h = g.compose(f);
                if (seen.insert(h).second)
                    next.push_back(h);
            }
        }
        frontier = std::move(next);
        require(seen.size() <= 1u << 20, "group too large to enumerate");
    }
    return ElementList(seen.begin(), seen.end());
}

// --- PermGroup ------------------------------------------------------------------

PermGroup::PermGroup(int degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens))
{
    for (const auto& g : gens_)
        require(g.degree() == degree_, "generator degree mismatch");
}

const ElementList& PermGroup::elements() const
{
    if (elements_.empty())
        elements_ = closure(degree_, gens_);
    return elements_;
}

bool PermGroup::contains(const Perm& g) const
{
    const auto& e = elements();
    return std::binary_search(e.begin(), e.end(), g);
}

ElementList subgroup_generated(const PermGroup& g, const std::vector<Perm>& gens)
{
    return closure(g.degree(), gens);
}

bool is_p_group(const PermGroup& g, int p)
{
    long long n = g.order();
    while (n % p == 0)
        n /= p;
    return n == 1;
}

PermGroup PermGroup::cyclic(int n)
{
    require(n >= 1, "cyclic group of order >= 1");
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        img[static_cast<size_t>(i)] = (i + 1) % n;
    return PermGroup(n, {Perm(std::move(img))});
}

PermGroup PermGroup::dihedral(int n)
{
    require(n >= 3 || n == 2, "dihedral parameter");
    std::vector<int> rot(static_cast<size_t>(n)), ref(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<size_t>(i)] = (i + 1) % n;
        ref[static_cast<size_t>(i)] = (n - i) % n;
    }
    return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(ref))});
}

namespace {

// regular permutation representation from a finite multiplication table
PermGroup regular_representation(const std::vector<std::vector<int>>& table)
{
    int n = static_cast<int>(table.size());
    std::vector<Perm> gens;
    for (int g = 1; g < n; ++g) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x)
            img[static_cast<size_t>(x)] = table[static_cast<size_t>(g)][static_cast<size_t>(x)];
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(n, gens);
}

}  // namespace

PermGroup PermGroup::quaternion8()
{
    // elements 1,-1,i,-i,j,-j,k,-k as 0..7
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // axis 0 = 1, 1 = i, 2 = j, 3 = k
    auto mul = [&](int a, int b) {
        int sa = a % 2 ? -1 : 1, xa = a / 2;
        int sb = b % 2 ? -1 : 1, xb = b / 2;
        static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int prod_sign[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        int axis = prod_axis[xa][xb];
        int sign = sa * sb * prod_sign[xa][xb];
        return idx(sign, axis);
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = mul(a, b);
    return regular_representation(table);
}

PermGroup PermGroup::semidihedral16()
{
    // <r, s | r^8 = s^2 = 1, s r s = r^3>; act on 0..7 (r) and track s via
    // the regular representation of the abstract table
    std::vector<std::vector<int>> table(16, std::vector<int>(16));
    auto enc = [](int i, int j) { return j * 8 + i; };  // r^i s^j
    auto mul = [&](int a, int b) {
        int ia = a % 8, ja = a / 8, ib = b % 8, jb = b / 8;
        // (r^ia s^ja)(r^ib s^jb): s r = r^3 s  =>  s^j r^i = r^{i 3^j} s^j
        int shift = ja == 1 ? (ib * 3) % 8 : ib;
        return enc((ia + shift) % 8, (ja + jb) % 2);
    };
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            table[static_cast<size_t>(a)][static_cast<size_t>(b)] = mul(a, b);
    return regular_representation(table);
}

PermGroup PermGroup::symmetric(int n)
{
    require(n >= 1, "symmetric group parameter");
    if (n == 1)
        return PermGroup(1, {});
    std::vector<int> cyc(static_cast<size_t>(n)), swap01(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cyc[static_cast<size_t>(i)] = (i + 1) % n;
        swap01[static_cast<size_t>(i)] = i;
    }
    std::swap(swap01[0], swap01[1]);
    return PermGroup(n, {Perm(std::move(cyc)), Perm(std::move(swap01))});
}

PermGroup PermGroup::elementary_abelian(int p, int rank)
{
    PermGroup g = cyclic(p);
    for (int i = 1; i < rank; ++i)
        g = direct_product(g, cyclic(p));
    return g;
}

PermGroup PermGroup::direct_product(const PermGroup& a, const PermGroup& b)
{
    int n = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (const auto& g : a.gens()) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < a.degree(); ++i)
            img[static_cast<size_t>(i)] = g(i);
        for (int i = 0; i < b.degree(); ++i)
            img[static_cast<size_t>(a.degree() + i)] = a.degree() + i;
        gens.push_back(Perm(std::move(img)));
    }
    for (const auto& g : b.gens()) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < a.degree(); ++i)
            img[static_cast<size_t>(i)] = i;
        for (int i = 0; i < b.degree(); ++i)
            img[static_cast<size_t>(a.degree() + i)] = a.degree() + g(i);
        gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(n, gens);
}

PermGroup PermGroup::by_name(const std::string& name)
{
    auto x = name.find('x');
    if (x != std::string::npos)
        return direct_product(by_name(name.substr(0, x)), by_name(name.substr(x + 1)));
    if (name == "Q8")
        return quaternion8();
    if (name == "SD16")
        return semidihedral16();
    if (name.size() > 1 && name[0] == 'C')
        return cyclic(std::stoi(name.substr(1)));
    if (name.size() > 1 && name[0] == 'D')
        return dihedral(std::stoi(name.substr(1)) / 2);
    if (name.size() > 1 && name[0] == 'S')
        return symmetric(std::stoi(name.substr(1)));
    if (name.size() > 1 && name[0] == 'V')  // V4 = C2 x C2, V8, ... rank = log2
        return elementary_abelian(2, std::stoi(name.substr(1)));
    fail("unknown group name: " + name);
}

// --- elementary abelian subgroups ------------------------------------------------

namespace {

bool commute(const Perm& a, const Perm& b)
{
    return a.compose(b) == b.compose(a);
}

ElementList conjugate_subgroup(const ElementList& sub, const Perm& g)
{
    ElementList out;
    Perm gi = g.inverse();
    for (const auto& s : sub)
        out.push_back(g.compose(s).compose(gi));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ElAbClass> elementary_abelian_classes(const PermGroup& g, Prime p)
{
    const auto& all = g.elements();
    std::vector<Perm> p_order;
    for (const auto& e : all)
        if (!e.is_identity() && element_order(e) == p.value)
            p_order.push_back(e);

    std::set<ElementList> subgroups;
    ElementList trivial{Perm::identity(g.degree())};
    subgroups.insert(trivial);
    // grow elementary abelian subgroups by adjoining commuting p-order elements
    std::vector<ElementList> frontier{trivial};
    while (!frontier.empty()) {
        std::vector<ElementList> next;
        for (const auto& sub : frontier) {
            for (const auto& e : p_order) {
                if (std::binary_search(sub.begin(), sub.end(), e))
                    continue;
                bool ok = true;
                for (const auto& s : sub)
                    if (!commute(s, e)) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                std::vector<Perm> gens(sub.begin(), sub.end());
                gens.push_back(e);
                ElementList bigger = closure(g.degree(), gens);
                // still elementary abelian by construction (commuting order-p)
                if (subgroups.insert(bigger).second)
                    next.push_back(bigger);
            }
        }
        frontier = std::move(next);
    }

    // conjugacy classes
    std::vector<ElAbClass> classes;
    std::set<ElementList> assigned;
    for (const auto& sub : subgroups) {
        if (assigned.count(sub))
            continue;
        std::set<ElementList> orbit;
        for (const auto& x : all)
            orbit.insert(conjugate_subgroup(sub, x));
        for (const auto& o : orbit)
            assigned.insert(o);
        ElAbClass c;
        c.rep = *orbit.begin();
        c.class_size = static_cast<int>(orbit.size());
        long long n = static_cast<long long>(c.rep.size());
        int rank = 0;
        while (n > 1) {
            require(n % p.value == 0, "elementary abelian subgroup of wrong order");
            n /= p.value;
            ++rank;
        }
        c.rank = rank;
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const ElAbClass& a, const ElAbClass& b) {
        if (a.rank != b.rank)
            return a.rank < b.rank;
        return a.rep < b.rep;
    });
    return classes;
}

QuillenCat quillen_category(const PermGroup& g, Prime p)
{
    QuillenCat cat;
    cat.objects = elementary_abelian_classes(g, p);
    size_t n = cat.objects.size();
    cat.hom.assign(n, std::vector<std::vector<QuillenMorphism>>(n));
    const auto& all = g.elements();
    for (size_t i = 0; i < n; ++i) {
        const auto& e = cat.objects[i].rep;
        for (size_t j = 0; j < n; ++j) {
            const auto& v = cat.objects[j].rep;
            std::set<std::vector<int>> maps;
            for (const auto& x : all) {
                Perm xi = x.inverse();
                std::vector<int> images;
                images.reserve(e.size());
                bool inside = true;
                for (const auto& s : e) {
                    Perm conj = x.compose(s).compose(xi);
                    auto it = std::lower_bound(v.begin(), v.end(), conj);
                    if (it == v.end() || !(*it == conj)) {
                        inside = false;
                        break;
                    }
                    images.push_back(static_cast<int>(it - v.begin()));
                }
                if (inside)
                    maps.insert(images);
            }
            for (const auto& m : maps)
                cat.hom[i][j].push_back({m});
        }
    }
    // EI property: endomorphisms are isomorphisms
    for (size_t i = 0; i < n; ++i)
        for (const auto& m : cat.hom[i][i]) {
            std::set<int> img(m.images.begin(), m.images.end());
            require(img.size() == m.images.size(), "Quillen endomorphism is not injective");
        }
    return cat;
}

ElementList centralizer(const PermGroup& g, const ElementList& subgroup)
{
    ElementList out;
    for (const auto& x : g.elements()) {
        bool ok = true;
        for (const auto& s : subgroup)
            if (!commute(x, s)) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(x);
    }
    return out;
}

ElementList center_elements(const PermGroup& g)
{
    return centralizer(g, g.elements());
}

ElementList o_p_prime(const PermGroup& g, Prime p)
{
    const auto& all = g.elements();
    std::vector<Perm> collected{Perm::identity(g.degree())};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : all) {
            if (element_order(e) % p.value == 0)
                continue;
            // normal closure of <collected, e>
            std::vector<Perm> gens = collected;
            gens.push_back(e);
            ElementList sub = closure(g.degree(), gens);
            while (true) {
                std::vector<Perm> extra;
                for (const auto& x : all) {
                    Perm xi = x.inverse();
                    for (const auto& s : sub) {
                        Perm c = x.compose(s).compose(xi);
                        if (!std::binary_search(sub.begin(), sub.end(), c))
                            extra.push_back(c);
                    }
                }
                if (extra.empty())
                    break;
                std::vector<Perm> more(sub.begin(), sub.end());
                more.insert(more.end(), extra.begin(), extra.end());
                sub = closure(g.degree(), more);
            }
            if (static_cast<long long>(sub.size()) % p.value != 0 &&
                sub.size() > closure(g.degree(), collected).size()) {
                collected.assign(sub.begin(), sub.end());
                grew = true;
            }
        }
    }
    return closure(g.degree(), collected);
}

size_t cohomological_center_class(const PermGroup& g, Prime p)
{
    ElementList o = o_p_prime(g, p);
    // quotient Q = G/O as a permutation group on cosets
    const auto& all = g.elements();
    std::vector<ElementList> cosets;
    std::map<Perm, int> coset_of;
    for (const auto& x : all) {
        if (coset_of.count(x))
            continue;
        ElementList coset;
        for (const auto& n : o)
            coset.push_back(x.compose(n));
        std::sort(coset.begin(), coset.end());
        int id = static_cast<int>(cosets.size());
        for (const auto& y : coset)
            coset_of[y] = id;
        cosets.push_back(std::move(coset));
    }
    int q = static_cast<int>(cosets.size());
    std::vector<Perm> qgens;
    for (const auto& x : g.gens()) {
        std::vector<int> img(static_cast<size_t>(q));
        for (int c = 0; c < q; ++c)
            img[static_cast<size_t>(c)] = coset_of.at(x.compose(cosets[static_cast<size_t>(c)][0]));
        qgens.push_back(Perm(std::move(img)));
    }
    PermGroup quotient(q, qgens);

    // maximal elementary abelian p-subgroup of Z(Q)
    ElementList zq = center_elements(quotient);
    std::vector<Perm> omega;
    for (const auto& z : zq) {
        if (z.is_identity() || element_order(z) == p.value)
            omega.push_back(z);
    }
    ElementList cq = closure(q, omega);
    long long target_order = static_cast<long long>(cq.size());

    // pull back: find an elementary abelian subgroup of G of the right order
    // inside the preimage, mapping onto C_Q
    auto image_in_q = [&](const Perm& x) {
        std::vector<int> img(static_cast<size_t>(q));
        for (int c = 0; c < q; ++c)
            img[static_cast<size_t>(c)] = coset_of.at(x.compose(cosets[static_cast<size_t>(c)][0]));
        return Perm(std::move(img));
    };
    std::vector<ElAbClass> classes = elementary_abelian_classes(g, p);
    for (size_t i = classes.size(); i-- > 0;) {
        const auto& cls = classes[i];
        if (static_cast<long long>(cls.rep.size()) != target_order)
            continue;
        // conjugates of the representative may or may not land in C_Q; test all
        for (const auto& x : all) {
            ElementList conj = conjugate_subgroup(cls.rep, x);
            bool onto = true;
            std::set<Perm> images;
            for (const auto& s : conj) {
                Perm si = image_in_q(s);
                if (!std::binary_search(cq.begin(), cq.end(), si)) {
                    onto = false;
                    break;
                }
                images.insert(si);
            }
            if (onto && static_cast<long long>(images.size()) == target_order)
                return i;
        }
    }
    fail("no elementary abelian class realizes the cohomological center");
}

int p_central_defect(const PermGroup& g, Prime p)
{
    std::vector<ElAbClass> classes = elementary_abelian_classes(g, p);
    int max_rank = 0;
    for (const auto& c : classes)
        max_rank = std::max(max_rank, c.rank);
    size_t center = cohomological_center_class(g, p);
    return max_rank - classes[center].rank;
}

// --- Betti numbers over F_pG -------------------------------------------------------

namespace {

using Vec = std::vector<int>;  // dense F_p vector

struct FpGModuleCtx {
    int p = 2;
    long long n = 0;  // |G|
    std::vector<std::vector<int>> left_mult;  // left_mult[k][i] = index of g_k * g_i
    std::vector<int> gen_indices;             // indices of the group generators
};

Vec act(const FpGModuleCtx& ctx, int elt_index, const Vec& v)
{
    // block structure: v lives in A^m, each block of size n
    Vec out(v.size(), 0);
    size_t blocks = v.size() / static_cast<size_t>(ctx.n);
    for (size_t b = 0; b < blocks; ++b)
        for (long long i = 0; i < ctx.n; ++i) {
            int c = v[b * static_cast<size_t>(ctx.n) + static_cast<size_t>(i)];
            if (c)
                out[b * static_cast<size_t>(ctx.n) +
                    static_cast<size_t>(ctx.left_mult[static_cast<size_t>(elt_index)]
                                                     [static_cast<size_t>(i)])] =
                    fp_add(out[b * static_cast<size_t>(ctx.n) +
                               static_cast<size_t>(
                                   ctx.left_mult[static_cast<size_t>(elt_index)]
                                                [static_cast<size_t>(i)])],
                           c, ctx.p);
        }
    return out;
}

size_t row_reduce(std::vector<Vec>& rows, int p)
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
        for (size_t cc = c; cc < ncols; ++cc)
            rows[rr][cc] = fp_mul(rows[rr][cc], inv, p);
        for (size_t r2 = 0; r2 < rows.size(); ++r2) {
            if (r2 == rr || rows[r2][c] == 0)
                continue;
            int f = rows[r2][c];
            for (size_t cc = c; cc < ncols; ++cc)
                rows[r2][cc] = fp_sub(rows[r2][cc], fp_mul(f, rows[rr][cc], p), p);
        }
        ++rr;
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// basis of the span of `vectors` not lying in span(reducers)
std::vector<Vec> complement_basis(std::vector<Vec> vectors, std::vector<Vec> reducers, int p)
{
    row_reduce(reducers, p);
    std::vector<Vec> picked = reducers;
    std::vector<Vec> out;
    for (auto& v : vectors) {
        std::vector<Vec> trial = picked;
        trial.push_back(v);
        size_t before = picked.size();
        if (row_reduce(trial, p) > before) {
            picked = trial;
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

std::vector<long long> betti_numbers(const PermGroup& g, Prime p, int n_max, BettiOptions opt)
{
    require(g.order() <= opt.order_cap,
            "group order exceeds the Betti oracle cap of " + std::to_string(opt.order_cap));
    require(is_p_group(g, p.value),
            "the Betti oracle uses the augmentation ideal as the radical and needs a p-group");

    const auto& all = g.elements();
    FpGModuleCtx ctx;
    ctx.p = p.value;
    ctx.n = g.order();
    std::map<Perm, int> index;
    for (size_t i = 0; i < all.size(); ++i)
        index[all[i]] = static_cast<int>(i);
    ctx.left_mult.resize(all.size());
    for (size_t k = 0; k < all.size(); ++k) {
        ctx.left_mult[k].resize(all.size());
        for (size_t i = 0; i < all.size(); ++i)
            ctx.left_mult[k][i] = index.at(all[k].compose(all[i]));
    }
    for (const auto& gen : g.gens())
        ctx.gen_indices.push_back(index.at(gen));
    if (ctx.gen_indices.empty())
        ctx.gen_indices.push_back(index.at(Perm::identity(g.degree())));

    std::vector<long long> betti;
    betti.push_back(1);  // H^0

    // kernel of the augmentation A -> F_p: spanned by (g - 1)
    std::vector<Vec> kernel;
    for (size_t i = 1; i < all.size(); ++i) {
        Vec v(static_cast<size_t>(ctx.n), 0);
        v[i] = 1;
        v[0] = fp_sub(v[0], 1, ctx.p);
        kernel.push_back(std::move(v));
    }
    row_reduce(kernel, ctx.p);

    for (int step = 1; step <= n_max; ++step) {
        // J * K: module closure of (s - 1) k over the group algebra
        std::vector<Vec> jk;
        for (int s : ctx.gen_indices) {
            for (const auto& k : kernel) {
                Vec w = act(ctx, s, k);
                for (size_t i = 0; i < w.size(); ++i)
                    w[i] = fp_sub(w[i], k[i], ctx.p);
                jk.push_back(std::move(w));
            }
        }
        // close under the G-action
        {
            std::vector<Vec> closed = jk;
            row_reduce(closed, ctx.p);
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<Vec> extra;
                for (int s : ctx.gen_indices)
                    for (const auto& v : closed)
                        extra.push_back(act(ctx, s, v));
                size_t before = closed.size();
                closed.insert(closed.end(), extra.begin(), extra.end());
                if (row_reduce(closed, ctx.p) > before)
                    grew = true;
            }
            jk = std::move(closed);
        }
        std::vector<Vec> gens = complement_basis(kernel, jk, ctx.p);
        long long b = static_cast<long long>(gens.size());
        betti.push_back(b);
        if (step == n_max)
            break;

        // next kernel: of A^b -> previous module, e_i -> gens[i]
        size_t prev_len = kernel.empty() ? static_cast<size_t>(ctx.n) : kernel[0].size();
        size_t dom = static_cast<size_t>(b) * static_cast<size_t>(ctx.n);
        // matrix columns: basis (i, group element idx) -> image vector
        std::vector<Vec> cols;
        for (long long i = 0; i < b; ++i)
            for (long long e = 0; e < ctx.n; ++e)
                cols.push_back(act(ctx, static_cast<int>(e), gens[static_cast<size_t>(i)]));
        // kernel of the matrix via row reduction of [cols | id]
        std::vector<Vec> aug;
        for (size_t c = 0; c < cols.size(); ++c) {
            Vec row = cols[c];
            row.resize(prev_len + dom, 0);
            row[prev_len + c] = 1;
            aug.push_back(std::move(row));
        }
        row_reduce(aug, ctx.p);
        std::vector<Vec> next_kernel;
        for (const auto& row : aug) {
            bool zero_left = true;
            for (size_t c = 0; c < prev_len; ++c)
                if (row[c]) {
                    zero_left = false;
                    break;
                }
            if (!zero_left)
                continue;
            Vec v(row.begin() + static_cast<long>(prev_len), row.end());
            next_kernel.push_back(std::move(v));
        }
        kernel = std::move(next_kernel);
        row_reduce(kernel, ctx.p);
    }
    return betti;
}

}  // namespace topnil
