#include "topnil/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace topnil {

// --- ModElement -------------------------------------------------------------

namespace {

// storage order: component ascending, then monomial graded-revlex descending
bool storage_less(const GradedRing& r, const ModTerm& a, const ModTerm& b)
{
    if (a.comp != b.comp)
        return a.comp < b.comp;
    MonomialOrder ord{};
    return ord.cmp(r, a.mon, b.mon) > 0;
}

// GB term order: optional dominant component block (components < elim_comps
// beat the rest), then weighted monomial degree via grevlex, smaller
// component wins ties
struct ModOrder {
    size_t elim_comps = 0;

    int cmp(const GradedRing& r, const ModTerm& a, const ModTerm& b) const
    {
        int blk_a = static_cast<size_t>(a.comp) < elim_comps ? 0 : 1;
        int blk_b = static_cast<size_t>(b.comp) < elim_comps ? 0 : 1;
        if (blk_a != blk_b)
            return blk_a < blk_b ? 1 : -1;  // block 0 dominates
        MonomialOrder ord{};
        int c = ord.cmp(r, a.mon, b.mon);
        if (c != 0)
            return c;
        if (a.comp != b.comp)
            return a.comp < b.comp ? 1 : -1;  // lower component is larger
        return 0;
    }
};

const ModTerm& lead_term(const GradedRing& r, const ModOrder& ord,
                         const std::vector<ModTerm>& terms)
{
    require(!terms.empty(), "lead of zero module element");
    size_t best = 0;
    for (size_t i = 1; i < terms.size(); ++i)
        if (ord.cmp(r, terms[i], terms[best]) > 0)
            best = i;
    return terms[best];
}

std::vector<Monomial> monomials_of_degree(const GradedRing& r, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    Monomial cur = Monomial::one(r.ngens());
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (i == r.ngens())
            return;
        rec(i + 1, left);
        int dg = r.gen(i).degree;
        for (int k = 1; k * dg <= left; ++k) {
            cur.exp[i] = static_cast<uint16_t>(k);
            rec(i + 1, left - k * dg);
        }
        cur.exp[i] = 0;
    };
    rec(0, d);
    return out;
}

}  // namespace

ModElement ModElement::unit(RingPtr cover, int comp)
{
    size_t n = cover->ngens();
    return single(std::move(cover), comp, Monomial::one(n), 1);
}

ModElement ModElement::single(RingPtr cover, int comp, Monomial m, int c)
{
    ModElement e(cover);
    int cc = fp_norm(c, e.cover_->p());
    if (cc)
        e.terms_.push_back({comp, std::move(m), cc});
    return e;
}

void ModElement::normalize()
{
    std::sort(terms_.begin(), terms_.end(),
              [&](const ModTerm& a, const ModTerm& b) { return storage_less(*cover_, a, b); });
    std::vector<ModTerm> out;
    int p = cover_->p();
    for (auto& t : terms_) {
        if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon)
            out.back().coeff = fp_add(out.back().coeff, t.coeff, p);
        else
            out.push_back(t);
        if (!out.empty() && out.back().coeff == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

ModElement ModElement::operator+(const ModElement& o) const
{
    require(cover_ == o.cover_, "module element cover mismatch");
    ModElement r(cover_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

ModElement ModElement::operator-(const ModElement& o) const
{
    return *this + o.scaled(-1);
}

ModElement ModElement::scaled(int c) const
{
    ModElement r(cover_);
    int cc = fp_norm(c, cover_->p());
    if (!cc)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_)
        t.coeff = fp_mul(t.coeff, cc, cover_->p());
    return r;
}

ModElement ModElement::times(const Monomial& m, int c) const
{
    ModElement r(cover_);
    int cc = fp_norm(c, cover_->p());
    if (!cc)
        return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.mon = t.mon.times(m);
        t.coeff = fp_mul(t.coeff, cc, cover_->p());
    }
    r.normalize();
    return r;
}

int ModElement::degree(const std::vector<int>& comp_degrees) const
{
    require(!terms_.empty(), "degree of zero module element");
    return terms_[0].mon.degree(*cover_) + comp_degrees.at(static_cast<size_t>(terms_[0].comp));
}

bool ModElement::is_homogeneous(const std::vector<int>& comp_degrees) const
{
    if (terms_.empty())
        return true;
    int d = degree(comp_degrees);
    for (const auto& t : terms_)
        if (t.mon.degree(*cover_) + comp_degrees.at(static_cast<size_t>(t.comp)) != d)
            return false;
    return true;
}

const ModTerm& ModElement::lead() const
{
    return lead_term(*cover_, ModOrder{}, terms_);
}

bool ModElement::operator==(const ModElement& o) const
{
    return cover_ == o.cover_ && terms_.size() == o.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                      [](const ModTerm& a, const ModTerm& b) {
                          return a.comp == b.comp && a.mon == b.mon && a.coeff == b.coeff;
                      });
}

// --- module Buchberger -------------------------------------------------------

namespace {

class ModGBImpl {
public:
    ModGBImpl(RingPtr cover, ModOrder ord) : cover_(std::move(cover)), ord_(ord) {}

    void run(std::vector<ModElement> gens)
    {
        for (auto& g : gens) {
            if (g.is_zero())
                continue;
            basis_.push_back(monic(g));
        }
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t i = 0; i < basis_.size(); ++i)
            for (size_t j = i + 1; j < basis_.size(); ++j)
                if (lead(i).comp == lead(j).comp)
                    pairs.emplace_back(i, j);
        while (!pairs.empty()) {
            size_t best = 0;
            int best_deg = -1;
            for (size_t k = 0; k < pairs.size(); ++k) {
                Monomial l = Monomial::lcm(lead(pairs[k].first).mon, lead(pairs[k].second).mon);
                int d = l.degree(*cover_);
                if (best_deg < 0 || d < best_deg) {
                    best_deg = d;
                    best = k;
                }
            }
            auto [i, j] = pairs[best];
            pairs.erase(pairs.begin() + static_cast<long>(best));
            Monomial l = Monomial::lcm(lead(i).mon, lead(j).mon);
            ModElement s = basis_[i].times(l.div(lead(i).mon), 1) -
                           basis_[j].times(l.div(lead(j).mon), 1);
            ModElement r = normal_form(s);
            if (!r.is_zero()) {
                r = monic(r);
                int rcomp = lead_term(*cover_, ord_, r.terms()).comp;
                for (size_t k = 0; k < basis_.size(); ++k)
                    if (lead(k).comp == rcomp)
                        pairs.emplace_back(k, basis_.size());
                basis_.push_back(std::move(r));
            }
        }
        interreduce();
    }

    ModElement normal_form(const ModElement& e) const
    {
        ModElement rem(cover_);
        ModElement cur = e;
        while (!cur.is_zero()) {
            ModTerm lt = lead_term(*cover_, ord_, cur.terms());
            bool reduced = false;
            for (const auto& g : basis_) {
                const ModTerm glt = lead_term(*cover_, ord_, g.terms());
                if (glt.comp == lt.comp && glt.mon.divides(lt.mon)) {
                    Monomial q = lt.mon.div(glt.mon);
                    int c = fp_mul(lt.coeff, fp_inv(glt.coeff, cover_->p()), cover_->p());
                    cur = cur - g.times(q, c);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                ModElement mono = ModElement::single(cover_, lt.comp, lt.mon, lt.coeff);
                rem = rem + mono;
                cur = cur - mono;
            }
        }
        return rem;
    }

    std::vector<ModElement> take_basis() { return std::move(basis_); }
    void set_basis(std::vector<ModElement> b) { basis_ = std::move(b); }

private:
    RingPtr cover_;
    ModOrder ord_;
    std::vector<ModElement> basis_;

    const ModTerm& lead(size_t i) const { return lead_term(*cover_, ord_, basis_[i].terms()); }

    ModElement monic(const ModElement& e) const
    {
        const ModTerm& lt = lead_term(*cover_, ord_, e.terms());
        return e.scaled(fp_inv(lt.coeff, cover_->p()));
    }

    void interreduce()
    {
        std::vector<ModElement> kept;
        for (size_t i = 0; i < basis_.size(); ++i) {
            const ModTerm& mi = lead(i);
            bool redundant = false;
            for (size_t j = 0; j < basis_.size(); ++j) {
                if (i == j)
                    continue;
                const ModTerm& mj = lead(j);
                if (mj.comp == mi.comp && mj.mon.divides(mi.mon)) {
                    if (!(mj.mon == mi.mon) || j < i) {
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
            ModGBImpl others(cover_, ord_);
            for (size_t j = 0; j < basis_.size(); ++j)
                if (j != i)
                    others.basis_.push_back(basis_[j]);
            ModElement r = others.normal_form(basis_[i]);
            require(!r.is_zero(), "module interreduction produced zero");
            basis_[i] = monic(r);
        }
    }
};

}  // namespace

ModuleGB::ModuleGB(RingPtr cover, std::vector<int> comp_degrees, std::vector<ModElement> gens)
    : cover_(std::move(cover)), comp_degrees_(std::move(comp_degrees))
{
    buchberger(std::move(gens));
}

void ModuleGB::buchberger(std::vector<ModElement> gens)
{
    for (const auto& g : gens)
        if (!g.is_zero())
            require(g.is_homogeneous(comp_degrees_), "module generators must be homogeneous");
    ModGBImpl impl(cover_, ModOrder{});
    impl.run(std::move(gens));
    basis_ = impl.take_basis();
}

ModElement ModuleGB::normal_form(const ModElement& e) const
{
    ModGBImpl impl(cover_, ModOrder{});
    impl.set_basis(basis_);
    return impl.normal_form(e);
}

long long ModuleGB::dimension_in_degree(int d) const
{
    long long count = 0;
    for (size_t c = 0; c < comp_degrees_.size(); ++c) {
        int md = d - comp_degrees_[c];
        if (md < 0)
            continue;
        for (const auto& m : monomials_of_degree(*cover_, md)) {
            bool divisible = false;
            for (const auto& g : basis_) {
                const ModTerm glt = lead_term(*cover_, ModOrder{}, g.terms());
                if (glt.comp == static_cast<int>(c) && glt.mon.divides(m)) {
                    divisible = true;
                    break;
                }
            }
            if (divisible)
                ++count;
        }
    }
    return count;
}

// --- syzygies ------------------------------------------------------------------

namespace {

/// Kernel of S^k -> F, e_i |-> vectors[i].  Elimination computation: GB of
/// {(v_i, e_i)} in F (+) S^k under an order where the F block dominates; the
/// members supported on the tracker block form a basis of the syzygy module.
std::vector<ModElement> syzygies(const RingPtr& cover, const std::vector<int>& ambient_degrees,
                                 const std::vector<ModElement>& vectors)
{
    size_t na = ambient_degrees.size();
    size_t k = vectors.size();
    std::vector<ModElement> gens;
    for (size_t i = 0; i < k; ++i) {
        ModElement g(cover);
        for (const auto& t : vectors[i].terms())
            g = g + ModElement::single(cover, t.comp, t.mon, t.coeff);
        g = g + ModElement::unit(cover, static_cast<int>(na + i));
        gens.push_back(g);
    }
    ModGBImpl impl(cover, ModOrder{na});
    impl.run(std::move(gens));
    std::vector<ModElement> out;
    for (const auto& g : impl.take_basis()) {
        bool pure = true;
        for (const auto& t : g.terms())
            if (t.comp < static_cast<int>(na)) {
                pure = false;
                break;
            }
        if (!pure)
            continue;
        ModElement s(cover);
        for (const auto& t : g.terms())
            s = s + ModElement::single(cover, t.comp - static_cast<int>(na), t.mon, t.coeff);
        out.push_back(s);
    }
    return out;
}

/// Minimal homogeneous generating set (ascending degree, graded Nakayama).
std::vector<ModElement> minimal_generators(const RingPtr& cover,
                                           const std::vector<int>& comp_degrees,
                                           std::vector<ModElement> gens)
{
    std::vector<ModElement> nonzero;
    for (auto& g : gens)
        if (!g.is_zero())
            nonzero.push_back(g);
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [&](const ModElement& a, const ModElement& b) {
                         return a.degree(comp_degrees) < b.degree(comp_degrees);
                     });
    std::vector<ModElement> accepted;
    for (const auto& g : nonzero) {
        ModuleGB gb(cover, comp_degrees, accepted);
        ModElement r = gb.normal_form(g);
        if (!r.is_zero())
            accepted.push_back(r);
    }
    return accepted;
}

}  // namespace

// --- GradedModule / resolutions ---------------------------------------------

void GradedModule::validate() const
{
    for (size_t i = 0; i < cover->ngens(); ++i)
        require(!cover->odd(i), "module cover must be a polynomial ring on even generators");
    for (const auto& r : relations) {
        require(r.cover() == cover, "relation over wrong cover");
        require(r.is_homogeneous(gen_degrees), "module relations must be homogeneous");
    }
}

namespace {

/// Remove presentation generators hit by unit relation entries, rewriting
/// the remaining relations accordingly.
GradedModule minimalize_presentation(GradedModule m)
{
    while (true) {
        int rel_idx = -1, comp = -1, coeff = 0;
        for (size_t r = 0; r < m.relations.size() && rel_idx < 0; ++r) {
            for (const auto& t : m.relations[r].terms()) {
                if (t.mon.is_one()) {
                    rel_idx = static_cast<int>(r);
                    comp = t.comp;
                    coeff = t.coeff;
                    break;
                }
            }
        }
        if (rel_idx < 0)
            return m;
        int p = m.cover->p();
        ModElement rest(m.cover);
        for (const auto& t : m.relations[static_cast<size_t>(rel_idx)].terms())
            if (!(t.comp == comp && t.mon.is_one()))
                rest = rest + ModElement::single(m.cover, t.comp, t.mon, t.coeff);
        ModElement expr = rest.scaled(fp_neg(fp_inv(coeff, p), p));

        GradedModule out;
        out.cover = m.cover;
        std::vector<int> remap(m.gen_degrees.size(), -1);
        int next = 0;
        for (size_t c = 0; c < m.gen_degrees.size(); ++c) {
            if (static_cast<int>(c) == comp)
                continue;
            remap[c] = next++;
            out.gen_degrees.push_back(m.gen_degrees[c]);
        }
        auto rewrite = [&](const ModElement& e) {
            ModElement acc(m.cover);
            for (const auto& t : e.terms()) {
                if (t.comp == comp)
                    acc = acc + expr.times(t.mon, t.coeff);
                else
                    acc = acc + ModElement::single(m.cover, t.comp, t.mon, t.coeff);
            }
            ModElement mapped(m.cover);
            for (const auto& t : acc.terms()) {
                require(t.comp != comp, "presentation minimalization loop");
                mapped = mapped + ModElement::single(m.cover, remap[static_cast<size_t>(t.comp)],
                                                     t.mon, t.coeff);
            }
            return mapped;
        };
        for (size_t r = 0; r < m.relations.size(); ++r) {
            if (static_cast<int>(r) == rel_idx)
                continue;
            ModElement w = rewrite(m.relations[r]);
            if (!w.is_zero())
                out.relations.push_back(w);
        }
        m = std::move(out);
    }
}

long long rank_in_degree(const RingPtr& cover, const std::vector<ModElement>& cols,
                         const std::vector<int>& src_degs, const std::vector<int>& dst_degs,
                         int d, long long* src_dim_out)
{
    std::vector<std::pair<int, Monomial>> src_basis;
    for (size_t c = 0; c < src_degs.size(); ++c)
        for (const auto& mon : monomials_of_degree(*cover, d - src_degs[c]))
            src_basis.push_back({static_cast<int>(c), mon});
    std::map<std::pair<int, std::vector<uint16_t>>, size_t> dst_index;
    size_t dst_n = 0;
    for (size_t c = 0; c < dst_degs.size(); ++c)
        for (const auto& mon : monomials_of_degree(*cover, d - dst_degs[c]))
            dst_index[{static_cast<int>(c), mon.exp}] = dst_n++;

    std::vector<std::vector<int>> mat(src_basis.size(), std::vector<int>(dst_n, 0));
    for (size_t s = 0; s < src_basis.size(); ++s) {
        ModElement img = cols[static_cast<size_t>(src_basis[s].first)].times(src_basis[s].second, 1);
        for (const auto& t : img.terms()) {
            auto it = dst_index.find({t.comp, t.mon.exp});
            require(it != dst_index.end(), "degree bookkeeping error in exactness check");
            mat[s][it->second] = t.coeff;
        }
    }
    int p = cover->p();
    size_t rank = 0, rr = 0;
    for (size_t c = 0; c < dst_n && rr < mat.size(); ++c) {
        size_t piv = rr;
        while (piv < mat.size() && mat[piv][c] == 0)
            ++piv;
        if (piv == mat.size())
            continue;
        std::swap(mat[piv], mat[rr]);
        int inv = fp_inv(mat[rr][c], p);
        for (size_t cc = 0; cc < dst_n; ++cc)
            mat[rr][cc] = fp_mul(mat[rr][cc], inv, p);
        for (size_t r2 = 0; r2 < mat.size(); ++r2) {
            if (r2 == rr || mat[r2][c] == 0)
                continue;
            int f = mat[r2][c];
            for (size_t cc = 0; cc < dst_n; ++cc)
                mat[r2][cc] = fp_sub(mat[r2][cc], fp_mul(f, mat[rr][cc], p), p);
        }
        ++rr;
        ++rank;
    }
    if (src_dim_out)
        *src_dim_out = static_cast<long long>(src_basis.size());
    return static_cast<long long>(rank);
}

}  // namespace

BettiTable Resolution::betti() const
{
    BettiTable t;
    for (const auto& degs : degrees) {
        std::map<int, long long> row;
        for (int d : degs)
            row[d]++;
        std::vector<std::pair<int, long long>> r(row.begin(), row.end());
        t.rows.push_back(std::move(r));
    }
    return t;
}

long long BettiTable::beta(int i, int j) const
{
    if (i < 0 || static_cast<size_t>(i) >= rows.size())
        return 0;
    for (const auto& [d, b] : rows[static_cast<size_t>(i)])
        if (d == j)
            return b;
    return 0;
}

std::string BettiTable::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        os << "beta_" << i << ":";
        for (const auto& [j, b] : rows[i])
            os << " (" << j << ")->" << b;
        os << "\n";
    }
    return os.str();
}

Resolution minimal_free_resolution(const GradedModule& m_in, ResolutionOptions opt)
{
    m_in.validate();
    GradedModule m = minimalize_presentation(m_in);

    Resolution res;
    res.module = m;
    res.degrees.push_back(m.gen_degrees);

    std::vector<ModElement> current = minimal_generators(m.cover, m.gen_degrees, m.relations);
    std::vector<int> current_ambient = m.gen_degrees;

    while (!current.empty()) {
        require(static_cast<int>(res.maps.size()) < opt.length_cap,
                "resolution length cap exceeded before reaching projective dimension");
        std::vector<int> degs;
        for (const auto& g : current)
            degs.push_back(g.degree(current_ambient));
        for (const auto& g : current)
            for (const auto& t : g.terms())
                require(!t.mon.is_one() ||
                            g.degree(current_ambient) >
                                current_ambient[static_cast<size_t>(t.comp)],
                        "non-minimal differential entry");
        res.maps.push_back(current);
        res.degrees.push_back(degs);

        std::vector<ModElement> syz = syzygies(m.cover, current_ambient, current);
        current = minimal_generators(m.cover, degs, syz);
        current_ambient = degs;
    }

    if (opt.verify_exactness) {
        for (size_t k = 0; k + 1 < res.maps.size(); ++k) {
            for (const auto& col : res.maps[k + 1]) {
                ModElement img(m.cover);
                for (const auto& t : col.terms())
                    img = img + res.maps[k][static_cast<size_t>(t.comp)].times(t.mon, t.coeff);
                require(img.is_zero(), "resolution differentials do not compose to zero");
            }
        }
        int top_rel = 0;
        for (const auto& r : m.relations)
            if (!r.is_zero())
                top_rel = std::max(top_rel, r.degree(m.gen_degrees));
        int bound = top_rel + opt.exactness_slack;
        for (size_t k = 1; k <= res.maps.size(); ++k) {
            for (int d = 0; d <= bound; ++d) {
                long long dim_k = 0;
                long long rk_k =
                    rank_in_degree(m.cover, res.maps[k - 1], res.degrees[k], res.degrees[k - 1],
                                   d, &dim_k);
                long long ker = dim_k - rk_k;
                long long im_next = 0;
                if (k < res.maps.size())
                    im_next = rank_in_degree(m.cover, res.maps[k], res.degrees[k + 1],
                                             res.degrees[k], d, nullptr);
                require(ker == im_next, "resolution not exact in degree " + std::to_string(d) +
                                            " at homological index " + std::to_string(k));
            }
        }
    }
    return res;
}

// --- Ext and the local cohomology profile ------------------------------------

namespace {

struct ExtData {
    bool nonzero = false;
    int indeg = 0;  // meaningful when nonzero
};

/// Ext^j(M, S) for all j, from the dualized minimal resolution.
std::vector<ExtData> ext_modules(const Resolution& res)
{
    const RingPtr& cover = res.module.cover;
    int pd = static_cast<int>(res.maps.size());
    std::vector<ExtData> out(static_cast<size_t>(pd) + 1);

    std::vector<std::vector<int>> dual_degs;
    for (const auto& degs : res.degrees) {
        std::vector<int> d;
        for (int x : degs)
            d.push_back(-x);
        dual_degs.push_back(d);
    }
    // dual of d_k: F_{k-1}* -> F_k*
    auto dual_map = [&](size_t k) {
        const auto& cols = res.maps[k - 1];
        size_t nr = res.degrees[k - 1].size();
        std::vector<ModElement> dcols(nr, ModElement(cover));
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& t : cols[c].terms())
                dcols[static_cast<size_t>(t.comp)] =
                    dcols[static_cast<size_t>(t.comp)] +
                    ModElement::single(cover, static_cast<int>(c), t.mon, t.coeff);
        return dcols;
    };

    for (int j = 0; j <= pd; ++j) {
        std::vector<ModElement> ker_gens;
        if (j < pd) {
            std::vector<ModElement> dj1 = dual_map(static_cast<size_t>(j) + 1);
            ker_gens = syzygies(cover, dual_degs[static_cast<size_t>(j) + 1], dj1);
        }
        else {
            for (size_t c = 0; c < dual_degs[static_cast<size_t>(j)].size(); ++c)
                ker_gens.push_back(ModElement::unit(cover, static_cast<int>(c)));
        }
        std::vector<ModElement> im_gens;
        if (j >= 1)
            im_gens = dual_map(static_cast<size_t>(j));

        ModuleGB im_gb(cover, dual_degs[static_cast<size_t>(j)], im_gens);
        int witness = 0;
        bool nonzero = false;
        for (const auto& g : ker_gens) {
            if (g.is_zero())
                continue;
            ModElement r = im_gb.normal_form(g);
            if (!r.is_zero()) {
                int d = g.degree(dual_degs[static_cast<size_t>(j)]);
                witness = nonzero ? std::min(witness, d) : d;
                nonzero = true;
            }
        }
        out[static_cast<size_t>(j)].nonzero = nonzero;
        if (!nonzero)
            continue;
        ModuleGB ker_gb(cover, dual_degs[static_cast<size_t>(j)], ker_gens);
        int lo = witness;
        for (int d : dual_degs[static_cast<size_t>(j)])
            lo = std::min(lo, d);
        int indeg = witness;
        for (int d = lo; d <= witness; ++d) {
            if (ker_gb.dimension_in_degree(d) > im_gb.dimension_in_degree(d)) {
                indeg = d;
                break;
            }
        }
        out[static_cast<size_t>(j)].indeg = indeg;
    }
    return out;
}

bool module_is_zero(const GradedModule& m)
{
    ModuleGB gb(m.cover, m.gen_degrees, m.relations);
    for (size_t c = 0; c < m.gen_degrees.size(); ++c)
        if (!gb.contains(ModElement::unit(m.cover, static_cast<int>(c))))
            return false;
    return true;
}

}  // namespace

int LocalCohomologyProfile::depth() const
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            return static_cast<int>(i);
    fail("depth of the zero module");
}

int LocalCohomologyProfile::dimension() const
{
    for (size_t i = a.size(); i-- > 0;)
        if (a[i])
            return static_cast<int>(i);
    fail("dimension of the zero module");
}

bool LocalCohomologyProfile::all_empty() const
{
    for (const auto& x : a)
        if (x)
            return false;
    return true;
}

LocalCohomologyProfile local_cohomology_degrees(const GradedModule& m)
{
    m.validate();
    size_t n = m.cover->ngens();
    LocalCohomologyProfile prof;
    prof.a.assign(n + 1, std::nullopt);
    if (module_is_zero(m))
        return prof;

    int sigma = 0;
    for (size_t i = 0; i < n; ++i)
        sigma += m.cover->gen(i).degree;

    Resolution res = minimal_free_resolution(m);
    int pd = static_cast<int>(res.maps.size());
    require(pd <= static_cast<int>(n), "projective dimension exceeds cover size");
    std::vector<ExtData> ext = ext_modules(res);
    // graded local duality over the cover: a_i(M) = -sigma - indeg Ext^{n-i}(M, S)
    for (size_t i = 0; i <= n; ++i) {
        size_t j = n - i;
        if (j > static_cast<size_t>(pd) || !ext[j].nonzero)
            continue;
        prof.a[i] = -sigma - ext[j].indeg;
    }
    return prof;
}

int depth(const GradedModule& m)
{
    return local_cohomology_degrees(m).depth();
}

int dimension(const GradedModule& m)
{
    return local_cohomology_degrees(m).dimension();
}

int regularity(const GradedModule& m)
{
    LocalCohomologyProfile prof = local_cohomology_degrees(m);
    require(!prof.all_empty(), "regularity of the zero module");
    int reg = 0;
    bool first = true;
    for (size_t i = 0; i < prof.a.size(); ++i)
        if (prof.a[i]) {
            int v = *prof.a[i] + static_cast<int>(i);
            reg = first ? v : std::max(reg, v);
            first = false;
        }
    return reg;
}

int regularity_from_betti(const GradedModule& m)
{
    for (size_t i = 0; i < m.cover->ngens(); ++i)
        require(m.cover->gen(i).degree == 1,
                "Betti-table regularity needs a standard-graded cover");
    Resolution res = minimal_free_resolution(m);
    int reg = 0;
    bool first = true;
    for (size_t i = 0; i < res.degrees.size(); ++i)
        for (int j : res.degrees[i]) {
            int v = j - static_cast<int>(i);
            reg = first ? v : std::max(reg, v);
            first = false;
        }
    require(!first, "Betti regularity of the zero module");
    return reg;
}

bool is_cohen_macaulay(const GradedModule& m)
{
    LocalCohomologyProfile prof = local_cohomology_degrees(m);
    require(!prof.all_empty(), "Cohen-Macaulay test on the zero module");
    return prof.depth() == prof.dimension();
}

// --- bridges ------------------------------------------------------------------

namespace {

struct AlgebraModuleShape {
    RingPtr cover;
    std::vector<size_t> even_idx;
    std::vector<size_t> odd_idx;
    std::vector<int> comp_degrees;  // one per odd-generator subset (bitmask order)
};

AlgebraModuleShape shape_of(const PresentedAlgebra& a)
{
    AlgebraModuleShape s;
    const auto& ring = *a.ring();
    std::vector<Generator> cover_gens;
    for (size_t i = 0; i < ring.ngens(); ++i) {
        if (ring.odd(i))
            s.odd_idx.push_back(i);
        else {
            s.even_idx.push_back(i);
            cover_gens.push_back(ring.gen(i));
        }
    }
    require(s.odd_idx.size() <= 12, "too many odd generators for the subset basis");
    s.cover = GradedRing::make(ring.prime(), cover_gens);
    size_t nsub = size_t(1) << s.odd_idx.size();
    for (size_t mask = 0; mask < nsub; ++mask) {
        int d = 0;
        for (size_t b = 0; b < s.odd_idx.size(); ++b)
            if (mask & (size_t(1) << b))
                d += ring.gen(s.odd_idx[b]).degree;
        s.comp_degrees.push_back(d);
    }
    return s;
}

/// Decompose an element with odd exponents <= 1 over the subset basis; terms
/// containing an odd square are zero in the module model.
ModElement decompose(const AlgebraModuleShape& s, const Element& e)
{
    ModElement out(s.cover);
    for (const auto& t : e.terms()) {
        size_t mask = 0;
        bool dead = false;
        for (size_t b = 0; b < s.odd_idx.size(); ++b) {
            uint16_t x = t.mon.exp[s.odd_idx[b]];
            if (x >= 2) {
                dead = true;
                break;
            }
            if (x == 1)
                mask |= size_t(1) << b;
        }
        if (dead)
            continue;
        Monomial m = Monomial::one(s.cover->ngens());
        for (size_t k = 0; k < s.even_idx.size(); ++k)
            m.exp[k] = t.mon.exp[s.even_idx[k]];
        out = out + ModElement::single(s.cover, static_cast<int>(mask), std::move(m), t.coeff);
    }
    return out;
}

std::vector<ModElement> algebra_relation_columns(const PresentedAlgebra& a,
                                                 const AlgebraModuleShape& s)
{
    const auto& ring = *a.ring();
    std::vector<ModElement> cols;
    size_t nsub = size_t(1) << s.odd_idx.size();
    for (const auto& g : a.gb().basis()) {
        for (size_t mask = 0; mask < nsub; ++mask) {
            Monomial mu = Monomial::one(ring.ngens());
            for (size_t b = 0; b < s.odd_idx.size(); ++b)
                if (mask & (size_t(1) << b))
                    mu.exp[s.odd_idx[b]] = 1;
            Element prod = g.mul_plain_term(mu, 1);
            ModElement col = decompose(s, prod);
            if (!col.is_zero())
                cols.push_back(col);
        }
    }
    return cols;
}

}  // namespace

GradedModule module_of_algebra(const PresentedAlgebra& a)
{
    AlgebraModuleShape s = shape_of(a);
    GradedModule m;
    m.cover = s.cover;
    m.gen_degrees = s.comp_degrees;
    m.relations = algebra_relation_columns(a, s);
    return m;
}

GradedModule module_of_quotient(const PresentedAlgebra& a, const Ideal& i)
{
    std::vector<Element> rels = a.relations();
    rels.insert(rels.end(), i.gens.begin(), i.gens.end());
    PresentedAlgebra q(a.ring(), rels);
    return module_of_algebra(q);
}

GradedModule module_of_ideal(const PresentedAlgebra& a, const Ideal& i)
{
    AlgebraModuleShape s = shape_of(a);
    const auto& ring = *a.ring();
    size_t nsub = size_t(1) << s.odd_idx.size();

    std::vector<ModElement> gen_vecs;
    for (const auto& f : i.gens) {
        for (size_t mask = 0; mask < nsub; ++mask) {
            Monomial mu = Monomial::one(ring.ngens());
            for (size_t b = 0; b < s.odd_idx.size(); ++b)
                if (mask & (size_t(1) << b))
                    mu.exp[s.odd_idx[b]] = 1;
            Element v = a.nf(f.mul_plain_term(mu, 1));
            if (v.is_zero())
                continue;
            ModElement col = decompose(s, v);
            if (!col.is_zero())
                gen_vecs.push_back(col);
        }
    }
    std::vector<ModElement> amb_rels = algebra_relation_columns(a, s);

    // minimal generators of the image in F/N
    {
        std::vector<ModElement> min_in_quotient;
        std::stable_sort(gen_vecs.begin(), gen_vecs.end(),
                         [&](const ModElement& x, const ModElement& y) {
                             return x.degree(s.comp_degrees) < y.degree(s.comp_degrees);
                         });
        for (const auto& v : gen_vecs) {
            std::vector<ModElement> span = amb_rels;
            span.insert(span.end(), min_in_quotient.begin(), min_in_quotient.end());
            ModuleGB gb(s.cover, s.comp_degrees, span);
            if (!gb.contains(v))
                min_in_quotient.push_back(v);
        }
        gen_vecs = std::move(min_in_quotient);
    }
    std::vector<int> gen_degs;
    for (const auto& v : gen_vecs)
        gen_degs.push_back(v.degree(s.comp_degrees));

    // relations among the ideal generators modulo N: project syzygies of
    // (gen_vecs | ambient relations) onto the first block
    std::vector<ModElement> combined = gen_vecs;
    combined.insert(combined.end(), amb_rels.begin(), amb_rels.end());
    std::vector<ModElement> syz = syzygies(s.cover, s.comp_degrees, combined);

    GradedModule m;
    m.cover = s.cover;
    m.gen_degrees = gen_degs;
    for (const auto& z : syz) {
        ModElement proj(s.cover);
        for (const auto& t : z.terms())
            if (t.comp < static_cast<int>(gen_vecs.size()))
                proj = proj + ModElement::single(s.cover, t.comp, t.mon, t.coeff);
        if (!proj.is_zero())
            m.relations.push_back(proj);
    }
    return m;
}

int depth(const PresentedAlgebra& a)
{
    return depth(module_of_algebra(a));
}

LocalCohomologyProfile local_cohomology_degrees(const PresentedAlgebra& a)
{
    return local_cohomology_degrees(module_of_algebra(a));
}

int regularity(const PresentedAlgebra& a)
{
    return regularity(module_of_algebra(a));
}

bool is_cohen_macaulay(const PresentedAlgebra& a)
{
    return is_cohen_macaulay(module_of_algebra(a));
}

bool is_regular_sequence(const PresentedAlgebra& a, const std::vector<Element>& elems)
{
    std::vector<Element> prefix;
    for (const auto& e : elems) {
        require(!e.is_zero() && e.is_homogeneous() && e.degree() > 0,
                "regular-sequence candidates must be homogeneous of positive degree");
        Ideal before{a.ring(), prefix};
        Ideal quot = colon_ideal(a, before, e);
        std::vector<Element> before_rels = a.relations();
        before_rels.insert(before_rels.end(), prefix.begin(), prefix.end());
        GroebnerBasis gb_before(a.ring(), before_rels);
        for (const auto& g : quot.gens)
            if (!gb_before.contains(g))
                return false;
        prefix.push_back(e);
    }
    return true;
}

}  // namespace topnil
