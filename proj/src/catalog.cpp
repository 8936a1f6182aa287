#include "topnil/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace topnil {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        }
        else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

// "images: x -> t1; y -> 0; ..." tail of a pair/component line
std::vector<std::pair<std::string, std::string>> parse_image_list(const std::string& tail)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& piece : split(tail, ';')) {
        std::string t = trim(piece);
        if (t.empty())
            continue;
        size_t arrow = t.find("->");
        require(arrow != std::string::npos, "expected 'gen -> expr' in: " + t);
        out.push_back({trim(t.substr(0, arrow)), trim(t.substr(arrow + 2))});
    }
    return out;
}

std::vector<Element> images_for(const RingPtr& source_ring, const RingPtr& target_ring,
                                const std::vector<std::pair<std::string, std::string>>& list,
                                const std::string& where)
{
    std::vector<Element> images(source_ring->ngens());
    std::vector<bool> seen(source_ring->ngens(), false);
    for (const auto& [gen, expr] : list) {
        int idx = source_ring->index_of(gen);
        require(idx >= 0, "unknown generator '" + gen + "' in " + where);
        images[static_cast<size_t>(idx)] =
            expr == "0" || expr.empty() ? Element::zero(target_ring)
                                        : Element::parse(target_ring, expr);
        seen[static_cast<size_t>(idx)] = true;
    }
    for (size_t i = 0; i < seen.size(); ++i)
        require(seen[i], "missing image for generator '" + source_ring->gen(i).name + "' in " +
                             where);
    return images;
}

}  // namespace

Catalog Catalog::load(const std::string& path)
{
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open catalog file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Catalog Catalog::parse(const std::string& text)
{
    Catalog cat;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    struct RawEntry {
        std::string id, source, group, betti_group, d0expr, alias;
        int prime = 0;
        bool hspace = false;
        bool grouplike = false;
        std::vector<Matrix> reps;
        std::vector<std::tuple<std::string, int, std::string>> gens;
        std::vector<std::string> relations;
        std::vector<std::tuple<std::string, std::string, std::string>> steenrod;  // op gen expr
        struct RawPair {
            std::string name;
            int rank = 0;
            bool central = false;
            std::vector<std::pair<std::string, std::string>> images;
        };
        std::vector<RawPair> pairs;
        struct RawComp {
            std::string pair_name, tref;
            std::vector<std::pair<std::string, std::string>> images;
        };
        std::vector<RawComp> comps;
        std::vector<std::string> lifts;
        std::optional<D0Atom> atom;
    };

    std::optional<RawEntry> cur;
    std::string section;
    std::vector<RawEntry> aliases;

    auto finish = [&]() {
        if (!cur)
            return;
        RawEntry& raw = *cur;
        require(raw.prime != 0, "entry " + raw.id + " missing prime");
        Prime p = Prime::checked(raw.prime);
        if (!raw.alias.empty()) {
            aliases.push_back(raw);
            cur.reset();
            return;
        }

        CatalogEntry e;
        e.id = raw.id;
        e.p = p;
        e.source = raw.source;
        e.group_name = raw.group;
        e.betti_group = raw.betti_group;
        e.hspace = raw.hspace;
        e.grouplike = raw.grouplike || !raw.group.empty();
        e.d0expr = raw.d0expr;
        e.atom = raw.atom;
        if (!raw.reps.empty()) {
            int dim = static_cast<int>(raw.reps[0].size());
            e.rep = LinearRep{p, dim, raw.reps};
        }
        if (raw.gens.empty()) {
            // atom-only or representation-only entry
            require(raw.relations.empty() && raw.pairs.empty() && raw.comps.empty(),
                    "entry " + raw.id + " has structure but no ring");
            require(cat.entries_.emplace(e.id, std::move(e)).second,
                    "duplicate entry id " + raw.id);
            cur.reset();
            return;
        }
        std::vector<Generator> gens;
        for (const auto& [name, deg, par] : raw.gens) {
            require(par == "even" || par == "odd", "bad parity for " + name);
            gens.push_back({name, deg, par == "odd" ? Parity::Odd : Parity::Even});
        }
        RingPtr ring = GradedRing::make(p, gens);
        std::vector<Element> rels;
        for (const auto& r : raw.relations)
            rels.push_back(Element::parse(ring, r));
        e.algebra.algebra = std::make_shared<PresentedAlgebra>(ring, rels);
        e.algebra.action = SteenrodAction::empty(ring);
        for (const auto& [op, gen, expr] : raw.steenrod) {
            int gi = ring->index_of(gen);
            require(gi >= 0, "steenrod on unknown generator " + gen);
            Element v = expr == "0" ? Element::zero(ring) : Element::parse(ring, expr);
            if (op == "b") {
                require(p.value != 2, "Bockstein rows use Sq1 at p = 2");
                e.algebra.action.bockstein[static_cast<size_t>(gi)] = v;
            }
            else if (op.rfind("Sq", 0) == 0) {
                require(p.value == 2, "Sq rows need p = 2");
                e.algebra.action.sq[static_cast<size_t>(gi)][std::stoi(op.substr(2))] = v;
            }
            else if (op.rfind("P", 0) == 0) {
                require(p.value != 2, "P rows need odd p");
                e.algebra.action.ppow[static_cast<size_t>(gi)][std::stoi(op.substr(1))] = v;
            }
            else
                fail("unknown steenrod operation " + op);
        }
        for (const auto& rp : raw.pairs) {
            RectorPair pr;
            pr.name = rp.name;
            pr.rank = rp.rank;
            pr.central_flag = rp.central;
            UnstablePresentation he = standard_he(p, rp.rank);
            pr.images = images_for(ring, he.ring(), rp.images, "pair " + rp.name + " of " + e.id);
            e.pairs.push_back(std::move(pr));
        }
        for (const auto& rc : raw.comps) {
            CatalogComponent c;
            c.pair_name = rc.pair_name;
            c.tref = rc.tref;
            // keep raw expressions; resolved against the T-entry ring later
            c.rho_image_exprs.resize(ring->ngens());
            std::vector<bool> seen(ring->ngens(), false);
            for (const auto& [gen, expr] : rc.images) {
                int gi = ring->index_of(gen);
                require(gi >= 0, "component image for unknown generator " + gen);
                c.rho_image_exprs[static_cast<size_t>(gi)] = expr;
                seen[static_cast<size_t>(gi)] = true;
            }
            for (size_t i = 0; i < seen.size(); ++i)
                require(seen[i], "component of " + e.id + " missing image for " +
                                     ring->gen(i).name);
            e.components.push_back(std::move(c));
        }
        for (const auto& l : raw.lifts)
            e.duflot_lifts.push_back(Element::parse(ring, l));
        require(cat.entries_.emplace(e.id, std::move(e)).second, "duplicate entry id " + raw.id);
        cur.reset();
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        try {
            if (t.rfind("entry ", 0) == 0) {
                finish();
                cur = RawEntry{};
                cur->id = trim(t.substr(6));
                section.clear();
                continue;
            }
            if (t == "end") {
                finish();
                section.clear();
                continue;
            }
            require(cur.has_value(), "directive outside an entry: " + t);
            if (t[0] == '[') {
                section = t;
                continue;
            }
            if (t.rfind("prime ", 0) == 0) {
                cur->prime = std::stoi(t.substr(6));
                continue;
            }
            if (t.rfind("source ", 0) == 0) {
                cur->source = trim(t.substr(7));
                continue;
            }
            if (t.rfind("group ", 0) == 0) {
                cur->group = trim(t.substr(6));
                continue;
            }
            if (t.rfind("bettigroup ", 0) == 0) {
                cur->betti_group = trim(t.substr(11));
                continue;
            }
            if (t == "hspace") {
                cur->hspace = true;
                continue;
            }
            if (t == "grouplike") {
                cur->grouplike = true;
                continue;
            }
            if (t.rfind("alias ", 0) == 0) {
                cur->alias = trim(t.substr(6));
                continue;
            }
            if (section == "[rep]") {
                require(t.rfind("mat ", 0) == 0, "bad rep line: " + t);
                Matrix m;
                for (const auto& row : split(t.substr(4), ';')) {
                    std::vector<int> r;
                    for (const auto& w : words(row))
                        r.push_back(std::stoi(w));
                    m.push_back(std::move(r));
                }
                for (const auto& r : m)
                    require(r.size() == m.size(), "rep matrix is not square: " + t);
                cur->reps.push_back(std::move(m));
                continue;
            }
            if (section == "[ring]") {
                auto w = words(t);
                require(w.size() == 4 && w[0] == "gen", "bad ring line: " + t);
                cur->gens.push_back({w[1], std::stoi(w[2]), w[3]});
                continue;
            }
            if (section == "[relations]") {
                cur->relations.push_back(t);
                continue;
            }
            if (section == "[steenrod]") {
                size_t eq = t.find('=');
                require(eq != std::string::npos, "bad steenrod line: " + t);
                auto lhs = words(t.substr(0, eq));
                require(lhs.size() == 2, "bad steenrod lhs: " + t);
                cur->steenrod.push_back({lhs[0], lhs[1], trim(t.substr(eq + 1))});
                continue;
            }
            if (section == "[rector]") {
                // pair NAME rank N central 0|1 images: g -> e; ...
                size_t img = t.find("images:");
                require(img != std::string::npos, "pair line lacks images: " + t);
                auto head = words(t.substr(0, img));
                require(head.size() == 6 && head[0] == "pair" && head[2] == "rank" &&
                            head[4] == "central",
                        "bad pair line: " + t);
                RawEntry::RawPair rp;
                rp.name = head[1];
                rp.rank = std::stoi(head[3]);
                rp.central = head[5] == "1";
                rp.images = parse_image_list(t.substr(img + 7));
                cur->pairs.push_back(std::move(rp));
                continue;
            }
            if (section == "[components]") {
                size_t img = t.find("images:");
                require(img != std::string::npos, "component line lacks images: " + t);
                auto head = words(t.substr(0, img));
                require(head.size() == 4 && head[0] == "component" && head[2] == "tref",
                        "bad component line: " + t);
                RawEntry::RawComp rc;
                rc.pair_name = head[1];
                rc.tref = head[3];
                rc.images = parse_image_list(t.substr(img + 7));
                cur->comps.push_back(std::move(rc));
                continue;
            }
            if (section == "[duflot]") {
                auto w = words(t);
                require(w.size() >= 2 && w[0] == "lift", "bad duflot line: " + t);
                cur->lifts.push_back(trim(t.substr(5)));
                continue;
            }
            if (section == "[atoms]") {
                // d0atom LO HI provenance...
                auto w = words(t);
                require(w.size() >= 3 && w[0] == "d0atom", "bad atom line: " + t);
                D0Atom a;
                a.lo = std::stoi(w[1]);
                a.hi = std::stoi(w[2]);
                size_t pos = t.find(w[2]);
                a.provenance = trim(t.substr(pos + w[2].size()));
                cur->atom = a;
                continue;
            }
            if (section == "[d0expr]") {
                cur->d0expr += t;
                continue;
            }
            fail("unparsed line: " + t);
        }
        catch (const std::exception& ex) {
            fail("catalog line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    finish();
    // alias entries: copies of derived tensor entries under their own id
    for (const auto& raw : aliases) {
        const CatalogEntry& base = cat.resolve(raw.alias);
        CatalogEntry e = base;
        e.id = raw.id;
        e.source = raw.source;
        e.grouplike = raw.grouplike || base.grouplike;
        e.atom = raw.atom;
        e.d0expr = raw.d0expr;
        require(cat.entries_.emplace(e.id, std::move(e)).second,
                "duplicate entry id " + raw.id);
    }
    return cat;
}

const CatalogEntry& Catalog::entry(const std::string& id) const
{
    auto it = entries_.find(id);
    require(it != entries_.end(), "no catalog entry named '" + id + "'");
    return it->second;
}

std::vector<std::string> Catalog::ids() const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        out.push_back(k);
    return out;
}

namespace {

/// Tensor of catalog entries: algebra, Steenrod action, and the center pair
/// (the center of a tensor product is the sum of the centers).
CatalogEntry tensor_entries(const std::vector<const CatalogEntry*>& factors,
                            const std::string& id)
{
    require(factors.size() >= 2, "tensor needs at least two factors");
    CatalogEntry out;
    out.id = id;
    out.p = factors[0]->p;
    out.source = "derived tensor product";
    out.grouplike = true;
    for (const auto* f : factors) {
        require(f->p.value == out.p.value, "tensor factors at different primes");
        require(f->has_algebra(), "tensor factor '" + f->id + "' has no presentation");
        out.grouplike = out.grouplike && f->grouplike;
    }

    // tensored algebra
    PresentedAlgebra acc = *factors[0]->algebra.algebra;
    for (size_t i = 1; i < factors.size(); ++i)
        acc = tensor_product(acc, *factors[i]->algebra.algebra);
    RingPtr ring = acc.ring();
    out.algebra.algebra = std::make_shared<PresentedAlgebra>(acc);
    out.algebra.action = SteenrodAction::empty(ring);

    // transplant the actions generator-by-generator
    size_t off = 0;
    for (const auto* f : factors) {
        const RingPtr& fring = f->ring();
        auto lift = [&](const Element& e) {
            Element z = Element::zero(ring);
            for (const auto& t : e.terms()) {
                Monomial m = Monomial::one(ring->ngens());
                for (size_t k = 0; k < t.mon.exp.size(); ++k)
                    m.exp[k + off] = t.mon.exp[k];
                z = z + Element::monomial(ring, std::move(m), t.coeff);
            }
            return z;
        };
        for (size_t g = 0; g < fring->ngens(); ++g) {
            if (out.p.value == 2) {
                for (const auto& [k, v] : f->algebra.action.sq[g])
                    out.algebra.action.sq[off + g][k] = lift(v);
            }
            else {
                out.algebra.action.bockstein[off + g] = lift(f->algebra.action.bockstein[g]);
                for (const auto& [k, v] : f->algebra.action.ppow[g])
                    out.algebra.action.ppow[off + g][k] = lift(v);
            }
        }
        off += fring->ngens();
    }

    // tensored center pair
    int total_rank = 0;
    std::vector<const RectorPair*> centers;
    for (const auto* f : factors) {
        CentralPoset cp = maximal_central(f->algebra, f->pairs, OracleKind::Catalog);
        centers.push_back(&f->pairs[cp.maximum]);
        total_rank += cp.rank;
    }
    RectorPair center;
    center.name = "center";
    center.rank = total_rank;
    center.central_flag = true;
    UnstablePresentation he = standard_he(out.p, total_rank);
    int rank_off = 0;
    off = 0;
    for (size_t fi = 0; fi < factors.size(); ++fi) {
        const RectorPair& c = *centers[fi];
        UnstablePresentation he_f = standard_he(out.p, c.rank);
        // map H_{E_f} variables into the sum variables
        std::vector<Element> var_images;
        if (out.p.value == 2) {
            for (int i = 0; i < c.rank; ++i)
                var_images.push_back(
                    Element::generator(he.ring(), static_cast<size_t>(rank_off + i)));
        }
        else {
            for (int i = 0; i < c.rank; ++i)
                var_images.push_back(
                    Element::generator(he.ring(), static_cast<size_t>(rank_off + i)));
            for (int i = 0; i < c.rank; ++i)
                var_images.push_back(Element::generator(
                    he.ring(), static_cast<size_t>(total_rank + rank_off + i)));
        }
        for (const auto& img : c.images)
            center.images.push_back(substitute(img, he.ring(), var_images, true));
        rank_off += c.rank;
        (void)he_f;
    }
    out.pairs.push_back(std::move(center));

    // tensored Duflot lifts
    off = 0;
    for (const auto* f : factors) {
        const RingPtr& fring = f->ring();
        for (const auto& l : f->duflot_lifts) {
            Element z = Element::zero(ring);
            for (const auto& t : l.terms()) {
                Monomial m = Monomial::one(ring->ngens());
                for (size_t k = 0; k < t.mon.exp.size(); ++k)
                    m.exp[k + off] = t.mon.exp[k];
                z = z + Element::monomial(ring, std::move(m), t.coeff);
            }
            out.duflot_lifts.push_back(z);
        }
        off += fring->ngens();
    }
    return out;
}

}  // namespace

const CatalogEntry& Catalog::resolve(const std::string& tref) const
{
    if (entries_.count(tref))
        return entries_.at(tref);
    auto it = derived_.find(tref);
    if (it != derived_.end())
        return it->second;
    require(tref.rfind("tensor(", 0) == 0 && tref.back() == ')',
            "unresolvable tref '" + tref + "'");
    std::string inner = tref.substr(7, tref.size() - 8);
    std::vector<const CatalogEntry*> factors;
    for (const auto& part : split(inner, ',')) {
        std::string id = trim(part);
        require(!id.empty(), "empty tensor factor in " + tref);
        factors.push_back(&resolve(id));
    }
    CatalogEntry e = tensor_entries(factors, tref);
    auto [pos, fresh] = derived_.emplace(tref, std::move(e));
    (void)fresh;
    return pos->second;
}

size_t pair_index(const CatalogEntry& e, const std::string& name)
{
    for (size_t i = 0; i < e.pairs.size(); ++i)
        if (e.pairs[i].name == name)
            return i;
    fail("entry " + e.id + " has no pair named '" + name + "'");
}

std::vector<Element> component_images(const Catalog& cat, const CatalogEntry& e,
                                      const CatalogComponent& comp)
{
    const CatalogEntry& t = cat.resolve(comp.tref);
    std::vector<Element> images;
    for (size_t i = 0; i < e.ring()->ngens(); ++i) {
        const std::string& expr = comp.rho_image_exprs[i];
        images.push_back(expr.empty() || expr == "0" ? Element::zero(t.ring())
                                                     : Element::parse(t.ring(), expr));
    }
    return images;
}

}  // namespace topnil
