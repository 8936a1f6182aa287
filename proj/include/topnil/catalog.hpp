#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topnil/rector.hpp"

namespace topnil {

// Catalog entries: validated cohomology-ring presentations with restriction
// and T-functor data, parsed from the line-oriented catalog text format.

struct CatalogComponent {
    std::string pair_name;                       // the Rector pair it sits at
    std::string tref;                            // entry id or tensor(id,id,...)
    std::vector<std::string> rho_image_exprs;    // one per R-generator
};

struct D0Atom {
    int lo = 0;
    int hi = 0;
    std::string provenance;
};

struct CatalogEntry {
    std::string id;
    Prime p{2};
    std::string source;
    std::string group_name;   // constructible by PermGroup::by_name when present
    std::string betti_group;  // oracle group for Hilbert-vs-Betti validation
    bool hspace = false;
    /// group cohomology in the wide sense (finite, profinite, Kac-Moody):
    /// the Duflot algebra may be taken polynomial by splitting off the
    /// elementary abelian factor
    bool grouplike = false;
    UnstablePresentation algebra;  // algebra.algebra may be null (atom-only entries)
    std::vector<RectorPair> pairs;
    std::vector<CatalogComponent> components;
    std::vector<Element> duflot_lifts;
    std::optional<D0Atom> atom;
    std::string d0expr;
    std::optional<LinearRep> rep;  // representation entries

    bool has_algebra() const { return static_cast<bool>(algebra.algebra); }
    const RingPtr& ring() const { return algebra.ring(); }
};

class Catalog {
public:
    static Catalog load(const std::string& path);
    static Catalog parse(const std::string& text);

    const CatalogEntry& entry(const std::string& id) const;
    bool has(const std::string& id) const { return entries_.count(id) > 0; }
    std::vector<std::string> ids() const;

    /// Resolve a tref: a plain id, or tensor(a,b,...) built on demand.  The
    /// tensor entry carries the tensored algebra and the tensored center pair
    /// (the center of a tensor product is the sum of the centers).
    const CatalogEntry& resolve(const std::string& tref) const;

private:
    std::map<std::string, CatalogEntry> entries_;
    mutable std::map<std::string, CatalogEntry> derived_;
};

/// Index of the pair named `name`.
size_t pair_index(const CatalogEntry& e, const std::string& name);

/// Parsed rho images of a component, in the resolved T-entry's ring.
std::vector<Element> component_images(const Catalog& cat, const CatalogEntry& e,
                                      const CatalogComponent& comp);

}  // namespace topnil
