#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topnil/catalog.hpp"
#include "topnil/homology.hpp"

namespace topnil {

// The quantitative engine: Duflot image data and e(R), the central essential
// ideal, the top degree of its indecomposables, the nilpotence-degree upper
// bound over qualifying T-components, interval calculus from certified atoms,
// and the H-space bound.

struct DuflotData {
    int center_rank = 0;
    /// p = 2: one exponent j_i per basis line of the image; odd p: exponents
    /// of the power-only part, with `full_lines` lines where both the
    /// exterior and polynomial generators restrict onto the image.
    std::vector<int> exponents;
    int full_lines = 0;
    long long e_value = 0;
    bool hyp_duflot = true;  // Duflot algebra polynomial
    std::vector<Element> lifts;
};

/// Read the Borel shape of im(R -> H_C^*) off subalgebra-membership tests and
/// validate the catalog-supplied lifts against it.
DuflotData duflot_data(const UnstablePresentation& r, const RectorPair& center,
                       const std::vector<Element>& catalog_lifts);

struct CEssData {
    bool whole_ring = false;  // defect-0 convention: CEss(R) = R
    bool zero = false;
    Ideal ideal;              // meaningful when nonzero and not the whole ring
    int dim = -1;
    int depth = -1;
    bool cohen_macaulay = false;
};

struct EntryAnalysis {
    int center_rank = 0;
    int max_rank = 0;
    int defect = 0;
    size_t center_index = 0;
};

EntryAnalysis analyze_pairs(const CatalogEntry& e);

CEssData cess(const Catalog& cat, const CatalogEntry& e);

/// Top nonzero degree of Q_B CEss(R), cross-checked against
/// e(R) + a_{c(R)}(R) + c(R); nullopt encodes minus infinity (CEss = 0).
std::optional<long long> e_indec(const Catalog& cat, const CatalogEntry& e,
                                 const CEssData& cess_data, const DuflotData& duflot);

struct ComponentCertificate {
    std::string pair_name;
    std::string tref;
    int depth = 0;
    int center_rank = 0;
    bool qualifying = false;
    long long e_value = 0;
    int regularity = 0;
    long long bound = 0;  // e + reg when qualifying
};

struct D0Bound {
    long long value = 0;
    std::vector<ComponentCertificate> components;
    std::string witness;  // pair name of the maximizing component
};

/// max over qualifying components (depth = c) above the center of
/// e(T) + reg(T); every strictly-above pair must carry component data.
D0Bound d0_upper_bound(const Catalog& cat, const CatalogEntry& e);

struct D0Interval {
    long long lo = 0;
    long long hi = 0;
};

/// Interval calculus over certified atoms:
///   atom:<id> | topdeg(n) | tensor(e,...) | suspend(n, e) | sub_of(e)
///   | contains(e) | extension(e, e) | meet(e, e)
D0Interval d0_calculus(const Catalog& cat, const std::string& expr);

/// Poincare-dimension bound for H-space-shaped presentations.
long long hspace_bound(const CatalogEntry& e);

}  // namespace topnil
