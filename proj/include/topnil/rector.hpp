#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topnil/invariants.hpp"
#include "topnil/steenrod.hpp"

namespace topnil {

// Rector's category over a presented unstable algebra R: pairs (E, f) given
// by generator images in the standard H_E^* presentation, kernels, the rec
// functor, finiteness, the E o C construction, the poset of central objects
// and its maximum.

/// Standard H_E^* of the given rank: F_2[t_1..t_r] at p = 2, or
/// Lambda(x_1..x_r) (x) F_p[y_1..y_r] with beta x_i = y_i at odd p.
UnstablePresentation standard_he(Prime p, int rank);

struct RectorPair {
    std::string name;
    int rank = 0;
    std::vector<Element> images;  // one per R-generator, in standard_he(p, rank)
    bool central_flag = false;    // supplied by the centrality oracle
};

enum class OracleKind { GroupBacked, InvariantBacked, Catalog };

/// Elements of F_p^rank in the kernel of the pair (always includes 0); the
/// subgroup property is asserted.
std::vector<std::vector<int>> kernel_of_pair(const UnstablePresentation& r,
                                             const RectorPair& pair);

/// (E, f) -> (E/ker f, f~); identity on pairs with trivial kernel.
RectorPair rec(const UnstablePresentation& r, const RectorPair& pair);

/// Kernel triviality and module-finiteness of H_E^* over im(f), computed
/// independently and cross-checked; disagreement is a hard error.
bool is_finite_pair(const UnstablePresentation& r, const RectorPair& pair);

/// All monomorphisms iota: E -> V with iota^* g = f, as (rank_V x rank_E)
/// matrices.
std::vector<Matrix> poset_morphisms(const UnstablePresentation& r, const RectorPair& e,
                                     const RectorPair& v);

bool poset_leq(const UnstablePresentation& r, const RectorPair& e, const RectorPair& v);

bool pairs_isomorphic(const UnstablePresentation& r, const RectorPair& a, const RectorPair& b);

/// (E (+) C, f boxplus g) for C a central subgroup of E embedded by the
/// columns of `embedding` (rank_E x rank_C); the sum pair's kernel contains
/// the antidiagonal copy of C and rec of it is isomorphic to (E, f).
RectorPair sum_pair_with_central_subgroup(const UnstablePresentation& r, const RectorPair& e,
                                          const Matrix& embedding);

/// E o C located as the join inside the supplied pair skeleton: the unique
/// pair admitting monos from E and C with matching pullbacks whose images
/// span it.  Errors when (C, g) is not flagged central or no join exists.
size_t circ(const UnstablePresentation& r, const std::vector<RectorPair>& pairs, size_t e_idx,
            size_t c_idx);

struct CentralPoset {
    std::vector<size_t> central;  // indices of central pairs
    size_t maximum = 0;           // index of the maximal central pair
    int rank = 0;                 // rank of the center
    OracleKind oracle = OracleKind::Catalog;
};

/// Enumerates the central pairs, checks subgroup-closure of centrality and
/// closure under circ, and returns the unique maximal central element.
CentralPoset maximal_central(const UnstablePresentation& r, const std::vector<RectorPair>& pairs,
                             OracleKind oracle);

/// The defect-0 criterion: A_R equivalent to A_{H_C^*}.  Concretely: every
/// pair lies below the center, the subspace images in C exhaust the
/// subspaces of C, and hom-counts match the subspace poset (1 when contained,
/// 0 otherwise).
bool defect_zero_category_check(const UnstablePresentation& r,
                                const std::vector<RectorPair>& pairs, size_t center_idx);

}  // namespace topnil
