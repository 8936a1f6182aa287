#pragma once

#include <optional>
#include <vector>

#include "topnil/fpalg.hpp"

namespace topnil {

// Minimal graded free resolutions over a polynomial cover (all generators
// even), local cohomology top degrees a_i via graded local duality, depth,
// Castelnuovo-Mumford regularity, Cohen-Macaulay and regular-sequence tests.

/// Element of a free module over a polynomial cover.
struct ModTerm {
    int comp = 0;  // basis index
    Monomial mon;
    int coeff = 0;
};

class ModElement {
public:
    ModElement() = default;
    explicit ModElement(RingPtr cover) : cover_(std::move(cover)) {}

    const RingPtr& cover() const { return cover_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static ModElement unit(RingPtr cover, int comp);
    static ModElement single(RingPtr cover, int comp, Monomial m, int c);

    ModElement operator+(const ModElement& o) const;
    ModElement operator-(const ModElement& o) const;
    ModElement scaled(int c) const;
    ModElement times(const Monomial& m, int c) const;

    int degree(const std::vector<int>& comp_degrees) const;  // nonzero, homogeneous
    bool is_homogeneous(const std::vector<int>& comp_degrees) const;

    void normalize();
    const ModTerm& lead() const;  // position-refined graded revlex; requires nonzero
    bool operator==(const ModElement& o) const;

private:
    RingPtr cover_;
    std::vector<ModTerm> terms_;
    friend class ModuleGB;
};

/// Reduced Groebner basis of a submodule of a graded free module.
class ModuleGB {
public:
    ModuleGB(RingPtr cover, std::vector<int> comp_degrees, std::vector<ModElement> gens);

    const std::vector<ModElement>& basis() const { return basis_; }
    ModElement normal_form(const ModElement& e) const;
    bool contains(const ModElement& e) const { return normal_form(e).is_zero(); }

    /// dim_F_p of the degree-d slice of the submodule.
    long long dimension_in_degree(int d) const;

private:
    RingPtr cover_;
    std::vector<int> comp_degrees_;
    std::vector<ModElement> basis_;
    void buchberger(std::vector<ModElement> gens);
};

/// Graded module over a polynomial cover, presented as coker of a map of
/// graded free modules: generators with degrees, columns of homogeneous
/// relations among them.
struct GradedModule {
    RingPtr cover;                     // even generators only
    std::vector<int> gen_degrees;      // degrees of the module generators
    std::vector<ModElement> relations; // homogeneous columns

    void validate() const;
};

/// beta_{i,j} with i = homological index, j = internal degree.
struct BettiTable {
    std::vector<std::vector<std::pair<int, long long>>> rows;  // rows[i] = {(j, beta_ij)}
    int projective_dimension() const { return static_cast<int>(rows.size()) - 1; }
    long long beta(int i, int j) const;
    std::string str() const;
};

struct ResolutionOptions {
    int length_cap = 32;
    /// verify exactness degreewise through (top relation degree + this slack)
    int exactness_slack = 10;
    bool verify_exactness = true;
};

struct Resolution {
    GradedModule module;
    // maps_[k]: columns of the k-th differential F_k -> F_{k-1}; F_0 has
    // module.gen_degrees, deg_[k] are the generator degrees of F_k
    std::vector<std::vector<ModElement>> maps;
    std::vector<std::vector<int>> degrees;  // degrees[0] = module.gen_degrees
    BettiTable betti() const;
};

Resolution minimal_free_resolution(const GradedModule& m, ResolutionOptions opt = {});

/// a_i profile: nullopt encodes a_i = -infinity.
struct LocalCohomologyProfile {
    std::vector<std::optional<int>> a;  // index i = 0..n
    int depth() const;                  // smallest finite index
    int dimension() const;              // largest finite index
    bool all_empty() const;
};

LocalCohomologyProfile local_cohomology_degrees(const GradedModule& m);

int depth(const GradedModule& m);
int dimension(const GradedModule& m);

/// sup_i (a_i + i); requires M != 0.
int regularity(const GradedModule& m);

/// max (j - i) over nonzero beta_{i,j}; valid only when every cover
/// generator has degree 1 (checked).
int regularity_from_betti(const GradedModule& m);

bool is_cohen_macaulay(const GradedModule& m);

// --- bridge from presented algebras ---------------------------------------

/// S-module structure of the algebra over the polynomial cover on its even
/// generators; odd generators become square-zero module directions (free
/// basis indexed by odd-generator subsets).
GradedModule module_of_algebra(const PresentedAlgebra& a);

/// S-module presentation of a homogeneous ideal I of the algebra.
GradedModule module_of_ideal(const PresentedAlgebra& a, const Ideal& i);

/// Quotient algebra-module A/(I) over the same cover.
GradedModule module_of_quotient(const PresentedAlgebra& a, const Ideal& i);

int depth(const PresentedAlgebra& a);
LocalCohomologyProfile local_cohomology_degrees(const PresentedAlgebra& a);
int regularity(const PresentedAlgebra& a);
bool is_cohen_macaulay(const PresentedAlgebra& a);

/// Groebner colon-ideal test: each ((e_1..e_{i-1}) : e_i) = (e_1..e_{i-1}).
bool is_regular_sequence(const PresentedAlgebra& a, const std::vector<Element>& elems);

}  // namespace topnil
