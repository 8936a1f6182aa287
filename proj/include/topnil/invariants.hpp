#pragma once

#include <string>
#include <vector>

#include "topnil/fpalg.hpp"

namespace topnil {

// Modular invariant theory: F[V]^G for a finite matrix group over F_p,
// Dickson invariants, pointwise stabilizers, and the invariant-theory center
// (V^G, f_{V^G}).  F[V] carries the degree-1 grading internally; comparisons
// against cohomological degrees at odd p go through the doubling flag.

using Matrix = std::vector<std::vector<int>>;  // rows of entries mod p

Matrix matrix_identity(int n);
Matrix matrix_mul(const Matrix& a, const Matrix& b, int p);
bool matrix_invertible(const Matrix& m, int p);

struct LinearRep {
    Prime p;
    int dim = 0;
    std::vector<Matrix> gens;

    /// All group elements (matrix closure).
    std::vector<Matrix> elements() const;
    long long order() const { return static_cast<long long>(elements().size()); }
};

struct InvariantRingApprox {
    LinearRep rep;
    int degree_bound = 0;                       // verified through this degree
    std::vector<long long> invariant_dims;      // index d = 0..degree_bound
    std::vector<Element> generators;            // candidate generators, in F[V]
    RingPtr polynomial_ring;                    // F_p[x_1..x_n], degree 1 each
    bool grading_doubled_for_cohomology = false;

    /// Presented algebra on tag generators z_i |-> generators[i], with the
    /// relation ideal computed by elimination.  Sound for invariants through
    /// the verified degree.
    PresentedAlgebra presented() const;
};

InvariantRingApprox invariants_up_to(const LinearRep& rep, int degree_bound);

/// Dickson invariants c_{n,i}, i = 0..n-1, of degrees p^n - p^i (degree-1
/// grading); invariance under GL_n(F_p) verified by substitution, and the
/// fundamental equation's non-p-power coefficients checked to vanish.
std::vector<Element> dickson_generators(int n, Prime p);

/// Matrices fixing every vector of the given subspace basis.
LinearRep pointwise_stabilizer(const LinearRep& rep, const std::vector<std::vector<int>>& basis);

struct InvariantCenter {
    std::vector<std::vector<int>> fixed_basis;  // basis of V^G
    int rank = 0;
    /// images of the invariant-ring generators under F[V]^G -> F[U], U = V^G,
    /// written in F_p[u_1..u_r] with the degree-1 grading
    std::vector<Element> restriction_images;
    RingPtr restricted_ring;
};

/// The center (V^G, f_{V^G}) of the invariant ring; asserts rank(V^G) < dim V
/// for nontrivial groups, and V^G != 0 for p-groups.
InvariantCenter rector_center_invariants(const LinearRep& rep,
                                         const InvariantRingApprox& inv);

/// T-functor value at (U, f_U): the invariants of the pointwise stabilizer.
InvariantRingApprox t_component_invariants(const LinearRep& rep,
                                           const std::vector<std::vector<int>>& basis,
                                           int degree_bound);

/// Restriction of an F[V]-polynomial along the inclusion of the subspace
/// spanned by `basis` (coordinates u_1..u_r in the restricted ring).
Element restrict_to_subspace(const Element& f, const std::vector<std::vector<int>>& basis,
                             const RingPtr& restricted_ring);

bool rep_is_p_group(const LinearRep& rep);

}  // namespace topnil
