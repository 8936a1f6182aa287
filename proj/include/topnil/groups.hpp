#pragma once

#include <map>
#include <string>
#include <vector>

#include "topnil/fp.hpp"

namespace topnil {

// Finite-group engine at desk scale: element enumeration, elementary abelian
// p-subgroups, conjugacy, centralizers, the Quillen category, O_{p'}(G),
// Mislin's cohomological center, the p-central defect, and a Betti-number
// oracle over F_pG for p-groups.

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    Perm compose(const Perm& o) const;  // (this o o)(x) = this(o(x))
    Perm inverse() const;
    bool is_identity() const;
    const std::vector<int>& image() const { return img_; }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

using ElementList = std::vector<Perm>;  // sorted, duplicate-free

class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> gens);

    int degree() const { return degree_; }
    const std::vector<Perm>& gens() const { return gens_; }
    const ElementList& elements() const;
    long long order() const { return static_cast<long long>(elements().size()); }
    bool contains(const Perm& g) const;

    static PermGroup cyclic(int n);
    static PermGroup dihedral(int n);       // order 2n, acting on n points
    static PermGroup quaternion8();
    static PermGroup semidihedral16();
    static PermGroup symmetric(int n);
    static PermGroup elementary_abelian(int p, int rank);
    static PermGroup direct_product(const PermGroup& a, const PermGroup& b);
    static PermGroup by_name(const std::string& name);  // e.g. "D8", "Q8", "S3", "C4", "C2xC2"

private:
    int degree_;
    std::vector<Perm> gens_;
    mutable ElementList elements_;
};

ElementList closure(int degree, const std::vector<Perm>& gens);
ElementList subgroup_generated(const PermGroup& g, const std::vector<Perm>& gens);
int element_order(const Perm& g);
bool is_p_group(const PermGroup& g, int p);

struct ElAbClass {
    ElementList rep;   // representative subgroup, sorted elements
    int rank = 0;
    int class_size = 1;
};

/// Complete duplicate-free list of conjugacy classes of elementary abelian
/// p-subgroups, the trivial subgroup included; ordered by rank then by
/// representative.
std::vector<ElAbClass> elementary_abelian_classes(const PermGroup& g, Prime p);

/// A morphism E -> V in the Quillen category: the conjugation-induced map,
/// recorded on the sorted elements of E.
struct QuillenMorphism {
    std::vector<int> images;  // images[i] = index into V's sorted elements
};

struct QuillenCat {
    std::vector<ElAbClass> objects;
    // hom[i][j] = distinct conjugation-induced monomorphisms object i -> object j
    std::vector<std::vector<std::vector<QuillenMorphism>>> hom;

    size_t hom_count(size_t i, size_t j) const { return hom[i][j].size(); }
    bool leq(size_t i, size_t j) const { return !hom[i][j].empty(); }
};

QuillenCat quillen_category(const PermGroup& g, Prime p);

ElementList centralizer(const PermGroup& g, const ElementList& subgroup);
ElementList center_elements(const PermGroup& g);

/// Largest normal subgroup of order prime to p.
ElementList o_p_prime(const PermGroup& g, Prime p);

/// Mislin's center: the maximal elementary abelian p-subgroup of the center
/// of G/O_{p'}(G), pulled back to a representative class in A_G.  Returns the
/// index of that class in elementary_abelian_classes(g, p).
size_t cohomological_center_class(const PermGroup& g, Prime p);

int p_central_defect(const PermGroup& g, Prime p);

struct BettiOptions {
    long long order_cap = 64;
};

/// dim_F_p H^n(G; F_p) for n <= n_max via a minimal resolution over F_pG.
/// Restricted to p-groups, where the augmentation ideal is the radical.
std::vector<long long> betti_numbers(const PermGroup& g, Prime p, int n_max,
                                     BettiOptions opt = {});

}  // namespace topnil
