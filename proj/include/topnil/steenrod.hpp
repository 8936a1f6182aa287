#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "topnil/fpalg.hpp"

namespace topnil {

// Steenrod operations on presented algebras via the Cartan formula, and the
// instability / unstable-algebra checks.

/// Values of the operations on each generator.  Missing entries mean zero.
/// p = 2 uses `sq`; odd p uses `bockstein` and `ppow`.
struct SteenrodAction {
    std::vector<std::map<int, Element>> sq;        // sq[gen][i] = Sq^i(gen), i >= 1
    std::vector<Element> bockstein;                // beta(gen)
    std::vector<std::map<int, Element>> ppow;      // ppow[gen][i] = P^i(gen), i >= 1

    static SteenrodAction empty(const RingPtr& ring);
};

struct UnstablePresentation {
    std::shared_ptr<const PresentedAlgebra> algebra;
    SteenrodAction action;

    const RingPtr& ring() const { return algebra->ring(); }
};

enum class OpKind { Sq, P, Bockstein };

struct SteenrodOp {
    OpKind kind = OpKind::Sq;
    int index = 0;  // the i of Sq^i / P^i; ignored for the Bockstein
    std::string str() const;
};

/// Cartan-extended evaluation on a homogeneous element of the algebra.
Element apply_operation(const UnstablePresentation& u, SteenrodOp op, const Element& e);

/// Total Steenrod square / power (sum over all i, inhomogeneous).
Element total_operation(const UnstablePresentation& u, const Element& e);

struct Violation {
    std::string witness;
};

struct InstabilityReport {
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
    std::string str() const;
};

/// Checks, on every standard monomial through degree_bound: instability
/// (Sq^i x = 0 for i > |x|; beta^e P^i x = 0 for 2i + e > |x|), the
/// restriction axiom (Sq^{|x|} x = x^2, P^{|x|/2} x = x^p), and that the
/// relations are carried into the relation ideal.  degree_bound <= 0 selects
/// the default, twice the top generator degree.
InstabilityReport verify_instability(const UnstablePresentation& u, int degree_bound = 0);

/// f(op(g)) == op(f(g)) for every generator g and every operation of degree
/// up to the bound (default as above, taken in the source).
bool check_a_linearity(const UnstablePresentation& source, const UnstablePresentation& target,
                       const std::vector<Element>& images, int degree_bound = 0);

}  // namespace topnil
