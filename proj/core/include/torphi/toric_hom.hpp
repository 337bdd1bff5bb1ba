#pragma once

// Homomorphisms of uniformized, principally polarized abelian varieties,
// represented as pairs (phi, phiDual) of lattice maps, and the maps they
// induce on component groups.
//
// phi is a g_tgt x g_src integer matrix (Lambda_1 -> Lambda_2) and
// phiDual is g_src x g_tgt (Lambda_2 -> Lambda_1, the polarizations
// identifying each lattice with its character group). The pair is a
// homomorphism iff
//
//     [phi(l1), l2]_{H2} = [l1, phiDual(l2)]_{H1}
//
// as coarse units for all generators. Its valuation shadow is
// phi^T M2 = M1 phiDual.

#include "torphi/error.hpp"
#include "torphi/int_matrix.hpp"
#include "torphi/lattice_algebra.hpp"
#include "torphi/toric_lattice.hpp"

#include <memory>
#include <string>
#include <vector>

namespace torphi {

/// One violated generator pair, with both sides of the compatibility
/// condition.
struct CompatibilityWitness {
    std::size_t i, j;
    CoarseUnit lhs;  ///< [phi(lambda1_i), lambda2_j]_{H2}
    CoarseUnit rhs;  ///< [lambda1_i, phiDual(lambda2_j)]_{H1}
};

class HomCompatibilityError : public ValidationError {
public:
    explicit HomCompatibilityError(std::vector<CompatibilityWitness> witnesses);
    const std::vector<CompatibilityWitness>& witnesses() const { return witnesses_; }

private:
    std::vector<CompatibilityWitness> witnesses_;
};

class ToricHom {
public:
    const PolarizedLattice& source() const { return *source_; }
    const PolarizedLattice& target() const { return *target_; }
    const IntMatrix& phi() const { return phi_; }
    const IntMatrix& phiDual() const { return phiDual_; }

private:
    friend ToricHom makeHom(const PolarizedLattice&, const PolarizedLattice&, IntMatrix, IntMatrix);
    friend ToricHom dualHom(const ToricHom&);
    friend ToricHom composeHom(const ToricHom&, const ToricHom&);

    std::shared_ptr<const PolarizedLattice> source_, target_;
    IntMatrix phi_, phiDual_;
};

/// Validated construction; HomCompatibilityError lists every violated
/// (i, j) pair. Both lattices must be principally polarized.
ToricHom makeHom(const PolarizedLattice& source, const PolarizedLattice& target, IntMatrix phi, IntMatrix phiDual);

/// (phiDual, phi) : target -> source.
ToricHom dualHom(const ToricHom& f);

/// g o f; requires f.target() == g.source().
ToricHom composeHom(const ToricHom& g, const ToricHom& f);

/// Rosati adjoint T^dagger = M^-1 T^T M. ValidationError("T† ∉ End(Λ)")
/// when it is not integral.
IntMatrix rosatiAdjoint(const PolarizedLattice& p, const IntMatrix& t);

/// True when (t, rosatiAdjoint(t)) is an endomorphism of the uniformized
/// variety, i.e. t lies in End(J) inside End(Lambda).
bool isEndomorphism(const PolarizedLattice& p, const IntMatrix& t);

/// The map Phi_1 -> Phi_2 as presentations: Phi_i = Z^{g_i} / M_i Z^{g_i}
/// (Hom(Lambda_i, Z) side) and the map is psi -> psi o phiDual, whose matrix
/// is phiDual^T.
struct ComponentMap {
    IntMatrix sourceRelations;  ///< M1
    IntMatrix targetRelations;  ///< M2
    IntMatrix matrix;           ///< g2 x g1

    FinAbGroup sourceGroup() const { return cokernelStructure(sourceRelations); }
    FinAbGroup targetGroup() const { return cokernelStructure(targetRelations); }
};

ComponentMap inducedComponentMap(const ToricHom& f);

/// second o first.
ComponentMap composeComponentMaps(const ComponentMap& second, const ComponentMap& first);

/// Equal as maps of groups: same presentations and (a - b) lands in M2 Z^g2.
bool sameComponentMap(const ComponentMap& a, const ComponentMap& b);

/// Z^{g2} / (matrix Z^{g1} + M2 Z^{g2}).
FinAbGroup cokernelOfComponentMap(const ComponentMap& m);
bool isSurjectiveOnComponents(const ComponentMap& m);

}  // namespace torphi
