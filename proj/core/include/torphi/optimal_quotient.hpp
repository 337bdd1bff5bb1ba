#pragma once

// Elliptic subvarieties of a polarized lattice and the numerical invariants
// of the corresponding optimal quotients pi : J -> E.
//
// For a one-dimensional subtorus T' (cocharacter beta) meeting the lattice
// in Gamma = T'(K) cap Lambda = rho^Z, pi^dual(rho) = c * lambda_E with
// lambda_E primitive. Everything else is derived from the monodromy
// pairing:
//
//   m   = gcd_i <lambda_i, lambda_E>          (least positive value)
//   e   = lambda_E <., lambda_E> / <lambda_E, lambda_E>   (idempotent)
//   r   = denominator of e in End(Lambda)
//   n   = denominator of e in End(J)
//   R_E = [Lambda : lambda_E^perp + Z lambda_E]
//
// and the identities c*m = ord q_E, c^2 <lambda_E,lambda_E> = n ord q_E,
// n = c*r, R_E = r, coker(pi_*) = Z/c, c | w are asserted on every result.

#include "torphi/int_matrix.hpp"
#include "torphi/lattice_algebra.hpp"
#include "torphi/toric_hom.hpp"
#include "torphi/toric_lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace torphi {

struct EllipticSubvariety {
    /// Direction of T', oriented so that v(q_E) > 0.
    IntVector cocharacter;
    /// Lattice coordinates of the generator rho of Gamma; equals c * lambdaE.
    IntVector gammaCoords;
    /// Tate period: rho read in T' = K^x.
    CoarseUnit qE;
    /// Generator of the saturation of Gamma, first nonzero entry positive.
    IntVector lambdaE;
    Integer c;
};

struct QuotientInvariants {
    Integer c, m, n, r, congruenceNumber;  // congruenceNumber is R_E
    Integer ordQE;
    Integer selfPairing;  ///< <lambda_E, lambda_E>
    bool surjective = false;
    FinAbGroup cokernel;
};

/// g * max |V_ij| for the valuation matrix V.
Integer defaultEnumerationBound(const PolarizedLattice& p);

/// Enumerates primitive cocharacters with entries in [-bound, bound] (up to
/// sign) and returns those whose subtorus meets the lattice nontrivially.
/// Complete for directions inside the box only. Sorted by lambdaE,
/// lexicographically decreasing.
std::vector<EllipticSubvariety> findEllipticSubvarieties(const PolarizedLattice& p, const Integer& bound);

/// Solves T'_beta(K) cap Lambda for one primitive direction.
std::optional<EllipticSubvariety> subvarietyForDirection(const PolarizedLattice& p, const IntVector& beta);

/// The elliptic curve E as a rank-1 principally polarized lattice (q_E).
PolarizedLattice ellipticCurveLattice(const PolarizedLattice& p, const EllipticSubvariety& e);

/// The optimal quotient pi : J -> E as (pi, pi^dual).
ToricHom quotientHom(const PolarizedLattice& p, const EllipticSubvariety& e);

/// e = numerator / denominator with numerator = lambda_E (M lambda_E)^T.
struct Projector {
    IntMatrix numerator;
    Integer denominator;
};
Projector idempotentOf(const PolarizedLattice& p, const EllipticSubvariety& e);

/// All invariants, with every identity cross-checked. ConsistencyError if
/// any identity fails.
QuotientInvariants computeInvariants(const PolarizedLattice& p, const EllipticSubvariety& e);

/// pi(lambda) as a multiple of rho: c <lambda, lambda_E> / ord q_E.
Integer projectionToGamma(const PolarizedLattice& p, const EllipticSubvariety& e, const IntVector& lambda);

/// The seven equivalent surjectivity conditions, each evaluated on its own.
struct TheoremReport {
    static constexpr std::array<const char*, 7> kNames = {
        "pi_* surjective on component groups",
        "e0 = n*e primitive in End(Lambda)",
        "c = 1",
        "n = r",
        "<lambda_E,lambda_E> = n * ord(q_E)",
        "m = ord(q_E)",
        "n = [Lambda : lambda_E^perp + Z lambda_E]",
    };
    std::array<bool, 7> holds{};
    bool allAgree() const;
};

/// ConsistencyError when the seven conditions disagree.
TheoremReport checkTheoremEquivalence(const QuotientInvariants& inv, const PolarizedLattice& p,
                                      const EllipticSubvariety& e);

struct PerfectPairingVerdict {
    bool certified = false;
    Integer determinant;        ///< 0 when the pairing is not square
    Integer denominatorInRing;  ///< s, least s with s*e in T
    Integer r;
    std::string note;
};

/// Perfect-pairing criterion for surjectivity. tGens is a Z-basis of a
/// commutative subring T of End(J) containing 1, and pairing is the k x g
/// matrix of a T-equivariant pairing T x Lambda -> Z. ValidationError when
/// a precondition fails.
PerfectPairingVerdict gekelerCriterion(const PolarizedLattice& p, const EllipticSubvariety& e,
                                const std::vector<IntMatrix>& tGens, const IntMatrix& pairing);

struct IndexCheck {
    Integer index;  ///< [lambda_E^perp : I_E Lambda]
    bool divisibleByC = false;
    IntVector eigenvalues;  ///< a(T) for each generator
};

/// Index of the augmentation-ideal image in lambda_E^perp; divisible by c.
IndexCheck lemmaCIIIndexCheck(const PolarizedLattice& p, const EllipticSubvariety& e,
                              const std::vector<IntMatrix>& tGens);

struct SubvarietyAnalysis {
    EllipticSubvariety subvariety;
    QuotientInvariants invariants;
    TheoremReport theorem;
};

struct LatticeAnalysis {
    FinAbGroup componentGroup;
    Integer bound;
    std::vector<SubvarietyAnalysis> subvarieties;
};

LatticeAnalysis analyzeLattice(const PolarizedLattice& p, const Integer& bound);

}  // namespace torphi
