#pragma once

// Tate curves, their c-torsion and Weil pairing, and the gluing of two Tate
// curves along an anti-isometry of their c-torsion.

#include "torphi/int_matrix.hpp"
#include "torphi/lattice_algebra.hpp"
#include "torphi/local_field.hpp"
#include "torphi/toric_lattice.hpp"

#include <string>
#include <vector>

namespace torphi {

struct TateCurve {
    LocalFieldModel field;
    CoarseUnit q;

    /// ValidationError unless v(q) > 0 and q lives in the field's model.
    static TateCurve create(const LocalFieldModel& field, const CoarseUnit& q);
};

/// Z/v(q).
FinAbGroup tateComponentGroup(const TateCurve& e);

/// zeta^a * w^b, zeta = primitive c-th root of unity with torsion exponent
/// w_field/c and w = the first c-th root of q (see cthRoots).
struct TorsionPoint {
    TateCurve curve;
    Integer c;
    Integer a, b;  // reduced mod c

    /// ValidationError unless c >= 1, c | w_field and c | v(q).
    static TorsionPoint create(const TateCurve& e, const Integer& c, const Integer& a, const Integer& b);
};

/// Exponent k of e_c(P, Q) = zeta^k: a*b' - a'*b mod c.
Integer weilPairing(const TorsionPoint& P, const TorsionPoint& Q);

/// zeta = (1, 0), which generates the torsion specializing to the identity
/// component.
TorsionPoint canonicalGenerator(const TateCurve& e, const Integer& c);

/// The point as an element of K^x / q^Z (representative zeta^a w^b).
CoarseUnit torsionPointValue(const TorsionPoint& P);

/// Component of the reduction in Phi_E = Z/v(q): b * v(q)/c mod v(q).
Integer specializationComponent(const TorsionPoint& P);

/// An isomorphism E1[c] -> E2[c] in (zeta, w) coordinates that inverts the
/// Weil pairing. Column j is the image of the j-th basis vector.
class AntiIsometry {
public:
    /// ValidationError if the matrix is not 2x2, not invertible mod c, or
    /// does not satisfy e(psi P, psi Q) = e(P, Q)^-1.
    static AntiIsometry create(const Integer& c, const IntMatrix& matrix);

    const Integer& c() const { return c_; }
    const IntMatrix& matrix() const { return matrix_; }
    /// Image of (a, b), reduced mod c.
    std::pair<Integer, Integer> apply(const Integer& a, const Integer& b) const;

private:
    AntiIsometry(Integer c, IntMatrix m) : c_(std::move(c)), matrix_(std::move(m)) {}
    Integer c_;
    IntMatrix matrix_;
};

/// psi(zeta_1) = w_2, psi(w_1) = zeta_2. ValidationError for c < 2.
AntiIsometry buildAntiIsometry(const Integer& c);

/// The primitive c-th root of unity used for gluing, torsion exponent w/c.
CoarseUnit gluingRoot(const LocalFieldModel& field, const Integer& c);

/// Lattice generated by (q1, zeta) and (zeta, q2) with H = identity.
/// Requires v(q1), v(q2) > 0, c | w and that q1, q2 are multiplicatively
/// independent in the model.
PolarizedLattice buildGluedLattice(const CoarseUnit& q1, const CoarseUnit& q2, const Integer& c,
                                   const LocalFieldModel& field);

/// Phi_A / phi(G) for A = E1 x E2 and G the graph of buildAntiIsometry(c)
/// (the identity gluing for c = 1). The curves carry the periods Q_i whose
/// c-torsion is glued.
FinAbGroup quotientComponentGroup(const TateCurve& e1, const TateCurve& e2, const Integer& c);

/// Same, for an arbitrary anti-isometry.
FinAbGroup quotientComponentGroup(const TateCurve& e1, const TateCurve& e2, const AntiIsometry& psi);

struct ExampleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Example21Report {
    Integer prime;
    std::vector<ExampleCheck> checks;
    bool allPassed() const;
};

/// The degree-2 map from y^2 = (p x^2 + p - 1)((p+1) x^2 + p)(x^2 + 1) onto
/// y^2 = x(x-1)(x+p): the polynomial identity (formal in p), ord_p j(E),
/// Phi_E and the non-surjectivity of pi_* on the matching glued lattice.
/// ValidationError unless p is an odd prime.
Example21Report verifyExample21(const Integer& p);

}  // namespace torphi
