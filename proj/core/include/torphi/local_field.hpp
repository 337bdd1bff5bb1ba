#pragma once

// A coarse model of the multiplicative group of a local field K.
//
// An element of K^x is recorded by its valuation v = ord_K(x) and the
// exponent t of its root-of-unity part with respect to a fixed generator of
// mu(K), a cyclic group of order w. The principal-unit part is discarded;
// equality of units is equality in this model. Every integer invariant
// built on top (component groups, c, m, n, r, R_E) depends only on this
// data.
//
// Sometimes a construction needs principal units that are multiplicatively
// independent (two Tate periods with q1^u != q2^u' for nonzero u, u'). For
// that, a unit can also carry integer exponents on named "generic" principal
// units. The names stand for arbitrary multiplicatively independent
// elements of 1 + m. With no generic exponents the model is the plain
// (v, t) model above.

#include "torphi/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace torphi {

class LocalFieldModel {
public:
    /// p prime, q a power of p, w >= 1; ValidationError otherwise.
    LocalFieldModel(Integer p, Integer q, Integer w);

    /// Q_p style model: q = p and w = p - 1 (p odd).
    static LocalFieldModel padic(const Integer& p);

    const Integer& residueChar() const { return p_; }
    const Integer& residueSize() const { return q_; }
    /// Order of the group of roots of unity mu(K).
    const Integer& torsionOrder() const { return w_; }

    /// Same field with w replaced by k*w, modelling an unramified extension
    /// with more roots of unity.
    LocalFieldModel widened(const Integer& k) const;

    bool operator==(const LocalFieldModel&) const = default;

private:
    Integer p_, q_, w_;
};

/// Exponents on named generic principal units; zero entries never stored.
using GenericExponents = std::map<std::string, Integer>;

class CoarseUnit {
public:
    /// The identity of the model with torsion order w.
    explicit CoarseUnit(Integer w = 1);
    CoarseUnit(Integer v, Integer t, Integer w, GenericExponents generic = {});

    static CoarseUnit identity(const Integer& w) { return CoarseUnit(w); }
    /// Primitive-or-not root of unity with exponent t.
    static CoarseUnit rootOfUnity(const Integer& t, const Integer& w) { return CoarseUnit(0, t, w); }

    const Integer& valuation() const { return v_; }
    /// Root-of-unity exponent, reduced into [0, w).
    const Integer& torsion() const { return t_; }
    const Integer& modulus() const { return w_; }
    const GenericExponents& generic() const { return generic_; }
    bool isIdentity() const { return v_ == 0 && t_ == 0 && generic_.empty(); }

    bool operator==(const CoarseUnit&) const = default;

    /// "(v,t)" or "(v,t;u1^2*u2^-1)".
    std::string toString() const;

private:
    Integer v_, t_, w_;
    GenericExponents generic_;
};

/// Group law. ValidationError when the two units come from different models.
CoarseUnit unitMul(const CoarseUnit& a, const CoarseUnit& b);
CoarseUnit unitPow(const CoarseUnit& a, const Integer& n);
CoarseUnit unitInverse(const CoarseUnit& a);

/// All y with y^c = x, sorted by torsion exponent. Empty unless c | v(x),
/// c*t' = t(x) (mod w) is solvable and every generic exponent is divisible
/// by c; otherwise exactly gcd(c, w) roots.
std::vector<CoarseUnit> cthRoots(const CoarseUnit& x, const Integer& c);

/// Re-expresses a unit relative to the generator g^u of mu(K),
/// gcd(u, w) = 1: the torsion exponent becomes t * u mod w.
CoarseUnit changeTorsionGenerator(const CoarseUnit& x, const Integer& u);

/// Embeds into the model with torsion order k*w (t -> k*t).
CoarseUnit widenUnit(const CoarseUnit& x, const Integer& k);

/// Exact rational with canonical form (gcd = 1, positive denominator).
using ExactRational = Rational;

/// num/den in canonical form; ValidationError on a zero denominator.
ExactRational makeRational(const Integer& num, const Integer& den);

/// p-adic valuation of an integer or rational. ValidationError("valuation
/// of zero") for x = 0.
Integer ordOfInteger(const Integer& x, const Integer& p);
Integer ordOfRational(const ExactRational& x, const Integer& p);

}  // namespace torphi
