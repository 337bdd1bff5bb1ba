#include "torphi/tate_construction.hpp"

#include "torphi/error.hpp"
#include "torphi/optimal_quotient.hpp"
#include "torphi/poly2z.hpp"

namespace torphi {

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

void requireLevel(const LocalFieldModel& field, const Integer& c) {
    if (c < 1) throw ValidationError("torsion level c must be positive");
    if (!divides(c, field.torsionOrder()))
        throw ValidationError("c = " + c.get_str() + " does not divide w = " + field.torsionOrder().get_str() +
                              ": K has no primitive c-th root of unity");
}

}  // namespace

TateCurve TateCurve::create(const LocalFieldModel& field, const CoarseUnit& q) {
    if (q.modulus() != field.torsionOrder())
        throw ValidationError("Tate period " + q.toString() + " is not in the field's unit model");
    if (q.valuation() <= 0) throw ValidationError("Tate period needs v(q) > 0, got " + q.valuation().get_str());
    return TateCurve{field, q};
}

FinAbGroup tateComponentGroup(const TateCurve& e) { return FinAbGroup::cyclic(e.q.valuation()); }

TorsionPoint TorsionPoint::create(const TateCurve& e, const Integer& c, const Integer& a, const Integer& b) {
    requireLevel(e.field, c);
    if (!divides(c, e.q.valuation()))
        throw ValidationError("c = " + c.get_str() + " does not divide v(q) = " + e.q.valuation().get_str());
    return TorsionPoint{e, c, mod(a, c), mod(b, c)};
}

Integer weilPairing(const TorsionPoint& P, const TorsionPoint& Q) {
    if (!(P.curve.q == Q.curve.q) || !(P.curve.field == Q.curve.field))
        throw ValidationError("weilPairing: points lie on different curves");
    if (P.c != Q.c) throw ValidationError("weilPairing: torsion levels differ");
    return mod(P.a * Q.b - Q.a * P.b, P.c);
}

TorsionPoint canonicalGenerator(const TateCurve& e, const Integer& c) { return TorsionPoint::create(e, c, 1, 0); }

CoarseUnit gluingRoot(const LocalFieldModel& field, const Integer& c) {
    requireLevel(field, c);
    return CoarseUnit::rootOfUnity(field.torsionOrder() / c, field.torsionOrder());
}

CoarseUnit torsionPointValue(const TorsionPoint& P) {
    auto roots = cthRoots(P.curve.q, P.c);
    if (roots.empty()) throw ValidationError("q has no c-th root in the unit model");
    return unitMul(unitPow(gluingRoot(P.curve.field, P.c), P.a), unitPow(roots.front(), P.b));
}

Integer specializationComponent(const TorsionPoint& P) {
    const Integer& v = P.curve.q.valuation();
    return mod(P.b * (v / P.c), v);
}

AntiIsometry AntiIsometry::create(const Integer& c, const IntMatrix& matrix) {
    if (c < 1) throw ValidationError("anti-isometry level must be positive");
    if (matrix.rows() != 2 || matrix.cols() != 2) throw ValidationError("anti-isometry matrix must be 2x2");
    IntMatrix m = matrix;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = mod(m(i, j), c);
    if (gcd(m.determinant(), c) != 1) throw ValidationError("anti-isometry matrix is not invertible mod c");
    // e(psi P, psi Q) = det(psi) e(P, Q); checked on all pairs anyway so the
    // error can name one.
    for (Integer a = 0; a < c; ++a)
        for (Integer b = 0; b < c; ++b)
            for (Integer a2 = 0; a2 < c; ++a2)
                for (Integer b2 = 0; b2 < c; ++b2) {
                    Integer before = mod(a * b2 - a2 * b, c);
                    Integer pa = m(0, 0) * a + m(0, 1) * b, pb = m(1, 0) * a + m(1, 1) * b;
                    Integer qa = m(0, 0) * a2 + m(0, 1) * b2, qb = m(1, 0) * a2 + m(1, 1) * b2;
                    Integer after = mod(pa * qb - qa * pb, c);
                    if (mod(before + after, c) != 0)
                        throw ValidationError("not an anti-isometry: e(psi P, psi Q) != e(P, Q)^-1 for P = (" +
                                              a.get_str() + "," + b.get_str() + "), Q = (" + a2.get_str() + "," +
                                              b2.get_str() + ")");
                }
    return AntiIsometry(c, m);
}

std::pair<Integer, Integer> AntiIsometry::apply(const Integer& a, const Integer& b) const {
    return {mod(matrix_(0, 0) * a + matrix_(0, 1) * b, c_), mod(matrix_(1, 0) * a + matrix_(1, 1) * b, c_)};
}

AntiIsometry buildAntiIsometry(const Integer& c) {
    if (c < 2) throw ValidationError("buildAntiIsometry needs c >= 2, got " + c.get_str());
    return AntiIsometry::create(c, IntMatrix{{0, 1}, {1, 0}});
}

PolarizedLattice buildGluedLattice(const CoarseUnit& q1, const CoarseUnit& q2, const Integer& c,
                                   const LocalFieldModel& field) {
    const Integer& w = field.torsionOrder();
    if (q1.modulus() != w || q2.modulus() != w) throw ValidationError("periods are not in the field's unit model");
    if (q1.valuation() <= 0) throw ValidationError("buildGluedLattice: v(q1) must be positive");
    if (q2.valuation() <= 0) throw ValidationError("buildGluedLattice: v(q2) must be positive");
    const CoarseUnit zeta = gluingRoot(field, c);
    // q1^u = q2^u' forces (u, u') = k (v2, v1) / g; torsion repeats with
    // period w in k, so k = 1..w decides it.
    const Integer g = gcd(q1.valuation(), q2.valuation());
    const CoarseUnit a = unitPow(q1, q2.valuation() / g), b = unitPow(q2, q1.valuation() / g);
    CoarseUnit ak = a, bk = b;
    for (Integer k = 1; k <= w; ++k) {
        if (ak == bk)
            throw ValidationError("q1 and q2 are multiplicatively dependent: q1^" +
                                  Integer(k * q2.valuation() / g).get_str() + " = q2^" +
                                  Integer(k * q1.valuation() / g).get_str());
        ak = unitMul(ak, a);
        bk = unitMul(bk, b);
    }
    UnitMatrix coords(2, w);
    coords(0, 0) = q1;
    coords(1, 0) = zeta;
    coords(0, 1) = zeta;
    coords(1, 1) = q2;
    return PolarizedLattice(MultiplicativeLattice(field, coords), RiemannForm{IntMatrix::identity(2)});
}

FinAbGroup quotientComponentGroup(const TateCurve& e1, const TateCurve& e2, const AntiIsometry& psi) {
    const Integer& c = psi.c();
    if (!(e1.field == e2.field)) throw ValidationError("quotientComponentGroup: curves over different fields");
    const Integer v1 = e1.q.valuation(), v2 = e2.q.valuation();
    // Graph generators (P, psi P) for P = zeta, w on E1, sent to Phi_1 x Phi_2.
    IntMatrix rel = IntMatrix::diagonal({v1, v2});
    for (const auto& [a, b] : {std::pair<Integer, Integer>{1, 0}, std::pair<Integer, Integer>{0, 1}}) {
        TorsionPoint P = TorsionPoint::create(e1, c, a, b);
        auto [a2, b2] = psi.apply(a, b);
        TorsionPoint Q = TorsionPoint::create(e2, c, a2, b2);
        rel = rel.hcat(IntMatrix::column({specializationComponent(P), specializationComponent(Q)}));
    }
    return cokernelStructure(rel);
}

FinAbGroup quotientComponentGroup(const TateCurve& e1, const TateCurve& e2, const Integer& c) {
    if (c == 1) {
        requireLevel(e1.field, c);
        return cokernelStructure(IntMatrix::diagonal({e1.q.valuation(), e2.q.valuation()}));
    }
    return quotientComponentGroup(e1, e2, buildAntiIsometry(c));
}

bool Example21Report::allPassed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return !checks.empty();
}

Example21Report verifyExample21(const Integer& p) {
    if (p == 2) throw ValidationError("verifyExample21 needs an odd prime, got 2");
    if (!isPrime(p)) throw ValidationError("verifyExample21 needs an odd prime, got " + p.get_str());
    Example21Report rep;
    rep.prime = p;

    const Poly2Z x = Poly2Z::x(), P = Poly2Z::p();
    const Poly2Z X = P * (P + 1) * x.pow(2) + P.pow(2);
    const Poly2Z f = (P * x.pow(2) + (P - 1)) * ((P + 1) * x.pow(2) + P) * (x.pow(2) + 1);
    const Poly2Z lhs = X * (X - 1) * (X + P);
    const Poly2Z rhs = (P * (P + 1)).pow(2) * f;
    rep.checks.push_back({"X(X-1)(X+p) = (p(p+1))^2 f(x) formally in p", lhs == rhs,
                          lhs == rhs ? "difference is 0" : "difference " + (lhs - rhs).toString()});
    const bool atP = lhs.substituteP(p) == rhs.substituteP(p);
    rep.checks.push_back({"identity at p = " + p.get_str(), atP, atP ? "difference is 0" : "nonzero difference"});
    bool even = true;
    for (const auto& [m, coeff] : X.terms()) even = even && m.first % 2 == 0;
    const bool degree2 = X.coefficient(2, 2) != 0 && even;
    rep.checks.push_back({"x -> X(x) is even of degree 2", degree2, "X = " + X.toString()});

    // Legendre form y^2 = x(x-1)(x-lambda), lambda = -p.
    const Rational lambda(-p);
    Rational num = lambda * lambda - lambda + 1;
    num = 256 * num * num * num;
    Rational den = lambda * lambda * (lambda - 1) * (lambda - 1);
    Rational j = num / den;
    j.canonicalize();
    Rational closed(Integer(256) * (p * p + p + 1) * (p * p + p + 1) * (p * p + p + 1),
                    p * p * (p + 1) * (p + 1));
    closed.canonicalize();
    rep.checks.push_back({"j = 256(p^2+p+1)^3 / (p^2 (p+1)^2)", j == closed, "j = " + toString(j)});
    const Integer ordJ = ordOfRational(j, p);
    rep.checks.push_back({"ord_p(j) = -2", ordJ == -2, "ord_p(j) = " + ordJ.get_str()});
    const Integer ordDisc = ordOfRational(16 * den, p);
    rep.checks.push_back({"ord_p(disc) = -ord_p(j) (multiplicative reduction)", ordJ < 0 && ordDisc == -ordJ,
                          "ord_p(disc) = " + ordDisc.get_str()});
    const FinAbGroup phiE = ordJ < 0 ? FinAbGroup::cyclic(-ordJ) : FinAbGroup::trivial();
    rep.checks.push_back({"Phi_E = Z/2", phiE == FinAbGroup::cyclic(2), "Phi_E = " + phiE.toString()});

    // Lattice level: the c = 2 gluing of two curves with v(q_i) = 1.
    const LocalFieldModel field(p, p, p - 1);
    const PolarizedLattice glued = buildGluedLattice(CoarseUnit(1, 0, p - 1, {{"q1", 1}}),
                                                     CoarseUnit(1, 0, p - 1, {{"q2", 1}}), 2, field);
    const FinAbGroup phiJ = componentGroup(glued);
    rep.checks.push_back({"Phi_J trivial for the glued lattice", phiJ.isTrivial(), "Phi_J = " + phiJ.toString()});
    const auto subs = findEllipticSubvarieties(glued, defaultEnumerationBound(glued));
    bool quotientOk = !subs.empty();
    std::string detail = std::to_string(subs.size()) + " elliptic subvarieties";
    for (const auto& e : subs) {
        QuotientInvariants inv = computeInvariants(glued, e);
        FinAbGroup phiEi = FinAbGroup::cyclic(inv.ordQE);
        quotientOk = quotientOk && phiEi == phiE && inv.cokernel == FinAbGroup::cyclic(2) && !inv.surjective;
        detail += "; Phi_E = " + phiEi.toString() + ", coker(pi_*) = " + inv.cokernel.toString();
    }
    rep.checks.push_back({"pi_* : Phi_J -> Phi_E not surjective, coker = Z/2", quotientOk, detail});
    return rep;
}

}  // namespace torphi
