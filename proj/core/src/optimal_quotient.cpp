#include "torphi/optimal_quotient.hpp"

#include "torphi/error.hpp"

#include <algorithm>

namespace torphi {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ConsistencyError("internal consistency failure: " + what);
}

// s with s . beta = gcd(beta) (= 1 for primitive beta).
IntVector bezoutCoefficients(const IntVector& beta) {
    IntVector s(beta.size(), Integer(0));
    Integer g = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        Integer ng, a, b;
        mpz_gcdext(ng.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(), beta[i].get_mpz_t());
        for (std::size_t k = 0; k < i; ++k) s[k] *= a;
        s[i] = b;
        g = ng;
    }
    return s;
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

bool firstNonzeroPositive(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return x > 0;
    return false;
}

struct DirectionSolver {
    const PolarizedLattice& lattice;
    IntMatrix valuation;
    IntMatrix adj;

    explicit DirectionSolver(const PolarizedLattice& p)
        : lattice(p), valuation(p.lattice().valuationMatrix()), adj(adjugate(valuation)) {}

    std::optional<EllipticSubvariety> solve(const IntVector& beta) const {
        const std::size_t g = lattice.rank();
        const Integer& w = lattice.field().torsionOrder();
        // Valuations: V x = beta v0 forces x onto the rational line through
        // V^-1 beta; its primitive vector is lambda_E up to sign.
        IntVector lambda = primitivePart(adj * beta);
        if (!firstNonzeroPositive(lambda)) lambda = negated(lambda);
        IntVector image = valuation * lambda;
        Integer v0;
        for (std::size_t i = 0; i < g; ++i)
            if (beta[i] != 0) {
                v0 = image[i] / beta[i];
                break;
            }
        IntVector direction = beta;
        if (v0 < 0) {
            direction = negated(direction);
            v0 = -v0;
        }
        for (std::size_t i = 0; i < g; ++i) require(image[i] == direction[i] * v0, "V lambda_E is not on beta");

        // pt = lambda_E as a point; x1 = prod pt_i^s_i is the only candidate
        // with beta(x1) = pt, and the defects d_i = pt_i / x1^beta_i
        // measure how far it is from being one.
        TorusPoint pt = lattice.lattice().point(lambda);
        IntVector s = bezoutCoefficients(direction);
        CoarseUnit x1 = evalCharacter(s, pt);
        Integer c = 1;
        for (std::size_t i = 0; i < g; ++i) {
            CoarseUnit defect = unitMul(pt[i], unitPow(x1, -direction[i]));
            require(defect.valuation() == 0, "defect with nonzero valuation");
            // A generic principal-unit defect cannot be killed by any power.
            if (!defect.generic().empty()) return std::nullopt;
            c = lcm(c, w / gcd(w, defect.torsion()));
        }
        EllipticSubvariety e;
        e.cocharacter = direction;
        e.lambdaE = lambda;
        e.c = c;
        e.gammaCoords = lambda;
        for (auto& x : e.gammaCoords) x *= c;
        e.qE = unitPow(x1, c);
        require(lattice.lattice().point(e.gammaCoords) == cocharacterPoint(direction, e.qE),
                "generator of Gamma does not lie on the subtorus");
        require(e.qE.valuation() > 0, "Tate period with non-positive valuation");
        return e;
    }
};

IntMatrix vectorize(const std::vector<IntMatrix>& ms, std::size_t g) {
    IntMatrix out(g * g, ms.size());
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) out(i * g + j, a) = ms[a](i, j);
    return out;
}

IntMatrix vectorize(const IntMatrix& m) { return vectorize(std::vector<IntMatrix>{m}, m.rows()); }

void requireCommuting(const std::vector<IntMatrix>& tGens) {
    for (std::size_t a = 0; a < tGens.size(); ++a)
        for (std::size_t b = a + 1; b < tGens.size(); ++b)
            if (tGens[a] * tGens[b] != tGens[b] * tGens[a])
                throw ValidationError("T generators " + std::to_string(a) + " and " + std::to_string(b) +
                                      " do not commute");
}

void requireShapes(const PolarizedLattice& p, const std::vector<IntMatrix>& tGens) {
    if (tGens.empty()) throw ValidationError("T needs at least one generator");
    for (std::size_t a = 0; a < tGens.size(); ++a)
        if (tGens[a].rows() != p.rank() || tGens[a].cols() != p.rank())
            throw ValidationError("T generator " + std::to_string(a) + " has the wrong shape");
}

}  // namespace

Integer defaultEnumerationBound(const PolarizedLattice& p) {
    IntMatrix v = p.lattice().valuationMatrix();
    Integer best = 0;
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (abs(v(i, j)) > best) best = abs(v(i, j));
    return Integer(static_cast<unsigned long>(p.rank())) * best;
}

std::optional<EllipticSubvariety> subvarietyForDirection(const PolarizedLattice& p, const IntVector& beta) {
    if (beta.size() != p.rank()) throw ValidationError("cocharacter has the wrong length");
    if (content(beta) != 1) throw ValidationError("cocharacter must be primitive");
    return DirectionSolver(p).solve(beta);
}

std::vector<EllipticSubvariety> findEllipticSubvarieties(const PolarizedLattice& p, const Integer& bound) {
    if (bound <= 0) throw ValidationError("enumeration bound must be positive");
    if (!p.principal()) throw ValidationError("findEllipticSubvarieties: polarization is not principal");
    const std::size_t g = p.rank();
    const long b = toInt64(bound, "enumeration bound");
    DirectionSolver solver(p);
    std::vector<EllipticSubvariety> out;
    std::vector<long> digits(g, -b);
    IntVector beta(g);
    for (;;) {
        for (std::size_t i = 0; i < g; ++i) beta[i] = digits[i];
        if (firstNonzeroPositive(beta) && content(beta) == 1) {
            if (auto e = solver.solve(beta)) out.push_back(std::move(*e));
        }
        std::size_t k = g;
        while (k > 0) {
            --k;
            if (digits[k] < b) {
                ++digits[k];
                break;
            }
            digits[k] = -b;
            if (k == 0) {
                std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lambdaE > y.lambdaE; });
                return out;
            }
        }
    }
}

PolarizedLattice ellipticCurveLattice(const PolarizedLattice& p, const EllipticSubvariety& e) {
    UnitMatrix coords(1, p.field().torsionOrder());
    coords(0, 0) = e.qE;
    return PolarizedLattice(MultiplicativeLattice(p.field(), coords), RiemannForm{IntMatrix::identity(1)});
}

ToricHom quotientHom(const PolarizedLattice& p, const EllipticSubvariety& e) {
    const IntVector pairingRow = p.gram() * e.lambdaE;
    const Integer ord = e.qE.valuation();
    IntMatrix pi(1, p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) {
        Integer num = e.c * pairingRow[i];
        require(mpz_divisible_p(num.get_mpz_t(), ord.get_mpz_t()), "pi(lambda) is not an integer multiple of rho");
        pi(0, i) = num / ord;
    }
    return makeHom(p, ellipticCurveLattice(p, e), pi, IntMatrix::column(e.gammaCoords));
}

Projector idempotentOf(const PolarizedLattice& p, const EllipticSubvariety& e) {
    IntVector row = p.gram() * e.lambdaE;
    return Projector{IntMatrix::column(e.lambdaE) * IntMatrix::row(row), dot(e.lambdaE, row)};
}

Integer projectionToGamma(const PolarizedLattice& p, const EllipticSubvariety& e, const IntVector& lambda) {
    if (lambda.size() != p.rank()) throw ValidationError("projectionToGamma: vector has the wrong length");
    Integer num = e.c * dot(lambda, p.gram() * e.lambdaE);
    const Integer& ord = e.qE.valuation();
    require(mpz_divisible_p(num.get_mpz_t(), ord.get_mpz_t()), "pi(lambda) is not integral");
    return num / ord;
}

QuotientInvariants computeInvariants(const PolarizedLattice& p, const EllipticSubvariety& e) {
    const std::size_t g = p.rank();
    const IntMatrix& gram = p.gram();
    const Integer& w = p.field().torsionOrder();
    QuotientInvariants inv;
    inv.c = e.c;
    inv.ordQE = e.qE.valuation();
    const IntVector row = gram * e.lambdaE;
    inv.selfPairing = dot(e.lambdaE, row);
    inv.m = abs(content(row));

    // r, route 1: lcm of the reduced denominators of the entries of e.
    const Projector proj = idempotentOf(p, e);
    Integer rDenominators = 1;
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            rDenominators = lcm(rDenominators, makeRational(proj.numerator(i, j), proj.denominator).get_den());
    // r, route 2: s / gcd(s, content of lambda_E (M lambda_E)^T).
    const Integer rContent = proj.denominator / gcd(proj.denominator, proj.numerator.content());
    require(rDenominators == rContent, "the two computations of r disagree");
    inv.r = rContent;

    // n: least k with k*e in End(J). k*e is integral iff r | k, and n = c*r
    // with c | w, so k = r, 2r, ..., w*r covers it.
    for (Integer k = inv.r; k <= inv.r * w; k += inv.r) {
        IntMatrix ke(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) ke(i, j) = k * proj.numerator(i, j) / proj.denominator;
        if (isEndomorphism(p, ke)) {
            inv.n = k;
            break;
        }
    }
    require(inv.n != 0, "no multiple of e up to w*r lies in End(J)");

    const IntMatrix perp = kernelBasis(IntMatrix::row(row));
    inv.congruenceNumber = latticeIndex(IntMatrix::identity(g), perp.hcat(IntMatrix::column(e.lambdaE)));

    inv.cokernel = cokernelOfComponentMap(inducedComponentMap(quotientHom(p, e)));
    inv.surjective = inv.cokernel.isTrivial();

    require(inv.c * inv.m == inv.ordQE, "c*m = ord(q_E)");
    require(inv.c * inv.c * inv.selfPairing == inv.n * inv.ordQE, "c^2 <lambda_E,lambda_E> = n ord(q_E)");
    require(inv.n == inv.c * inv.r, "c = n/r");
    require(inv.congruenceNumber == inv.r, "R_E = r");
    require(inv.cokernel == FinAbGroup::cyclic(inv.c), "coker(pi_*) = Z/c");
    require(inv.surjective == (inv.c == 1), "pi_* surjective iff c = 1");
    require(mpz_divisible_p(w.get_mpz_t(), inv.c.get_mpz_t()), "c divides w");
    return inv;
}

bool TheoremReport::allAgree() const {
    for (bool b : holds)
        if (b != holds[0]) return false;
    return true;
}

TheoremReport checkTheoremEquivalence(const QuotientInvariants& inv, const PolarizedLattice& p,
                                      const EllipticSubvariety& e) {
    const std::size_t g = p.rank();
    TheoremReport rep;
    rep.holds[0] = isSurjectiveOnComponents(inducedComponentMap(quotientHom(p, e)));

    const Projector proj = idempotentOf(p, e);
    IntMatrix e0(g, g);
    bool integral = true;
    for (std::size_t i = 0; i < g && integral; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            Integer num = inv.n * proj.numerator(i, j);
            if (!mpz_divisible_p(num.get_mpz_t(), proj.denominator.get_mpz_t())) {
                integral = false;
                break;
            }
            e0(i, j) = num / proj.denominator;
        }
    require(integral, "n*e is not integral");
    rep.holds[1] = e0.content() == 1;

    rep.holds[2] = e.c == 1;
    rep.holds[3] = inv.n == inv.r;
    rep.holds[4] = inv.selfPairing == inv.n * inv.ordQE;
    rep.holds[5] = inv.m == inv.ordQE;
    const IntVector row = p.gram() * e.lambdaE;
    const IntMatrix perp = kernelBasis(IntMatrix::row(row));
    rep.holds[6] = inv.n == latticeIndex(IntMatrix::identity(g), perp.hcat(IntMatrix::column(e.lambdaE)));

    if (!rep.allAgree()) {
        std::string detail;
        for (std::size_t k = 0; k < 7; ++k) detail += (rep.holds[k] ? "T" : "F");
        throw ConsistencyError("surjectivity conditions disagree: " + detail);
    }
    return rep;
}

PerfectPairingVerdict gekelerCriterion(const PolarizedLattice& p, const EllipticSubvariety& e,
                                const std::vector<IntMatrix>& tGens, const IntMatrix& pairing) {
    const std::size_t g = p.rank();
    requireShapes(p, tGens);
    for (std::size_t a = 0; a < tGens.size(); ++a)
        if (!isEndomorphism(p, tGens[a]))
            throw ValidationError("T generator " + std::to_string(a) + " is not an endomorphism of J");
    requireCommuting(tGens);
    const std::size_t k = tGens.size();
    if (pairing.rows() != k || pairing.cols() != g)
        throw ValidationError("T x Lambda pairing must be " + std::to_string(k) + "x" + std::to_string(g));

    const IntMatrix basis = vectorize(tGens, g);
    if (rank(basis) != k) throw ValidationError("T generators are not linearly independent");
    if (!integerCoordinates(basis, vectorize(IntMatrix::identity(g))))
        throw ValidationError("T does not contain the identity");

    // Equivariance (S T, lambda) = (S, T lambda) on generators.
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            auto coords = integerCoordinates(basis, vectorize(tGens[a] * tGens[b]));
            if (!coords)
                throw ValidationError("T is not closed under multiplication (generators " + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
            for (std::size_t i = 0; i < g; ++i) {
                Integer lhs = 0, rhs = 0;
                for (std::size_t c = 0; c < k; ++c) lhs += (*coords)(c, 0) * pairing(c, i);
                for (std::size_t j = 0; j < g; ++j) rhs += tGens[b](j, i) * pairing(a, j);
                if (lhs != rhs)
                    throw ValidationError("pairing is not T-equivariant: (T" + std::to_string(a) + "*T" +
                                          std::to_string(b) + ", lambda_" + std::to_string(i) +
                                          ") != (T" + std::to_string(a) + ", T" + std::to_string(b) +
                                          " lambda_" + std::to_string(i) + ")");
            }
        }

    // e in T (x) Q, and its denominator s in T.
    const Projector proj = idempotentOf(p, e);
    const IntMatrix target = vectorize(proj.numerator);
    if (rank(basis.hcat(target)) != k) throw ValidationError("e ∉ 𝕋⊗ℚ: the idempotent is not in T (x) Q");
    SmithForm f = smithNormalForm(basis);
    IntVector z = f.U * target.getColumn(0);
    std::vector<Rational> y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = makeRational(z[i], f.D(i, i));
    Integer s = 1;
    for (std::size_t i = 0; i < k; ++i) {
        Rational xi = 0;
        for (std::size_t j = 0; j < k; ++j) xi += Rational(f.V(i, j)) * y[j];
        xi /= Rational(proj.denominator);
        xi.canonicalize();
        s = lcm(s, xi.get_den());
    }

    const QuotientInvariants inv = computeInvariants(p, e);
    PerfectPairingVerdict v;
    v.denominatorInRing = s;
    v.r = inv.r;
    require(mpz_divisible_p(s.get_mpz_t(), inv.n.get_mpz_t()), "n divides the denominator of e in T");
    const Integer ratio = s / inv.r;
    if (k != g) {
        v.determinant = 0;
        v.note = "criterion inconclusive: pairing is not square, so it cannot be perfect";
        return v;
    }
    v.determinant = pairing.determinant();
    if (abs(v.determinant) == 1) {
        v.certified = true;
        require(inv.c == 1, "perfect T-equivariant pairing but c != 1");
        require(s == inv.r, "perfect pairing forces s = r");
        v.note = "perfect pairing: pi_* is surjective";
    } else {
        require(v.determinant == 0 || mpz_divisible_p(v.determinant.get_mpz_t(), ratio.get_mpz_t()),
                "s/r divides the pairing determinant");
        v.note = "criterion inconclusive: det = " + v.determinant.get_str() + ", divisible by s/r = " +
                 ratio.get_str();
    }
    return v;
}

IndexCheck lemmaCIIIndexCheck(const PolarizedLattice& p, const EllipticSubvariety& e,
                              const std::vector<IntMatrix>& tGens) {
    const std::size_t g = p.rank();
    requireShapes(p, tGens);
    requireCommuting(tGens);
    IndexCheck out;
    IntMatrix generators(g, 0);
    for (std::size_t a = 0; a < tGens.size(); ++a) {
        const IntMatrix& t = tGens[a];
        auto eigen = [&](const IntMatrix& m, const char* what) {
            IntVector image = m * e.lambdaE;
            std::size_t pivot = 0;
            while (e.lambdaE[pivot] == 0) ++pivot;
            if (!mpz_divisible_p(image[pivot].get_mpz_t(), e.lambdaE[pivot].get_mpz_t()))
                throw ValidationError(std::string("lambda_E is not an eigenvector of ") + what + " " +
                                      std::to_string(a));
            Integer ev = image[pivot] / e.lambdaE[pivot];
            for (std::size_t i = 0; i < g; ++i)
                if (image[i] != ev * e.lambdaE[i])
                    throw ValidationError(std::string("lambda_E is not an eigenvector of ") + what + " " +
                                          std::to_string(a));
            return ev;
        };
        Integer ev = eigen(t, "T");
        Integer evDagger = eigen(rosatiAdjoint(p, t), "the Rosati adjoint of T");
        if (ev != evDagger)
            throw ValidationError("a(T†) != a(T) for generator " + std::to_string(a) + ": " + evDagger.get_str() +
                                  " vs " + ev.get_str());
        out.eigenvalues.push_back(ev);
        IntMatrix shifted = t - ev * IntMatrix::identity(g);
        generators = generators.hcat(shifted);
    }
    const IntVector row = p.gram() * e.lambdaE;
    for (std::size_t j = 0; j < generators.cols(); ++j)
        require(dot(row, generators.getColumn(j)) == 0, "I_E Lambda is not inside lambda_E^perp");
    const IntMatrix perp = kernelBasis(IntMatrix::row(row));
    try {
        out.index = latticeIndex(perp, generators);
    } catch (const ValidationError&) {
        throw ValidationError("e ∉ 𝕋⊗ℚ: I_E Lambda has infinite index in lambda_E^perp");
    }
    out.divisibleByC = mpz_divisible_p(out.index.get_mpz_t(), e.c.get_mpz_t()) != 0;
    if (out.index == 1) require(e.c == 1, "I_E Lambda = lambda_E^perp forces c = 1");
    return out;
}

LatticeAnalysis analyzeLattice(const PolarizedLattice& p, const Integer& bound) {
    LatticeAnalysis out;
    out.componentGroup = componentGroup(p);
    out.bound = bound;
    for (auto& e : findEllipticSubvarieties(p, bound)) {
        QuotientInvariants inv = computeInvariants(p, e);
        TheoremReport rep = checkTheoremEquivalence(inv, p, e);
        out.subvarieties.push_back({std::move(e), std::move(inv), rep});
    }
    return out;
}

}  // namespace torphi
