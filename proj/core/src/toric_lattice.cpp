#include "torphi/toric_lattice.hpp"

#include "torphi/error.hpp"

namespace torphi {

CoarseUnit evalCharacter(const IntVector& chi, const TorusPoint& point) {
    if (chi.size() != point.size()) {
        throw ValidationError("evalCharacter: character of length " + std::to_string(chi.size()) +
                              " applied to a point of length " + std::to_string(point.size()));
    }
    if (point.empty()) throw ValidationError("evalCharacter: empty point");
    CoarseUnit acc = CoarseUnit::identity(point.front().modulus());
    for (std::size_t k = 0; k < chi.size(); ++k) acc = unitMul(acc, unitPow(point[k], chi[k]));
    return acc;
}

IntVector tropPoint(const TorusPoint& point) {
    IntVector v;
    v.reserve(point.size());
    for (const auto& u : point) v.push_back(u.valuation());
    return v;
}

TorusPoint cocharacterPoint(const IntVector& beta, const CoarseUnit& x) {
    TorusPoint p;
    p.reserve(beta.size());
    for (const auto& b : beta) p.push_back(unitPow(x, b));
    return p;
}

// ---------------------------------------------------------------------------

MultiplicativeLattice::MultiplicativeLattice(LocalFieldModel field, UnitMatrix coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    const std::size_t g = coords_.size();
    if (g == 0) throw ValidationError("lattice of rank 0");
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            if (coords_(i, j).modulus() != field_.torsionOrder()) {
                throw ValidationError("coords[" + std::to_string(i) + "][" + std::to_string(j) +
                                      "]: unit uses w = " + coords_(i, j).modulus().get_str() +
                                      " but the field has w = " + field_.torsionOrder().get_str());
            }
    if (valuationMatrix().determinant() == 0) {
        throw ValidationError("lattice condition violated: the valuation matrix is singular, so trop is not "
                              "injective with lattice image");
    }
}

TorusPoint MultiplicativeLattice::generator(std::size_t j) const {
    TorusPoint p;
    for (std::size_t i = 0; i < rank(); ++i) p.push_back(coords_(i, j));
    return p;
}

TorusPoint MultiplicativeLattice::point(const IntVector& a) const {
    if (a.size() != rank()) throw ValidationError("lattice point: coefficient vector has the wrong length");
    TorusPoint p(rank(), CoarseUnit::identity(field_.torsionOrder()));
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (a[j] != 0) p[i] = unitMul(p[i], unitPow(coords_(i, j), a[j]));
    return p;
}

IntMatrix MultiplicativeLattice::valuationMatrix() const {
    IntMatrix v(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) v(i, j) = coords_(i, j).valuation();
    return v;
}

// ---------------------------------------------------------------------------

PolarizedLattice::PolarizedLattice(MultiplicativeLattice lattice, RiemannForm form)
    : lattice_(std::move(lattice)), form_(std::move(form)) {
    const std::size_t g = lattice_.rank();
    if (form_.H.rows() != g || form_.H.cols() != g) {
        throw ValidationError("Riemann form must be " + std::to_string(g) + "x" + std::to_string(g));
    }
    pairings_ = UnitMatrix(g, lattice_.field().torsionOrder());
    for (std::size_t i = 0; i < g; ++i) {
        TorusPoint li = lattice_.generator(i);
        for (std::size_t j = 0; j < g; ++j) pairings_(i, j) = evalCharacter(form_.H.getColumn(j), li);
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (pairings_(i, j) != pairings_(j, i)) {
                throw ValidationError("Riemann form symmetry H(lambda)(mu) = H(mu)(lambda) fails for (i,j) = (" +
                                      std::to_string(i) + "," + std::to_string(j) + "): H(lambda_" +
                                      std::to_string(j) + ")(lambda_" + std::to_string(i) +
                                      ") = " + pairings_(i, j).toString() + " but H(lambda_" + std::to_string(i) +
                                      ")(lambda_" + std::to_string(j) + ") = " + pairings_(j, i).toString());
            }
    gram_ = IntMatrix(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) gram_(i, j) = pairings_(i, j).valuation();
    for (std::size_t k = 1; k <= g; ++k) {
        Integer minor = gram_.leadingMinor(k).determinant();
        if (minor <= 0) {
            throw ValidationError("Riemann form positivity fails: the pairing ord H(lambda)(mu) is not positive "
                                  "definite (leading minor of order " +
                                  std::to_string(k) + " is " + minor.get_str() + ", Gram " + gram_.toString() + ")");
        }
    }
    principal_ = abs(form_.H.determinant()) == 1;
}

CoarseUnit PolarizedLattice::pairing(const IntVector& a, const IntVector& b) const {
    const std::size_t g = rank();
    if (a.size() != g || b.size() != g) throw ValidationError("pairing: coefficient vector has the wrong length");
    CoarseUnit acc = CoarseUnit::identity(field().torsionOrder());
    for (std::size_t i = 0; i < g; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < g; ++j) {
            if (b[j] == 0) continue;
            acc = unitMul(acc, unitPow(pairings_(i, j), a[i] * b[j]));
        }
    }
    return acc;
}

CoarseUnit pairingH(const PolarizedLattice& p, std::size_t i, std::size_t j) {
    if (i >= p.rank() || j >= p.rank()) throw ValidationError("pairingH: index out of range");
    return p.pairing(i, j);
}

IntMatrix monodromyMatrix(const PolarizedLattice& p) { return p.gram(); }

FinAbGroup componentGroup(const PolarizedLattice& p) { return cokernelStructure(p.gram()); }

PolarizedLattice latticeFromSymmetricUnits(const LocalFieldModel& field, const UnitMatrix& s) {
    return PolarizedLattice(MultiplicativeLattice(field, s), RiemannForm{IntMatrix::identity(s.size())});
}

namespace {

template <class F>
PolarizedLattice mapUnits(const PolarizedLattice& p, const LocalFieldModel& field, F f) {
    const std::size_t g = p.rank();
    UnitMatrix coords(g, field.torsionOrder());
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) coords(i, j) = f(p.lattice().coords()(i, j));
    return PolarizedLattice(MultiplicativeLattice(field, coords), p.form());
}

}  // namespace

PolarizedLattice widenLattice(const PolarizedLattice& p, const Integer& k) {
    return mapUnits(p, p.field().widened(k), [&](const CoarseUnit& u) { return widenUnit(u, k); });
}

PolarizedLattice changeTorsionGenerator(const PolarizedLattice& p, const Integer& u) {
    return mapUnits(p, p.field(), [&](const CoarseUnit& x) { return changeTorsionGenerator(x, u); });
}

}  // namespace torphi
