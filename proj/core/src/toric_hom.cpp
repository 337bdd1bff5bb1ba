#include "torphi/toric_hom.hpp"

#include "torphi/error.hpp"

namespace torphi {

namespace {

std::string describe(const std::vector<CompatibilityWitness>& ws) {
    std::string msg = "homomorphism compatibility [phi(l1), l2] = [l1, phiDual(l2)] fails";
    if (ws.empty()) return msg;
    const auto& w = ws.front();
    msg += " at (i,j) = (" + std::to_string(w.i) + "," + std::to_string(w.j) + "): " + w.lhs.toString() +
           " != " + w.rhs.toString();
    if (ws.size() > 1) {
        msg += "; also at";
        for (std::size_t k = 1; k < ws.size(); ++k)
            msg += " (" + std::to_string(ws[k].i) + "," + std::to_string(ws[k].j) + ")";
    }
    return msg;
}

IntVector unitVector(std::size_t n, std::size_t k) {
    IntVector e(n, Integer(0));
    e[k] = 1;
    return e;
}

}  // namespace

HomCompatibilityError::HomCompatibilityError(std::vector<CompatibilityWitness> witnesses)
    : ValidationError(describe(witnesses)), witnesses_(std::move(witnesses)) {}

ToricHom makeHom(const PolarizedLattice& source, const PolarizedLattice& target, IntMatrix phi, IntMatrix phiDual) {
    const std::size_t g1 = source.rank(), g2 = target.rank();
    if (!source.principal() || !target.principal())
        throw ValidationError("makeHom: source and target must be principally polarized");
    if (source.field() != target.field()) throw ValidationError("makeHom: lattices live over different field models");
    if (phi.rows() != g2 || phi.cols() != g1)
        throw ValidationError("makeHom: phi must be " + std::to_string(g2) + "x" + std::to_string(g1));
    if (phiDual.rows() != g1 || phiDual.cols() != g2)
        throw ValidationError("makeHom: phiDual must be " + std::to_string(g1) + "x" + std::to_string(g2));

    std::vector<CompatibilityWitness> bad;
    for (std::size_t i = 0; i < g1; ++i) {
        IntVector phiLi = phi.getColumn(i);
        for (std::size_t j = 0; j < g2; ++j) {
            CoarseUnit lhs = target.pairing(phiLi, unitVector(g2, j));
            CoarseUnit rhs = source.pairing(unitVector(g1, i), phiDual.getColumn(j));
            if (lhs != rhs) bad.push_back({i, j, lhs, rhs});
        }
    }
    if (!bad.empty()) throw HomCompatibilityError(std::move(bad));
    if (phi.transpose() * target.gram() != source.gram() * phiDual)
        throw ConsistencyError("makeHom: valuation identity phi^T M2 = M1 phiDual fails for a compatible pair");

    ToricHom f;
    f.source_ = std::make_shared<const PolarizedLattice>(source);
    f.target_ = std::make_shared<const PolarizedLattice>(target);
    f.phi_ = std::move(phi);
    f.phiDual_ = std::move(phiDual);
    return f;
}

ToricHom dualHom(const ToricHom& f) {
    ToricHom d;
    d.source_ = f.target_;
    d.target_ = f.source_;
    d.phi_ = f.phiDual_;
    d.phiDual_ = f.phi_;
    return d;
}

ToricHom composeHom(const ToricHom& g, const ToricHom& f) {
    if (!(f.target() == g.source())) throw ValidationError("composeHom: target of f is not the source of g");
    ToricHom h;
    h.source_ = f.source_;
    h.target_ = g.target_;
    h.phi_ = g.phi_ * f.phi_;
    h.phiDual_ = f.phiDual_ * g.phiDual_;
    return h;
}

IntMatrix rosatiAdjoint(const PolarizedLattice& p, const IntMatrix& t) {
    const std::size_t g = p.rank();
    if (!p.principal()) throw ValidationError("rosatiAdjoint: polarization is not principal");
    if (t.rows() != g || t.cols() != g)
        throw ValidationError("rosatiAdjoint: T must be " + std::to_string(g) + "x" + std::to_string(g));
    const IntMatrix& m = p.gram();
    Integer det = m.determinant();
    IntMatrix scaled = adjugate(m) * t.transpose() * m;  // det(M) * T^dagger
    IntMatrix out(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (!mpz_divisible_p(scaled(i, j).get_mpz_t(), det.get_mpz_t()))
                throw ValidationError("T† ∉ End(Λ): the Rosati adjoint of " + t.toString() + " is not integral");
            out(i, j) = scaled(i, j) / det;
        }
    return out;
}

bool isEndomorphism(const PolarizedLattice& p, const IntMatrix& t) {
    IntMatrix adj;
    try {
        adj = rosatiAdjoint(p, t);
    } catch (const ValidationError&) {
        return false;
    }
    try {
        makeHom(p, p, t, adj);
    } catch (const HomCompatibilityError&) {
        return false;
    }
    return true;
}

ComponentMap inducedComponentMap(const ToricHom& f) {
    return ComponentMap{f.source().gram(), f.target().gram(), f.phiDual().transpose()};
}

ComponentMap composeComponentMaps(const ComponentMap& second, const ComponentMap& first) {
    if (first.targetRelations != second.sourceRelations)
        throw ValidationError("composeComponentMaps: presentations do not match");
    return ComponentMap{first.sourceRelations, second.targetRelations, second.matrix * first.matrix};
}

bool sameComponentMap(const ComponentMap& a, const ComponentMap& b) {
    if (a.sourceRelations != b.sourceRelations || a.targetRelations != b.targetRelations) return false;
    QuotientReducer reducer(a.targetRelations);
    IntMatrix diff = a.matrix - b.matrix;
    for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!isZero(reducer.reduce(diff.getColumn(j)))) return false;
    return true;
}

FinAbGroup cokernelOfComponentMap(const ComponentMap& m) {
    return cokernelStructure(m.matrix.hcat(m.targetRelations));
}

bool isSurjectiveOnComponents(const ComponentMap& m) { return cokernelOfComponentMap(m).isTrivial(); }

}  // namespace torphi
