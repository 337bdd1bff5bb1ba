#include "torphi/lattice_algebra.hpp"

#include "torphi/error.hpp"

namespace torphi {

namespace {

struct Pos {
    std::size_t i, j;
};

// Entry of least absolute value in D[t.., t..]; nullopt if that block is 0.
std::optional<Pos> minimalEntry(const IntMatrix& d, std::size_t t) {
    std::optional<Pos> best;
    Integer bestAbs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Integer a = abs(d(i, j));
            if (!best || a < bestAbs) {
                best = Pos{i, j};
                bestAbs = a;
                if (bestAbs == 1) return best;
            }
        }
    return best;
}

// Least nonzero entry restricted to column t (rows >= t) and row t
// (cols >= t).
Pos minimalInCross(const IntMatrix& d, std::size_t t) {
    Pos best{t, t};
    Integer bestAbs = abs(d(t, t));
    auto consider = [&](std::size_t i, std::size_t j) {
        if (d(i, j) == 0) return;
        Integer a = abs(d(i, j));
        if (bestAbs == 0 || a < bestAbs) {
            best = Pos{i, j};
            bestAbs = a;
        }
    };
    for (std::size_t i = t; i < d.rows(); ++i) consider(i, t);
    for (std::size_t j = t; j < d.cols(); ++j) consider(t, j);
    return best;
}

Integer truncQuotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

IntMatrix unimodularInverse(const IntMatrix& u) {
    Integer det = u.determinant();
    if (abs(det) != 1) throw ConsistencyError("expected a unimodular matrix, det = " + det.get_str());
    return det * adjugate(u);
}

}  // namespace

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) ++r;
    return r;
}

IntVector SmithForm::diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

SmithForm smithNormalForm(const IntMatrix& m) {
    SmithForm s{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& d = s.D;
    const std::size_t steps = std::min(d.rows(), d.cols());

    auto movePivot = [&](std::size_t t, Pos p) {
        d.swapRows(t, p.i);
        s.U.swapRows(t, p.i);
        d.swapCols(t, p.j);
        s.V.swapCols(t, p.j);
    };

    for (std::size_t t = 0; t < steps; ++t) {
        auto start = minimalEntry(d, t);
        if (!start) break;
        movePivot(t, *start);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) continue;
                Integer q = truncQuotient(d(i, t), d(t, t));
                d.addRowMultiple(i, t, -q);
                s.U.addRowMultiple(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) continue;
                Integer q = truncQuotient(d(t, j), d(t, t));
                d.addColMultiple(j, t, -q);
                s.V.addColMultiple(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) {
                movePivot(t, minimalInCross(d, t));
                continue;
            }
            // Row and column are clear; enforce the divisibility chain.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            d.addRowMultiple(t, *offender, 1);
            s.U.addRowMultiple(t, *offender, 1);
        }
        if (d(t, t) < 0) {
            d.negateRow(t);
            s.U.negateRow(t);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

FinAbGroup FinAbGroup::fromCyclicOrders(const IntVector& orders) {
    return cokernelStructure(IntMatrix::diagonal(orders));
}

std::optional<Integer> FinAbGroup::order() const {
    if (freeRank_ != 0) return std::nullopt;
    Integer n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
}

std::string FinAbGroup::toString() const {
    if (isTrivial()) return "trivial";
    std::string out;
    if (freeRank_ > 0) out = freeRank_ == 1 ? "Z" : "Z^" + std::to_string(freeRank_);
    for (const auto& d : factors_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

FinAbGroup cokernelStructure(const IntMatrix& m) {
    FinAbGroup g;
    SmithForm s = smithNormalForm(m);
    std::size_t r = 0;
    for (const auto& d : s.diagonal()) {
        if (d == 0) continue;
        ++r;
        if (d != 1) g.factors_.push_back(d);
    }
    g.freeRank_ = m.rows() - r;
    return g;
}

Saturation saturate(const IntMatrix& s) {
    SmithForm f = smithNormalForm(s);
    if (f.rank() != s.cols()) throw ValidationError("saturate: rank deficiency");
    IntMatrix uinv = unimodularInverse(f.U);
    Saturation out{IntMatrix(s.rows(), s.cols()), 1};
    for (std::size_t j = 0; j < s.cols(); ++j) {
        for (std::size_t i = 0; i < s.rows(); ++i) out.basis(i, j) = uinv(i, j);
        out.index *= f.D(j, j);
    }
    return out;
}

std::optional<IntMatrix> integerCoordinates(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ValidationError("integerCoordinates: row count mismatch");
    SmithForm f = smithNormalForm(a);
    const std::size_t k = a.cols();
    if (f.rank() != k) throw ValidationError("integerCoordinates: basis columns are linearly dependent");
    IntMatrix ub = f.U * b;
    IntMatrix y(k, b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < k) {
                if (!mpz_divisible_p(ub(i, j).get_mpz_t(), f.D(i, i).get_mpz_t())) return std::nullopt;
                y(i, j) = ub(i, j) / f.D(i, i);
            } else if (ub(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return f.V * y;
}

Integer latticeIndex(const IntMatrix& a, const IntMatrix& b) {
    auto coords = integerCoordinates(a, b);
    if (!coords) throw ValidationError("latticeIndex: second lattice is not contained in the first");
    SmithForm f = smithNormalForm(*coords);
    if (f.rank() != a.cols()) throw ValidationError("latticeIndex: infinite index");
    Integer index = 1;
    for (std::size_t i = 0; i < a.cols(); ++i) index *= f.D(i, i);
    return index;
}

IntMatrix kernelBasis(const IntMatrix& m) {
    SmithForm f = smithNormalForm(m);
    const std::size_t r = f.rank();
    IntMatrix basis(m.cols(), m.cols() - r);
    for (std::size_t j = r; j < m.cols(); ++j) {
        IntVector v = f.V.getColumn(j);
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j - r) = v[i];
    }
    return basis;
}

std::size_t rank(const IntMatrix& m) { return smithNormalForm(m).rank(); }

// ---------------------------------------------------------------------------

QuotientReducer::QuotientReducer(const IntMatrix& relations) {
    SmithForm f = smithNormalForm(relations);
    u_ = f.U;
    moduli_.assign(relations.rows(), Integer(0));
    for (std::size_t i = 0; i < std::min(relations.rows(), relations.cols()); ++i) moduli_[i] = f.D(i, i);
    group_ = cokernelStructure(relations);
}

IntVector QuotientReducer::reduce(const IntVector& x) const {
    IntVector y = u_ * x;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (moduli_[i] != 0) y[i] = mod(y[i], moduli_[i]);
    return y;
}

}  // namespace torphi
