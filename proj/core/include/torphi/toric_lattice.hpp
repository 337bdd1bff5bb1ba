#pragma once

// Lattices in split tori (K^x)^g together with Riemann forms.
//
// Conventions (fixed throughout the library):
//  * coords(i, j) is the i-th torus coordinate of the j-th lattice
//    generator lambda_j, so generators are columns.
//  * Column j of the Riemann form H is the exponent vector of the character
//    H(lambda_j).
//  * [lambda_i, lambda_j]_H = H(lambda_j)(lambda_i), and the monodromy
//    pairing is <lambda_i, lambda_j> = ord_K [lambda_i, lambda_j]_H.
//  * trop uses ord_K instead of -log|.|. The two differ by the positive
//    factor log(#k), so lattice-ness and every integer invariant agree.

#include "torphi/int_matrix.hpp"
#include "torphi/lattice_algebra.hpp"
#include "torphi/local_field.hpp"

#include <vector>

namespace torphi {

using TorusPoint = std::vector<CoarseUnit>;

/// prod_k point_k^chi_k.
CoarseUnit evalCharacter(const IntVector& chi, const TorusPoint& point);

/// Valuations of the coordinates of a point.
IntVector tropPoint(const TorusPoint& point);

/// The cocharacter beta evaluated at x: (x^beta_1, ..., x^beta_g).
TorusPoint cocharacterPoint(const IntVector& beta, const CoarseUnit& x);

/// Row-major g x g array of coarse units.
class UnitMatrix {
public:
    UnitMatrix() = default;
    UnitMatrix(std::size_t n, const Integer& w) : n_(n), data_(n * n, CoarseUnit(w)) {}
    std::size_t size() const { return n_; }
    CoarseUnit& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const CoarseUnit& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    bool operator==(const UnitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<CoarseUnit> data_;
};

class MultiplicativeLattice {
public:
    /// Validates that all units use the field's w and that the valuation
    /// matrix is nonsingular (trop is injective with lattice image).
    MultiplicativeLattice(LocalFieldModel field, UnitMatrix coords);

    const LocalFieldModel& field() const { return field_; }
    std::size_t rank() const { return coords_.size(); }
    const UnitMatrix& coords() const { return coords_; }
    TorusPoint generator(std::size_t j) const;
    /// The lattice point prod_j lambda_j^a_j.
    TorusPoint point(const IntVector& a) const;
    IntMatrix valuationMatrix() const;

    bool operator==(const MultiplicativeLattice&) const = default;

private:
    LocalFieldModel field_;
    UnitMatrix coords_;
};

struct RiemannForm {
    IntMatrix H;
    bool operator==(const RiemannForm&) const = default;
};

/// A lattice with a validated Riemann form. Construction checks the
/// symmetry H(lambda)(mu) = H(mu)(lambda) as coarse units (torsion and
/// generic parts included) and positive definiteness of the valuation
/// pairing; failures raise ValidationError naming the violated condition.
class PolarizedLattice {
public:
    PolarizedLattice(MultiplicativeLattice lattice, RiemannForm form);

    const MultiplicativeLattice& lattice() const { return lattice_; }
    const RiemannForm& form() const { return form_; }
    const LocalFieldModel& field() const { return lattice_.field(); }
    std::size_t rank() const { return lattice_.rank(); }
    bool principal() const { return principal_; }

    /// [lambda_i, lambda_j]_H for basis vectors.
    const CoarseUnit& pairing(std::size_t i, std::size_t j) const { return pairings_(i, j); }
    /// Bilinear extension [a, b]_H for coefficient vectors.
    CoarseUnit pairing(const IntVector& a, const IntVector& b) const;
    /// Gram matrix of the monodromy pairing (symmetric positive definite).
    const IntMatrix& gram() const { return gram_; }

    bool operator==(const PolarizedLattice& o) const { return lattice_ == o.lattice_ && form_ == o.form_; }

private:
    MultiplicativeLattice lattice_;
    RiemannForm form_;
    bool principal_ = false;
    UnitMatrix pairings_;
    IntMatrix gram_;
};

/// [lambda_i, lambda_j]_H = H(lambda_j)(lambda_i).
CoarseUnit pairingH(const PolarizedLattice& p, std::size_t i, std::size_t j);
IntMatrix monodromyMatrix(const PolarizedLattice& p);
/// Phi = coker(Lambda -> Hom(Lambda, Z)) of the monodromy pairing.
FinAbGroup componentGroup(const PolarizedLattice& p);

/// Builds the lattice (rank g, H = identity) from a symmetric unit matrix
/// whose valuation part is positive definite; columns are the generators.
PolarizedLattice latticeFromSymmetricUnits(const LocalFieldModel& field, const UnitMatrix& s);

/// The same lattice viewed in the model with k times as many roots of unity.
PolarizedLattice widenLattice(const PolarizedLattice& p, const Integer& k);

/// Re-expresses every torsion exponent relative to the generator g^u.
PolarizedLattice changeTorsionGenerator(const PolarizedLattice& p, const Integer& u);

}  // namespace torphi
