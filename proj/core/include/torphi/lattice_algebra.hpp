#pragma once

// Exact integer linear algebra: Smith normal form with transformation
// matrices, finite abelian groups as invariant factors, saturation,
// sublattice index and integer kernels. Everything is a pure function of
// immutable values.

#include "torphi/int_matrix.hpp"

#include <optional>
#include <string>

namespace torphi {

struct SmithForm {
    IntMatrix U;  ///< unimodular, rows x rows
    IntMatrix D;  ///< diagonal with d1 | d2 | ..., non-negative
    IntMatrix V;  ///< unimodular, cols x cols
    /// Number of nonzero diagonal entries.
    std::size_t rank() const;
    IntVector diagonal() const;
};

/// U * M * V = D. Pivots on the entry of least absolute value to keep
/// coefficient growth down; the diagonal is unique, U and V are not.
SmithForm smithNormalForm(const IntMatrix& m);

/// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with
/// d1 | d2 | ... | dk and every di >= 2. The representation is canonical,
/// so two groups are isomorphic iff they compare equal.
class FinAbGroup {
public:
    FinAbGroup() = default;

    /// Any list of cyclic orders (0 meaning a copy of Z); normalised into
    /// invariant-factor form.
    static FinAbGroup fromCyclicOrders(const IntVector& orders);
    static FinAbGroup cyclic(const Integer& n) { return fromCyclicOrders({n}); }
    static FinAbGroup trivial() { return {}; }

    const IntVector& invariantFactors() const { return factors_; }
    std::size_t freeRank() const { return freeRank_; }
    bool isFinite() const { return freeRank_ == 0; }
    bool isTrivial() const { return factors_.empty() && freeRank_ == 0; }
    /// Order of a finite group; nullopt when the free rank is positive.
    std::optional<Integer> order() const;

    bool operator==(const FinAbGroup&) const = default;

    /// "trivial", "Z/6", "Z/2 + Z/4", "Z^2 + Z/3".
    std::string toString() const;

private:
    friend FinAbGroup cokernelStructure(const IntMatrix& m);

    IntVector factors_;
    std::size_t freeRank_ = 0;
};

/// Z^rows modulo the column span of m.
FinAbGroup cokernelStructure(const IntMatrix& m);

struct Saturation {
    IntMatrix basis;  ///< columns span (span_Q S) intersected with Z^g
    Integer index;    ///< [saturation : span S]
};

/// Saturation of the column span of s. Throws ValidationError("rank
/// deficiency") when the columns are linearly dependent.
Saturation saturate(const IntMatrix& s);

/// Index of span(b) inside span(a). Columns of a must be independent and
/// span(b) must be a finite-index subgroup of span(a); ValidationError
/// otherwise.
Integer latticeIndex(const IntMatrix& a, const IntMatrix& b);

/// Columns form a saturated basis of {x in Z^cols : m x = 0}.
IntMatrix kernelBasis(const IntMatrix& m);

/// Integer coordinates x with a * x = b column by column, for a with
/// independent columns. nullopt when some column of b is not in span_Z(a).
std::optional<IntMatrix> integerCoordinates(const IntMatrix& a, const IntMatrix& b);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Canonical coset representatives for Z^m / (column span of a relation
/// matrix). Built once from a Smith form; reduce() is a homomorphism into
/// Z/d1 x ... x Z/dk x Z^r whose kernel is exactly the relation lattice.
class QuotientReducer {
public:
    explicit QuotientReducer(const IntMatrix& relations);
    IntVector reduce(const IntVector& x) const;
    const FinAbGroup& group() const { return group_; }

private:
    IntMatrix u_;
    IntVector moduli_;  // per Smith coordinate; 0 means free, 1 means killed
    FinAbGroup group_;
};

}  // namespace torphi
