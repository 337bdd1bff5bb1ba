#pragma once

#include "torphi/tate_construction.hpp"
#include "torphi/toric_lattice.hpp"

namespace torphi::fixtures {

inline LocalFieldModel field(long w) { return LocalFieldModel(13, 13, w); }

/// Period with valuation v, torsion t and one generic principal unit.
inline CoarseUnit period(long v, long t, long w, const char* name) { return CoarseUnit(v, t, w, {{name, 1}}); }

/// The two-curve gluing with v(q1) = a, v(q2) = b.
inline PolarizedLattice glued(long a, long b, long c, long w) {
    return buildGluedLattice(period(a, 0, w, "q1"), period(b, 0, w, "q2"), c, field(w));
}

inline PolarizedLattice diagonal(long a, long b, long w) {
    UnitMatrix s(2, w);
    s(0, 0) = period(a, 0, w, "q1");
    s(1, 1) = period(b, 0, w, "q2");
    return latticeFromSymmetricUnits(field(w), s);
}

inline PolarizedLattice rankOne(long v, long w = 4) {
    UnitMatrix s(1, w);
    s(0, 0) = CoarseUnit(v, 0, w);
    return latticeFromSymmetricUnits(field(w), s);
}

}  // namespace torphi::fixtures
