#pragma once

#include "torphi/int_matrix.hpp"
#include "torphi/toric_lattice.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torphi::cli {

/// A lattice description as read from disk. Integers are decimal strings;
/// see docs/lattice-document.md.
struct LatticeDocument {
    Integer p, q, w;
    std::size_t rank = 0;
    UnitMatrix coords;
    IntMatrix H;
    std::vector<IntMatrix> endomorphisms;  ///< optional basis of a ring T
    std::optional<IntMatrix> pairing;      ///< optional T x Lambda pairing

    /// Builds and validates the lattice. ValidationError messages from the
    /// core are prefixed with the document name.
    PolarizedLattice lattice() const;
};

/// Parses JSON text. Syntax and shape problems raise InputError with a
/// line/column or field path; out-of-range values (t >= w, w < 1, ...)
/// raise ValidationError with the field path.
LatticeDocument parseLatticeDocument(std::string_view text);
LatticeDocument readLatticeDocument(const std::string& path);

/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serializeLatticeDocument(const LatticeDocument& doc);

LatticeDocument documentFromLattice(const PolarizedLattice& p);

}  // namespace torphi::cli
