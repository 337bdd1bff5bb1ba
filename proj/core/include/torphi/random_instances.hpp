#pragma once

// Seeded generator of valid polarized lattices for property runs. The
// stream depends only on the seed (no std distributions, whose output
// differs between standard libraries).

#include "torphi/toric_lattice.hpp"

#include <cstdint>
#include <random>

namespace torphi {

class InstanceRng {
public:
    explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long range(long lo, long hi);
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 engine_;
};

struct RandomLatticeOptions {
    std::size_t minRank = 1;
    std::size_t maxRank = 3;
    /// Bound on the entries of the triangular factor of the valuation part.
    long maxEntry = 1;
    /// Attach generic principal-unit exponents to some entries.
    bool generic = true;
};

/// A symmetric unit matrix S with V(S) = L L^T, L lower triangular with
/// positive diagonal, used as coords with H = identity. Field: p = 13 with
/// w drawn from {2, 4, 6, 12}.
PolarizedLattice randomPolarizedLattice(InstanceRng& rng, const RandomLatticeOptions& opts = {});

}  // namespace torphi
