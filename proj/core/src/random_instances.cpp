#include "torphi/random_instances.hpp"

#include <array>
#include <limits>
#include <string>

namespace torphi {

std::uint64_t InstanceRng::below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
}

long InstanceRng::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

PolarizedLattice randomPolarizedLattice(InstanceRng& rng, const RandomLatticeOptions& opts) {
    static constexpr std::array<long, 4> kTorsion = {2, 4, 6, 12};
    const Integer w = kTorsion[rng.below(kTorsion.size())];
    const LocalFieldModel field(13, 13, w);
    const auto g = static_cast<std::size_t>(rng.range(static_cast<long>(opts.minRank), static_cast<long>(opts.maxRank)));

    IntMatrix l(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        l(i, i) = rng.range(1, opts.maxEntry + 1);
        for (std::size_t j = 0; j < i; ++j) l(i, j) = rng.range(-opts.maxEntry, opts.maxEntry);
    }
    const IntMatrix v = l * l.transpose();

    UnitMatrix s(g, w);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            GenericExponents gen;
            if (opts.generic && rng.below(3) == 0) {
                long e = rng.range(-1, 1);
                if (e != 0) gen["u" + std::to_string(rng.range(1, 2))] = e;
            }
            CoarseUnit u(v(i, j), rng.range(0, static_cast<long>(w.get_si()) - 1), w, gen);
            s(i, j) = u;
            s(j, i) = u;
        }
    return latticeFromSymmetricUnits(field, s);
}

}  // namespace torphi
